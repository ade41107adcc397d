#pragma once

#include <cstdint>
#include <random>

namespace loschmidt {

/// Named sub-streams of one sample index.
enum class Stream : std::uint32_t {
  initial_condition = 0,
  momentum_kicks = 1,
};

/// Engine for sample `index` of a run seeded with `seed`. Each (seed, index,
/// stream) triple gets its own generator, so a sample's draws do not depend
/// on which worker processes it or in what order.
inline std::mt19937_64 sample_engine(std::uint64_t seed, std::uint64_t index, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

}  // namespace loschmidt
