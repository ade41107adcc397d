#pragma once

// Deterministic path-ensemble reduction shared by the Monte Carlo estimators.
// Sample indices [0, n) are split into contiguous batches, each batch into
// fixed-size chunks. Chunks run in parallel; sums are combined in index
// order, so results do not depend on the worker count.

#include <complex>
#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#ifdef LOSCHMIDT_HAVE_OPENMP
#include <omp.h>
#endif

namespace loschmidt::detail {

inline constexpr std::size_t kChunkSize = 1024;

struct StepSums {
  std::vector<std::complex<double>> sum;
  std::vector<double> sum_sq;   // sum of |w|^2
  std::vector<double> sum_sq_re;
  std::vector<double> sum_sq_im;
  std::vector<double> sum_abs;
  std::size_t count = 0;

  explicit StepSums(std::size_t n_values = 0)
      : sum(n_values), sum_sq(n_values), sum_sq_re(n_values), sum_sq_im(n_values),
        sum_abs(n_values) {}

  void add(std::span<const std::complex<double>> w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const double re = w[k].real(), im = w[k].imag();
      sum[k] += w[k];
      sum_sq_re[k] += re * re;
      sum_sq_im[k] += im * im;
      sum_sq[k] += re * re + im * im;
      sum_abs[k] += std::abs(w[k]);
    }
    ++count;
  }

  void merge(const StepSums& o) {
    for (std::size_t k = 0; k < sum.size(); ++k) {
      sum[k] += o.sum[k];
      sum_sq[k] += o.sum_sq[k];
      sum_sq_re[k] += o.sum_sq_re[k];
      sum_sq_im[k] += o.sum_sq_im[k];
      sum_abs[k] += o.sum_abs[k];
    }
    count += o.count;
  }
};

struct EnsembleResult {
  StepSums total;
  std::vector<StepSums> batches;
};

/// `path(index, out)` writes the N+1 per-step contributions of sample `index`.
template <class PathFn>
EnsembleResult run_ensemble(std::size_t n, std::size_t n_values, std::size_t n_batches,
                            int threads, PathFn&& path) {
  n_batches = std::max<std::size_t>(1, std::min(n_batches, n));
  struct Chunk {
    std::size_t batch, begin, end;
  };
  std::vector<Chunk> chunks;
  for (std::size_t b = 0; b < n_batches; ++b) {
    const std::size_t lo = n * b / n_batches;
    const std::size_t hi = n * (b + 1) / n_batches;
    for (std::size_t s = lo; s < hi; s += kChunkSize) {
      chunks.push_back({b, s, std::min(hi, s + kChunkSize)});
    }
  }

  std::vector<StepSums> partial(chunks.size(), StepSums(n_values));
  std::vector<std::exception_ptr> errors(chunks.size());
  const long n_chunks = static_cast<long>(chunks.size());
#ifdef LOSCHMIDT_HAVE_OPENMP
  const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#else
  (void)threads;
#endif
  for (long c = 0; c < n_chunks; ++c) {
    try {
      std::vector<std::complex<double>> w(n_values);
      auto& sums = partial[static_cast<std::size_t>(c)];
      for (std::size_t i = chunks[static_cast<std::size_t>(c)].begin;
           i < chunks[static_cast<std::size_t>(c)].end; ++i) {
        path(i, std::span<std::complex<double>>(w));
        sums.add(w);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(c)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  EnsembleResult result{StepSums(n_values), std::vector<StepSums>(n_batches, StepSums(n_values))};
  for (std::size_t c = 0; c < chunks.size(); ++c) result.batches[chunks[c].batch].merge(partial[c]);
  for (auto& b : result.batches) result.total.merge(b);
  return result;
}

/// Mean with the sample standard error of the complex mean (real and
/// imaginary parts combined in quadrature).
void finalize_iid(const EnsembleResult& r, std::vector<std::complex<double>>& mean,
                  std::vector<double>& std_error);

/// Mean with the batch-means standard error.
void finalize_batch_means(const EnsembleResult& r, std::vector<std::complex<double>>& mean,
                          std::vector<double>& std_error);

/// (sum |w|)^2 / sum |w|^2 at step k.
double effective_sample_size(const EnsembleResult& r, std::size_t k);

}  // namespace loschmidt::detail
