#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "loschmidt/series.hpp"
#include "loschmidt/spectra.hpp"

namespace loschmidt {

/// Round-trip-exact decimal with 17 significant digits.
std::string format_double(double v);

/// Columns: step,time,re_f,im_f,abs_f_sq,stderr.
void write_series_csv(const FidelitySeries& s, std::ostream& out);
void write_series_csv(const FidelitySeries& s, const std::filesystem::path& path);
FidelitySeries read_series_csv(std::istream& in);
FidelitySeries read_series_csv(const std::filesystem::path& path);

/// Same columns as arrays, plus the metadata block.
void write_series_json(const FidelitySeries& s, std::ostream& out);
void write_series_json(const FidelitySeries& s, const std::filesystem::path& path);
FidelitySeries read_series_json(std::istream& in);
FidelitySeries read_series_json(const std::filesystem::path& path);

/// Columns: omega,intensity.
void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path);

}  // namespace loschmidt
