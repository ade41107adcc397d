#include "loschmidt/series_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "loschmidt/errors.hpp"

namespace loschmidt {

namespace {

constexpr const char* kHeader = "step,time,re_f,im_f,abs_f_sq,stderr";

double parse_double(const std::string& field) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw Error("malformed number '" + field + "' in series file");
  return v;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, ptr);
}

void write_series_csv(const FidelitySeries& s, std::ostream& out) {
  s.validate();
  out << kHeader << '\n';
  for (std::size_t n = 0; n < s.size(); ++n) {
    out << n << ',' << format_double(s.times[n]) << ',' << format_double(s.values[n].real()) << ','
        << format_double(s.values[n].imag()) << ',' << format_double(std::norm(s.values[n])) << ','
        << format_double(s.std_error[n]) << '\n';
  }
}

void write_series_csv(const FidelitySeries& s, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_series_csv(s, out);
}

FidelitySeries read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw Error("series CSV header mismatch");
  FidelitySeries s;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw Error("series CSV row has " + std::to_string(fields.size()) + " fields");
    if (static_cast<std::size_t>(parse_double(fields[0])) != s.size()) {
      throw Error("series CSV steps are not consecutive");
    }
    s.times.push_back(parse_double(fields[1]));
    s.values.emplace_back(parse_double(fields[2]), parse_double(fields[3]));
    s.std_error.push_back(parse_double(fields[5]));
  }
  s.validate();
  return s;
}

FidelitySeries read_series_csv(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_series_csv(in);
}

void write_series_json(const FidelitySeries& s, std::ostream& out) {
  s.validate();
  nlohmann::json j;
  j["estimator"] = s.meta.estimator;
  j["n_traj"] = s.meta.n_traj;
  j["seed"] = s.meta.seed;
  j["effective_sample_size"] = s.meta.effective_sample_size;
  j["variant"] = s.meta.variant;
  j["warnings"] = s.meta.warnings;
  std::vector<std::size_t> step(s.size());
  std::vector<double> re(s.size()), im(s.size()), abs_sq(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    step[n] = n;
    re[n] = s.values[n].real();
    im[n] = s.values[n].imag();
    abs_sq[n] = std::norm(s.values[n]);
  }
  j["step"] = step;
  j["time"] = s.times;
  j["re_f"] = re;
  j["im_f"] = im;
  j["abs_f_sq"] = abs_sq;
  j["stderr"] = s.std_error;
  out << j.dump(1) << '\n';
}

void write_series_json(const FidelitySeries& s, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_series_json(s, out);
}

FidelitySeries read_series_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    FidelitySeries s;
    s.meta.estimator = j.at("estimator").get<std::string>();
    s.meta.n_traj = j.at("n_traj").get<std::size_t>();
    s.meta.seed = j.at("seed").get<std::uint64_t>();
    s.meta.effective_sample_size = j.at("effective_sample_size").get<double>();
    s.meta.variant = j.at("variant").get<std::string>();
    s.meta.warnings = j.at("warnings").get<std::vector<std::string>>();
    s.times = j.at("time").get<std::vector<double>>();
    const auto re = j.at("re_f").get<std::vector<double>>();
    const auto im = j.at("im_f").get<std::vector<double>>();
    s.std_error = j.at("stderr").get<std::vector<double>>();
    if (re.size() != im.size()) throw Error("series JSON re/im lengths differ");
    for (std::size_t n = 0; n < re.size(); ++n) s.values.emplace_back(re[n], im[n]);
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed series JSON: ") + e.what());
  }
}

FidelitySeries read_series_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_series_json(in);
}

void write_spectrum_csv(const Spectrum& s, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "omega,intensity\n";
  for (std::size_t k = 0; k < s.frequencies.size(); ++k) {
    out << format_double(s.frequencies[k]) << ',' << format_double(s.intensities[k]) << '\n';
  }
}

}  // namespace loschmidt
