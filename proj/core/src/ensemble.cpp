#include "ensemble.hpp"

#include <algorithm>
#include <cmath>

namespace loschmidt::detail {

void finalize_iid(const EnsembleResult& r, std::vector<std::complex<double>>& mean,
                  std::vector<double>& std_error) {
  const auto& t = r.total;
  const double n = static_cast<double>(t.count);
  mean.resize(t.sum.size());
  std_error.resize(t.sum.size());
  for (std::size_t k = 0; k < t.sum.size(); ++k) {
    mean[k] = t.sum[k] / n;
    if (t.count < 2) {
      std_error[k] = 0.0;
      continue;
    }
    const double var_re = std::max(0.0, (t.sum_sq_re[k] - n * mean[k].real() * mean[k].real()) / (n - 1.0));
    const double var_im = std::max(0.0, (t.sum_sq_im[k] - n * mean[k].imag() * mean[k].imag()) / (n - 1.0));
    std_error[k] = std::sqrt((var_re + var_im) / n);
  }
}

void finalize_batch_means(const EnsembleResult& r, std::vector<std::complex<double>>& mean,
                          std::vector<double>& std_error) {
  const auto& t = r.total;
  const double n = static_cast<double>(t.count);
  mean.resize(t.sum.size());
  std_error.assign(t.sum.size(), 0.0);
  const double n_batches = static_cast<double>(r.batches.size());
  for (std::size_t k = 0; k < t.sum.size(); ++k) {
    mean[k] = t.sum[k] / n;
    if (r.batches.size() < 2) continue;
    double ss = 0.0;
    for (const auto& b : r.batches) {
      ss += std::norm(b.sum[k] / static_cast<double>(b.count) - mean[k]);
    }
    std_error[k] = std::sqrt(ss / (n_batches * (n_batches - 1.0)));
  }
}

double effective_sample_size(const EnsembleResult& r, std::size_t k) {
  const double s1 = r.total.sum_abs.at(k);
  const double s2 = r.total.sum_sq.at(k);
  return s2 > 0.0 ? s1 * s1 / s2 : 0.0;
}

}  // namespace loschmidt::detail
