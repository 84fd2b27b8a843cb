#pragma once

#include <functional>
#include <span>
#include <vector>

namespace nm {

double normal_cdf(double x);
double normal_quantile(double p);

double mean(std::span<const double> x);
// Unbiased sample variance.
double variance(std::span<const double> x);
double covariance(std::span<const double> x, std::span<const double> y);

// sup_x |F_x - F_y| over the two empirical CDFs.
double ks_two_sample(std::vector<double> x, std::vector<double> y);
// sup_x |F_n(x) - cdf(x)|.
double ks_one_sample(std::vector<double> x, const std::function<double(double)>& cdf);

// log of the sample mean of exp(theta * x), computed stably.
double empirical_log_mgf(std::span<const double> x, double theta);

}  // namespace nm
