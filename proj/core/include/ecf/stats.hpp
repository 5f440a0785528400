#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ecf {

// one-sample KS statistic against a CDF; samples need not be sorted
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// two-sample KS distance
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// total-variation distance between two frequency tables (normalized inside)
double tv_distance(const std::map<std::string, std::size_t>& a,
                   const std::map<std::string, std::size_t>& b);

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 40);

struct LinearFit {
  double slope = 0, intercept = 0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

struct RunningStats {
  std::size_t n = 0;
  double mean = 0, m2 = 0;
  void add(double x) {
    ++n;
    double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }
  double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double stderr_mean() const;
};

double median(std::vector<double> v);

}  // namespace ecf
