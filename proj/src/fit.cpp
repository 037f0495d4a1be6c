#include "gflab/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gflab/errors.hpp"

namespace gflab {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kResidualFlag = 1e-6;

}  // namespace

double AsymptoticFit::coefficient(double e) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (std::abs(exponents[i] - e) < 1e-12) {
      return coefficients[i];
    }
  }
  return 0.0;
}

double AsymptoticFit::max_divergent() const {
  double m = 0.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0.0) {
      m = std::max(m, std::abs(coefficients[i]));
    }
  }
  return m;
}

std::vector<double> integer_exponents(int lo, int hi) {
  std::vector<double> out;
  for (int e = lo; e <= hi; ++e) {
    out.push_back(e);
  }
  return out;
}

AsymptoticFit fit_expansion(const std::vector<double>& eps, const std::vector<double>& values,
                            std::vector<double> exponents,
                            const std::vector<double>& magnitude) {
  if (eps.size() != values.size() || (!magnitude.empty() && magnitude.size() != eps.size())) {
    throw ConfigError("fit: eps and value counts differ");
  }
  if (exponents.empty()) {
    throw ConfigError("fit: empty exponent basis");
  }
  std::sort(exponents.begin(), exponents.end());
  const std::size_t rows = eps.size();
  const std::size_t cols = exponents.size();
  if (rows < cols + 2) {
    std::ostringstream msg;
    msg << "fit: " << rows << " points for " << cols << " exponents (need at least "
        << cols + 2 << ")";
    throw ConfigError(msg.str());
  }
  const double e_min = exponents.front();
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd b(rows);
  double floor_sq = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    const double weight = std::pow(eps[i], -e_min);
    for (std::size_t j = 0; j < cols; ++j) {
      a(i, j) = weight * std::pow(eps[i], exponents[j]);
    }
    b(i) = weight * values[i];
    if (!magnitude.empty()) {
      floor_sq += weight * magnitude[i] * weight * magnitude[i];
    }
  }
  Eigen::VectorXd norms(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    norms(j) = a.col(j).norm();
    if (norms(j) == 0.0) {
      throw IllConditionedError("fit: zero column in the design matrix");
    }
    a.col(j) /= norms(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                                   : std::numeric_limits<double>::infinity();
  if (!(condition <= kMaxCondition)) {
    std::ostringstream msg;
    msg << "fit: condition estimate " << condition << " exceeds " << kMaxCondition;
    throw IllConditionedError(msg.str());
  }
  const Eigen::VectorXd scaled = svd.solve(b);
  AsymptoticFit fit;
  fit.exponents = exponents;
  fit.condition = condition;
  for (std::size_t j = 0; j < cols; ++j) {
    fit.coefficients.push_back(scaled(j) / norms(j));
  }
  const double bn = std::max(b.norm(), std::sqrt(floor_sq));
  fit.residual = bn > 0.0 ? (a * scaled - b).norm() / bn : (a * scaled - b).norm();
  fit.reliable = fit.residual <= kResidualFlag;
  return fit;
}

}  // namespace gflab
