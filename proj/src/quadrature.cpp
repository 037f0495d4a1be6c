#include "gflab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "gflab/errors.hpp"

namespace gflab {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// P_n^{(alpha,beta)}(x) and P_{n-1}^{(alpha,beta)}(x) by the standard recurrence.
std::pair<double, double> jacobi_pair(int n, double alpha, double beta, double x) {
  double p0 = 1.0;
  if (n == 0) {
    return {p0, 0.0};
  }
  double p1 = 0.5 * (alpha - beta + (alpha + beta + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + alpha + beta;
    const double c1 = 2.0 * k * (k + alpha + beta) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
    const double c3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

double jacobi_derivative(int n, double alpha, double beta, double x, double pn, double pn1) {
  const double s = 2.0 * n + alpha + beta;
  return (n * (alpha - beta - s * x) * pn + 2.0 * (n + alpha) * (n + beta) * pn1) /
         (s * (1.0 - x * x));
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) {
    throw ConfigError("gauss_legendre: n must be positive");
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<GaussRule>(compute_gauss_legendre(n));
  }
  return *slot;
}

GaussRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1 || !(alpha > -1.0) || !(beta > -1.0)) {
    throw ConfigError("gauss_jacobi: requires n >= 1 and alpha, beta > -1");
  }
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0)
                       : (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(k - 1) = std::sqrt(b2);
  }
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = diag(0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off.head(n - 1), Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) {
      rule.nodes[i] = solver.eigenvalues()(i);
    }
  }
  const double log_norm = (ab + 1.0) * std::log(2.0) + std::lgamma(n + alpha + 1.0) +
                          std::lgamma(n + beta + 1.0) - std::lgamma(n + ab + 1.0) -
                          std::lgamma(n + 1.0);
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[i];
    for (int iter = 0; iter < 3; ++iter) {
      const auto [pn, pn1] = jacobi_pair(n, alpha, beta, x);
      const double dp = jacobi_derivative(n, alpha, beta, x, pn, pn1);
      const double dx = pn / dp;
      if (!std::isfinite(dx) || std::abs(dx) > 1e-8) {
        break;  // keep the eigenvalue; the polish is only a refinement
      }
      x -= dx;
    }
    const auto [pn, pn1] = jacobi_pair(n, alpha, beta, x);
    const double dp = jacobi_derivative(n, alpha, beta, x, pn, pn1);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_norm) / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double integrate_gl(const std::function<double(double)>& f, double lo, double hi, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double integrate_graded(const std::function<double(double)>& f, double lo, double hi,
                        double gap, bool toward_lo, int n) {
  if (!(gap > 0.0)) {
    throw QuadratureError("integrate_graded: gap must be positive");
  }
  const double length = hi - lo;
  double sum = 0.0;
  // Distances from the singular point; the first panel ends at 2 * gap.
  double start = 0.0;
  double width = gap;
  while (start < length) {
    const double end = std::min(length, start + width);
    const double a = toward_lo ? lo + start : hi - end;
    const double b = toward_lo ? lo + end : hi - start;
    sum += integrate_gl(f, a, b, n);
    start = end;
    width = gap + start;  // next panel is as long as its distance to the singularity
  }
  return sum;
}

}  // namespace gflab
