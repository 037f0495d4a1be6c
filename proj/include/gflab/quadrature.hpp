#pragma once

#include <functional>
#include <vector>

namespace gflab {

/// Nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule. Rules are memoized; the reference stays valid
/// for the lifetime of the program.
const GaussRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule for the weight (1-t)^alpha (1+t)^beta,
/// alpha, beta > -1. Nodes come from Golub-Welsch and are polished by Newton
/// iteration on the three-term recurrence.
GaussRule gauss_jacobi(int n, double alpha, double beta);

/// Integrates f over [lo, hi] with an n-point Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double lo, double hi, int n);

/// Integrates a function that is smooth on [lo, hi] but has a singularity at
/// distance `gap` > 0 outside the interval, beyond `lo` (toward_lo = true) or
/// beyond `hi`. Panels grow geometrically away from the singular side.
double integrate_graded(const std::function<double(double)>& f, double lo, double hi,
                        double gap, bool toward_lo, int n = 24);

}  // namespace gflab
