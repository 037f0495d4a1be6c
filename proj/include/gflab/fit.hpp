#pragma once

#include <vector>

namespace gflab {

struct AsymptoticFit {
  std::vector<double> exponents;
  std::vector<double> coefficients;
  double residual = 0.0;
  double condition = 0.0;
  bool reliable = true;

  /// Coefficient of eps^e; 0 if e is not in the basis.
  double coefficient(double e) const;
  /// Largest |c_e| over negative exponents.
  double max_divergent() const;
};

/// Least squares F(eps) ~ sum_j c_j eps^{e_j}. Rows are weighted by
/// eps^{-min e} so that each row carries comparable relative noise, and
/// columns are scaled to unit norm before the SVD solve. The residual is
/// ||W(Ac - F)|| / max(||W F||, ||W M||), where M is an optional magnitude
/// per point (e.g. the sum of |term| for a cancelling combination); the fit
/// is flagged unreliable above 1e-6.
/// Throws IllConditionedError when the condition estimate exceeds 1e12 and
/// ConfigError when there are fewer than #exponents + 2 points.
AsymptoticFit fit_expansion(const std::vector<double>& eps, const std::vector<double>& values,
                            std::vector<double> exponents,
                            const std::vector<double>& magnitude = {});

/// Integer basis lo..hi.
std::vector<double> integer_exponents(int lo, int hi);

}  // namespace gflab
