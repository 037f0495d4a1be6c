#include "gflab/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <random>

#include "gflab/errors.hpp"
#include "gflab/quadrature.hpp"

namespace gflab {

namespace {

// (1 - (u/l)^2)^s as a polynomial in u.
RationalPoly bump(const Rational& l, int s) {
  const RationalPoly base(std::vector<Rational>{Rational(1), Rational(0), -1 / (l * l)});
  return base.pow(static_cast<unsigned>(s));
}

// Solves A x = b exactly by Gaussian elimination with nonzero pivoting.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      throw ConfigError("mollifier: singular moment system");
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) {
        continue;
      }
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) {
        a[row][k] -= factor * a[col][k];
      }
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = b[i] / a[i][i];
  }
  return x;
}

}  // namespace

Mollifier::Mollifier(Rational l, int s, int q, int d, std::uint64_t seed, RationalPoly phi)
    : l_(std::move(l)), s_(s), q_(q), d_(d), seed_(seed) {
  l_.canonicalize();
  if (l_ <= 0) {
    throw ConfigError("mollifier: support radius must be positive");
  }
  if (s_ < 2) {
    throw ConfigError("mollifier: smoothness s must be at least 2");
  }
  if (q_ < 0 || d_ < 0) {
    throw ConfigError("mollifier: q and d must be non-negative");
  }
  l_double_ = l_.get_d();
  derivatives_.reserve(s_ + 1);
  RationalPoly anti = phi.antiderivative();
  anti -= RationalPoly(anti(-l_));
  derivatives_.push_back(std::move(anti));
  derivatives_.push_back(std::move(phi));
  for (int r = 1; r <= s_ - 1; ++r) {
    derivatives_.push_back(derivatives_.back().derivative());
  }
  for (const auto& p : derivatives_) {
    derivative_coeffs_.push_back(p.to_double_coefficients());
  }
  for (int r = 0; r <= s_ - 1; ++r) {
    const auto [quotient, remainder] = derivatives_[r + 1].divmod(bump(l_, s_ - r));
    if (!remainder.is_zero()) {
      throw ConfigError("mollifier: phi is not divisible by the bump factor");
    }
    cofactors_.push_back(quotient.to_double_coefficients());
  }
  antiderivative_nodes_ = std::max(20, (derivatives_[1].degree() + 2) / 2);
  for (int j = 0; j <= q_; ++j) {
    if (moment(j) != (j == 0 ? 1 : 0)) {
      throw ConfigError("mollifier: moment condition " + std::to_string(j) + " violated");
    }
  }
}

const RationalPoly& Mollifier::derivative_poly(int r) const {
  if (r < -1 || r > s_ - 1) {
    throw ConfigError("mollifier: derivative order " + std::to_string(r) +
                      " outside [-1, s-1] with s = " + std::to_string(s_));
  }
  return derivatives_[r + 1];
}

const std::vector<double>& Mollifier::derivative_coeffs(int r) const {
  derivative_poly(r);
  return derivative_coeffs_[r + 1];
}

const std::vector<double>& Mollifier::cofactor_coeffs(int r) const {
  derivative_poly(r);
  if (r < 0) {
    throw ConfigError("mollifier: the antiderivative has no cofactor form");
  }
  return cofactors_[r];
}

double Mollifier::eval_polynomial(int r, double u) const {
  derivative_poly(r);
  if (r == -1) {
    // Gauss-Legendre is exact for the polynomial; integrate from the nearer end.
    auto f = [this](double v) { return eval_polynomial(0, v); };
    if (u <= 0.0) {
      return integrate_gl(f, -l_double_, u, antiderivative_nodes_);
    }
    return 1.0 - integrate_gl(f, u, l_double_, antiderivative_nodes_);
  }
  const double t = u / l_double_;
  const double base = (1.0 - t) * (1.0 + t);
  return std::pow(base, s_ - r) * horner(cofactors_[r], u);
}

double Mollifier::eval_with_distances(int r, double u, double dl, double dr) const {
  if (r < 0) {
    return eval_polynomial(r, u);
  }
  derivative_poly(r);
  const double base = (dl / l_double_) * (dr / l_double_);
  return std::pow(base, s_ - r) * horner(cofactors_[r], u);
}

double Mollifier::eval_derivative(int r, double u) const {
  derivative_poly(r);
  if (u <= -l_double_) {
    return 0.0;
  }
  if (u >= l_double_) {
    return r == -1 ? 1.0 : 0.0;
  }
  return eval_polynomial(r, u);
}

double Mollifier::eval_scaled(int r, double eps, double x) const {
  if (!(eps > 0.0)) {
    throw DomainError("mollifier: eps must be positive");
  }
  return std::pow(eps, -1.0 - r) * eval_derivative(r, x / eps);
}

Rational Mollifier::moment(int j) const {
  if (j < 0) {
    throw ConfigError("mollifier: negative moment index");
  }
  return (poly() * RationalPoly::monomial(static_cast<unsigned>(j))).integrate(-l_, l_);
}

Rational Mollifier::l2_norm_squared() const { return (poly() * poly()).integrate(-l_, l_); }

Rational Mollifier::first_moment_of_square() const {
  return (poly() * poly() * RationalPoly::monomial(1)).integrate(-l_, l_);
}

std::string Mollifier::descriptor() const {
  return "q" + std::to_string(q_) + "-s" + std::to_string(s_) + "-l" + to_string(l_) + "-d" +
         std::to_string(d_) + "-seed" + std::to_string(seed_);
}

std::string Mollifier::to_json() const {
  nlohmann::ordered_json j;
  j["l"] = to_string(l_);
  j["s"] = s_;
  j["q"] = q_;
  j["d"] = d_;
  j["seed"] = seed_;
  auto coeffs = nlohmann::ordered_json::array();
  const auto& c = poly().coefficients();
  for (const auto& value : c) {
    coeffs.push_back(to_string(value));
  }
  j["coeffs"] = coeffs;
  return j.dump();
}

Mollifier Mollifier::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return Mollifier(parse_rational(j.at("l").get<std::string>()), j.at("s").get<int>(),
                     j.at("q").get<int>(), j.at("d").get<int>(),
                     j.at("seed").get<std::uint64_t>(), RationalPoly(std::move(coeffs)));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("mollifier JSON: ") + e.what());
  }
}

Mollifier build_mollifier(int q, int s, const Rational& l, std::uint64_t seed, int d) {
  if (s < 2) {
    throw ConfigError("build_mollifier: s must be at least 2");
  }
  if (q < 0 || d < 0) {
    throw ConfigError("build_mollifier: q and d must be non-negative");
  }
  if (l <= 0) {
    throw ConfigError("build_mollifier: l must be positive");
  }
  const RationalPoly b = bump(l, s);
  std::vector<RationalPoly> basis;
  for (int k = 0; k <= q + d; ++k) {
    basis.push_back(b * RationalPoly::monomial(static_cast<unsigned>(k), 1 / rational_pow(l, k)));
  }

  // Free coefficients n/16 with n in {-8..-1, 1..8}.
  std::mt19937_64 gen(seed);
  RationalPoly fixed;
  for (int k = q + 1; k <= q + d; ++k) {
    const int n = static_cast<int>(gen() % 16);
    const int value = n < 8 ? n - 8 : n - 7;
    fixed += basis[k] * Rational(value, 16);
  }

  std::vector<std::vector<Rational>> a(q + 1, std::vector<Rational>(q + 1));
  std::vector<Rational> rhs(q + 1);
  for (int j = 0; j <= q; ++j) {
    const RationalPoly uj = RationalPoly::monomial(static_cast<unsigned>(j));
    for (int k = 0; k <= q; ++k) {
      a[j][k] = (basis[k] * uj).integrate(-l, l);
    }
    rhs[j] = Rational(j == 0 ? 1 : 0) - (fixed * uj).integrate(-l, l);
  }
  const std::vector<Rational> solved = solve_exact(std::move(a), std::move(rhs));
  RationalPoly phi = fixed;
  for (int k = 0; k <= q; ++k) {
    phi += basis[k] * solved[k];
  }
  return Mollifier(l, s, q, d, seed, std::move(phi));
}

std::vector<MollifierPtr> mollifier_families(int count, int q, int s, const Rational& l, int d) {
  std::vector<MollifierPtr> out;
  for (int i = 1; i <= count; ++i) {
    out.push_back(std::make_shared<const Mollifier>(
        build_mollifier(q, s, l, static_cast<std::uint64_t>(i), d)));
  }
  return out;
}

}  // namespace gflab
