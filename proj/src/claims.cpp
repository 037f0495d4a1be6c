#include "gflab/claims.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "gflab/errors.hpp"
#include "gflab/fit.hpp"
#include "gflab/special_functions.hpp"

namespace gflab {

namespace {

double factorial_double(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) {
    f *= k;
  }
  return f;
}

LhsTerm nu_product(double coefficient, Sign first, double a, double b) {
  const Sign second = first == Sign::Plus ? Sign::Minus : Sign::Plus;
  const int ra = default_reduction_order(a);
  const int rb = default_reduction_order(b);
  LhsTerm t;
  t.coefficient = coefficient;
  t.label = std::string(first == Sign::Plus ? "nu_+^a nu_-^b" : "nu_-^a nu_+^b");
  t.max_order = std::max(ra, rb);
  t.build = [=](const MollifierPtr& m) {
    return multiply(embed_nu(first, {a, ra}, m), embed_nu(second, {b, rb}, m));
  };
  return t;
}

LhsTerm delta_product(double coefficient, int i, int j) {
  LhsTerm t;
  t.coefficient = coefficient;
  t.label = "delta^(" + std::to_string(i) + ") delta^(" + std::to_string(j) + ")";
  t.max_order = std::max(i, j);
  t.build = [=](const MollifierPtr& m) { return multiply(embed_delta(i, m), embed_delta(j, m)); };
  return t;
}

void require_non_integer(double a, const std::string& claim) {
  if (!std::isfinite(a) || near_integer(a)) {
    throw ValidityError(claim + " requires a outside the integers");
  }
}

void require_omega(double a, const std::string& what) {
  if (!std::isfinite(a) || (a < 0.0 && near_integer(a))) {
    throw ValidityError("THM1 requires " + what + " off the negative integers");
  }
}

}  // namespace

int Claim::required_smoothness() const {
  int r_max = 0;
  for (const auto& t : lhs) {
    r_max = std::max(r_max, t.max_order);
  }
  return r_max + 2;
}

GeneralizedFunctionRep Claim::build_lhs(const MollifierPtr& m) const {
  GeneralizedFunctionRep total = GeneralizedFunctionRep::zero(m);
  for (const auto& t : lhs) {
    total = total + t.build(m) * t.coefficient;
  }
  return total;
}

std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::MIK: return "MIK";
    case ClaimId::THM1: return "THM1";
    case ClaimId::THM2: return "THM2";
    case ClaimId::THM2X: return "THM2X";
    case ClaimId::THM3: return "THM3";
    case ClaimId::COR2: return "COR2";
    case ClaimId::COR3: return "COR3";
    case ClaimId::THM4: return "THM4";
  }
  return "?";
}

ClaimId parse_claim_id(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (ClaimId id : {ClaimId::MIK, ClaimId::THM1, ClaimId::THM2, ClaimId::THM2X, ClaimId::THM3,
                     ClaimId::COR2, ClaimId::COR3, ClaimId::THM4}) {
    if (to_string(id) == upper) {
      return id;
    }
  }
  throw ConfigError("unknown claim '" + name + "'");
}

std::vector<std::string> claim_parameter_names(ClaimId id) {
  switch (id) {
    case ClaimId::MIK: return {"p", "q"};
    case ClaimId::THM1: return {"a", "b"};
    case ClaimId::THM4: return {"a", "p"};
    default: return {"a"};
  }
}

std::string Claim::id_string() const {
  std::string out = to_string(id) + "(";
  const auto names = claim_parameter_names(id);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    const std::string& n = names[i];
    if (n == "a" || n == "b") {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", n == "a" ? params.a : params.b);
      out += n + "=" + buf;
    } else {
      out += n + "=" + std::to_string(n == "p" ? params.p : params.q);
    }
  }
  return out + ")";
}

Claim make_claim(ClaimId id, const ClaimParams& params) {
  Claim c;
  c.id = id;
  c.params = params;
  const double a = params.a;
  const double pi = std::numbers::pi;
  switch (id) {
    case ClaimId::MIK: {
      const int p = params.p;
      const int q = params.q;
      if (p < 1 || q < 1) {
        throw ValidityError("MIK requires p, q >= 1");
      }
      const double sign = (p + q) % 2 == 0 ? 1.0 : -1.0;
      const double balance = pi * pi * sign / (factorial_double(p - 1) * factorial_double(q - 1));
      LhsTerm powers;
      powers.label = "x^-p x^-q";
      powers.max_order = std::max(p, q);
      powers.build = [=](const MollifierPtr& m) {
        return multiply(embed_x_neg_power(p, m), embed_x_neg_power(q, m));
      };
      c.lhs = {powers, delta_product(-balance, p - 1, q - 1)};
      c.rhs = Distribution::x_neg_power(p + q);
      c.rhs_coefficient = 1.0;
      c.exponents = integer_exponents(-(p + q), 2);
      c.statement = "x^-p x^-q - pi^2 (-1)^(p+q)/((p-1)!(q-1)!) delta^(p-1) delta^(q-1) = x^-(p+q)";
      break;
    }
    case ClaimId::THM1: {
      const double b = params.b;
      require_omega(a, "a");
      require_omega(b, "b");
      if (!(a + b > -2.0)) {
        throw ValidityError("THM1 requires a + b > -2");
      }
      const double c1 = a + b + 1.0;
      require_omega(c1, "a + b + 1");
      LhsTerm shifted;
      shifted.coefficient = -1.0;
      shifted.label = "nu_-^(a+b+1) delta";
      const int rc = default_reduction_order(c1);
      shifted.max_order = rc;
      shifted.build = [=](const MollifierPtr& m) {
        return multiply(embed_nu(Sign::Minus, {c1, rc}, m), embed_delta(0, m));
      };
      c.lhs = {nu_product(1.0, Sign::Plus, a, b), shifted};
      c.rhs = Distribution::zero();
      c.rhs_coefficient = 1.0;
      // Both products scale as eps^(a+b+1) times a power series in eps.
      std::vector<double> e{0.0};
      for (int k = 0; k <= 3; ++k) {
        const double x = c1 + k;
        if (std::abs(x) > 1e-9) {
          e.push_back(x);
        }
      }
      std::sort(e.begin(), e.end());
      c.exponents = e;
      c.statement = "nu_+^a nu_-^b - nu_-^(a+b+1) delta = 0";
      break;
    }
    case ClaimId::THM2: {
      require_non_integer(a, "THM2");
      c.lhs = {nu_product(1.0, Sign::Plus, a, -a - 2.0), delta_product(-1.0, 0, 0)};
      c.rhs = Distribution::delta(1);
      c.rhs_coefficient = -(a + 1.0) / 2.0;
      c.exponents = integer_exponents(-2, 2);
      c.statement = "nu_+^a nu_-^(-a-2) - delta delta = -(a+1)/2 delta'";
      break;
    }
    case ClaimId::THM2X: {
      require_non_integer(a, "THM2X");
      const double b = -a - 2.0;
      const int ra = default_reduction_order(a);
      const int rb = default_reduction_order(b);
      LhsTerm powers;
      powers.label = "x_+^a x_-^(-a-2)";
      powers.max_order = std::max(ra, rb);
      powers.build = [=](const MollifierPtr& m) {
        return multiply(embed_x_pm_a(Sign::Plus, {a, ra}, m), embed_x_pm_a(Sign::Minus, {b, rb}, m));
      };
      c.lhs = {powers, delta_product(pi / ((a - 1.0) * sin_pi(a)), 0, 0)};
      c.rhs = Distribution::delta(1);
      c.rhs_coefficient = pi / (2.0 * sin_pi(a));
      c.exponents = integer_exponents(-2, 2);
      c.statement = "x_+^a x_-^(-a-2) + pi/((a-1) sin(pi a)) delta delta = pi/(2 sin(pi a)) delta'";
      break;
    }
    case ClaimId::THM3: {
      require_non_integer(a, "THM3");
      c.lhs = {nu_product(1.0, Sign::Plus, a, -a - 3.0), delta_product(2.0 * a + 3.0, 0, 1)};
      c.rhs = Distribution::delta(2);
      c.rhs_coefficient = 0.5 * binomial_real(a + 2.0, 2);
      c.exponents = integer_exponents(-3, 2);
      c.statement = "nu_+^a nu_-^(-a-3) + (2a+3) delta delta' = C(a+2,2)/2 delta''";
      break;
    }
    case ClaimId::COR2: {
      require_non_integer(a, "COR2");
      c.lhs = {nu_product(-1.0, Sign::Plus, a, -a - 2.0), nu_product(1.0, Sign::Minus, a, -a - 2.0)};
      c.rhs = Distribution::delta(1);
      c.rhs_coefficient = a + 1.0;
      c.exponents = integer_exponents(-2, 2);
      c.statement = "-nu_+^a nu_-^(-a-2) + nu_-^a nu_+^(-a-2) = (a+1) delta'";
      break;
    }
    case ClaimId::COR3: {
      require_non_integer(a, "COR3");
      c.lhs = {nu_product(1.0, Sign::Plus, a, -a - 3.0), nu_product(1.0, Sign::Minus, a, -a - 3.0)};
      c.rhs = Distribution::delta(2);
      c.rhs_coefficient = binomial_real(a + 2.0, 2);
      c.exponents = integer_exponents(-3, 2);
      c.statement = "nu_+^a nu_-^(-a-3) + nu_-^a nu_+^(-a-3) = C(a+2,2) delta''";
      break;
    }
    case ClaimId::THM4: {
      require_non_integer(a, "THM4");
      const int p = params.p;
      if (p < 1) {
        throw ValidityError("THM4 requires p >= 1");
      }
      const double b = -a - p - 1.0;
      c.lhs = {nu_product(p % 2 == 0 ? 1.0 : -1.0, Sign::Plus, a, b),
               nu_product(1.0, Sign::Minus, a, b)};
      c.rhs = Distribution::delta(p);
      c.rhs_coefficient = binomial_real(a + p, p);
      c.exponents = integer_exponents(-(p + 1), 2);
      c.default_tol = 2e-3;
      c.statement = "(-1)^p nu_+^a nu_-^(-a-p-1) + nu_-^a nu_+^(-a-p-1) = C(a+p,p) delta^(p)";
      break;
    }
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> claim_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  const ClaimParams defaults{0.5, -0.7, 1, 1};
  for (ClaimId id : {ClaimId::MIK, ClaimId::THM1, ClaimId::THM2, ClaimId::THM2X, ClaimId::THM3,
                     ClaimId::COR2, ClaimId::COR3, ClaimId::THM4}) {
    const Claim c = make_claim(id, defaults);
    std::string params;
    for (const auto& n : claim_parameter_names(id)) {
      params += (params.empty() ? "" : ",") + n;
    }
    out.emplace_back(to_string(id), "[" + params + "] " + c.statement);
  }
  return out;
}

}  // namespace gflab
