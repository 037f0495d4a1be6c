#include "gflab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <cstdio>
#include <set>

#include "gflab/errors.hpp"
#include "gflab/special_functions.hpp"

namespace gflab {

namespace {

IdentityCertificate compare(const std::string& id, nlohmann::ordered_json params,
                            const RationalPoly& lhs, const RationalPoly& rhs) {
  IdentityCertificate cert;
  cert.identity_id = id;
  cert.parameters = std::move(params);
  const RationalPoly diff = lhs - rhs;
  cert.status = diff.is_zero();
  if (!cert.status) {
    cert.detail = "difference " + diff.to_string("a");
  }
  return cert;
}

bool all_pass(const std::vector<IdentityCertificate>& certs) {
  return std::all_of(certs.begin(), certs.end(),
                     [](const IdentityCertificate& c) { return c.status; });
}

double sign_of(int n) { return n % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

RationalPoly binom_poly(const Rational& slope, const Rational& c, int n) {
  if (n < 0) {
    return RationalPoly();
  }
  RationalPoly result(Rational(1));
  for (int i = 0; i < n; ++i) {
    result *= RationalPoly::linear(slope, c - i);
  }
  result *= 1 / factorial(static_cast<unsigned>(n));
  return result;
}

RationalPoly binom_poly(const Rational& c, int n) { return binom_poly(Rational(1), c, n); }

Rational binom_rational(const Rational& x, int n) {
  if (n < 0) {
    return Rational(0);
  }
  Rational result(1);
  for (int i = 0; i < n; ++i) {
    result *= x - i;
  }
  return result / factorial(static_cast<unsigned>(n));
}

std::vector<IdentityCertificate> reflection_certificates(int n_max) {
  std::vector<IdentityCertificate> out;
  for (int n = 0; n <= n_max; ++n) {
    // C(-x, n) = (-1)^n C(x+n-1, n) in the variable x.
    RationalPoly lhs = binom_poly(Rational(-1), Rational(0), n);
    RationalPoly rhs = binom_poly(Rational(n - 1), n) * Rational(n % 2 == 0 ? 1 : -1);
    out.push_back(compare("reflection", {{"n", n}}, lhs, rhs));
    // (-1)^p C(-a-1, p) = C(a+p, p).
    lhs = binom_poly(Rational(-1), Rational(-1), n) * Rational(n % 2 == 0 ? 1 : -1);
    rhs = binom_poly(Rational(n), n);
    out.push_back(compare("reflection_shifted", {{"p", n}}, lhs, rhs));
  }
  return out;
}

bool verify_reflection(int p, int n_max) {
  if (p < 0 || p > n_max) {
    throw ConfigError("verify_reflection: need 0 <= p <= n_max");
  }
  return all_pass(reflection_certificates(n_max));
}

std::vector<IdentityCertificate> addition_certificates(int n_max, int samples,
                                                       std::uint64_t seed) {
  if (n_max < 1) {
    throw ConfigError("verify_addition: n_max must be at least 1");
  }
  std::mt19937_64 gen(seed);
  auto random_rational = [&gen]() {
    const long num = static_cast<long>(gen() % 2001) - 1000;
    const long den = static_cast<long>(gen() % 97) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  std::vector<IdentityCertificate> out;
  for (int n = 1; n <= n_max; ++n) {
    const int per_axis = std::max(n + 1, samples);
    std::set<Rational> xs;
    std::set<Rational> ys;
    while (static_cast<int>(xs.size()) < per_axis) {
      xs.insert(random_rational());
    }
    while (static_cast<int>(ys.size()) < per_axis) {
      ys.insert(random_rational());
    }
    IdentityCertificate cert;
    cert.identity_id = "addition";
    cert.parameters = {{"n", n}, {"points", per_axis * per_axis}};
    cert.status = true;
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        Rational rhs(0);
        for (int k = 0; k <= n; ++k) {
          rhs += binom_rational(x, k) * binom_rational(y, n - k);
        }
        if (binom_rational(x + y, n) != rhs && cert.status) {
          cert.status = false;
          cert.detail = "mismatch at x = " + to_string(x) + ", y = " + to_string(y);
        }
      }
    }
    out.push_back(std::move(cert));
  }
  return out;
}

bool verify_addition(int n_max, int samples) {
  return all_pass(addition_certificates(n_max, samples));
}

std::vector<IdentityCertificate> r_sum_certificates(int p_max) {
  std::vector<IdentityCertificate> out;
  for (int p = 0; p <= p_max; ++p) {
    const RationalPoly r1 =
        binom_poly(Rational(-1), Rational(-1), p) * Rational(p % 2 == 0 ? 1 : -1, 2);
    const RationalPoly r2 = binom_poly(Rational(p), p) * Rational(1, 2);
    out.push_back(compare("r_sum", {{"p", p}}, r1 + r2, binom_poly(Rational(p), p)));
  }
  return out;
}

bool verify_r_sum(int p_max) { return all_pass(r_sum_certificates(p_max)); }

std::pair<RationalPoly, RationalPoly> s_reduction_even_sides(int h, int m) {
  RationalPoly lhs;
  for (int t = 0; t <= 2 * m + 1; ++t) {
    const Rational weight =
        binom_rational(Rational(m - h), 2 * m + 1 - t) + binom_rational(Rational(m - h + 1), 2 * m + 1 - t);
    lhs += binom_poly(Rational(-1), Rational(-1), t) * weight;
  }
  const RationalPoly rhs =
      -(binom_poly(Rational(h + m + 1), 2 * m + 1) + binom_poly(Rational(h + m), 2 * m + 1));
  return {lhs, rhs};
}

std::pair<RationalPoly, RationalPoly> s_reduction_odd_sides(int h, int m) {
  RationalPoly lhs;
  for (int t = 0; t <= 2 * m; ++t) {
    const Rational weight =
        binom_rational(Rational(m - h), 2 * m - t) + binom_rational(Rational(m - h + 1), 2 * m - t);
    lhs += binom_poly(Rational(-1), Rational(-1), t) * weight;
  }
  const RationalPoly rhs = binom_poly(Rational(h + m), 2 * m) + binom_poly(Rational(h + m - 1), 2 * m);
  return {lhs, rhs};
}

std::vector<IdentityCertificate> s_reduction_certificates(int h_max) {
  if (h_max < 1) {
    throw ConfigError("verify_S_reduction: h_max must be at least 1");
  }
  std::vector<IdentityCertificate> out;
  for (int h = 1; h <= h_max; ++h) {
    for (int m = 0; m < h; ++m) {
      const auto [le, re] = s_reduction_even_sides(h, m);
      out.push_back(compare("s_reduction_even", {{"h", h}, {"m", m}}, le, re));
      const auto [lo, ro] = s_reduction_odd_sides(h, m);
      out.push_back(compare("s_reduction_odd", {{"h", h}, {"m", m}}, lo, ro));
    }
  }
  return out;
}

bool verify_S_reduction(int h_max) { return all_pass(s_reduction_certificates(h_max)); }

std::vector<IdentityCertificate> float_cross_check(int p_max, int h_max, int count,
                                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  std::vector<double> points;
  for (int i = 0; i < count; ++i) {
    points.push_back(dist(gen));
  }
  auto eval = [](const RationalPoly& poly, double a) { return horner(poly.to_double_coefficients(), a); };
  auto close = [](double x, double y) {
    return std::abs(x - y) <= 1e-10 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  std::vector<IdentityCertificate> out;
  auto record = [&](const std::string& id, nlohmann::ordered_json params, auto&& check) {
    IdentityCertificate cert;
    cert.identity_id = id;
    cert.parameters = std::move(params);
    cert.status = true;
    for (double a : points) {
      const auto [x, y] = check(a);
      if (!close(x, y)) {
        cert.status = false;
        char buf[128];
        std::snprintf(buf, sizeof(buf), "a = %.17g: %.17g vs %.17g", a, x, y);
        cert.detail = buf;
        break;
      }
    }
    out.push_back(std::move(cert));
  };
  for (int p = 0; p <= p_max; ++p) {
    const RationalPoly shifted = binom_poly(Rational(p), p);
    record("float_reflection", {{"p", p}}, [&](double a) {
      return std::pair{sign_of(p) * binomial_real(-a - 1.0, p), eval(shifted, a)};
    });
    record("float_r_sum", {{"p", p}}, [&](double a) {
      return std::pair{0.5 * sign_of(p) * binomial_real(-a - 1.0, p) + 0.5 * binomial_real(a + p, p),
                       eval(shifted, a)};
    });
  }
  for (int h = 1; h <= h_max; ++h) {
    for (int m = 0; m < h; ++m) {
      const auto even = s_reduction_even_sides(h, m);
      record("float_s_reduction_even", {{"h", h}, {"m", m}}, [&](double a) {
        const double direct = -(binomial_real(a + h + m + 1, 2 * m + 1) + binomial_real(a + h + m, 2 * m + 1));
        return std::pair{eval(even.first, a), direct};
      });
      const auto odd = s_reduction_odd_sides(h, m);
      record("float_s_reduction_odd", {{"h", h}, {"m", m}}, [&](double a) {
        const double direct = binomial_real(a + h + m, 2 * m) + binomial_real(a + h + m - 1, 2 * m);
        return std::pair{eval(odd.first, a), direct};
      });
    }
  }
  return out;
}

std::vector<IdentityCertificate> run_identity_suite(int p_max, int n_max, int h_max) {
  std::vector<IdentityCertificate> out;
  auto append = [&out](std::vector<IdentityCertificate> part) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };
  append(reflection_certificates(p_max));
  append(addition_certificates(n_max, n_max + 1));
  append(r_sum_certificates(p_max));
  append(s_reduction_certificates(h_max));
  append(float_cross_check(p_max, h_max));
  return out;
}

nlohmann::ordered_json certificates_to_json(const std::vector<IdentityCertificate>& certs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : certs) {
    nlohmann::ordered_json j;
    j["identity_id"] = c.identity_id;
    j["parameters"] = c.parameters;
    j["status"] = c.status ? "pass" : "fail";
    if (!c.detail.empty()) {
      j["detail"] = c.detail;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace gflab
