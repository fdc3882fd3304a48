#include "ratioopt/thurston.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ratioopt {

IntMatrix2 IntMatrix2::adjugate() const { return {m22, -m12, -m21, m11}; }

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
          x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
}

bool operator==(const IntMatrix2& x, const IntMatrix2& y) {
  return x.m11 == y.m11 && x.m12 == y.m12 && x.m21 == y.m21 && x.m22 == y.m22;
}

TwistPair twist_matrices(std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("twist_matrices: intersection parameter must be positive, got " +
                                std::to_string(n));
  }
  const mpz_class v(static_cast<long>(n));
  return {{1, v, 0, 1}, {1, 0, -v, 1}};
}

IntMatrix2 evaluate(const Word& w, const mpz_class& n) {
  IntMatrix2 m;
  mpz_class x;
  for (const auto& s : w.syllables()) {
    x = n * static_cast<long>(s.exponent);
    if (s.gen == Generator::a) {
      // m * [[1, x], [0, 1]]
      m.m12 += m.m11 * x;
      m.m22 += m.m21 * x;
    } else {
      // m * [[1, 0], [-x, 1]]
      m.m11 -= m.m12 * x;
      m.m21 -= m.m22 * x;
    }
  }
  return m;
}

bool is_hyperbolic(const IntMatrix2& m) {
  if (m.determinant() != 1) {
    throw std::invalid_argument("is_hyperbolic: determinant must be 1");
  }
  return abs(m.trace()) > 2;
}

double log_abs(const mpz_class& x) {
  if (x == 0) {
    throw std::domain_error("log_abs: zero");
  }
  long exp = 0;
  const double mantissa = std::fabs(mpz_get_d_2exp(&exp, x.get_mpz_t()));
  return std::log(mantissa) + static_cast<double>(exp) * std::numbers::ln2;
}

Dilatation dilatation(const IntMatrix2& m) {
  if (!is_hyperbolic(m)) {
    const mpz_class t = abs(m.trace());
    if (t == 2) {
      throw NonHyperbolicError(NonHyperbolicKind::parabolic,
                               "dilatation: |trace| = 2, parabolic (reducible) element");
    }
    throw NonHyperbolicError(NonHyperbolicKind::elliptic,
                             "dilatation: |trace| = " + t.get_str() + " < 2, elliptic element");
  }
  Dilatation d;
  d.trace_abs = abs(m.trace());
  if (mpz_sizeinbase(d.trace_abs.get_mpz_t(), 2) <= 500) {
    const double t = d.trace_abs.get_d();
    d.lambda_float = (t + std::sqrt((t - 2.0) * (t + 2.0))) / 2.0;
    d.log_lambda = std::log(d.lambda_float);
  } else {
    // lambda = t (1 + sqrt(1 - 4/t^2)) / 2 = t (1 - O(t^-2)); the correction is below 2^-998.
    d.lambda_float = std::numeric_limits<double>::infinity();
    d.log_lambda = log_abs(d.trace_abs);
  }
  return d;
}

double teich_translation(const Word& w, const mpz_class& n) {
  return dilatation(evaluate(w, n)).log_lambda;
}

TraceBoundCheck trace_bound_check(const Word& w, std::int64_t n) {
  if (!w.all_unit_exponents()) {
    throw std::invalid_argument("trace_bound_check: every syllable exponent must be +-1, got " +
                                w.to_exponent_string());
  }
  if (n <= 0) {
    throw std::invalid_argument("trace_bound_check: n must be positive");
  }
  TraceBoundCheck c;
  c.lhs = abs(evaluate(w, n).trace());
  mpz_ui_pow_ui(c.rhs.get_mpz_t(), static_cast<unsigned long>(2 * n),
                static_cast<unsigned long>(w.letter_length()));
  c.holds = c.lhs <= c.rhs;
  const auto& s = w.syllables();
  c.pair_form = !s.empty() && s.size() % 2 == 0 && s.front().gen == Generator::a;
  return c;
}

std::string to_string(const mpz_class& x) { return x.get_str(); }

}  // namespace ratioopt
