#pragma once

// Thurston's representation of <T_alpha, T_beta> into PSL(2, R) for a filling
// pair with intersection number n:
//
//   T_alpha -> [[1, n], [0, 1]],   T_beta -> [[1, 0], [-n, 1]].
//
// A word is pseudo-Anosov exactly when its image is hyperbolic (|trace| > 2);
// its dilatation is the larger eigenvalue and the Teichmueller translation
// length is the log of that.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ratioopt/freegroup.hpp"

namespace ratioopt {

struct IntMatrix2 {
  mpz_class m11{1}, m12{0}, m21{0}, m22{1};

  static IntMatrix2 identity() { return {}; }

  [[nodiscard]] mpz_class trace() const { return m11 + m22; }
  [[nodiscard]] mpz_class determinant() const { return m11 * m22 - m12 * m21; }
  // Adjugate; equals the inverse when det == 1.
  [[nodiscard]] IntMatrix2 adjugate() const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2& x, const IntMatrix2& y);
};

struct TwistPair {
  IntMatrix2 alpha;  // [[1, n], [0, 1]]
  IntMatrix2 beta;   // [[1, 0], [-n, 1]]
};

// Throws std::invalid_argument for n <= 0.
TwistPair twist_matrices(std::int64_t n);

// Image of w with a^k -> [[1, kn], [0, 1]] and b^k -> [[1, 0], [-kn, 1]].
IntMatrix2 evaluate(const Word& w, const mpz_class& n);
inline IntMatrix2 evaluate(const Word& w, std::int64_t n) { return evaluate(w, mpz_class(static_cast<long>(n))); }

// Throws std::invalid_argument unless det(m) == 1.
bool is_hyperbolic(const IntMatrix2& m);

enum class NonHyperbolicKind { parabolic, elliptic };

class NonHyperbolicError : public std::domain_error {
 public:
  NonHyperbolicError(NonHyperbolicKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}
  [[nodiscard]] NonHyperbolicKind kind() const { return kind_; }

 private:
  NonHyperbolicKind kind_;
};

struct Dilatation {
  mpz_class trace_abs;
  // (|t| + sqrt(t^2 - 4)) / 2; +inf once it leaves double range
  double lambda_float = 0;
  // natural log, accurate to ~1e-15 relative at any magnitude
  double log_lambda = 0;
};

// Throws NonHyperbolicError for |trace| <= 2.
Dilatation dilatation(const IntMatrix2& m);

// ln|x| for x != 0, from the bit length and the leading 53 bits.
double log_abs(const mpz_class& x);

double teich_translation(const Word& w, const mpz_class& n);
inline double teich_translation(const Word& w, std::int64_t n) {
  return teich_translation(w, mpz_class(static_cast<long>(n)));
}

struct TraceBoundCheck {
  bool holds = false;
  mpz_class lhs;  // |trace(w)|
  mpz_class rhs;  // (2n)^|w|
  // w = a^e1 b^d1 ... a^ek b^dk exactly (starts with a, ends with b)
  bool pair_form = false;
};

// Requires every exponent to be +-1 (std::invalid_argument otherwise).
TraceBoundCheck trace_bound_check(const Word& w, std::int64_t n);

std::string to_string(const mpz_class& x);

}  // namespace ratioopt
