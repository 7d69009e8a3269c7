#pragma once

#include <gmpxx.h>

#include <string>

namespace cyclofact {

// All arithmetic that can outgrow machine words is exact: arbitrary-precision
// integers for Moebius values, rationals for the commutativity degrees.
// A value that would need rounding indicates a bug, not a feature request.
using BigInt = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms with positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long long num, long long den) {
  return make_rational(BigInt(static_cast<long>(num)),
                       BigInt(static_cast<long>(den)));
}

// "3/4", or just "1" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace cyclofact
