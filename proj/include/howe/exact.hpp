#pragma once

// Exact scalars and the error types shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace howe {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (gmp canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using BigInt = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One type per failure mode named in the module contracts.
struct EmptyShape : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotRenormalizable : Error { using Error::Error; };
struct UnknownContext : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadWeight : Error { using Error::Error; };
struct RankTooSmall : Error { using Error::Error; };
struct NotPseudoUnitary : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational r;
  try {
    if (r.set_str(s, 10) != 0) throw ParseError("not a rational: " + s);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: " + s);
  }
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Signed 64-bit helpers that throw instead of wrapping.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw TooLarge("int64 overflow in product");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw TooLarge("int64 overflow in sum");
  return out;
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

}  // namespace howe
