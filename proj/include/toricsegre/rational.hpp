#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "toricsegre/error.hpp"

namespace toricsegre {

// Always canonical: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) {
    fail(ErrorCode::Internal, "integer " + z.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(z.get_si());
}

/// Converts an integral rational; throws `code` otherwise.
inline std::int64_t to_int64(const Rational& q, ErrorCode code = ErrorCode::NonIntegerCoefficient) {
  if (!is_integer(q)) fail(code, "expected an integer, got " + q.get_str());
  return to_int64(q.get_num());
}

inline Rational make_rational(std::int64_t v) {
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), static_cast<long>(v));
  return q;
}

}  // namespace toricsegre
