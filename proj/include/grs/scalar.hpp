#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace grs {

// Exact rational. mpq_class keeps results canonical (lowest terms, den > 0)
// after every arithmetic operation; values built from raw num/den pairs are
// canonicalized in parse_scalar/make_scalar.
using Scalar = mpq_class;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar make_scalar(long num, long den = 1);

// Accepts "p", "-p", "p/q" with decimal integers. Throws InvalidInput.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& x);

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }
inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

// Requires is_integer(x) and a value that fits in long.
long to_long(const Scalar& x);

Scalar floor_of(const Scalar& x);

// x reduced into [0, m) for m > 0.
Scalar mod_into(const Scalar& x, const Scalar& m);

Scalar abs_of(const Scalar& x);

// gcd of two nonnegative rationals: the largest g with a/g, b/g integers.
Scalar rational_gcd(const Scalar& a, const Scalar& b);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace grs
