#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "grs/scalar.hpp"

namespace grs {

enum class Family {
  A, B, C, D, E, F, G,  // classical and exceptional, rank in n
  B0,                   // B(0,n)
  ASuper,               // A(m,n)
  BSuper,               // B(m,n), m >= 1
  CSuper,               // C(n)
  DSuper,               // D(m,n)
  D21,                  // D(2,1;lambda)
  G3,
  F4Super,              // F(4)
  Cmn,                  // C(m,n)
  BCmn,                 // BC(m,n)
  ATilde,               // ~A(n,n), the finite system of gl(n+1|n+1)
  Quotient,             // ~A(n,n)^(1)_q
  Peculiar,             // C(1,1)^q
};

// Parameters are those of the printed name: A_{2n}^(2) stores n = 2n, and
// A(2m,2n)^(4) stores (2m, 2n).
struct TypeTag {
  Family family = Family::A;
  int m = 0;
  int n = 0;
  int twist = 0;  // 0 for finite systems
  std::optional<Scalar> lambda;
  std::optional<Scalar> q;

  bool affine() const { return twist > 0 || family == Family::Quotient || family == Family::Peculiar; }
  bool operator==(const TypeTag&) const = default;
};

std::string to_string(const TypeTag& t);

// Full tag strings such as "D_4^(3)", "A(2,2)^(4)", "~A(2,2)^(1)_1/3",
// "C(1,1)^1/3", "D(2,1;2)". Throws InvalidInput.
TypeTag parse_tag(std::string_view text);

// Applies the alias table and parameter normalizations. Throws InvalidInput
// for out-of-range parameters.
TypeTag canonical(const TypeTag& t);

bool is_valid(const TypeTag& t);

// The finite type of cl(R) for an affine tag, canonicalized.
TypeTag base_of(const TypeTag& affine);

// Canonical D(2,1;lambda) parameter: the largest member of the S3 orbit.
Scalar canonical_lambda(const Scalar& lambda);

// Canonical quotient parameter: min(q mod 1, 1 - q mod 1).
Scalar canonical_q(const Scalar& q);

// True iff q1 - q2 or q1 + q2 is an integer.
bool quotient_iso(const Scalar& q1, const Scalar& q2);

}  // namespace grs
