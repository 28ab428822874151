#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wupto {

// Caller errors: mixed semirings, malformed input, domain violations.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation that does not exist for the given semiring (e.g. residuation
// over the rational field, which is not an l-monoid).
struct UnsupportedOp : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rat = boost::multiprecision::cpp_rational;

enum class SemiringId {
  Boolean,        // ({0,1}, or, and, 0, 1)
  TropicalNat,    // (N u {inf}, min, +, inf, 0)
  TropicalReal,   // (Q>=0 u {inf}, min, +, inf, 0), exact rationals
  MaxTimes,       // ([0,1], max, *, 0, 1), exact rationals
  RationalField,  // (Q, +, *, 0, 1)
};

bool is_lmonoid(SemiringId s);  // lattice-ordered: all but the field
const char* semiring_name(SemiringId s);

// One scalar. Exact everywhere: naturals and rationals are arbitrary
// precision, so structural equality is semantic equality.
class Value {
 public:
  static Value zero(SemiringId s);
  static Value one(SemiringId s);
  static Value infinity(SemiringId s);           // tropical only
  static Value from_rat(SemiringId s, Rat q);    // validates the domain
  static Value from_int(SemiringId s, long long v);
  static Value of_bool(bool b);

  SemiringId semiring() const { return sr_; }
  bool is_infinite() const { return inf_; }
  const Rat& rat() const;  // finite values only
  bool is_zero() const;
  bool is_one() const;

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  // Representation order for ordered containers; unrelated to the lattice.
  bool operator<(const Value& o) const;

 private:
  Value(SemiringId s, bool inf, Rat q) : sr_(s), inf_(inf), q_(std::move(q)) {}

  SemiringId sr_;
  bool inf_;
  Rat q_;
};

// Semiring addition and multiplication.
Value combine(const Value& a, const Value& b);
Value times(const Value& a, const Value& b);

// Lattice structure (l-monoids only; the field throws UnsupportedOp).
// combine is the join, leq the induced order, meet the binary infimum.
bool leq(const Value& a, const Value& b);
Value meet(const Value& a, const Value& b);

// Residuum a -> b: the greatest c with times(a, c) leq b.
Value residuum(const Value& a, const Value& b);

// Additive inverse; rational field only.
Value negate(const Value& a);

std::string to_string(const Value& v);

}  // namespace wupto
