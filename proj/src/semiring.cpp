#include "wupto/semiring.hpp"

#include <utility>

namespace wupto {

namespace {

void require_same(const Value& a, const Value& b) {
  if (a.semiring() != b.semiring())
    throw UsageError(std::string("mixed semirings: ") + semiring_name(a.semiring()) + " vs " +
                     semiring_name(b.semiring()));
}

[[noreturn]] void no_lattice(SemiringId s, const char* op) {
  throw UnsupportedOp(std::string(op) + " is not defined for " + semiring_name(s));
}

}  // namespace

bool is_lmonoid(SemiringId s) { return s != SemiringId::RationalField; }

const char* semiring_name(SemiringId s) {
  switch (s) {
    case SemiringId::Boolean: return "boolean";
    case SemiringId::TropicalNat: return "tropical-nat";
    case SemiringId::TropicalReal: return "tropical-real";
    case SemiringId::MaxTimes: return "maxtimes";
    case SemiringId::RationalField: return "rational-field";
  }
  return "?";
}

Value Value::zero(SemiringId s) {
  switch (s) {
    case SemiringId::Boolean: return Value(s, false, 0);
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal: return Value(s, true, 0);
    case SemiringId::MaxTimes: return Value(s, false, 0);
    case SemiringId::RationalField: return Value(s, false, 0);
  }
  throw UsageError("bad semiring id");
}

Value Value::one(SemiringId s) {
  switch (s) {
    case SemiringId::Boolean: return Value(s, false, 1);
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal: return Value(s, false, 0);
    case SemiringId::MaxTimes: return Value(s, false, 1);
    case SemiringId::RationalField: return Value(s, false, 1);
  }
  throw UsageError("bad semiring id");
}

Value Value::infinity(SemiringId s) {
  if (s != SemiringId::TropicalNat && s != SemiringId::TropicalReal)
    throw UsageError(std::string("no infinity in ") + semiring_name(s));
  return Value(s, true, 0);
}

Value Value::from_rat(SemiringId s, Rat q) {
  switch (s) {
    case SemiringId::Boolean:
      if (q != 0 && q != 1) throw UsageError("boolean value must be 0 or 1");
      break;
    case SemiringId::TropicalNat:
      if (q < 0 || denominator(q) != 1) throw UsageError("tropical-nat value must be a natural");
      break;
    case SemiringId::TropicalReal:
      if (q < 0) throw UsageError("tropical-real value must be nonnegative");
      break;
    case SemiringId::MaxTimes:
      if (q < 0 || q > 1) throw UsageError("maxtimes value must lie in [0,1]");
      break;
    case SemiringId::RationalField: break;
  }
  return Value(s, false, std::move(q));
}

Value Value::from_int(SemiringId s, long long v) { return from_rat(s, Rat(v)); }

Value Value::of_bool(bool b) { return Value(SemiringId::Boolean, false, b ? 1 : 0); }

const Rat& Value::rat() const {
  if (inf_) throw UsageError("infinite value has no finite payload");
  return q_;
}

bool Value::is_zero() const { return *this == zero(sr_); }
bool Value::is_one() const { return *this == one(sr_); }

bool Value::operator==(const Value& o) const {
  require_same(*this, o);
  if (inf_ != o.inf_) return false;
  if (inf_) return true;
  return q_ == o.q_;
}

bool Value::operator<(const Value& o) const {
  require_same(*this, o);
  if (inf_ != o.inf_) return !inf_;  // finite sorts before infinite
  if (inf_) return false;
  return q_ < o.q_;
}

Value combine(const Value& a, const Value& b) {
  require_same(a, b);
  SemiringId s = a.semiring();
  switch (s) {
    case SemiringId::Boolean:
      return Value::of_bool(a.rat() == 1 || b.rat() == 1);
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal:
      if (a.is_infinite()) return b;
      if (b.is_infinite()) return a;
      return Value::from_rat(s, a.rat() < b.rat() ? a.rat() : b.rat());
    case SemiringId::MaxTimes:
      return Value::from_rat(s, a.rat() > b.rat() ? a.rat() : b.rat());
    case SemiringId::RationalField:
      return Value::from_rat(s, a.rat() + b.rat());
  }
  throw UsageError("bad semiring id");
}

Value times(const Value& a, const Value& b) {
  require_same(a, b);
  SemiringId s = a.semiring();
  switch (s) {
    case SemiringId::Boolean:
      return Value::of_bool(a.rat() == 1 && b.rat() == 1);
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal:
      if (a.is_infinite() || b.is_infinite()) return Value::infinity(s);
      return Value::from_rat(s, a.rat() + b.rat());
    case SemiringId::MaxTimes:
    case SemiringId::RationalField:
      return Value::from_rat(s, a.rat() * b.rat());
  }
  throw UsageError("bad semiring id");
}

// Order induced by the join: a leq b iff combine(a, b) == b. For the
// tropicals that reverses the numeric order (inf is the bottom).
bool leq(const Value& a, const Value& b) {
  require_same(a, b);
  switch (a.semiring()) {
    case SemiringId::Boolean:
      return a.rat() <= b.rat();
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal:
      if (a.is_infinite()) return true;
      if (b.is_infinite()) return false;
      return a.rat() >= b.rat();
    case SemiringId::MaxTimes:
      return a.rat() <= b.rat();
    case SemiringId::RationalField:
      no_lattice(a.semiring(), "leq");
  }
  throw UsageError("bad semiring id");
}

Value meet(const Value& a, const Value& b) {
  require_same(a, b);
  SemiringId s = a.semiring();
  switch (s) {
    case SemiringId::Boolean:
      return Value::of_bool(a.rat() == 1 && b.rat() == 1);
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal:
      if (a.is_infinite() || b.is_infinite()) return Value::infinity(s);
      return Value::from_rat(s, a.rat() > b.rat() ? a.rat() : b.rat());
    case SemiringId::MaxTimes:
      return Value::from_rat(s, a.rat() < b.rat() ? a.rat() : b.rat());
    case SemiringId::RationalField:
      no_lattice(s, "meet");
  }
  throw UsageError("bad semiring id");
}

Value residuum(const Value& a, const Value& b) {
  require_same(a, b);
  SemiringId s = a.semiring();
  switch (s) {
    case SemiringId::Boolean:
      return Value::of_bool(a.rat() == 0 || b.rat() == 1);
    case SemiringId::TropicalNat:
    case SemiringId::TropicalReal:
      // sup{c | a + c >= b}: everything when a = inf, so the top (= 0).
      if (a.is_infinite()) return Value::one(s);
      if (b.is_infinite()) return Value::infinity(s);
      return Value::from_rat(s, b.rat() > a.rat() ? b.rat() - a.rat() : Rat(0));
    case SemiringId::MaxTimes:
      if (a.rat() == 0) return Value::one(s);
      if (b.rat() >= a.rat()) return Value::one(s);
      return Value::from_rat(s, b.rat() / a.rat());
    case SemiringId::RationalField:
      no_lattice(s, "residuum");
  }
  throw UsageError("bad semiring id");
}

Value negate(const Value& a) {
  if (a.semiring() != SemiringId::RationalField)
    throw UnsupportedOp(std::string("negate is not defined for ") + semiring_name(a.semiring()));
  return Value::from_rat(a.semiring(), -a.rat());
}

std::string to_string(const Value& v) {
  if (v.is_infinite()) return "inf";
  const Rat& q = v.rat();
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace wupto
