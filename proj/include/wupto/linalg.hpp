#pragma once

#include <cstddef>
#include <vector>

#include "wupto/semiring.hpp"

namespace wupto {

// Dense vector over one semiring. Entries are validated to belong to the
// vector's semiring on every write.
class Vec {
 public:
  Vec(SemiringId s, std::size_t dim);  // filled with zero
  static Vec unit(SemiringId s, std::size_t dim, std::size_t index);

  SemiringId semiring() const { return sr_; }
  std::size_t dim() const { return entries_.size(); }
  const Value& operator[](std::size_t i) const { return entries_.at(i); }
  void set(std::size_t i, Value v);

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }
  bool operator<(const Vec& o) const;  // container order, not the lattice

 private:
  SemiringId sr_;
  std::vector<Value> entries_;
};

// Dense square matrix; entry (src, dst) is the weight of the edge src -> dst.
class Mat {
 public:
  Mat(SemiringId s, std::size_t dim);  // all zero
  static Mat identity(SemiringId s, std::size_t dim);

  SemiringId semiring() const { return sr_; }
  std::size_t dim() const { return dim_; }
  const Value& at(std::size_t src, std::size_t dst) const;
  void set(std::size_t src, std::size_t dst, Value v);

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  SemiringId sr_;
  std::size_t dim_;
  std::vector<Value> cells_;
};

Vec vec_combine(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& v, const Value& s);

// Row-vector application: result[y] = sum_x v[x] * m(x, y). Unit vector
// e_x maps to the x-th row of m, i.e. the successors of state x.
Vec mat_apply(const Mat& m, const Vec& v);

// Pointwise lattice order (l-monoids only).
bool vec_leq(const Vec& a, const Vec& b);

// Greatest scalar c with vec_leq(vec_scale(l, c), v): the meet of the
// componentwise residua.
Value vec_residuum(const Vec& l, const Vec& v);

// Componentwise difference (rational field only).
Vec vec_sub(const Vec& a, const Vec& b);

bool vec_is_zero(const Vec& v);

std::string to_string(const Vec& v);

}  // namespace wupto
