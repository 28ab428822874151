#include "wupto/linalg.hpp"

#include <utility>

namespace wupto {

namespace {

void require_same_shape(const Vec& a, const Vec& b) {
  if (a.semiring() != b.semiring()) throw UsageError("mixed semirings in vector operation");
  if (a.dim() != b.dim()) throw UsageError("vector dimension mismatch");
}

}  // namespace

Vec::Vec(SemiringId s, std::size_t dim) : sr_(s), entries_(dim, Value::zero(s)) {
  if (dim == 0) throw UsageError("vector dimension must be positive");
}

Vec Vec::unit(SemiringId s, std::size_t dim, std::size_t index) {
  Vec v(s, dim);
  v.set(index, Value::one(s));
  return v;
}

void Vec::set(std::size_t i, Value v) {
  if (v.semiring() != sr_) throw UsageError("entry semiring does not match vector");
  entries_.at(i) = std::move(v);
}

bool Vec::operator==(const Vec& o) const {
  require_same_shape(*this, o);
  return entries_ == o.entries_;
}

bool Vec::operator<(const Vec& o) const {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (entries_[i] < o.entries_[i]) return true;
    if (o.entries_[i] < entries_[i]) return false;
  }
  return false;
}

Mat::Mat(SemiringId s, std::size_t dim) : sr_(s), dim_(dim), cells_(dim * dim, Value::zero(s)) {
  if (dim == 0) throw UsageError("matrix dimension must be positive");
}

Mat Mat::identity(SemiringId s, std::size_t dim) {
  Mat m(s, dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, Value::one(s));
  return m;
}

const Value& Mat::at(std::size_t src, std::size_t dst) const {
  if (src >= dim_ || dst >= dim_) throw UsageError("matrix index out of range");
  return cells_[src * dim_ + dst];
}

void Mat::set(std::size_t src, std::size_t dst, Value v) {
  if (src >= dim_ || dst >= dim_) throw UsageError("matrix index out of range");
  if (v.semiring() != sr_) throw UsageError("entry semiring does not match matrix");
  cells_[src * dim_ + dst] = std::move(v);
}

bool Mat::operator==(const Mat& o) const {
  if (sr_ != o.sr_ || dim_ != o.dim_) throw UsageError("matrix shape mismatch");
  return cells_ == o.cells_;
}

Vec vec_combine(const Vec& a, const Vec& b) {
  require_same_shape(a, b);
  Vec r(a.semiring(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.set(i, combine(a[i], b[i]));
  return r;
}

Vec vec_scale(const Vec& v, const Value& s) {
  Vec r(v.semiring(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r.set(i, times(v[i], s));
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.semiring() != v.semiring()) throw UsageError("mixed semirings in mat_apply");
  if (m.dim() != v.dim()) throw UsageError("matrix/vector dimension mismatch");
  Vec r(v.semiring(), v.dim());
  for (std::size_t y = 0; y < v.dim(); ++y) {
    Value acc = Value::zero(v.semiring());
    for (std::size_t x = 0; x < v.dim(); ++x) acc = combine(acc, times(v[x], m.at(x, y)));
    r.set(y, acc);
  }
  return r;
}

bool vec_leq(const Vec& a, const Vec& b) {
  require_same_shape(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!leq(a[i], b[i])) return false;
  return true;
}

Value vec_residuum(const Vec& l, const Vec& v) {
  require_same_shape(l, v);
  Value acc = residuum(l[0], v[0]);
  for (std::size_t i = 1; i < l.dim(); ++i) acc = meet(acc, residuum(l[i], v[i]));
  return acc;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_shape(a, b);
  Vec r(a.semiring(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.set(i, combine(a[i], negate(b[i])));
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace wupto
