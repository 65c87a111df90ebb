#include "jdeform/linalg.hpp"

#include <algorithm>

namespace jdeform {

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::unit(std::size_t i, Scalar v) {
  SparseVec s;
  if (!v.is_zero()) s.e_.emplace_back(i, std::move(v));
  return s;
}

SparseVec SparseVec::from_dense(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.e_.emplace_back(i, v[i]);
  }
  return s;
}

Vec SparseVec::to_dense(std::size_t n) const {
  Vec out(n);
  for (const auto& [i, v] : e_) {
    if (i >= n) throw DimensionError("sparse index out of range");
    out[i] = v;
  }
  return out;
}

Scalar SparseVec::get(std::size_t i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return Scalar();
}

void SparseVec::add(std::size_t i, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = std::lower_bound(e_.begin(), e_.end(), i,
                             [](const Entry& e, std::size_t k) { return e.first < k; });
  if (it != e_.end() && it->first == i) {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  } else {
    e_.insert(it, Entry(i, v));
  }
}

void SparseVec::push_back(std::size_t i, Scalar v) {
  if (!e_.empty() && e_.back().first >= i) throw DimensionError("push_back out of order");
  if (!v.is_zero()) e_.emplace_back(i, std::move(v));
}

void SparseVec::axpy(const Scalar& a, const SparseVec& x) {
  if (a.is_zero() || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto p = e_.begin();
  auto q = x.e_.begin();
  while (p != e_.end() || q != x.e_.end()) {
    if (q == x.e_.end() || (p != e_.end() && p->first < q->first)) {
      out.push_back(std::move(*p++));
    } else if (p == e_.end() || q->first < p->first) {
      out.emplace_back(q->first, a * q->second);
      ++q;
    } else {
      Scalar s = p->second + a * q->second;
      if (!s.is_zero()) out.emplace_back(p->first, std::move(s));
      ++p;
      ++q;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const Scalar& a) {
  if (a.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& [i, v] : e_) v *= a;
}

// ------------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.col_[i] = SparseVec::unit(i);
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vec>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) m.col_[j].push_back(i, rows[i][j]);
    }
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.nnz();
  return n;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return col_[c].get(r);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  col_[c].add(r, v - col_[c].get(r));
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  col_[c].add(r, v);
}

void Matrix::set_column(std::size_t c, SparseVec v) {
  if (c >= cols_) throw DimensionError("column index out of range");
  if (!v.empty() && v.entries().back().first >= rows_) {
    throw DimensionError("column entry out of range");
  }
  col_[c] = std::move(v);
}

SparseVec Matrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (const auto& [j, v] : x) {
    if (j >= cols_) throw DimensionError("vector longer than matrix width");
    y.axpy(v, col_[j]);
  }
  return y;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionError("vector length does not match matrix width");
  return apply(SparseVec::from_dense(x)).to_dense(rows_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : col_[j]) t.col_[i].push_back(j, v);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(col_.begin(), col_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::vector<Vec> Matrix::to_dense() const {
  std::vector<Vec> rows(rows_, Vec(cols_));
  for (std::size_t j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : col_[j]) rows[i][j] = v;
  }
  return rows;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t j = 0; j < b.cols_; ++j) out.col_[j] = a.apply(b.col_[j]);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t j = 0; j < a.cols_; ++j) out.col_[j].axpy(Scalar(1), b.col_[j]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t j = 0; j < a.cols_; ++j) out.col_[j].axpy(Scalar(-1), b.col_[j]);
  return out;
}

// ------------------------------------------------------------------ Echelon

bool Echelon::reduce(SparseVec& v, SparseVec* tag) const {
  std::size_t pos = 0;
  while (pos < v.nnz()) {
    const auto& [col, val] = v.entries()[pos];
    auto it = pivot_row_.find(col);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    Scalar coef = -val;
    // The stored row has no entries before `col`, so earlier entries of v
    // are untouched and the entry at `col` cancels.
    if (tag) tag->axpy(coef, tags_[it->second]);
    v.axpy(coef, rows_[it->second]);
  }
  return v.empty();
}

bool Echelon::insert(SparseVec v, SparseVec* tag) {
  SparseVec local;
  SparseVec* t = tag ? tag : &local;
  if (reduce(v, t)) return false;
  Scalar inv = v.leading_value().inverse();
  v.scale(inv);
  t->scale(inv);
  pivot_row_.emplace(v.leading(), rows_.size());
  rows_.push_back(std::move(v));
  tags_.push_back(tag ? *tag : SparseVec());
  return true;
}

// --------------------------------------------------------------- algorithms

RankKernelImage rank_kernel_image(const Matrix& m) {
  RankKernelImage out;
  out.kernel.ambient_dim = m.cols();
  out.image.ambient_dim = m.rows();
  Echelon ech(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVec tag = SparseVec::unit(c);
    if (ech.insert(m.column(c), &tag)) {
      out.pivot_columns.push_back(c);
      out.image.basis.push_back(m.column(c).to_dense(m.rows()));
    } else {
      out.kernel.basis.push_back(tag.to_dense(m.cols()));
    }
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::vector<SparseVec> kernel_sparse(const Matrix& m) {
  std::vector<SparseVec> out;
  Echelon ech(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.column(c).empty()) {
      out.push_back(SparseVec::unit(c));
      continue;
    }
    SparseVec tag = SparseVec::unit(c);
    if (!ech.insert(m.column(c), &tag)) out.push_back(std::move(tag));
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  Echelon ech(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) ech.insert(m.column(c));
  return ech.rank();
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match rows");
  Echelon ech(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVec tag = SparseVec::unit(c);
    ech.insert(m.column(c), &tag);
  }
  SparseVec v = SparseVec::from_dense(b);
  SparseVec tag;
  if (!ech.reduce(v, &tag)) return std::nullopt;
  tag.scale(Scalar(-1));
  return tag.to_dense(m.cols());
}

Quotient quotient_and_dual(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim != ambient_dim) throw DimensionError("subspace is not inside the ambient space");
  Echelon ech(ambient_dim);
  for (const auto& b : sub.basis) {
    if (b.size() != ambient_dim) throw DimensionError("subspace vector has wrong length");
    if (!ech.insert(SparseVec::from_dense(b))) {
      throw DimensionError("subspace basis is linearly dependent");
    }
  }
  Quotient q;
  std::vector<SparseVec> reps;
  for (std::size_t j = 0; j < ambient_dim && ech.rank() < ambient_dim; ++j) {
    if (ech.insert(SparseVec::unit(j))) {
      reps.push_back(SparseVec::unit(j));
      q.representatives.push_back(reps.back().to_dense(ambient_dim));
    }
  }
  std::vector<SparseVec> span;
  span.reserve(sub.basis.size());
  for (const auto& b : sub.basis) span.push_back(SparseVec::from_dense(b));
  RelativeCoordinates coords(ambient_dim, span, reps);
  q.projection = Matrix(reps.size(), ambient_dim);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    q.projection.set_column(j, coords.coordinates(SparseVec::unit(j)));
  }
  return q;
}

RelativeCoordinates::RelativeCoordinates(std::size_t ambient_dim,
                                         const std::vector<SparseVec>& spanning_b,
                                         const std::vector<SparseVec>& reps)
    : ech_(ambient_dim), count_(reps.size()) {
  for (const auto& b : spanning_b) ech_.insert(b);
  count_ = 0;
  for (const auto& r : reps) {
    if (!add_rep(r)) throw DimensionError("representatives are dependent modulo the subspace");
  }
}

bool RelativeCoordinates::add_rep(const SparseVec& v) {
  SparseVec tag = SparseVec::unit(count_);
  if (!ech_.insert(v, &tag)) return false;
  ++count_;
  return true;
}

SparseVec RelativeCoordinates::coordinates(const SparseVec& v, bool* inside) const {
  SparseVec w = v;
  SparseVec tag;
  bool zero = ech_.reduce(w, &tag);
  if (inside) *inside = zero;
  tag.scale(Scalar(-1));
  return tag;
}

// ------------------------------------------------------------------ helpers

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim) throw DimensionError("vector length does not match subspace");
  Echelon ech(ambient_dim);
  for (const auto& b : basis) ech.insert(SparseVec::from_dense(b));
  return ech.contains(SparseVec::from_dense(v));
}

bool Subspace::same_span(const Subspace& other) const {
  if (ambient_dim != other.ambient_dim) return false;
  Echelon a(ambient_dim);
  for (const auto& b : basis) a.insert(SparseVec::from_dense(b));
  Echelon both = a;
  for (const auto& b : other.basis) both.insert(SparseVec::from_dense(b));
  Echelon c(ambient_dim);
  for (const auto& b : other.basis) c.insert(SparseVec::from_dense(b));
  return a.rank() == both.rank() && c.rank() == both.rank();
}

Solver::Solver(const Matrix& a) : cols_(a.cols()), ech_(a.rows()) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    SparseVec tag = SparseVec::unit(c);
    ech_.insert(a.column(c), &tag);
  }
}

std::optional<SparseVec> Solver::solve(const SparseVec& b) const {
  SparseVec v = b, tag;
  if (!ech_.reduce(v, &tag)) return std::nullopt;
  // b + A·tag = 0
  tag.scale(Scalar(-1));
  return tag;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("only square matrices are invertible");
  Solver s(m);
  Matrix inv(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j) {
    auto x = s.solve(SparseVec::unit(j));
    if (!x) throw DimensionError("matrix is singular");
    inv.set_column(j, std::move(*x));
  }
  return inv;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum length mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference length mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace jdeform
