#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jdeform/scalar.hpp"

namespace jdeform {

using Vec = std::vector<Scalar>;

/// Error for shape mismatches between matrices, vectors and subspaces.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse vector with entries sorted by index; zeros are never stored.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  static SparseVec unit(std::size_t i, Scalar v = Scalar(1));
  static SparseVec from_dense(const Vec& v);
  Vec to_dense(std::size_t n) const;

  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  std::size_t leading() const { return e_.front().first; }
  const Scalar& leading_value() const { return e_.front().second; }

  Scalar get(std::size_t i) const;
  void add(std::size_t i, const Scalar& v);
  /// this += a * x
  void axpy(const Scalar& a, const SparseVec& x);
  void scale(const Scalar& a);
  /// Appends an entry; indices must be pushed in increasing order.
  void push_back(std::size_t i, Scalar v);

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

 private:
  std::vector<Entry> e_;
};

/// Column-major sparse matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), col_(cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  const SparseVec& column(std::size_t c) const { return col_[c]; }
  void set_column(std::size_t c, SparseVec v);

  SparseVec apply(const SparseVec& x) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::vector<Vec> to_dense() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> col_;
};

/// A coordinate subspace given by a linearly independent basis.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const;
  /// Equality as subspaces (not as bases).
  bool same_span(const Subspace& other) const;
};

/// Incremental row echelon form with optional tracking of how each stored
/// row was combined from tagged inputs. The pivot of a stored row is its
/// leading index and the row is scaled so the pivot entry is 1.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v (and tag alongside) against the stored rows. Returns true
  /// when v became zero.
  bool reduce(SparseVec& v, SparseVec* tag = nullptr) const;
  /// Inserts v. Returns false if v was dependent; then *tag (if given)
  /// holds the vanishing combination.
  bool insert(SparseVec v, SparseVec* tag = nullptr);
  bool contains(SparseVec v) const { return reduce(v); }

 private:
  std::size_t dim_;
  std::map<std::size_t, std::size_t> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> tags_;
};

struct RankKernelImage {
  std::size_t rank = 0;
  Subspace kernel;
  Subspace image;
  std::vector<std::size_t> pivot_columns;
};

/// Rank, kernel and image of M by exact column elimination. Kernel vectors
/// correspond to non-pivot columns in increasing order; image basis is the
/// set of pivot columns of M.
RankKernelImage rank_kernel_image(const Matrix& m);

/// The kernel basis of rank_kernel_image as sparse vectors.
std::vector<SparseVec> kernel_sparse(const Matrix& m);

/// Rank only; cheaper than rank_kernel_image for large matrices.
std::size_t rank(const Matrix& m);

/// Some x with Mx = b (free variables set to zero), or nullopt.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

struct Quotient {
  std::vector<Vec> representatives;
  Matrix projection;  // dim quotient x ambient
};

/// Complement representatives are the unit vectors e_0, e_1, ... kept
/// greedily when independent of sub and the previously kept ones.
Quotient quotient_and_dual(std::size_t ambient_dim, const Subspace& sub);

/// Coordinates relative to a decomposition W = B + span(reps): the
/// returned vector gives the rep-coefficients of v modulo B. Vectors
/// outside B + span(reps) are reduced anyway; `inside` reports whether
/// the remainder vanished.
class RelativeCoordinates {
 public:
  RelativeCoordinates(std::size_t ambient_dim, const std::vector<SparseVec>& spanning_b,
                      const std::vector<SparseVec>& reps);
  std::size_t count() const { return count_; }
  /// Appends a representative if it is independent modulo B and the
  /// previous ones; returns whether it was kept.
  bool add_rep(const SparseVec& v);
  SparseVec coordinates(const SparseVec& v, bool* inside = nullptr) const;

 private:
  Echelon ech_;
  std::size_t count_;
};

/// Inverse of a square matrix; DimensionError if singular.
Matrix invert(const Matrix& m);

/// Solves A x = b for many right-hand sides against one elimination.
class Solver {
 public:
  explicit Solver(const Matrix& a);
  std::optional<SparseVec> solve(const SparseVec& b) const;

 private:
  std::size_t cols_;
  Echelon ech_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
bool is_zero(const Vec& v);

}  // namespace jdeform
