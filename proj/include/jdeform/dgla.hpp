#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jdeform/graded.hpp"

namespace jdeform {

/// Finite-dimensional DGLA by structure constants. The bracket table is
/// stored for every ordered pair so that check_dgla can test antisymmetry
/// of data that came from outside.
class DGLA {
 public:
  DGLA() = default;
  explicit DGLA(Complex c);

  const Complex& complex() const { return c_; }
  const GradedSpace& space() const { return c_.space; }
  const Matrix& d() const { return c_.d; }
  std::size_t dim() const { return c_.space.dim(); }
  int degree(std::size_t i) const { return c_.space.degree(i); }

  const SparseVec& bracket(std::size_t a, std::size_t b) const { return br_[a * dim() + b]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  /// Sets [a,b] and fills [b,a] by graded antisymmetry.
  void set_bracket(std::size_t a, std::size_t b, SparseVec v);
  /// Sets one orientation only.
  void set_bracket_raw(std::size_t a, std::size_t b, SparseVec v);
  bool abelian() const;

 private:
  Complex c_;
  std::vector<SparseVec> br_;
};

Report check_dgla(const DGLA& l);

/// The sub-DGLA of degrees >= 1.
DGLA truncate_positive(const DGLA& l);

/// True when H^k(L) = 0 for every k <= 0.
bool h_nonpositive_vanishes(const DGLA& l);

// ------------------------------------------------------------- Čech model

/// Ordinary (degree-0) Lie algebra by structure constants.
struct LieAlgebra {
  std::vector<std::string> names;
  std::vector<SparseVec> table;  // [a,b] at a * dim + b

  std::size_t dim() const { return names.size(); }
  const SparseVec& bracket(std::size_t a, std::size_t b) const { return table[a * dim() + b]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  /// Sets [a,b] = v and [b,a] = -v.
  void set(std::size_t a, std::size_t b, const SparseVec& v);
  /// Lie algebra automorphism test: invertible and bracket-preserving.
  bool is_automorphism(const Matrix& t) const;
};

LieAlgebra abelian_lie(std::size_t dim);
/// Strictly upper-triangular 3x3 matrices: e12, e23, e13 with [e12,e23] = e13.
LieAlgebra heisenberg_lie();

/// Simplicial complex on vertices 0..n-1; simplices are increasing vertex
/// lists of dimension 1..3, closed under faces.
struct Nerve {
  std::size_t vertices = 0;
  std::vector<std::vector<std::size_t>> simplices;
};

Nerve triangle_nerve();               // boundary of a 2-simplex
Nerve tetrahedron_boundary_nerve();  // boundary of a 3-simplex
Nerve interval_nerve();               // two opens, one overlap

/// Monodromy on edges outside the canonical spanning tree.
struct LocalSystem {
  LieAlgebra g;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> monodromy;
};

/// Čech DGLA of a locally constant sheaf of Lie algebras. Cochains on
/// (v0 < ... < vk) take values in the fiber at v0; T(i,j) transports the
/// fiber at j to the fiber at i.
struct CechModel {
  DGLA dgla;
  Nerve nerve;
  LieAlgebra g;
  std::vector<std::vector<std::vector<std::size_t>>> simplices;  // by dimension
  std::map<std::vector<std::size_t>, std::size_t> offset;          // first generator of a simplex
  std::map<std::pair<std::size_t, std::size_t>, Matrix> transport;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  std::size_t generator(const std::vector<std::size_t>& simplex, std::size_t basis) const {
    return offset.at(simplex) + basis;
  }
  const Matrix& T(std::size_t i, std::size_t j) const { return transport.at({i, j}); }
};

/// Builds the model; throws ModelError on bad nerves, monodromy on tree
/// edges, non-automorphisms or non-flat data, and runs check_dgla on the
/// result (the symmetrized cup bracket is a Lie bracket only for suitable
/// g, e.g. abelian or two-step nilpotent).
CechModel cech_dgla(const Nerve& nerve, const LocalSystem& data);

}  // namespace jdeform
