#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jdeform/dgla.hpp"

namespace jdeform {

struct JacobiOptions {
  std::size_t max_basis = kDefaultMaxBasis;
  /// Total degrees kept; everything when unset. Cohomology is exact in the
  /// interior of the window.
  std::optional<std::pair<int, int>> window;
  unsigned threads = 1;
};

/// J_n(L): words of length 1..n in the symmetric algebra on L[1]. An element
/// of λ^p of internal degree q sits in total degree q - p. The basis of
/// `total` is the divided-power basis e_a = m_a / a!, where m_a is a normal
/// monomial and a! the product of the factorials of its multiplicities; in
/// this basis ε(u) has coordinates that are plain products.
struct JacobiComplex {
  std::size_t order = 0;
  DGLA L;
  std::shared_ptr<const MonomialAlgebra> alg;
  MonomialIndex basis;  // sorted by length
  Complex total;
  std::pair<int, int> window{0, 0};

  std::size_t length(std::size_t i) const { return basis[i].size(); }
  /// Global indices of λ^p.
  std::vector<std::size_t> term(std::size_t p) const;
  /// The part of the total differential λ^p -> λ^{p-1} (bracket part).
  Matrix external(std::size_t p) const;
  /// The part λ^p -> λ^p induced by d (internal differential).
  Matrix internal(std::size_t p) const;
  /// Dimension of λ^p in total degree k.
  std::size_t dim(std::size_t p, int k) const;
};

/// Throws PreconditionError if L fails check_dgla, ResourceError if a basis
/// exceeds the cap.
JacobiComplex build_jacobi(const DGLA& L, std::size_t n, const JacobiOptions& opts = {});

/// Differential of a monomial in the monomial basis: internal part from d,
/// external part the coderivation extending the bracket.
std::vector<std::pair<Scalar, Monomial>> jacobi_differential(const MonomialAlgebra& alg, const DGLA& L,
                                                             const Monomial& m);

/// V = ℍ⁰(J_n) with representatives, the filtration by images of ℍ⁰(J_i),
/// and the symbol map.
struct OSData {
  std::size_t order = 0;
  std::vector<std::size_t> support;  // global indices of J^0
  std::vector<SparseVec> reps;       // cocycles in J^0-local coordinates
  std::vector<std::size_t> level;    // smallest i with reps[l] in J_i
  std::vector<std::size_t> filtration;  // dim V^i for i = 1..n
  std::vector<std::string> names;
  /// Rows a * dim + b, columns l: coefficient of v_a ⊗ v_b in σ(v_l).
  Matrix sigma;
  bool hypothesis = true;  // ℍ^{<=0}(L) = 0
  std::shared_ptr<const RelativeCoordinates> coords;

  std::size_t dim() const { return reps.size(); }
  /// V-coordinates of a degree-0 cocycle given in global coordinates.
  SparseVec class_of(const SparseVec& cocycle) const;
};

OSData jacobi_h0(const JacobiComplex& J);

/// Exponent vector of a monomial in a polynomial ring.
using Exponents = std::vector<unsigned>;

/// All exponent vectors of total degree n in h variables, in lexicographic
/// order with the first variable's exponent descending.
std::vector<Exponents> sym_basis(std::size_t h, std::size_t n);

struct ObstructionLevel {
  std::size_t n = 0;
  std::vector<Exponents> sym;  // basis of Sym^n H¹
  Matrix big;                  // Ob_n : Sym^n H¹ -> ℍ¹(J_{n-1})
  Matrix iota;                 // H²(L) -> ℍ¹(J_{n-1})
  Subspace small_domain;       // K^{n-1}·H¹ inside Sym^n H¹
  Matrix small;                // ob_n : small_domain -> H²(L), columns = domain basis
  Subspace kernel_big;         // K^n = ker Ob_n
  Subspace kernel_small;       // ker ob_n, in Sym^n coordinates
};

struct ObstructionData {
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  Subspace k1;  // K¹ = H¹
  std::vector<ObstructionLevel> levels;  // n = 2..n_max
};

/// Requires ℍ^{<=0}(L) = 0 (PreconditionError otherwise).
ObstructionData obstruction_tower(const DGLA& L, std::size_t n_max, const JacobiOptions& opts = {});

/// Product of degree-1 cohomology representatives z^c as a vector in the
/// divided-power coordinates of J (global indices).
SparseVec sym_product(const JacobiComplex& J, const std::vector<Vec>& z, const Exponents& c);

}  // namespace jdeform
