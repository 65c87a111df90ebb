#pragma once

#include <string>
#include <vector>

#include "jdeform/jacobi.hpp"

namespace jdeform {

/// R = C ⊕ m with a fixed ordered basis t_0.. of m. levels[l] is the
/// largest i with t_l in m_i (so m_i is spanned by the t_l of level >= i);
/// levels are nondecreasing.
struct ArtinAlgebra {
  std::vector<std::string> names;
  std::vector<std::size_t> levels;
  std::size_t exponent = 0;
  std::vector<SparseVec> mult;  // t_a t_b at a * dim + b, in m-coordinates

  std::size_t dim() const { return names.size(); }
  const SparseVec& product(std::size_t a, std::size_t b) const { return mult[a * dim() + b]; }
  /// Product of two elements of m.
  SparseVec mul(const SparseVec& x, const SparseVec& y) const;
};

/// Elements of R itself: index 0 is the unit, index 1 + l is t_l.
SparseVec ring_mul(const ArtinAlgebra& R, const SparseVec& x, const SparseVec& y);
SparseVec ring_from_m(const SparseVec& m_coords);
SparseVec m_part(const SparseVec& ring_elem);

/// C[t]/(t^{n+1}) with basis t, t², ..., tⁿ.
ArtinAlgebra truncated_polynomial(std::size_t n, const std::string& var = "t");

/// Basis of m^k (in m-coordinates).
Subspace power_of_m(const ArtinAlgebra& R, std::size_t k);

/// C[t_1..t_k]/(m^{n+1} + killed monomials); basis monomials by degree,
/// then first exponent descending; levels = degree.
ArtinAlgebra monomial_quotient(const std::vector<std::string>& vars, std::size_t n,
                               const std::vector<Exponents>& killed = {});

/// A basis of m adapted to the m-adic filtration: column j of P is a basis
/// vector lying in m^{level[j]} and not in m^{level[j]+1}.
struct AdicBasis {
  Matrix P;
  Matrix Pinv;
  std::vector<std::size_t> level;
};
AdicBasis adic_basis(const ArtinAlgebra& R);
/// Smallest e with m^{e+1} = 0.
std::size_t nilpotency(const ArtinAlgebra& R);

Report check_artin(const ArtinAlgebra& R);
/// m_i = m^i for every i.
bool is_standard(const ArtinAlgebra& R);

/// Filtered space with symbol map σ : V -> V ⊗ V. levels[l] is the smallest
/// i with v_l in V^i; nondecreasing.
struct OSStructure {
  std::vector<std::string> names;
  std::vector<std::size_t> levels;
  std::size_t order = 0;
  Matrix sigma;  // rows a * dim + b, columns l

  std::size_t dim() const { return names.size(); }
};

Report check_os(const OSStructure& os);
bool is_standard(const OSStructure& os);

OSStructure os_structure(const OSData& data);

/// Prop 1.1 in both directions. Labels are shared by a basis and its dual.
ArtinAlgebra os_to_algebra(const OSStructure& os);
OSStructure algebra_to_os(const ArtinAlgebra& R);

bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b);
bool operator==(const OSStructure& a, const OSStructure& b);

/// v = Σ_l μ_l ⊗ v'_l in m_R ⊗ V'; mu[l] in m-coordinates of R.
struct MorphicElement {
  ArtinAlgebra R;
  OSStructure target;
  std::vector<SparseVec> mu;
};

/// Checks (id ⊗ σ')(v) = v·v and the tower condition μ_l ∈ m^{level(l)}.
Report morphic_check(const MorphicElement& v);

/// Local homomorphism η : R' -> R as a matrix m' -> m (column l = η(t'_l)).
struct RingHom {
  ArtinAlgebra source;
  ArtinAlgebra target;
  Matrix map;

  SparseVec apply_m(const SparseVec& x) const { return map.apply(x); }
  /// On ring elements (unit index 0).
  SparseVec apply(const SparseVec& x) const;
};

RingHom morphic_to_hom(const MorphicElement& v);
/// Multiplicativity and η(m'_i) ⊆ m_i.
Report check_ring_hom(const RingHom& h);
RingHom compose(const RingHom& outer, const RingHom& inner);
RingHom identity_hom(const ArtinAlgebra& R);
/// φ_* v: push every coefficient through φ.
MorphicElement push_forward(const RingHom& phi, const MorphicElement& v);

struct UniversalRing {
  ArtinAlgebra R;
  OSData os;
  /// R_n -> R_{n-1}; present when n >= 2 and requested.
  std::optional<RingHom> reduction;
};

/// ring_of(L, n). Requires ℍ^{<=0}(L) = 0.
UniversalRing ring_of(const DGLA& L, std::size_t n, const JacobiOptions& opts = {}, bool with_reduction = false);

/// The projection R -> R/m^k.
RingHom quotient_by_power(const ArtinAlgebra& R, std::size_t k);

/// Best-effort polynomial-quotient description (flagged in reports).
std::string describe(const ArtinAlgebra& R);

}  // namespace jdeform
