#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "jdeform/artin.hpp"

namespace jdeform {

/// Element of V ⊗ m: one m-coordinate vector per basis vector of V.
using Tensor = std::vector<SparseVec>;
using BracketFn = std::function<Tensor(const Tensor&, const Tensor&)>;

Tensor tensor_zero(std::size_t dim);
void tensor_axpy(Tensor& y, const Scalar& a, const Tensor& x);
bool tensor_is_zero(const Tensor& x);
/// (M x)_i = Σ_j M_ij x_j.
Tensor tensor_apply(const Matrix& m, const Tensor& x);
/// Pushes every coefficient through a map of m's.
Tensor tensor_map_coeffs(const Matrix& phi, const Tensor& x);

/// [a ⊗ μ, b ⊗ ν] = [a,b] ⊗ μν. Coefficients sit in degree 0, so no sign.
Tensor tensor_bracket(const DGLA& L, const ArtinAlgebra& R, const Tensor& x, const Tensor& y);
Tensor tensor_bracket(const LieAlgebra& g, const ArtinAlgebra& R, const Tensor& x, const Tensor& y);

// ------------------------------------------------------------------ BCH

constexpr std::size_t kMaxBchOrder = 5;

/// log(exp a exp b) = Σ c_w [[w_1,w_2],...,w_k] over words w in
/// {a = 0, b = 1} of length <= 5.
struct BchTerm {
  std::vector<int> word;
  Scalar coef;
};
const std::vector<BchTerm>& bch_terms();

/// Truncated at words of length <= order (PreconditionError above 5).
Tensor bch(const Tensor& a, const Tensor& b, std::size_t order, const BracketFn& br);
/// Order defaults to the nilpotency exponent of R.
Tensor bch(const LieAlgebra& g, const ArtinAlgebra& R, const Tensor& a, const Tensor& b,
           std::optional<std::size_t> order = {});
Tensor bch(const DGLA& L, const ArtinAlgebra& R, const Tensor& a, const Tensor& b,
           std::optional<std::size_t> order = {});

// ------------------------------------------------------------ MC elements

struct MCElement {
  DGLA L;
  ArtinAlgebra R;
  Tensor u;  // size L.dim(), supported on degree 1
};

/// DimensionError unless u has the right shape, degree 1 and m-coefficients.
void validate(const MCElement& u);
/// du + ½[u,u] in L² ⊗ m.
Tensor mc_residual(const MCElement& u);
Report mc_check(const MCElement& u);
/// φ_* u for a local homomorphism φ : u.R -> S.
MCElement pullback(const RingHom& phi, const MCElement& u);

// ------------------------------------------------------- hypercochains

/// Element of J_n ⊗ m: rows are the global basis of J, columns m.
struct Hypercochain {
  std::shared_ptr<const JacobiComplex> J;
  ArtinAlgebra R;
  Matrix coeffs;

  std::size_t order() const { return J->order; }
};

/// Jacobi complex with the window [-1, 1] used by every hypercochain.
std::shared_ptr<const JacobiComplex> hyper_jacobi(const DGLA& L, std::size_t n, const JacobiOptions& opts = {});

/// ε(u) = (u, u²/2, ..., uⁿ/n!) in divided-power coordinates.
Hypercochain epsilon(const MCElement& u, std::shared_ptr<const JacobiComplex> J);
Hypercochain epsilon(const MCElement& u, std::size_t n);

/// Total differential vanishes; the witness names the lowest bidegree
/// (λ^p, L-degree) carrying a nonzero entry.
Report hypercocycle_check(const Hypercochain& v);

struct EpsilonRepresentative {
  std::optional<MCElement> u;
  Report report;
};

/// u with ε(u) - v a total coboundary, solved order by order along the
/// m-adic filtration. Requires ℍ^{<=0}(L) = 0.
EpsilonRepresentative epsilon_representative(const Hypercochain& v);

// ------------------------------------------------------ Kodaira-Spencer

/// Everything about ℍ⁰(J_n(L)) the classifying map needs; build once and
/// reuse across many MC elements.
struct KSContext {
  std::shared_ptr<const JacobiComplex> J;
  OSData os;
  OSStructure structure;
  ArtinAlgebra ring;
};
KSContext ks_context(const DGLA& L, std::size_t n, const JacobiOptions& opts = {});

/// Class of a degree-0 hypercocycle in m ⊗ ℍ⁰(J_n), as a morphic candidate.
MorphicElement hypercocycle_class(const Hypercochain& v, const KSContext& ctx);

struct KodairaSpencer {
  MorphicElement element;
  RingHom hom;  // R^u_n -> R
};

KodairaSpencer kodaira_spencer(const MCElement& u, const KSContext& ctx);
KodairaSpencer kodaira_spencer(const MCElement& u, std::size_t n, const JacobiOptions& opts = {});

/// The universal MC element over ring_of(L, n).
MCElement mc_solve(const DGLA& L, std::size_t n, const JacobiOptions& opts = {});

// ------------------------------------------------- Čech group calculus

/// Linear action of a DGLA (or of a Lie algebra in degree 0) on a complex.
struct ModuleAction {
  Complex E;
  std::vector<Matrix> rho;  // one per basis vector of the acting algebra
};

/// A Lie algebra as a DGLA concentrated in degree 0.
DGLA lie_as_dgla(const LieAlgebra& g);

Report check_action(const DGLA& L, const ModuleAction& act);
bool is_faithful(const ModuleAction& act);

/// Exp-coordinates u_{αβ} ∈ g ⊗ m on the edges of a Čech model, valued at
/// the fiber of α.
struct GroupCochain {
  std::shared_ptr<const CechModel> model;
  ArtinAlgebra R;
  std::map<std::pair<std::size_t, std::size_t>, Tensor> u;
  /// Optional faithful action of g for the operator form.
  std::optional<ModuleAction> action;
};

GroupCochain group_cochain(std::shared_ptr<const CechModel> model, const MCElement& u);
MCElement mc_element(const GroupCochain& D);

/// bch(u_{αβ}, T_{αβ} u_{βγ}) = u_{αγ} on every 2-simplex; with an action
/// also exp ρ(u_{αβ}) exp ρ(u_{βγ}) = exp ρ(u_{αγ}) (trivial transport only).
Report group_cocycle_check(const GroupCochain& D);

/// D'_{αβ} = A_α D_{αβ} A_β^{-1} with A_α = exp(w_α):
/// u'_{αβ} = bch(w_α, bch(u_{αβ}, -T_{αβ} w_β)). w has one g ⊗ m entry per vertex.
MCElement gauge_act(const CechModel& model, const std::vector<Tensor>& w, const MCElement& u);

// ----------------------------------------------- matrices over R

/// Element of End(E) ⊗ R: one matrix per basis vector of R (index 0 is the unit).
struct RMatrix {
  std::vector<Matrix> part;

  static RMatrix scalar(const ArtinAlgebra& R, const Matrix& m);
  bool is_zero() const;
};
RMatrix operator+(const RMatrix& a, const RMatrix& b);
RMatrix multiply(const ArtinAlgebra& R, const RMatrix& a, const RMatrix& b);
/// ρ(x) for x ∈ L ⊗ m.
RMatrix act(const ArtinAlgebra& R, const ModuleAction& a, const Tensor& x);
/// exp of an element of End(E) ⊗ m (terminates by nilpotence of m).
RMatrix exp_nilpotent(const ArtinAlgebra& R, const RMatrix& x);

struct DeformedComplex {
  ArtinAlgebra R;
  Complex E;
  RMatrix d;  // d_E ⊗ 1 + ρ(u)
  Report square;
};

DeformedComplex deformed_differential(const MCElement& u, const ModuleAction& act);

}  // namespace jdeform
