#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jdeform/linalg.hpp"
#include "jdeform/report.hpp"

namespace jdeform {

struct Generator {
  std::string name;
  int degree = 0;
};

/// Graded vector space with named basis; the basis order is the global
/// order used everywhere else.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<Generator> gens);

  std::size_t dim() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Generator>& generators() const { return gens_; }
  int degree(std::size_t i) const { return gens_[i].degree; }
  std::vector<int> degrees() const;
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::vector<std::size_t> indices_in_degree(int k) const;
  int min_degree() const;
  int max_degree() const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, std::size_t> index_;
};

/// Finite cochain complex: column j of `d` is the image of basis element j.
struct Complex {
  GradedSpace space;
  Matrix d;

  /// d_k : C^k -> C^{k+1} in degree-local coordinates.
  Matrix block(int k) const;
};

Report check_complex(const Complex& c);

/// Cohomology in one degree with cocycle representatives (global
/// coordinates) chosen greedily from the kernel basis in pivot order.
struct Cohomology {
  int degree = 0;
  std::vector<std::size_t> support;  // global indices of C^degree
  std::vector<Vec> representatives;  // length space.dim()
  std::shared_ptr<const RelativeCoordinates> coords;  // local coordinates

  std::size_t dim() const { return representatives.size(); }
  /// Class coordinates of a cocycle given in global coordinates.
  Vec class_of(const Vec& cocycle) const;
};

Cohomology cohomology(const Complex& c, int k);

// --------------------------------------------------------------- monomials

/// Commutation rules for the symmetric-type algebras built on a graded
/// space. `Graded`: graded-alternating (λ), swap costs -(-1)^{|a||b|}.
/// `Koszul`: graded-symmetric (σ), swap costs (-1)^{|a||b|}.
/// `Shifted`: symmetric algebra on the desuspension, swap costs
/// (-1)^{(|a|-1)(|b|-1)}; this is the λ of the Jacobi complex.
enum class SignRule { Graded, Koszul, Shifted };

using Monomial = std::vector<std::uint32_t>;

class MonomialAlgebra {
 public:
  /// Factors are ordered by (degree, name); without names by (degree, index).
  MonomialAlgebra(std::vector<int> degrees, SignRule rule, const std::vector<std::string>& names = {});
  MonomialAlgebra(const GradedSpace& space, SignRule rule);

  SignRule rule() const { return rule_; }
  std::size_t generators() const { return deg_.size(); }
  int degree(std::uint32_t g) const { return deg_[g]; }
  int swap_sign(std::uint32_t a, std::uint32_t b) const;
  int derivation_sign(std::uint32_t g) const;
  bool repeatable(std::uint32_t g) const { return swap_sign(g, g) == 1; }
  /// Internal degree (Graded/Koszul) or desuspended degree (Shifted).
  int weight(const Monomial& m) const;

  /// Sorts a word into normal form; returns the sign, or 0 if the word
  /// vanishes (a non-repeatable factor occurs twice).
  int normalize(Monomial& word) const;
  /// Product of two normal forms.
  int multiply(const Monomial& a, const Monomial& b, Monomial& out) const;

  /// All normal-form monomials of length p, optionally restricted to a
  /// weight window [lo, hi].
  std::vector<Monomial> basis(std::size_t p, std::optional<std::pair<int, int>> window = {}) const;
  /// Number of normal-form monomials of length p (saturating).
  double count(std::size_t p) const;

  /// Product of factorials of the multiplicities.
  Scalar repetition_factorial(const Monomial& m) const;

  struct Split {
    Scalar coef;
    Monomial left;
    Monomial right;
  };
  /// Unshuffle coproduct of a monomial into pieces of lengths
  /// (i, p - i) for 1 <= i < p (all i when `left_len` is 0). With
  /// `normalized` each sub-multiset occurs once; otherwise every choice of
  /// positions counts (integral coproduct).
  std::vector<Split> unshuffle(const Monomial& m, std::size_t left_len, bool normalized) const;

  std::string name(const Monomial& m, const GradedSpace& space) const;

 private:
  std::vector<int> deg_;
  std::vector<std::uint32_t> rank_;  // position in the factor order
  SignRule rule_;
};

/// Terms of the derivation extending `d` (column j = image of generator j)
/// to a monomial, Leibniz signs from the left; vanishing terms dropped.
std::vector<std::pair<Scalar, Monomial>> apply_derivation(const MonomialAlgebra& alg, const Matrix& d,
                                                          const Monomial& m);

/// Index lookup for a list of monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> basis);
  std::size_t size() const { return basis_.size(); }
  const Monomial& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// ----------------------------------------------------------------- powers

struct PowerComplex {
  Complex complex;
  MonomialIndex basis;
};

struct TensorPower {
  Complex complex;
  std::vector<std::vector<std::uint32_t>> tuples;
  /// Signed action of the adjacent transpositions (i, i+1).
  std::vector<Matrix> transpositions;
};

/// Default cap on power bases.
inline constexpr std::size_t kDefaultMaxBasis = 100000;

TensorPower tensor_power(const Complex& c, std::size_t n, std::size_t max_basis = kDefaultMaxBasis);
PowerComplex graded_alternating_power(const Complex& c, std::size_t n,
                                      std::size_t max_basis = kDefaultMaxBasis);
PowerComplex graded_symmetric_power(const Complex& c, std::size_t n,
                                    std::size_t max_basis = kDefaultMaxBasis);

struct Coproduct {
  MonomialIndex source;
  MonomialIndex left;
  MonomialIndex right;
  /// rows indexed by left * right.size() + right
  Matrix map;
};

/// λ^n(C) -> λ^i(C) ⊗ λ^{n-i}(C), integral unshuffles with Koszul signs.
Coproduct unshuffle_coproduct(const Complex& c, std::size_t n, std::size_t i);

}  // namespace jdeform
