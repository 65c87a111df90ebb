#pragma once
// Shared fixtures and random model generators for the test binaries.

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "jdeform/dgla.hpp"

namespace jdeform::testing {

inline DGLA make_dgla(std::vector<Generator> gens, std::vector<std::tuple<int, int, Scalar>> d = {},
                      std::vector<std::tuple<int, int, int, Scalar>> br = {}) {
  Complex c;
  c.space = GradedSpace(std::move(gens));
  c.d = Matrix(c.space.dim(), c.space.dim());
  for (auto& [s, t, v] : d) c.d.add(t, s, v);
  DGLA l(std::move(c));
  std::map<std::pair<int, int>, SparseVec> acc;
  for (auto& [a, b, t, v] : br) acc[{a, b}].add(t, v);
  for (auto& [ab, v] : acc) l.set_bracket(ab.first, ab.second, v);
  return l;
}

/// One generator x in degree 1, everything zero.
inline DGLA e1() { return make_dgla({{"x", 1}}); }

/// x in degree 1, y in degree 2, [x,x] = y.
inline DGLA e2() { return make_dgla({{"x", 1}, {"y", 2}}, {}, {{0, 0, 1, Scalar(1)}}); }

/// x1, x2 in degree 1, y in degree 2, [x1,x2] = y.
inline DGLA e2prime() { return make_dgla({{"x1", 1}, {"x2", 1}, {"y", 2}}, {}, {{0, 1, 2, Scalar(1)}}); }

inline Scalar small_scalar(std::mt19937& rng, int bound = 2) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return Scalar(d(rng));
}

/// Invertible, degree-preserving change of basis: P e_j is the new j-th
/// basis vector. Unit upper-triangular within each degree.
inline Matrix random_basis_change(std::mt19937& rng, const GradedSpace& s) {
  Matrix p = Matrix::identity(s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (s.degree(i) == s.degree(j) && rng() % 2 == 0) p.set(i, j, small_scalar(rng));
  return p;
}

inline Matrix inverse(const Matrix& p) {
  Matrix inv(p.rows(), p.cols());
  for (std::size_t j = 0; j < p.cols(); ++j) {
    auto x = solve_linear(p, SparseVec::unit(j).to_dense(p.rows()));
    inv.set_column(j, SparseVec::from_dense(*x));
  }
  return inv;
}

/// The same DGLA in the basis given by the columns of P.
inline DGLA change_basis(const DGLA& l, const Matrix& p) {
  Matrix pi = inverse(p);
  Complex c;
  c.space = l.space();
  c.d = pi * l.d() * p;
  DGLA out(std::move(c));
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b)
      out.set_bracket_raw(a, b, pi.apply(l.bracket(p.column(a), p.column(b))));
  return out;
}

/// Random DGLA of dimension <= 6 with degrees in {0,1,2}. Two families:
/// (a) g ⊗ A with g two-dimensional and A = <1, a, s> (|a| = 1, |s| = 2,
/// da = λs, all products with a or s vanishing except 1·-);
/// (b) L⁰ --d--> L¹ --d--> L² with a random symmetric bracket on a
/// complement of d(L⁰) landing in L². Both then get a random basis change.
inline DGLA random_dgla(std::mt19937& rng) {
  DGLA base;
  if (rng() % 2 == 0) {
    // g: [e1,e2] = α e2 (α ∈ {0,1}); basis e_i ⊗ {1, a, s}
    Scalar alpha(static_cast<long>(rng() % 2));
    Scalar lambda = small_scalar(rng);
    std::vector<Generator> gens = {{"e1", 0}, {"e2", 0}, {"e1a", 1}, {"e2a", 1}, {"e1s", 2}, {"e2s", 2}};
    std::vector<std::tuple<int, int, Scalar>> d = {{2, 4, lambda}, {3, 5, lambda}};
    std::vector<std::tuple<int, int, int, Scalar>> br;
    if (!alpha.is_zero()) {
      br.push_back({0, 1, 1, alpha});  // [e1,e2] = e2
      br.push_back({0, 3, 3, alpha});  // [e1, e2 a] = e2 a
      br.push_back({0, 5, 5, alpha});
      br.push_back({1, 2, 3, -alpha});  // [e2, e1 a] = -e2 a
      br.push_back({1, 4, 5, -alpha});
    }
    base = make_dgla(gens, d, br);
  } else {
    std::size_t a = rng() % 2;              // dim L⁰
    std::size_t r = 1 + rng() % 2;          // complement in L¹
    std::size_t k = 1 + rng() % 2;          // dim L²
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < a; ++i) gens.push_back({"u" + std::to_string(i), 0});
    for (std::size_t i = 0; i < a; ++i) gens.push_back({"f" + std::to_string(i), 1});
    for (std::size_t i = 0; i < r; ++i) gens.push_back({"g" + std::to_string(i), 1});
    for (std::size_t i = 0; i < k; ++i) gens.push_back({"w" + std::to_string(i), 2});
    std::vector<std::tuple<int, int, Scalar>> d;
    for (std::size_t i = 0; i < a; ++i) d.push_back({int(i), int(a + i), Scalar(1)});
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (rng() % 3 == 0) d.push_back({int(2 * a + i), int(2 * a + r + j), small_scalar(rng)});
    std::vector<std::tuple<int, int, int, Scalar>> br;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j)
        for (std::size_t t = 0; t < k; ++t)
          if (rng() % 2 == 0) br.push_back({int(2 * a + i), int(2 * a + j), int(2 * a + r + t), small_scalar(rng)});
    base = make_dgla(gens, d, br);
  }
  return change_basis(base, random_basis_change(rng, base.space()));
}

}  // namespace jdeform::testing
