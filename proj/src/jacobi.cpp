#include "jdeform/jacobi.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace jdeform {

namespace {

SparseVec from_map(const std::map<std::size_t, Scalar>& m) {
  SparseVec v;
  for (const auto& [i, x] : m) {
    if (!x.is_zero()) v.push_back(i, x);
  }
  return v;
}

// Runs body(i) for i in [0, n) on up to `threads` workers; results are
// written by index so the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F body) {
  if (threads <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::size_t local_index(const std::vector<std::size_t>& support, std::size_t global) {
  auto it = std::lower_bound(support.begin(), support.end(), global);
  if (it == support.end() || *it != global) return SIZE_MAX;
  return static_cast<std::size_t>(it - support.begin());
}

}  // namespace

std::vector<std::pair<Scalar, Monomial>> jacobi_differential(const MonomialAlgebra& alg, const DGLA& L,
                                                             const Monomial& m) {
  auto out = apply_derivation(alg, L.d(), m);
  const std::size_t p = m.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const SparseVec& br = L.bracket(m[i], m[j]);
      if (br.empty()) continue;
      // sign of moving factors i and j to the front
      int s = 1;
      for (std::size_t k = 0; k < i; ++k) s *= alg.swap_sign(m[k], m[i]);
      for (std::size_t k = 0; k < j; ++k) {
        if (k != i) s *= alg.swap_sign(m[k], m[j]);
      }
      if (L.degree(m[i]) % 2 == 0) s = -s;
      Monomial rest;
      for (std::size_t k = 0; k < p; ++k) {
        if (k != i && k != j) rest.push_back(m[k]);
      }
      for (const auto& [t, v] : br) {
        Monomial w{static_cast<std::uint32_t>(t)};
        w.insert(w.end(), rest.begin(), rest.end());
        int sg = alg.normalize(w);
        if (sg == 0) continue;
        out.emplace_back(Scalar(s * sg) * v, std::move(w));
      }
    }
  }
  return out;
}

JacobiComplex build_jacobi(const DGLA& L, std::size_t n, const JacobiOptions& opts) {
  if (n == 0) throw std::invalid_argument("Jacobi order must be at least 1");
  Report r = check_dgla(L);
  if (!r.pass) throw PreconditionError("input is not a DGLA: " + r.message);

  JacobiComplex J;
  J.order = n;
  J.L = L;
  J.alg = std::make_shared<const MonomialAlgebra>(L.space(), SignRule::Shifted);
  const MonomialAlgebra& alg = *J.alg;

  std::vector<Monomial> all;
  for (std::size_t p = 1; p <= n; ++p) {
    if (!opts.window && alg.count(p) > static_cast<double>(opts.max_basis)) {
      throw ResourceError("λ^" + std::to_string(p) + " has more than " + std::to_string(opts.max_basis) +
                          " basis elements");
    }
    auto b = alg.basis(p, opts.window);
    if (b.size() > opts.max_basis) {
      throw ResourceError("λ^" + std::to_string(p) + " in the requested degrees has " + std::to_string(b.size()) +
                          " basis elements, above the cap " + std::to_string(opts.max_basis));
    }
    all.insert(all.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  J.basis = MonomialIndex(std::move(all));

  std::vector<Generator> gens;
  std::vector<Scalar> fact;
  int lo = 0, hi = 0;
  for (std::size_t i = 0; i < J.basis.size(); ++i) {
    const auto& m = J.basis[i];
    int w = alg.weight(m);
    gens.push_back({alg.name(m, L.space()), w});
    fact.push_back(alg.repetition_factorial(m));
    lo = i == 0 ? w : std::min(lo, w);
    hi = i == 0 ? w : std::max(hi, w);
  }
  J.window = opts.window ? *opts.window : std::make_pair(lo, hi);
  J.total.space = GradedSpace(std::move(gens));

  const std::size_t dim = J.basis.size();
  std::vector<SparseVec> cols(dim);
  parallel_for(dim, opts.threads, [&](std::size_t a) {
    std::map<std::size_t, Scalar> acc;
    for (auto& [coef, w] : jacobi_differential(alg, L, J.basis[a])) {
      auto b = J.basis.find(w);
      if (!b) continue;  // outside the degree window
      acc[*b] += coef * fact[*b] / fact[a];
    }
    cols[a] = from_map(acc);
  });
  J.total.d = Matrix(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) J.total.d.set_column(a, std::move(cols[a]));
  return J;
}

std::vector<std::size_t> JacobiComplex::term(std::size_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (length(i) == p) out.push_back(i);
  }
  return out;
}

namespace {

Matrix length_block(const JacobiComplex& J, std::size_t from, std::size_t to) {
  auto src = J.term(from);
  auto tgt = J.term(to);
  Matrix out(tgt.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    SparseVec col;
    for (const auto& [r, v] : J.total.d.column(src[j])) {
      std::size_t l = local_index(tgt, r);
      if (l != SIZE_MAX) col.push_back(l, v);
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

}  // namespace

Matrix JacobiComplex::external(std::size_t p) const {
  if (p < 2) return Matrix(0, term(p).size());
  return length_block(*this, p, p - 1);
}

Matrix JacobiComplex::internal(std::size_t p) const { return length_block(*this, p, p); }

std::size_t JacobiComplex::dim(std::size_t p, int k) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (length(i) == p && total.space.degree(i) == k) ++c;
  }
  return c;
}

// ------------------------------------------------------------------ ℍ⁰

SparseVec OSData::class_of(const SparseVec& cocycle) const {
  SparseVec local;
  for (const auto& [g, v] : cocycle) {
    std::size_t l = local_index(support, g);
    if (l == SIZE_MAX) throw std::invalid_argument("class_of expects a degree-0 element");
    local.push_back(l, v);
  }
  return coords->coordinates(local);
}

OSData jacobi_h0(const JacobiComplex& J) {
  if (J.window.first > -1 || J.window.second < 1) {
    // degrees -1 and 1 are needed unless the complex has none there
    bool has_low = false, has_high = false;
    for (std::size_t i = 0; i < J.L.dim(); ++i) {
      has_low = has_low || J.L.degree(i) <= 0;
      has_high = has_high || J.L.degree(i) >= 2;
    }
    if ((J.window.first > -1 && has_low) || (J.window.second < 1 && has_high)) {
      throw std::invalid_argument("ℍ⁰ needs total degrees -1..1 in the Jacobi complex");
    }
  }
  OSData os;
  os.order = J.order;
  os.hypothesis = h_nonpositive_vanishes(J.L);
  os.support = J.total.space.indices_in_degree(0);
  const std::size_t d0 = os.support.size();
  Matrix out = J.total.block(0);
  Matrix in = J.total.block(-1);

  std::vector<SparseVec> b;
  for (std::size_t j = 0; j < in.cols(); ++j) {
    if (!in.column(j).empty()) b.push_back(in.column(j));
  }
  auto coords = std::make_shared<RelativeCoordinates>(d0, b, std::vector<SparseVec>{});
  for (auto& z : kernel_sparse(out)) {
    std::size_t last = z.entries().back().first;
    if (!coords->add_rep(z)) continue;
    std::size_t g = os.support[last];
    os.level.push_back(J.length(g));
    os.names.push_back(J.total.space[g].name);
    os.reps.push_back(std::move(z));
  }
  os.coords = coords;
  for (std::size_t i = 1; i <= J.order; ++i) {
    os.filtration.push_back(static_cast<std::size_t>(
        std::count_if(os.level.begin(), os.level.end(), [i](std::size_t l) { return l <= i; })));
  }

  // σ(v_l) = (P ⊗ P) of the (0,0) part of the reduced coproduct of r_l
  const std::size_t dim = os.reps.size();
  std::map<std::size_t, SparseVec> pcache;
  auto P = [&](std::size_t global) -> const SparseVec& {
    auto it = pcache.find(global);
    if (it != pcache.end()) return it->second;
    std::size_t l = local_index(os.support, global);
    return pcache.emplace(global, coords->coordinates(SparseVec::unit(l))).first->second;
  };
  os.sigma = Matrix(dim * dim, dim);
  for (std::size_t l = 0; l < dim; ++l) {
    std::map<std::size_t, Scalar> acc;
    for (const auto& [loc, val] : os.reps[l]) {
      const Monomial& m = J.basis[os.support[loc]];
      for (const auto& s : J.alg->unshuffle(m, 0, true)) {
        if (J.alg->weight(s.left) != 0) continue;
        auto li = J.basis.find(s.left);
        auto ri = J.basis.find(s.right);
        if (!li || !ri) throw std::logic_error("coproduct factor outside the Jacobi basis");
        const SparseVec& pl = P(*li);
        const SparseVec& pr = P(*ri);
        for (const auto& [a, x] : pl) {
          for (const auto& [c, y] : pr) acc[a * dim + c] += val * s.coef * x * y;
        }
      }
    }
    os.sigma.set_column(l, from_map(acc));
  }
  return os;
}

// ----------------------------------------------------------- obstructions

std::vector<Exponents> sym_basis(std::size_t h, std::size_t n) {
  std::vector<Exponents> out;
  if (h == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Exponents cur(h, 0);
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == h) {
      cur[k] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[k] = e;
      self(self, k + 1, left - e);
    }
  };
  rec(rec, 0, static_cast<unsigned>(n));
  return out;
}

SparseVec sym_product(const JacobiComplex& J, const std::vector<Vec>& z, const Exponents& c) {
  std::map<Monomial, Scalar> terms{{Monomial{}, Scalar(1)}};
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (unsigned rep = 0; rep < c[k]; ++rep) {
      std::map<Monomial, Scalar> next;
      for (const auto& [m, coef] : terms) {
        for (std::size_t g = 0; g < z[k].size(); ++g) {
          if (z[k][g].is_zero()) continue;
          Monomial w = m;
          w.push_back(static_cast<std::uint32_t>(g));
          int s = J.alg->normalize(w);
          if (s == 0) continue;
          next[w] += Scalar(s) * coef * z[k][g];
        }
      }
      terms = std::move(next);
    }
  }
  std::map<std::size_t, Scalar> acc;
  for (const auto& [m, coef] : terms) {
    if (coef.is_zero()) continue;
    auto idx = J.basis.find(m);
    if (!idx) throw std::logic_error("symmetric product outside the Jacobi basis");
    acc[*idx] += coef * J.alg->repetition_factorial(m);
  }
  return from_map(acc);
}

ObstructionData obstruction_tower(const DGLA& L, std::size_t n_max, const JacobiOptions& opts) {
  if (!h_nonpositive_vanishes(L)) {
    throw PreconditionError("obstruction theory needs H^k(L) = 0 for k <= 0");
  }
  ObstructionData data;
  Cohomology H1 = cohomology(L.complex(), 1);
  Cohomology H2 = cohomology(L.complex(), 2);
  data.h1 = H1.dim();
  data.h2 = H2.dim();
  data.k1.ambient_dim = data.h1;
  for (std::size_t k = 0; k < data.h1; ++k) data.k1.basis.push_back(SparseVec::unit(k).to_dense(data.h1));

  Subspace prevK = data.k1;
  std::vector<Exponents> prevSym = sym_basis(data.h1, 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    ObstructionLevel lvl;
    lvl.n = n;
    lvl.sym = sym_basis(data.h1, n);
    JacobiOptions on = opts;
    on.window = std::make_pair(0, 1);
    JacobiComplex Jn = build_jacobi(L, n, on);
    JacobiOptions op = opts;
    op.window = std::make_pair(0, 2);
    JacobiComplex Jp = build_jacobi(L, n - 1, op);
    Cohomology HJ = cohomology(Jp.total, 1);
    const std::size_t hj = HJ.dim();

    lvl.big = Matrix(hj, lvl.sym.size());
    for (std::size_t c = 0; c < lvl.sym.size(); ++c) {
      SparseVec zeta = sym_product(Jn, H1.representatives, lvl.sym[c]);
      SparseVec dz = Jn.total.d.apply(zeta);
      Vec dense(Jp.total.space.dim());
      for (const auto& [g, v] : dz) {
        auto idx = Jp.basis.find(Jn.basis[g]);
        if (!idx) throw std::logic_error("obstruction cocycle outside J_{n-1}");
        dense[*idx] = v;
      }
      lvl.big.set_column(c, SparseVec::from_dense(HJ.class_of(dense)));
    }

    lvl.iota = Matrix(hj, data.h2);
    for (std::size_t k = 0; k < data.h2; ++k) {
      Vec dense(Jp.total.space.dim());
      for (std::size_t g = 0; g < L.dim(); ++g) {
        if (H2.representatives[k][g].is_zero()) continue;
        dense[*Jp.basis.find(Monomial{static_cast<std::uint32_t>(g)})] = H2.representatives[k][g];
      }
      lvl.iota.set_column(k, SparseVec::from_dense(HJ.class_of(dense)));
    }

    // K^{n-1}·H¹: all c whose partial derivatives lie in K^{n-1}
    std::map<Exponents, std::size_t> prevIndex;
    for (std::size_t i = 0; i < prevSym.size(); ++i) prevIndex[prevSym[i]] = i;
    Quotient q = quotient_and_dual(prevSym.size(), prevK);
    const std::size_t qd = q.representatives.size();
    Matrix stacked(data.h1 * qd, lvl.sym.size());
    for (std::size_t c = 0; c < lvl.sym.size(); ++c) {
      std::map<std::size_t, Scalar> col;
      for (std::size_t k = 0; k < data.h1; ++k) {
        if (lvl.sym[c][k] == 0) continue;
        Exponents e = lvl.sym[c];
        --e[k];
        Scalar mult(static_cast<long>(lvl.sym[c][k]));
        for (const auto& [r, v] : q.projection.column(prevIndex.at(e))) col[k * qd + r] += mult * v;
      }
      stacked.set_column(c, from_map(col));
    }
    lvl.small_domain = rank_kernel_image(stacked).kernel;

    lvl.small = Matrix(data.h2, lvl.small_domain.dim());
    for (std::size_t j = 0; j < lvl.small_domain.dim(); ++j) {
      Vec ob = lvl.big.apply(lvl.small_domain.basis[j]);
      auto h = solve_linear(lvl.iota, ob);
      if (!h) throw std::logic_error("big obstruction does not factor through H^2 on K^{n-1}·H^1");
      lvl.small.set_column(j, SparseVec::from_dense(*h));
    }

    lvl.kernel_big = rank_kernel_image(lvl.big).kernel;
    lvl.kernel_small.ambient_dim = lvl.sym.size();
    for (const auto& k : rank_kernel_image(lvl.small).kernel.basis) {
      Vec v(lvl.sym.size());
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (!k[j].is_zero()) v = v + k[j] * lvl.small_domain.basis[j];
      }
      lvl.kernel_small.basis.push_back(std::move(v));
    }
    prevK = lvl.kernel_big;
    prevSym = lvl.sym;
    data.levels.push_back(std::move(lvl));
  }
  return data;
}

}  // namespace jdeform
