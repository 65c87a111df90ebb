#include "jdeform/artin.hpp"

#include <algorithm>
#include <map>

namespace jdeform {

namespace {

std::string triple(const std::vector<std::string>& n, std::size_t a, std::size_t b, std::size_t c) {
  return n[a] + "," + n[b] + "," + n[c];
}

// Span of the t_l with level >= i.
bool in_filtration(const std::vector<std::size_t>& levels, const SparseVec& x, std::size_t i) {
  return std::all_of(x.begin(), x.end(), [&](const auto& e) { return levels[e.first] >= i; });
}

Report check_levels(const std::string& what, const std::vector<std::size_t>& levels, std::size_t n,
                    const std::vector<std::string>& names) {
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l] < 1 || levels[l] > n) {
      return Report::fail(what, "filtration level out of range 1.." + std::to_string(n), {names[l]});
    }
    if (l > 0 && levels[l] < levels[l - 1]) {
      return Report::fail(what, "basis is not adapted to the filtration (levels must not decrease)", {names[l]});
    }
  }
  return Report::ok(what);
}

// Products of the dual algebra of an OS structure.
std::vector<SparseVec> dual_products(const OSStructure& os) {
  Matrix t = os.sigma.transpose();
  std::vector<SparseVec> out(os.dim() * os.dim());
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = t.column(r);
  return out;
}

Report check_products(const std::string& what, const std::vector<std::string>& names,
                      const std::vector<std::size_t>& levels, const std::vector<SparseVec>& prod) {
  const std::size_t d = names.size();
  auto mul = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec out;
    for (const auto& [a, xa] : x)
      for (const auto& [b, yb] : y) out.axpy(xa * yb, prod[a * d + b]);
    return out;
  };
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (prod[a * d + b] != prod[b * d + a]) {
        return Report::fail(what, what == "os" ? "σ is not symmetric" : "multiplication is not commutative",
                            {names[a], names[b]});
      }
      for (const auto& [l, v] : prod[a * d + b]) {
        if (levels[l] < levels[a] + levels[b]) {
          return Report::fail(what,
                              what == "os" ? "σ does not respect the filtration"
                                           : "m_i·m_j is not inside m_{i+j}",
                              {names[a], names[b], names[l]});
        }
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        SparseVec lhs = mul(prod[a * d + b], SparseVec::unit(c));
        SparseVec rhs = mul(SparseVec::unit(a), prod[b * d + c]);
        lhs.axpy(Scalar(-1), rhs);
        if (!lhs.empty()) {
          if (what == "os") {
            return Report::fail(what, "σ is not coassociative at basis vector " + names[lhs.leading()],
                                {names[lhs.leading()], triple(names, a, b, c)});
          }
          return Report::fail(what, "multiplication is not associative", {triple(names, a, b, c)});
        }
      }
    }
  }
  return Report::ok(what);
}

}  // namespace

SparseVec ArtinAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, xa] : x)
    for (const auto& [b, yb] : y) {
      const SparseVec& p = product(a, b);
      if (!p.empty()) out.axpy(xa * yb, p);
    }
  return out;
}

SparseVec ring_from_m(const SparseVec& m_coords) {
  SparseVec out;
  for (const auto& [i, v] : m_coords) out.push_back(i + 1, v);
  return out;
}

SparseVec m_part(const SparseVec& r) {
  SparseVec out;
  for (const auto& [i, v] : r) {
    if (i > 0) out.push_back(i - 1, v);
  }
  return out;
}

SparseVec ring_mul(const ArtinAlgebra& R, const SparseVec& x, const SparseVec& y) {
  Scalar x0 = x.get(0), y0 = y.get(0);
  SparseVec xm = m_part(x), ym = m_part(y);
  SparseVec m = R.mul(xm, ym);
  m.axpy(x0, ym);
  m.axpy(y0, xm);
  SparseVec out = ring_from_m(m);
  if (!(x0 * y0).is_zero()) out.add(0, x0 * y0);
  return out;
}

ArtinAlgebra truncated_polynomial(std::size_t n, const std::string& var) {
  ArtinAlgebra R;
  R.exponent = n;
  for (std::size_t k = 1; k <= n; ++k) {
    R.names.push_back(k == 1 ? var : var + "^" + std::to_string(k));
    R.levels.push_back(k);
  }
  R.mult.assign(n * n, SparseVec());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a + b + 2 <= n) R.mult[a * n + b] = SparseVec::unit(a + b + 1);
  return R;
}

Subspace power_of_m(const ArtinAlgebra& R, std::size_t k) {
  const std::size_t d = R.dim();
  std::vector<SparseVec> cur;
  for (std::size_t l = 0; l < d; ++l) cur.push_back(SparseVec::unit(l));
  for (std::size_t j = 2; j <= k && !cur.empty(); ++j) {
    Echelon ech(d);
    std::vector<SparseVec> next;
    for (const auto& x : cur) {
      for (std::size_t l = 0; l < d; ++l) {
        SparseVec p = R.mul(x, SparseVec::unit(l));
        if (!p.empty() && ech.insert(p)) next.push_back(p);
      }
    }
    cur = std::move(next);
  }
  Subspace s;
  s.ambient_dim = d;
  if (k == 0) {
    for (std::size_t l = 0; l < d; ++l) s.basis.push_back(SparseVec::unit(l).to_dense(d));
    return s;
  }
  for (const auto& x : cur) s.basis.push_back(x.to_dense(d));
  return s;
}

ArtinAlgebra monomial_quotient(const std::vector<std::string>& vars, std::size_t n,
                               const std::vector<Exponents>& killed) {
  auto divides = [](const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  ArtinAlgebra R;
  std::map<Exponents, std::size_t> index;
  std::vector<Exponents> basis;
  for (std::size_t deg = 1; deg <= n; ++deg) {
    for (const auto& e : sym_basis(vars.size(), deg)) {
      if (std::any_of(killed.begin(), killed.end(), [&](const Exponents& k) { return divides(k, e); })) continue;
      index[e] = basis.size();
      basis.push_back(e);
      std::string name;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!name.empty()) name += "*";
        name += vars[i];
        if (e[i] > 1) name += "^" + std::to_string(e[i]);
      }
      R.names.push_back(name);
      R.levels.push_back(deg);
    }
  }
  const std::size_t d = basis.size();
  R.mult.assign(d * d, SparseVec());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Exponents e = basis[a];
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += basis[b][i];
      auto it = index.find(e);
      if (it != index.end()) R.mult[a * d + b] = SparseVec::unit(it->second);
    }
  }
  R.exponent = d == 0 ? 0 : R.levels.back();
  return R;
}

std::size_t nilpotency(const ArtinAlgebra& R) {
  std::size_t e = 0;
  while (power_of_m(R, e + 1).dim() != 0) ++e;
  return e;
}

AdicBasis adic_basis(const ArtinAlgebra& R) {
  const std::size_t d = R.dim();
  const std::size_t e = nilpotency(R);
  Echelon ech(d);
  std::vector<std::vector<SparseVec>> by_level(e + 1);
  for (std::size_t k = e; k >= 1; --k) {
    for (const auto& b : power_of_m(R, k).basis) {
      SparseVec v = SparseVec::from_dense(b);
      if (ech.insert(v)) by_level[k].push_back(v);
    }
  }
  AdicBasis ab;
  ab.P = Matrix(d, d);
  std::size_t col = 0;
  for (std::size_t k = 1; k <= e; ++k) {
    for (auto& v : by_level[k]) {
      ab.P.set_column(col++, v);
      ab.level.push_back(k);
    }
  }
  ab.Pinv = invert(ab.P);
  return ab;
}

Report check_artin(const ArtinAlgebra& R) {
  const std::size_t d = R.dim();
  if (R.levels.size() != d || R.mult.size() != d * d) {
    throw DimensionError("artin algebra tables do not match the basis size");
  }
  for (const auto& p : R.mult) {
    for (const auto& [l, v] : p) {
      if (l >= d) throw DimensionError("product refers to a basis index outside m");
    }
  }
  Report lv = check_levels("artin", R.levels, R.exponent, R.names);
  if (!lv.pass) return lv;
  Report pr = check_products("artin", R.names, R.levels, R.mult);
  if (!pr.pass) return pr;
  if (power_of_m(R, R.exponent + 1).dim() != 0) {
    return Report::fail("artin", "m^{n+1} != 0 for the declared exponent n = " + std::to_string(R.exponent));
  }
  Report ok = Report::ok("artin");
  ok.notes.push_back(is_standard(R) ? "standard: m_i = m^i" : "not standard: some m_i differs from m^i");
  return ok;
}

bool is_standard(const ArtinAlgebra& R) {
  const std::size_t d = R.dim();
  for (std::size_t i = 1; i <= R.exponent + 1; ++i) {
    Subspace filt{d, {}};
    for (std::size_t l = 0; l < d; ++l) {
      if (R.levels[l] >= i) filt.basis.push_back(SparseVec::unit(l).to_dense(d));
    }
    if (!power_of_m(R, i).same_span(filt)) return false;
  }
  return true;
}

Report check_os(const OSStructure& os) {
  const std::size_t d = os.dim();
  if (os.levels.size() != d || os.sigma.rows() != d * d || os.sigma.cols() != d) {
    throw DimensionError("OS structure tables do not match the basis size");
  }
  Report lv = check_levels("os", os.levels, os.order, os.names);
  if (!lv.pass) return lv;
  for (std::size_t l = 0; l < d; ++l) {
    if (os.levels[l] == 1 && !os.sigma.column(l).empty()) {
      return Report::fail("os", "σ does not vanish on V¹", {os.names[l]});
    }
  }
  Report pr = check_products("os", os.names, os.levels, dual_products(os));
  if (!pr.pass) return pr;
  Report ok = Report::ok("os");
  ok.notes.push_back(is_standard(os) ? "standard" : "not standard");
  return ok;
}

bool is_standard(const OSStructure& os) {
  ArtinAlgebra R;
  R.names = os.names;
  R.levels = os.levels;
  R.exponent = os.order;
  R.mult = dual_products(os);
  return is_standard(R);
}

OSStructure os_structure(const OSData& data) {
  OSStructure os;
  os.names = data.names;
  os.levels = data.level;
  os.order = data.order;
  os.sigma = data.sigma;
  return os;
}

ArtinAlgebra os_to_algebra(const OSStructure& os) {
  Report r = check_os(os);
  if (!r.pass) throw ModelError("invalid OS structure: " + r.message);
  ArtinAlgebra R;
  R.names = os.names;
  R.levels = os.levels;
  R.exponent = os.order;
  R.mult = dual_products(os);
  return R;
}

OSStructure algebra_to_os(const ArtinAlgebra& R) {
  Report r = check_artin(R);
  if (!r.pass) throw ModelError("invalid artin algebra: " + r.message);
  OSStructure os;
  os.names = R.names;
  os.levels = R.levels;
  os.order = R.exponent;
  const std::size_t d = R.dim();
  os.sigma = Matrix(d * d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [l, v] : R.product(a, b)) os.sigma.set(a * d + b, l, v);
  return os;
}

bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b) {
  return a.names == b.names && a.levels == b.levels && a.exponent == b.exponent && a.mult == b.mult;
}

bool operator==(const OSStructure& a, const OSStructure& b) {
  return a.names == b.names && a.levels == b.levels && a.order == b.order && a.sigma == b.sigma;
}

// ------------------------------------------------------------ morphic

Report morphic_check(const MorphicElement& v) {
  const OSStructure& os = v.target;
  const std::size_t d = os.dim();
  if (v.mu.size() != d) throw DimensionError("morphic element needs one coefficient per target basis vector");
  for (const auto& m : v.mu) {
    for (const auto& [i, x] : m) {
      if (i >= v.R.dim()) throw DimensionError("coefficient outside m of the coefficient ring");
    }
  }
  if (os.sigma.rows() != d * d || os.sigma.cols() != d) throw DimensionError("target symbol has wrong shape");
  Matrix st = os.sigma.transpose();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      SparseVec lhs;
      for (const auto& [l, s] : st.column(a * d + b)) lhs.axpy(s, v.mu[l]);
      SparseVec rhs = v.R.mul(v.mu[a], v.mu[b]);
      if (lhs != rhs) {
        return Report::fail("morphic", "(id ⊗ σ)(v) != v·v at the coefficient of v_a ⊗ v_b",
                            {os.names[a], os.names[b]});
      }
    }
  }
  std::map<std::size_t, Echelon> powers;
  for (std::size_t l = 0; l < d; ++l) {
    std::size_t k = os.levels[l];
    auto it = powers.find(k);
    if (it == powers.end()) {
      Echelon e(v.R.dim());
      for (const auto& b : power_of_m(v.R, k).basis) e.insert(SparseVec::from_dense(b));
      it = powers.emplace(k, std::move(e)).first;
    }
    if (!it->second.contains(v.mu[l])) {
      return Report::fail("morphic", "tower condition fails: coefficient not in m^" + std::to_string(k),
                          {os.names[l]});
    }
  }
  Report ok = Report::ok("morphic");
  ok.notes.push_back("tower compatibility read as reduction along the filtration quotients V'/V'^{n-i}");
  return ok;
}

SparseVec RingHom::apply(const SparseVec& x) const {
  SparseVec out = ring_from_m(map.apply(m_part(x)));
  Scalar x0 = x.get(0);
  if (!x0.is_zero()) out.add(0, x0);
  return out;
}

RingHom morphic_to_hom(const MorphicElement& v) {
  Report r = morphic_check(v);
  if (!r.pass) throw ModelError("element is not morphic: " + r.message);
  RingHom h;
  h.source = os_to_algebra(v.target);
  h.target = v.R;
  h.map = Matrix(v.R.dim(), v.target.dim());
  for (std::size_t l = 0; l < v.mu.size(); ++l) h.map.set_column(l, v.mu[l]);
  return h;
}

Report check_ring_hom(const RingHom& h) {
  const std::size_t d = h.source.dim();
  if (h.map.rows() != h.target.dim() || h.map.cols() != d) throw DimensionError("homomorphism has wrong shape");
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      SparseVec lhs = h.map.apply(h.source.product(a, b));
      SparseVec rhs = h.target.mul(h.map.column(a), h.map.column(b));
      if (lhs != rhs) {
        return Report::fail("ring-hom", "not multiplicative", {h.source.names[a], h.source.names[b]});
      }
    }
  }
  for (std::size_t l = 0; l < d; ++l) {
    if (!in_filtration(h.target.levels, h.map.column(l), h.source.levels[l])) {
      return Report::fail("ring-hom", "does not preserve the filtration", {h.source.names[l]});
    }
  }
  return Report::ok("ring-hom");
}

RingHom compose(const RingHom& outer, const RingHom& inner) {
  if (outer.source.dim() != inner.target.dim()) throw DimensionError("homomorphisms do not compose");
  return RingHom{inner.source, outer.target, outer.map * inner.map};
}

RingHom identity_hom(const ArtinAlgebra& R) { return RingHom{R, R, Matrix::identity(R.dim())}; }

MorphicElement push_forward(const RingHom& phi, const MorphicElement& v) {
  MorphicElement out{phi.target, v.target, {}};
  for (const auto& m : v.mu) out.mu.push_back(phi.map.apply(m));
  return out;
}

// ---------------------------------------------------------- universal ring

UniversalRing ring_of(const DGLA& L, std::size_t n, const JacobiOptions& opts, bool with_reduction) {
  if (!h_nonpositive_vanishes(L)) {
    throw PreconditionError("the deformation ring needs H^k(L) = 0 for k <= 0");
  }
  JacobiOptions o = opts;
  o.window = std::make_pair(-1, 1);
  UniversalRing U;
  JacobiComplex J = build_jacobi(L, n, o);
  U.os = jacobi_h0(J);
  U.R = os_to_algebra(os_structure(U.os));
  if (with_reduction && n >= 2) {
    JacobiComplex Jp = build_jacobi(L, n - 1, o);
    OSData osp = jacobi_h0(Jp);
    ArtinAlgebra Rp = os_to_algebra(os_structure(osp));
    // inclusion ℍ⁰(J_{n-1}) -> ℍ⁰(J_n); the reduction is its transpose
    Matrix incl(U.os.dim(), osp.dim());
    for (std::size_t k = 0; k < osp.dim(); ++k) {
      SparseVec g;
      std::map<std::size_t, Scalar> acc;
      for (const auto& [loc, v] : osp.reps[k]) acc[*J.basis.find(Jp.basis[osp.support[loc]])] += v;
      for (const auto& [i, v] : acc) g.push_back(i, v);
      incl.set_column(k, U.os.class_of(g));
    }
    U.reduction = RingHom{U.R, Rp, incl.transpose()};
  }
  return U;
}

RingHom quotient_by_power(const ArtinAlgebra& R, std::size_t k) {
  if (k == 0) throw std::invalid_argument("quotient by m^0 is the zero ring");
  AdicBasis ab = adic_basis(R);
  std::vector<std::size_t> keep, pos(R.dim(), R.dim());
  for (std::size_t j = 0; j < R.dim(); ++j) {
    if (ab.level[j] < k) {
      pos[j] = keep.size();
      keep.push_back(j);
    }
  }
  auto reduce = [&](const SparseVec& x) {
    SparseVec out;
    for (const auto& [j, v] : ab.Pinv.apply(x))
      if (pos[j] < R.dim()) out.push_back(pos[j], v);
    return out;
  };
  ArtinAlgebra Q;
  for (std::size_t j : keep) {
    const SparseVec& c = ab.P.column(j);
    Q.names.push_back(c.nnz() == 1 && c.leading_value() == Scalar(1) ? R.names[c.leading()]
                                                                     : "q" + std::to_string(Q.names.size() + 1));
    Q.levels.push_back(ab.level[j]);
  }
  Q.exponent = std::min(nilpotency(R), k - 1);
  const std::size_t q = keep.size();
  Q.mult.assign(q * q, SparseVec());
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      Q.mult[a * q + b] = reduce(R.mul(ab.P.column(keep[a]), ab.P.column(keep[b])));
  RingHom h{R, Q, Matrix(q, R.dim())};
  for (std::size_t l = 0; l < R.dim(); ++l) h.map.set_column(l, reduce(SparseVec::unit(l)));
  return h;
}

std::string describe(const ArtinAlgebra& R) {
  const std::size_t d = R.dim();
  if (d == 0) return "C";
  // one generator of m/m² means R is a quotient of C[[t]]
  if (d - power_of_m(R, 2).dim() == 1) return "C[t]/(t^" + std::to_string(d + 1) + ")";
  std::string s = "C + m, dim m = " + std::to_string(d) + ", dim m/m^2 = " +
                  std::to_string(d - power_of_m(R, 2).dim());
  return s;
}

}  // namespace jdeform
