#include "jdeform/deformation.hpp"

#include <map>
#include <stdexcept>

namespace jdeform {

// ----------------------------------------------------------------- tensors

Tensor tensor_zero(std::size_t dim) { return Tensor(dim); }

void tensor_axpy(Tensor& y, const Scalar& a, const Tensor& x) {
  if (y.size() != x.size()) throw DimensionError("tensor sizes differ");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].empty()) y[i].axpy(a, x[i]);
  }
}

bool tensor_is_zero(const Tensor& x) {
  return std::all_of(x.begin(), x.end(), [](const SparseVec& v) { return v.empty(); });
}

Tensor tensor_apply(const Matrix& m, const Tensor& x) {
  if (m.cols() != x.size()) throw DimensionError("matrix and tensor do not match");
  Tensor out(m.rows());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].empty()) continue;
    for (const auto& [i, v] : m.column(j)) out[i].axpy(v, x[j]);
  }
  return out;
}

Tensor tensor_map_coeffs(const Matrix& phi, const Tensor& x) {
  Tensor out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = phi.apply(x[i]);
  return out;
}

namespace {

template <class Table>
Tensor bracket_by_table(const Table& br, std::size_t dim, const ArtinAlgebra& R, const Tensor& x,
                        const Tensor& y) {
  if (x.size() != dim || y.size() != dim) throw DimensionError("tensor does not match the Lie algebra");
  Tensor out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].empty()) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (y[b].empty()) continue;
      const SparseVec& ab = br(a, b);
      if (ab.empty()) continue;
      SparseVec prod = R.mul(x[a], y[b]);
      if (prod.empty()) continue;
      for (const auto& [c, v] : ab) out[c].axpy(v, prod);
    }
  }
  return out;
}

}  // namespace

Tensor tensor_bracket(const DGLA& L, const ArtinAlgebra& R, const Tensor& x, const Tensor& y) {
  return bracket_by_table([&](std::size_t a, std::size_t b) -> const SparseVec& { return L.bracket(a, b); },
                          L.dim(), R, x, y);
}

Tensor tensor_bracket(const LieAlgebra& g, const ArtinAlgebra& R, const Tensor& x, const Tensor& y) {
  return bracket_by_table([&](std::size_t a, std::size_t b) -> const SparseVec& { return g.bracket(a, b); },
                          g.dim(), R, x, y);
}

// --------------------------------------------------------------------- BCH

namespace {

using Word = std::vector<int>;
using FreePoly = std::map<Word, Scalar>;

FreePoly free_mul(const FreePoly& x, const FreePoly& y, std::size_t max_len) {
  FreePoly out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      if (u.size() + v.size() > max_len) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += a * b;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

void free_axpy(FreePoly& y, const Scalar& a, const FreePoly& x) {
  for (const auto& [w, v] : x) y[w] += a * v;
}

std::vector<BchTerm> compute_bch_terms() {
  const std::size_t N = kMaxBchOrder;
  auto exp_of = [&](int letter) {
    FreePoly e, power{{Word{}, Scalar(1)}};
    FreePoly gen{{Word{letter}, Scalar(1)}};
    long fact = 1;
    for (std::size_t k = 0; k <= N; ++k) {
      if (k > 0) {
        power = free_mul(power, gen, N);
        fact *= static_cast<long>(k);
      }
      free_axpy(e, Scalar(1, fact), power);
    }
    return e;
  };
  FreePoly x = free_mul(exp_of(0), exp_of(1), N);
  x.erase(Word{});
  FreePoly log, power{{Word{}, Scalar(1)}};
  for (std::size_t k = 1; k <= N; ++k) {
    power = free_mul(power, x, N);
    free_axpy(log, Scalar(k % 2 == 1 ? 1 : -1, static_cast<long>(k)), power);
  }
  // Dynkin: a homogeneous Lie element P of degree k equals (1/k) Σ z_w [w]
  std::vector<BchTerm> terms;
  for (const auto& [w, z] : log) {
    if (z.is_zero()) continue;
    terms.push_back({w, z * Scalar(1, static_cast<long>(w.size()))});
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const BchTerm& a, const BchTerm& b) { return a.word.size() < b.word.size(); });
  return terms;
}

std::size_t bch_order(const ArtinAlgebra& R, std::optional<std::size_t> order) {
  std::size_t o = order ? *order : nilpotency(R);
  if (o > kMaxBchOrder) {
    throw PreconditionError("BCH is available through order " + std::to_string(kMaxBchOrder) + ", asked for " +
                            std::to_string(o));
  }
  return o;
}

}  // namespace

const std::vector<BchTerm>& bch_terms() {
  static const std::vector<BchTerm> terms = compute_bch_terms();
  return terms;
}

Tensor bch(const Tensor& a, const Tensor& b, std::size_t order, const BracketFn& br) {
  if (order > kMaxBchOrder) {
    throw PreconditionError("BCH is available through order " + std::to_string(kMaxBchOrder));
  }
  if (a.size() != b.size()) throw DimensionError("BCH arguments differ in size");
  Tensor out(a.size());
  if (order == 0) return out;
  std::map<Word, Tensor> value;
  value[Word{0}] = a;
  value[Word{1}] = b;
  // left-normed brackets by prefix
  std::function<const Tensor&(const Word&)> eval = [&](const Word& w) -> const Tensor& {
    auto it = value.find(w);
    if (it != value.end()) return it->second;
    Word prefix(w.begin(), w.end() - 1);
    const Tensor& p = eval(prefix);
    Tensor v = tensor_is_zero(p) ? Tensor(a.size()) : br(p, w.back() == 0 ? a : b);
    return value.emplace(w, std::move(v)).first->second;
  };
  for (const auto& t : bch_terms()) {
    if (t.word.size() > order) break;
    const Tensor& v = eval(t.word);
    if (!tensor_is_zero(v)) tensor_axpy(out, t.coef, v);
  }
  return out;
}

Tensor bch(const LieAlgebra& g, const ArtinAlgebra& R, const Tensor& a, const Tensor& b,
           std::optional<std::size_t> order) {
  return bch(a, b, bch_order(R, order),
             [&](const Tensor& x, const Tensor& y) { return tensor_bracket(g, R, x, y); });
}

Tensor bch(const DGLA& L, const ArtinAlgebra& R, const Tensor& a, const Tensor& b,
           std::optional<std::size_t> order) {
  return bch(a, b, bch_order(R, order),
             [&](const Tensor& x, const Tensor& y) { return tensor_bracket(L, R, x, y); });
}

// -------------------------------------------------------------- MC elements

void validate(const MCElement& u) {
  if (u.u.size() != u.L.dim()) throw DimensionError("MC element needs one coefficient per basis vector of L");
  for (std::size_t a = 0; a < u.u.size(); ++a) {
    if (u.u[a].empty()) continue;
    if (u.L.degree(a) != 1) {
      throw DimensionError("MC element has a component on " + u.L.space()[a].name + ", which is not in degree 1");
    }
    for (const auto& [i, v] : u.u[a]) {
      if (i >= u.R.dim()) throw DimensionError("coefficient outside m of the coefficient ring");
    }
  }
}

Tensor mc_residual(const MCElement& u) {
  validate(u);
  Tensor out = tensor_bracket(u.L, u.R, u.u, u.u);
  for (auto& v : out) v.scale(Scalar(1, 2));
  for (std::size_t a = 0; a < u.u.size(); ++a) {
    if (u.u[a].empty()) continue;
    for (const auto& [c, v] : u.L.d().column(a)) out[c].axpy(v, u.u[a]);
  }
  return out;
}

Report mc_check(const MCElement& u) {
  Tensor r = mc_residual(u);
  std::vector<std::string> witness;
  for (std::size_t c = 0; c < r.size(); ++c)
    if (!r[c].empty()) witness.push_back(u.L.space()[c].name);
  if (witness.empty()) return Report::ok("mc");
  return Report::fail("mc", "du + ½[u,u] != 0", witness);
}

MCElement pullback(const RingHom& phi, const MCElement& u) {
  if (phi.source.dim() != u.R.dim() || phi.map.cols() != u.R.dim()) {
    throw DimensionError("homomorphism source does not match the coefficient ring");
  }
  return MCElement{u.L, phi.target, tensor_map_coeffs(phi.map, u.u)};
}

// ------------------------------------------------------------ hypercochains

std::shared_ptr<const JacobiComplex> hyper_jacobi(const DGLA& L, std::size_t n, const JacobiOptions& opts) {
  JacobiOptions o = opts;
  o.window = std::make_pair(-1, 1);
  return std::make_shared<const JacobiComplex>(build_jacobi(L, n, o));
}

Hypercochain epsilon(const MCElement& u, std::shared_ptr<const JacobiComplex> J) {
  validate(u);
  if (J->L.dim() != u.L.dim()) throw DimensionError("Jacobi complex belongs to a different DGLA");
  const std::size_t rows = J->total.space.dim();
  Hypercochain v{J, u.R, Matrix(rows, u.R.dim())};
  for (std::size_t i = 0; i < rows; ++i) {
    if (J->total.space.degree(i) != 0) continue;
    const Monomial& m = J->basis[i];
    SparseVec coef;
    bool first = true;
    for (auto f : m) {
      if (u.u[f].empty()) {
        coef = SparseVec();
        break;
      }
      coef = first ? u.u[f] : u.R.mul(coef, u.u[f]);
      first = false;
      if (coef.empty()) break;
    }
    for (const auto& [c, x] : coef) v.coeffs.set(i, c, x);
  }
  return v;
}

Hypercochain epsilon(const MCElement& u, std::size_t n) { return epsilon(u, hyper_jacobi(u.L, n)); }

Report hypercocycle_check(const Hypercochain& v) {
  Matrix dv = v.J->total.d * v.coeffs;
  std::size_t best = v.J->total.space.dim();
  for (std::size_t c = 0; c < dv.cols(); ++c)
    if (!dv.column(c).empty()) best = std::min(best, dv.column(c).leading());
  if (best == v.J->total.space.dim()) return Report::ok("hypercocycle");
  std::size_t p = v.J->length(best);
  int q = v.J->total.space.degree(best) + static_cast<int>(p);
  return Report::fail("hypercocycle",
                      "total differential is nonzero in λ^" + std::to_string(p) + " of L-degree " + std::to_string(q),
                      {v.J->total.space[best].name});
}

namespace {

std::vector<std::size_t> rows_in_degree(const JacobiComplex& J, int k) { return J.total.space.indices_in_degree(k); }

}  // namespace

EpsilonRepresentative epsilon_representative(const Hypercochain& v) {
  const JacobiComplex& J = *v.J;
  const DGLA& L = J.L;
  if (!h_nonpositive_vanishes(L)) throw PreconditionError("ε-representatives need H^k(L) = 0 for k <= 0");
  Report hc = hypercocycle_check(v);
  if (!hc.pass) return {std::nullopt, Report::fail("epsilon-representative", "not a hypercocycle: " + hc.message, hc.witness)};

  const ArtinAlgebra& R = v.R;
  AdicBasis ab = adic_basis(R);
  const std::size_t e = ab.level.empty() ? 0 : ab.level.back();

  std::vector<std::size_t> deg0 = rows_in_degree(J, 0), degm1 = rows_in_degree(J, -1);
  std::vector<std::size_t> local(J.total.space.dim(), J.total.space.dim());
  for (std::size_t i = 0; i < deg0.size(); ++i) local[deg0[i]] = i;
  std::vector<std::size_t> gens1 = L.space().indices_in_degree(1);

  // columns: δ ∈ L¹ (as λ¹ monomials), then -D on J^{-1}
  Matrix A(deg0.size(), gens1.size() + degm1.size());
  for (std::size_t k = 0; k < gens1.size(); ++k) {
    A.set(local[*J.basis.find(Monomial{static_cast<std::uint32_t>(gens1[k])})], k, Scalar(1));
  }
  for (std::size_t k = 0; k < degm1.size(); ++k) {
    SparseVec col;
    for (const auto& [i, x] : J.total.d.column(degm1[k])) col.push_back(local[i], -x);
    A.set_column(gens1.size() + k, col);
  }
  Solver solver(A);

  MCElement u{L, R, Tensor(L.dim())};
  Matrix dh(J.total.space.dim(), R.dim());  // D h in adapted m-coordinates
  Matrix pinv_t = ab.Pinv.transpose();
  auto remainder = [&]() { return (epsilon(u, v.J).coeffs - v.coeffs) * pinv_t - dh; };

  for (std::size_t k = 1; k <= e; ++k) {
    Matrix r = remainder();
    for (std::size_t j = 0; j < R.dim(); ++j) {
      if (ab.level[j] < k && !r.column(j).empty()) {
        throw std::logic_error("ε-representative: lower order residue survived");
      }
    }
    for (std::size_t j = 0; j < R.dim(); ++j) {
      if (ab.level[j] != k || r.column(j).empty()) continue;
      SparseVec rhs;
      for (const auto& [i, x] : r.column(j)) rhs.push_back(local[i], -x);
      auto x = solver.solve(rhs);
      if (!x) {
        return {std::nullopt, Report::fail("epsilon-representative",
                                           "no representative of the form ε(u) at order " + std::to_string(k),
                                           {J.total.space[r.column(j).leading()].name})};
      }
      SparseVec dcol = dh.column(j);
      for (const auto& [c, val] : *x) {
        if (c < gens1.size()) {
          u.u[gens1[c]].axpy(val, ab.P.column(j));
        } else {
          dcol.axpy(val, J.total.d.column(degm1[c - gens1.size()]));
        }
      }
      dh.set_column(j, dcol);
    }
  }
  if (!remainder().is_zero()) throw std::logic_error("ε-representative: residue after the last order");
  Report mc = mc_check(u);
  if (!mc.pass) throw std::logic_error("ε-representative is not Maurer-Cartan: " + mc.message);
  return {u, Report::ok("epsilon-representative")};
}

// ---------------------------------------------------------- Kodaira-Spencer

KSContext ks_context(const DGLA& L, std::size_t n, const JacobiOptions& opts) {
  if (!h_nonpositive_vanishes(L)) {
    throw PreconditionError("the Kodaira-Spencer map needs H^k(L) = 0 for k <= 0");
  }
  KSContext ctx;
  ctx.J = hyper_jacobi(L, n, opts);
  ctx.os = jacobi_h0(*ctx.J);
  ctx.structure = os_structure(ctx.os);
  ctx.ring = os_to_algebra(ctx.structure);
  return ctx;
}

MorphicElement hypercocycle_class(const Hypercochain& v, const KSContext& ctx) {
  MorphicElement el{v.R, ctx.structure, std::vector<SparseVec>(ctx.os.dim())};
  for (std::size_t c = 0; c < v.coeffs.cols(); ++c) {
    if (v.coeffs.column(c).empty()) continue;
    for (const auto& [l, x] : ctx.os.class_of(v.coeffs.column(c))) el.mu[l].push_back(c, x);
  }
  return el;
}

KodairaSpencer kodaira_spencer(const MCElement& u, const KSContext& ctx) {
  Report mc = mc_check(u);
  if (!mc.pass) throw PreconditionError("Kodaira-Spencer needs a Maurer-Cartan element: " + mc.message);
  if (power_of_m(u.R, ctx.J->order + 1).dim() != 0) {
    throw PreconditionError("coefficient ring has exponent above the order " + std::to_string(ctx.J->order));
  }
  MorphicElement el = hypercocycle_class(epsilon(u, ctx.J), ctx);
  RingHom h = morphic_to_hom(el);
  return {std::move(el), std::move(h)};
}

KodairaSpencer kodaira_spencer(const MCElement& u, std::size_t n, const JacobiOptions& opts) {
  return kodaira_spencer(u, ks_context(u.L, n, opts));
}

MCElement mc_solve(const DGLA& L, std::size_t n, const JacobiOptions& opts) {
  KSContext ctx = ks_context(L, n, opts);
  Hypercochain v{ctx.J, ctx.ring, Matrix(ctx.J->total.space.dim(), ctx.ring.dim())};
  for (std::size_t l = 0; l < ctx.os.dim(); ++l) {
    SparseVec col;
    for (const auto& [loc, x] : ctx.os.reps[l]) col.push_back(ctx.os.support[loc], x);
    v.coeffs.set_column(l, col);
  }
  EpsilonRepresentative rep = epsilon_representative(v);
  if (!rep.u) throw std::logic_error("universal hypercocycle has no ε-representative: " + rep.report.message);
  return *rep.u;
}

// ------------------------------------------------------------------ actions

DGLA lie_as_dgla(const LieAlgebra& g) {
  std::vector<Generator> gens;
  for (const auto& n : g.names) gens.push_back({n, 0});
  Complex c;
  c.space = GradedSpace(gens);
  c.d = Matrix(g.dim(), g.dim());
  DGLA L(std::move(c));
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) L.set_bracket_raw(a, b, g.bracket(a, b));
  return L;
}

namespace {

Matrix scaled(const Matrix& m, const Scalar& s) {
  Matrix out(m.rows(), m.cols());
  if (s.is_zero()) return out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    SparseVec col = m.column(c);
    col.scale(s);
    out.set_column(c, std::move(col));
  }
  return out;
}

Matrix combination(const std::vector<Matrix>& basis, const SparseVec& x, std::size_t n) {
  Matrix out(n, n);
  for (const auto& [i, v] : x) out = out + scaled(basis[i], v);
  return out;
}

}  // namespace

Report check_action(const DGLA& L, const ModuleAction& a) {
  const std::size_t n = a.E.space.dim();
  if (a.rho.size() != L.dim()) throw DimensionError("action needs one matrix per basis vector of L");
  for (const auto& m : a.rho)
    if (m.rows() != n || m.cols() != n) throw DimensionError("action matrix has the wrong size");
  Report ec = check_complex(a.E);
  if (!ec.pass) return Report::fail("action", "module is not a complex: " + ec.message, ec.witness);
  for (std::size_t x = 0; x < L.dim(); ++x) {
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [r, v] : a.rho[x].column(c))
        if (a.E.space.degree(r) != a.E.space.degree(c) + L.degree(x)) {
          return Report::fail("action", "ρ(a) does not have the degree of a", {L.space()[x].name});
        }
  }
  for (std::size_t x = 0; x < L.dim(); ++x) {
    for (std::size_t y = 0; y < L.dim(); ++y) {
      Matrix lhs = combination(a.rho, L.bracket(x, y), n);
      Scalar s = (L.degree(x) * L.degree(y)) % 2 == 0 ? Scalar(1) : Scalar(-1);
      Matrix rhs = a.rho[x] * a.rho[y] - scaled(a.rho[y] * a.rho[x], s);
      if (lhs != rhs) {
        return Report::fail("action", "ρ([a,b]) != ρ(a)ρ(b) - (-1)^{|a||b|}ρ(b)ρ(a)",
                            {L.space()[x].name, L.space()[y].name});
      }
    }
    Matrix lhs = combination(a.rho, L.d().column(x), n);
    Scalar s = L.degree(x) % 2 == 0 ? Scalar(1) : Scalar(-1);
    Matrix rhs = a.E.d * a.rho[x] - scaled(a.rho[x] * a.E.d, s);
    if (lhs != rhs) return Report::fail("action", "ρ(da) != [d_E, ρ(a)]", {L.space()[x].name});
  }
  return Report::ok("action");
}

bool is_faithful(const ModuleAction& a) {
  const std::size_t n = a.E.space.dim();
  Matrix flat(n * n, a.rho.size());
  for (std::size_t x = 0; x < a.rho.size(); ++x) {
    SparseVec col;
    std::map<std::size_t, Scalar> acc;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [r, v] : a.rho[x].column(c)) acc[r * n + c] = v;
    for (const auto& [i, v] : acc) col.push_back(i, v);
    flat.set_column(x, col);
  }
  return rank(flat) == a.rho.size();
}

// ---------------------------------------------------------------- RMatrix

RMatrix RMatrix::scalar(const ArtinAlgebra& R, const Matrix& m) {
  RMatrix out;
  out.part.assign(R.dim() + 1, Matrix(m.rows(), m.cols()));
  out.part[0] = m;
  return out;
}

bool RMatrix::is_zero() const {
  return std::all_of(part.begin(), part.end(), [](const Matrix& m) { return m.is_zero(); });
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  if (a.part.size() != b.part.size()) throw DimensionError("matrices over different rings");
  RMatrix out = a;
  for (std::size_t i = 0; i < a.part.size(); ++i) out.part[i] = a.part[i] + b.part[i];
  return out;
}

RMatrix multiply(const ArtinAlgebra& R, const RMatrix& a, const RMatrix& b) {
  const std::size_t n = a.part[0].rows();
  RMatrix out;
  out.part.assign(R.dim() + 1, Matrix(n, b.part[0].cols()));
  for (std::size_t i = 0; i < a.part.size(); ++i) {
    if (a.part[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.part.size(); ++j) {
      if (b.part[j].is_zero()) continue;
      SparseVec e = ring_mul(R, SparseVec::unit(i), SparseVec::unit(j));
      if (e.empty()) continue;
      Matrix p = a.part[i] * b.part[j];
      for (const auto& [k, v] : e) out.part[k] = out.part[k] + scaled(p, v);
    }
  }
  return out;
}

RMatrix act(const ArtinAlgebra& R, const ModuleAction& a, const Tensor& x) {
  const std::size_t n = a.E.space.dim();
  if (x.size() != a.rho.size()) throw DimensionError("element does not match the action");
  RMatrix out;
  out.part.assign(R.dim() + 1, Matrix(n, n));
  for (std::size_t b = 0; b < x.size(); ++b)
    for (const auto& [l, v] : x[b]) out.part[l + 1] = out.part[l + 1] + scaled(a.rho[b], v);
  return out;
}

RMatrix exp_nilpotent(const ArtinAlgebra& R, const RMatrix& x) {
  if (!x.part[0].is_zero()) throw PreconditionError("exp needs coefficients in m");
  const std::size_t n = x.part[0].rows();
  RMatrix result = RMatrix::scalar(R, Matrix::identity(n));
  RMatrix term = result;
  for (std::size_t k = 1; k <= R.dim(); ++k) {
    term = multiply(R, term, x);
    for (auto& p : term.part) p = scaled(p, Scalar(1, static_cast<long>(k)));
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

DeformedComplex deformed_differential(const MCElement& u, const ModuleAction& a) {
  validate(u);
  Report ar = check_action(u.L, a);
  if (!ar.pass) throw PreconditionError("not a DGLA action: " + ar.message);
  DeformedComplex out{u.R, a.E, RMatrix::scalar(u.R, a.E.d) + act(u.R, a, u.u), Report::ok("deformed-differential")};
  RMatrix sq = multiply(u.R, out.d, out.d);
  for (std::size_t i = 0; i < sq.part.size(); ++i) {
    if (sq.part[i].is_zero()) continue;
    std::size_t c = 0;
    while (sq.part[i].column(c).empty()) ++c;
    std::size_t r = sq.part[i].column(c).leading();
    std::string coeff = i == 0 ? "1" : u.R.names[i - 1];
    out.square = Report::fail("deformed-differential", "(d')² != 0",
                              {a.E.space[r].name, a.E.space[c].name, coeff});
    Report mc = mc_check(u);
    if (!mc.pass) out.square.notes.push_back("u fails the Maurer-Cartan equation; (d')² = ρ(du + ½[u,u])");
    break;
  }
  return out;
}

// ---------------------------------------------------------- group cochains

GroupCochain group_cochain(std::shared_ptr<const CechModel> model, const MCElement& u) {
  validate(u);
  if (u.L.dim() != model->dgla.dim()) throw ModelError("MC element does not live on this Čech model");
  GroupCochain D{model, u.R, {}, std::nullopt};
  const std::size_t g = model->g.dim();
  if (model->simplices.size() < 2) return D;
  for (const auto& e : model->simplices[1]) {
    Tensor t(g);
    for (std::size_t b = 0; b < g; ++b) t[b] = u.u[model->generator(e, b)];
    D.u[{e[0], e[1]}] = std::move(t);
  }
  return D;
}

MCElement mc_element(const GroupCochain& D) {
  const CechModel& m = *D.model;
  MCElement u{m.dgla, D.R, Tensor(m.dgla.dim())};
  for (const auto& [edge, t] : D.u) {
    std::vector<std::size_t> s{edge.first, edge.second};
    if (!m.offset.count(s)) throw ModelError("cochain on a missing overlap");
    for (std::size_t b = 0; b < t.size(); ++b) u.u[m.generator(s, b)] = t[b];
  }
  return u;
}

namespace {

std::string simplex_label(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "-" : "") + std::to_string(s[i]);
  return out;
}

const Tensor& edge_value(const GroupCochain& D, std::size_t a, std::size_t b) {
  auto it = D.u.find({a, b});
  if (it == D.u.end()) throw ModelError("group cochain is missing the overlap " + simplex_label({a, b}));
  return it->second;
}

}  // namespace

Report group_cocycle_check(const GroupCochain& D) {
  const CechModel& m = *D.model;
  if (D.action) {
    Report ar = check_action(lie_as_dgla(m.g), *D.action);
    if (!ar.pass) throw PreconditionError("module action is not a Lie action: " + ar.message);
    if (!is_faithful(*D.action)) throw PreconditionError("operator form needs a faithful action");
    for (const auto& [key, t] : m.transport)
      if (t != Matrix::identity(m.g.dim())) throw PreconditionError("operator form needs trivial transport");
  }
  Report out = Report::ok("group-cocycle");
  if (m.simplices.size() < 3) return out;
  for (const auto& s : m.simplices[2]) {
    const Tensor& ab = edge_value(D, s[0], s[1]);
    const Tensor& bc = edge_value(D, s[1], s[2]);
    const Tensor& ac = edge_value(D, s[0], s[2]);
    bool bch_ok = bch(m.g, D.R, ab, tensor_apply(m.T(s[0], s[1]), bc)) == ac;
    if (D.action) {
      auto ex = [&](const Tensor& t) { return exp_nilpotent(D.R, act(D.R, *D.action, t)); };
      RMatrix lhs = multiply(D.R, ex(ab), ex(bc));
      RMatrix rhs = ex(ac);
      bool op_ok = true;
      for (std::size_t i = 0; i < lhs.part.size(); ++i) op_ok = op_ok && lhs.part[i] == rhs.part[i];
      if (op_ok != bch_ok) {
        return Report::fail("group-cocycle", "operator and BCH forms disagree", {simplex_label(s)});
      }
    }
    if (!bch_ok) {
      return Report::fail("group-cocycle", "bch(u_ab, T u_bc) != u_ac", {simplex_label(s)});
    }
  }
  return out;
}

MCElement gauge_act(const CechModel& model, const std::vector<Tensor>& w, const MCElement& u) {
  validate(u);
  if (u.L.dim() != model.dgla.dim()) throw ModelError("gauge action needs an MC element on this Čech model");
  if (w.size() != model.nerve.vertices) throw DimensionError("gauge element needs one entry per vertex");
  const std::size_t g = model.g.dim();
  for (const auto& t : w)
    if (t.size() != g) throw DimensionError("gauge entry does not match the Lie algebra");
  MCElement out = u;
  if (model.simplices.size() < 2) return out;
  for (const auto& e : model.simplices[1]) {
    Tensor ue(g);
    for (std::size_t b = 0; b < g; ++b) ue[b] = u.u[model.generator(e, b)];
    Tensor tw = tensor_apply(model.T(e[0], e[1]), w[e[1]]);
    Tensor neg(g);
    tensor_axpy(neg, Scalar(-1), tw);
    Tensor res = bch(model.g, u.R, w[e[0]], bch(model.g, u.R, ue, neg));
    for (std::size_t b = 0; b < g; ++b) out.u[model.generator(e, b)] = res[b];
  }
  return out;
}

}  // namespace jdeform
