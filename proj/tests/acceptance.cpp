// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

using namespace jdeform;
using namespace jdeform::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Tensor add(Tensor x, const Tensor& y, const Scalar& s = Scalar(1)) {
  tensor_axpy(x, s, y);
  return x;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& n) {
  return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
}

// ------------------------------------------------------------ criterion 1

Outcome jacobi_soundness() {
  auto t0 = Clock::now();
  std::mt19937 rng(101);
  int complexes = 0;
  std::size_t basis = 0;
  for (int trial = 0; trial < 50; ++trial) {
    DGLA L = random_dgla(rng);
    Report axioms = check_dgla(L);
    if (!axioms.pass) return {false, "generated DGLA " + std::to_string(trial) + " fails: " + axioms.message};
    for (std::size_t n = 1; n <= 4; ++n) {
      JacobiComplex J = build_jacobi(L, n);
      basis += J.total.space.dim();
      Report r = check_complex(J.total);
      if (!r.pass) return {false, "DGLA " + std::to_string(trial) + " n=" + std::to_string(n) + ": " + r.message};
      ++complexes;
    }
  }
  double s = seconds_since(t0);
  return {s < 60.0, "50 DGLAs x n=1..4, " + std::to_string(complexes) + " totalizations (" + std::to_string(basis) +
                        " basis vectors), " + fmt_seconds(s)};
}

// ------------------------------------------------------------ criterion 2

/// Random monomial quotient with dim m <= 6.
ArtinAlgebra random_standard_ring(std::mt19937& rng) {
  for (;;) {
    std::size_t h = 1 + rng() % 3;
    std::size_t n = 1 + rng() % 4;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < h; ++i) vars.push_back("t" + std::to_string(i + 1));
    std::vector<Exponents> killed;
    for (std::size_t d = 2; d <= n; ++d)
      for (const auto& e : sym_basis(h, d))
        if (rng() % 3 == 0) killed.push_back(e);
    ArtinAlgebra R = monomial_quotient(vars, n, killed);
    if (R.dim() >= 1 && R.dim() <= 6) return R;
  }
}

/// The same ring in the basis f_j = t_j + Σ c_ij t_i over deeper-or-equal t_i.
ArtinAlgebra level_preserving_change(std::mt19937& rng, const ArtinAlgebra& R) {
  const std::size_t d = R.dim();
  Matrix P = Matrix::identity(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = j + 1; i < d; ++i)
      if (R.levels[i] >= R.levels[j] && rng() % 2) P.set(i, j, small_scalar(rng));
  Matrix Pinv = invert(P);
  ArtinAlgebra S = R;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) S.mult[a * d + b] = Pinv.apply(R.mul(P.column(a), P.column(b)));
  return S;
}

Outcome os_round_trip() {
  std::mt19937 rng(202);
  int count = 0, changed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ArtinAlgebra base = random_standard_ring(rng);
    ArtinAlgebra R = level_preserving_change(rng, base);
    changed += !(R == base);
    OSStructure os = algebra_to_os(R);
    if (!is_standard(os)) return {false, "trial " + std::to_string(trial) + ": OS structure is not standard"};
    ArtinAlgebra back = os_to_algebra(os);
    Report r = check_artin(back);
    if (!r.pass) return {false, "trial " + std::to_string(trial) + ": " + r.message};
    if (!is_standard(back)) return {false, "trial " + std::to_string(trial) + ": m_i != m^i"};
    if (!(algebra_to_os(back) == os)) return {false, "trial " + std::to_string(trial) + ": round trip differs"};
    ++count;
  }
  return {true, std::to_string(count) + " standard OS structures (dim <= 6), " + std::to_string(changed) +
                    " in a non-monomial basis"};
}

// ------------------------------------------------------------ criterion 3

Outcome abelian_oracle() {
  for (std::size_t n = 1; n <= 4; ++n) {
    UniversalRing U = ring_of(e1(), n);
    // C[t]/(t^{n+1}) by hand: t^a t^b = t^{a+b} for a + b <= n
    std::vector<SparseVec> table(n * n);
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; a + b <= n; ++b) table[(a - 1) * n + (b - 1)] = SparseVec::unit(a + b - 1);
    if (U.R.mult != table) return {false, "multiplication table differs at n=" + std::to_string(n)};
    std::vector<std::size_t> levels(n);
    for (std::size_t k = 0; k < n; ++k) levels[k] = k + 1;
    if (U.R.levels != levels) return {false, "filtration differs at n=" + std::to_string(n)};
    // one generator in degree 1: Sym^p H¹ is one-dimensional for every p
    if (U.os.dim() != n) return {false, "dim H^0(J_n) != n at n=" + std::to_string(n)};
  }
  return {true, "ring_of(E1, n) = C[t]/(t^{n+1}) and dim H^0(J_n) = n for n = 1..4"};
}

// ------------------------------------------------------------ criterion 4

/// φ : R -> S from the images of the basis of m.
RingHom hom_from_images(const ArtinAlgebra& R, const ArtinAlgebra& S, const std::vector<SparseVec>& images) {
  RingHom h{R, S, Matrix(S.dim(), R.dim())};
  for (std::size_t l = 0; l < R.dim(); ++l) h.map.set_column(l, images[l]);
  return h;
}

Outcome obstruction_oracle() {
  // E2: R_2 = C[t]/(t²), ob_2 = [1]
  UniversalRing U2 = ring_of(e2(), 2);
  if (U2.R.dim() != 1 || !U2.R.product(0, 0).empty()) return {false, "ring_of(E2, 2) is not C[t]/(t^2)"};
  ObstructionData ob2 = obstruction_tower(e2(), 2);
  const auto& lv2 = ob2.levels.at(0);
  if (lv2.small.rows() != 1 || lv2.small.cols() != 1 || lv2.small.at(0, 0) != Scalar(1))
    return {false, "ob_2(E2) != [1]"};

  // brute-force lifting over S = C[t]/(t³): u = x ⊗ (a t + b t²) is MC iff
  // x -> a t + b t² is a ring map R_2 -> S
  ArtinAlgebra S = truncated_polynomial(2);
  int lifts = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      SparseVec mu;
      mu.add(0, Scalar(a));
      mu.add(1, Scalar(b));
      MCElement u{e2(), S, {mu, SparseVec()}};
      bool mc = mc_check(u).pass;
      bool hom = check_ring_hom(hom_from_images(U2.R, S, {mu})).pass;
      if (mc != hom) return {false, "E2 lifting oracle disagrees at a=" + std::to_string(a) + " b=" + std::to_string(b)};
      if (mc && kodaira_spencer(u, 2).hom.map != hom_from_images(U2.R, S, {mu}).map)
        return {false, "E2 Kodaira-Spencer map differs from the lifting oracle"};
      lifts += mc;
    }
  if (lifts != 5) return {false, "E2: expected exactly the 5 lifts with a = 0"};

  // E2′: R_2 = C[t1,t2]/(t1 t2, m³), dim K² = 2
  UniversalRing U = ring_of(e2prime(), 2);
  ObstructionData ob = obstruction_tower(e2prime(), 2);
  if (ob.levels.at(0).kernel_big.basis.size() != 2) return {false, "dim K^2(E2') != 2"};
  ArtinAlgebra Q = monomial_quotient({"t1", "t2"}, 2, {{1, 1}});
  if (U.R.dim() != Q.dim()) return {false, "dim ring_of(E2', 2) != 4"};
  const auto& N = U.R.names;
  std::vector<SparseVec> img(Q.dim());
  img[index_of(Q.names, "t1")] = SparseVec::unit(index_of(N, "x1"));
  img[index_of(Q.names, "t2")] = SparseVec::unit(index_of(N, "x2"));
  img[index_of(Q.names, "t1^2")] = U.R.mul(img[index_of(Q.names, "t1")], img[index_of(Q.names, "t1")]);
  img[index_of(Q.names, "t2^2")] = U.R.mul(img[index_of(Q.names, "t2")], img[index_of(Q.names, "t2")]);
  RingHom iso = hom_from_images(Q, U.R, img);
  if (!check_ring_hom(iso).pass || rank(iso.map) != Q.dim())
    return {false, "no isomorphism C[t1,t2]/(t1t2, m^3) -> ring_of(E2', 2)"};

  // brute-force lifting over T = C[t1,t2]/m³
  ArtinAlgebra T = monomial_quotient({"t1", "t2"}, 2);
  std::mt19937 rng(404);
  int mc_count = 0, samples = 600;
  for (int trial = 0; trial < samples; ++trial) {
    SparseVec m1 = random_m_element(rng, T, 1, 2 + trial % 3), m2 = random_m_element(rng, T, 1, 2 + trial % 3);
    MCElement u{e2prime(), T, {m1, m2, SparseVec()}};
    std::vector<SparseVec> images(U.R.dim());
    images[index_of(N, "x1")] = m1;
    images[index_of(N, "x2")] = m2;
    images[index_of(N, "x1*x1")] = T.mul(m1, m1);
    images[index_of(N, "x2*x2")] = T.mul(m2, m2);
    RingHom phi = hom_from_images(U.R, T, images);
    bool mc = mc_check(u).pass;
    if (mc != check_ring_hom(phi).pass) return {false, "E2' lifting oracle disagrees at sample " + std::to_string(trial)};
    if (mc && kodaira_spencer(u, 2).hom.map != phi.map)
      return {false, "E2' Kodaira-Spencer map differs from the lifting oracle"};
    mc_count += mc;
  }
  return {mc_count > 20 && mc_count < samples,
          "E2: ob_2 = [1], 5/25 lifts over C[t]/(t^3); E2': dim K^2 = 2, iso from C[t1,t2]/(t1t2,m^3), " +
              std::to_string(mc_count) + "/" + std::to_string(samples) + " lifting samples agree"};
}

// -------------------------------------------------------- criteria 5 and 6

struct EpsilonStats {
  Outcome agreement;
  Outcome morphic;
};

EpsilonStats epsilon_and_morphic() {
  std::mt19937 rng(505);
  int pass = 0, fail = 0, morphic = 0, skipped = 0;
  EpsilonStats out;
  for (int trial = 0; trial < 120; ++trial) {
    McInstance inst = random_mc_instance(rng);
    bool mc = mc_check(inst.u).pass;
    Hypercochain v = epsilon(inst.u, inst.n);
    bool hc = hypercocycle_check(v).pass;
    if (mc != hc) {
      out.agreement = {false, "disagreement at instance " + std::to_string(trial)};
      return out;
    }
    (mc ? pass : fail)++;
    if (!hc) continue;
    if (!h_nonpositive_vanishes(inst.u.L)) {
      ++skipped;
      continue;
    }
    KSContext ctx = ks_context(inst.u.L, inst.n);
    Report r = morphic_check(hypercocycle_class(v, ctx));
    if (!r.pass) {
      out.morphic = {false, "instance " + std::to_string(trial) + ": " + r.message};
      return out;
    }
    ++morphic;
  }
  out.agreement = {pass > 0 && fail > 0, std::to_string(pass + fail) + " random (L, R, u): " + std::to_string(pass) +
                                             " MC, " + std::to_string(fail) + " not MC, all agree"};
  out.morphic = {morphic >= 20, std::to_string(morphic) + " hypercocycles give morphic elements (" +
                                    std::to_string(skipped) + " skipped: H^{<=0} != 0)"};
  return out;
}

// ------------------------------------------------------------ criterion 7

Outcome gauge_invariance() {
  CechModel model = diamond_heisenberg();
  if (!h_nonpositive_vanishes(model.dgla)) return {false, "diamond model has H^{<=0} != 0"};
  std::mt19937 rng(707);
  const std::vector<std::pair<std::size_t, int>> plan = {{2, 24}, {3, 18}, {4, 10}};
  int total = 0, nontrivial = 0;
  auto t0 = Clock::now();
  for (const auto& [order, count] : plan) {
    KSContext ctx = ks_context(model.dgla, order);
    for (int trial = 0; trial < count; ++trial) {
      ArtinAlgebra R = random_ring(rng, order);
      MCElement u{model.dgla, R, Tensor(model.dgla.dim())};
      for (auto a : model.dgla.space().indices_in_degree(1)) u.u[a] = random_m_element(rng, R, 1, 3);
      std::vector<Tensor> w;
      for (std::size_t v = 0; v < model.nerve.vertices; ++v) w.push_back(random_tensor(rng, 3, R));
      MCElement moved = gauge_act(model, w, u);
      if (!mc_check(u).pass || !mc_check(moved).pass) return {false, "MC fails on the diamond model"};
      KodairaSpencer a = kodaira_spencer(u, ctx), b = kodaira_spencer(moved, ctx);
      if (a.hom.map != b.hom.map)
        return {false, "order " + std::to_string(order) + " trial " + std::to_string(trial) + ": classes differ"};
      nontrivial += !a.hom.map.is_zero();
      ++total;
    }
  }
  return {total >= 50, std::to_string(total) + " gauge pairs on the diamond Heisenberg model, orders 2-4 (" +
                           std::to_string(nontrivial) + " with nonzero class), " + fmt_seconds(seconds_since(t0))};
}

// ------------------------------------------------------------ criterion 8

/// Random cochain on a Čech model: MC by construction (gauge of zero plus
/// a top-level cocycle), or perturbed.
MCElement random_cech_element(std::mt19937& rng, const CechModel& model, const ArtinAlgebra& R, bool perturb) {
  std::vector<Tensor> w;
  for (std::size_t v = 0; v < model.nerve.vertices; ++v) w.push_back(random_tensor(rng, model.g.dim(), R));
  MCElement u = gauge_act(model, w, MCElement{model.dgla, R, Tensor(model.dgla.dim())});
  std::size_t e = nilpotency(R);
  if (perturb) {
    auto gens = model.dgla.space().indices_in_degree(1);
    u.u[gens[rng() % gens.size()]].axpy(Scalar(1), random_m_element(rng, R, 1 + rng() % e, 1));
  } else {
    for (const auto& z : cocycles_deg1(model.dgla)) {
      SparseVec mu = random_m_element(rng, R, e, 2);
      for (const auto& [a, v] : z) u.u[a].axpy(v, mu);
    }
  }
  return u;
}

Outcome group_dictionary() {
  std::mt19937 rng(808);
  int checked = 0, cocycles = 0, literal_checked = 0;
  for (const Nerve& nerve : {triangle_nerve(), tetrahedron_boundary_nerve()}) {
    auto model = std::make_shared<const CechModel>(trivial_heisenberg(nerve));
    for (std::size_t order = 2; order <= 4; ++order) {
      for (int trial = 0; trial < 16; ++trial) {
        ArtinAlgebra R = trial % 2 ? truncated_polynomial(order) : random_ring(rng, order);
        if (nilpotency(R) < 1) continue;
        MCElement u = random_cech_element(rng, *model, R, trial % 3 == 0);
        GroupCochain D = group_cochain(model, u);
        D.action = heisenberg_defining_action();
        Report co = group_cocycle_check(D);
        if (co.message == "operator and BCH forms disagree") return {false, "operator form disagrees with BCH"};
        if (co.pass != mc_check(u).pass)
          return {false, "dictionary fails: order " + std::to_string(order) + " trial " + std::to_string(trial)};
        cocycles += co.pass;
        ++checked;

        if (nilpotency(R) != 2 || model->simplices.size() < 3) continue;
        // order two: the cocycle condition is -½[u_ab, u_bc] = u_bc - u_ac + u_ab
        bool literal = true;
        for (const auto& s : model->simplices[2]) {
          Tensor lhs = tensor_bracket(model->g, R, D.u.at({s[0], s[1]}), D.u.at({s[1], s[2]}));
          for (auto& v : lhs) v.scale(Scalar(-1, 2));
          Tensor rhs = add(add(D.u.at({s[1], s[2]}), D.u.at({s[0], s[2]}), Scalar(-1)), D.u.at({s[0], s[1]}));
          literal = literal && lhs == rhs;
        }
        if (literal != co.pass) return {false, "order-2 cocycle check differs from the literal equation"};
        ++literal_checked;
      }
    }
  }
  return {cocycles > 0 && cocycles < checked,
          std::to_string(checked) + " cochains on triangle and tetrahedron nerves, orders 2-4 (" +
              std::to_string(cocycles) + " cocycles, " + std::to_string(literal_checked) +
              " against the literal order-2 equation)"};
}

// ------------------------------------------------------------ criterion 9

Outcome bch_oracle() {
  const std::size_t n = 6;
  LieAlgebra g = strictly_upper(n);
  std::mt19937 rng(909);
  int count = 0;
  for (std::size_t order = 1; order <= 5; ++order) {
    ArtinAlgebra R = truncated_polynomial(5);
    for (int trial = 0; trial < 4; ++trial) {
      Tensor a = random_tensor(rng, g.dim(), R), b = random_tensor(rng, g.dim(), R);
      // truncated at `order`, BCH is exact for coefficients in m with m^{order+1} = 0
      for (auto* x : {&a, &b})
        for (auto& c : *x) {
          SparseVec kept;
          for (const auto& [l, v] : c)
            if (l < order) kept.add(l, v);
          c = kept;
        }
      ArtinAlgebra S = truncated_polynomial(order);
      RingMat oracle = rm_log(S, rm_mul(S, rm_exp(S, to_ring_mat(n, a)), rm_exp(S, to_ring_mat(n, b))));
      if (to_ring_mat(n, bch(g, S, a, b)) != oracle) return {false, "order " + std::to_string(order) + " differs"};
      ++count;
    }
  }
  ArtinAlgebra R = truncated_polynomial(5);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor a = random_tensor(rng, g.dim(), R), b = random_tensor(rng, g.dim(), R);
    RingMat oracle = rm_log(R, rm_mul(R, rm_exp(R, to_ring_mat(n, a)), rm_exp(R, to_ring_mat(n, b))));
    if (to_ring_mat(n, bch(g, R, a, b, 5)) != oracle) return {false, "C[t]/(t^6) sample differs"};
    ++count;
  }
  return {true, std::to_string(count) + " pairs of strictly upper 6x6 matrices over C[t]/(t^{k+1}), k <= 5"};
}

// ----------------------------------------------------------- criterion 10

Outcome universality() {
  std::mt19937 rng(1010);
  std::vector<std::pair<std::string, DGLA>> models = {
      {"E1", e1()}, {"E2", e2()}, {"E2'", e2prime()},
      {"triangle", truncate_positive(trivial_heisenberg(triangle_nerve()).dgla)}};
  int pulled = 0;
  for (const auto& [name, L] : models) {
    MCElement univ = mc_solve(L, 2);
    if (!mc_check(univ).pass) return {false, name + ": universal element is not MC"};
    KSContext ctx = ks_context(L, 2);
    if (kodaira_spencer(univ, ctx).hom.map != Matrix::identity(univ.R.dim()))
      return {false, name + ": Kodaira-Spencer of the universal element is not the identity"};
    // no degree-0 part: the gauge group is trivial, so classes are equal
    // exactly when the elements are
    for (int trial = 0; trial < 12; ++trial) {
      ArtinAlgebra R = random_ring(rng, 2);
      Tensor x(L.dim());
      for (auto a : L.space().indices_in_degree(1)) x[a] = random_m_element(rng, R);
      MCElement u{L, R, x};
      if (!mc_check(u).pass) continue;
      RingHom alpha = kodaira_spencer(u, ctx).hom;
      if (pullback(alpha, univ).u != u.u) return {false, name + ": pullback does not reproduce u"};
      ++pulled;
    }
  }
  return {pulled > 20, "E1, E2, E2', truncated triangle model: KS(universal) = id, " + std::to_string(pulled) +
                           " pullbacks reproduce u"};
}

// ----------------------------------------------------------- criterion 11

Outcome kunneth() {
  std::mt19937 rng(1111);
  int count = 0;
  while (count < 25) {
    std::vector<Generator> gens;
    std::size_t dim = 1 + rng() % 6;
    for (std::size_t i = 0; i < dim; ++i) gens.push_back({"g" + std::to_string(i), static_cast<int>(rng() % 3)});
    std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) { return a.degree < b.degree; });
    Complex c;
    c.space = GradedSpace(gens);
    c.d = Matrix(dim, dim);
    // random d : L⁰ -> L¹ (injective if possible), d : L¹ -> L² with d² = 0
    auto l0 = c.space.indices_in_degree(0), l1 = c.space.indices_in_degree(1), l2 = c.space.indices_in_degree(2);
    for (std::size_t k = 0; k < l0.size() && k < l1.size(); ++k) c.d.set(l1[k], l0[k], small_scalar(rng) + Scalar(3));
    for (std::size_t k = l0.size(); k < l1.size(); ++k)
      for (auto t : l2)
        if (rng() % 2) c.d.set(t, l1[k], small_scalar(rng));
    if (!check_complex(c).pass) continue;
    // H⁰ = ker d⁰ = 0 and H¹ by ranks
    std::size_t r0 = rank(c.block(0)), r1 = rank(c.block(1));
    if (r0 != l0.size()) continue;
    std::size_t h1 = l1.size() - r1 - r0;
    DGLA L(c);
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t expect = 0;
      for (std::size_t p = 1; p <= n; ++p) expect += binomial(h1 + p - 1, p);
      std::size_t got = jacobi_h0(*hyper_jacobi(L, n)).dim();
      if (got != expect)
        return {false, "dim H^0(J_" + std::to_string(n) + ") = " + std::to_string(got) + ", expected " +
                           std::to_string(expect)};
    }
    ++count;
  }
  return {true, std::to_string(count) + " zero-bracket DGLAs with H^0 = 0, n = 1..4"};
}

// ----------------------------------------------------------- criterion 12

std::string golden_name(const std::string& fixture, const std::string& cmd, const std::string& flags) {
  std::string s = fixture + "." + cmd + (flags.empty() ? "" : " " + flags);
  for (auto& ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '.' && ch != '-') ch = '_';
  while (!s.empty() && s.back() == '_') s.pop_back();
  return s;
}

Outcome cli_determinism() {
  const std::string dir = JDEFORM_SOURCE_DIR;
  std::ifstream manifest(dir + "/tests/golden/manifest.txt");
  if (!manifest) return {false, "cannot read the golden manifest"};
  std::string line;
  int files = 0, runs = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cmd, fixture, flag;
    int code = 0;
    ls >> cmd >> fixture >> code;
    std::vector<std::string> flags;
    std::string joined;
    while (ls >> flag) {
      flags.push_back(flag);
      joined += (joined.empty() ? "" : " ") + flag;
    }
    std::ifstream golden(dir + "/tests/golden/" + golden_name(fixture, cmd, joined) + ".out", std::ios::binary);
    if (!golden) return {false, "missing golden file for " + line};
    std::string expect((std::istreambuf_iterator<char>(golden)), std::istreambuf_iterator<char>());
    for (const char* threads : {"1", "1", "4"}) {
      std::vector<std::string> args{cmd, dir + "/fixtures/" + fixture + ".json"};
      args.insert(args.end(), flags.begin(), flags.end());
      args.insert(args.end(), {"--threads", threads});
      std::ostringstream out, err;
      int got = cli::run(args, out, err);
      if (got != code) return {false, line + ": exit " + std::to_string(got) + " " + err.str()};
      if (out.str() != expect) return {false, line + " (threads " + threads + "): output differs from golden"};
      ++runs;
    }
    ++files;
  }
  return {files >= 10, std::to_string(files) + " golden files, " + std::to_string(runs) +
                           " runs (twice single-threaded, once with 4 threads)"};
}

}  // namespace

int main() {
  std::optional<EpsilonStats> eps;
  auto epsilon_stats = [&]() -> const EpsilonStats& {
    if (!eps) eps = epsilon_and_morphic();
    return *eps;
  };
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Jacobi complex soundness", jacobi_soundness},
      {"OS/artin round trip", os_round_trip},
      {"abelian oracle E1", abelian_oracle},
      {"obstruction oracle E2, E2'", obstruction_oracle},
      {"epsilon/MC equivalence", [&] { return epsilon_stats().agreement; }},
      {"morphicity of epsilon classes", [&] { return epsilon_stats().morphic; }},
      {"gauge invariance of Kodaira-Spencer", gauge_invariance},
      {"group/MC dictionary", group_dictionary},
      {"BCH against matrix log(exp exp)", bch_oracle},
      {"universality at order 2", universality},
      {"Kunneth dimensions", kunneth},
      {"CLI golden determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
