#include "jdeform/dgla.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace jdeform {

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

DGLA::DGLA(Complex c) : c_(std::move(c)), br_(c_.space.dim() * c_.space.dim()) {}

SparseVec DGLA::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, va] : x) {
    for (const auto& [b, vb] : y) {
      const SparseVec& ab = bracket(a, b);
      if (!ab.empty()) out.axpy(va * vb, ab);
    }
  }
  return out;
}

void DGLA::set_bracket(std::size_t a, std::size_t b, SparseVec v) {
  SparseVec w = v;
  w.scale(Scalar(-parity_sign(degree(a) * degree(b))));
  br_[a * dim() + b] = std::move(v);
  if (a != b) br_[b * dim() + a] = std::move(w);
}

void DGLA::set_bracket_raw(std::size_t a, std::size_t b, SparseVec v) { br_[a * dim() + b] = std::move(v); }

bool DGLA::abelian() const {
  return std::all_of(br_.begin(), br_.end(), [](const SparseVec& v) { return v.empty(); });
}

Report check_dgla(const DGLA& l) {
  const auto& sp = l.space();
  const std::size_t n = l.dim();
  Report cx = check_complex(l.complex());
  if (!cx.pass) {
    cx.check = "dgla";
    return cx;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [c, v] : l.bracket(a, b)) {
        if (sp.degree(c) != sp.degree(a) + sp.degree(b)) {
          return Report::fail("dgla", "bracket is not of degree 0", {sp[a].name, sp[b].name, sp[c].name});
        }
      }
      SparseVec sym = l.bracket(b, a);
      sym.axpy(Scalar(parity_sign(sp.degree(a) * sp.degree(b))), l.bracket(a, b));
      if (!sym.empty()) {
        return Report::fail("dgla", "graded antisymmetry fails: [a,b] != -(-1)^{|a||b|}[b,a]",
                            {sp[a].name, sp[b].name});
      }
    }
  }
  std::vector<SparseVec> dcol(n);
  for (std::size_t a = 0; a < n; ++a) dcol[a] = l.d().column(a);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // d[a,b] = [da,b] + (-1)^{|a|}[a,db]
      SparseVec lhs = l.d().apply(l.bracket(a, b));
      SparseVec rhs = l.bracket(dcol[a], SparseVec::unit(b));
      rhs.axpy(Scalar(parity_sign(sp.degree(a))), l.bracket(SparseVec::unit(a), dcol[b]));
      lhs.axpy(Scalar(-1), rhs);
      if (!lhs.empty()) {
        return Report::fail("dgla", "Leibniz rule fails: d[a,b] != [da,b] + (-1)^{|a|}[a,db]",
                            {sp[a].name, sp[b].name});
      }
    }
  }
  // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const SparseVec& ab = l.bracket(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const SparseVec& bc = l.bracket(b, c);
        const SparseVec& ac = l.bracket(a, c);
        if (ab.empty() && bc.empty() && ac.empty()) continue;
        SparseVec lhs = l.bracket(SparseVec::unit(a), bc);
        lhs.axpy(Scalar(-1), l.bracket(ab, SparseVec::unit(c)));
        lhs.axpy(Scalar(-parity_sign(sp.degree(a) * sp.degree(b))), l.bracket(SparseVec::unit(b), ac));
        if (!lhs.empty()) {
          return Report::fail("dgla", "graded Jacobi identity fails", {sp[a].name, sp[b].name, sp[c].name});
        }
      }
    }
  }
  return Report::ok("dgla");
}

DGLA truncate_positive(const DGLA& l) {
  std::vector<std::size_t> keep;
  std::vector<std::size_t> local(l.dim(), SIZE_MAX);
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    if (l.degree(i) >= 1) {
      local[i] = keep.size();
      keep.push_back(i);
      gens.push_back(l.space()[i]);
    }
  }
  auto restrict = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [r, x] : v) {
      if (local[r] != SIZE_MAX) out.push_back(local[r], x);
    }
    return out;
  };
  Complex c;
  c.space = GradedSpace(std::move(gens));
  c.d = Matrix(keep.size(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) c.d.set_column(j, restrict(l.d().column(keep[j])));
  DGLA out(std::move(c));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) out.set_bracket_raw(a, b, restrict(l.bracket(keep[a], keep[b])));
  }
  return out;
}

bool h_nonpositive_vanishes(const DGLA& l) {
  if (l.dim() == 0) return true;
  for (int k = l.space().min_degree(); k <= 0; ++k) {
    if (cohomology(l.complex(), k).dim() != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Lie side

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [a, va] : x) {
    for (const auto& [b, vb] : y) {
      const SparseVec& ab = bracket(a, b);
      if (!ab.empty()) out.axpy(va * vb, ab);
    }
  }
  return out;
}

void LieAlgebra::set(std::size_t a, std::size_t b, const SparseVec& v) {
  table[a * dim() + b] = v;
  SparseVec w = v;
  w.scale(Scalar(-1));
  table[b * dim() + a] = w;
}

bool LieAlgebra::is_automorphism(const Matrix& t) const {
  if (t.rows() != dim() || t.cols() != dim()) return false;
  if (rank(t) != dim()) return false;
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = 0; b < dim(); ++b) {
      if (t.apply(bracket(a, b)) != bracket(t.column(a), t.column(b))) return false;
    }
  }
  return true;
}

LieAlgebra abelian_lie(std::size_t dim) {
  LieAlgebra g;
  for (std::size_t i = 0; i < dim; ++i) g.names.push_back("e" + std::to_string(i + 1));
  g.table.assign(dim * dim, SparseVec());
  return g;
}

LieAlgebra heisenberg_lie() {
  LieAlgebra g;
  g.names = {"e12", "e23", "e13"};
  g.table.assign(9, SparseVec());
  g.set(0, 1, SparseVec::unit(2));
  return g;
}

Nerve triangle_nerve() { return Nerve{3, {{0, 1}, {0, 2}, {1, 2}}}; }

Nerve tetrahedron_boundary_nerve() {
  return Nerve{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

Nerve interval_nerve() { return Nerve{2, {{0, 1}}}; }

// ------------------------------------------------------------ Čech model

namespace {

std::string simplex_name(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<std::size_t> drop(const std::vector<std::size_t>& s, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k != i) out.push_back(s[k]);
  }
  return out;
}

}  // namespace

CechModel cech_dgla(const Nerve& nerve, const LocalSystem& data) {
  CechModel m;
  m.nerve = nerve;
  m.g = data.g;
  const std::size_t gd = data.g.dim();
  if (data.g.table.size() != gd * gd) throw ModelError("Lie algebra table has wrong size");
  if (nerve.vertices == 0) throw ModelError("nerve has no vertices");

  // collect simplices by dimension
  std::set<std::vector<std::size_t>> all;
  for (std::size_t v = 0; v < nerve.vertices; ++v) all.insert({v});
  for (const auto& s : nerve.simplices) {
    if (s.size() < 2) throw ModelError("simplices must have at least two vertices");
    if (s.size() > 4) throw ModelError("simplices above dimension 3 are not supported");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= nerve.vertices) throw ModelError("simplex vertex out of range: " + simplex_name(s));
      if (i > 0 && s[i - 1] >= s[i]) throw ModelError("simplex vertices must increase: " + simplex_name(s));
    }
    all.insert(s);
  }
  for (const auto& s : all) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!all.count(drop(s, i))) throw ModelError("nerve is not closed under faces at " + simplex_name(s));
    }
  }
  m.simplices.resize(4);
  for (const auto& s : all) m.simplices[s.size() - 1].push_back(s);
  while (!m.simplices.empty() && m.simplices.back().empty()) m.simplices.pop_back();

  // spanning tree by BFS from vertex 0, neighbours in increasing order
  std::vector<std::vector<std::size_t>> adj(nerve.vertices);
  if (m.simplices.size() > 1) {
    for (const auto& e : m.simplices[1]) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<bool> seen(nerve.vertices, false);
  std::set<std::pair<std::size_t, std::size_t>> tree;
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.insert({std::min(v, w), std::max(v, w)});
      queue.push_back(w);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) throw ModelError("nerve is disconnected");
  m.tree_edges.assign(tree.begin(), tree.end());

  for (const auto& [edge, mat] : data.monodromy) {
    if (!all.count({edge.first, edge.second})) {
      throw ModelError("monodromy on a missing edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second));
    }
    if (tree.count(edge)) {
      throw ModelError("monodromy given on spanning-tree edge " + std::to_string(edge.first) + "-" +
                       std::to_string(edge.second));
    }
    if (!data.g.is_automorphism(mat)) {
      throw ModelError("monodromy on edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                       " is not a Lie algebra automorphism");
    }
  }
  if (m.simplices.size() > 1) {
    for (const auto& e : m.simplices[1]) {
      auto key = std::make_pair(e[0], e[1]);
      auto it = data.monodromy.find(key);
      m.transport[key] = it == data.monodromy.end() ? Matrix::identity(gd) : it->second;
    }
  }
  for (std::size_t v = 0; v < nerve.vertices; ++v) m.transport[{v, v}] = Matrix::identity(gd);
  if (m.simplices.size() > 2) {
    for (const auto& t : m.simplices[2]) {
      if (m.T(t[0], t[1]) * m.T(t[1], t[2]) != m.T(t[0], t[2])) {
        throw ModelError("local system is not flat on triangle " + simplex_name(t));
      }
    }
  }

  // generators: degree k = simplex dimension, then simplex order, then g basis
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < m.simplices.size(); ++k) {
    for (const auto& s : m.simplices[k]) {
      m.offset[s] = gens.size();
      for (std::size_t b = 0; b < gd; ++b) {
        gens.push_back({data.g.names[b] + "@" + simplex_name(s), static_cast<int>(k)});
      }
    }
  }
  const std::size_t dim = gens.size();
  Complex c;
  c.space = GradedSpace(std::move(gens));
  c.d = Matrix(dim, dim);
  // (δc)(v0..v_{k+1}) = T(v0,v1) c(v1..) + Σ_{i>=1} (-1)^i c(..v̂i..)
  for (std::size_t k = 0; k + 1 < m.simplices.size(); ++k) {
    for (const auto& s : m.simplices[k + 1]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = drop(s, i);
        for (std::size_t b = 0; b < gd; ++b) {
          std::size_t src = m.generator(face, b);
          if (i == 0) {
            for (const auto& [r, v] : m.T(s[0], s[1]).column(b)) c.d.add(m.generator(s, r), src, v);
          } else {
            c.d.add(m.generator(s, b), src, Scalar(parity_sign(static_cast<int>(i))));
          }
        }
      }
    }
  }
  m.dgla = DGLA(std::move(c));

  // cup(a,b)(v0..v_{p+q}) = [a(v0..vp), T(v0,vp) b(vp..v_{p+q})]
  // {a,b} = ½ (cup(a,b) - (-1)^{pq} cup(b,a))
  const Scalar half(1, 2);
  for (std::size_t p = 0; p < m.simplices.size(); ++p) {
    for (std::size_t q = 0; p + q < m.simplices.size(); ++q) {
      for (const auto& s : m.simplices[p + q]) {
        std::vector<std::size_t> front(s.begin(), s.begin() + static_cast<long>(p) + 1);
        std::vector<std::size_t> back(s.begin() + static_cast<long>(p), s.end());
        const Matrix& t = m.T(s[0], s[p]);
        for (std::size_t a = 0; a < gd; ++a) {
          for (std::size_t b = 0; b < gd; ++b) {
            SparseVec val = data.g.bracket(SparseVec::unit(a), t.column(b));
            if (val.empty()) continue;
            std::size_t ga = m.generator(front, a), gb = m.generator(back, b);
            SparseVec img;
            for (const auto& [r, v] : val) img.push_back(m.generator(s, r), v);
            // contributes ½ img to {ga,gb} and -(-1)^{pq} ½ img to {gb,ga}
            SparseVec ab = m.dgla.bracket(ga, gb);
            ab.axpy(half, img);
            m.dgla.set_bracket_raw(ga, gb, ab);
            SparseVec ba = m.dgla.bracket(gb, ga);
            ba.axpy(Scalar(-parity_sign(static_cast<int>(p * q))) * half, img);
            m.dgla.set_bracket_raw(gb, ga, ba);
          }
        }
      }
    }
  }
  Report r = check_dgla(m.dgla);
  if (!r.pass) {
    std::string w;
    for (const auto& x : r.witness) w += " " + x;
    throw ModelError("Čech model is not a DGLA (" + r.message + ":" + w + ")");
  }
  return m;
}

}  // namespace jdeform
