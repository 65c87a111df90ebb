#include "jdeform/graded.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jdeform {

// ------------------------------------------------------------ GradedSpace

GradedSpace::GradedSpace(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!index_.emplace(gens_[i].name, i).second) {
      throw ModelError("duplicate basis name \"" + gens_[i].name + "\"");
    }
  }
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.degree);
  return out;
}

std::optional<std::size_t> GradedSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> GradedSpace::indices_in_degree(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree == k) out.push_back(i);
  }
  return out;
}

int GradedSpace::min_degree() const {
  int m = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) m = i == 0 ? gens_[i].degree : std::min(m, gens_[i].degree);
  return m;
}

int GradedSpace::max_degree() const {
  int m = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) m = i == 0 ? gens_[i].degree : std::max(m, gens_[i].degree);
  return m;
}

// ---------------------------------------------------------------- Complex

Matrix Complex::block(int k) const {
  auto src = space.indices_in_degree(k);
  auto tgt = space.indices_in_degree(k + 1);
  std::vector<std::size_t> local(space.dim(), SIZE_MAX);
  for (std::size_t i = 0; i < tgt.size(); ++i) local[tgt[i]] = i;
  Matrix out(tgt.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    SparseVec col;
    for (const auto& [r, v] : d.column(src[j])) {
      if (local[r] != SIZE_MAX) col.push_back(local[r], v);
    }
    // local indices increase with global ones, so col is sorted
    out.set_column(j, std::move(col));
  }
  return out;
}

Report check_complex(const Complex& c) {
  const std::size_t n = c.space.dim();
  if (c.d.rows() != n || c.d.cols() != n) {
    throw DimensionError("differential is " + std::to_string(c.d.rows()) + "x" + std::to_string(c.d.cols()) +
                         " on a space of dimension " + std::to_string(n));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [r, v] : c.d.column(j)) {
      if (c.space.degree(r) != c.space.degree(j) + 1) {
        return Report::fail("complex", "differential is not of degree +1", {c.space[j].name, c.space[r].name});
      }
    }
  }
  Matrix dd = c.d * c.d;
  for (std::size_t j = 0; j < n; ++j) {
    if (!dd.column(j).empty()) {
      std::size_t r = dd.column(j).leading();
      return Report::fail("complex", "d^2 != 0", {c.space[j].name, c.space[r].name});
    }
  }
  return Report::ok("complex");
}

Vec Cohomology::class_of(const Vec& cocycle) const {
  SparseVec local;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!cocycle[support[i]].is_zero()) local.push_back(i, cocycle[support[i]]);
  }
  return coords->coordinates(local).to_dense(dim());
}

Cohomology cohomology(const Complex& c, int k) {
  Cohomology h;
  h.degree = k;
  h.support = c.space.indices_in_degree(k);
  const std::size_t dk = h.support.size();
  Matrix out = c.block(k);
  Matrix in = c.block(k - 1);

  std::vector<SparseVec> b;
  for (std::size_t j = 0; j < in.cols(); ++j) {
    if (!in.column(j).empty()) b.push_back(in.column(j));
  }
  Echelon ech(dk);
  for (const auto& v : b) ech.insert(v);
  std::vector<SparseVec> reps;
  for (auto& z : kernel_sparse(out)) {
    if (ech.insert(z)) reps.push_back(std::move(z));
  }
  for (const auto& r : reps) {
    Vec g(c.space.dim());
    for (const auto& [i, v] : r) g[h.support[i]] = v;
    h.representatives.push_back(std::move(g));
  }
  h.coords = std::make_shared<const RelativeCoordinates>(dk, b, reps);
  return h;
}

// -------------------------------------------------------- MonomialAlgebra

MonomialAlgebra::MonomialAlgebra(std::vector<int> degrees, SignRule rule, const std::vector<std::string>& names)
    : deg_(std::move(degrees)), rank_(deg_.size()), rule_(rule) {
  std::vector<std::uint32_t> order(deg_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (deg_[a] != deg_[b]) return deg_[a] < deg_[b];
    if (!names.empty()) return names[a] < names[b];
    return a < b;
  });
  for (std::uint32_t r = 0; r < order.size(); ++r) rank_[order[r]] = r;
}

namespace {
std::vector<std::string> names_of(const GradedSpace& s) {
  std::vector<std::string> out;
  for (const auto& g : s.generators()) out.push_back(g.name);
  return out;
}
}  // namespace

MonomialAlgebra::MonomialAlgebra(const GradedSpace& space, SignRule rule)
    : MonomialAlgebra(space.degrees(), rule, names_of(space)) {}

int MonomialAlgebra::swap_sign(std::uint32_t a, std::uint32_t b) const {
  int da = deg_[a], db = deg_[b];
  switch (rule_) {
    case SignRule::Graded:
      return (da * db) % 2 == 0 ? -1 : 1;
    case SignRule::Koszul:
      return (da * db) % 2 == 0 ? 1 : -1;
    case SignRule::Shifted:
      return ((da - 1) * (db - 1)) % 2 == 0 ? 1 : -1;
  }
  return 1;
}

int MonomialAlgebra::derivation_sign(std::uint32_t g) const {
  int w = rule_ == SignRule::Shifted ? deg_[g] - 1 : deg_[g];
  return w % 2 == 0 ? 1 : -1;
}

int MonomialAlgebra::weight(const Monomial& m) const {
  int w = 0;
  for (auto g : m) w += rule_ == SignRule::Shifted ? deg_[g] - 1 : deg_[g];
  return w;
}

int MonomialAlgebra::normalize(Monomial& word) const {
  int sign = 1;
  for (std::size_t i = 1; i < word.size(); ++i) {
    for (std::size_t j = i; j > 0 && rank_[word[j - 1]] > rank_[word[j]]; --j) {
      sign *= swap_sign(word[j - 1], word[j]);
      std::swap(word[j - 1], word[j]);
    }
  }
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i - 1] == word[i] && !repeatable(word[i])) return 0;
  }
  return sign;
}

int MonomialAlgebra::multiply(const Monomial& a, const Monomial& b, Monomial& out) const {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  return normalize(out);
}

std::vector<Monomial> MonomialAlgebra::basis(std::size_t p, std::optional<std::pair<int, int>> window) const {
  std::vector<std::uint32_t> order(deg_.size());
  for (std::uint32_t g = 0; g < deg_.size(); ++g) order[rank_[g]] = g;
  auto w1 = [&](std::uint32_t g) { return rule_ == SignRule::Shifted ? deg_[g] - 1 : deg_[g]; };
  int wmin = 0, wmax = 0;
  for (std::size_t i = 0; i < deg_.size(); ++i) {
    wmin = i == 0 ? w1(i) : std::min(wmin, w1(i));
    wmax = i == 0 ? w1(i) : std::max(wmax, w1(i));
  }

  std::vector<Monomial> out;
  if (deg_.empty()) {
    if (p == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  // start: smallest rank allowed for the next factor
  auto rec = [&](auto&& self, std::size_t start, int wsum) -> void {
    std::size_t left = p - cur.size();
    if (window) {
      // factors come in nondecreasing degree, so the next one bounds the rest
      int lo = start < order.size() ? w1(order[start]) : wmin;
      if (left > 0 && start >= order.size()) return;
      if (wsum + static_cast<int>(left) * lo > window->second) return;
      if (wsum + static_cast<int>(left) * wmax < window->first) return;
    }
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t r = start; r < order.size(); ++r) {
      std::uint32_t g = order[r];
      cur.push_back(g);
      self(self, repeatable(g) ? r : r + 1, wsum + w1(g));
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

double MonomialAlgebra::count(std::size_t p) const {
  std::vector<double> c(p + 1, 0.0);
  c[0] = 1.0;
  for (std::uint32_t g = 0; g < deg_.size(); ++g) {
    if (repeatable(g)) {
      for (std::size_t k = 1; k <= p; ++k) c[k] += c[k - 1];
    } else {
      for (std::size_t k = p; k >= 1; --k) c[k] += c[k - 1];
    }
  }
  return c[p];
}

Scalar MonomialAlgebra::repetition_factorial(const Monomial& m) const {
  Scalar f(1);
  std::size_t run = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    run = (i > 0 && m[i] == m[i - 1]) ? run + 1 : 1;
    if (run > 1) f *= Scalar(static_cast<long>(run));
  }
  return f;
}

std::vector<MonomialAlgebra::Split> MonomialAlgebra::unshuffle(const Monomial& m, std::size_t left_len,
                                                               bool normalized) const {
  const std::size_t p = m.size();
  if (left_len >= p && left_len != 0) throw std::out_of_range("unshuffle split out of range");
  std::map<std::pair<Monomial, Monomial>, Scalar> acc;
  std::vector<std::pair<Monomial, Monomial>> order;

  auto emit = [&](const std::vector<bool>& in_left) {
    std::size_t k = static_cast<std::size_t>(std::count(in_left.begin(), in_left.end(), true));
    if (k == 0 || k == p) return;
    if (left_len != 0 && k != left_len) return;
    int sign = 1;
    Monomial l, r;
    for (std::size_t i = 0; i < p; ++i) {
      if (in_left[i]) {
        for (std::size_t j = 0; j < i; ++j) {
          if (!in_left[j]) sign *= swap_sign(m[j], m[i]);
        }
        l.push_back(m[i]);
      } else {
        r.push_back(m[i]);
      }
    }
    auto key = std::make_pair(std::move(l), std::move(r));
    auto [it, fresh] = acc.emplace(key, Scalar(0));
    if (fresh) order.push_back(key);
    it->second += Scalar(sign);
  };

  std::vector<bool> in_left(p, false);
  if (!normalized) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      for (std::size_t i = 0; i < p; ++i) in_left[i] = (mask >> i) & 1u;
      emit(in_left);
    }
  } else {
    // runs of equal factors; take the first b of each run
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
    for (std::size_t i = 0; i < p; ++i) {
      if (i > 0 && m[i] == m[i - 1]) {
        ++runs.back().second;
      } else {
        runs.emplace_back(i, 1);
      }
    }
    std::vector<std::size_t> b(runs.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < runs.size(); ++k) {
        for (std::size_t t = 0; t < runs[k].second; ++t) in_left[runs[k].first + t] = t < b[k];
      }
      emit(in_left);
      std::size_t k = 0;
      while (k < runs.size() && b[k] == runs[k].second) b[k++] = 0;
      if (k == runs.size()) break;
      ++b[k];
    }
  }

  std::vector<Split> out;
  for (auto& key : order) {
    const Scalar& c = acc[key];
    if (!c.is_zero()) out.push_back(Split{c, key.first, key.second});
  }
  return out;
}

std::string MonomialAlgebra::name(const Monomial& m, const GradedSpace& space) const {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += '*';
    s += space[m[i]].name;
  }
  return s;
}

std::vector<std::pair<Scalar, Monomial>> apply_derivation(const MonomialAlgebra& alg, const Matrix& d,
                                                          const Monomial& m) {
  std::vector<std::pair<Scalar, Monomial>> out;
  int prefix = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& [t, c] : d.column(m[i])) {
      Monomial w = m;
      w[i] = static_cast<std::uint32_t>(t);
      int s = alg.normalize(w);
      if (s == 0) continue;
      out.emplace_back(Scalar(prefix * s) * c, std::move(w));
    }
    prefix *= alg.derivation_sign(m[i]);
  }
  return out;
}

// ---------------------------------------------------------- MonomialIndex

MonomialIndex::MonomialIndex(std::vector<Monomial> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ----------------------------------------------------------------- powers

namespace {

void check_power_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("power order must be at least 1");
}

PowerComplex monomial_power(const Complex& c, std::size_t n, std::size_t max_basis, SignRule rule) {
  check_power_order(n);
  MonomialAlgebra alg(c.space, rule);
  if (alg.count(n) > static_cast<double>(max_basis)) {
    throw ResourceError("power basis of order " + std::to_string(n) + " exceeds cap " + std::to_string(max_basis));
  }
  PowerComplex out;
  out.basis = MonomialIndex(alg.basis(n));
  std::vector<Generator> gens;
  for (const auto& m : out.basis.basis()) gens.push_back({alg.name(m, c.space), alg.weight(m)});
  out.complex.space = GradedSpace(std::move(gens));
  const std::size_t dim = out.basis.size();
  out.complex.d = Matrix(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (auto& [coef, w] : apply_derivation(alg, c.d, out.basis[j])) {
      out.complex.d.add(*out.basis.find(w), j, coef);
    }
  }
  return out;
}

}  // namespace

PowerComplex graded_alternating_power(const Complex& c, std::size_t n, std::size_t max_basis) {
  return monomial_power(c, n, max_basis, SignRule::Graded);
}

PowerComplex graded_symmetric_power(const Complex& c, std::size_t n, std::size_t max_basis) {
  return monomial_power(c, n, max_basis, SignRule::Koszul);
}

TensorPower tensor_power(const Complex& c, std::size_t n, std::size_t max_basis) {
  check_power_order(n);
  const std::size_t k = c.space.dim();
  double total = std::pow(static_cast<double>(k), static_cast<double>(n));
  if (total > static_cast<double>(max_basis)) {
    throw ResourceError("tensor power of order " + std::to_string(n) + " exceeds cap " + std::to_string(max_basis));
  }
  TensorPower out;
  const std::size_t dim = static_cast<std::size_t>(total);
  auto index_of = [&](const std::vector<std::uint32_t>& t) {
    std::size_t idx = 0;
    for (auto g : t) idx = idx * k + g;
    return idx;
  };
  std::vector<Generator> gens;
  std::vector<std::uint32_t> t(n, 0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    // mixed radix, last factor fastest
    std::size_t rest = idx;
    for (std::size_t p = n; p-- > 0;) {
      t[p] = static_cast<std::uint32_t>(rest % k);
      rest /= k;
    }
    out.tuples.push_back(t);
    std::string name;
    int deg = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (p) name += "⊗";
      name += c.space[t[p]].name;
      deg += c.space.degree(t[p]);
    }
    gens.push_back({name, deg});
  }
  out.complex.space = GradedSpace(std::move(gens));
  out.complex.d = Matrix(dim, dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const auto& tu = out.tuples[idx];
    int prefix = 1;
    for (std::size_t p = 0; p < n; ++p) {
      for (const auto& [r, v] : c.d.column(tu[p])) {
        auto w = tu;
        w[p] = static_cast<std::uint32_t>(r);
        out.complex.d.add(index_of(w), idx, Scalar(prefix) * v);
      }
      if (c.space.degree(tu[p]) % 2 != 0) prefix = -prefix;
    }
  }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    Matrix s(dim, dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      auto w = out.tuples[idx];
      int da = c.space.degree(w[p]), db = c.space.degree(w[p + 1]);
      std::swap(w[p], w[p + 1]);
      s.set(index_of(w), idx, Scalar((da * db) % 2 == 0 ? 1 : -1));
    }
    out.transpositions.push_back(std::move(s));
  }
  return out;
}

Coproduct unshuffle_coproduct(const Complex& c, std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) throw std::out_of_range("unshuffle index must satisfy 1 <= i < n");
  MonomialAlgebra alg(c.space, SignRule::Graded);
  Coproduct out;
  out.source = MonomialIndex(alg.basis(n));
  out.left = MonomialIndex(alg.basis(i));
  out.right = MonomialIndex(alg.basis(n - i));
  out.map = Matrix(out.left.size() * out.right.size(), out.source.size());
  for (std::size_t j = 0; j < out.source.size(); ++j) {
    for (const auto& s : alg.unshuffle(out.source[j], i, false)) {
      std::size_t row = *out.left.find(s.left) * out.right.size() + *out.right.find(s.right);
      out.map.add(row, j, s.coef);
    }
  }
  return out;
}

}  // namespace jdeform
