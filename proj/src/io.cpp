#include "jdeform/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace jdeform::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& where, const std::string& key) { return where + "." + key; }

void expect_object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || k == a;
    if (!known) fail(where, "unknown key '" + k + "'");
  }
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

const json& expect_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

long long get_int(const json& j, const std::string& where, long long lo = 0) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo) fail(where, "must be at least " + std::to_string(lo));
  return v;
}

std::size_t lookup(const std::map<std::string, std::size_t>& names, const json& j, const std::string& where,
                   const char* kind = "generator") {
  std::string name = get_string(j, where);
  auto it = names.find(name);
  if (it == names.end()) fail(where, std::string("unknown ") + kind + " '" + name + "'");
  return it->second;
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names, const std::string& where) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) fail(at(where, i), "empty name");
    if (!out.emplace(names[i], i).second) fail(at(where, i), "duplicate name '" + names[i] + "'");
  }
  return out;
}

std::vector<Generator> parse_generators(const json& j, const std::string& where) {
  std::vector<Generator> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    const std::string w = at(where, i);
    expect_object(j[i], w, {"name", "degree"});
    Generator g{get_string(require(j[i], "name", w), dot(w, "name")), 0};
    const json& deg = require(j[i], "degree", w);
    if (!deg.is_number_integer()) fail(dot(w, "degree"), "expected an integer");
    g.degree = deg.get<int>();
    names.push_back(g.name);
    gens.push_back(std::move(g));
  }
  name_index(names, where);
  return gens;
}

Matrix parse_differential(const json& j, const std::map<std::string, std::size_t>& names, Field field,
                          const std::string& where) {
  Matrix d(names.size(), names.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    const std::string w = at(where, i);
    if (!j[i].is_array() || j[i].size() != 3) fail(w, "expected [source, target, value]");
    std::size_t s = lookup(names, j[i][0], at(w, 0));
    std::size_t t = lookup(names, j[i][1], at(w, 1));
    if (!seen.insert({s, t}).second) fail(w, "duplicate entry");
    d.add(t, s, parse_scalar(j[i][2], field, at(w, 2)));
  }
  return d;
}

SparseVec parse_value(const json& j, const std::map<std::string, std::size_t>& names, Field field,
                      const std::string& where) {
  SparseVec v;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    const std::string w = at(where, i);
    if (!j[i].is_array() || j[i].size() != 2) fail(w, "expected [target, value]");
    std::size_t t = lookup(names, j[i][0], at(w, 0));
    if (!seen.insert(t).second) fail(w, "duplicate target");
    v.add(t, parse_scalar(j[i][1], field, at(w, 1)));
  }
  return v;
}

/// Bracket entries {"a","b","value"} with a <= b (a < b when `strict`).
template <class Set>
void parse_bracket(const json& j, const std::map<std::string, std::size_t>& names, Field field,
                   const std::string& where, bool strict, Set set) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < expect_array(j, where).size(); ++i) {
    const std::string w = at(where, i);
    expect_object(j[i], w, {"a", "b", "value"});
    std::size_t a = lookup(names, require(j[i], "a", w), dot(w, "a"));
    std::size_t b = lookup(names, require(j[i], "b", w), dot(w, "b"));
    if (a > b || (strict && a == b)) fail(w, strict ? "pairs must satisfy a < b in basis order"
                                                    : "pairs must satisfy a <= b in basis order");
    if (!seen.insert({a, b}).second) fail(w, "duplicate pair");
    set(a, b, parse_value(require(j[i], "value", w), names, field, dot(w, "value")));
  }
}

std::vector<std::size_t> parse_vertex_list(const json& j, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len) fail(where, "expected " + std::to_string(len) + " vertices");
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<std::size_t>(get_int(j[i], at(where, i))));
  return s;
}

std::pair<std::size_t, std::size_t> parse_edge_key(const std::string& key, const std::string& where) {
  static const std::regex re("([0-9]+)-([0-9]+)");
  std::smatch m;
  if (!std::regex_match(key, m, re)) fail(where, "edge keys look like \"0-1\", got '" + key + "'");
  return {std::stoul(m[1]), std::stoul(m[2])};
}

std::string edge_name(std::size_t a, std::size_t b) { return std::to_string(a) + "-" + std::to_string(b); }

std::vector<std::string> names_of(const GradedSpace& s) {
  std::vector<std::string> out;
  for (const auto& g : s.generators()) out.push_back(g.name);
  return out;
}

}  // namespace

Scalar parse_scalar(const json& j, Field field, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail(where, "expected a fraction string");
  const std::string text = j.get<std::string>();
  static const std::regex rational("-?[0-9]+(/[1-9][0-9]*)?");
  if (field == Field::Q) {
    if (!std::regex_match(text, rational)) fail(where, "malformed fraction \"" + text + "\"");
    return Scalar::parse(text, Field::Q);
  }
  try {
    return Scalar::parse(text, Field::QI);
  } catch (const ParseError&) {
    fail(where, "malformed fraction \"" + text + "\"");
  }
}

DGLA parse_dgla(const json& j, Field field, const std::string& where) {
  expect_object(j, where, {"generators", "differential", "bracket"});
  Complex c;
  c.space = GradedSpace(parse_generators(require(j, "generators", where), dot(where, "generators")));
  auto names = name_index(names_of(c.space), dot(where, "generators"));
  c.d = j.contains("differential") ? parse_differential(j["differential"], names, field, dot(where, "differential"))
                                   : Matrix(c.space.dim(), c.space.dim());
  DGLA L(std::move(c));
  if (j.contains("bracket")) {
    parse_bracket(j["bracket"], names, field, dot(where, "bracket"), false,
                  [&](std::size_t a, std::size_t b, SparseVec v) { L.set_bracket(a, b, std::move(v)); });
  }
  return L;
}

LieAlgebra parse_lie(const json& j, Field field, const std::string& where) {
  expect_object(j, where, {"generators", "bracket"});
  LieAlgebra g;
  const json& gens = require(j, "generators", where);
  for (std::size_t i = 0; i < expect_array(gens, dot(where, "generators")).size(); ++i)
    g.names.push_back(get_string(gens[i], at(dot(where, "generators"), i)));
  auto names = name_index(g.names, dot(where, "generators"));
  g.table.assign(g.dim() * g.dim(), SparseVec());
  if (j.contains("bracket")) {
    parse_bracket(j["bracket"], names, field, dot(where, "bracket"), true,
                  [&](std::size_t a, std::size_t b, const SparseVec& v) { g.set(a, b, v); });
  }
  return g;
}

Nerve parse_nerve(const json& j, const std::string& where) {
  expect_object(j, where, {"vertices", "edges", "triangles", "tetrahedra"});
  Nerve n;
  n.vertices = static_cast<std::size_t>(get_int(require(j, "vertices", where), dot(where, "vertices"), 1));
  const std::pair<const char*, std::size_t> lists[] = {{"edges", 2}, {"triangles", 3}, {"tetrahedra", 4}};
  for (const auto& [key, len] : lists) {
    if (!j.contains(key)) continue;
    const std::string w = dot(where, key);
    for (std::size_t i = 0; i < expect_array(j[key], w).size(); ++i)
      n.simplices.push_back(parse_vertex_list(j[key][i], len, at(w, i)));
  }
  return n;
}

ArtinAlgebra parse_artin(const json& j, Field field, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("truncated_polynomial")) {
    expect_object(j, where, {"truncated_polynomial"});
    const std::string w = dot(where, "truncated_polynomial");
    const json& t = j["truncated_polynomial"];
    expect_object(t, w, {"order", "var"});
    auto n = static_cast<std::size_t>(get_int(require(t, "order", w), dot(w, "order"), 1));
    return truncated_polynomial(n, t.contains("var") ? get_string(t["var"], dot(w, "var")) : "t");
  }
  if (j.contains("monomial_quotient")) {
    expect_object(j, where, {"monomial_quotient"});
    const std::string w = dot(where, "monomial_quotient");
    const json& t = j["monomial_quotient"];
    expect_object(t, w, {"order", "vars", "killed"});
    auto n = static_cast<std::size_t>(get_int(require(t, "order", w), dot(w, "order"), 1));
    std::vector<std::string> vars;
    const json& vj = require(t, "vars", w);
    for (std::size_t i = 0; i < expect_array(vj, dot(w, "vars")).size(); ++i)
      vars.push_back(get_string(vj[i], at(dot(w, "vars"), i)));
    if (vars.empty()) fail(dot(w, "vars"), "needs at least one variable");
    name_index(vars, dot(w, "vars"));
    std::vector<Exponents> killed;
    if (t.contains("killed")) {
      const std::string kw = dot(w, "killed");
      for (std::size_t i = 0; i < expect_array(t["killed"], kw).size(); ++i) {
        const json& e = t["killed"][i];
        if (!e.is_array() || e.size() != vars.size()) fail(at(kw, i), "expected one exponent per variable");
        Exponents ex;
        for (std::size_t k = 0; k < e.size(); ++k)
          ex.push_back(static_cast<unsigned>(get_int(e[k], at(at(kw, i), k))));
        killed.push_back(ex);
      }
    }
    return monomial_quotient(vars, n, killed);
  }

  expect_object(j, where, {"basis", "levels", "exponent", "products"});
  ArtinAlgebra R;
  const json& bj = require(j, "basis", where);
  for (std::size_t i = 0; i < expect_array(bj, dot(where, "basis")).size(); ++i)
    R.names.push_back(get_string(bj[i], at(dot(where, "basis"), i)));
  auto names = name_index(R.names, dot(where, "basis"));
  const json& lj = require(j, "levels", where);
  if (!lj.is_array() || lj.size() != R.dim()) fail(dot(where, "levels"), "expected one level per basis element");
  for (std::size_t i = 0; i < lj.size(); ++i)
    R.levels.push_back(static_cast<std::size_t>(get_int(lj[i], at(dot(where, "levels"), i))));
  R.exponent = static_cast<std::size_t>(get_int(require(j, "exponent", where), dot(where, "exponent")));
  R.mult.assign(R.dim() * R.dim(), SparseVec());
  if (j.contains("products")) {
    const std::string w = dot(where, "products");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t i = 0; i < expect_array(j["products"], w).size(); ++i) {
      const json& p = j["products"][i];
      const std::string pw = at(w, i);
      if (!p.is_array() || p.size() != 4) fail(pw, "expected [a, b, target, value]");
      std::size_t a = lookup(names, p[0], at(pw, 0), "basis element");
      std::size_t b = lookup(names, p[1], at(pw, 1), "basis element");
      std::size_t c = lookup(names, p[2], at(pw, 2), "basis element");
      if (a > b) fail(pw, "pairs must satisfy a <= b in basis order");
      if (!seen.insert({a, b, c}).second) fail(pw, "duplicate entry");
      Scalar v = parse_scalar(p[3], field, at(pw, 3));
      R.mult[a * R.dim() + b].add(c, v);
      if (a != b) R.mult[b * R.dim() + a].add(c, v);
    }
  }
  return R;
}

SparseVec parse_polynomial(const json& j, const ArtinAlgebra& R, Field field, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object mapping basis names of m to values");
  SparseVec v;
  for (const auto& [k, val] : j.items()) {
    auto it = std::find(R.names.begin(), R.names.end(), k);
    if (it == R.names.end()) fail(where, "unknown ring basis element '" + k + "'");
    v.add(static_cast<std::size_t>(it - R.names.begin()), parse_scalar(val, field, dot(where, k)));
  }
  return v;
}

Tensor parse_tensor(const json& j, const std::vector<std::string>& basis, const ArtinAlgebra& R, Field field,
                    const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object mapping basis names to polynomials");
  Tensor t(basis.size());
  for (const auto& [k, val] : j.items()) {
    auto it = std::find(basis.begin(), basis.end(), k);
    if (it == basis.end()) fail(where, "unknown generator '" + k + "'");
    t[static_cast<std::size_t>(it - basis.begin())] = parse_polynomial(val, R, field, dot(where, k));
  }
  return t;
}

namespace {

LocalSystem parse_local_system(const json& j, Field field, const std::string& where) {
  LocalSystem ls{parse_lie(require(j, "lie", where), field, dot(where, "lie")), {}};
  if (!j.contains("monodromy")) return ls;
  const std::string w = dot(where, "monodromy");
  const std::size_t g = ls.g.dim();
  for (std::size_t i = 0; i < expect_array(j["monodromy"], w).size(); ++i) {
    const json& e = j["monodromy"][i];
    const std::string ew = at(w, i);
    expect_object(e, ew, {"edge", "matrix"});
    auto edge = parse_vertex_list(require(e, "edge", ew), 2, dot(ew, "edge"));
    const json& rows = require(e, "matrix", ew);
    const std::string mw = dot(ew, "matrix");
    if (!rows.is_array() || rows.size() != g) fail(mw, "expected a " + std::to_string(g) + "x" + std::to_string(g) + " matrix");
    Matrix m(g, g);
    for (std::size_t r = 0; r < g; ++r) {
      if (!rows[r].is_array() || rows[r].size() != g) fail(at(mw, r), "expected " + std::to_string(g) + " entries");
      for (std::size_t c = 0; c < g; ++c) m.set(r, c, parse_scalar(rows[r][c], field, at(at(mw, r), c)));
    }
    if (!ls.monodromy.emplace(std::make_pair(edge[0], edge[1]), m).second) fail(ew, "duplicate edge");
  }
  return ls;
}

ModuleAction parse_action(const json& j, const LieAlgebra& g, Field field, const std::string& where) {
  expect_object(j, where, {"module", "rho"});
  const json& mj = require(j, "module", where);
  const std::string mw = dot(where, "module");
  expect_object(mj, mw, {"generators", "differential"});
  ModuleAction act;
  act.E.space = GradedSpace(parse_generators(require(mj, "generators", mw), dot(mw, "generators")));
  auto names = name_index(names_of(act.E.space), dot(mw, "generators"));
  const std::size_t e = act.E.space.dim();
  act.E.d = mj.contains("differential") ? parse_differential(mj["differential"], names, field, dot(mw, "differential"))
                                        : Matrix(e, e);
  act.rho.assign(g.dim(), Matrix(e, e));
  const json& rj = require(j, "rho", where);
  const std::string rw = dot(where, "rho");
  if (!rj.is_object()) fail(rw, "expected an object keyed by Lie algebra generators");
  for (const auto& [k, val] : rj.items()) {
    auto it = std::find(g.names.begin(), g.names.end(), k);
    if (it == g.names.end()) fail(rw, "unknown generator '" + k + "'");
    act.rho[static_cast<std::size_t>(it - g.names.begin())] = parse_differential(val, names, field, dot(rw, k));
  }
  return act;
}

Field parse_field(const json& j, const std::string& where) {
  std::string f = get_string(j, where);
  if (f == "q") return Field::Q;
  if (f == "qi") return Field::QI;
  fail(where, "field must be \"q\" or \"qi\", got \"" + f + "\"");
}

}  // namespace

ProblemFile parse_problem(const json& j, std::optional<Field> field_override) {
  expect_object(j, "$", {"version", "field", "order", "dgla", "cech", "artin", "mc", "cochain", "gauge", "action",
                         "morphic", "description", "notes"});
  ProblemFile p;
  long long version = get_int(require(j, "version", "$"), "$.version");
  if (version != kFormatVersion) fail("$.version", "unsupported version " + std::to_string(version));
  p.version = static_cast<int>(version);
  if (j.contains("field")) p.field = parse_field(j["field"], "$.field");
  if (field_override) p.field = *field_override;
  if (j.contains("order")) p.order = static_cast<std::size_t>(get_int(j["order"], "$.order", 1));

  int models = static_cast<int>(j.contains("dgla")) + static_cast<int>(j.contains("cech")) +
               static_cast<int>(j.contains("artin"));
  if (models != 1) fail("$", "exactly one of 'dgla', 'cech', 'artin' is required");

  if (j.contains("dgla")) p.dgla = parse_dgla(j["dgla"], p.field, "$.dgla");
  if (j.contains("artin")) p.artin = parse_artin(j["artin"], p.field, "$.artin");
  if (j.contains("cech")) {
    const json& cj = j["cech"];
    expect_object(cj, "$.cech", {"lie", "nerve", "monodromy", "truncate"});
    CechSpec spec;
    spec.nerve = parse_nerve(require(cj, "nerve", "$.cech"), "$.cech.nerve");
    spec.system = parse_local_system(cj, p.field, "$.cech");
    if (cj.contains("truncate")) {
      if (!cj["truncate"].is_boolean()) fail("$.cech.truncate", "expected a boolean");
      spec.truncate = cj["truncate"].get<bool>();
    }
    p.cech_spec = spec;
    p.cech = std::make_shared<const CechModel>(cech_dgla(spec.nerve, spec.system));
    p.dgla = spec.truncate ? truncate_positive(p.cech->dgla) : p.cech->dgla;
  }

  if (j.contains("mc") && j.contains("cochain")) fail("$", "give either 'mc' or 'cochain', not both");
  if ((j.contains("mc") || j.contains("cochain")) && !p.dgla) fail("$", "an MC element needs a 'dgla' or 'cech' model");
  if (j.contains("mc")) {
    const json& mj = j["mc"];
    expect_object(mj, "$.mc", {"ring", "element"});
    ArtinAlgebra R = parse_artin(require(mj, "ring", "$.mc"), p.field, "$.mc.ring");
    Tensor u = parse_tensor(require(mj, "element", "$.mc"), names_of(p.dgla->space()), R, p.field, "$.mc.element");
    for (std::size_t a = 0; a < u.size(); ++a)
      if (!u[a].empty() && p.dgla->degree(a) != 1)
        fail("$.mc.element." + p.dgla->space()[a].name, "generator is not in degree 1");
    p.mc = MCElement{*p.dgla, R, u};
  }
  if (j.contains("cochain")) {
    if (!p.cech) fail("$.cochain", "a group cochain needs a 'cech' model");
    const json& cj = j["cochain"];
    expect_object(cj, "$.cochain", {"ring", "edges"});
    ArtinAlgebra R = parse_artin(require(cj, "ring", "$.cochain"), p.field, "$.cochain.ring");
    const json& ej = require(cj, "edges", "$.cochain");
    if (!ej.is_object()) fail("$.cochain.edges", "expected an object keyed by edges \"i-j\"");
    Tensor u(p.dgla->dim());
    for (const auto& [key, val] : ej.items()) {
      const std::string w = "$.cochain.edges." + key;
      auto [a, b] = parse_edge_key(key, w);
      if (!p.cech->offset.count({a, b})) fail(w, "no overlap " + edge_name(a, b) + " in the nerve");
      Tensor t = parse_tensor(val, p.cech->g.names, R, p.field, w);
      for (std::size_t k = 0; k < t.size(); ++k) {
        auto idx = p.dgla->space().index_of(p.cech->g.names[k] + "@" + edge_name(a, b));
        if (idx) u[*idx] = t[k];
      }
    }
    p.mc = MCElement{*p.dgla, R, u};
  }
  if (j.contains("gauge")) {
    if (!p.cech || !p.mc) fail("$.gauge", "a gauge needs a 'cech' model and an MC element");
    const json& gj = j["gauge"];
    if (!gj.is_array() || gj.size() != p.cech->nerve.vertices)
      fail("$.gauge", "expected one entry per vertex (" + std::to_string(p.cech->nerve.vertices) + ")");
    for (std::size_t v = 0; v < gj.size(); ++v)
      p.gauge.push_back(parse_tensor(gj[v], p.cech->g.names, p.mc->R, p.field, at("$.gauge", v)));
  }
  if (j.contains("action")) {
    if (!p.cech) fail("$.action", "an action needs a 'cech' model");
    p.action = parse_action(j["action"], p.cech->g, p.field, "$.action");
  }
  if (j.contains("morphic")) {
    const json& mj = j["morphic"];
    expect_object(mj, "$.morphic", {"ring", "mu"});
    MorphicPayload m;
    m.R = parse_artin(require(mj, "ring", "$.morphic"), p.field, "$.morphic.ring");
    const json& mu = require(mj, "mu", "$.morphic");
    if (!mu.is_object()) fail("$.morphic.mu", "expected an object keyed by names of H^0");
    for (const auto& [k, val] : mu.items()) m.mu[k] = parse_polynomial(val, m.R, p.field, "$.morphic.mu." + k);
    p.morphic = std::move(m);
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text, std::optional<Field> field) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j, field);
}

ProblemFile read_problem(const std::filesystem::path& path, std::optional<Field> field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem_text(ss.str(), field);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ----------------------------------------------------------------- writers

std::string to_string(const Scalar& s) { return s.str(); }

json matrix_json(const Matrix& m) {
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> entries;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) entries.emplace_back(r, c, v.str());
  std::sort(entries.begin(), entries.end());
  json e = json::array();
  for (const auto& [r, c, v] : entries) e.push_back({r, c, v});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

json report_json(const Report& r) {
  return {{"check", r.check}, {"pass", r.pass}, {"message", r.message}, {"witness", r.witness}, {"notes", r.notes}};
}

json dgla_json(const DGLA& L) {
  json gens = json::array(), diff = json::array(), br = json::array();
  for (const auto& g : L.space().generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  const auto& sp = L.space();
  for (std::size_t s = 0; s < L.dim(); ++s)
    for (const auto& [t, v] : L.d().column(s)) diff.push_back({sp[s].name, sp[t].name, v.str()});
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = a; b < L.dim(); ++b) {
      if (L.bracket(a, b).empty()) continue;
      json value = json::array();
      for (const auto& [t, v] : L.bracket(a, b)) value.push_back({sp[t].name, v.str()});
      br.push_back({{"a", sp[a].name}, {"b", sp[b].name}, {"value", value}});
    }
  return {{"generators", gens}, {"differential", diff}, {"bracket", br}};
}

json artin_json(const ArtinAlgebra& R) {
  json products = json::array();
  for (std::size_t a = 0; a < R.dim(); ++a)
    for (std::size_t b = a; b < R.dim(); ++b)
      for (const auto& [c, v] : R.product(a, b)) products.push_back({R.names[a], R.names[b], R.names[c], v.str()});
  return {{"basis", R.names}, {"levels", R.levels}, {"exponent", R.exponent}, {"products", products}};
}

json polynomial_json(const ArtinAlgebra& R, const SparseVec& m_coords) {
  json out = json::object();
  for (const auto& [l, v] : m_coords) out[R.names.at(l)] = v.str();
  return out;
}

json tensor_json(const std::vector<std::string>& basis, const ArtinAlgebra& R, const Tensor& t) {
  json out = json::object();
  for (std::size_t a = 0; a < t.size(); ++a)
    if (!t[a].empty()) out[basis.at(a)] = polynomial_json(R, t[a]);
  return out;
}

json ring_hom_json(const RingHom& h) {
  json map = json::object();
  for (std::size_t l = 0; l < h.source.dim(); ++l) map[h.source.names[l]] = polynomial_json(h.target, h.map.column(l));
  return {{"source", artin_json(h.source)}, {"target", artin_json(h.target)}, {"map", map}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace jdeform::io
