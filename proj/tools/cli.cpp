#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "jdeform/io.hpp"

namespace jdeform::cli {

namespace {

using io::json;

using Flags = Options;

/// Input problems that are not parse errors (missing order, wrong model kind).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json result;
  bool pass = true;
  std::string table;  // extra text-mode preamble
};

struct Context {
  Flags flags;
  io::ProblemFile problem;
  JacobiOptions opts;

  std::size_t order() const {
    std::optional<std::size_t> n = flags.order ? flags.order : problem.order;
    if (!n) throw InputError("this subcommand needs --order or an \"order\" field");
    if (*n == 0) throw InputError("order must be at least 1");
    if (*n > flags.max_order)
      throw ResourceError("order " + std::to_string(*n) + " exceeds --max-order " + std::to_string(flags.max_order));
    return *n;
  }
  const DGLA& dgla() const {
    if (!problem.dgla) throw InputError("this subcommand needs a 'dgla' or 'cech' model");
    return *problem.dgla;
  }
  const MCElement& mc() const {
    if (!problem.mc) throw InputError("this subcommand needs an MC element ('mc' or 'cochain')");
    return *problem.mc;
  }
};

std::vector<std::string> names_of(const GradedSpace& s) {
  std::vector<std::string> out;
  for (const auto& g : s.generators()) out.push_back(g.name);
  return out;
}

std::string field_name(Field f) { return f == Field::Q ? "q" : "qi"; }

std::string monomial_name(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "z" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

json os_json(const OSStructure& os) {
  json basis = json::array(), symbol = json::array();
  for (std::size_t l = 0; l < os.dim(); ++l) basis.push_back({{"name", os.names[l]}, {"level", os.levels[l]}});
  const std::size_t d = os.dim();
  for (std::size_t l = 0; l < d; ++l)
    for (const auto& [row, v] : os.sigma.column(l))
      symbol.push_back({os.names[row / d], os.names[row % d], os.names[l], v.str()});
  std::sort(symbol.begin(), symbol.end());
  return {{"dim", d}, {"basis", basis}, {"symbol", symbol}};
}

/// The MC element as a cochain on the full Čech DGLA (the problem's DGLA
/// may be its positive truncation).
MCElement on_model(const CechModel& model, const MCElement& u) {
  if (u.L.dim() == model.dgla.dim()) return u;
  MCElement out{model.dgla, u.R, Tensor(model.dgla.dim())};
  for (std::size_t a = 0; a < u.L.dim(); ++a)
    if (!u.u[a].empty()) out.u[*model.dgla.space().index_of(u.L.space()[a].name)] = u.u[a];
  return out;
}

json cochain_json(const GroupCochain& D) {
  json edges = json::object();
  for (const auto& [e, t] : D.u) {
    json entry = io::tensor_json(D.model->g.names, D.R, t);
    if (!entry.empty()) edges[std::to_string(e.first) + "-" + std::to_string(e.second)] = entry;
  }
  return {{"ring", io::artin_json(D.R)}, {"edges", edges}};
}

// ------------------------------------------------------------ subcommands

Outcome cmd_check(const Context& c) {
  const auto& p = c.problem;
  std::vector<Report> reports;
  if (p.cech) {
    Report r = check_dgla(p.cech->dgla);
    r.check = "cech";
    reports.push_back(r);
  }
  if (p.dgla) {
    Report r = check_dgla(*p.dgla);
    if (r.pass) r.notes.push_back(h_nonpositive_vanishes(*p.dgla) ? "H^k = 0 for k <= 0" : "H^k != 0 for some k <= 0");
    reports.push_back(r);
  }
  if (p.artin) {
    reports.push_back(check_artin(*p.artin));
  }
  if (p.mc) reports.push_back(mc_check(*p.mc));
  if (p.morphic) {
    OSStructure os = os_structure(jacobi_h0(build_jacobi(c.dgla(), c.order(), c.opts)));
    MorphicElement v{p.morphic->R, os, std::vector<SparseVec>(os.dim())};
    for (const auto& [name, mu] : p.morphic->mu) {
      auto it = std::find(os.names.begin(), os.names.end(), name);
      if (it == os.names.end()) throw ParseError("$.morphic.mu: unknown basis element '" + name + "' of H^0");
      v.mu[static_cast<std::size_t>(it - os.names.begin())] = mu;
    }
    reports.push_back(morphic_check(v));
  }
  Outcome o;
  o.result = {{"command", "check"}, {"reports", json::array()}};
  for (const auto& r : reports) {
    o.result["reports"].push_back(io::report_json(r));
    o.pass = o.pass && r.pass;
  }
  o.result["pass"] = o.pass;
  return o;
}

Outcome cmd_jacobi(const Context& c) {
  const DGLA& L = c.dgla();
  const std::size_t n = c.order();
  MonomialAlgebra alg(L.space(), SignRule::Shifted);
  std::map<int, std::vector<std::size_t>> table;  // total degree -> dims by p
  json dims = json::array();
  for (std::size_t p = 1; p <= n; ++p) {
    if (alg.count(p) > static_cast<double>(c.opts.max_basis))
      throw ResourceError("λ^" + std::to_string(p) + " exceeds the basis cap " + std::to_string(c.opts.max_basis));
    std::map<int, std::size_t> by_degree;
    for (const auto& m : alg.basis(p)) ++by_degree[alg.weight(m)];
    json entry = json::array();
    for (const auto& [k, d] : by_degree) {
      entry.push_back({k, d});
      auto& row = table[k];
      row.resize(n, 0);
      row[p - 1] = d;
    }
    dims.push_back({{"p", p}, {"by_degree", entry}});
  }

  auto J = hyper_jacobi(L, n, c.opts);
  OSData data = jacobi_h0(*J);
  Outcome o;
  o.result = {{"command", "jacobi"},
              {"order", n},
              {"dims", dims},
              {"h0", os_json(os_structure(data))},
              {"filtration", data.filtration},
              {"hypothesis", data.hypothesis},
              {"pass", true}};

  std::ostringstream t;
  t << "dims of λ^p in total degree k\n" << std::setw(6) << "k";
  for (std::size_t p = 1; p <= n; ++p) t << std::setw(8) << ("p=" + std::to_string(p));
  t << '\n';
  for (const auto& [k, row] : table) {
    t << std::setw(6) << k;
    for (auto d : row) t << std::setw(8) << d;
    t << '\n';
  }
  t << "dim H^0(J_" << n << ") = " << data.dim() << '\n';
  o.table = t.str();
  return o;
}

Outcome cmd_ring(const Context& c) {
  UniversalRing U = ring_of(c.dgla(), c.order(), c.opts);
  Outcome o;
  o.result = {{"version", io::kFormatVersion},
              {"field", field_name(c.problem.field)},
              {"order", c.order()},
              {"artin", io::artin_json(U.R)},
              {"description", describe(U.R)},
              {"notes", {"the description is a best-effort polynomial presentation"}}};
  return o;
}

Outcome cmd_obstructions(const Context& c) {
  ObstructionData ob = obstruction_tower(c.dgla(), c.order(), c.opts);
  json levels = json::array();
  for (const auto& lv : ob.levels) {
    json sym = json::array();
    for (const auto& e : lv.sym) sym.push_back(monomial_name(e));
    levels.push_back({{"n", lv.n},
                      {"sym_basis", sym},
                      {"Ob", io::matrix_json(lv.big)},
                      {"iota", io::matrix_json(lv.iota)},
                      {"dim_K", lv.kernel_big.basis.size()},
                      {"dim_small_domain", lv.small_domain.basis.size()},
                      {"ob", io::matrix_json(lv.small)},
                      {"dim_ker_ob", lv.kernel_small.basis.size()}});
  }
  Outcome o;
  o.result = {{"command", "obstructions"}, {"order", c.order()}, {"h1", ob.h1}, {"h2", ob.h2},
              {"levels", levels}, {"pass", true}};
  return o;
}

Outcome cmd_ks(const Context& c) {
  const MCElement& u = c.mc();
  Report mc = mc_check(u);
  Outcome o;
  o.result = {{"command", "ks"}, {"order", c.order()}, {"mc", io::report_json(mc)}};
  if (!mc.pass) {
    o.pass = false;
    o.result["pass"] = false;
    return o;
  }
  KSContext ctx = ks_context(c.dgla(), c.order(), c.opts);
  KodairaSpencer ks = kodaira_spencer(u, ctx);
  Report morphic = morphic_check(ks.element);
  json cls = json::object();
  for (std::size_t l = 0; l < ks.element.mu.size(); ++l)
    cls[ks.element.target.names[l]] = io::polynomial_json(u.R, ks.element.mu[l]);
  o.pass = morphic.pass;
  o.result["morphic"] = io::report_json(morphic);
  o.result["class"] = cls;
  o.result["hom"] = io::ring_hom_json(ks.hom);
  o.result["pass"] = o.pass;
  return o;
}

Outcome cmd_mc_solve(const Context& c) {
  MCElement u = mc_solve(c.dgla(), c.order(), c.opts);
  Report r = mc_check(u);
  Outcome o;
  o.pass = r.pass;
  o.result = {{"command", "mc-solve"},
              {"order", c.order()},
              {"mc", {{"ring", io::artin_json(u.R)}, {"element", io::tensor_json(names_of(u.L.space()), u.R, u.u)}}},
              {"check", io::report_json(r)},
              {"description", describe(u.R)},
              {"pass", r.pass}};
  return o;
}

Outcome cmd_cocycle(const Context& c) {
  const auto& p = c.problem;
  if (!p.cech) throw InputError("cocycle needs a 'cech' model");
  MCElement u = on_model(*p.cech, c.mc());
  GroupCochain D = group_cochain(p.cech, u);
  D.action = p.action;
  Report mc = mc_check(u);
  Report co = group_cocycle_check(D);
  Outcome o;
  o.pass = mc.pass && co.pass;
  o.result = {{"command", "cocycle"},
              {"mc", io::report_json(mc)},
              {"cocycle", io::report_json(co)},
              {"dictionary", mc.pass == co.pass}};
  if (!p.gauge.empty()) {
    MCElement v = gauge_act(*p.cech, p.gauge, u);
    GroupCochain Dv = group_cochain(p.cech, v);
    Dv.action = p.action;
    Report mcv = mc_check(v), cov = group_cocycle_check(Dv);
    json g = {{"cochain", cochain_json(Dv)}, {"mc", io::report_json(mcv)}, {"cocycle", io::report_json(cov)}};
    o.pass = o.pass && mcv.pass && cov.pass;
    std::optional<std::size_t> n = c.flags.order ? c.flags.order : p.order;
    if (n && mc.pass && mcv.pass) {
      std::size_t order = c.order();
      if (!h_nonpositive_vanishes(p.cech->dgla)) {
        g["ks_invariant"] = nullptr;
        g["note"] = "Kodaira-Spencer comparison skipped: H^k != 0 for some k <= 0";
      } else if (nilpotency(u.R) > order) {
        g["ks_invariant"] = nullptr;
        g["note"] = "Kodaira-Spencer comparison skipped: ring exponent exceeds the order";
      } else {
        KSContext ctx = ks_context(p.cech->dgla, order, c.opts);
        bool same = kodaira_spencer(u, ctx).hom.map == kodaira_spencer(v, ctx).hom.map;
        g["ks_invariant"] = same;
        o.pass = o.pass && same;
      }
    }
    o.result["gauge"] = g;
  }
  o.result["pass"] = o.pass;
  return o;
}

// ------------------------------------------------------------- text mode

bool is_leaf(const json& j) { return !j.is_structured(); }

std::string leaf(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto inline_array = [](const json& a) {
    return std::all_of(a.begin(), a.end(), [](const json& e) {
      return is_leaf(e) && leaf(e).find(' ') == std::string::npos;
    });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_leaf(v)) {
        out << pad << k << ": " << leaf(v) << '\n';
      } else if (v.is_array() && inline_array(v)) {
        out << pad << k << ':';
        for (const auto& e : v) out << ' ' << leaf(e);
        out << '\n';
      } else if (v.empty()) {
        out << pad << k << ": (none)\n";
      } else {
        out << pad << k << ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_leaf(e)) {
        out << pad << "- " << leaf(e) << '\n';
      } else if (e.is_array() && inline_array(e)) {
        out << pad << '-';
        for (const auto& x : e) out << ' ' << leaf(x);
        out << '\n';
      } else {
        out << pad << "-\n";
        render(e, indent + 2, out);
      }
    }
  } else {
    out << pad << leaf(j) << '\n';
  }
}

using Handler = Outcome (*)(const Context&);

struct Command {
  const char* name;
  const char* help;
  Handler fn;
};

const std::vector<Command>& command_table() {
  static const std::vector<Command> commands = {
      {"check", "check DGLA, artin algebra, MC and morphic axioms", cmd_check},
      {"jacobi", "terms, dimensions and H^0 of the Jacobi complex J_n", cmd_jacobi},
      {"ring", "presentation of the universal ring R_n", cmd_ring},
      {"obstructions", "obstruction maps Ob_n, ob_n and kernels K^n", cmd_obstructions},
      {"ks", "Kodaira-Spencer homomorphism of the supplied MC element", cmd_ks},
      {"mc-solve", "universal MC element over R_n", cmd_mc_solve},
      {"cocycle", "group cocycle, MC dictionary and gauge checks", cmd_cocycle},
  };
  return commands;
}

int dispatch(const std::string& cmd, const Flags& flags, const std::function<io::ProblemFile(std::optional<Field>)>& load,
             std::ostream& out, std::ostream& err, const std::optional<std::string>& max_basis_env) {
  Handler handler = nullptr;
  for (const auto& c : command_table())
    if (cmd == c.name) handler = c.fn;
  Context ctx;
  ctx.flags = flags;
  try {
    if (!handler) throw InputError("unknown subcommand '" + cmd + "'");
    if (flags.format != "json" && flags.format != "text") throw InputError("format must be json or text");
    if (flags.field && *flags.field != "q" && *flags.field != "qi") throw InputError("field must be q or qi");
    if (flags.threads == 0) throw InputError("threads must be at least 1");
    if (flags.max_basis) {
      ctx.opts.max_basis = *flags.max_basis;
    } else if (max_basis_env) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(*max_basis_env, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != max_basis_env->size()) throw InputError("JACOBI_DEFORM_MAX_BASIS is not a number");
      ctx.opts.max_basis = static_cast<std::size_t>(v);
    }
    ctx.opts.threads = flags.threads;
    std::optional<Field> field;
    if (flags.field) field = *flags.field == "q" ? Field::Q : Field::QI;

    Outcome o;
    try {
      ctx.problem = load(field);
      o = handler(ctx);
    } catch (const ModelError& e) {
      if (cmd != "check") throw;
      o.pass = false;
      o.result = {{"command", "check"},
                  {"reports", {io::report_json(Report::fail("model", e.what()))}},
                  {"pass", false}};
    } catch (const PreconditionError& e) {
      o.pass = false;
      o.result = {{"command", cmd}, {"pass", false}, {"message", e.what()}};
    }
    if (flags.format == "text") {
      out << o.table;
      render(o.result, 0, out);
    } else {
      out << io::dump(o.result);
    }
    return o.pass ? kPass : kFail;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const ModelError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : command_table()) out.push_back(c.name);
    return out;
  }();
  return names;
}

int run_document(const std::string& cmd, const std::string& document, const Options& opts, std::ostream& out,
                 std::ostream& err, std::optional<std::string> max_basis_env) {
  return dispatch(cmd, opts, [&](std::optional<Field> f) { return io::parse_problem_text(document, f); }, out, err,
                  max_basis_env);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> max_basis_env) {
  CLI::App app{"Jacobi complexes, universal deformation rings and Maurer-Cartan calculus for finite DGLAs",
               "jacobi-deform"};
  app.require_subcommand(1);
  Flags flags;
  std::string file;
  for (const auto& c : command_table()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", file, "problem file (JSON)")->required();
    sub->add_option("--order", flags.order, "order n");
    sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--field", flags.field, "ground field")->check(CLI::IsMember({"q", "qi"}));
    sub->add_option("--max-lambda-basis", flags.max_basis, "cap on λ^p basis sizes (default 100000)");
    sub->add_option("--max-order", flags.max_order, "largest accepted order")->capture_default_str();
    sub->add_option("--threads", flags.threads, "worker threads")->check(CLI::Range(1u, 256u));
  }

  std::vector<const char*> argv{"jacobi-deform"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  return dispatch(cmd, flags, [&](std::optional<Field> f) { return io::read_problem(file, f); }, out, err,
                  max_basis_env);
}

}  // namespace jdeform::cli
