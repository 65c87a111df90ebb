#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "jdeform/deformation.hpp"

namespace py = pybind11;
using namespace jdeform;

namespace {

py::tuple run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

py::tuple run_document(const std::string& cmd, const std::string& document, std::optional<std::size_t> order,
                       const std::string& format, std::optional<std::string> field,
                       std::optional<std::size_t> max_lambda_basis, std::size_t max_order, unsigned threads) {
  cli::Options opts;
  opts.order = order;
  opts.format = format;
  opts.field = std::move(field);
  opts.max_basis = max_lambda_basis;
  opts.max_order = max_order;
  opts.threads = threads;
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run_document(cmd, document, opts, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Jacobi complexes, universal deformation rings and Maurer-Cartan calculus";

  m.def("subcommands", &cli::subcommands);
  m.def("run", &run_args, py::arg("args"),
        "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
  m.def("run_document", &run_document, py::arg("command"), py::arg("document"), py::arg("order") = py::none(),
        py::arg("format") = "json", py::arg("field") = py::none(), py::arg("max_lambda_basis") = py::none(),
        py::arg("max_order") = 5, py::arg("threads") = 1,
        "Runs one subcommand on a JSON problem document; returns (exit_code, stdout, stderr).");

  m.def(
      "canonical_scalar",
      [](const std::string& text, const std::string& field) {
        return Scalar::parse(text, field == "q" ? Field::Q : Field::QI).str();
      },
      py::arg("text"), py::arg("field") = "qi", "Lowest-terms form of a fraction string.");

  m.def(
      "bch_terms",
      []() {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : bch_terms()) {
          std::string w;
          for (int c : t.word) w += c == 0 ? 'a' : 'b';
          out.emplace_back(w, t.coef.str());
        }
        return out;
      },
      "BCH series as (left-normed word in a, b, coefficient) up to length 5.");

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}
