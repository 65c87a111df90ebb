#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "jdeform/io.hpp"
#include "support.hpp"

using namespace jdeform;
using namespace jdeform::testing;
using io::json;

namespace {

const std::string kFixtures = JDEFORM_FIXTURES_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name + ".json"; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, std::optional<std::string> env = {}) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string parse_error(const std::string& text, std::optional<Field> field = {}) {
  try {
    io::parse_problem_text(text, field);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, ParsesE1) {
  auto p = io::read_problem(fixture("e1"));
  ASSERT_TRUE(p.dgla.has_value());
  EXPECT_EQ(p.dgla->dim(), 1u);
  EXPECT_EQ(p.dgla->degree(0), 1);
  EXPECT_EQ(p.order, std::optional<std::size_t>(3));
}

TEST(Io, FractionGrammar) {
  for (const char* good : {"0", "-3", "12/7", "-4/6", "007"})
    EXPECT_NO_THROW(io::parse_scalar(json(good), Field::Q, "x")) << good;
  for (const char* bad : {"1/0", "+1", "1.5", "1/2/3", "", "1/-2", "i", "1/2+1*i", " 1"})
    EXPECT_THROW(io::parse_scalar(json(bad), Field::Q, "x"), ParseError) << bad;
  EXPECT_EQ(io::parse_scalar(json("-4/6"), Field::Q, "x"), Scalar(-2, 3));
  EXPECT_EQ(io::parse_scalar(json("1/2+1*i"), Field::QI, "x"), Scalar(mpq_class(1, 2), mpq_class(1)));
  EXPECT_EQ(io::parse_scalar(json(5), Field::Q, "x"), Scalar(5));
}

TEST(Io, ErrorsNameTheField) {
  const std::string head = R"({"version": 1, "dgla": {"generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 2}], )";
  std::string e = parse_error(head + R"("bracket": [{"a": "x", "b": "x", "value": [["y", "1/0"]]}]}})");
  EXPECT_NE(e.find("$.dgla.bracket[0].value[0][1]"), std::string::npos) << e;
  EXPECT_NE(e.find("1/0"), std::string::npos);

  e = parse_error(head + R"("bracket": [{"a": "x", "b": "q", "value": []}]}})");
  EXPECT_NE(e.find("unknown generator 'q'"), std::string::npos) << e;

  e = parse_error(head + R"("bracket": [{"a": "y", "b": "x", "value": []}]}})");
  EXPECT_NE(e.find("a <= b"), std::string::npos) << e;

  e = parse_error(head + R"("differential": [["x", "y", "1"], ["x", "y", "2"]]}})");
  EXPECT_NE(e.find("duplicate"), std::string::npos) << e;

  e = parse_error(R"({"version": 2, "dgla": {"generators": []}})");
  EXPECT_NE(e.find("unsupported version 2"), std::string::npos) << e;

  e = parse_error(R"({"version": 1, "dgla": {"generators": []}, "artin": {"basis": [], "levels": [], "exponent": 0}})");
  EXPECT_NE(e.find("exactly one"), std::string::npos) << e;

  e = parse_error(R"({"version": 1, "dgla": {"generators": [], "colour": 1}})");
  EXPECT_NE(e.find("unknown key 'colour'"), std::string::npos) << e;

  e = parse_error(R"({"version": 1, "dgla": {"generators": [{"name": "x", "degree": 1}]},
                      "mc": {"ring": {"truncated_polynomial": {"order": 2}}, "element": {"x": {"u": "1"}}}})");
  EXPECT_NE(e.find("unknown ring basis element 'u'"), std::string::npos) << e;

  e = parse_error("{\"version\": 1,\n \"dgla\": }");
  EXPECT_NE(e.find("line 2"), std::string::npos) << e;

  e = parse_error(R"({"version": 1, "field": "qi", "dgla": {"generators": [{"name": "x", "degree": 1}],
                      "differential": [["x", "x", "1*i"]]}})", Field::Q);
  EXPECT_NE(e.find("malformed fraction"), std::string::npos) << e;
}

TEST(Io, DglaRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    DGLA L = random_dgla(rng);
    json j = io::dgla_json(L);
    DGLA M = io::parse_dgla(j, Field::Q);
    ASSERT_EQ(M.dim(), L.dim());
    EXPECT_EQ(M.d(), L.d());
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (std::size_t b = 0; b < L.dim(); ++b) EXPECT_EQ(M.bracket(a, b), L.bracket(a, b)) << trial;
    EXPECT_EQ(io::dump(io::dgla_json(M)), io::dump(j));
  }
}

TEST(Io, ArtinRoundTrip) {
  for (const auto& R : {truncated_polynomial(4), monomial_quotient({"a", "b"}, 3, {{1, 1}}),
                        monomial_quotient({"a", "b", "c"}, 2)}) {
    EXPECT_TRUE(io::parse_artin(io::artin_json(R), Field::Q) == R);
  }
}

TEST(Io, CechModelFromJson) {
  auto p = io::read_problem(fixture("diamond_gauge"));
  ASSERT_TRUE(p.cech);
  EXPECT_EQ(p.dgla->dim(), 3u * (4 + 5));
  EXPECT_EQ(p.gauge.size(), 4u);
  ASSERT_TRUE(p.mc);
  EXPECT_TRUE(mc_check(*p.mc).pass);
  auto t = io::read_problem(fixture("triangle_truncated"));
  EXPECT_EQ(t.dgla->dim(), 9u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", fixture("e1")}).code, 0);
  auto bad = run({"check", fixture("bad_jacobi")});
  EXPECT_EQ(bad.code, 1);
  json j = json::parse(bad.out);
  EXPECT_EQ(j["reports"][0]["witness"].size(), 3u);
  EXPECT_EQ(run({"check", kFixtures + "/missing.json"}).code, 2);
  EXPECT_EQ(run({"ring", fixture("e1"), "--order", "9"}).code, 2);
  EXPECT_EQ(run({"ring", fixture("bad_jacobi"), "--order", "2"}).code, 1);  // ill-formed DGLA
  EXPECT_EQ(run({"ks", fixture("e1")}).code, 2);                             // no MC element
  EXPECT_EQ(run({"ks", fixture("not_mc_e2")}).code, 1);
  EXPECT_EQ(run({"frobnicate", fixture("e1")}).code, 2);
  EXPECT_EQ(run({"check", fixture("e1"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BasisCap) {
  EXPECT_EQ(run({"ring", fixture("e2prime"), "--max-lambda-basis", "2"}).code, 2);
  EXPECT_EQ(run({"ring", fixture("e2prime")}, "2").code, 2);
  EXPECT_EQ(run({"ring", fixture("e2prime"), "--max-lambda-basis", "100"}, "2").code, 0);
  EXPECT_EQ(run({"ring", fixture("e2prime")}, "lots").code, 2);
}

TEST(Cli, RingOutputRoundTrips) {
  for (const char* f : {"e1", "e2", "e2prime", "triangle_truncated"}) {
    auto r = run({"ring", fixture(f)});
    ASSERT_EQ(r.code, 0) << r.err;
    auto p = io::parse_problem_text(r.out);
    ASSERT_TRUE(p.artin.has_value());
    EXPECT_TRUE(check_artin(*p.artin).pass) << f;
  }
  json ring = json::parse(run({"ring", fixture("e1")}).out);
  EXPECT_EQ(ring["description"], "C[t]/(t^4)");
  EXPECT_TRUE(io::parse_artin(ring["artin"], Field::Q) == ring_of(e1(), 3).R);
}

TEST(Cli, ObstructionsE2) {
  auto r = run({"obstructions", fixture("e2")});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  const json& lv = j["levels"][0];
  EXPECT_EQ(lv["dim_K"], 0);
  EXPECT_EQ(lv["ob"]["rows"], 1);
  EXPECT_EQ(lv["ob"]["cols"], 1);
  EXPECT_EQ(lv["ob"]["entries"], json::parse(R"([[0, 0, "1"]])"));
}

TEST(Cli, TextModeTable) {
  auto r = run({"jacobi", fixture("e2prime"), "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("dims of λ^p in total degree k\n", 0), 0u);
  EXPECT_NE(r.out.find("dim H^0(J_2) = 4"), std::string::npos);
}

TEST(Cli, FieldOverride) {
  EXPECT_EQ(run({"check", fixture("e2"), "--field", "qi"}).code, 0);
  auto r = run({"ring", fixture("e2"), "--field", "qi"});
  EXPECT_EQ(json::parse(r.out)["field"], "qi");
}
