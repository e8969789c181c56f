#include "binomeso/report.hpp"

#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <set>
#include <sstream>

using namespace binomeso;
using nlohmann::json;

namespace {

ProblemFile load(const std::string& name) {
  return read_problem_file(std::string(BINOMESO_DATA_DIR) + "/" + name);
}

using Classes = std::set<std::set<std::string>>;

// Pairwise normal-form comparison over the box, with plain polynomial
// reduction: x^u ~ x^v iff both normal forms vanish or one is a nonzero
// multiple of the other.
Classes brute_classes(const Ideal& ideal, long b) {
  const RingPtr& r = ideal.ring();
  const std::size_t n = r->nvars();
  std::vector<Monomial> nodes;
  Monomial u(n);
  while (true) {
    nodes.push_back(u);
    std::size_t i = 0;
    while (i < n && u[i] == b) u[i++] = 0;
    if (i == n) break;
    ++u[i];
  }
  std::vector<Polynomial> nf;
  for (const auto& m : nodes) nf.push_back(ideal.normal_form(Polynomial::monomial(r, m)));
  auto same = [&](std::size_t i, std::size_t j) {
    if (nf[i].is_zero() || nf[j].is_zero()) return nf[i].is_zero() && nf[j].is_zero();
    Polynomial a = nf[i] * Polynomial::constant(r, nf[j].leading().coeff);
    Polynomial c = nf[j] * Polynomial::constant(r, nf[i].leading().coeff);
    return (a - c).is_zero();
  };
  std::vector<bool> used(nodes.size(), false);
  Classes out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (used[i]) continue;
    std::set<std::string> cls;
    for (std::size_t j = i; j < nodes.size(); ++j)
      if (!used[j] && same(i, j)) {
        used[j] = true;
        cls.insert(monomial_to_string(*r, nodes[j]));
      }
    out.insert(cls);
  }
  return out;
}

struct ParsedDot {
  std::map<int, std::string> labels;
  std::vector<std::pair<int, int>> edges;
};

ParsedDot parse_dot(const std::string& dot) {
  ParsedDot p;
  std::regex node(R"(\s*n(\d+) \[label="([^"]*)\".*)"), edge(R"(\s*n(\d+) -- n(\d+).*)");
  std::istringstream in(dot);
  std::smatch m;
  for (std::string line; std::getline(in, line);) {
    if (std::regex_match(line, m, edge))
      p.edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
    else if (std::regex_match(line, m, node))
      p.labels[std::stoi(m[1])] = m[2];
  }
  return p;
}

Classes dot_components(const std::string& dot) {
  ParsedDot p = parse_dot(dot);
  std::map<int, int> parent;
  for (const auto& [i, l] : p.labels) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : p.edges) parent[find(b)] = find(a);
  std::map<int, std::set<std::string>> groups;
  for (const auto& [i, l] : p.labels) groups[find(i)].insert(l);
  Classes out;
  for (auto& [root, g] : groups) out.insert(g);
  return out;
}

} // namespace

TEST(Json, PolynomialsAsCoefficientExponentArrays) {
  auto r = make_ring({"x", "y"});
  json j = polynomial_json(parse_polynomial(r, "x^2 - 3/2*y"));
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["exponents"], json({2, 0}));
  EXPECT_EQ(j["terms"][0]["coefficient"], json({"1"}));
  EXPECT_EQ(j["terms"][1]["exponents"], json({0, 1}));
  EXPECT_EQ(j["terms"][1]["coefficient"], json({"-3/2"}));
  auto rz = make_ring({"x"}, FieldSpec::cyclotomic(3));
  json z = polynomial_json(parse_polynomial(rz, "x - zeta"));
  EXPECT_EQ(z["terms"][1]["coefficient"], json({"0", "-1"}));
}

TEST(Json, SchemaAndStability) {
  auto pf = load("two_variable_three_components.txt");
  CommandResult a = run_command("meso", pf, {});
  CommandResult b = run_command("meso", pf, {});
  EXPECT_EQ(a.report["schema"], 1);
  EXPECT_EQ(a.report.dump(), b.report.dump());
  const json& comps = a.report["result"]["components"];
  ASSERT_EQ(comps.size(), 3u);
  for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_LT(comps[i - 1].dump(), comps[i].dump());
  EXPECT_TRUE(a.report["result"]["intersection_verified"].get<bool>());
}

TEST(Json, ErrorsCarryKindAndExitCode) {
  MissingRootsError m("roots", 3);
  EXPECT_EQ(exit_code_for(m), 3);
  EXPECT_EQ(error_json("primary", m)["error"]["required_cyclotomic_order"], 3);
  EXPECT_EQ(exit_code_for(InputError("x")), 2);
  EXPECT_EQ(exit_code_for(CapabilityError("x")), 3);
  EXPECT_EQ(exit_code_for(BoundError("x", 5)), 4);
  EXPECT_EQ(error_json("meso", BoundError("x", 5))["error"]["kind"], "bound");
}

TEST(Commands, MesoOnThreeComponentExample) {
  auto pf = load("two_variable_three_components.txt");
  CommandResult r = run_command("meso", pf, {});
  std::set<std::string> texts;
  for (const auto& c : r.report["result"]["components"]) texts.insert(c["ideal"]["text"].get<std::string>());
  std::set<std::string> expect;
  for (const char* g : {"x - y", "x^2, y^2", "x^2 - y^2, x^3, x*y, y^3"})
    expect.insert(make_ideal(pf.ring, g).canonical().to_string());
  EXPECT_EQ(texts, expect);
}

TEST(Commands, HullIsNotBinomial) {
  auto pf = load("nonbinomial_hull.txt");
  CommandResult r = run_command("hull", pf, {});
  EXPECT_FALSE(r.report["result"]["binomial"].get<bool>());
  EXPECT_EQ(r.report["result"]["ideal"]["generators"].size(), 7u);
  EXPECT_EQ(r.report["result"]["nonbinomial_witness"]["text"], "x1*x4 - x2*x4 + x1 - x2");
}

TEST(Commands, CheckOnLatticeIdeal) {
  ProblemFile pf = parse_problem("ring x y z over QQ\nideal: x*z - y^2\n");
  CommandResult r = run_command("check", pf, {});
  EXPECT_TRUE(r.report["result"]["cellular"].get<bool>());
  EXPECT_EQ(r.report["result"]["sigma"], json({"x", "y", "z"}));
}

TEST(Commands, InputAndCapabilityErrors) {
  ProblemFile nonbinomial = parse_problem("ring x y over QQ\nideal: x + y + 1\n");
  EXPECT_THROW(run_command("meso", nonbinomial, {}), InputError);
  EXPECT_THROW(run_command("frobnicate", nonbinomial, {}), InputError);
  EXPECT_THROW(run_command("primary", load("cube_roots_not_mesoprimary.txt"), {}), MissingRootsError);
  EXPECT_THROW(run_command("toral-part", load("nonbinomial_toral_part.txt"), {}), InputError);
  CommandOptions bad;
  bad.sigma = std::vector<std::string>{"q"};
  EXPECT_THROW(run_command("restrict", load("embedded_linear_component.txt"), bad), InputError);
}

TEST(Commands, ToralPartFromSuppliedComponents) {
  auto pf = load("toral_and_andean_pair.txt");
  CommandResult direct = run_command("toral-part", pf, {});
  pf.components = {parse_polynomial_list(pf.ring, "z - w, x*w - y"), parse_polynomial_list(pf.ring, "x, y")};
  CommandOptions o;
  o.from_components = true;
  CommandResult supplied = run_command("toral-part", pf, o);
  EXPECT_EQ(direct.report["result"]["ideal"], supplied.report["result"]["ideal"]);
  EXPECT_TRUE(supplied.report["result"]["components_intersect_to_input"].get<bool>());
  pf.components.pop_back();
  EXPECT_THROW(run_command("toral-part", pf, o), InputError);
}

TEST(Commands, ComponentLinesRoundTrip) {
  ProblemFile p = parse_problem("ring x y over QQ\nideal: x^2 - y^2\ncomponent: x - y\ncomponent: x + y,\n  y^3\n");
  ASSERT_EQ(p.components.size(), 2u);
  EXPECT_EQ(p.components[1].size(), 2u);
  ProblemFile back = parse_problem(print_problem(p));
  EXPECT_EQ(print_problem(back), print_problem(p));
}

TEST(Diagram, ThreeComponentExampleFigure) {
  auto pf = load("two_variable_three_components.txt");
  std::string dot = emit_congruence_dot(pf.ideal(), 4);
  Classes got = dot_components(dot);
  EXPECT_TRUE(got.count({"x^2", "y^2"}));
  EXPECT_TRUE(got.count({"x*y"}));
  EXPECT_TRUE(got.count({"x^3", "x^2*y", "x*y^2", "y^3"}));
  // no monomial lies in the ideal
  EXPECT_EQ(dot.find("filled"), std::string::npos);
}

TEST(Diagram, ZeroIdealHasNoEdges) {
  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(congruence_diagram(Ideal(r), 3).edges.empty());
}

TEST(Diagram, MonomialIdealStaircase) {
  auto r = make_ring({"x", "y"});
  Ideal i = make_ideal(r, "x^2, y^2");
  Classes got = dot_components(emit_congruence_dot(i, 3));
  Classes expect = {{"1"}, {"x"}, {"y"}, {"x*y"}};
  std::set<std::string> rest;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      if (a >= 2 || b >= 2) rest.insert(monomial_to_string(*r, Monomial{a, b}));
  expect.insert(rest);
  EXPECT_EQ(got, expect);
}

TEST(Diagram, AgreesWithBruteForceOracle) {
  std::vector<Ideal> cases;
  for (const char* f : {"two_variable_three_components.txt", "cube_roots_not_mesoprimary.txt"})
    cases.push_back(load(f).ideal());
  auto r = make_ring({"x", "y"});
  for (const char* g : {"x^2 - y^2, x*y", "x^3 - 2*y^3, x*y^2", "x*y - 1", "x^2 - x*y, y^3"})
    cases.push_back(make_ideal(r, g));
  auto r3 = make_ring({"x", "y", "z"});
  cases.push_back(make_ideal(r3, "x*z - y^2, x^2, z^3"));
  for (const auto& i : cases) {
    long b = i.ring()->nvars() == 2 ? 8 : 3;
    std::string dot = emit_congruence_dot(i, b);
    EXPECT_EQ(dot_components(dot), brute_classes(i, b)) << i.to_string();
    // undirected edges, each pair listed once
    ParsedDot p = parse_dot(dot);
    std::set<std::pair<int, int>> seen;
    for (auto [a, c] : p.edges) {
      EXPECT_LT(a, c);
      EXPECT_TRUE(seen.insert({a, c}).second);
    }
  }
}
