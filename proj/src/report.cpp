#include "binomeso/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace binomeso {

using nlohmann::json;

json scalar_json(const Scalar& c) {
  json out = json::array();
  if (c.is_zero()) out.push_back("0");
  for (const auto& q : c.coeffs()) out.push_back(q.get_str());
  return out;
}

json polynomial_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coefficient", scalar_json(t.coeff)}, {"exponents", t.mono.vec()}});
  return {{"terms", terms}, {"text", p.to_string()}};
}

json monomial_json(const Ring& ring, const Monomial& m) {
  return {{"exponents", m.vec()}, {"text", monomial_to_string(ring, m)}};
}

json ideal_json(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& b : ideal.basis().elements) gens.push_back(polynomial_json(b));
  return {{"generators", gens}, {"text", ideal.canonical().to_string()}};
}

json sigma_json(const Ring& ring, const std::vector<bool>& sigma) {
  json out = json::array();
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i]) out.push_back(ring.name(i));
  return out;
}

namespace {

std::vector<Monomial> box(std::size_t n, long b) {
  std::vector<Monomial> out;
  Monomial u(n);
  while (true) {
    out.push_back(u);
    std::size_t i = 0;
    while (i < n && u[i] == b) u[i++] = 0;
    if (i == n) break;
    ++u[i];
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& c) { return grevlex_compare(a, c) < 0; });
  return out;
}

void require_binomial(const Ideal& ideal, const std::string& cmd) {
  auto r = is_binomial_ideal(ideal);
  if (!r.binomial)
    throw InputError(cmd + " needs a binomial ideal; reduced basis element " + r.witness->to_string() +
                     " has more than two terms");
}

std::optional<GradingMatrix> grading_of(const ProblemFile& problem, const Ideal& ideal) {
  if (!problem.grading) return std::nullopt;
  GradingMatrix g = check_positive_grading(*problem.grading);
  if (!is_homogeneous(ideal, g.a)) throw InputError("the ideal is not homogeneous for the grading");
  return g;
}

GradingMatrix require_grading(const ProblemFile& problem, const Ideal& ideal, const std::string& cmd) {
  auto g = grading_of(problem, ideal);
  if (!g) throw InputError(cmd + " needs a grading line in the problem file");
  return *g;
}

std::vector<bool> parse_sigma(const Ring& ring, const std::vector<std::string>& items) {
  std::vector<bool> sigma(ring.nvars(), false);
  for (const auto& s : items) {
    if (s.empty()) continue;
    if (auto i = ring.index_of(s)) {
      sigma[*i] = true;
      continue;
    }
    std::size_t pos = 0;
    long k = 0;
    try {
      k = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || k < 1 || k > static_cast<long>(ring.nvars()))
      throw InputError("--sigma entry '" + s + "' is neither a variable nor an index in 1.." +
                       std::to_string(ring.nvars()));
    sigma[k - 1] = true;
  }
  return sigma;
}

std::vector<bool> sigma_or_cellular(const Ideal& ideal, const CommandOptions& o, const std::string& cmd) {
  if (o.sigma) return parse_sigma(*ideal.ring(), *o.sigma);
  CellularData d = cellular_data(ideal);
  if (!d.cellular())
    throw InputError(cmd + " needs --sigma: the ideal is not cellular (" +
                     ideal.ring()->name(*d.failure_variable) + " is neither nilpotent nor a nonzerodivisor)");
  return d.sigma;
}

RestrictionContext context_of(const Ideal& ideal, const std::vector<bool>& sigma, const CommandOptions& o) {
  const RingPtr& ring = ideal.ring();
  if (!o.nu) return RestrictionContext::ones(ring->field(), sigma);
  RestrictionContext ctx{sigma, {}};
  for (const auto& s : *o.nu) {
    Polynomial c = parse_polynomial(ring, s);
    if (!c.is_constant()) throw InputError("--nu entry '" + s + "' is not a constant");
    ctx.nu.push_back(c.is_zero() ? ring->field().zero() : c.leading().coeff);
  }
  return ctx;
}

json witness_json(const Ring& ring, const WitnessRecord& w) {
  json merged = json::array();
  for (const auto& u : w.merged) merged.push_back(monomial_json(ring, u));
  json out = {{"sigma", sigma_json(ring, w.sigma)},
              {"monomial", monomial_json(ring, w.w)},
              {"merged", merged},
              {"sigma_monomial", monomial_json(ring, w.m)},
              {"essential", w.essential}};
  if (w.essential_poly) out["essential_polynomial"] = polynomial_json(*w.essential_poly);
  return out;
}

json monomials_json(const Ring& ring, const std::vector<Monomial>& v) {
  json out = json::array();
  for (const auto& u : v) out.push_back(monomial_json(ring, u));
  return out;
}

json meso_component_json(const MesoComponent& c) {
  const Ring& ring = *c.ideal.ring();
  return {{"ideal", ideal_json(c.ideal)},
          {"sigma", sigma_json(ring, c.sigma)},
          {"witness", witness_json(ring, c.witness)},
          {"mesoprime", ideal_json(c.mesoprime)},
          {"monomial_part", monomials_json(ring, c.monomial_part)}};
}

json primary_component_json(const PrimaryComponent& c) {
  json out = {{"ideal", ideal_json(c.ideal)},
              {"prime", ideal_json(c.prime)},
              {"sigma", sigma_json(*c.ideal.ring(), c.sigma)},
              {"minimal", c.minimal}};
  out["toral"] = c.toral ? json(*c.toral) : json(nullptr);
  return out;
}

json intersection_json(const IntersectionReport& r) {
  json out = {{"ideal", ideal_json(r.ideal)},
              {"binomial", r.binomial.binomial},
              {"components_used", r.used},
              {"decomposition_independent", r.decomposition_independent}};
  out["nonbinomial_witness"] = r.binomial.witness ? polynomial_json(*r.binomial.witness) : json(nullptr);
  return out;
}

// Sort components by their serialized form so that reports are stable.
void sort_by_dump(json& arr) {
  std::sort(arr.begin(), arr.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
}

std::string names(const Ring& ring, const std::vector<bool>& sigma) { return sigma_to_string(ring, sigma); }

struct Out {
  json result = json::object();
  std::ostringstream text;
  std::string dot;
};

void cmd_check(const ProblemFile& pf, const Ideal& ideal, Out& o) {
  const Ring& ring = *pf.ring;
  auto b = is_binomial_ideal(ideal);
  o.result["binomial"] = b.binomial;
  o.result["nonbinomial_witness"] = b.witness ? polynomial_json(*b.witness) : json(nullptr);
  o.text << "binomial: " << (b.binomial ? "yes" : "no, " + b.witness->to_string()) << "\n";
  if (pf.grading) {
    bool homogeneous = is_homogeneous(ideal, *pf.grading);
    o.result["homogeneous"] = homogeneous;
    o.text << "homogeneous: " << (homogeneous ? "yes" : "no") << "\n";
    try {
      GradingMatrix g = check_positive_grading(*pf.grading);
      o.result["positive_grading"] = true;
      o.result["weights"] = g.weights;
      o.text << "positive grading: yes\n";
    } catch (const InputError& e) {
      o.result["positive_grading"] = false;
      o.result["positivity_failure"] = e.what();
      o.text << "positive grading: no, " << e.what() << "\n";
    }
  } else {
    o.result["homogeneous"] = nullptr;
    o.result["positive_grading"] = nullptr;
  }
  if (ideal.is_unit()) {
    o.result["unit"] = true;
    o.text << "unit ideal\n";
    return;
  }
  CellularData d = cellular_data(ideal);
  o.result["cellular"] = d.cellular();
  if (d.cellular()) {
    o.result["sigma"] = sigma_json(ring, d.sigma);
    o.text << "cellular: yes, sigma = " << names(ring, d.sigma) << "\n";
  } else {
    o.result["failure_variable"] = ring.name(*d.failure_variable);
    o.text << "cellular: no, " << ring.name(*d.failure_variable) << " is neither nilpotent nor a nonzerodivisor\n";
  }
  if (d.cellular() && b.binomial) {
    MesoprimaryReport m = is_mesoprimary(ideal);
    o.result["mesoprimary"] = m.mesoprimary;
    if (m.violator) o.result["mesoprimary_violator"] = monomial_json(ring, *m.violator);
    o.text << "mesoprimary: " << (m.mesoprimary ? "yes" : "no") << "\n";
  } else {
    o.result["mesoprimary"] = d.cellular() ? json(nullptr) : json(false);
  }
}

void cmd_cellular(const Ideal& ideal, Out& o) {
  require_binomial(ideal, "cellular");
  const Ring& ring = *ideal.ring();
  json leaves = json::array();
  for (const auto& l : cellular_decomposition(ideal)) {
    leaves.push_back({{"ideal", ideal_json(l.ideal)},
                      {"sigma", sigma_json(ring, l.sigma)},
                      {"nilpotency", l.nilpotency},
                      {"path", l.path}});
    o.text << names(ring, l.sigma) << "  " << l.ideal.canonical().to_string() << "\n";
  }
  o.result["leaves"] = leaves;
}

void cmd_meso(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  require_binomial(ideal, "meso");
  auto g = grading_of(pf, ideal);
  MesoDecomposition d = mesoprimary_decomposition(ideal, g, opt.bound);
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(meso_component_json(c));
  sort_by_dump(comps);
  o.result["components"] = comps;
  o.result["graded"] = d.graded;
  json bounds = json::array();
  for (const auto& [s, b] : d.bounds) bounds.push_back({{"sigma", sigma_json(*pf.ring, s)}, {"bound", b}});
  o.result["bounds"] = bounds;
  json skipped = json::array();
  for (const auto& w : d.skipped) skipped.push_back(witness_json(*pf.ring, w));
  o.result["skipped"] = skipped;
  o.result["intersection_verified"] = d.intersection_verified;
  o.result["all_mesoprimary"] = d.all_mesoprimary;
  for (const auto& c : comps)
    o.text << c["sigma"].dump() << " witness " << c["witness"]["monomial"]["text"].get<std::string>() << "  "
           << c["ideal"]["text"].get<std::string>() << "\n";
  o.text << "intersection verified: " << (d.intersection_verified ? "yes" : "no") << "\n";
}

void cmd_primary(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  require_binomial(ideal, "primary");
  auto g = grading_of(pf, ideal);
  PrimaryDecomposition d = primary_decomposition(ideal, g, opt.bound);
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(primary_component_json(c));
  sort_by_dump(comps);
  o.result["components"] = comps;
  json primes = json::array();
  for (const auto& p : associated_primes(d.components)) {
    json e = {{"prime", ideal_json(p.prime)}, {"sigma", sigma_json(*pf.ring, p.sigma)}, {"minimal", p.minimal}};
    e["toral"] = p.toral ? json(*p.toral) : json(nullptr);
    primes.push_back(e);
  }
  sort_by_dump(primes);
  o.result["associated_primes"] = primes;
  o.result["intersection_verified"] = d.intersection_verified;
  for (const auto& c : comps) {
    o.text << (c["minimal"].get<bool>() ? "minimal  " : "embedded ");
    if (!c["toral"].is_null()) o.text << (c["toral"].get<bool>() ? "toral  " : "andean ");
    o.text << c["ideal"]["text"].get<std::string>() << "  prime " << c["prime"]["text"].get<std::string>() << "\n";
  }
}

void cmd_witnesses(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  require_binomial(ideal, "witnesses");
  GradingMatrix g = require_grading(pf, ideal, "witnesses");
  std::vector<bool> sigma = sigma_or_cellular(ideal, opt, "witnesses");
  long bound = opt.bound ? *opt.bound : default_witness_bound(ideal, sigma, g);
  o.result["sigma"] = sigma_json(*pf.ring, sigma);
  o.result["bound"] = bound;
  json all = json::array();
  for (const auto& w : monomial_witnesses(ideal, sigma, g, bound)) all.push_back(witness_json(*pf.ring, w));
  json ess = json::array();
  for (const auto& w : essential_witnesses(ideal, sigma, g, bound)) ess.push_back(witness_json(*pf.ring, w));
  o.result["witnesses"] = all;
  o.result["essential"] = ess;
  o.text << "sigma = " << names(*pf.ring, sigma) << ", bound " << bound << "\n";
  for (const auto& w : all)
    o.text << w["monomial"]["text"].get<std::string>() << (w["essential"].get<bool>() ? "  essential" : "") << "\n";
  if (opt.witness_monomial) {
    Monomial m = parse_monomial(pf.ring, *opt.witness_monomial);
    MesoComponent c = coprincipal_component(ideal, sigma, m, &g, bound);
    o.result["component"] = meso_component_json(c);
    o.text << "component at " << *opt.witness_monomial << ": " << c.ideal.canonical().to_string() << "\n";
  }
}

void cmd_hull(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  require_binomial(ideal, "hull");
  auto d = primary_decomposition(ideal, grading_of(pf, ideal), opt.bound);
  IntersectionReport r = hull(d.components);
  o.result = intersection_json(r);
  o.text << "hull: " << r.ideal.canonical().to_string() << "\n"
         << "binomial: " << (r.binomial.binomial ? "yes" : "no, " + r.binomial.witness->to_string()) << "\n";
}

void cmd_toral_part(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  std::vector<PrimaryComponent> comps;
  if (opt.from_components) {
    if (pf.components.empty()) throw InputError("--from-components needs component: lines in the problem file");
    // the components may be non-binomial only in their intersection
    if (!pf.grading) throw InputError("toral-part needs a grading line in the problem file");
    GradingMatrix g = check_positive_grading(*pf.grading);
    std::vector<Ideal> parts;
    for (const auto& gens : pf.components) {
      Ideal c(pf.ring, gens);
      if (!is_homogeneous(c, g.a)) throw InputError("component " + c.to_string() + " is not homogeneous");
      comps.push_back(primary_component_info(c));
      parts.push_back(c);
    }
    bool verified = ideal_equal(intersect_all(pf.ring, parts), ideal);
    o.result["components_intersect_to_input"] = verified;
    if (!verified) throw InputError("the supplied components do not intersect to the ideal");
    mark_minimal(comps);
    IntersectionReport r = toral_part(comps, g);
    o.result.update(intersection_json(r));
  } else {
    require_binomial(ideal, "toral-part");
    GradingMatrix g = require_grading(pf, ideal, "toral-part");
    comps = primary_decomposition(ideal, g, opt.bound).components;
    o.result = intersection_json(toral_part(comps, g));
  }
  o.text << "toral part: " << o.result["ideal"]["text"].get<std::string>() << "\n"
         << "binomial: " << (o.result["binomial"].get<bool>() ? "yes" : "no") << "\n";
}

void cmd_meso_toral_part(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  require_binomial(ideal, "meso-toral-part");
  GradingMatrix g = require_grading(pf, ideal, "meso-toral-part");
  IntersectionReport r = meso_toral_part(mesoprimary_decomposition(ideal, g, opt.bound), g);
  o.result = intersection_json(r);
  o.text << "meso toral part: " << r.ideal.canonical().to_string() << "\n";
}

void cmd_restrict(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  std::vector<bool> sigma = sigma_or_cellular(ideal, opt, "restrict");
  RestrictionContext ctx = context_of(ideal, sigma, opt);
  Ideal bar = restrict_ideal(ideal, ctx);
  o.result["sigma"] = sigma_json(*pf.ring, sigma);
  json nu = json::array();
  for (const auto& v : ctx.nu) nu.push_back(scalar_json(v));
  o.result["nu"] = nu;
  o.result["restricted"] = ideal_json(bar);
  o.result["restricted_variables"] = bar.ring()->names();
  if (auto g = grading_of(pf, ideal)) {
    ConventionReport c = check_convention(ideal, ctx, *g);
    o.result["convention"] = {{"holds", c.holds}, {"reason", c.reason}};
  }
  o.text << "restricted: " << bar.canonical().to_string() << "\n";
}

void cmd_transfer(const ProblemFile& pf, const Ideal& ideal, const CommandOptions& opt, Out& o) {
  require_binomial(ideal, "transfer-check");
  GradingMatrix g = require_grading(pf, ideal, "transfer-check");
  std::vector<bool> sigma = sigma_or_cellular(ideal, opt, "transfer-check");
  RestrictionContext ctx = context_of(ideal, sigma, opt);
  TransferReport t = witness_transfer_check(ideal, ctx, g, opt.bound);
  const Ring& small = *t.restricted.ring();
  o.result["sigma"] = sigma_json(*pf.ring, sigma);
  o.result["convention"] = {{"holds", t.convention.holds}, {"reason", t.convention.reason}};
  o.result["restricted"] = ideal_json(t.restricted);
  o.result["degree_bound"] = t.degree_bound;
  o.result["witnesses"] = monomials_json(small, t.witnesses);
  o.result["weak_witnesses"] = monomials_json(small, t.weak_witnesses);
  o.result["essential"] = monomials_json(small, t.essential);
  o.result["weak_essential"] = monomials_json(small, t.weak_essential);
  o.result["witnesses_equal"] = t.witnesses_equal;
  o.result["essential_equal"] = t.essential_equal;
  o.text << "convention: " << (t.convention.holds ? "holds" : "fails, " + t.convention.reason) << "\n"
         << "witness sets equal: " << (t.witnesses_equal ? "yes" : "no") << "\n"
         << "essential sets equal: " << (t.essential_equal ? "yes" : "no") << "\n";
  if (ctx.all_ones(pf.ring->field()) && t.convention.holds) {
    SuiteReport lift = lifting_suite(ideal, ctx, g, 200, 1);
    SuiteReport non = nonlifting_suite(ideal, ctx, g, 200, 2);
    auto suite = [](const SuiteReport& s) {
      return json{{"samples", s.samples}, {"violations", s.violations}, {"examples", s.examples}};
    };
    o.result["lifting_suite"] = suite(lift);
    o.result["nonlifting_suite"] = suite(non);
    o.text << "lifting suite: " << lift.violations << "/" << lift.samples << " violations\n"
           << "non-lifting suite: " << non.violations << "/" << non.samples << " violations\n";
  }
}

void cmd_diagram(const Ideal& ideal, const CommandOptions& opt, Out& o) {
  long b = opt.bound ? *opt.bound : 4;
  if (b < 0) throw InputError("--bound must be nonnegative");
  CongruenceDiagram d = congruence_diagram(ideal, b);
  const Ring& ring = *ideal.ring();
  // classes by union of the edges
  std::vector<std::size_t> parent(d.nodes.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : d.edges) parent[find(e.v)] = find(e.u);
  std::map<std::size_t, json> classes;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) classes[find(i)].push_back(monomial_to_string(ring, d.nodes[i]));
  json cls = json::array();
  for (auto& [root, members] : classes) cls.push_back({{"members", members}, {"in_ideal", bool(d.in_ideal[root])}});
  o.result["region_bound"] = b;
  o.result["classes"] = cls;
  o.result["edges"] = d.edges.size();
  o.dot = emit_congruence_dot(ideal, b);
  o.text << cls.size() << " classes, " << d.edges.size() << " edges in [0," << b << "]^" << ring.nvars() << "\n";
}

json input_json(const ProblemFile& pf) {
  json in = {{"variables", pf.ring->names()}, {"field", pf.ring->field().spec().to_string()}};
  in["grading"] = pf.grading ? json(*pf.grading) : json(nullptr);
  json gens = json::array();
  for (const auto& p : pf.generators) gens.push_back(polynomial_json(p));
  in["generators"] = gens;
  if (!pf.components.empty()) {
    json comps = json::array();
    for (const auto& c : pf.components) {
      json cg = json::array();
      for (const auto& p : c) cg.push_back(polynomial_json(p));
      comps.push_back(cg);
    }
    in["components"] = comps;
  }
  return in;
}

json options_json(const CommandOptions& o) {
  json out = json::object();
  if (o.bound) out["bound"] = *o.bound;
  if (o.sigma) out["sigma"] = *o.sigma;
  if (o.witness_monomial) out["witness_monomial"] = *o.witness_monomial;
  if (o.nu) out["nu"] = *o.nu;
  if (o.from_components) out["from_components"] = true;
  return out;
}

} // namespace

CongruenceDiagram congruence_diagram(const Ideal& ideal, long region_bound) {
  require_binomial(ideal, "diagram");
  const RingPtr& ring = ideal.ring();
  const Field& k = ring->field();
  CongruenceDiagram d;
  d.nodes = box(ring->nvars(), region_bound);
  TermNormalizer nf(ideal);
  std::map<Monomial, std::vector<std::pair<std::size_t, Scalar>>> classes;
  std::vector<std::size_t> zero;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& t = nf(d.nodes[i]);
    d.in_ideal.push_back(!t.has_value());
    if (t)
      classes[t->mono].emplace_back(i, t->coeff);
    else
      zero.push_back(i);
  }
  for (const auto& [m, members] : classes)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        d.edges.push_back({members[a].first, members[b].first, k.div(members[a].second, members[b].second)});
  for (std::size_t a = 0; a < zero.size(); ++a)
    for (std::size_t b = a + 1; b < zero.size(); ++b) d.edges.push_back({zero[a], zero[b], k.zero()});
  std::sort(d.edges.begin(), d.edges.end(),
            [](const auto& x, const auto& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  return d;
}

std::string emit_congruence_dot(const Ideal& ideal, long region_bound) {
  CongruenceDiagram d = congruence_diagram(ideal, region_bound);
  const Ring& ring = *ideal.ring();
  const Field& k = ring.field();
  const std::size_t n = ring.nvars();
  std::ostringstream os;
  os << "graph congruence {\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Monomial& u = d.nodes[i];
    os << "  n" << i << " [label=\"" << monomial_to_string(ring, u) << "\"";
    if (n <= 2) {
      os << ", pos=\"" << (n > 0 ? u[0] : 0) << "," << (n > 1 ? u[1] : 0) << "!\"";
    } else if (n == 3) {
      os << ", pos=\"" << u[0] + 0.5 * u[2] << "," << u[1] + 0.35 * u[2] << "!\"";
    }
    if (d.in_ideal[i]) os << ", style=filled, fillcolor=gray80";
    os << "];\n";
  }
  for (const auto& e : d.edges) {
    os << "  n" << e.u << " -- n" << e.v;
    if (e.lambda.is_zero())
      os << " [style=dashed, color=gray60]";
    else if (!k.is_one(e.lambda))
      os << " [label=\"" << k.to_string(e.lambda) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check",      "cellular",        "meso",     "primary",
                                                 "witnesses",  "hull",            "toral-part", "meso-toral-part",
                                                 "restrict",   "transfer-check",  "diagram"};
  return names;
}

CommandResult run_command(const std::string& cmd, const ProblemFile& problem, const CommandOptions& options) {
  const auto& all = command_names();
  if (std::find(all.begin(), all.end(), cmd) == all.end()) throw InputError("unknown command '" + cmd + "'");
  if (options.from_components && cmd != "toral-part")
    throw InputError("--from-components applies to toral-part only");
  if (options.witness_monomial && cmd != "witnesses")
    throw InputError("--witness-monomial applies to witnesses only");
  const Ideal ideal = problem.ideal();
  Out o;
  auto t0 = std::chrono::steady_clock::now();
  if (cmd == "check") cmd_check(problem, ideal, o);
  else if (cmd == "cellular") cmd_cellular(ideal, o);
  else if (cmd == "meso") cmd_meso(problem, ideal, options, o);
  else if (cmd == "primary") cmd_primary(problem, ideal, options, o);
  else if (cmd == "witnesses") cmd_witnesses(problem, ideal, options, o);
  else if (cmd == "hull") cmd_hull(problem, ideal, options, o);
  else if (cmd == "toral-part") cmd_toral_part(problem, ideal, options, o);
  else if (cmd == "meso-toral-part") cmd_meso_toral_part(problem, ideal, options, o);
  else if (cmd == "restrict") cmd_restrict(problem, ideal, options, o);
  else if (cmd == "transfer-check") cmd_transfer(problem, ideal, options, o);
  else cmd_diagram(ideal, options, o);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  CommandResult r;
  r.report = {{"schema", 1},
              {"command", cmd},
              {"input", input_json(problem)},
              {"options", options_json(options)},
              {"result", o.result}};
  if (options.timing) r.report["timing_ms"] = ms;
  r.text = o.text.str();
  r.dot = o.dot;
  return r;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 2;
  if (dynamic_cast<const CapabilityError*>(&e)) return 3;
  if (dynamic_cast<const BoundError*>(&e)) return 4;
  return 1;
}

json error_json(const std::string& cmd, const std::exception& e) {
  std::string kind = "error";
  json err = {{"message", e.what()}};
  if (auto* m = dynamic_cast<const MissingRootsError*>(&e)) {
    kind = "missing_roots";
    err["required_cyclotomic_order"] = m->required_order();
  } else if (dynamic_cast<const CapabilityError*>(&e)) {
    kind = "capability";
  } else if (auto* b = dynamic_cast<const BoundError*>(&e)) {
    kind = "bound";
    err["bound"] = b->bound();
  } else if (dynamic_cast<const InputError*>(&e)) {
    kind = "input";
  }
  err["kind"] = kind;
  return {{"schema", 1}, {"command", cmd}, {"error", err}};
}

} // namespace binomeso
