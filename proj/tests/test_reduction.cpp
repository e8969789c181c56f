#include "binomeso/io.hpp"
#include "binomeso/primdec.hpp"
#include "binomeso/reduction.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace binomeso;

namespace {

ProblemFile load(const std::string& name) {
  return read_problem_file(std::string(BINOMESO_DATA_DIR) + "/" + name);
}

std::vector<bool> mask(const RingPtr& r, const std::vector<std::string>& names) {
  std::vector<bool> m(r->nvars(), false);
  for (const auto& s : names) m[*r->index_of(s)] = true;
  return m;
}

std::set<std::string> names_of(const Ring& r, const std::vector<Monomial>& v) {
  std::set<std::string> out;
  for (const auto& u : v) out.insert(monomial_to_string(r, u));
  return out;
}

std::set<std::string> weak_names(const Ideal& ideal, const std::vector<bool>& tau, long d, bool essential) {
  std::set<std::string> out;
  for (const auto& rec : weak_monomial_witnesses(ideal, tau, d))
    if (!essential || rec.essential)
      for (const auto& w : rec.merged) out.insert(monomial_to_string(*ideal.ring(), w));
  return out;
}

// Def 5.8(a) for sigma = empty straight from polynomial normal forms:
// lambda is forced by comparing x_i x^w with x_i x^q
std::set<std::string> brute_weak_witnesses(const Ideal& ideal, long d) {
  const RingPtr& r = ideal.ring();
  const std::size_t n = r->nvars();
  const Field& k = r->field();
  auto monos = monomials_up_to_weight(standard_grading(n), std::vector<bool>(n, true), d + 1);
  std::set<std::string> out;
  for (const auto& w : monos) {
    if (w.degree() > d) continue;
    Polynomial xw = Polynomial::monomial(r, w);
    if (ideal.contains(xw)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Polynomial xi = Polynomial::variable(r, i);
      bool found = false;
      // lambda = -1 with q = w covers a variable killing x^w
      if (ideal.contains(xi * xw) && k.characteristic() != 2) found = true;
      for (const auto& q : monos) {
        if (found) break;
        Polynomial a = ideal.normal_form(xi * xw);
        Polynomial b = ideal.normal_form(xi * Polynomial::monomial(r, q));
        if (a.is_zero() || b.is_zero() || a.size() != 1 || b.size() != 1 ||
            a.leading().mono != b.leading().mono)
          continue;
        Scalar lambda = k.div(a.leading().coeff, b.leading().coeff);
        if (!ideal.contains(xw - Polynomial::monomial(r, q).scale(lambda))) found = true;
      }
      ok = found;
    }
    if (ok) out.insert(monomial_to_string(*r, w));
  }
  return out;
}

struct ConventionCase {
  std::vector<std::string> names;
  std::string gens;
  IntMatrix a;
  std::vector<std::string> sigma;
};

const std::vector<ConventionCase>& convention_cases() {
  static const std::vector<ConventionCase> cases = {
      {{"x", "y", "z"}, "x^2 - y*z, y^2", {{1, 1, 1}}, {"z"}},
      {{"x", "y", "z"}, "x^2 - y*z, y^3, x*y^2", {{1, 1, 1}}, {"z"}},
      {{"x", "y", "z"}, "x*z - y*z, x^2, y^2", {{1, 1, 1}}, {"z"}},
      {{"x", "y", "s", "t"}, "x*s - y*t, x^2, y^2", {{1, 1, 1, 1}, {1, 0, 0, 1}}, {"s", "t"}},
      {{"x", "y", "s", "t"}, "x*s^2 - y*t^2, x^2, x*y, y^3", {{1, 1, 1, 1}, {2, 0, 0, 1}}, {"s", "t"}},
  };
  return cases;
}

} // namespace

TEST(RestrictIdeal, EmbeddedLinearComponentAtOnes) {
  auto pf = load("embedded_linear_component.txt");
  auto ctx = RestrictionContext::ones(pf.ring->field(), mask(pf.ring, {"z", "w"}));
  Ideal bar = restrict_ideal(pf.ideal(), ctx);
  EXPECT_TRUE(ideal_equal(bar, make_ideal(bar.ring(), "x^2")));
}

TEST(RestrictIdeal, LatticeIdealRestrictsToZero) {
  auto r = make_ring({"x", "y", "u"});
  auto ctx = RestrictionContext::ones(r->field(), mask(r, {"x", "y"}));
  EXPECT_TRUE(restrict_ideal(make_ideal(r, "x - y"), ctx).is_zero());
}

TEST(RestrictIdeal, NuMustBeAZeroOfTheSigmaPart) {
  auto r = make_ring({"x", "u"});
  Ideal i = make_ideal(r, "x^3 - 1, u^2");
  RestrictionContext good = RestrictionContext::ones(r->field(), mask(r, {"x"}));
  EXPECT_NO_THROW(restrict_ideal(i, good));
  RestrictionContext bad{mask(r, {"x"}), {r->field().from_int(2)}};
  try {
    restrict_ideal(i, bad);
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("introduces constants"), std::string::npos);
  }
}

TEST(WeakWitnesses, AgreeWithBruteForce) {
  for (const std::string gens : {"x^2", "x - y, y^2", "x^2 - y, y^2", "x^3, x*y, y^2", "x^2 - y^2, x*y"}) {
    auto r = make_ring({"x", "y"});
    Ideal i = make_ideal(r, gens);
    EXPECT_EQ(weak_names(i, {true, true}, 3, false), brute_weak_witnesses(i, 3)) << gens;
  }
}

TEST(WeakWitnesses, SingleVariableSquare) {
  auto r = make_ring({"x"});
  Ideal i = make_ideal(r, "x^2");
  EXPECT_EQ(weak_names(i, {true}, 4, false), (std::set<std::string>{"x"}));
  EXPECT_EQ(weak_names(i, {true}, 4, true), (std::set<std::string>{"x"}));
}

TEST(WeakWitnesses, ZeroIdealHasWitnessOneForEmptyTau) {
  auto r = make_ring({"x"});
  EXPECT_EQ(weak_names(Ideal(r), {false}, 3, false), (std::set<std::string>{"1"}));
}

TEST(WeakWitnesses, TwistedCubicRestriction) {
  auto pf = load("twisted_cubic_cell.txt");
  auto ctx = RestrictionContext::ones(pf.ring->field(), mask(pf.ring, {"a", "b", "c", "d"}));
  Ideal bar = restrict_ideal(pf.ideal(), ctx);
  EXPECT_TRUE(ideal_equal(bar, make_ideal(bar.ring(), "x^2, x*y, y^2")));
  EXPECT_EQ(weak_names(bar, {true, true}, 3, false), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(weak_names(bar, {true, true}, 3, true), (std::set<std::string>{"x", "y"}));
}

TEST(LiftPolynomial, GeneratorsAndMonomials) {
  auto pf = load("embedded_linear_component.txt");
  auto g = check_positive_grading(*pf.grading);
  auto ctx = RestrictionContext::ones(pf.ring->field(), mask(pf.ring, {"z", "w"}));
  RingPtr small = restricted_ring(pf.ring, ctx.sigma);
  Polynomial f = lift_polynomial(parse_polynomial(small, "x^2"), pf.ideal(), ctx, g);
  EXPECT_EQ(f, parse_polynomial(pf.ring, "x^2"));
  EXPECT_THROW(lift_polynomial(parse_polynomial(small, "x"), pf.ideal(), ctx, g), InputError);
}

TEST(LiftPolynomial, RoundTripUnderConvention) {
  for (const auto& c : convention_cases()) {
    auto r = make_ring(c.names);
    Ideal i = make_ideal(r, c.gens);
    auto g = check_positive_grading(c.a);
    auto ctx = RestrictionContext::ones(r->field(), mask(r, c.sigma));
    Ideal bar = restrict_ideal(i, ctx);
    for (const auto& b : bar.basis().elements) {
      Polynomial f = lift_polynomial(b, i, ctx, g);
      EXPECT_TRUE(i.contains(f)) << c.gens;
      EXPECT_EQ(restrict_polynomial(f, ctx, bar.ring()), b);
      // one sigma monomial per term of b
      EXPECT_EQ(f.size(), b.size());
    }
    SuiteReport s = lifting_suite(i, ctx, g, 200, 7);
    EXPECT_GE(s.samples, 200);
    EXPECT_EQ(s.violations, 0) << c.gens << " " << (s.examples.empty() ? "" : s.examples[0]);
  }
}

TEST(NonLifting, ExamplesOnEmbeddedLinearComponent) {
  auto pf = load("embedded_linear_component.txt");
  auto g = check_positive_grading(*pf.grading);
  auto ctx = RestrictionContext::ones(pf.ring->field(), mask(pf.ring, {"z", "w"}));
  EXPECT_TRUE(check_nonlifting(parse_polynomial(pf.ring, "x"), pf.ideal(), ctx, g));
  EXPECT_TRUE(check_nonlifting(parse_polynomial(pf.ring, "x^2*z"), pf.ideal(), ctx, g));
  EXPECT_THROW(check_nonlifting(parse_polynomial(pf.ring, "x + 1"), pf.ideal(), ctx, g), InputError);
  // |sigma| = 2 exceeds the rank of the grading: z - w is outside I_sigma
  // but restricts to zero
  EXPECT_FALSE(check_convention(pf.ideal(), ctx, g).holds);
  EXPECT_FALSE(check_nonlifting(parse_polynomial(pf.ring, "z - w"), pf.ideal(), ctx, g));
}

TEST(NonLifting, RandomSuiteUnderConvention) {
  for (const auto& c : convention_cases()) {
    auto r = make_ring(c.names);
    Ideal i = make_ideal(r, c.gens);
    auto g = check_positive_grading(c.a);
    auto ctx = RestrictionContext::ones(r->field(), mask(r, c.sigma));
    ASSERT_TRUE(check_convention(i, ctx, g).holds) << c.gens;
    SuiteReport s = nonlifting_suite(i, ctx, g, 200, 11);
    EXPECT_EQ(s.samples, 200);
    EXPECT_EQ(s.violations, 0) << c.gens << " " << (s.examples.empty() ? "" : s.examples[0]);
  }
}

TEST(WitnessTransfer, EqualUnderConvention) {
  for (const auto& c : convention_cases()) {
    auto r = make_ring(c.names);
    Ideal i = make_ideal(r, c.gens);
    auto g = check_positive_grading(c.a);
    auto ctx = RestrictionContext::ones(r->field(), mask(r, c.sigma));
    TransferReport t = witness_transfer_check(i, ctx, g);
    EXPECT_TRUE(t.convention.holds);
    EXPECT_TRUE(t.equal()) << c.gens;
    EXPECT_FALSE(t.witnesses.empty());
    // the weak side agrees with the brute-force definition
    EXPECT_EQ(names_of(*t.restricted.ring(), t.weak_witnesses), brute_weak_witnesses(t.restricted, t.degree_bound));
  }
}

TEST(WitnessTransfer, ReportsDiscrepancyOutsideConvention) {
  auto pf = load("embedded_linear_component.txt");
  auto g = check_positive_grading(*pf.grading);
  auto ctx = RestrictionContext::ones(pf.ring->field(), mask(pf.ring, {"z", "w"}));
  TransferReport t = witness_transfer_check(pf.ideal(), ctx, g);
  EXPECT_FALSE(t.convention.holds);
  const Ring& small = *t.restricted.ring();
  EXPECT_EQ(names_of(small, t.witnesses), (std::set<std::string>{"1", "x"}));
  EXPECT_EQ(names_of(small, t.weak_witnesses), (std::set<std::string>{"x"}));
  EXPECT_FALSE(t.equal());
}

TEST(WitnessTransfer, EmptyComplementIsTrivial) {
  auto r = make_ring({"x", "y"});
  auto ctx = RestrictionContext::ones(r->field(), {true, true});
  TransferReport t = witness_transfer_check(make_ideal(r, "x - y"), ctx, standard_grading(2));
  EXPECT_TRUE(t.equal());
  ASSERT_EQ(t.witnesses.size(), 1u);
  EXPECT_TRUE(t.witnesses[0].is_one());
}

TEST(TorusZero, VanishesOnTheLatticeIdeal) {
  auto r = make_ring({"a", "b", "c"});
  const Field& k = r->field();
  LatticeCharacter chi(k, 3, {{1, -2, 1}, {0, 1, -1}}, {k.from_int(-1), k.from_int(3)});
  auto nu = torus_zero(chi);
  Ideal i = lattice_ideal(r, chi);
  for (const auto& b : i.basis().elements)
    EXPECT_TRUE(substitute(b, {true, true, true}, nu, sub_ring(r, {})).is_zero()) << b.to_string();
}

TEST(ToralPrimaryComponent, MinimalPrimesOfEmbeddedLinearComponent) {
  auto pf = load("embedded_linear_component.txt");
  auto g = check_positive_grading(*pf.grading);
  const auto& r = pf.ring;
  auto sigma = mask(r, {"z", "w"});
  const Field& k = r->field();
  // P = <z + w, x>: chi(1, -1) = -1
  LatticeCharacter plus(k, 2, {{1, -1}}, {k.from_int(-1)});
  auto c1 = toral_primary_component(pf.ideal(), plus, sigma, g);
  EXPECT_TRUE(ideal_equal(c1.component, make_ideal(r, "z + w, x")));
  EXPECT_TRUE(c1.saturated_part.contains(parse_polynomial(r, "x")));
  LatticeCharacter minus(k, 2, {{1, -1}}, {k.one()});
  auto c2 = toral_primary_component(pf.ideal(), minus, sigma, g);
  EXPECT_TRUE(ideal_equal(c2.component, make_ideal(r, "z - w, x^2")));
  auto c3 = toral_primary_component(pf.ideal(), minus, sigma, g, make_ideal(r, "x^2"));
  EXPECT_TRUE(ideal_equal(c3.component, make_ideal(r, "z - w, x^2")));
}

TEST(ToralPrimaryComponent, PrimeToralIdealIsItsOwnComponent) {
  auto pf = load("toral_and_andean_pair.txt");
  auto g = check_positive_grading(*pf.grading);
  Ideal p = make_ideal(pf.ring, "z - w, x*w - y");
  auto info = primary_component_info(p);
  auto c = toral_primary_component(p, info.chi, info.sigma, g);
  EXPECT_TRUE(ideal_equal(c.component, p));
}

TEST(ToralPrimaryComponent, RejectsAndeanAndEmbeddedPrimes) {
  auto pf = load("toral_and_andean_pair.txt");
  auto g = check_positive_grading(*pf.grading);
  auto andean = primary_component_info(make_ideal(pf.ring, "x, y"));
  EXPECT_THROW(toral_primary_component(pf.ideal(), andean.chi, andean.sigma, g), InputError);

  auto tc = load("twisted_cubic_cell.txt");
  auto g2 = check_positive_grading(*tc.grading);
  auto d = primary_decomposition(tc.ideal(), g2);
  for (const auto& c : d.components)
    if (*c.toral && !c.minimal)
      EXPECT_THROW(toral_primary_component(tc.ideal(), c.chi, c.sigma, g2), InputError);
}

TEST(ToralPrimaryComponent, AgreesWithPrimaryDecompositionAtMinimalPrimes) {
  for (const char* name : {"embedded_linear_component.txt", "toral_and_andean_pair.txt",
                           "two_variable_three_components.txt"}) {
    auto pf = load(name);
    auto g = check_positive_grading(*pf.grading);
    auto d = primary_decomposition(pf.ideal(), g);
    int checked = 0;
    for (const auto& c : d.components) {
      if (!c.minimal || !*c.toral) continue;
      auto t = toral_primary_component(pf.ideal(), c.chi, c.sigma, g);
      EXPECT_TRUE(ideal_equal(t.component, c.ideal)) << name << ": " << t.component.to_string();
      ++checked;
    }
    EXPECT_GT(checked, 0) << name;
  }
}
