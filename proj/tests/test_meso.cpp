#include "binomeso/io.hpp"
#include "binomeso/meso.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>
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

bool same_ideals(const std::vector<Ideal>& got, const std::vector<Ideal>& want) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& g : got) {
    bool hit = false;
    for (std::size_t j = 0; j < want.size() && !hit; ++j)
      if (!used[j] && ideal_equal(g, want[j])) used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

std::vector<Ideal> ideals_of(const MesoDecomposition& d) {
  std::vector<Ideal> out;
  for (const auto& c : d.components) out.push_back(c.ideal);
  return out;
}

Polynomial mono(const RingPtr& r, const Monomial& u) { return Polynomial::monomial(r, u); }

// every certificate of the record re-checked with full polynomial normal forms
void expect_certificates_hold(const Ideal& ideal, const WitnessRecord& w, const GradingMatrix& g) {
  const RingPtr& r = ideal.ring();
  Ideal j = saturate_variables(ideal, w.sigma);
  EXPECT_FALSE(j.contains(mono(r, w.w)));
  Monomial mw = w.m * w.w;
  std::size_t outside = 0;
  for (std::size_t i = 0; i < w.sigma.size(); ++i) outside += !w.sigma[i];
  ASSERT_EQ(w.certificates.size(), outside);
  for (const auto& c : w.certificates) {
    Polynomial b = Polynomial::binomial(r, mw, c.lambda, c.q);
    EXPECT_TRUE(j.contains(b * Polynomial::variable(r, c.var)));
    EXPECT_FALSE(j.contains(b));
    EXPECT_EQ(degree(mw, g.a), degree(c.q, g.a));
    if (c.q != mw) {
      EXPECT_FALSE(c.q.divides(mw));
      EXPECT_FALSE(mw.divides(c.q));
    }
  }
  if (w.essential) {
    ASSERT_TRUE(w.essential_poly.has_value());
    const Polynomial& p = *w.essential_poly;
    EXPECT_FALSE(j.contains(p));
    EXPECT_TRUE(std::any_of(w.merged.begin(), w.merged.end(),
                            [&](const Monomial& u) { return !p.coefficient(w.v * u).is_zero(); }));
    EXPECT_TRUE(is_homogeneous(p, g.a));
    for (std::size_t i = 0; i < w.sigma.size(); ++i)
      if (!w.sigma[i]) EXPECT_TRUE(j.contains(p * Polynomial::variable(r, i)));
  }
}

} // namespace

TEST(Meso, TermNormalizerAgreesWithPolynomialNormalForm) {
  auto pf = load("twisted_cubic_cell.txt");
  Ideal i = pf.ideal();
  TermNormalizer nf(i);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  for (int t = 0; t < 300; ++t) {
    Monomial u(6);
    for (int k = 0; k < 6; ++k) u[k] = e(rng);
    Polynomial want = i.normal_form(mono(pf.ring, u));
    const auto& got = nf(u);
    if (want.is_zero()) {
      EXPECT_FALSE(got.has_value());
    } else {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(Polynomial::term(pf.ring, got->mono, got->coeff), want);
    }
  }
}

TEST(Meso, MesoprimeAtMonomial) {
  auto pf = load("cube_roots_not_mesoprimary.txt");
  Ideal i = pf.ideal();
  auto x = mask(pf.ring, {"x"});
  auto& r = pf.ring;
  EXPECT_TRUE(ideal_equal(mesoprime_at(i, x, parse_monomial(r, "y")), make_ideal(r, "x - 1, y")));
  EXPECT_TRUE(ideal_equal(mesoprime_at(i, x, parse_monomial(r, "1")), make_ideal(r, "x^3 - 1, y")));
  EXPECT_THROW(mesoprime_at(i, x, parse_monomial(r, "y^3")), InputError);
  // sigma = [n] and m = 1: the saturation itself, no monomial generators
  auto r2 = make_ring({"x", "y"});
  Ideal l = make_ideal(r2, "x^2*y - x*y^2, x^2 - y^2");
  EXPECT_TRUE(ideal_equal(mesoprime_at(l, {true, true}, Monomial{0, 0}), make_ideal(r2, "x - y")));
}

TEST(Meso, MesoprimarityTest) {
  auto cube = load("cube_roots_not_mesoprimary.txt");
  auto rep = is_mesoprimary(cube.ideal());
  EXPECT_FALSE(rep.mesoprimary);
  ASSERT_TRUE(rep.violator.has_value());
  EXPECT_EQ(*rep.violator, parse_monomial(cube.ring, "y"));

  auto art = load("mesoprimary_with_artinian_part.txt");
  EXPECT_TRUE(is_mesoprimary(art.ideal()).mesoprimary);

  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(is_mesoprimary(make_ideal(r, "x - y")).mesoprimary);
  auto nc = is_mesoprimary(make_ideal(r, "x^2*y - x*y^2, x^2 - y^2"));
  EXPECT_FALSE(nc.mesoprimary);
  EXPECT_TRUE(nc.failure_variable.has_value());
}

TEST(Meso, WitnessesOfTwoVariableIdeal) {
  auto pf = load("two_variable_three_components.txt");
  Ideal i = pf.ideal();
  auto g = check_positive_grading(*pf.grading);
  auto ws = monomial_witnesses(i, {false, false}, g, 7);
  std::set<std::set<Monomial>> classes;
  for (const auto& w : ws) {
    classes.insert({w.merged.begin(), w.merged.end()});
    expect_certificates_hold(i, w, g);
  }
  auto& r = pf.ring;
  std::set<std::set<Monomial>> want{{parse_monomial(r, "x*y")},
                                    {parse_monomial(r, "x^2"), parse_monomial(r, "y^2")}};
  EXPECT_EQ(classes, want);
  auto es = essential_witnesses(i, {false, false}, g, 7);
  EXPECT_EQ(es.size(), 2u);
  for (const auto& w : es) expect_certificates_hold(i, w, g);
  // sigma = [n]: the witness 1, essential
  auto top = essential_witnesses(i, {true, true}, g, 3);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_TRUE(top[0].w.is_one());
}

TEST(Meso, MonomialPartMatchesIrreducibleIntersection) {
  // sigma empty: M is the intersection of the irreducible monomial ideals
  // with socle x^m' over the class of x^m, so its complement is the set of
  // divisors of class members
  auto pf = load("two_variable_three_components.txt");
  Ideal i = pf.ideal();
  auto& r = pf.ring;
  TermNormalizer nf(i);
  for (const char* ms : {"x*y", "x^2", "y^2"}) {
    Monomial m = parse_monomial(r, ms);
    auto gens = monomial_part_M(i, {false, false}, m);
    std::vector<Monomial> cls;
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        Monomial u{a, b};
        if (nf(u) && nf(u)->mono == nf(m)->mono) cls.push_back(u);
      }
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b) {
        Monomial u{a, b};
        bool in_m = std::any_of(gens.begin(), gens.end(), [&](const Monomial& gm) { return gm.divides(u); });
        bool divides_class = std::any_of(cls.begin(), cls.end(), [&](const Monomial& c) { return u.divides(c); });
        EXPECT_EQ(in_m, !divides_class) << ms << " at " << a << "," << b;
      }
  }
}

TEST(Meso, MonomialPartAgainstDirectSaturation) {
  auto pf = load("twisted_cubic_cell.txt");
  Ideal i = pf.ideal();
  auto g = check_positive_grading(*pf.grading);
  auto sigma = mask(pf.ring, {"a", "b", "c", "d"});
  auto& r = pf.ring;
  Monomial x = parse_monomial(r, "x");
  auto gens = monomial_part_M(i, sigma, x, &g, 7);
  std::set<Monomial> got(gens.begin(), gens.end());
  EXPECT_TRUE(got.count(parse_monomial(r, "x^2")));
  EXPECT_TRUE(got.count(parse_monomial(r, "y")));
  // oracle: the defining condition for every x^a y^b in a box
  Ideal j = saturate_variables(i, sigma);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      Monomial u = parse_monomial(r, "1");
      u[4] = a;
      u[5] = b;
      bool def = !saturate_variables(ideal_sum(j, {mono(r, u)}), sigma).contains(mono(r, x));
      bool in_m = std::any_of(gens.begin(), gens.end(), [&](const Monomial& gm) { return gm.divides(u); });
      EXPECT_EQ(def, in_m) << a << "," << b;
    }
}

TEST(Meso, EssentialCertificateAgainstExhaustiveSearch) {
  // over GF(3), enumerate every polynomial on a degree fiber
  auto r = make_ring({"x", "y", "z"}, FieldSpec::prime(3));
  Ideal i = make_ideal(r, "x^2 - y^2, x^2*y - x*y^2, x*z - y*z, z^2");
  TermNormalizer nf(i);
  const Field& k = r->field();
  auto g = standard_grading(3);
  for (long d = 0; d <= 2; ++d) {
    auto space = monomials_of_degree(g, {d});
    for (const auto& target : space) {
      bool brute = false;
      std::vector<int> digits(space.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (brute) return;
        if (pos == space.size()) {
          if (digits[static_cast<std::size_t>(std::find(space.begin(), space.end(), target) - space.begin())] == 0)
            return;
          std::vector<Term> terms;
          for (std::size_t c = 0; c < space.size(); ++c)
            if (digits[c]) terms.push_back({space[c], k.from_int(digits[c])});
          Polynomial p(r, terms);
          if (i.contains(p)) return;
          for (std::size_t v = 0; v < 3; ++v)
            if (!i.contains(p * Polynomial::variable(r, v))) return;
          brute = true;
          return;
        }
        for (int c = 0; c < 3; ++c) {
          digits[pos] = c;
          rec(pos + 1);
        }
        digits[pos] = 0;
      };
      rec(0);
      auto p = essential_certificate(nf, {false, false, false}, space, target);
      EXPECT_EQ(p.has_value(), brute) << "degree " << d;
    }
  }
}

TEST(Meso, TwoVariableDecomposition) {
  auto pf = load("two_variable_three_components.txt");
  auto g = check_positive_grading(*pf.grading);
  auto d = mesoprimary_decomposition(pf.ideal(), g);
  auto& r = pf.ring;
  EXPECT_TRUE(same_ideals(ideals_of(d), {make_ideal(r, "x - y"), make_ideal(r, "x^2, y^2"),
                                         make_ideal(r, "x^2 - y^2, x^3, x*y, y^3")}));
  EXPECT_TRUE(d.intersection_verified);
  EXPECT_TRUE(d.all_mesoprimary);
  for (const auto& c : d.components) expect_certificates_hold(pf.ideal(), c.witness, g);
  // coprincipal components by explicit cogenerator
  EXPECT_TRUE(ideal_equal(coprincipal_component(pf.ideal(), {false, false}, parse_monomial(r, "x*y")).ideal,
                          make_ideal(r, "x^2, y^2")));
  EXPECT_TRUE(ideal_equal(coprincipal_component(pf.ideal(), {false, false}, parse_monomial(r, "x^2")).ideal,
                          make_ideal(r, "x^2 - y^2, x^3, x*y, y^3")));
}

TEST(Meso, EmbeddedLinearComponent) {
  auto pf = load("embedded_linear_component.txt");
  auto g = check_positive_grading(*pf.grading);
  auto d = mesoprimary_decomposition(pf.ideal(), g);
  auto& r = pf.ring;
  EXPECT_TRUE(same_ideals(ideals_of(d), {make_ideal(r, "z^2 - w^2, x"), make_ideal(r, "z - w, x^2")}));
  auto sigma = mask(r, {"z", "w"});
  EXPECT_TRUE(ideal_equal(coprincipal_component(pf.ideal(), sigma, parse_monomial(r, "1")).ideal,
                          make_ideal(r, "z^2 - w^2, x")));
  EXPECT_TRUE(ideal_equal(coprincipal_component(pf.ideal(), sigma, parse_monomial(r, "x")).ideal,
                          make_ideal(r, "z - w, x^2")));
}

TEST(Meso, TwistedCubicCell) {
  auto pf = load("twisted_cubic_cell.txt");
  auto g = check_positive_grading(*pf.grading);
  auto& r = pf.ring;
  auto sigma = mask(r, {"a", "b", "c", "d"});
  auto es = essential_witnesses(pf.ideal(), sigma, g, default_witness_bound(pf.ideal(), sigma, g));
  std::set<Monomial> ws;
  for (const auto& w : es) {
    ws.insert(w.w);
    expect_certificates_hold(pf.ideal(), w, g);
  }
  EXPECT_EQ(ws, (std::set<Monomial>{parse_monomial(r, "1"), parse_monomial(r, "x"), parse_monomial(r, "y")}));
  auto d = mesoprimary_decomposition(pf.ideal(), g);
  EXPECT_TRUE(same_ideals(
      ideals_of(d), {make_ideal(r, "a*d - b*c, x, y"),
                     make_ideal(r, "a*d - b*c, a*c - b^2, b*d - c^2, x^2, y"),
                     make_ideal(r, "a*d - b*c, a*c - b^2, b*d - c^2, x, y^2")}));
}

TEST(Meso, UngradedFallbackVerifies) {
  auto pf = load("nonbinomial_hull.txt");
  auto d = mesoprimary_decomposition(pf.ideal(), std::nullopt);
  EXPECT_FALSE(d.graded);
  EXPECT_TRUE(d.intersection_verified);
  EXPECT_TRUE(d.all_mesoprimary);
}

TEST(Meso, RejectsInhomogeneousInput) {
  auto r = make_ring({"x", "y"});
  EXPECT_THROW(mesoprimary_decomposition(make_ideal(r, "x^2 - y"), standard_grading(2)), InputError);
}
