#include "binomeso/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace binomeso;

namespace {

Scalar rat(const Field& f, long num, long den = 1) { return f.from_rational(mpq_class(num, den)); }

// brute-force inverse in GF(p): the x with a*x = 1 mod p
long brute_inverse(long a, long p) {
  for (long x = 0; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return -1;
}

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<mpq_class> c;
  for (int i = 0; i < f.degree(); ++i) c.emplace_back(d(rng), std::abs(d(rng)) + 1);
  Scalar s = f.zero();
  Scalar z = f.spec().kind == FieldKind::cyclotomic ? f.generator() : f.one();
  Scalar zp = f.one();
  for (const auto& q : c) {
    s = f.add(s, f.mul(f.from_rational(q), zp));
    zp = f.mul(zp, z);
  }
  return s;
}

} // namespace

TEST(Scalars, RationalProduct) {
  Field q(FieldSpec::rationals());
  EXPECT_EQ(q.mul(rat(q, 2, 3), rat(q, 3, 4)), rat(q, 1, 2));
}

TEST(Scalars, PrimeFieldDivisionMatchesBruteForce) {
  Field f(FieldSpec::prime(5));
  long expected = (3 * brute_inverse(4, 5)) % 5;
  EXPECT_EQ(f.div(f.from_int(3), f.from_int(4)), f.from_int(expected));
  EXPECT_EQ(expected, 2);
}

TEST(Scalars, CyclotomicFourSquaresToMinusOne) {
  Field f(FieldSpec::cyclotomic(4));
  Scalar z = f.generator();
  EXPECT_EQ(f.mul(z, z), f.from_int(-1));
}

TEST(Scalars, CyclotomicOneAndTwoAreRationals) {
  EXPECT_EQ(Field(FieldSpec::cyclotomic(1)).spec(), FieldSpec::rationals());
  EXPECT_EQ(Field(FieldSpec::cyclotomic(2)).spec(), FieldSpec::rationals());
  EXPECT_EQ(Field(FieldSpec::cyclotomic(2)).degree(), 1);
}

TEST(Scalars, DivisionByZeroThrows) {
  Field q;
  EXPECT_THROW(q.inv(q.zero()), Error);
  Field c(FieldSpec::cyclotomic(3));
  EXPECT_THROW(c.inv(c.zero()), Error);
}

TEST(Scalars, CompositeModulusRejected) { EXPECT_THROW(FieldSpec::prime(6), InputError); }

TEST(Scalars, FieldAxiomsRandomized) {
  std::mt19937 rng(7);
  for (FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime(101), FieldSpec::cyclotomic(3),
                         FieldSpec::cyclotomic(12)}) {
    Field f(spec);
    for (int k = 0; k < 1000; ++k) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      if (!a.is_zero()) EXPECT_TRUE(f.is_one(f.mul(a, f.inv(a))));
    }
  }
}

TEST(Scalars, RootsOfUnity) {
  Field q;
  auto two = q.nth_roots(q.one(), 2);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_THROW(q.nth_roots(q.one(), 3), MissingRootsError);
  try {
    q.nth_roots(q.one(), 3);
  } catch (const MissingRootsError& e) {
    EXPECT_EQ(e.required_order(), 3);
  }
  Field c3(FieldSpec::cyclotomic(3));
  auto three = c3.nth_roots(c3.one(), 3);
  ASSERT_EQ(three.size(), 3u);
  for (const auto& r : three) EXPECT_TRUE(c3.is_one(c3.pow(r, 3)));
}

TEST(Monomials, LcmGcdProduct) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(0, 6);
  for (int k = 0; k < 200; ++k) {
    Monomial u(4), v(4);
    for (int i = 0; i < 4; ++i) {
      u[i] = d(rng);
      v[i] = d(rng);
    }
    EXPECT_EQ(u.lcm(v) * u.gcd(v), u * v);
    EXPECT_TRUE(u.divides(u.lcm(v)));
    EXPECT_TRUE(u.gcd(v).divides(v));
    if (u.divides(v) && v.divides(u)) EXPECT_EQ(u, v);
  }
}

TEST(Polynomials, BinomialityAndSupport) {
  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(parse_polynomial(r, "x^2 - y^2").is_binomial());
  EXPECT_TRUE(Polynomial(r).is_binomial());
  EXPECT_EQ(parse_polynomial(r, "x^2*y - x*y^2").support().size(), 2u);
  auto c = parse_polynomial(r, "5").support();
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.begin()->is_one());

  auto r4 = make_ring({"x1", "x2", "x3", "x4"});
  auto h = parse_polynomial(r4, "x1*x4 - x2*x4 + x1 - x2");
  EXPECT_FALSE(h.is_binomial());
  EXPECT_EQ(h.support().size(), 4u);
}

TEST(Polynomials, ArithmeticMatchesNaiveOracle) {
  // oracle: dense coefficient table on exponents up to 10 in two variables
  auto r = make_ring({"x", "y"});
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> e(0, 5), c(-4, 4);
  using Dense = std::vector<std::vector<long>>;
  auto random_pair = [&](Dense& d) {
    d.assign(11, std::vector<long>(11, 0));
    std::vector<Term> terms;
    for (int k = 0; k < 4; ++k) {
      int a = e(rng), b = e(rng);
      if (a + b > 5) continue;
      long v = c(rng);
      d[a][b] += v;
      terms.push_back({Monomial(std::vector<int32_t>{a, b}), r->field().from_int(v)});
    }
    return Polynomial(r, terms);
  };
  for (int k = 0; k < 200; ++k) {
    Dense da, db;
    Polynomial a = random_pair(da), b = random_pair(db);
    Dense sum(11, std::vector<long>(11, 0)), prod = sum;
    for (int i = 0; i < 11; ++i)
      for (int j = 0; j < 11; ++j) {
        sum[i][j] = da[i][j] + db[i][j];
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q) prod[i][j] += da[p][q] * db[i - p][j - q];
      }
    Polynomial s = a + b, m = a * b;
    for (int i = 0; i < 11; ++i)
      for (int j = 0; j < 11; ++j) {
        Monomial mono(std::vector<int32_t>{i, j});
        EXPECT_EQ(s.coefficient(mono), r->field().from_int(sum[i][j]));
        EXPECT_EQ(m.coefficient(mono), r->field().from_int(prod[i][j]));
      }
    for (const auto& t : m.terms()) EXPECT_FALSE(t.coeff.is_zero());
  }
}

TEST(Parsing, ProblemFiles) {
  auto p = parse_problem("ring x y over QQ\nideal: x^2 - y^2, x^2*y - x*y^2\n");
  EXPECT_EQ(p.ring->nvars(), 2u);
  EXPECT_EQ(p.generators.size(), 2u);
  auto q = parse_problem("ring x4 over QQ\nideal: x4^2 - 1\n");
  EXPECT_EQ(q.ring->nvars(), 1u);
  auto z = parse_problem("ring x y over GF(7)\nideal:\n");
  EXPECT_TRUE(z.generators.empty());
  EXPECT_TRUE(z.ideal().is_zero());
}

TEST(Parsing, ErrorsCarryPositions) {
  try {
    parse_problem("ring x y over QQ\nideal: x^2 - q\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("undeclared"), std::string::npos);
  }
  EXPECT_THROW(parse_problem("ideal: x\n"), InputError);
  EXPECT_THROW(parse_problem("ring x over RR\n"), InputError);
  EXPECT_THROW(parse_problem("ring x y over QQ\ngrading: [[1,1,1]]\nideal: x\n"), InputError);
}

TEST(Parsing, PrintParseRoundTrip) {
  for (std::string text : {"ring a b c over QQ(zeta_6)\ngrading: [[1, 1, 1], [0, 1, 2]]\n"
                           "ideal: a*c - zeta*b^2, 3/4*a - c, -zeta^2*a^3 + 2\n",
                           "ring x y over GF(13)\nideal: x^2 - 5*y^2, x*y\n",
                           "ring u v over QQ\nideal: u^3 - 2/3*v^3, -u\n"}) {
    ProblemFile p = parse_problem(text);
    ProblemFile back = parse_problem(print_problem(p));
    EXPECT_EQ(*p.ring, *back.ring);
    EXPECT_EQ(p.grading, back.grading);
    ASSERT_EQ(p.generators.size(), back.generators.size());
    for (std::size_t i = 0; i < p.generators.size(); ++i) EXPECT_EQ(p.generators[i], back.generators[i]);
  }
}
