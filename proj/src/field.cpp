#include "binomeso/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace binomeso {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(long p) {
  if (!is_prime(p)) throw InputError("GF(" + std::to_string(p) + "): modulus is not prime");
  return {FieldKind::prime_field, p};
}

FieldSpec FieldSpec::cyclotomic(long n) {
  if (n < 1) throw InputError("cyclotomic order must be positive");
  if (n <= 2) return rationals();
  return {FieldKind::cyclotomic, n};
}

std::string FieldSpec::to_string() const {
  switch (kind) {
  case FieldKind::rationals: return "QQ";
  case FieldKind::prime_field: return "GF(" + std::to_string(modulus) + ")";
  case FieldKind::cyclotomic: return "QQ(zeta_" + std::to_string(modulus) + ")";
  }
  return "?";
}

bool Scalar::operator<(const Scalar& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials, divisor monic
ZPoly zdiv(ZPoly num, const ZPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  ZPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class t = num[i];
    if (t == 0) continue;
    q[i - dn] = t;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
  }
  return q;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// remainder of a modulo b (b nonzero)
QPoly qmod(QPoly a, const QPoly& b, QPoly* quot = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (quot) quot->assign(a.size() > db ? a.size() - db : 0, 0);
  while (a.size() > db) {
    mpq_class t = a.back() / b.back();
    std::size_t shift = a.size() - 1 - db;
    if (quot) (*quot)[shift] = t;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= t * b[j];
    trim(a);
  }
  return a;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::vector<long> divisors(long m) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<long> prime_factors(long m) {
  std::vector<long> out;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) out.push_back(m);
  return out;
}

} // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
  // x^n - 1 divided by Phi_d for every proper divisor d
  ZPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d : divisors(n))
    if (d < n) num = zdiv(num, cyclotomic_polynomial(d));
  return num;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::cyclotomic && spec_.modulus <= 2) spec_ = FieldSpec::rationals();
  if (spec_.kind == FieldKind::prime_field && !is_prime(spec_.modulus))
    throw InputError("GF(" + std::to_string(spec_.modulus) + "): modulus is not prime");
  if (spec_.kind == FieldKind::cyclotomic) {
    for (const auto& c : cyclotomic_polynomial(spec_.modulus)) phi_.emplace_back(c);
  } else {
    phi_ = {mpq_class(0), mpq_class(1)};
  }
}

Scalar Field::make_prime(mpz_class v) const {
  mpz_class p(spec_.modulus);
  v %= p;
  if (v < 0) v += p;
  if (v == 0) return {};
  return Scalar({mpq_class(v)});
}

Scalar Field::from_rational(const mpq_class& value) const {
  mpq_class q = value;
  q.canonicalize();
  if (spec_.kind == FieldKind::prime_field) {
    mpz_class p(spec_.modulus);
    mpz_class den = q.get_den();
    if (den % p == 0) throw InputError("denominator divisible by the characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    return make_prime(q.get_num() * inv);
  }
  if (q == 0) return {};
  return Scalar({q});
}

Scalar Field::generator() const {
  if (spec_.kind == FieldKind::cyclotomic) return reduce({mpq_class(0), mpq_class(1)});
  return neg(one());
}

Scalar Field::reduce(std::vector<mpq_class> c) const {
  trim(c);
  if (spec_.kind == FieldKind::cyclotomic && c.size() >= phi_.size()) c = qmod(std::move(c), phi_);
  return Scalar(std::move(c));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (spec_.kind == FieldKind::prime_field)
    return make_prime(a.rational_value().get_num() + b.rational_value().get_num());
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpq_class> r(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  return Scalar(std::move(r));
}

Scalar Field::neg(const Scalar& a) const {
  if (spec_.kind == FieldKind::prime_field) return make_prime(-a.rational_value().get_num());
  std::vector<mpq_class> r = a.coeffs();
  for (auto& c : r) c = -c;
  return Scalar(std::move(r));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  switch (spec_.kind) {
  case FieldKind::prime_field:
    return make_prime(a.rational_value().get_num() * b.rational_value().get_num());
  case FieldKind::rationals: return Scalar({a.rational_value() * b.rational_value()});
  case FieldKind::cyclotomic: return reduce(qmul(a.coeffs(), b.coeffs()));
  }
  return {};
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw Error("division by zero");
  switch (spec_.kind) {
  case FieldKind::prime_field: {
    mpz_class p(spec_.modulus), r, v = a.rational_value().get_num();
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return make_prime(r);
  }
  case FieldKind::rationals: return Scalar({1 / a.rational_value()});
  case FieldKind::cyclotomic: {
    // extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible
    QPoly r0 = phi_, r1 = a.coeffs(), s0, s1 = {mpq_class(1)};
    while (r1.size() > 1) {
      QPoly q;
      QPoly r2 = qmod(r0, r1, &q);
      QPoly s2 = qsub(s0, qmul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    mpq_class g = r1.at(0);
    for (auto& c : s1) c /= g;
    return reduce(std::move(s1));
  }
  }
  return {};
}

Scalar Field::pow(const Scalar& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar result = one(), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

long Field::roots_of_unity_exponent() const {
  switch (spec_.kind) {
  case FieldKind::rationals: return 2;
  case FieldKind::prime_field: return spec_.modulus - 1;
  case FieldKind::cyclotomic: return spec_.modulus % 2 ? 2 * spec_.modulus : spec_.modulus;
  }
  return 1;
}

long Field::root_of_unity_order(const Scalar& a) const {
  if (a.is_zero()) return 0;
  const long m = roots_of_unity_exponent();
  if (!is_one(pow(a, m))) return 0;
  for (long d : divisors(m))
    if (is_one(pow(a, d))) return d;
  return 0;
}

Scalar Field::primitive_root(long k) const {
  const long m = roots_of_unity_exponent();
  if (k < 1 || m % k != 0)
    throw CapabilityError("no primitive " + std::to_string(k) + "-th root of unity in " +
                          spec_.to_string());
  switch (spec_.kind) {
  case FieldKind::rationals: return k == 1 ? one() : neg(one());
  case FieldKind::cyclotomic: {
    Scalar z = generator();
    if (m != spec_.modulus) z = neg(z); // -zeta has order 2N for odd N
    return pow(z, m / k);
  }
  case FieldKind::prime_field: {
    const auto factors = prime_factors(m);
    for (long g = 2; g < spec_.modulus || m == 1; ++g) {
      if (m == 1) return one();
      Scalar gs = from_int(g);
      bool generator = std::all_of(factors.begin(), factors.end(),
                                   [&](long q) { return !is_one(pow(gs, m / q)); });
      if (generator) return pow(gs, m / k);
    }
    return one();
  }
  }
  return one();
}

std::vector<Scalar> Field::nth_roots(const Scalar& c, long d) const {
  if (c.is_zero()) throw Error("nth_roots: zero has no place in a character");
  if (d == 1) return {c};
  std::vector<Scalar> out;
  if (spec_.kind == FieldKind::prime_field) {
    if (spec_.modulus > 20'000'000)
      throw CapabilityError("root extraction in " + spec_.to_string() + " is limited to p <= 2e7");
    for (long y = 1; y < spec_.modulus; ++y) {
      Scalar s = from_int(y);
      if (pow(s, d) == c) out.push_back(s);
    }
    return out;
  }
  const long order = root_of_unity_order(c);
  if (order > 0) {
    const long need = d * order;
    if (!has_primitive_root(need)) {
      const long base = spec_.kind == FieldKind::cyclotomic ? spec_.modulus : 1;
      const long n = std::lcm(base, need);
      throw MissingRootsError("extending the character needs a primitive " + std::to_string(need) +
                                  "-th root of unity; re-run over QQ(zeta_" + std::to_string(n) +
                                  ")",
                              n);
    }
    Scalar z = primitive_root(need), zk = one();
    for (long k = 0; k < need; ++k) {
      if (pow(zk, d) == c) out.push_back(zk);
      zk = mul(zk, z);
    }
    return out;
  }
  if (c.is_rational()) {
    mpq_class v = c.rational_value();
    const int sign = v < 0 ? -1 : 1;
    mpq_class a = abs(v);
    mpz_class num, den;
    const bool exact_num = mpz_root(num.get_mpz_t(), a.get_num_mpz_t(), d) != 0;
    const bool exact_den = mpz_root(den.get_mpz_t(), a.get_den_mpz_t(), d) != 0;
    if (exact_num && exact_den) {
      Scalar r = from_rational(mpq_class(num, den));
      for (const auto& u : nth_roots(from_int(sign), d)) out.push_back(mul(r, u));
      return out;
    }
  }
  throw CapabilityError("the character value " + to_string(c) + " has no " + std::to_string(d) +
                        "-th root in any supported field");
}

std::string Field::to_string(const Scalar& a) const {
  if (a.is_zero()) return "0";
  if (spec_.kind != FieldKind::cyclotomic) return a.rational_value().get_str();
  std::ostringstream os;
  bool first = true;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    first = false;
    mpq_class av = abs(v);
    if (i == 0) {
      os << av.get_str();
      continue;
    }
    if (av != 1) os << av.get_str() << "*";
    os << "zeta";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

} // namespace binomeso
