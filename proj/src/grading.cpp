#include "binomeso/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace binomeso {

namespace {

struct Constraint {
  std::vector<mpq_class> c; // c . h >= b
  mpq_class b;
  bool operator==(const Constraint&) const = default;
};

mpq_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return mpq_class(r);
}

/// Picks a value in [lo, hi], preferring 0 and then small integers.
mpq_class choose(const std::optional<mpq_class>& lo, const std::optional<mpq_class>& hi) {
  if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
  if (lo) {
    mpq_class c = ceil_q(*lo);
    if (!hi || c <= *hi) return c;
    return (*lo + *hi) / 2;
  }
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
  return mpq_class(f);
}

} // namespace

std::optional<std::vector<mpq_class>> positivity_certificate(const IntMatrix& a) {
  const std::size_t d = a.size(), n = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<Constraint>> stages;
  std::vector<Constraint> cur;
  for (std::size_t j = 0; j < n; ++j) {
    Constraint k;
    for (std::size_t i = 0; i < d; ++i) k.c.emplace_back(a[i][j]);
    k.b = 1;
    cur.push_back(std::move(k));
  }
  // eliminate h_{d-1}, ..., h_0 in turn
  for (std::size_t v = d; v-- > 0;) {
    stages.push_back(cur);
    std::vector<Constraint> next, pos, neg;
    for (auto& k : cur) {
      if (k.c[v] > 0) pos.push_back(k);
      else if (k.c[v] < 0) neg.push_back(k);
      else next.push_back(k);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Constraint k;
        mpq_class s = p.c[v], t = -q.c[v];
        for (std::size_t i = 0; i < d; ++i) k.c.push_back(t * p.c[i] + s * q.c[i]);
        k.b = t * p.b + s * q.b;
        mpq_class scale = t * s;
        for (auto& x : k.c) x /= scale;
        k.b /= scale;
        if (std::find(next.begin(), next.end(), k) == next.end()) next.push_back(std::move(k));
      }
    cur = std::move(next);
  }
  for (const auto& k : cur)
    if (k.b > 0) return std::nullopt; // 0 >= b fails
  std::vector<mpq_class> h(d, 0);
  for (std::size_t v = 0; v < d; ++v) {
    const auto& cons = stages[d - 1 - v];
    std::optional<mpq_class> lo, hi;
    for (const auto& k : cons) {
      if (k.c[v] == 0) continue;
      mpq_class rest = k.b;
      for (std::size_t i = 0; i < v; ++i) rest -= k.c[i] * h[i];
      mpq_class bound = rest / k.c[v];
      if (k.c[v] > 0) lo = lo ? std::max(*lo, bound) : bound;
      else hi = hi ? std::min(*hi, bound) : bound;
    }
    h[v] = choose(lo, hi);
  }
  return h;
}

mpq_class GradingMatrix::weight_of(const DegreeVector& beta) const {
  // weights = s * hA for a fixed positive scale s; recover s from column 0
  mpq_class ha0 = 0;
  for (std::size_t i = 0; i < rows(); ++i) ha0 += h[i] * a[i][0];
  mpq_class s = mpq_class(weights[0]) / ha0;
  mpq_class w = 0;
  for (std::size_t i = 0; i < rows(); ++i) w += h[i] * beta[i];
  return w * s;
}

ZMatrix columns(const IntMatrix& a, const std::vector<bool>& sigma) {
  ZMatrix out;
  for (const auto& row : a) {
    ZVector r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (sigma[j]) r.emplace_back(row[j]);
    out.push_back(std::move(r));
  }
  return out;
}

long matrix_rank(const ZMatrix& m) {
  if (m.empty() || m[0].empty()) return 0;
  return static_cast<long>(smith_normal_form(m).rank());
}

GradingMatrix check_positive_grading(const IntMatrix& a) {
  if (a.empty() || a[0].empty()) throw InputError("empty grading matrix");
  const std::size_t n = a[0].size();
  for (const auto& r : a)
    if (r.size() != n) throw InputError("grading rows differ in length");
  SmithDecomposition s = smith_normal_form(to_zmatrix(a));
  if (s.rank() != a.size()) throw InputError("grading matrix is not of full row rank");
  for (const auto& d : s.divisors)
    if (d != 1) throw InputError("grading columns do not span Z^d as a lattice");
  auto h = positivity_certificate(a);
  if (!h) throw InputError("grading is not positive: no functional is positive on every column");
  GradingMatrix g;
  g.a = a;
  g.h = *h;
  std::vector<mpq_class> ha(n, 0);
  mpz_class den = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) ha[j] += g.h[i] * a[i][j];
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ha[j].get_den_mpz_t());
  }
  mpz_class common = 0;
  std::vector<mpz_class> w;
  for (auto& x : ha) {
    mpz_class v = mpz_class(x * den);
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), v.get_mpz_t());
    w.push_back(v);
  }
  for (auto& v : w) g.weights.push_back(mpz_class(v / common).get_si());
  return g;
}

GradingMatrix standard_grading(std::size_t n) { return check_positive_grading({std::vector<long>(n, 1)}); }

DegreeVector degree(const Monomial& m, const IntMatrix& a) {
  DegreeVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += a[i][j] * m[j];
  return out;
}

bool is_homogeneous(const Polynomial& p, const IntMatrix& a) {
  if (p.is_zero()) return true;
  DegreeVector d = degree(p.leading().mono, a);
  for (const auto& t : p.terms())
    if (degree(t.mono, a) != d) return false;
  return true;
}

bool is_homogeneous(const Ideal& ideal, const IntMatrix& a) {
  for (const auto& g : ideal.basis().elements)
    if (!is_homogeneous(g, a)) return false;
  return true;
}

std::vector<Monomial> monomials_of_degree(const GradingMatrix& g, const DegreeVector& beta, long cap) {
  const std::size_t n = g.cols(), d = g.rows();
  if (beta.size() != d) throw Error("degree vector of the wrong length");
  mpq_class wq = g.weight_of(beta);
  std::vector<Monomial> out;
  if (wq < 0 || wq.get_den() != 1) return out;
  long budget = mpz_class(wq.get_num()).get_si();
  Monomial u(n);
  long visited = 0;
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
    if (++visited > cap)
      throw CapabilityError("Hilbert function enumeration exceeded " + std::to_string(cap) + " candidates");
    if (j == n) {
      if (left == 0 && degree(u, g.a) == beta) out.push_back(u);
      return;
    }
    if (j == n - 1) {
      if (left % g.weights[j] != 0) return;
      u[j] = static_cast<int32_t>(left / g.weights[j]);
      rec(j + 1, 0);
      u[j] = 0;
      return;
    }
    for (long k = 0; k * g.weights[j] <= left; ++k) {
      u[j] = static_cast<int32_t>(k);
      rec(j + 1, left - k * g.weights[j]);
    }
    u[j] = 0;
  };
  rec(0, budget);
  return out;
}

long monomial_weight(const GradingMatrix& g, const Monomial& u) {
  long w = 0;
  for (std::size_t i = 0; i < u.size(); ++i) w += g.weights[i] * u[i];
  return w;
}

std::vector<Monomial> monomials_up_to_weight(const GradingMatrix& g, const std::vector<bool>& vars,
                                             long budget) {
  const std::size_t n = g.cols();
  std::vector<Monomial> out;
  Monomial u(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long left) {
    if (j == n) {
      out.push_back(u);
      return;
    }
    if (!vars[j]) {
      rec(j + 1, left);
      return;
    }
    for (long k = 0; k * g.weights[j] <= left; ++k) {
      u[j] = static_cast<int32_t>(k);
      rec(j + 1, left - k * g.weights[j]);
    }
    u[j] = 0;
  };
  if (budget >= 0) rec(0, budget);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    long wa = monomial_weight(g, a), wb = monomial_weight(g, b);
    if (wa != wb) return wa < wb;
    return grevlex_compare(a, b) < 0;
  });
  return out;
}

long hilbert_function(const Ideal& ideal, const GradingMatrix& g, const DegreeVector& beta, long cap) {
  const auto leads = ideal.basis().leading_monomials();
  long count = 0;
  for (const auto& m : monomials_of_degree(g, beta, cap))
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
  return count;
}

ToralReport toral_classify(const Ideal& ideal, const std::vector<bool>& sigma, const GradingMatrix& g) {
  ToralReport r;
  r.sigma = sigma;
  r.lattice = lattice_of_cellular(ideal, sigma);
  ZMatrix as = columns(g.a, sigma);
  const std::size_t s = static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), true));
  r.kernel = s == 0 ? IntLattice(0) : kernel_lattice(as);
  r.rank_a_sigma = s == 0 ? 0 : matrix_rank(as);
  r.dimension = dimension(ideal);
  bool lattice_test = saturate_lattice(r.lattice.lattice()) == r.kernel;
  bool dimension_test = r.dimension == r.rank_a_sigma;
  if (lattice_test != dimension_test)
    throw Error("toral tests disagree (lattice: " + std::string(lattice_test ? "toral" : "Andean") +
                ", dimension: " + std::string(dimension_test ? "toral" : "Andean") +
                "); is the input mesoprimary and homogeneous?");
  r.toral = lattice_test;
  return r;
}

ToralReport toral_classify(const Ideal& ideal, const GradingMatrix& g) {
  CellularData d = cellular_data(ideal);
  if (!d.cellular()) throw Error("toral classification needs a cellular ideal");
  return toral_classify(ideal, d.sigma, g);
}

bool toral_prime_test(const IntLattice& saturated, const std::vector<bool>& sigma, const GradingMatrix& g) {
  const std::size_t s = static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), true));
  IntLattice k = s == 0 ? IntLattice(0) : kernel_lattice(columns(g.a, sigma));
  return saturate_lattice(saturated) == k;
}

std::optional<AndeanCertificate> andean_certificate(const Ideal& ideal, const ToralReport& report,
                                                    const GradingMatrix& g, int steps) {
  if (report.toral) return std::nullopt;
  IntLattice sat = saturate_lattice(report.lattice.lattice());
  const auto vars = indices_of(report.sigma);
  for (const auto& k : report.kernel.basis()) {
    if (sat.contains(k)) continue;
    AndeanCertificate c;
    c.direction = k;
    Monomial plus(g.cols());
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (k[i] > 0) plus[vars[i]] = static_cast<int32_t>(k[i].get_si());
    c.step = degree(plus, g.a);
    for (int t = 1; t <= steps; ++t) {
      DegreeVector beta = c.step;
      for (auto& x : beta) x *= t;
      c.values.push_back(hilbert_function(ideal, g, beta));
    }
    return c;
  }
  return std::nullopt;
}

} // namespace binomeso
