#include "binomeso/reduction.hpp"

#include "binomeso/primdec.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace binomeso {

namespace {

std::vector<bool> complement(const std::vector<bool>& s) {
  std::vector<bool> c(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) c[i] = !s[i];
  return c;
}

Monomial project(const Monomial& u, const std::vector<bool>& keep) {
  std::vector<int32_t> e;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (keep[i]) e.push_back(u[i]);
  return Monomial(std::move(e));
}

Monomial embed(const Monomial& u, const std::vector<bool>& slots) {
  Monomial r(slots.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i]) r[i] = u[k++];
  return r;
}

std::vector<Scalar> full_values(const RestrictionContext& ctx) {
  std::vector<Scalar> v(ctx.sigma.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ctx.sigma.size(); ++i)
    if (ctx.sigma[i]) v[i] = ctx.nu.at(k++);
  return v;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t n, const std::vector<bool>& vars, long d) {
  return monomials_up_to_weight(standard_grading(n), vars, d);
}

bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; }

// exact solution x of A_sigma x = rhs, if it is integral
std::optional<std::vector<long>> solve_integral(const ZMatrix& a, const ZVector& rhs) {
  const std::size_t d = a.size();
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = a[i][j];
    m[i][d] = rhs[i];
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) throw InputError("A_sigma is singular");
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<long> x(d);
  for (std::size_t i = 0; i < d; ++i) {
    mpq_class v = m[i][d] / m[i][i];
    if (v.get_den() != 1) return std::nullopt;
    x[i] = v.get_num().get_si();
  }
  return x;
}

// the state shared by lifts and the non-lifting checks
struct Lifter {
  Ideal ideal;
  RestrictionContext ctx;
  GradingMatrix grading;
  RingPtr small;
  Ideal restricted;
  Ideal saturated;
  TermNormalizer nf_sat;
  TermNormalizer nf_bar;
  ZMatrix a_sigma;
  std::vector<bool> others;
  Monomial sigma_product;

  Lifter(const Ideal& i, const RestrictionContext& c, const GradingMatrix& g)
      : ideal(i), ctx(c), grading(g), small(restricted_ring(i.ring(), c.sigma)),
        restricted(restrict_ideal(i, c)), saturated(saturate_variables(i, c.sigma)), nf_sat(saturated),
        nf_bar(restricted), a_sigma(columns(g.a, c.sigma)), others(complement(c.sigma)),
        sigma_product(variables_monomial(c.sigma.size(), c.sigma)) {
    if (!ctx.all_ones(i.ring()->field())) throw InputError("lifting needs the sigma variables set to 1");
  }

  bool invertible() const {
    const long s = static_cast<long>(std::count(ctx.sigma.begin(), ctx.sigma.end(), true));
    return s == static_cast<long>(grading.rows()) && matrix_rank(a_sigma) == s;
  }

  // x_sigma^k p for the least k putting it into I
  Polynomial into_ideal(Polynomial p) const {
    for (int k = 0; k < 256; ++k) {
      if (ideal.contains(p)) return p;
      p = p.times(sigma_product, p.field().one());
    }
    throw Error("no power of the sigma variables moves " + p.to_string() + " into the ideal");
  }

  // sigma monomials a, b with x^{u_i} x^a and x^{u_0} x^b congruent modulo
  // I_sigma: from A(u_i + a) = A(u_0 + b) when A_sigma is invertible, else
  // by a search over small shifts
  std::optional<std::pair<Monomial, Monomial>> align(const Monomial& ui, const Monomial& u0) {
    const std::size_t n = ui.size();
    const auto sigma_vars = indices_of(ctx.sigma);
    auto congruent = [&](const Monomial& a, const Monomial& b) {
      const auto& ri = nf_sat(ui * a);
      const auto& r0 = nf_sat(u0 * b);
      return ri && r0 && ri->mono == r0->mono;
    };
    if (invertible()) {
      ZVector rhs(grading.rows());
      for (std::size_t r = 0; r < grading.rows(); ++r) {
        long v = 0;
        for (std::size_t j = 0; j < n; ++j) v += grading.a[r][j] * (u0[j] - ui[j]);
        rhs[r] = v;
      }
      auto d = solve_integral(a_sigma, rhs);
      if (!d) return std::nullopt;
      Monomial a(n), b(n);
      for (std::size_t s = 0; s < sigma_vars.size(); ++s) {
        if ((*d)[s] > 0) a[sigma_vars[s]] = static_cast<int32_t>((*d)[s]);
        else b[sigma_vars[s]] = static_cast<int32_t>(-(*d)[s]);
      }
      if (!congruent(a, b)) return std::nullopt;
      return std::pair{a, b};
    }
    const auto shifts = monomials_up_to_degree(n, ctx.sigma, 4);
    for (const auto& a : shifts)
      for (const auto& b : shifts)
        if (a.coprime(b) && congruent(a, b)) return std::pair{a, b};
    return std::nullopt;
  }

  Polynomial lift(const Polynomial& g) {
    const RingPtr& ring = ideal.ring();
    const Field& k = ring->field();
    if (!restricted.contains(g)) throw InputError(g.to_string() + " is not in the restricted ideal");
    struct Member {
      Scalar lambda;
      Monomial u; // in the full ring
      Scalar c;
    };
    std::map<Monomial, std::vector<Member>> classes;
    std::vector<Term> out;
    for (const auto& t : g.terms()) {
      Monomial u = embed(t.mono, others);
      const auto& r = nf_bar(t.mono);
      if (!r) {
        Polynomial lifted = into_ideal(Polynomial::monomial(ring, u));
        out.push_back({lifted.terms()[0].mono, t.coeff});
        continue;
      }
      classes[r->mono].push_back({t.coeff, u, r->coeff});
    }
    for (auto& [key, members] : classes) {
      if (members.size() < 2) throw Error("a lone class term cannot cancel in the restricted ideal");
      const Member& base = members[0];
      std::vector<Polynomial> binomials;
      std::vector<Monomial> base_shift;
      for (std::size_t i = 1; i < members.size(); ++i) {
        auto shifts = align(members[i].u, base.u);
        if (!shifts) throw Error("restricted binomial does not lift to the saturation");
        const auto& [ai, bi] = *shifts;
        const auto& ri = nf_sat(members[i].u * ai);
        const auto& r0 = nf_sat(base.u * bi);
        if (!ri || !r0 || ri->mono != r0->mono)
          throw Error("restricted binomial does not lift to the saturation");
        Scalar kappa = k.div(ri->coeff, r0->coeff);
        if (kappa != k.div(members[i].c, base.c)) throw Error("lifted binomial has the wrong coefficient");
        Polynomial b = into_ideal(Polynomial::binomial(ring, members[i].u * ai, kappa, base.u * bi));
        binomials.push_back(b);
        // the base term of b is the one whose sigma^c part is base.u
        for (const auto& t : b.terms())
          if (project(t.mono, others) == project(base.u, others)) base_shift.push_back(t.mono / base.u);
      }
      Monomial l(ring->nvars());
      for (const auto& s : base_shift) l = l.lcm(s);
      Polynomial f(ring);
      for (std::size_t i = 1; i < members.size(); ++i)
        f = f + binomials[i - 1].times(l / base_shift[i - 1], members[i].lambda);
      for (const auto& t : f.terms()) out.push_back(t);
    }
    Polynomial f(ring, out);
    if (!ideal.contains(f) || restrict_polynomial(f, ctx, small) != g)
      throw Error("lift of " + g.to_string() + " failed verification");
    return f;
  }

  bool nonlifting_holds(const Polynomial& p) {
    if (saturated.contains(p)) return true;
    return !restricted.contains(restrict_polynomial(p, ctx, small));
  }
};

} // namespace

RestrictionContext RestrictionContext::ones(const Field& field, std::vector<bool> sigma) {
  RestrictionContext c;
  c.nu.assign(static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), true)), field.one());
  c.sigma = std::move(sigma);
  return c;
}

bool RestrictionContext::all_ones(const Field& field) const {
  return std::all_of(nu.begin(), nu.end(), [&](const Scalar& s) { return field.is_one(s); });
}

RingPtr restricted_ring(const RingPtr& ring, const std::vector<bool>& sigma) {
  return sub_ring(ring, indices_of(complement(sigma)));
}

void check_context(const Ideal& ideal, const RestrictionContext& ctx) {
  const RingPtr& ring = ideal.ring();
  if (ctx.sigma.size() != ring->nvars()) throw InputError("sigma does not match the ring");
  if (ctx.nu.size() != static_cast<std::size_t>(std::count(ctx.sigma.begin(), ctx.sigma.end(), true)))
    throw InputError("nu needs one value per sigma variable");
  for (const auto& v : ctx.nu)
    if (v.is_zero()) throw InputError("nu must lie in the torus");
  Ideal part = eliminate(ideal, complement(ctx.sigma));
  const auto values = full_values(ctx);
  RingPtr small = restricted_ring(ring, ctx.sigma);
  for (const auto& b : part.basis().elements) {
    Polynomial v = substitute(b, ctx.sigma, values, small);
    if (!v.is_zero())
      throw InputError("nu is not a zero of I cap k[sigma]: " + b.to_string() + " evaluates to " +
                       ring->field().to_string(v.terms()[0].coeff) +
                       ", so setting the sigma variables to nu introduces constants");
  }
}

ConventionReport check_convention(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& g) {
  ConventionReport r;
  const long d = static_cast<long>(g.rows());
  const long s = static_cast<long>(std::count(ctx.sigma.begin(), ctx.sigma.end(), true));
  if (s != d) {
    r.holds = false;
    r.reason = "|sigma| = " + std::to_string(s) + " but the grading has rank " + std::to_string(d);
  } else if (matrix_rank(columns(g.a, ctx.sigma)) != d) {
    r.holds = false;
    r.reason = "A_sigma is singular";
  } else if (!ctx.all_ones(ideal.ring()->field())) {
    r.holds = false;
    r.reason = "nu is not the all-ones vector";
  } else {
    try {
      check_context(ideal, ctx);
    } catch (const InputError& e) {
      r.holds = false;
      r.reason = e.what();
    }
  }
  return r;
}

Polynomial restrict_polynomial(const Polynomial& p, const RestrictionContext& ctx, const RingPtr& target) {
  return substitute(p, ctx.sigma, full_values(ctx), target);
}

Ideal restrict_ideal(const Ideal& ideal, const RestrictionContext& ctx) {
  check_context(ideal, ctx);
  RingPtr small = restricted_ring(ideal.ring(), ctx.sigma);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    Polynomial r = restrict_polynomial(g, ctx, small);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  return Ideal(small, gens).canonical();
}

std::vector<WitnessRecord> weak_monomial_witnesses(const Ideal& ideal, const std::vector<bool>& tau,
                                                   long degree_bound) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const std::vector<bool> sigma = complement(tau);
  const std::vector<bool> all(n, true);
  TermNormalizer nf(saturate_variables(ideal, sigma));
  TermNormalizer nf_i(ideal);

  std::vector<Monomial> qs;
  std::set<Monomial> seen;
  for (const auto& q : monomials_up_to_degree(n, all, degree_bound + 1)) {
    const auto& r = nf(q);
    if (r && !seen.insert(r->mono).second) continue;
    qs.push_back(q);
  }
  const auto ms = monomials_up_to_degree(n, sigma, degree_bound);

  std::map<Monomial, WitnessRecord> classes;
  std::vector<Monomial> order;
  for (const auto& w : monomials_up_to_degree(n, tau, degree_bound)) {
    const auto& key = nf_i(w);
    if (!key) continue;
    for (const auto& m : ms) {
      auto certs = witness_certificates(nf, sigma, m * w, qs);
      if (!certs) continue;
      auto [it, fresh] = classes.try_emplace(key->mono);
      if (fresh) {
        order.push_back(key->mono);
        it->second.sigma = sigma;
        it->second.w = w;
        it->second.m = m;
        it->second.certificates = *certs;
      }
      it->second.merged.push_back(w);
      break;
    }
  }
  std::vector<WitnessRecord> out;
  for (const auto& key : order) {
    WitnessRecord rec = classes.at(key);
    std::sort(rec.merged.begin(), rec.merged.end(), grevlex_less);
    for (const auto& w : rec.merged) {
      for (const auto& v : ms) {
        const Monomial target = v * w;
        auto space = monomials_up_to_degree(n, all, std::max(degree_bound + 1, target.degree()));
        if (auto p = essential_certificate(nf, sigma, space, target)) {
          rec.essential = true;
          rec.essential_poly = *p;
          rec.v = v;
          break;
        }
      }
      if (rec.essential) break;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

Polynomial lift_polynomial(const Polynomial& g, const Ideal& ideal, const RestrictionContext& ctx,
                           const GradingMatrix& grading) {
  Lifter l(ideal, ctx, grading);
  return l.lift(g);
}

bool check_nonlifting(const Polynomial& p, const Ideal& ideal, const RestrictionContext& ctx,
                      const GradingMatrix& grading) {
  if (!is_homogeneous(p, grading.a)) throw InputError(p.to_string() + " is not homogeneous");
  Lifter l(ideal, ctx, grading);
  return l.nonlifting_holds(p);
}

namespace {

Scalar random_coefficient(const Field& k, std::mt19937& rng) {
  static const long choices[] = {1, -1, 2, -2, 3};
  return k.from_int(choices[rng() % 5]);
}

void note(SuiteReport& r, const std::string& what) {
  ++r.violations;
  if (r.examples.size() < 5) r.examples.push_back(what);
}

} // namespace

SuiteReport lifting_suite(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& grading,
                          long samples, unsigned seed) {
  Lifter l(ideal, ctx, grading);
  const Field& k = ideal.ring()->field();
  SuiteReport r;
  std::mt19937 rng(seed);
  const auto& basis = l.restricted.basis().elements;
  const std::size_t m = l.small->nvars();
  const auto shifts = monomials_up_to_degree(m, std::vector<bool>(m, true), 2);
  auto run = [&](const Polynomial& g) {
    ++r.samples;
    try {
      Polynomial f = l.lift(g);
      if (!ideal.contains(f) || restrict_polynomial(f, ctx, l.small) != g) note(r, g.to_string());
    } catch (const Error& e) {
      note(r, g.to_string() + ": " + e.what());
    }
  };
  for (const auto& b : basis) run(b);
  if (basis.empty()) return r;
  while (r.samples < samples) {
    const auto& b1 = basis[rng() % basis.size()];
    const auto& b2 = basis[rng() % basis.size()];
    Polynomial g = b1.times(shifts[rng() % shifts.size()], random_coefficient(k, rng)) +
                   b2.times(shifts[rng() % shifts.size()], random_coefficient(k, rng));
    if (!g.is_zero()) run(g);
  }
  return r;
}

SuiteReport nonlifting_suite(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& grading,
                             long samples, unsigned seed, long max_degree) {
  Lifter l(ideal, ctx, grading);
  const RingPtr& ring = ideal.ring();
  const Field& k = ring->field();
  const std::size_t n = ring->nvars();
  SuiteReport r;
  std::mt19937 rng(seed);
  const auto monos = monomials_up_to_degree(n, std::vector<bool>(n, true), max_degree);
  const auto small_shifts = monomials_up_to_degree(n, std::vector<bool>(n, true), 2);
  const auto& sat_basis = l.saturated.basis().elements;
  std::map<DegreeVector, std::vector<Monomial>> fibers;
  auto fiber = [&](const Monomial& y) -> const std::vector<Monomial>& {
    DegreeVector beta = degree(y, grading.a);
    auto it = fibers.find(beta);
    if (it == fibers.end()) it = fibers.emplace(beta, monomials_of_degree(grading, beta)).first;
    return it->second;
  };
  auto pick = [&](const auto& v) { return v[rng() % v.size()]; };
  while (r.samples < samples) {
    Polynomial p(ring);
    const long kind = r.samples % 3;
    if (kind == 0) {
      const auto& f = fiber(pick(monos));
      p = Polynomial::binomial(ring, pick(f), random_coefficient(k, rng), pick(f));
    } else if (kind == 1 || sat_basis.empty()) {
      const auto& f = fiber(pick(monos));
      for (int t = 0; t < 3; ++t) p = p + Polynomial::term(ring, pick(f), random_coefficient(k, rng));
    } else {
      Polynomial h = pick(sat_basis).times(pick(small_shifts), random_coefficient(k, rng));
      if (rng() % 2) h = h + Polynomial::term(ring, pick(fiber(h.leading().mono)), random_coefficient(k, rng));
      p = h;
    }
    if (p.is_zero()) continue;
    ++r.samples;
    if (!l.nonlifting_holds(p)) note(r, p.to_string());
  }
  return r;
}

TransferReport witness_transfer_check(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& g,
                                      std::optional<long> degree_bound) {
  TransferReport rep;
  rep.convention = check_convention(ideal, ctx, g);
  check_context(ideal, ctx);
  const std::vector<bool> others = complement(ctx.sigma);
  const std::size_t m = static_cast<std::size_t>(std::count(others.begin(), others.end(), true));
  if (m == 0) {
    // no sigma^c variables: the witness 1 on both sides
    rep.witnesses = rep.weak_witnesses = rep.essential = rep.weak_essential = {Monomial(0)};
    rep.witnesses_equal = rep.essential_equal = true;
    return rep;
  }
  rep.restricted = restrict_ideal(ideal, ctx);
  long d = 0;
  for (const auto& b : rep.restricted.basis().elements) d = std::max(d, b.total_degree());
  rep.degree_bound = degree_bound ? *degree_bound : d + 1;

  long top = 1;
  for (std::size_t j = 0; j < others.size(); ++j)
    if (others[j]) top = std::max(top, g.weights[j]);
  auto collect = [&](const std::vector<WitnessRecord>& recs, bool essential_only, bool full_ring) {
    std::set<Monomial> s;
    for (const auto& rec : recs) {
      if (essential_only && !rec.essential) continue;
      for (const auto& w : rec.merged) {
        Monomial u = full_ring ? project(w, others) : w;
        if (u.degree() <= rep.degree_bound) s.insert(u);
      }
    }
    std::vector<Monomial> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), grevlex_less);
    return v;
  };
  const long weight_bound = rep.degree_bound * top;
  auto graded = monomial_witnesses(ideal, ctx.sigma, g, weight_bound);
  auto graded_essential = essential_witnesses(ideal, ctx.sigma, g, weight_bound);
  rep.witnesses = collect(graded, false, true);
  rep.essential = collect(graded_essential, true, true);
  auto weak = weak_monomial_witnesses(rep.restricted, std::vector<bool>(m, true), rep.degree_bound);
  rep.weak_witnesses = collect(weak, false, false);
  rep.weak_essential = collect(weak, true, false);
  rep.witnesses_equal = rep.witnesses == rep.weak_witnesses;
  rep.essential_equal = rep.essential == rep.weak_essential;
  return rep;
}

std::vector<Scalar> torus_zero(const LatticeCharacter& chi) {
  const Field& k = chi.field();
  const IntLattice& l = chi.lattice();
  const std::size_t s = l.ambient();
  std::vector<Scalar> nu(s, k.one());
  if (l.rank() == 0) return nu;
  SmithDecomposition snf = smith_normal_form(l.basis());
  for (const auto& d : snf.divisors)
    if (d != 1) throw InputError("torus_zero needs a saturated lattice");
  // Z^s has basis e'_k = rows of V^{-1}; the first rank(L) of them span L
  std::vector<Scalar> psi(s, k.one());
  for (std::size_t r = 0; r < l.rank(); ++r) psi[r] = chi(snf.v_inverse[r]);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t r = 0; r < l.rank(); ++r)
      nu[i] = k.mul(nu[i], k.pow(psi[r], snf.v[i][r].get_si()));
  for (const auto& b : l.basis()) {
    Scalar v = k.one();
    for (std::size_t i = 0; i < s; ++i) v = k.mul(v, k.pow(nu[i], b[i].get_si()));
    if (v != chi(b)) throw Error("torus_zero produced an inconsistent point");
  }
  return nu;
}

ToralComponentReport toral_primary_component(const Ideal& ideal, const LatticeCharacter& chi,
                                             const std::vector<bool>& sigma, const GradingMatrix& g,
                                             const std::optional<Ideal>& k, long degree_bound) {
  const RingPtr& ring = ideal.ring();
  if (ring->field().characteristic() != 0) throw CapabilityError("toral components need characteristic zero");
  if (!toral_prime_test(chi.lattice(), sigma, g)) throw InputError("the prime is Andean");
  const std::vector<bool> others = complement(sigma);
  const auto vars = indices_of(sigma);
  Ideal ichi = lattice_ideal(ring, chi, vars);
  std::vector<Polynomial> m_gens;
  for (std::size_t j = 0; j < others.size(); ++j)
    if (others[j]) m_gens.push_back(Polynomial::variable(ring, j));
  Ideal prime = ideal_sum(ichi, m_gens);
  if (!prime.contains(ideal)) throw InputError("the prime does not contain the ideal");

  ToralComponentReport rep;
  Ideal base = ideal_sum(ideal, ichi);
  if (k) base = ideal_sum(base, *k);
  rep.saturated_part = saturate_variables(base, sigma).canonical();
  if (!k) {
    // P is minimal over I iff (I : P^inf) is not contained in P
    std::vector<Ideal> sats;
    for (const auto& f : prime.basis().elements) sats.push_back(saturation(ideal, f));
    if (prime.contains(intersect_all(ring, sats)))
      throw InputError("the prime is not minimal over the ideal; supply K");
  }

  rep.context.sigma = sigma;
  rep.context.nu = torus_zero(chi);
  std::vector<Polynomial> mbar;
  if (!m_gens.empty()) {
    rep.restricted = restrict_ideal(ideal, rep.context);
    const std::size_t m = rep.restricted.ring()->nvars();
    std::vector<Ideal> parts;
    for (const auto& w : weak_monomial_witnesses(rep.restricted, std::vector<bool>(m, true), degree_bound)) {
      if (!w.essential) continue;
      std::vector<Polynomial> gens;
      for (const auto& u : monomial_part_M(rep.restricted, std::vector<bool>(m, false), w.w))
        gens.push_back(Polynomial::monomial(rep.restricted.ring(), u));
      parts.push_back(Ideal(rep.restricted.ring(), gens));
    }
    if (parts.empty()) throw Error("the restricted ideal has no essential weak witness");
    Ideal mono = intersect_all(rep.restricted.ring(), parts);
    for (const auto& b : mono.basis().elements) {
      if (!b.is_monomial()) throw Error("intersection of monomial parts is not monomial");
      rep.monomial_part.push_back(embed(b.leading().mono, others));
      mbar.push_back(Polynomial::monomial(ring, rep.monomial_part.back()));
    }
  }
  rep.component = ideal_sum(rep.saturated_part, mbar).canonical();

  PrimaryComponent pc;
  pc.ideal = rep.component;
  pc.prime = prime;
  std::vector<Polynomial> samples = m_gens;
  for (const auto& b : ideal.basis().elements) samples.push_back(b);
  for (std::size_t i = 0; i < ring->nvars(); ++i) samples.push_back(Polynomial::variable(ring, i));
  if (rep.component.is_unit() || !primary_spot_check(pc, samples))
    throw Error("component " + rep.component.to_string() + " failed the primary spot-check");
  return rep;
}

} // namespace binomeso
