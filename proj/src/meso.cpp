#include "binomeso/meso.hpp"

#include "binomeso/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace binomeso {

namespace {

Monomial bump(const Monomial& u, std::size_t i) {
  Monomial r(u);
  ++r[i];
  return r;
}

std::vector<bool> complement(const std::vector<bool>& sigma) {
  std::vector<bool> c(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) c[i] = !sigma[i];
  return c;
}

bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; }

bool sigma_less(const std::vector<bool>& a, const std::vector<bool>& b) {
  auto ca = std::count(a.begin(), a.end(), true), cb = std::count(b.begin(), b.end(), true);
  if (ca != cb) return ca > cb;
  return a > b;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grevlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); }))
      out.push_back(g);
  return out;
}

// Same class modulo the ideal up to a nonzero scalar.
bool congruent(TermNormalizer& nf, const Monomial& a, const Monomial& b) {
  const auto& ta = nf(a);
  const auto& tb = nf(b);
  return ta && tb && ta->mono == tb->mono;
}

} // namespace

const std::optional<Term>& TermNormalizer::operator()(const Monomial& u) {
  auto it = cache_.find(u);
  if (it != cache_.end()) return it->second;
  // rewriting by binomial basis elements keeps a single term
  const GroebnerBasis& gb = ideal_.basis();
  const Field& k = ideal_.ring()->field();
  Monomial cur = u;
  Scalar coeff = k.one();
  std::optional<Term> t;
  for (bool done = false; !done;) {
    done = true;
    for (const auto& e : gb.ordered) {
      if (!e.front().mono.divides(cur)) continue;
      if (e.size() > 2) throw Error("normal form of a monomial needs a basis element with several terms");
      if (e.size() == 1) return cache_.emplace(u, std::nullopt).first->second;
      cur = cur / e[0].mono * e[1].mono;
      coeff = k.mul(coeff, k.neg(k.div(e[1].coeff, e[0].coeff)));
      done = false;
      break;
    }
  }
  t = Term{cur, coeff};
  return cache_.emplace(u, std::move(t)).first->second;
}

std::optional<std::vector<WitnessCertificate>> witness_certificates(
    TermNormalizer& nf, const std::vector<bool>& sigma, const Monomial& mw,
    const std::vector<Monomial>& q_candidates) {
  const Field& k = nf.ideal().ring()->field();
  const auto& base = nf(mw);
  if (!base) return std::nullopt;
  std::vector<WitnessCertificate> certs;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i]) continue;
    const auto& top = nf(bump(mw, i));
    if (!top) {
      if (k.characteristic() == 2) certs.push_back({i, bump(mw, i), k.one()});
      else certs.push_back({i, mw, k.from_int(-1)});
      continue;
    }
    std::optional<WitnessCertificate> found;
    for (const auto& q : q_candidates) {
      if (q == mw) continue;
      const auto& tq = nf(bump(q, i));
      if (!tq || tq->mono != top->mono) continue;
      Scalar lambda = k.div(top->coeff, tq->coeff);
      const auto& nq = nf(q);
      if (nq && nq->mono == base->mono && nq->coeff == k.div(base->coeff, lambda)) continue;
      found = WitnessCertificate{i, q, lambda};
      break;
    }
    if (!found) return std::nullopt;
    certs.push_back(*found);
  }
  return certs;
}

std::optional<Polynomial> essential_certificate(TermNormalizer& nf, const std::vector<bool>& sigma,
                                                const std::vector<Monomial>& space,
                                                const Monomial& target) {
  const RingPtr& ring = nf.ideal().ring();
  const Field& k = ring->field();
  auto tpos = std::find(space.begin(), space.end(), target);
  if (tpos == space.end()) return std::nullopt;
  const std::size_t t = static_cast<std::size_t>(tpos - space.begin());
  const std::size_t cols = space.size();

  // rows of the multiplication map p -> (NF(x_j p))_j and of p -> NF(p)
  auto build = [&](std::optional<std::size_t> var) {
    std::map<Monomial, std::size_t> row_of;
    FieldMatrix m;
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& r = nf(var ? bump(space[c], *var) : space[c]);
      if (!r) continue;
      auto [it, fresh] = row_of.emplace(r->mono, m.size());
      if (fresh) m.emplace_back(cols);
      m[it->second][c] = r->coeff;
    }
    return m;
  };
  FieldMatrix mult;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (sigma[j]) continue;
    auto part = build(j);
    for (auto& row : part) mult.push_back(std::move(row));
  }
  const FieldMatrix nfm = build(std::nullopt);
  auto kernel = field_kernel(k, mult, cols);

  auto outside = [&](const std::vector<Scalar>& v) {
    for (const auto& row : nfm) {
      Scalar s;
      for (std::size_t c = 0; c < cols; ++c)
        if (!row[c].is_zero() && !v[c].is_zero()) s = k.add(s, k.mul(row[c], v[c]));
      if (!s.is_zero()) return true;
    }
    return false;
  };
  const std::vector<Scalar>* hit = nullptr;
  const std::vector<Scalar>* out = nullptr;
  for (const auto& v : kernel) {
    if (!hit && !v[t].is_zero()) hit = &v;
    if (!out && outside(v)) out = &v;
  }
  if (!hit || !out) return std::nullopt;

  auto to_poly = [&](const std::vector<Scalar>& v) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < cols; ++c)
      if (!v[c].is_zero()) terms.push_back({space[c], v[c]});
    return Polynomial(ring, std::move(terms));
  };
  std::vector<std::vector<Scalar>> tries;
  tries.push_back(*hit);
  tries.push_back(*out);
  for (long c = 1; c <= 2; ++c) {
    std::vector<Scalar> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = k.add((*hit)[i], k.mul(k.from_int(c), (*out)[i]));
    tries.push_back(std::move(v));
  }
  for (const auto& v : tries)
    if (!v[t].is_zero() && outside(v)) return to_poly(v);
  return std::nullopt;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, const std::vector<bool>& vars, long cap) {
  const std::size_t n = ideal.ring()->nvars();
  const auto leads = ideal.basis().leading_monomials();
  auto standard = [&](const Monomial& u) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(u); });
  };
  std::vector<Monomial> out;
  Monomial one(n);
  if (!standard(one)) return out;
  std::set<Monomial> seen{one};
  std::deque<Monomial> queue{one};
  while (!queue.empty()) {
    Monomial u = queue.front();
    queue.pop_front();
    out.push_back(u);
    if (static_cast<long>(out.size()) > cap)
      throw CapabilityError("more than " + std::to_string(cap) + " standard monomials; a variable is not nilpotent");
    for (std::size_t i = 0; i < n; ++i) {
      if (!vars[i]) continue;
      Monomial v = bump(u, i);
      if (standard(v) && seen.insert(v).second) queue.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

Ideal lattice_part_at(const Ideal& ideal, const std::vector<bool>& sigma, const Monomial& m) {
  Ideal j = saturate_variables(ideal, sigma);
  Ideal q = quotient(j, Polynomial::monomial(ideal.ring(), m));
  return eliminate(q, complement(sigma));
}

Ideal mesoprime_at(const Ideal& ideal, const std::vector<bool>& sigma, const Monomial& m) {
  if (ideal.contains(Polynomial::monomial(ideal.ring(), m)))
    throw InputError("the monomial " + monomial_to_string(*ideal.ring(), m) + " lies in the ideal");
  std::vector<Polynomial> gens = lattice_part_at(ideal, sigma, m).basis().elements;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (!sigma[i]) gens.push_back(Polynomial::variable(ideal.ring(), i));
  return Ideal(ideal.ring(), gens).canonical();
}

MesoprimaryReport is_mesoprimary(const Ideal& ideal) {
  if (ideal.is_unit()) throw InputError("mesoprimarity of the unit ideal");
  MesoprimaryReport r;
  CellularData d = cellular_data(ideal);
  r.sigma = d.sigma;
  if (!d.cellular()) {
    r.failure_variable = d.failure_variable;
    return r;
  }
  const auto others = complement(d.sigma);
  Ideal part = eliminate(ideal, others);
  for (const auto& u : standard_monomials(ideal, others)) {
    if (u.is_one()) continue;
    Ideal q = eliminate(quotient(ideal, Polynomial::monomial(ideal.ring(), u)), others);
    if (!ideal_equal(q, part)) {
      r.violator = u;
      return r;
    }
  }
  r.mesoprimary = true;
  return r;
}

long default_witness_bound(const Ideal& ideal, const std::vector<bool>& sigma, const GradingMatrix& g,
                           const std::vector<long>& nilpotency_hint) {
  Ideal j = saturate_variables(ideal, sigma);
  long top = 0;
  for (const auto& e : j.basis().elements) top = std::max(top, monomial_weight(g, e.leading().mono));
  long extra = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i]) continue;
    long nil = nilpotency_order(j, i);
    if (nil == 0 && i < nilpotency_hint.size()) nil = nilpotency_hint[i];
    if (nil == 0) nil = std::max<long>(1, top);
    extra += nil * g.weights[i];
  }
  return top + extra;
}

namespace {

class FiberCache {
public:
  explicit FiberCache(const GradingMatrix& g) : g_(g) {}
  const std::vector<Monomial>& operator()(const Monomial& u) {
    DegreeVector beta = degree(u, g_.a);
    auto it = cache_.find(beta);
    if (it == cache_.end()) it = cache_.emplace(beta, monomials_of_degree(g_, beta)).first;
    return it->second;
  }

private:
  const GradingMatrix& g_;
  std::map<DegreeVector, std::vector<Monomial>> cache_;
};

// sigma^c monomials of weight at most `bound` outside J, with exponents
// below the nilpotency orders modulo J
std::vector<Monomial> witness_candidates(const Ideal& j, const std::vector<bool>& sigma, const GradingMatrix& g,
                                         long bound) {
  const auto others = complement(sigma);
  std::vector<long> cap(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i]) continue;
    cap[i] = nilpotency_order(j, i);
  }
  std::vector<Monomial> out;
  for (const auto& w : monomials_up_to_weight(g, others, bound)) {
    bool ok = true;
    for (std::size_t i = 0; i < sigma.size() && ok; ++i)
      if (cap[i] > 0 && w[i] >= cap[i]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

} // namespace

std::vector<WitnessRecord> monomial_witnesses(const Ideal& ideal, const std::vector<bool>& sigma,
                                              const GradingMatrix& g, long bound) {
  if (!is_homogeneous(ideal, g.a)) throw InputError("the ideal is not homogeneous for the grading");
  Ideal j = saturate_variables(ideal, sigma);
  std::vector<WitnessRecord> found;
  if (j.is_unit()) return found;
  TermNormalizer nf(j);
  FiberCache fibers(g);
  const auto ms = monomials_up_to_weight(g, sigma, bound);
  for (const auto& w : witness_candidates(j, sigma, g, bound)) {
    if (!nf(w)) continue;
    const long ww = monomial_weight(g, w);
    for (const auto& m : ms) {
      if (monomial_weight(g, m) + ww > bound) break;
      Monomial mw = m * w;
      auto certs = witness_certificates(nf, sigma, mw, fibers(mw));
      if (!certs) continue;
      WitnessRecord r;
      r.sigma = sigma;
      r.w = w;
      r.merged = {w};
      r.m = m;
      r.certificates = std::move(*certs);
      found.push_back(std::move(r));
      break;
    }
  }
  // classes modulo I
  TermNormalizer nfi(ideal);
  std::vector<WitnessRecord> classes;
  for (auto& r : found) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const WitnessRecord& c) { return congruent(nfi, c.w, r.w); });
    if (it == classes.end()) classes.push_back(std::move(r));
    else it->merged.push_back(r.w);
  }
  for (auto& c : classes) {
    std::sort(c.merged.begin(), c.merged.end(), grevlex_less);
    if (c.merged.front() != c.w) {
      // re-certify the representative
      Monomial rep = c.merged.front();
      for (const auto& m : ms) {
        Monomial mw = m * rep;
        auto certs = witness_certificates(nf, sigma, mw, fibers(mw));
        if (!certs) continue;
        c.w = rep;
        c.m = m;
        c.certificates = std::move(*certs);
        break;
      }
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const WitnessRecord& a, const WitnessRecord& b) { return grevlex_less(a.w, b.w); });
  return classes;
}

std::vector<WitnessRecord> essential_witnesses(const Ideal& ideal, const std::vector<bool>& sigma,
                                               const GradingMatrix& g, long bound) {
  auto witnesses = monomial_witnesses(ideal, sigma, g, bound);
  std::vector<WitnessRecord> out;
  if (witnesses.empty()) return out;
  TermNormalizer nf(saturate_variables(ideal, sigma));
  FiberCache fibers(g);
  const auto vs = monomials_up_to_weight(g, sigma, bound);
  for (auto& r : witnesses) {
    for (const auto& member : r.merged) {
      const long ww = monomial_weight(g, member);
      for (const auto& v : vs) {
        if (monomial_weight(g, v) + ww > bound) break;
        Monomial target = v * member;
        auto p = essential_certificate(nf, sigma, fibers(target), target);
        if (!p) continue;
        r.essential = true;
        r.essential_poly = std::move(*p);
        r.v = v;
        break;
      }
      if (r.essential) break;
    }
    if (r.essential) out.push_back(std::move(r));
  }
  return out;
}

std::vector<Monomial> monomial_part_M(const Ideal& ideal, const std::vector<bool>& sigma,
                                      const Monomial& m, const GradingMatrix* g, long bound, long cap) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  Ideal j = saturate_variables(ideal, sigma);
  const Polynomial xm = Polynomial::monomial(ring, m);
  if (j.contains(xm))
    throw InputError("the monomial " + monomial_to_string(*ring, m) + " dies in the saturation");
  auto project = [&](const Monomial& y) {
    Monomial r(y);
    for (std::size_t i = 0; i < n; ++i)
      if (sigma[i]) r[i] = 0;
    return r;
  };
  // sigma^c parts of monomials congruent to x^m x^s: x^m lies in the
  // saturation of J + <x^u> whenever u divides one of them
  std::vector<Monomial> tops;
  if (g) {
    TermNormalizer nf(j);
    FiberCache fibers(*g);
    const long wm = monomial_weight(*g, m);
    for (const auto& s : monomials_up_to_weight(*g, sigma, std::max(0L, bound - wm))) {
      Monomial ms = m * s;
      const auto& r = nf(ms);
      if (!r) continue;
      for (const auto& y : fibers(ms)) {
        const auto& ry = nf(y);
        if (ry && ry->mono == r->mono) tops.push_back(project(y));
      }
    }
  }
  auto below_top = [&](const Monomial& u) {
    return std::any_of(tops.begin(), tops.end(), [&](const Monomial& t) { return u.divides(t); });
  };
  auto survives = [&](const Monomial& u) {
    if (below_top(u)) return false;
    Ideal s = saturate_variables(ideal_sum(j, {Polynomial::monomial(ring, u)}), sigma);
    return !s.contains(xm);
  };
  // the complement of M among sigma^c monomials is closed under division
  Monomial one(n);
  std::set<Monomial> inside{one}, outside;
  std::deque<Monomial> queue{one};
  while (!queue.empty()) {
    Monomial u = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma[i]) continue;
      Monomial v = bump(u, i);
      if (inside.count(v) || outside.count(v)) continue;
      if (std::any_of(outside.begin(), outside.end(), [&](const Monomial& o) { return o.divides(v); })) {
        outside.insert(v);
        continue;
      }
      if (survives(v)) {
        outside.insert(v);
      } else {
        inside.insert(v);
        if (g && monomial_weight(*g, v) > bound + monomial_weight(*g, m))
          throw BoundError("x^m lies in the saturation of J + <x^u> beyond the degree bound; the "
                           "cogenerator does not make the variables outside sigma nilpotent",
                           bound);
        if (static_cast<long>(inside.size()) > cap)
          throw CapabilityError("monomial part search exceeded " + std::to_string(cap) + " monomials");
        queue.push_back(v);
      }
    }
  }
  return minimalize({outside.begin(), outside.end()});
}

MesoComponent coprincipal_component(const Ideal& ideal, const std::vector<bool>& sigma,
                                    const Monomial& m, const GradingMatrix* g, long bound) {
  const RingPtr& ring = ideal.ring();
  MesoComponent c;
  c.sigma = sigma;
  c.witness.sigma = sigma;
  c.witness.w = m;
  c.witness.merged = {m};
  c.witness.m = Monomial(ring->nvars());
  c.witness.v = Monomial(ring->nvars());
  Ideal lat = lattice_part_at(ideal, sigma, m);
  std::vector<Polynomial> mp = lat.basis().elements;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (!sigma[i]) mp.push_back(Polynomial::variable(ring, i));
  c.mesoprime = Ideal(ring, mp).canonical();
  c.monomial_part = monomial_part_M(ideal, sigma, m, g, bound);
  Ideal base = saturate_variables(ideal_sum(ideal, lat), sigma);
  std::vector<Polynomial> extra;
  for (const auto& u : c.monomial_part) extra.push_back(Polynomial::monomial(ring, u));
  c.ideal = ideal_sum(base, extra).canonical();
  if (!is_binomial_ideal(c.ideal).binomial) throw Error("coprincipal component is not binomial");
  return c;
}

std::string sigma_to_string(const Ring& ring, const std::vector<bool>& sigma) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!sigma[i]) continue;
    if (!first) s += ",";
    s += ring.name(i);
    first = false;
  }
  return s + "}";
}

namespace {

void merge_duplicates(std::vector<MesoComponent>& comps) {
  std::vector<MesoComponent> out;
  for (auto& c : comps) {
    auto it = std::find_if(out.begin(), out.end(), [&](const MesoComponent& o) {
      return o.sigma == c.sigma && ideal_equal(o.ideal, c.ideal);
    });
    if (it == out.end()) {
      out.push_back(std::move(c));
      continue;
    }
    for (const auto& u : c.witness.merged) it->witness.merged.push_back(u);
    std::sort(it->witness.merged.begin(), it->witness.merged.end(), grevlex_less);
  }
  comps = std::move(out);
}

// Drops components containing the intersection of the others.
void prune(const Ideal& ideal, std::vector<MesoComponent>& comps) {
  for (std::size_t i = comps.size(); i-- > 0;) {
    std::vector<Ideal> rest;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) rest.push_back(comps[j].ideal);
    if (rest.empty()) continue;
    if (comps[i].ideal.contains(intersect_all(ideal.ring(), rest))) comps.erase(comps.begin() + i);
  }
}

} // namespace

MesoDecomposition mesoprimary_decomposition(const Ideal& ideal, const std::optional<GradingMatrix>& g,
                                            std::optional<long> bound) {
  if (ideal.is_unit()) throw InputError("mesoprimary decomposition of the unit ideal");
  if (!is_binomial_ideal(ideal).binomial) throw InputError("the ideal is not binomial");
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  MesoDecomposition out;
  auto leaves = cellular_decomposition(ideal);

  if (g) {
    if (!is_homogeneous(ideal, g->a)) throw InputError("the ideal is not homogeneous for the grading");
    std::vector<std::vector<bool>> sigmas{std::vector<bool>(n, true)};
    for (const auto& l : leaves)
      if (std::find(sigmas.begin(), sigmas.end(), l.sigma) == sigmas.end()) sigmas.push_back(l.sigma);
    std::sort(sigmas.begin(), sigmas.end(), sigma_less);
    for (const auto& sigma : sigmas) {
      if (saturate_variables(ideal, sigma).is_unit()) continue;
      std::vector<long> hint(n, 0);
      for (const auto& l : leaves)
        if (l.sigma == sigma)
          for (std::size_t i = 0; i < n; ++i) hint[i] = std::max(hint[i], l.nilpotency[i]);
      long b = bound ? *bound : default_witness_bound(ideal, sigma, *g, hint);
      out.bounds.emplace_back(sigma, b);
      for (auto& w : essential_witnesses(ideal, sigma, *g, b)) {
        try {
          MesoComponent c = coprincipal_component(ideal, sigma, w.w, &*g, b);
          c.witness = std::move(w);
          out.components.push_back(std::move(c));
        } catch (const BoundError&) {
          out.skipped.push_back(std::move(w));
        }
      }
    }
    merge_duplicates(out.components);
  } else {
    out.graded = false;
    for (const auto& l : leaves) {
      for (const auto& u : standard_monomials(l.ideal, complement(l.sigma))) {
        MesoComponent c = coprincipal_component(l.ideal, l.sigma, u);
        if (is_mesoprimary(c.ideal).mesoprimary) out.components.push_back(std::move(c));
      }
    }
    merge_duplicates(out.components);
    prune(ideal, out.components);
  }

  long shown = 0;
  for (const auto& [s, b] : out.bounds) shown = std::max(shown, b);
  out.all_mesoprimary = true;
  for (const auto& c : out.components)
    if (!is_mesoprimary(c.ideal).mesoprimary) out.all_mesoprimary = false;
  std::vector<Ideal> parts;
  for (const auto& c : out.components) parts.push_back(c.ideal);
  out.intersection_verified = ideal_equal(intersect_all(ring, parts), ideal);
  if (!out.intersection_verified)
    throw BoundError("the coprincipal components do not intersect to the input (degree bound " +
                         std::to_string(shown) + ")",
                     shown);
  if (!out.all_mesoprimary)
    throw BoundError("a coprincipal component is not mesoprimary (degree bound " + std::to_string(shown) + ")",
                     shown);
  return out;
}

} // namespace binomeso
