#include "binomeso/groebner.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace binomeso {

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
  case Kind::lex:
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  case Kind::grevlex: return grevlex_compare(a, b);
  case Kind::elimination: {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (block_[i]) {
        da += a[i];
        db += b[i];
      }
    if (da != db) return da < db ? -1 : 1;
    return grevlex_compare(a, b);
  }
  }
  return 0;
}

namespace {

using Terms = std::vector<Term>;

Terms sorted_terms(const Polynomial& p, const TermOrder& ord) {
  Terms t = p.terms();
  if (ord.kind() != TermOrder::Kind::grevlex)
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  return t;
}

/// f[start..] - c * m * g, where the leading terms cancel by construction.
Terms sub_multiple(const Terms& f, std::size_t start, const Monomial& m, const Scalar& c,
                   const Terms& g, const TermOrder& ord, const Field& field) {
  Terms r;
  r.reserve(f.size() - start + g.size());
  std::size_t i = start + 1, j = 1;
  Scalar nc = field.neg(c);
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : ord.compare(f[i].mono, gm);
    if (cmp > 0) {
      r.push_back(f[i++]);
    } else if (cmp < 0) {
      r.push_back({std::move(gm), field.mul(nc, g[j].coeff)});
      ++j;
    } else {
      Scalar s = field.add(f[i].coeff, field.mul(nc, g[j].coeff));
      if (!s.is_zero()) r.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

class Reducer {
public:
  Reducer(const TermOrder& ord, const Field& field) : ord_(ord), field_(field) {}

  void add(Terms t) {
    lead_.push_back(t.front().mono);
    polys_.push_back(std::move(t));
  }
  std::size_t size() const { return polys_.size(); }
  const Terms& poly(std::size_t i) const { return polys_[i]; }
  const Monomial& lead(std::size_t i) const { return lead_[i]; }

  /// Full reduction; `skip` excludes one element (used while interreducing).
  Terms reduce(Terms f, std::ptrdiff_t skip = -1, bool top_only = false) const {
    Terms out;
    std::size_t start = 0;
    while (start < f.size()) {
      const Monomial& lm = f[start].mono;
      std::ptrdiff_t hit = -1;
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (static_cast<std::ptrdiff_t>(k) == skip) continue;
        if (lead_[k].divides(lm)) {
          hit = static_cast<std::ptrdiff_t>(k);
          break;
        }
      }
      if (hit < 0) {
        if (top_only) {
          out.insert(out.end(), f.begin() + start, f.end());
          return out;
        }
        out.push_back(f[start]);
        ++start;
        continue;
      }
      const Terms& g = polys_[hit];
      Scalar c = field_.div(f[start].coeff, g.front().coeff);
      f = sub_multiple(f, start, lm / lead_[hit], c, g, ord_, field_);
      start = 0;
    }
    return out;
  }

private:
  const TermOrder& ord_;
  const Field& field_;
  std::vector<Terms> polys_;
  std::vector<Monomial> lead_;
};

Terms make_monic(Terms t, const Field& field) {
  if (t.empty()) return t;
  Scalar c = field.inv(t.front().coeff);
  if (field.is_one(c)) return t;
  for (auto& x : t) x.coeff = field.mul(x.coeff, c);
  return t;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long sugar;
};

} // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& t : ordered) out.push_back(t.front().mono);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
}

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             const TermOrder& order) {
  const Field& field = ring->field();
  Reducer red(order, field);
  std::vector<long> sugar;
  std::vector<Pair> pairs;
  std::vector<bool> active;

  auto update = [&](Terms h, long s) {
    const std::size_t hi = red.size();
    red.add(std::move(h));
    sugar.push_back(s);
    active.push_back(true);
    const Monomial& lh = red.lead(hi);

    std::vector<Pair> c, d;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) {
        const Monomial& lg = red.lead(g);
        Monomial l = lh.lcm(lg);
        long ps = std::max(s + (l.degree() - lh.degree()), sugar[g] + (l.degree() - lg.degree()));
        c.push_back({g, hi, std::move(l), ps});
      }
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = lh.coprime(red.lead(p.i));
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (c[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && lh.lcm(red.lead(p.i)) != p.lcm &&
                  lh.lcm(red.lead(p.j)) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!lh.coprime(red.lead(p.i))) next.push_back(std::move(p));
    pairs = std::move(next);
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(red.lead(g))) active[g] = false;
  };

  // seed with the inputs, largest leading terms last so earlier ones reduce them
  std::vector<Terms> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(sorted_terms(g, order));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  for (auto& t : inputs) {
    long s = 0;
    for (const auto& x : t) s = std::max(s, x.mono.degree());
    Terms r = red.reduce(std::move(t));
    if (!r.empty()) update(make_monic(std::move(r), field), s);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order.compare(a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const Terms& f = red.poly(p.i);
    const Terms& g = red.poly(p.j);
    Monomial mf = p.lcm / red.lead(p.i), mg = p.lcm / red.lead(p.j);
    Terms s;
    {
      Terms fm;
      fm.reserve(f.size());
      for (const auto& t : f) fm.push_back({t.mono * mf, t.coeff});
      s = sub_multiple(fm, 0, mg, field.div(fm.front().coeff, g.front().coeff), g, order, field);
    }
    Terms r = red.reduce(std::move(s));
    if (!r.empty()) update(make_monic(std::move(r), field), p.sugar);
  }

  // minimalize, then interreduce the survivors
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < red.size(); ++k) {
    bool redundant = false;
    for (std::size_t o = 0; o < red.size() && !redundant; ++o) {
      if (o == k) continue;
      if (red.lead(o).divides(red.lead(k)) && (red.lead(o) != red.lead(k) || o < k))
        redundant = true;
    }
    if (!redundant) keep.push_back(k);
  }
  Reducer minimal(order, field);
  for (auto k : keep) minimal.add(red.poly(k));
  GroebnerBasis out;
  out.ring = ring;
  out.order = order;
  out.reduced = true;
  std::vector<Terms> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Terms t = minimal.poly(k);
    Terms head = {t.front()};
    Terms tail(t.begin() + 1, t.end());
    Terms rt = minimal.reduce(std::move(tail), static_cast<std::ptrdiff_t>(k));
    head.insert(head.end(), rt.begin(), rt.end());
    reduced.push_back(make_monic(std::move(head), field));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Terms& a, const Terms& b) {
    return order.compare(a.front().mono, b.front().mono) < 0;
  });
  for (auto& t : reduced) {
    out.elements.emplace_back(ring, t);
    out.ordered.push_back(std::move(t));
  }
  return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (p.is_zero() || g.elements.empty()) return p;
  const Field& field = g.ring->field();
  Reducer red(g.order, field);
  for (const auto& t : g.ordered) red.add(t);
  return Polynomial(g.ring, red.reduce(sorted_terms(p, g.order)));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!(*g.ring() == *ring_)) throw InputError("generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::from_basis(GroebnerBasis basis) {
  Ideal out(basis.ring, basis.elements);
  std::call_once(out.cache_->once, [&] { out.cache_->basis = std::move(basis); });
  return out;
}

Ideal Ideal::unit(const RingPtr& ring) {
  return Ideal(ring, {Polynomial::constant(ring, ring->field().one())});
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(cache_->once, [&] { cache_->basis = groebner_basis(ring_, gens_); });
  return *cache_->basis;
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::has_binomial_generators() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_binomial(); });
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ">";
  return os.str();
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  const auto& ga = a.basis().elements;
  const auto& gb = b.basis().elements;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) { return ideal_sum(a, b.generators()); }

Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra) {
  auto gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(a.ring(), std::move(gens));
}

Monomial variables_monomial(std::size_t n, const std::vector<bool>& vars) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i)
    if (vars[i]) m[i] = 1;
  return m;
}

namespace {

/// Elimination of the trailing `extra` variables of `ext`, returned in
/// `base`. The kept elements form the reduced grevlex basis of the result.
Ideal eliminate_trailing(const RingPtr& base, const RingPtr& ext,
                         const std::vector<Polynomial>& gens) {
  const std::size_t n = base->nvars();
  std::vector<bool> block(ext->nvars(), false);
  for (std::size_t i = n; i < ext->nvars(); ++i) block[i] = true;
  GroebnerBasis gb = groebner_basis(ext, gens, TermOrder::elimination(block));
  GroebnerBasis out;
  out.ring = base;
  out.order = TermOrder::grevlex();
  out.reduced = true;
  std::vector<bool> keep_mask(ext->nvars(), true);
  for (std::size_t i = n; i < ext->nvars(); ++i) keep_mask[i] = false;
  std::vector<std::size_t> back(ext->nvars(), 0);
  for (std::size_t i = 0; i < n; ++i) back[i] = i;
  for (std::size_t k = 0; k < gb.elements.size(); ++k) {
    if (!gb.elements[k].supported_in(keep_mask)) continue;
    Polynomial p = map_variables(gb.elements[k], base, back);
    out.ordered.push_back(p.terms());
    out.elements.push_back(std::move(p));
  }
  // the kept elements are sorted by the elimination order, which agrees with grevlex on them
  return Ideal::from_basis(std::move(out));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

} // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring());
  const RingPtr& base = a.ring();
  RingPtr ext = extend_ring(base, {"_t"});
  const auto embed = identity_map(base->nvars());
  const std::size_t t = base->nvars();
  Polynomial tv = Polynomial::variable(ext, t);
  Polynomial one_minus_t = Polynomial::constant(ext, ext->field().one()) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : a.basis().elements) gens.push_back(tv * map_variables(g, ext, embed));
  for (const auto& g : b.basis().elements) gens.push_back(one_minus_t * map_variables(g, ext, embed));
  return eliminate_trailing(base, ext, gens);
}

Ideal intersect_all(const RingPtr& ring, const std::vector<Ideal>& ideals) {
  if (ideals.empty()) return Ideal::unit(ring);
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

namespace {

/// Exact division p / f; throws if f does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  if (f.is_monomial()) {
    const Term& ft = f.leading();
    const Field& field = f.field();
    Scalar ci = field.inv(ft.coeff);
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
      if (!ft.mono.divides(t.mono)) throw Error("exact_divide: monomial does not divide");
      out.push_back({t.mono / ft.mono, field.mul(t.coeff, ci)});
    }
    return Polynomial(p.ring(), std::move(out));
  }
  Polynomial q(p.ring()), r = p;
  const Field& field = f.field();
  while (!r.is_zero()) {
    const Term& lt = r.leading();
    if (!f.leading().mono.divides(lt.mono)) throw Error("exact_divide: not divisible");
    Polynomial step = Polynomial::term(p.ring(), lt.mono / f.leading().mono,
                                       field.div(lt.coeff, f.leading().coeff));
    q = q + step;
    r = r - step * f;
  }
  return q;
}

} // namespace

Ideal quotient(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error("quotient by the zero polynomial");
  if (f.is_constant()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal saturation(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw Error("saturation by the zero polynomial");
  if (f.is_constant() || ideal.is_unit()) return ideal;
  const RingPtr& base = ideal.ring();
  RingPtr ext = extend_ring(base, {"_t"});
  const auto embed = identity_map(base->nvars());
  Polynomial tv = Polynomial::variable(ext, base->nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.basis().elements) gens.push_back(map_variables(g, ext, embed));
  gens.push_back(Polynomial::constant(ext, ext->field().one()) - tv * map_variables(f, ext, embed));
  return eliminate_trailing(base, ext, gens);
}

Ideal saturate_variables(const Ideal& ideal, const std::vector<bool>& vars) {
  const std::size_t n = ideal.ring()->nvars();
  Monomial m = variables_monomial(n, vars);
  if (m.is_one()) return ideal;
  return saturation(ideal, Polynomial::monomial(ideal.ring(), m));
}

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& vars) {
  bool any = std::any_of(vars.begin(), vars.end(), [](bool b) { return b; });
  if (!any) return ideal;
  GroebnerBasis gb = groebner_basis(ideal.ring(), ideal.basis().elements, TermOrder::elimination(vars));
  std::vector<bool> keep(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) keep[i] = !vars[i];
  std::vector<Polynomial> gens;
  for (const auto& e : gb.elements)
    if (e.supported_in(keep)) gens.push_back(e);
  return Ideal(ideal.ring(), std::move(gens));
}

long dimension(const Ideal& ideal) {
  if (ideal.is_unit()) throw Error("dimension of the unit ideal is undefined");
  const std::size_t n = ideal.ring()->nvars();
  const auto leads = ideal.basis().leading_monomials();
  long best = 0;
  std::vector<bool> chosen(n, false);
  // maximal variable sets containing no leading monomial's support
  std::function<void(std::size_t, long)> search = [&](std::size_t i, long size) {
    if (size + static_cast<long>(n - i) <= best) return;
    if (i == n) {
      best = std::max(best, size);
      return;
    }
    chosen[i] = true;
    bool ok = std::none_of(leads.begin(), leads.end(),
                           [&](const Monomial& m) { return m.supported_in(chosen); });
    if (ok) search(i + 1, size + 1);
    chosen[i] = false;
    search(i + 1, size);
  };
  search(0, 0);
  return best;
}

BinomialityReport is_binomial_ideal(const Ideal& ideal) {
  BinomialityReport r;
  for (const auto& e : ideal.basis().elements)
    if (!e.is_binomial()) {
      r.binomial = false;
      r.witness = e;
      break;
    }
  return r;
}

} // namespace binomeso
