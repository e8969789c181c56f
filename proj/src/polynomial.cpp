#include "binomeso/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace binomeso {

Ring::Ring(std::vector<std::string> names, Field field)
    : names_(std::move(names)), field_(std::move(field)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate variable name " + names_[i]);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, FieldSpec spec) {
  return std::make_shared<const Ring>(std::move(names), Field(spec));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  auto names = ring->names();
  for (const auto& e : extra) {
    std::string n = e;
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "_";
    names.push_back(n);
  }
  return std::make_shared<const Ring>(std::move(names), ring->field());
}

RingPtr sub_ring(const RingPtr& ring, const std::vector<std::size_t>& keep) {
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(ring->name(i));
  return std::make_shared<const Ring>(std::move(names), ring->field());
}

namespace {

bool grevlex_greater(const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; }

} // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  const Field& f = ring_->field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  return term(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m) {
  return term(ring, m, ring->field().one());
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
  Monomial m(ring->nvars());
  m[i] = 1;
  return monomial(ring, m);
}

Polynomial Polynomial::binomial(const RingPtr& ring, const Monomial& u, const Scalar& c,
                                const Monomial& v) {
  return Polynomial(ring, {{u, ring->field().one()}, {v, ring->field().neg(c)}});
}

std::set<Monomial> Polynomial::support() const {
  std::set<Monomial> s;
  for (const auto& t : terms_) s.insert(t.mono);
  return s;
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return {};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(terms_.front().coeff));
}

bool Polynomial::supported_in(const std::vector<bool>& mask) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.supported_in(mask); });
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw InputError("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_) return o;
  if (!o.ring_) return *this;
  check_ring(o);
  const Field& f = field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size()     ? -1
            : j == o.terms_.size() ? 1
                                   : grevlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, field().mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves grevlex order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!first) os << "*";
    first = false;
    os << ring.name(i);
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& f = field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = f.to_string(t.coeff);
    bool negative = false;
    if (t.coeff.is_rational() && f.characteristic() == 0 && t.coeff.rational_value() < 0) {
      negative = true;
      c = f.to_string(f.neg(t.coeff));
    }
    const bool compound = c.find_first_of(" ") != std::string::npos;
    if (compound) c = "(" + c + ")";
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      os << c;
    } else {
      if (c != "1") os << c << "*";
      os << monomial_to_string(*ring_, t.mono);
    }
  }
  return os.str();
}

Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                         const std::vector<std::size_t>& var_map) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m[var_map.at(i)] += t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial substitute(const Polynomial& p, const std::vector<bool>& which,
                      const std::vector<Scalar>& values, const RingPtr& target) {
  const Field& f = p.field();
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    Scalar c = t.coeff;
    std::size_t k = 0;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (which[i]) {
        if (t.mono[i]) c = f.mul(c, f.pow(values[i], t.mono[i]));
      } else {
        m[k++] = t.mono[i];
      }
    }
    terms.push_back({std::move(m), std::move(c)});
  }
  return Polynomial(target, std::move(terms));
}

} // namespace binomeso
