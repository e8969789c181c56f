#pragma once

#include "binomeso/field.hpp"
#include "binomeso/monomial.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace binomeso {

/// Variable names (declaration order is the variable order) plus the
/// coefficient field.
class Ring {
public:
  Ring(std::vector<std::string> names, Field field);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const Field& field() const { return field_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Ring& o) const { return names_ == o.names_ && field_ == o.field_; }

private:
  std::vector<std::string> names_;
  Field field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, FieldSpec spec = FieldSpec::rationals());
/// The ring with `extra` variables appended after the existing ones.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);
/// The subring on the variables listed in `keep` (in that order).
RingPtr sub_ring(const RingPtr& ring, const std::vector<std::size_t>& keep);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial. Terms are kept sorted by decreasing graded reverse
/// lex order and never carry a zero coefficient.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m);
  static Polynomial term(const RingPtr& ring, const Monomial& m, const Scalar& c);
  static Polynomial variable(const RingPtr& ring, std::size_t i);
  /// x^u - c x^v
  static Polynomial binomial(const RingPtr& ring, const Monomial& u, const Scalar& c,
                             const Monomial& v);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// At most two terms.
  bool is_binomial() const { return terms_.size() <= 2; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::set<Monomial> support() const;
  const Term& leading() const { return terms_.front(); }
  long total_degree() const;
  /// Coefficient of x^m (zero when absent).
  Scalar coefficient(const Monomial& m) const;
  /// Scaled so that the grevlex-leading coefficient is 1.
  Polynomial monic() const;
  /// True when every term involves only the flagged variables.
  bool supported_in(const std::vector<bool>& mask) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial times(const Monomial& m, const Scalar& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Re-expresses p in `target`; `var_map[i]` is the index in `target` of
/// variable i of p's ring.
Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                         const std::vector<std::size_t>& var_map);
/// Substitutes x_i -> values[i] for the flagged variables and maps the rest
/// into `target` (whose variables are the unflagged ones in order).
Polynomial substitute(const Polynomial& p, const std::vector<bool>& which,
                      const std::vector<Scalar>& values, const RingPtr& target);

std::string monomial_to_string(const Ring& ring, const Monomial& m);

} // namespace binomeso
