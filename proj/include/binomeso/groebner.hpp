#pragma once

#include "binomeso/polynomial.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace binomeso {

/// Monomial order. Elimination orders compare the total degree in the
/// eliminated block first and break ties by graded reverse lex, so a
/// polynomial whose leading monomial avoids the block avoids it entirely.
class TermOrder {
public:
  enum class Kind { lex, grevlex, elimination };

  static TermOrder lex() { return TermOrder(Kind::lex, {}); }
  static TermOrder grevlex() { return TermOrder(Kind::grevlex, {}); }
  static TermOrder elimination(std::vector<bool> block) {
    return TermOrder(Kind::elimination, std::move(block));
  }

  Kind kind() const { return kind_; }
  const std::vector<bool>& block() const { return block_; }
  int compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const TermOrder&) const = default;

private:
  TermOrder(Kind k, std::vector<bool> block) : kind_(k), block_(std::move(block)) {}
  Kind kind_;
  std::vector<bool> block_;
};

/// A Groebner basis together with the order it was computed for. `ordered`
/// holds the same elements with terms sorted by `order` (leading term
/// first); `elements` are canonical polynomials.
struct GroebnerBasis {
  RingPtr ring;
  TermOrder order = TermOrder::grevlex();
  std::vector<Polynomial> elements;
  std::vector<std::vector<Term>> ordered;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// sugar selection strategy. Always returns the reduced basis.
GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             const TermOrder& order = TermOrder::grevlex());

/// Remainder of multivariate division by a Groebner basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Finitely generated ideal. The reduced graded reverse lex basis is
/// computed on first use and shared between copies.
class Ideal {
public:
  Ideal() = default;
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});
  /// Wraps an already computed reduced graded reverse lex basis.
  static Ideal from_basis(GroebnerBasis basis);
  static Ideal unit(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis& basis() const;
  /// Generators replaced by the reduced basis (a canonical presentation).
  Ideal canonical() const { return from_basis(basis()); }

  Polynomial normal_form(const Polynomial& p) const { return binomeso::normal_form(p, basis()); }
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const { return basis().is_unit(); }
  bool is_zero() const { return basis().elements.empty(); }
  /// Every generator has at most two terms.
  bool has_binomial_generators() const;

  std::string to_string() const;

private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> basis;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra);
/// I cap J via elimination of t from tI + (1-t)J.
Ideal intersect(const Ideal& a, const Ideal& b);
/// Intersection of a list; the empty intersection is the unit ideal.
Ideal intersect_all(const RingPtr& ring, const std::vector<Ideal>& ideals);
/// I : f
Ideal quotient(const Ideal& ideal, const Polynomial& f);
/// I : f^infinity, via elimination of t from I + <1 - t f>.
Ideal saturation(const Ideal& ideal, const Polynomial& f);
/// I : (prod of the flagged variables)^infinity.
Ideal saturate_variables(const Ideal& ideal, const std::vector<bool>& vars);
/// Generators of I cap k[unflagged variables], expressed in the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& vars);
/// Krull dimension of R/I from the initial ideal. Throws on the unit ideal.
long dimension(const Ideal& ideal);

struct BinomialityReport {
  bool binomial = true;
  /// First reduced basis element with more than two terms.
  std::optional<Polynomial> witness;
};
BinomialityReport is_binomial_ideal(const Ideal& ideal);

/// Product of the flagged variables.
Monomial variables_monomial(std::size_t n, const std::vector<bool>& vars);

} // namespace binomeso
