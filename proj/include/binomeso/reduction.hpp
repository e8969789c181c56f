#pragma once

#include "binomeso/meso.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binomeso {

/// Variables in `sigma` are set to the values `nu` (one per sigma variable,
/// in increasing index order).
struct RestrictionContext {
  std::vector<bool> sigma;
  std::vector<Scalar> nu;

  static RestrictionContext ones(const Field& field, std::vector<bool> sigma);
  bool all_ones(const Field& field) const;
};

/// k[sigma^c], variable names kept.
RingPtr restricted_ring(const RingPtr& ring, const std::vector<bool>& sigma);

/// Throws InputError when nu is not a zero of I cap k[sigma]: setting the
/// sigma variables to nu would then introduce constants.
void check_context(const Ideal& ideal, const RestrictionContext& ctx);

/// |sigma| = d, rank A_sigma = d and nu the all-ones vector.
struct ConventionReport {
  bool holds = true;
  std::string reason;
};
ConventionReport check_convention(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& g);

Polynomial restrict_polynomial(const Polynomial& p, const RestrictionContext& ctx, const RingPtr& target);
/// The image of I under x_i -> nu_i (i in sigma), an ideal of k[sigma^c].
Ideal restrict_ideal(const Ideal& ideal, const RestrictionContext& ctx);

/// Weak monomial witnesses for m_tau: monomials in the tau variables of
/// degree at most `degree_bound`, certified by monomials x^m (outside tau)
/// and x^q of degree at most `degree_bound` + 1. No grading is used; the
/// essential test runs over polynomials of degree at most `degree_bound` + 1.
/// Witnesses are merged into classes congruent modulo I.
std::vector<WitnessRecord> weak_monomial_witnesses(const Ideal& ideal, const std::vector<bool>& tau,
                                                   long degree_bound);

/// f in I with f(x_sigma = 1) = g, one sigma monomial per term of g, built
/// class by class from lifted binomials aligned by lcm corrections.
/// Requires nu = 1. The sigma shifts come from A_sigma^{-1} when A_sigma is
/// invertible and from a search over shifts of degree at most 4 otherwise.
/// Throws InputError when g is not in the restricted ideal.
Polynomial lift_polynomial(const Polynomial& g, const Ideal& ideal, const RestrictionContext& ctx,
                           const GradingMatrix& grading);

/// Truth of (p not in I_sigma) implies (p restricted not in I restricted).
/// Throws InputError when p is not homogeneous.
bool check_nonlifting(const Polynomial& p, const Ideal& ideal, const RestrictionContext& ctx,
                      const GradingMatrix& grading);

struct SuiteReport {
  long samples = 0;
  long violations = 0;
  std::vector<std::string> examples; // first few violations
};
/// Lifts the reduced basis of the restricted ideal and random combinations
/// of its elements; checks f in I and that f restricts back to g.
SuiteReport lifting_suite(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& grading,
                          long samples, unsigned seed);
/// Random homogeneous polynomials (binomials within a fiber, sums of fiber
/// monomials, and perturbed multiples of I_sigma elements).
SuiteReport nonlifting_suite(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& grading,
                             long samples, unsigned seed, long max_degree = 4);

struct TransferReport {
  ConventionReport convention;
  Ideal restricted;
  long degree_bound = 0;
  /// Witness monomials of degree at most the bound, in k[sigma^c].
  std::vector<Monomial> witnesses, weak_witnesses;
  std::vector<Monomial> essential, weak_essential;
  bool witnesses_equal = false;
  bool essential_equal = false;
  bool equal() const { return witnesses_equal && essential_equal; }
};
/// Monomial witnesses of I for m_{sigma^c} against weak witnesses of the
/// restricted ideal, both up to total degree `degree_bound` (default: the
/// top degree of the restricted reduced basis plus one).
TransferReport witness_transfer_check(const Ideal& ideal, const RestrictionContext& ctx, const GradingMatrix& g,
                                      std::optional<long> degree_bound = std::nullopt);

/// A point of the torus on which the binomials of I(chi) vanish (chi on a
/// saturated lattice in Z^sigma).
std::vector<Scalar> torus_zero(const LatticeCharacter& chi);

struct ToralComponentReport {
  Ideal component;
  Ideal saturated_part; // ((I + I(chi) + K) : (prod sigma)^inf)
  std::vector<Monomial> monomial_part; // M bar, in the full ring
  Ideal restricted;
  RestrictionContext context;
};
/// ((I + I(chi) + K) : (prod_{i in sigma} x_i)^inf) + M bar for a toral prime
/// P = I(chi) + m_{sigma^c}. M bar intersects the monomial parts of the
/// coprincipal components of the restricted ideal at its essential weak
/// witnesses. Without K the prime must be minimal over I. The result is
/// spot-checked to be P-primary.
ToralComponentReport toral_primary_component(const Ideal& ideal, const LatticeCharacter& chi,
                                             const std::vector<bool>& sigma, const GradingMatrix& g,
                                             const std::optional<Ideal>& k = std::nullopt,
                                             long degree_bound = 6);

} // namespace binomeso
