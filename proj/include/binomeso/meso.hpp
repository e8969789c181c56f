#pragma once

#include "binomeso/cellular.hpp"
#include "binomeso/grading.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace binomeso {

/// Normal forms of monomials modulo a binomial ideal, memoized. Each is a
/// single term, or nothing when the monomial lies in the ideal.
class TermNormalizer {
public:
  explicit TermNormalizer(Ideal ideal) : ideal_(std::move(ideal)) {}
  const std::optional<Term>& operator()(const Monomial& u);
  const Ideal& ideal() const { return ideal_; }

private:
  Ideal ideal_;
  std::unordered_map<Monomial, std::optional<Term>, MonomialHash> cache_;
};

/// Certificate for one variable x_i outside sigma: x_i (x^m x^w - lambda x^q)
/// lies in I_sigma while x^m x^w - lambda x^q does not.
struct WitnessCertificate {
  std::size_t var = 0;
  Monomial q;
  Scalar lambda;
};

struct WitnessRecord {
  std::vector<bool> sigma;
  /// Class representative: the grevlex-smallest member.
  Monomial w;
  /// Every witness monomial found that is congruent to w up to a scalar.
  std::vector<Monomial> merged;
  /// The sigma monomial x^m of the certificates.
  Monomial m;
  std::vector<WitnessCertificate> certificates;
  bool essential = false;
  /// Annihilated by every x_j outside sigma, not in I_sigma, with x^v x^w in
  /// its support.
  std::optional<Polynomial> essential_poly;
  Monomial v;
};

/// Checks the per-variable witness condition for the monomial x^m x^w = mw
/// modulo J = I_sigma, trying the monomials in `q_candidates`. A variable
/// that kills x^m x^w is certified by q = mw (lambda = -1, or q = mw x_i in
/// characteristic 2).
std::optional<std::vector<WitnessCertificate>> witness_certificates(
    TermNormalizer& nf, const std::vector<bool>& sigma, const Monomial& mw,
    const std::vector<Monomial>& q_candidates);

/// A polynomial p supported on `space` with p not in J, x_j p in J for every
/// j outside sigma, and `target` in its support; by linear algebra on the
/// span of `space`.
std::optional<Polynomial> essential_certificate(TermNormalizer& nf, const std::vector<bool>& sigma,
                                                const std::vector<Monomial>& space,
                                                const Monomial& target);

/// Monomials in the flagged variables outside the ideal. Throws
/// CapabilityError past `cap` (a flagged variable that is not nilpotent).
std::vector<Monomial> standard_monomials(const Ideal& ideal, const std::vector<bool>& vars,
                                         long cap = 20000);

/// I_m^sigma = ((I : sigma^inf) : x^m) cap k[sigma].
Ideal lattice_part_at(const Ideal& ideal, const std::vector<bool>& sigma, const Monomial& m);
/// I_m^sigma + <x_i : i not in sigma>. Throws InputError when x^m is in I.
Ideal mesoprime_at(const Ideal& ideal, const std::vector<bool>& sigma, const Monomial& m);

struct MesoprimaryReport {
  bool mesoprimary = false;
  std::vector<bool> sigma;
  std::optional<std::size_t> failure_variable;
  /// A sigma^c standard monomial whose colon changes the sigma part.
  std::optional<Monomial> violator;
};
MesoprimaryReport is_mesoprimary(const Ideal& ideal);

/// Max weight over the reduced basis of I_sigma plus the sum over j outside
/// sigma of N_j times the weight of x_j. N_j is the nilpotency order modulo
/// I_sigma, or the value in `nilpotency_hint` when x_j is not nilpotent there.
long default_witness_bound(const Ideal& ideal, const std::vector<bool>& sigma, const GradingMatrix& g,
                           const std::vector<long>& nilpotency_hint = {});

/// Monomial witnesses of weight at most `bound`, merged into classes of
/// monomials congruent modulo I.
std::vector<WitnessRecord> monomial_witnesses(const Ideal& ideal, const std::vector<bool>& sigma,
                                              const GradingMatrix& g, long bound);
/// The essential ones among monomial_witnesses, with certificates.
std::vector<WitnessRecord> essential_witnesses(const Ideal& ideal, const std::vector<bool>& sigma,
                                               const GradingMatrix& g, long bound);

/// Minimal generators (sigma^c monomials) of M_{x^m}^sigma(I). With a
/// grading, the monomials congruent to x^m x^s for sigma monomials x^s of
/// weight up to `bound` settle most candidates without a saturation; the
/// minimal generators are always confirmed by saturation. Throws BoundError
/// when the complement of M reaches past weight `bound` plus the weight of
/// x^m.
std::vector<Monomial> monomial_part_M(const Ideal& ideal, const std::vector<bool>& sigma,
                                      const Monomial& m, const GradingMatrix* g = nullptr,
                                      long bound = 0, long cap = 20000);

struct MesoComponent {
  Ideal ideal;
  std::vector<bool> sigma;
  WitnessRecord witness;
  Ideal mesoprime;
  std::vector<Monomial> monomial_part;
};

/// W_{x^m}^sigma(I) = ((I + I_m^sigma) : sigma^inf) + M_{x^m}^sigma(I).
MesoComponent coprincipal_component(const Ideal& ideal, const std::vector<bool>& sigma,
                                    const Monomial& m, const GradingMatrix* g = nullptr,
                                    long bound = 0);

struct MesoDecomposition {
  std::vector<MesoComponent> components;
  /// False when no grading was available and every sigma^c standard
  /// monomial of each cellular leaf served as a cogenerator.
  bool graded = true;
  std::vector<std::pair<std::vector<bool>, long>> bounds;
  /// Essential witnesses whose monomial part did not close up within the
  /// degree bound; they cogenerate no component.
  std::vector<WitnessRecord> skipped;
  bool intersection_verified = false;
  bool all_mesoprimary = false;
};

/// Coprincipal components cogenerated by the essential witnesses, over the
/// sigma of each cellular leaf and sigma = [n]. Verifies that they intersect
/// to I and are mesoprimary; throws BoundError otherwise. Without a grading
/// the cellular leaves are decomposed by all their standard cogenerators.
MesoDecomposition mesoprimary_decomposition(const Ideal& ideal, const std::optional<GradingMatrix>& g,
                                            std::optional<long> bound = std::nullopt);

std::string sigma_to_string(const Ring& ring, const std::vector<bool>& sigma);

} // namespace binomeso
