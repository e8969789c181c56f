#pragma once

#include "binomeso/meso.hpp"

#include <optional>
#include <vector>

namespace binomeso {

/// One primary component I(rho_i) of a lattice ideal with its prime I(chi_i).
struct LatticeComponent {
  LatticeCharacter rho; // on Sat'_p(L)
  LatticeCharacter chi; // on Sat(L)
  Ideal primary;
  Ideal prime;
};

/// Extends rho to the characters on Sat'_p(L) and each of those uniquely to
/// Sat(L). Lattice coordinate k lives on variable vars[k]. Every component
/// is checked to have dimension n - rank(L). Throws MissingRootsError when
/// the field lacks the roots of unity.
std::vector<LatticeComponent> lattice_primary_decomposition(const RingPtr& ring, const LatticeCharacter& rho,
                                                            const std::vector<std::size_t>& vars);

struct PrimaryComponent {
  Ideal ideal;
  Ideal prime;
  std::vector<bool> sigma;
  /// The prime is I(chi) + <x_i : i not in sigma>, chi on a saturated
  /// lattice in Z^sigma.
  LatticeCharacter chi;
  bool minimal = true;
  std::optional<bool> toral;
};

/// Canonical primary decomposition C = cap (C + I(rho_i)) of a mesoprimary
/// ideal. Verifies the intersection and that every prime is minimal over
/// the associated mesoprime.
std::vector<PrimaryComponent> mesoprimary_to_primary(const Ideal& component, const std::vector<bool>& sigma);

/// Prime and character of a primary binomial ideal. Throws InputError when
/// the ideal is not cellular or its lattice part is not primary.
PrimaryComponent primary_component_info(const Ideal& component);

struct PrimaryDecomposition {
  std::vector<PrimaryComponent> components;
  MesoDecomposition meso;
  /// Components before merging equal primes and pruning.
  std::vector<PrimaryComponent> unmerged;
  bool intersection_verified = false;
};

/// Refines each mesoprimary component, intersects the components sharing a
/// prime, drops components containing the intersection of the others and
/// verifies the result against I. Sets minimal flags, and toral flags when
/// a grading is given.
PrimaryDecomposition refine_to_primary(const Ideal& ideal, MesoDecomposition meso,
                                       const std::optional<GradingMatrix>& g);
PrimaryDecomposition primary_decomposition(const Ideal& ideal, const std::optional<GradingMatrix>& g,
                                           std::optional<long> bound = std::nullopt);

/// Minimal flags by pairwise containment of the primes.
void mark_minimal(std::vector<PrimaryComponent>& components);
void mark_toral(std::vector<PrimaryComponent>& components, const GradingMatrix& g);

/// (Q : f) = Q for every sample f outside the prime of Q.
bool primary_spot_check(const PrimaryComponent& component, const std::vector<Polynomial>& samples);

struct AssociatedPrime {
  Ideal prime;
  std::vector<bool> sigma;
  bool minimal = true;
  std::optional<bool> toral;
};
std::vector<AssociatedPrime> associated_primes(const std::vector<PrimaryComponent>& components);

struct IntersectionReport {
  Ideal ideal;
  BinomialityReport binomial;
  /// Number of components intersected.
  std::size_t used = 0;
  /// For toral parts: every toral prime is minimal, so the result does not
  /// depend on the decomposition.
  bool decomposition_independent = true;
};

/// Intersection of the components at minimal primes.
IntersectionReport hull(const std::vector<PrimaryComponent>& components);
/// Intersection of the toral components; computes missing toral flags.
IntersectionReport toral_part(std::vector<PrimaryComponent> components, const GradingMatrix& g);
/// Intersection of the toral mesoprimary components.
IntersectionReport meso_toral_part(const MesoDecomposition& meso, const GradingMatrix& g);

} // namespace binomeso
