#include "binomeso/primdec.hpp"

#include <algorithm>

namespace binomeso {

namespace {

std::vector<Polynomial> variable_generators(const RingPtr& ring, const std::vector<bool>& sigma) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (!sigma[i]) out.push_back(Polynomial::variable(ring, i));
  return out;
}

Ideal prime_of(const RingPtr& ring, const LatticeCharacter& chi, const std::vector<bool>& sigma) {
  Ideal lattice = lattice_ideal(ring, chi, indices_of(sigma));
  return ideal_sum(lattice, variable_generators(ring, sigma)).canonical();
}

bool same_prime(const PrimaryComponent& a, const PrimaryComponent& b) {
  return a.sigma == b.sigma && ideal_equal(a.prime, b.prime);
}

} // namespace

std::vector<LatticeComponent> lattice_primary_decomposition(const RingPtr& ring, const LatticeCharacter& rho,
                                                            const std::vector<std::size_t>& vars) {
  const Field& field = ring->field();
  const IntLattice& l = rho.lattice();
  IntLattice mid = sat_p_prime(l, field.characteristic());
  IntLattice sat = saturate_lattice(l);
  const long expected = static_cast<long>(ring->nvars()) - static_cast<long>(l.rank());
  std::vector<LatticeComponent> out;
  for (auto& r : character_extensions(rho, mid)) {
    auto up = character_extensions(r, sat);
    if (up.size() != 1)
      throw CapabilityError("the character has " + std::to_string(up.size()) +
                            " extensions from Sat'_p(L) to Sat(L); expected exactly one");
    LatticeComponent c{r, up.front(), lattice_ideal(ring, r, vars), lattice_ideal(ring, up.front(), vars)};
    if (dimension(c.primary) != expected || dimension(c.prime) != expected)
      throw Error("lattice component " + c.primary.to_string() + " does not have codimension rank(L)");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PrimaryComponent> mesoprimary_to_primary(const Ideal& component, const std::vector<bool>& sigma) {
  const RingPtr& ring = component.ring();
  LatticeCharacter rho = lattice_of_cellular(component, sigma);
  const auto vars = indices_of(sigma);
  std::vector<PrimaryComponent> out;
  std::vector<Ideal> parts;
  for (auto& lc : lattice_primary_decomposition(ring, rho, vars)) {
    PrimaryComponent c;
    c.ideal = ideal_sum(component, lc.primary).canonical();
    if (c.ideal.is_unit()) throw Error("refinement produced the unit ideal; is the input mesoprimary?");
    c.sigma = sigma;
    c.chi = lc.chi;
    c.prime = ideal_sum(lc.prime, variable_generators(ring, sigma)).canonical();
    parts.push_back(c.ideal);
    out.push_back(std::move(c));
  }
  if (!ideal_equal(intersect_all(ring, parts), component))
    throw Error("primary components of " + component.to_string() + " do not intersect back to it");
  Ideal mesoprime = ideal_sum(lattice_ideal(ring, rho, vars), variable_generators(ring, sigma));
  const long d = dimension(mesoprime);
  for (const auto& c : out)
    if (dimension(c.prime) != d)
      throw Error("prime " + c.prime.to_string() + " is not minimal over the mesoprime");
  return out;
}

PrimaryComponent primary_component_info(const Ideal& component) {
  CellularData d = cellular_data(component);
  if (!d.cellular()) throw InputError("component " + component.to_string() + " is not cellular");
  LatticeCharacter rho = lattice_of_cellular(component, d.sigma);
  auto ext = character_extensions(rho, saturate_lattice(rho.lattice()));
  if (ext.size() != 1) throw InputError("component " + component.to_string() + " is not primary");
  PrimaryComponent c;
  c.ideal = component.canonical();
  c.sigma = d.sigma;
  c.chi = ext.front();
  c.prime = prime_of(component.ring(), c.chi, d.sigma);
  return c;
}

void mark_minimal(std::vector<PrimaryComponent>& components) {
  for (auto& c : components) {
    c.minimal = true;
    for (const auto& o : components)
      if (&o != &c && c.prime.contains(o.prime) && !o.prime.contains(c.prime)) {
        c.minimal = false;
        break;
      }
  }
}

void mark_toral(std::vector<PrimaryComponent>& components, const GradingMatrix& g) {
  for (auto& c : components) c.toral = toral_prime_test(c.chi.lattice(), c.sigma, g);
}

PrimaryDecomposition refine_to_primary(const Ideal& ideal, MesoDecomposition meso,
                                       const std::optional<GradingMatrix>& g) {
  const RingPtr& ring = ideal.ring();
  PrimaryDecomposition out;
  for (const auto& m : meso.components)
    for (auto& c : mesoprimary_to_primary(m.ideal, m.sigma)) out.unmerged.push_back(std::move(c));
  out.meso = std::move(meso);

  // components sharing a prime are intersected into one
  std::vector<PrimaryComponent> merged;
  for (const auto& c : out.unmerged) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& o) { return same_prime(o, c); });
    if (it == merged.end())
      merged.push_back(c);
    else if (!c.ideal.contains(it->ideal))
      it->ideal = intersect(it->ideal, c.ideal).canonical();
  }
  for (std::size_t i = merged.size(); i-- > 0 && merged.size() > 1;) {
    std::vector<Ideal> others;
    for (std::size_t j = 0; j < merged.size(); ++j)
      if (j != i) others.push_back(merged[j].ideal);
    if (merged[i].ideal.contains(intersect_all(ring, others))) merged.erase(merged.begin() + static_cast<long>(i));
  }
  std::vector<Ideal> parts;
  for (const auto& c : merged) parts.push_back(c.ideal);
  if (!ideal_equal(intersect_all(ring, parts), ideal))
    throw Error("primary components do not intersect to the input ideal");
  out.intersection_verified = true;
  out.components = std::move(merged);
  mark_minimal(out.components);
  mark_minimal(out.unmerged);
  if (g) {
    mark_toral(out.components, *g);
    mark_toral(out.unmerged, *g);
  }
  return out;
}

PrimaryDecomposition primary_decomposition(const Ideal& ideal, const std::optional<GradingMatrix>& g,
                                           std::optional<long> bound) {
  return refine_to_primary(ideal, mesoprimary_decomposition(ideal, g, bound), g);
}

bool primary_spot_check(const PrimaryComponent& component, const std::vector<Polynomial>& samples) {
  if (!component.prime.contains(component.ideal)) return false;
  for (const auto& f : samples) {
    if (component.prime.contains(f)) continue;
    if (!ideal_equal(quotient(component.ideal, f), component.ideal)) return false;
  }
  return true;
}

std::vector<AssociatedPrime> associated_primes(const std::vector<PrimaryComponent>& components) {
  std::vector<PrimaryComponent> copy = components;
  mark_minimal(copy);
  std::vector<AssociatedPrime> out;
  for (const auto& c : copy) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto& p) {
      return p.sigma == c.sigma && ideal_equal(p.prime, c.prime);
    });
    if (!seen) out.push_back({c.prime, c.sigma, c.minimal, c.toral});
  }
  return out;
}

namespace {

IntersectionReport intersect_report(const RingPtr& ring, const std::vector<Ideal>& parts) {
  IntersectionReport r;
  r.ideal = intersect_all(ring, parts).canonical();
  r.binomial = is_binomial_ideal(r.ideal);
  r.used = parts.size();
  return r;
}

} // namespace

IntersectionReport hull(const std::vector<PrimaryComponent>& components) {
  if (components.empty()) throw Error("hull of an empty decomposition");
  std::vector<PrimaryComponent> copy = components;
  mark_minimal(copy);
  std::vector<Ideal> parts;
  for (const auto& c : copy)
    if (c.minimal) parts.push_back(c.ideal);
  return intersect_report(components.front().ideal.ring(), parts);
}

IntersectionReport toral_part(std::vector<PrimaryComponent> components, const GradingMatrix& g) {
  if (components.empty()) throw Error("toral part of an empty decomposition");
  mark_minimal(components);
  for (auto& c : components)
    if (!c.toral) c.toral = toral_prime_test(c.chi.lattice(), c.sigma, g);
  std::vector<Ideal> parts;
  bool independent = true;
  for (const auto& c : components)
    if (*c.toral) {
      parts.push_back(c.ideal);
      independent = independent && c.minimal;
    }
  IntersectionReport r = intersect_report(components.front().ideal.ring(), parts);
  r.decomposition_independent = independent;
  return r;
}

IntersectionReport meso_toral_part(const MesoDecomposition& meso, const GradingMatrix& g) {
  if (meso.components.empty()) throw Error("toral part of an empty decomposition");
  std::vector<Ideal> parts;
  for (const auto& c : meso.components)
    if (toral_classify(c.ideal, c.sigma, g).toral) parts.push_back(c.ideal);
  return intersect_report(meso.components.front().ideal.ring(), parts);
}

} // namespace binomeso
