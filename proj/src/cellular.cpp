#include "binomeso/cellular.hpp"

namespace binomeso {

namespace {

Polynomial var_power(const RingPtr& ring, std::size_t var, long k) {
  Monomial m(ring->nvars());
  m[var] = static_cast<int32_t>(k);
  return Polynomial::monomial(ring, m);
}

} // namespace

long nilpotency_order(const Ideal& ideal, std::size_t var) {
  if (!saturation(ideal, Polynomial::variable(ideal.ring(), var)).is_unit()) return 0;
  // doubling, then binary search on the membership of x^k
  long hi = 1;
  while (!ideal.contains(var_power(ideal.ring(), var, hi))) hi *= 2;
  long lo = hi / 2; // x^lo not in I (or lo = 0)
  while (hi - lo > 1) {
    long mid = (lo + hi) / 2;
    if (ideal.contains(var_power(ideal.ring(), var, mid))) hi = mid;
    else lo = mid;
  }
  return hi;
}

VariableKind classify_variable(const Ideal& ideal, std::size_t var) {
  Ideal sat = saturation(ideal, Polynomial::variable(ideal.ring(), var));
  if (sat.is_unit()) return VariableKind::nilpotent;
  if (ideal_equal(sat, ideal)) return VariableKind::nonzerodivisor;
  return VariableKind::neither;
}

CellularData cellular_data(const Ideal& ideal) {
  if (ideal.is_unit()) throw Error("cellular data of the unit ideal");
  const std::size_t n = ideal.ring()->nvars();
  CellularData d;
  d.sigma.assign(n, false);
  d.nilpotency.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    VariableKind k = classify_variable(ideal, i);
    d.kinds.push_back(k);
    if (k == VariableKind::nonzerodivisor) d.sigma[i] = true;
    else if (k == VariableKind::nilpotent) d.nilpotency[i] = nilpotency_order(ideal, i);
    else if (!d.failure_variable) d.failure_variable = i;
  }
  return d;
}

long saturation_exponent(const Ideal& ideal, std::size_t var) {
  const RingPtr& ring = ideal.ring();
  Ideal sat = saturation(ideal, Polynomial::variable(ring, var));
  long e = 0;
  for (const auto& g : sat.basis().elements) {
    long k = 0;
    Polynomial p = g;
    while (!ideal.contains(p)) {
      p = p * Polynomial::variable(ring, var);
      ++k;
    }
    e = std::max(e, k);
  }
  return e;
}

namespace {

void split(const Ideal& ideal, const std::string& path, std::vector<CellularLeaf>& out) {
  if (ideal.is_unit()) return;
  CellularData d = cellular_data(ideal);
  if (d.cellular()) {
    out.push_back({ideal.canonical(), d.sigma, d.nilpotency, path});
    return;
  }
  const std::size_t x = *d.failure_variable;
  const RingPtr& ring = ideal.ring();
  long e = saturation_exponent(ideal, x);
  split(saturation(ideal, Polynomial::variable(ring, x)), path + "0", out);
  split(ideal_sum(ideal, {var_power(ring, x, e)}), path + "1", out);
}

} // namespace

std::vector<CellularLeaf> cellular_decomposition(const Ideal& ideal) {
  if (ideal.is_unit()) throw Error("cellular decomposition of the unit ideal");
  std::vector<CellularLeaf> leaves;
  split(ideal, "", leaves);
  std::vector<CellularLeaf> kept;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j) {
      if (i == j || !leaves[i].ideal.contains(leaves[j].ideal)) continue;
      // equal leaves: keep the first
      redundant = !leaves[j].ideal.contains(leaves[i].ideal) || j < i;
    }
    if (!redundant) kept.push_back(leaves[i]);
  }
  std::vector<Ideal> parts;
  for (const auto& l : kept) parts.push_back(l.ideal);
  if (!ideal_equal(intersect_all(ideal.ring(), parts), ideal))
    throw Error("cellular decomposition failed to intersect back to the input");
  return kept;
}

} // namespace binomeso
