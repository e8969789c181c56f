#pragma once

#include "binomeso/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binomeso {

enum class VariableKind { nonzerodivisor, nilpotent, neither };

/// Per-variable classification modulo I. For a cellular ideal `sigma`
/// flags the nonzerodivisors and `nilpotency[j]` is the least N with
/// x_j^N in I for the others (0 for sigma variables).
struct CellularData {
  std::vector<VariableKind> kinds;
  std::vector<bool> sigma;
  std::vector<long> nilpotency;
  /// First variable that is neither nilpotent nor a nonzerodivisor.
  std::optional<std::size_t> failure_variable;

  bool cellular() const { return !failure_variable.has_value(); }
};

/// Least N with x_var^N in I, or 0 when no power lies in I.
long nilpotency_order(const Ideal& ideal, std::size_t var);
VariableKind classify_variable(const Ideal& ideal, std::size_t var);
CellularData cellular_data(const Ideal& ideal);

struct CellularLeaf {
  Ideal ideal;
  std::vector<bool> sigma;
  std::vector<long> nilpotency;
  /// Branch path: '0' for the saturation, '1' for the added power.
  std::string path;
};

/// Least e with (I : x^e) = (I : x^infinity).
long saturation_exponent(const Ideal& ideal, std::size_t var);

/// Recursive splitting I = (I : x^inf) cap (I + <x^e>) on the lowest-index
/// variable that is neither nilpotent nor a nonzerodivisor. Leaves
/// containing another leaf are dropped; the intersection is verified.
std::vector<CellularLeaf> cellular_decomposition(const Ideal& ideal);

} // namespace binomeso
