#pragma once

#include "binomeso/io.hpp"
#include "binomeso/primdec.hpp"
#include "binomeso/reduction.hpp"

#include <nlohmann/json.hpp>

#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace binomeso {

/// A scalar as its power-basis coefficient vector of rational strings.
nlohmann::json scalar_json(const Scalar& c);
/// {"terms": [{"coefficient": [...], "exponents": [...]}, ...], "text": ...}
nlohmann::json polynomial_json(const Polynomial& p);
nlohmann::json monomial_json(const Ring& ring, const Monomial& m);
/// Reduced basis of the ideal.
nlohmann::json ideal_json(const Ideal& ideal);
nlohmann::json sigma_json(const Ring& ring, const std::vector<bool>& sigma);

/// Nodes are the monomials in [0, bound]^n; an edge joins u < v (in node
/// order) when x^u - lambda x^v lies in I for some lambda. Within the class
/// of monomials in I every pair is joined.
struct CongruenceDiagram {
  std::vector<Monomial> nodes;
  std::vector<bool> in_ideal;
  struct Edge {
    std::size_t u, v;
    Scalar lambda; // zero inside the ideal class
  };
  std::vector<Edge> edges;
};
CongruenceDiagram congruence_diagram(const Ideal& ideal, long region_bound);
/// DOT text of congruence_diagram. With at most two variables the nodes are
/// pinned to their exponent coordinates, with three an oblique projection is
/// used, and beyond that no positions are given.
std::string emit_congruence_dot(const Ideal& ideal, long region_bound);

struct CommandOptions {
  std::optional<long> bound;
  /// Variable names or 1-based indices.
  std::optional<std::vector<std::string>> sigma;
  std::optional<std::string> witness_monomial;
  /// Field elements in the input syntax, one per sigma variable.
  std::optional<std::vector<std::string>> nu;
  bool from_components = false;
  /// Adds wall-clock time to the report; off by default so that reports
  /// are byte-stable.
  bool timing = false;
};

struct CommandResult {
  nlohmann::json report;
  std::string text;
  std::string dot;
};

const std::vector<std::string>& command_names();
/// Runs one command; module errors propagate.
CommandResult run_command(const std::string& cmd, const ProblemFile& problem, const CommandOptions& options);
/// 2 for input errors, 3 for capability errors, 4 for bound errors and 1
/// for anything else.
int exit_code_for(const std::exception& e);
/// {"schema": 1, "command": ..., "error": {"kind", "message", ...}}
nlohmann::json error_json(const std::string& cmd, const std::exception& e);

} // namespace binomeso
