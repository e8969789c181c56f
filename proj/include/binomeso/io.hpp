#pragma once

#include "binomeso/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace binomeso {

using IntMatrix = std::vector<std::vector<long>>;

/// Parsed problem file: ring, optional grading matrix and the generators.
struct ProblemFile {
  RingPtr ring;
  std::optional<IntMatrix> grading;
  std::vector<Polynomial> generators;
  /// Optional "component:" blocks: a decomposition of the ideal supplied
  /// from elsewhere.
  std::vector<std::vector<Polynomial>> components;

  Ideal ideal() const { return Ideal(ring, generators); }
};

/// Parses "QQ", "GF(p)" or "QQ(zeta_N)".
FieldSpec parse_field(const std::string& text);
/// Parses a polynomial expression with +, -, *, ^, parentheses, integer
/// and rational constants, and "zeta" for the cyclotomic generator.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);
/// Comma separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, const std::string& text);
/// Parses "x^2*y" style monomials (also "1").
Monomial parse_monomial(const RingPtr& ring, const std::string& text);
IntMatrix parse_matrix(const std::string& text);

ProblemFile parse_problem(const std::string& text);
ProblemFile read_problem_file(const std::string& path);
std::string print_problem(const ProblemFile& problem);

/// Convenience for tests and small drivers.
Ideal make_ideal(const RingPtr& ring, const std::string& gens);

} // namespace binomeso
