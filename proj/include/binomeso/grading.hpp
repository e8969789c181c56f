#pragma once

#include "binomeso/cellular.hpp"
#include "binomeso/io.hpp"
#include "binomeso/lattice.hpp"

#include <gmpxx.h>

#include <vector>

namespace binomeso {

using DegreeVector = std::vector<long>;

/// A positive grading: full rank, columns spanning Z^d, and a functional h
/// with every entry of hA strictly positive.
struct GradingMatrix {
  IntMatrix a;
  std::vector<mpq_class> h;
  /// hA scaled to coprime positive integers.
  std::vector<long> weights;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }
  /// h . beta on the same scale as `weights`.
  mpq_class weight_of(const DegreeVector& beta) const;
};

/// Rational h with hA >= 1 entrywise by exact Fourier-Motzkin elimination,
/// or nothing when no such h exists.
std::optional<std::vector<mpq_class>> positivity_certificate(const IntMatrix& a);
/// Throws InputError naming the failed condition.
GradingMatrix check_positive_grading(const IntMatrix& a);
/// The grading [1 1 ... 1].
GradingMatrix standard_grading(std::size_t n);

DegreeVector degree(const Monomial& m, const IntMatrix& a);
/// Both terms of every reduced basis element share a degree.
bool is_homogeneous(const Ideal& ideal, const IntMatrix& a);
bool is_homogeneous(const Polynomial& p, const IntMatrix& a);

/// All u in N^n with A u = beta. Throws when more than `cap` candidates
/// would be visited.
std::vector<Monomial> monomials_of_degree(const GradingMatrix& g, const DegreeVector& beta,
                                          long cap = 1'000'000);
/// Monomials in the flagged variables with weight at most `budget`, sorted by
/// weight and then by graded reverse lex.
std::vector<Monomial> monomials_up_to_weight(const GradingMatrix& g, const std::vector<bool>& vars,
                                             long budget);
/// Integer weight of x^u under `weights`.
long monomial_weight(const GradingMatrix& g, const Monomial& u);

long hilbert_function(const Ideal& ideal, const GradingMatrix& g, const DegreeVector& beta,
                      long cap = 1'000'000);

struct ToralReport {
  bool toral = false;
  std::vector<bool> sigma;
  LatticeCharacter lattice;
  IntLattice kernel; // ker_Z(A_sigma)
  long dimension = 0;
  long rank_a_sigma = 0;
};

/// The columns of A indexed by sigma.
ZMatrix columns(const IntMatrix& a, const std::vector<bool>& sigma);
long matrix_rank(const ZMatrix& m);

/// Toral iff Sat(L) = ker_Z(A_sigma), cross-checked against
/// dim(R/I) = rank(A_sigma). Input must be cellular with a lattice sigma-part.
ToralReport toral_classify(const Ideal& ideal, const GradingMatrix& g);
ToralReport toral_classify(const Ideal& ideal, const std::vector<bool>& sigma, const GradingMatrix& g);
/// The prime I(chi) + m_{sigma^c}, given by its saturated lattice on sigma.
bool toral_prime_test(const IntLattice& saturated, const std::vector<bool>& sigma, const GradingMatrix& g);

/// Evidence of unbounded Hilbert function: a kernel vector k of A_sigma
/// outside Sat(L), and HF values at t * deg(x^{k+}) for t = 1..steps.
struct AndeanCertificate {
  ZVector direction;
  DegreeVector step;
  std::vector<long> values;
};
std::optional<AndeanCertificate> andean_certificate(const Ideal& ideal, const ToralReport& report,
                                                    const GradingMatrix& g, int steps = 4);

} // namespace binomeso
