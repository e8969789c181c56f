#pragma once

#include "binomeso/groebner.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace binomeso {

using ZVector = std::vector<mpz_class>;
using ZMatrix = std::vector<ZVector>;

ZMatrix to_zmatrix(const std::vector<std::vector<long>>& m);
ZMatrix identity_matrix(std::size_t n);
ZMatrix multiply(const ZMatrix& a, const ZMatrix& b);
/// Determinant by fraction-free elimination.
mpz_class determinant(const ZMatrix& m);

/// U * B * V = D with D diagonal, d_1 | d_2 | ... and U, V unimodular.
/// `v_inverse` is V^{-1}, tracked alongside V.
struct SmithDecomposition {
  ZMatrix u, v, v_inverse, d;
  ZVector divisors; // the nonzero diagonal entries
  std::size_t rank() const { return divisors.size(); }
};

SmithDecomposition smith_normal_form(const ZMatrix& b);

/// Sublattice of Z^n kept in row Hermite normal form (pivots strictly
/// increasing, positive, entries above a pivot reduced modulo it), so two
/// lattices are equal iff their bases are.
class IntLattice {
public:
  IntLattice() = default;
  explicit IntLattice(std::size_t n) : n_(n) {}
  /// Span of arbitrary generators.
  static IntLattice span(std::size_t n, const ZMatrix& generators);

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const ZMatrix& basis() const { return basis_; }
  /// Integer coordinates of v in the basis, if v lies in the lattice.
  std::optional<ZVector> coordinates(const ZVector& v) const;
  bool contains(const ZVector& v) const { return coordinates(v).has_value(); }
  bool contains(const IntLattice& o) const;
  bool operator==(const IntLattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

private:
  std::size_t n_ = 0;
  ZMatrix basis_;
};

/// Index [outer : inner] for lattices of equal rank; throws otherwise.
mpz_class lattice_index(const IntLattice& inner, const IntLattice& outer);

IntLattice saturate_lattice(const IntLattice& l);
/// Largest intermediate lattice with p-power index over L (L itself for p = 0).
IntLattice sat_p(const IntLattice& l, long p);
/// Largest intermediate lattice with index prime to p over L (Sat(L) for p = 0).
IntLattice sat_p_prime(const IntLattice& l, long p);
/// ker_Z of the integer matrix A (vectors x with A x = 0).
IntLattice kernel_lattice(const ZMatrix& a);

/// Homomorphism L -> k*, stored by its values on the Hermite basis of L.
class LatticeCharacter {
public:
  LatticeCharacter() = default;
  /// Values given on arbitrary generators; consistency is checked and a
  /// relation with value other than 1 raises an error.
  LatticeCharacter(const Field& field, std::size_t n, const ZMatrix& generators,
                   const std::vector<Scalar>& values);
  static LatticeCharacter trivial(const Field& field, const IntLattice& l);

  const IntLattice& lattice() const { return lattice_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Field& field() const { return field_; }
  /// rho(v); throws when v is outside the lattice.
  Scalar operator()(const ZVector& v) const;
  bool operator==(const LatticeCharacter& o) const {
    return lattice_ == o.lattice_ && values_ == o.values_;
  }

private:
  Field field_;
  IntLattice lattice_;
  std::vector<Scalar> values_;
};

/// All characters on `outer` restricting to rho. Throws MissingRootsError
/// naming the cyclotomic order that would supply the roots.
std::vector<LatticeCharacter> character_extensions(const LatticeCharacter& rho, const IntLattice& outer);

/// Smallest N such that QQ(zeta_N) contains every root needed to extend rho
/// to Sat(L) (characteristic zero only).
long required_cyclotomic_order(const LatticeCharacter& rho);

/// I(rho) in `ring`, lattice coordinate k living on variable vars[k]:
/// binomials of a basis, saturated by the product of those variables.
Ideal lattice_ideal(const RingPtr& ring, const LatticeCharacter& rho, const std::vector<std::size_t>& vars);
Ideal lattice_ideal(const RingPtr& ring, const LatticeCharacter& rho);

/// Lattice and character of I cap k[sigma] for a sigma-cellular I. The
/// lattice lives in Z^{|sigma|}, coordinates in increasing variable order.
LatticeCharacter lattice_of_cellular(const Ideal& ideal, const std::vector<bool>& sigma);

/// x^{b+} - c x^{b-} in the ring, lattice coordinate k on variable vars[k].
Polynomial lattice_binomial(const RingPtr& ring, const ZVector& b, const Scalar& c,
                            const std::vector<std::size_t>& vars);

std::vector<std::size_t> indices_of(const std::vector<bool>& mask);

} // namespace binomeso
