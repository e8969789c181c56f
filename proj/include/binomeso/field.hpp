#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace binomeso {

/// Base class of every error raised by the library. The CLI maps the
/// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (exit code 2).
class InputError : public Error {
public:
  using Error::Error;
};

/// The computation needs something the engine does not provide, e.g. roots
/// of unity missing from the coefficient field (exit code 3).
class CapabilityError : public Error {
public:
  using Error::Error;
};

/// A post-hoc verification failed with the degree bound in effect (exit
/// code 4).
class BoundError : public Error {
public:
  BoundError(const std::string& what, long bound) : Error(what), bound_(bound) {}
  long bound() const { return bound_; }

private:
  long bound_;
};

/// Raised when a character extension needs roots of unity that the field
/// lacks. `required_order` is the N of the cyclotomic field QQ(zeta_N) to
/// re-run over.
class MissingRootsError : public CapabilityError {
public:
  MissingRootsError(const std::string& what, long required_order)
      : CapabilityError(what), required_order_(required_order) {}
  long required_order() const { return required_order_; }

private:
  long required_order_;
};

enum class FieldKind { rationals, prime_field, cyclotomic };

/// Which exact field the coefficients live in. Cyclotomic orders 1 and 2 are
/// normalized to the rationals since QQ(zeta_1) = QQ(zeta_2) = QQ.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  long modulus = 0; // p for prime fields, N for cyclotomic fields

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(long p);
  static FieldSpec cyclotomic(long n);

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
  long characteristic() const { return kind == FieldKind::prime_field ? modulus : 0; }
};

/// A field element in canonical form. The representation is a coefficient
/// vector in the power basis 1, zeta, zeta^2, ... (length 1 for QQ and
/// GF(p)); zero is the empty vector and trailing zeros are never stored, so
/// equality is representational.
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  /// True when the element lies in the prime subfield (a rational number).
  bool is_rational() const { return c_.size() <= 1; }
  mpq_class rational_value() const { return c_.empty() ? mpq_class(0) : c_[0]; }

  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Arbitrary but deterministic total order, used for sorting outputs.
  bool operator<(const Scalar& o) const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

/// Arithmetic in one exact field. Cheap to copy; all members are const.
class Field {
public:
  Field() : Field(FieldSpec::rationals()) {}
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  long characteristic() const { return spec_.characteristic(); }
  /// Degree over the prime field.
  int degree() const { return static_cast<int>(phi_.size()) - 1; }

  Scalar zero() const { return {}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long v) const { return from_rational(mpq_class(v)); }
  Scalar from_rational(const mpq_class& q) const;
  /// The generator zeta_N of a cyclotomic field; -1 for the rationals.
  Scalar generator() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, long e) const;
  bool is_one(const Scalar& a) const { return a == one(); }

  /// Multiplicative order of `a` if it is a root of unity, else 0.
  long root_of_unity_order(const Scalar& a) const;
  /// Largest M such that every M-th root of unity lies in the field.
  long roots_of_unity_exponent() const;
  /// A primitive k-th root of unity, or nullopt-like empty scalar when the
  /// field does not contain one.
  bool has_primitive_root(long k) const { return roots_of_unity_exponent() % k == 0; }
  Scalar primitive_root(long k) const;
  /// All solutions of y^d = c in the field. Throws MissingRootsError when a
  /// cyclotomic extension would contain them and CapabilityError otherwise.
  std::vector<Scalar> nth_roots(const Scalar& c, long d) const;

  std::string to_string(const Scalar& a) const;
  bool operator==(const Field& o) const { return spec_ == o.spec_; }

private:
  Scalar reduce(std::vector<mpq_class> c) const;
  Scalar make_prime(mpz_class v) const;

  FieldSpec spec_;
  std::vector<mpq_class> phi_; // monic minimal polynomial of the generator
};

bool is_prime(long p);
/// Coefficients (low degree first) of the N-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic_polynomial(long n);

} // namespace binomeso
