#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace binomeso {

/// Exponent vector u of x^u. Comparison operators are lexicographic on the
/// raw vector (a storage order, not a term order).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<int32_t> e) : e_(std::move(e)) {}
  Monomial(std::initializer_list<int32_t> e) : e_(e) {}

  std::size_t size() const { return e_.size(); }
  int32_t operator[](std::size_t i) const { return e_[i]; }
  int32_t& operator[](std::size_t i) { return e_[i]; }
  std::span<const int32_t> exponents() const { return e_; }
  const std::vector<int32_t>& vec() const { return e_; }

  long degree() const {
    long d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  bool is_one() const {
    for (auto v : e_)
      if (v) return false;
    return true;
  }
  /// u | v iff componentwise u <= v.
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  /// True when no variable occurs in both.
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  /// this / o; requires o | this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
    return r;
  }
  /// Support restricted to the variables flagged in `mask`.
  bool supported_in(const std::vector<bool>& mask) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && !mask[i]) return false;
    return true;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }

private:
  std::vector<int32_t> e_;
};

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
/// Returns <0, 0, >0.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  const long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace binomeso
