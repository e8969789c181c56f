#include "binomeso/lattice.hpp"

#include <functional>
#include <numeric>

namespace binomeso {

ZMatrix to_zmatrix(const std::vector<std::vector<long>>& m) {
  ZMatrix out;
  for (const auto& row : m) {
    ZVector r;
    for (long v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

ZMatrix identity_matrix(std::size_t n) {
  ZMatrix m(n, ZVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMatrix multiply(const ZMatrix& a, const ZMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  ZMatrix out(a.size(), ZVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

mpz_class determinant(const ZMatrix& input) {
  // Bareiss fraction-free elimination
  ZMatrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

SmithDecomposition smith_normal_form(const ZMatrix& b) {
  SmithDecomposition s;
  const std::size_t rows = b.size(), cols = rows ? b[0].size() : 0;
  s.d = b;
  s.u = identity_matrix(rows);
  s.v = identity_matrix(cols);
  s.v_inverse = identity_matrix(cols);
  auto& d = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : d) std::swap(r[i], r[j]);
    for (auto& r : s.v) std::swap(r[i], r[j]);
    std::swap(s.v_inverse[i], s.v_inverse[j]);
  };
  // row_i -= q * row_t
  auto row_op = [&](std::size_t i, std::size_t t, const mpz_class& q) {
    for (std::size_t j = 0; j < cols; ++j) d[i][j] -= q * d[t][j];
    for (std::size_t j = 0; j < rows; ++j) s.u[i][j] -= q * s.u[t][j];
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const mpz_class& q) {
    for (std::size_t i = 0; i < rows; ++i) d[i][j] -= q * d[i][t];
    for (std::size_t i = 0; i < cols; ++i) s.v[i][j] -= q * s.v[i][t];
    for (std::size_t i = 0; i < cols; ++i) s.v_inverse[t][i] += q * s.v_inverse[j][i];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (bi == rows || abs(d[i][j]) < abs(d[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        row_op(i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        col_op(j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_op(t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t < rows && t < cols && d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.u[t]) x = -x;
    }
    if (d[t][t] == 0) break;
    s.divisors.push_back(d[t][t]);
  }
  return s;
}

namespace {

/// Row Hermite form; with `values` the character values are carried along
/// the row operations, and rows that vanish must carry the value 1.
ZMatrix hermite_rows(std::size_t n, ZMatrix rows, const Field* field, std::vector<Scalar>* values) {
  auto combine = [&](std::size_t i, std::size_t r, const mpz_class& q) {
    // row_i -= q * row_r
    for (std::size_t c = 0; c < n; ++c) rows[i][c] -= q * rows[r][c];
    if (values) (*values)[i] = field->mul((*values)[i], field->pow((*values)[r], -q.get_si()));
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      std::size_t count = 0;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0) {
          ++count;
          if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
        }
      if (count == 0) break;
      if (best != r) {
        std::swap(rows[best], rows[r]);
        if (values) std::swap((*values)[best], (*values)[r]);
      }
      if (count == 1) break;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        combine(i, r, q);
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& x : rows[r]) x = -x;
      if (values) (*values)[r] = field->inv((*values)[r]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0) combine(i, r, q);
    }
    ++r;
  }
  if (values) {
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!field->is_one((*values)[i]))
        throw Error("inconsistent character: a relation among the generators has value " +
                    field->to_string((*values)[i]));
    values->resize(r);
  }
  rows.resize(r);
  return rows;
}

long valuation(mpz_class d, long p) {
  long v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  return v;
}

IntLattice scaled_saturation(const IntLattice& l, const std::function<mpz_class(const mpz_class&)>& factor) {
  if (l.rank() == 0) return l;
  SmithDecomposition s = smith_normal_form(l.basis());
  ZMatrix gens;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    ZVector row = s.v_inverse[i];
    mpz_class f = factor(s.divisors[i]);
    for (auto& x : row) x *= f;
    gens.push_back(std::move(row));
  }
  return IntLattice::span(l.ambient(), gens);
}

} // namespace

IntLattice IntLattice::span(std::size_t n, const ZMatrix& generators) {
  IntLattice l(n);
  for (const auto& g : generators)
    if (g.size() != n) throw Error("lattice generator of the wrong length");
  l.basis_ = hermite_rows(n, generators, nullptr, nullptr);
  return l;
}

std::optional<ZVector> IntLattice::coordinates(const ZVector& v) const {
  if (v.size() != n_) throw Error("vector of the wrong length");
  ZVector rest = v, coords;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0) ++p;
    if (rest[p] % b[p] != 0) return std::nullopt;
    mpz_class c = rest[p] / b[p];
    for (std::size_t j = 0; j < n_; ++j) rest[j] -= c * b[j];
    coords.push_back(c);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

bool IntLattice::contains(const IntLattice& o) const {
  for (const auto& b : o.basis())
    if (!contains(b)) return false;
  return true;
}

mpz_class lattice_index(const IntLattice& inner, const IntLattice& outer) {
  if (inner.rank() != outer.rank() || !outer.contains(inner))
    throw Error("lattice index needs nested lattices of equal rank");
  ZMatrix c;
  for (const auto& b : inner.basis()) c.push_back(*outer.coordinates(b));
  return abs(determinant(c));
}

IntLattice saturate_lattice(const IntLattice& l) {
  return scaled_saturation(l, [](const mpz_class&) { return mpz_class(1); });
}

IntLattice sat_p(const IntLattice& l, long p) {
  if (p == 0) return l;
  if (!is_prime(p)) throw Error("Sat_p needs a prime or zero");
  return scaled_saturation(l, [p](const mpz_class& d) {
    mpz_class r = d;
    while (r % p == 0) r /= p;
    return r;
  });
}

IntLattice sat_p_prime(const IntLattice& l, long p) {
  if (p == 0) return saturate_lattice(l);
  if (!is_prime(p)) throw Error("Sat'_p needs a prime or zero");
  return scaled_saturation(l, [p](const mpz_class& d) {
    mpz_class r = 1;
    for (long k = valuation(d, p); k > 0; --k) r *= p;
    return r;
  });
}

IntLattice kernel_lattice(const ZMatrix& a) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  if (a.empty()) return IntLattice::span(n, identity_matrix(n));
  SmithDecomposition s = smith_normal_form(a);
  ZMatrix gens;
  for (std::size_t j = s.rank(); j < n; ++j) {
    ZVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = s.v[i][j];
    gens.push_back(std::move(col));
  }
  return IntLattice::span(n, gens);
}

LatticeCharacter::LatticeCharacter(const Field& field, std::size_t n, const ZMatrix& generators,
                                   const std::vector<Scalar>& values)
    : field_(field), lattice_(n) {
  if (generators.size() != values.size()) throw Error("one character value per generator expected");
  for (const auto& v : values)
    if (v.is_zero()) throw Error("character values must be nonzero");
  std::vector<Scalar> vals = values;
  ZMatrix rows = hermite_rows(n, generators, &field_, &vals);
  lattice_ = IntLattice::span(n, rows);
  values_ = std::move(vals);
}

LatticeCharacter LatticeCharacter::trivial(const Field& field, const IntLattice& l) {
  return LatticeCharacter(field, l.ambient(), l.basis(), std::vector<Scalar>(l.rank(), field.one()));
}

Scalar LatticeCharacter::operator()(const ZVector& v) const {
  auto c = lattice_.coordinates(v);
  if (!c) throw Error("vector outside the character's lattice");
  Scalar out = field_.one();
  for (std::size_t i = 0; i < c->size(); ++i) out = field_.mul(out, field_.pow(values_[i], (*c)[i].get_si()));
  return out;
}

std::vector<LatticeCharacter> character_extensions(const LatticeCharacter& rho, const IntLattice& outer) {
  const IntLattice& inner = rho.lattice();
  const Field& field = rho.field();
  if (inner.rank() != outer.rank() || !outer.contains(inner))
    throw Error("character extension needs a finite-index superlattice");
  const std::size_t r = inner.rank();
  if (r == 0) return {rho};
  ZMatrix c;
  for (const auto& b : inner.basis()) c.push_back(*outer.coordinates(b));
  SmithDecomposition s = smith_normal_form(c);
  // inner basis b' = U b satisfies b'_i = d_i w'_i with w' = V^{-1} w
  std::vector<std::vector<Scalar>> choices(r);
  long missing = 0;
  for (std::size_t i = 0; i < r; ++i) {
    Scalar target = field.one();
    for (std::size_t j = 0; j < r; ++j)
      target = field.mul(target, field.pow(rho.values()[j], s.u[i][j].get_si()));
    try {
      choices[i] = field.nth_roots(target, s.divisors[i].get_si());
    } catch (const MissingRootsError& e) {
      missing = missing ? std::lcm(missing, e.required_order()) : e.required_order();
    }
  }
  if (missing)
    throw MissingRootsError("extending the character needs the cyclotomic field QQ(zeta_" +
                                std::to_string(missing) + ")",
                            missing);
  for (const auto& ch : choices)
    if (ch.empty()) return {};

  std::vector<LatticeCharacter> out;
  std::vector<std::size_t> pick(r, 0);
  while (true) {
    // chi on the outer Hermite basis: w = V w'
    std::vector<Scalar> vals;
    for (std::size_t k = 0; k < r; ++k) {
      Scalar v = field.one();
      for (std::size_t j = 0; j < r; ++j) v = field.mul(v, field.pow(choices[j][pick[j]], s.v[k][j].get_si()));
      vals.push_back(v);
    }
    out.emplace_back(field, outer.ambient(), outer.basis(), vals);
    std::size_t k = 0;
    while (k < r && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == r) break;
  }
  return out;
}

long required_cyclotomic_order(const LatticeCharacter& rho) {
  try {
    character_extensions(rho, saturate_lattice(rho.lattice()));
  } catch (const MissingRootsError& e) {
    return e.required_order();
  }
  const FieldSpec& spec = rho.field().spec();
  return spec.kind == FieldKind::cyclotomic ? spec.modulus : 1;
}

std::vector<std::size_t> indices_of(const std::vector<bool>& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

Polynomial lattice_binomial(const RingPtr& ring, const ZVector& b, const Scalar& c,
                            const std::vector<std::size_t>& vars) {
  Monomial plus(ring->nvars()), minus(ring->nvars());
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] > 0) plus[vars[k]] = static_cast<int32_t>(b[k].get_si());
    if (b[k] < 0) minus[vars[k]] = static_cast<int32_t>(-b[k].get_si());
  }
  return Polynomial::binomial(ring, plus, c, minus);
}

Ideal lattice_ideal(const RingPtr& ring, const LatticeCharacter& rho, const std::vector<std::size_t>& vars) {
  if (vars.size() != rho.lattice().ambient()) throw Error("lattice and variable list differ in size");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < rho.lattice().rank(); ++i)
    gens.push_back(lattice_binomial(ring, rho.lattice().basis()[i], rho.values()[i], vars));
  std::vector<bool> mask(ring->nvars(), false);
  for (auto v : vars) mask[v] = true;
  return saturate_variables(Ideal(ring, gens), mask);
}

Ideal lattice_ideal(const RingPtr& ring, const LatticeCharacter& rho) {
  std::vector<std::size_t> vars(ring->nvars());
  std::iota(vars.begin(), vars.end(), 0);
  return lattice_ideal(ring, rho, vars);
}

LatticeCharacter lattice_of_cellular(const Ideal& ideal, const std::vector<bool>& sigma) {
  const RingPtr& ring = ideal.ring();
  const Field& field = ring->field();
  std::vector<bool> others(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) others[i] = !sigma[i];
  Ideal part = eliminate(ideal, others);
  const auto vars = indices_of(sigma);
  ZMatrix diffs;
  std::vector<Scalar> values;
  for (const auto& g : part.basis().elements) {
    if (g.size() != 2)
      throw Error("the sigma-part " + part.to_string() + " is not a lattice ideal (element " + g.to_string() + ")");
    const Term& a = g.terms()[0];
    const Term& b = g.terms()[1];
    ZVector d;
    for (auto v : vars) d.emplace_back(a.mono[v] - b.mono[v]);
    diffs.push_back(std::move(d));
    values.push_back(field.neg(field.div(b.coeff, a.coeff)));
  }
  return LatticeCharacter(field, vars.size(), diffs, values);
}

} // namespace binomeso
