#include "binomeso/linalg.hpp"

namespace binomeso {

std::vector<std::size_t> row_reduce(const Field& k, FieldMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = k.inv(m[r][c]);
    for (auto& x : m[r]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t field_rank(const Field& k, FieldMatrix m, std::size_t cols) {
  return row_reduce(k, m, cols).size();
}

std::vector<std::vector<Scalar>> field_kernel(const Field& k, FieldMatrix m, std::size_t cols) {
  auto pivots = row_reduce(k, m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = k.neg(m[r][f]);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace binomeso
