#include "conelab/matrix.hpp"

#include <algorithm>

namespace conelab {

namespace {

std::size_t max_cols(const RatMat& m) {
  std::size_t c = 0;
  for (const auto& r : m) c = std::max(c, r.size());
  return c;
}

void pad_rows(RatMat& m, std::size_t c) {
  for (auto& r : m) r.resize(c, Rat(0));
}

}  // namespace

std::vector<std::size_t> rref(RatMat& m) {
  std::size_t cols = max_cols(m);
  pad_rows(m, cols);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = m.size();
    for (std::size_t i = row; i < m.size(); ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> kernel_basis(const RatMat& rows, std::size_t k) {
  RatMat m = rows;
  pad_rows(m, k);
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(k, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(k, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m[i][f];
    basis.push_back(to_ratvec(primitive_form(x).first));
    basis.back().resize(k, Rat(0));
  }
  return basis;
}

std::optional<RatVec> coordinates_in(const std::vector<RatVec>& basis, const RatVec& v) {
  std::size_t n = basis.size();
  std::size_t k = trimmed_dim(v);
  for (const auto& b : basis) k = std::max(k, trimmed_dim(b));
  RatMat aug(k, RatVec(n + 1, Rat(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < std::min(k, basis[j].size()); ++i) aug[i][j] = basis[j][i];
  for (std::size_t i = 0; i < std::min(k, v.size()); ++i) aug[i][n] = v[i];
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

Rat det(RatMat m) {
  std::size_t n = m.size();
  pad_rows(m, n);
  Rat d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == n) return Rat(0);
    if (sel != col) {
      std::swap(m[col], m[sel]);
      d = -d;
    }
    d *= m[col][col];
    Rat inv = 1 / m[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

IntMat hnf(IntMat m) {
  std::size_t cols = 0;
  for (const auto& r : m) cols = std::max(cols, r.size());
  for (auto& r : m) r.resize(cols, Int(0));
  auto subtract = [&](IntVec& a, const IntVec& b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) a[j] -= q * b[j];
  };
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = top; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best == m.size() || cmp(abs(m[i][col]), abs(m[best][col])) < 0) best = i;
      }
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool cleared = true;
      for (std::size_t i = top + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        subtract(m[i], m[top], fdiv(m[i][col], m[top][col]));
        if (m[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[top][col] != 0) {
      if (m[top][col] < 0)
        for (auto& x : m[top]) x = -x;
      for (std::size_t i = 0; i < top; ++i) subtract(m[i], m[top], fdiv(m[i][col], m[top][col]));
      ++top;
    }
  }
  m.resize(top);
  return m;
}

IntMat int_kernel(const IntMat& m, std::size_t n) {
  std::size_t rows = m.size();
  // Rows of [m^T | I_n]: integer row operations preserve the bookkeeping
  // identity (prefix, suffix) = (m c, c), so zero-prefix rows of the Hermite
  // form span exactly the saturated kernel.
  IntMat aug(n, IntVec(rows + n, Int(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i)
      if (j < m[i].size()) aug[j][i] = m[i][j];
    aug[j][rows + j] = 1;
  }
  IntMat h = hnf(std::move(aug));
  IntMat kernel;
  for (const auto& r : h) {
    bool zero_prefix = true;
    for (std::size_t i = 0; i < rows && zero_prefix; ++i) zero_prefix = (r[i] == 0);
    if (!zero_prefix) continue;
    kernel.emplace_back(r.begin() + rows, r.end());
  }
  return hnf(std::move(kernel));
}

}  // namespace conelab
