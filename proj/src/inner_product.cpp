#include "conelab/inner_product.hpp"

#include <algorithm>

namespace conelab {

InnerProductForm InnerProductForm::from_gram(const std::map<std::size_t, RatMat>& grams) {
  for (const auto& [k, g] : grams) {
    std::string where = "gram matrix for dimension " + std::to_string(k);
    if (k == 0) throw ValidationError(where + ": dimension must be positive");
    if (g.size() != k) throw ValidationError(where + ": expected " + std::to_string(k) + " rows");
    for (const auto& row : g)
      if (row.size() != k) throw ValidationError(where + ": ragged row");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (g[i][j] != g[j][i])
          throw ValidationError(where + ": not symmetric at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
    for (std::size_t j = 1; j <= k; ++j) {
      RatMat minor(j, RatVec(j));
      for (std::size_t a = 0; a < j; ++a)
        for (std::size_t b = 0; b < j; ++b) minor[a][b] = g[a][b];
      if (det(minor) <= 0)
        throw ValidationError(where + ": not positive definite (leading minor " +
                              std::to_string(j) + ")");
    }
  }
  for (auto it = grams.begin(); it != grams.end(); ++it) {
    auto jt = it;
    for (++jt; jt != grams.end(); ++jt) {
      // restriction property: the larger matrix must agree on the leading block
      for (std::size_t a = 0; a < it->first; ++a)
        for (std::size_t b = 0; b < it->first; ++b)
          if (jt->second[a][b] != it->second[a][b])
            throw ValidationError("gram family: dimension " + std::to_string(jt->first) +
                                  " does not restrict to dimension " + std::to_string(it->first));
    }
  }
  InnerProductForm q;
  q.grams_ = grams;
  return q;
}

RatMat InnerProductForm::gram(std::size_t k) const {
  RatMat g(k, RatVec(k, Rat(0)));
  for (std::size_t i = 0; i < k; ++i) g[i][i] = 1;
  if (grams_.empty()) return g;
  auto it = grams_.lower_bound(k);
  const RatMat* src = nullptr;
  std::size_t m = 0;
  if (it != grams_.end()) {
    src = &it->second;
    m = k;
  } else {
    src = &grams_.rbegin()->second;
    m = grams_.rbegin()->first;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g[i][j] = (*src)[i][j];
  return g;
}

Rat InnerProductForm::operator()(const RatVec& u, const RatVec& v) const {
  if (grams_.empty()) return dot(u, v);
  std::size_t k = std::max(trimmed_dim(u), trimmed_dim(v));
  if (k == 0) return Rat(0);
  RatMat g = gram(k);
  Rat s(0);
  for (std::size_t i = 0; i < std::min(k, u.size()); ++i) {
    if (u[i] == 0) continue;
    Rat row(0);
    for (std::size_t j = 0; j < std::min(k, v.size()); ++j)
      if (v[j] != 0) row += g[i][j] * v[j];
    s += u[i] * row;
  }
  return s;
}

Rat inner_product(const InnerProductForm& Q, const RatVec& u, const RatVec& v) {
  return Q(u, v);
}

std::vector<RatVec> orthogonal_complement(const InnerProductForm& Q,
                                          const std::vector<RatVec>& V, std::size_t k) {
  RatMat rows;
  for (const auto& v : V) {
    RatVec row(k, Rat(0));
    RatVec e(k, Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      e[j] = 1;
      row[j] = Q(v, e);
      e[j] = 0;
    }
    rows.push_back(std::move(row));
  }
  return kernel_basis(rows, k);
}

RatVec project_orthogonal(const InnerProductForm& Q, const RatVec& v,
                          const std::vector<RatVec>& V) {
  if (V.empty()) return v;
  std::size_t n = V.size();
  RatMat aug(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Q(V[i], V[j]);
    aug[i][n] = Q(V[i], v);
  }
  std::vector<std::size_t> pivots = rref(aug);
  RatVec c(n, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) throw ValidationError("projection onto an inconsistent system");
    c[pivots[i]] = aug[i][n];
  }
  RatVec w = v;
  for (std::size_t i = 0; i < n; ++i)
    if (c[i] != 0) w = vec_sub(w, vec_scale(c[i], V[i]));
  return w;
}

}  // namespace conelab
