#include "conelab/lattice.hpp"

#include <algorithm>

namespace conelab {

namespace {

// Trailing all-zero columns do not distinguish lattices under the filtration
// embedding, so comparisons run on trimmed rows.
IntMat trimmed_rows(const IntMat& m) {
  std::size_t k = 0;
  for (const auto& r : m) k = std::max(k, trimmed_dim(r));
  IntMat t;
  t.reserve(m.size());
  for (const auto& r : m) t.emplace_back(r.begin(), r.begin() + std::min(k, r.size()));
  for (auto& r : t) r.resize(k, Int(0));
  return t;
}

}  // namespace

IntLattice IntLattice::zero(std::size_t ambient_dim) {
  IntLattice l;
  l.dim_ = ambient_dim;
  return l;
}

IntLattice IntLattice::from_vectors(const std::vector<RatVec>& gens, std::size_t ambient_dim) {
  IntLattice l;
  l.dim_ = ambient_dim;
  Int den(1);
  for (const auto& v : gens) {
    l.dim_ = std::max(l.dim_, trimmed_dim(v));
    for (const auto& x : v) {
      Int d = x.get_den();
      den = den / gcd(den, d) * d;
    }
  }
  IntMat rows;
  for (const auto& v : gens) {
    if (vec_zero(v)) continue;
    IntVec row(l.dim_, Int(0));
    for (std::size_t i = 0; i < std::min(v.size(), l.dim_); ++i) {
      Rat y = v[i] * Rat(den);
      row[i] = y.get_num();
    }
    rows.push_back(std::move(row));
  }
  l.basis_ = hnf(std::move(rows));
  Int content = den;
  for (const auto& r : l.basis_)
    for (const auto& x : r) content = gcd(content, x);
  if (content > 1) {
    den /= content;
    for (auto& r : l.basis_)
      for (auto& x : r) x /= content;
  }
  l.denom_ = l.basis_.empty() ? Int(1) : den;
  return l;
}

std::vector<RatVec> IntLattice::basis_rows() const {
  std::vector<RatVec> rows;
  rows.reserve(basis_.size());
  for (const auto& r : basis_) {
    RatVec v = to_ratvec(r);
    if (denom_ != 1)
      for (auto& x : v) x /= Rat(denom_);
    rows.push_back(std::move(v));
  }
  return rows;
}

bool IntLattice::contains(const RatVec& v) const {
  if (vec_zero(v)) return true;
  auto coords = coordinates_in(basis_rows(), v);
  if (!coords) return false;
  for (const auto& c : *coords)
    if (c.get_den() != 1) return false;
  return true;
}

bool IntLattice::operator==(const IntLattice& o) const {
  return denom_ == o.denom_ && trimmed_rows(basis_) == trimmed_rows(o.basis_);
}

bool IntLattice::operator<(const IntLattice& o) const {
  IntMat a = trimmed_rows(basis_), b = trimmed_rows(o.basis_);
  if (a.size() != b.size()) return a.size() < b.size();
  if (denom_ != o.denom_) return denom_ < o.denom_;
  return a < b;
}

std::string IntLattice::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ",";
    s += vec_str(basis_[i]);
  }
  s += "]";
  if (denom_ != 1) s += "/" + denom_.get_str();
  return s;
}

IntLattice lattice_canonical(const std::vector<RatVec>& vectors, std::size_t ambient_dim) {
  return IntLattice::from_vectors(vectors, ambient_dim);
}

IntLattice lattice_intersect_span(const IntLattice& L, const std::vector<RatVec>& V) {
  std::size_t k = L.ambient_dim();
  for (const auto& v : V) k = std::max(k, trimmed_dim(v));
  if (L.rank() == 0) return IntLattice::zero(k);
  // span_Q(V) = annihilator of ann(V) under the standard pairing
  std::vector<RatVec> ann = kernel_basis(RatMat(V.begin(), V.end()), k);
  if (ann.empty()) return L;
  std::vector<RatVec> B = L.basis_rows();
  std::size_t r = B.size();
  IntMat constraints;
  for (const auto& n : ann) {
    RatVec row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = dot(n, B[i]);
    if (vec_zero(row)) continue;
    IntVec cleared(r, Int(0));
    Int den(1);
    for (const auto& x : row) {
      Int d = x.get_den();
      den = den / gcd(den, d) * d;
    }
    for (std::size_t i = 0; i < r; ++i) cleared[i] = Rat(row[i] * Rat(den)).get_num();
    constraints.push_back(std::move(cleared));
  }
  if (constraints.empty()) return L;
  IntMat coeffs = int_kernel(constraints, r);
  std::vector<RatVec> gens;
  for (const auto& c : coeffs) {
    RatVec g(k, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) g = vec_add(g, vec_scale(Rat(c[i]), B[i]));
    gens.push_back(std::move(g));
  }
  return IntLattice::from_vectors(gens, k);
}

Int lattice_index(const IntLattice& sub, const IntLattice& sup) {
  if (sub.rank() != sup.rank())
    throw ValidationError("lattice index requires equal ranks");
  std::vector<RatVec> sup_rows = sup.basis_rows();
  RatMat coeffs;
  for (const auto& v : sub.basis_rows()) {
    auto c = coordinates_in(sup_rows, v);
    if (!c) throw ValidationError("lattice index: subgroup not contained in the span");
    for (const auto& x : *c)
      if (x.get_den() != 1)
        throw ValidationError("lattice index: first argument is not a subgroup of the second");
    coeffs.push_back(*c);
  }
  Rat d = det(coeffs);
  if (d < 0) d = -d;
  if (d == 0 && sub.rank() > 0)
    throw ValidationError("lattice index: degenerate subgroup basis");
  return sub.rank() == 0 ? Int(1) : d.get_num();
}

}  // namespace conelab
