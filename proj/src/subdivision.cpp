#include "conelab/subdivision.hpp"

#include <algorithm>

#include "conelab/lattice.hpp"

namespace conelab {

namespace {

int cmp_ratvec(const RatVec& a, const RatVec& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rat x = i < a.size() ? a[i] : Rat(0);
    Rat y = i < b.size() ? b[i] : Rat(0);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

Rat norm_sq(const RatVec& v) {
  Rat s(0);
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

std::vector<RatVec> aligned_generators(const LatticeCone& C) {
  std::vector<RatVec> out;
  out.reserve(C.dim());
  for (const auto& g : C.generators()) {
    IntLattice ray = lattice_intersect_span(C.lattice(), {to_ratvec(g)});
    if (ray.rank() != 1)
      throw ValidationError("lattice does not meet a generating ray");
    RatVec b = ray.basis_rows()[0];
    // orient along g: b = t*g for some nonzero rational t
    std::size_t i = 0;
    while (i < g.size() && g[i] == 0) ++i;
    if (b[i] / Rat(g[i]) < 0)
      for (auto& x : b) x = -x;
    out.push_back(std::move(b));
  }
  return out;
}

Int cone_index(const LatticeCone& C) {
  if (C.is_zero()) return Int(1);
  IntLattice sub = lattice_canonical(aligned_generators(C), C.ambient_dim());
  return lattice_index(sub, C.lattice());
}

bool is_smooth(const LatticeCone& C) {
  if (C.is_zero()) return true;
  return lattice_canonical(aligned_generators(C), C.ambient_dim()) == C.lattice();
}

std::vector<RatVec> box_points(const LatticeCone& C) {
  std::vector<RatVec> out;
  if (C.dim() == 0) return out;
  std::vector<RatVec> aligned = aligned_generators(C);
  std::vector<RatVec> basis = C.lattice().basis_rows();
  std::size_t n = aligned.size();

  // rows of A: integer coordinates of each aligned generator in the basis
  std::vector<RatVec> A;
  for (const auto& a : aligned) {
    auto c = coordinates_in(basis, a);
    if (!c) throw ValidationError("aligned generator escaped its lattice");
    A.push_back(padded(*c, n));
  }

  // candidate coordinate vectors live in the box spanned by the rows of A
  std::vector<Int> lo(n, 0), hi(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Rat a = A[i][j];
      Int z(a.get_num() / a.get_den());  // A is integral
      if (z < 0)
        lo[j] += z;
      else
        hi[j] += z;
    }

  std::vector<Int> x(n);
  auto emit = [&]() {
    RatVec xr(n);
    for (std::size_t j = 0; j < n; ++j) xr[j] = Rat(x[j]);
    if (vec_zero(xr)) return;
    auto t = coordinates_in(A, xr);
    if (!t) return;
    for (const auto& ti : *t)
      if (ti < 0 || ti >= 1) return;
    RatVec p(C.ambient_dim(), Rat(0));
    for (std::size_t j = 0; j < n; ++j) p = vec_add(p, vec_scale(xr[j], basis[j]));
    out.push_back(std::move(p));
  };
  // odometer over the integer box
  std::vector<Int> cur(lo);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) x[j] = cur[j];
    emit();
    std::size_t j = 0;
    while (j < n) {
      cur[j] += 1;
      if (cur[j] <= hi[j]) break;
      cur[j] = lo[j];
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

std::vector<LatticeCone> subdivide_at(const LatticeCone& C, const RatVec& p) {
  if (!C.lattice().contains(p))
    throw ValidationError("subdivision point must lie in the cone's lattice");
  auto t = C.ray_coordinates(p);
  if (!t) throw ValidationError("subdivision point must lie in the cone");
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if ((*t)[i] < 0) throw ValidationError("subdivision point must lie in the cone");
    if ((*t)[i] > 0) supp.push_back(i);
  }
  if (supp.empty()) throw ValidationError("subdivision point must be nonzero");
  if (supp.size() == 1)
    throw ValidationError("subdivision point lies on a generating ray");
  IntVec ray = primitive_direction(p);
  std::vector<LatticeCone> pieces;
  for (std::size_t i : supp) {
    std::vector<IntVec> gens;
    for (std::size_t j = 0; j < C.generators().size(); ++j)
      gens.push_back(j == i ? ray : C.generators()[j]);
    pieces.push_back(LatticeCone::from_parts(std::move(gens), C.lattice(), C.ambient_dim()));
  }
  return pieces;
}

std::vector<LatticeCone> smooth_subdivision(const LatticeCone& C) {
  std::vector<RatVec> box = box_points(C);
  if (box.empty()) return {C};
  const RatVec* best = &box[0];
  Rat best_norm = norm_sq(box[0]);
  for (std::size_t i = 1; i < box.size(); ++i) {
    Rat ns = norm_sq(box[i]);
    if (ns < best_norm || (ns == best_norm && cmp_ratvec(box[i], *best) < 0)) {
      best = &box[i];
      best_norm = ns;
    }
  }
  std::vector<LatticeCone> out;
  for (const auto& piece : subdivide_at(C, *best))
    for (auto& c : smooth_subdivision(piece)) out.push_back(std::move(c));
  return out;
}

ConeElement triangulate(const std::vector<IntVec>& generators,
                        const std::optional<std::vector<RatVec>>& lattice,
                        std::optional<std::size_t> ambient_dim) {
  std::size_t ambient = ambient_dim.value_or(0);
  std::vector<IntVec> gens;
  for (const auto& g : generators) {
    if (trimmed_dim(g) == 0) throw ValidationError("zero vector cannot generate a ray");
    IntVec p = primitive_direction(to_ratvec(g));
    ambient = std::max(ambient, trimmed_dim(g));
    bool dup = false;
    for (const auto& h : gens)
      if (vec_eq(to_ratvec(h), to_ratvec(p))) dup = true;
    if (!dup) gens.push_back(std::move(p));
  }
  if (lattice)
    for (const auto& b : *lattice) ambient = std::max(ambient, trimmed_dim(b));
  for (auto& g : gens) g = padded(std::move(g), ambient);

  std::size_t r = rank(to_ratvecs(gens));

  // strong convexity: reject any positive circuit (all-one-sign dependency);
  // a minimal-support one has <= r+1 rays and a one-dimensional kernel
  std::size_t n = gens.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) ++size;
    if (size < 2 || size > r + 1) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) idx.push_back(i);
    RatMat rows(ambient, RatVec(size, Rat(0)));
    for (std::size_t c = 0; c < size; ++c)
      for (std::size_t j = 0; j < ambient; ++j) rows[j][c] = Rat(gens[idx[c]][j]);
    std::vector<RatVec> ker = kernel_basis(rows, size);
    if (ker.size() != 1) continue;
    bool pos = true, neg = true;
    for (const auto& c : ker[0]) {
      if (c <= 0) pos = false;
      if (c >= 0) neg = false;
    }
    if (pos || neg) throw ValidationError("not strongly convex");
  }

  IntLattice L = lattice ? IntLattice::from_vectors(*lattice, ambient)
                         : lattice_canonical(to_ratvecs(gens), ambient);
  if (lattice) {
    std::vector<RatVec> span = to_ratvecs(gens);
    if (L.rank() != r) throw ValidationError("lattice does not span the cone's span");
    for (const auto& b : L.basis_rows())
      if (!coordinates_in(span, b))
        throw ValidationError("lattice does not span the cone's span");
  }

  // placing order: descending lexicographic
  std::sort(gens.begin(), gens.end(), [](const IntVec& a, const IntVec& b) {
    return cmp_ratvec(to_ratvec(a), to_ratvec(b)) > 0;
  });

  std::vector<std::vector<IntVec>> cells;
  for (const auto& v : gens) {
    RatVec vr = to_ratvec(v);
    if (cells.empty()) {
      cells.push_back({v});
      continue;
    }
    bool inside = false;
    for (const auto& cell : cells) {
      auto t = coordinates_in(to_ratvecs(cell), vr);
      if (!t) continue;
      bool nonneg = true;
      for (const auto& ti : *t)
        if (ti < 0) nonneg = false;
      if (nonneg) {
        inside = true;
        break;
      }
    }
    if (inside) continue;

    std::vector<RatVec> processed;
    for (const auto& cell : cells)
      for (const auto& g : cell) processed.push_back(to_ratvec(g));
    if (!coordinates_in(processed, vr)) {
      // v leaves the current span: every maximal cell is joined with v
      for (auto& cell : cells) cell.push_back(v);
      continue;
    }

    // v in span but outside: cone over the visible part of the boundary.
    // Boundary facets belong to exactly one maximal cell (pure fan).
    std::vector<std::vector<IntVec>> grown;
    for (const auto& cell : cells) {
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<IntVec> facet;
        for (std::size_t i = 0; i < cell.size(); ++i)
          if (i != drop) facet.push_back(cell[i]);
        std::size_t owners = 0;
        for (const auto& other : cells) {
          bool contains_facet = true;
          for (const auto& f : facet) {
            bool found = false;
            for (const auto& g : other)
              if (vec_eq(to_ratvec(f), to_ratvec(g))) found = true;
            if (!found) contains_facet = false;
          }
          if (contains_facet) ++owners;
        }
        if (owners != 1 || facet.empty()) continue;
        // in-span normal of the facet's hyperplane, oriented toward the cell:
        // the component of the dropped generator orthogonal to the facet
        RatVec normal = project_orthogonal(InnerProductForm::standard(),
                                           to_ratvec(cell[drop]), to_ratvecs(facet));
        if (dot(normal, vr) < 0) {
          std::vector<IntVec> fresh = facet;
          fresh.push_back(v);
          grown.push_back(std::move(fresh));
        }
      }
    }
    for (auto& cell : grown) cells.push_back(std::move(cell));
  }

  ConeElement out;
  for (const auto& cell : cells) {
    IntLattice Lf = lattice_intersect_span(L, to_ratvecs(cell));
    out.add_term(LatticeCone::from_parts(cell, std::move(Lf), ambient), Rat(1));
  }
  return out;
}

}  // namespace conelab
