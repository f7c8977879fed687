#pragma once

#include <optional>

#include "conelab/formal_sum.hpp"
#include "conelab/inner_product.hpp"
#include "conelab/lattice.hpp"

namespace conelab {

// Simplicial rational cone together with a designated full-rank lattice in
// its linear span. Generators are primitive integer vectors in sorted order,
// so equal cones are structurally equal; comparisons ignore trailing zero
// coordinates (filtration embedding).
class LatticeCone {
 public:
  LatticeCone() : ambient_(0) {}  // the zero cone J

  static LatticeCone make(const std::vector<IntVec>& generators,
                          const std::optional<std::vector<RatVec>>& lattice = std::nullopt,
                          std::optional<std::size_t> ambient_dim = std::nullopt);

  // Assembles a cone from parts already known to satisfy the invariants
  // (generators primitive and independent, lattice spanning their span).
  static LatticeCone from_parts(std::vector<IntVec> generators, IntLattice lattice,
                                std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  const std::vector<IntVec>& generators() const { return gens_; }
  const IntLattice& lattice() const { return lattice_; }

  // Rational coordinates of v in the generator basis; nullopt outside span.
  std::optional<RatVec> ray_coordinates(const RatVec& v) const;

  bool operator==(const LatticeCone& o) const;
  bool operator!=(const LatticeCone& o) const { return !(*this == o); }
  bool operator<(const LatticeCone& o) const;

  std::string str() const;

 private:
  std::size_t ambient_;
  std::vector<IntVec> gens_;
  IntLattice lattice_;
};

using ConeElement = FormalSum<LatticeCone>;

LatticeCone make_cone(const std::vector<IntVec>& generators,
                      const std::optional<std::vector<RatVec>>& lattice = std::nullopt,
                      std::optional<std::size_t> ambient_dim = std::nullopt);

// All 2^dim faces, each carrying the saturated lattice L_C intersect span(F).
std::vector<LatticeCone> faces(const LatticeCone& C);

bool is_face_of(const LatticeCone& F, const LatticeCone& C);

// Q-orthogonal projection of C (generators and lattice) onto span(F)^perp.
LatticeCone transverse_cone(const InnerProductForm& Q, const LatticeCone& C,
                            const LatticeCone& F);

// Cone on the union of generators with the sum of the lattices.
LatticeCone minkowski_product(const LatticeCone& a, const LatticeCone& b);

// Q(u, v) = 0 for every pair of lattice basis vectors.
bool are_orthogonal(const InnerProductForm& Q, const LatticeCone& a, const LatticeCone& b);

std::string cone_element_str(const ConeElement& x);

}  // namespace conelab
