#pragma once

#include "conelab/matrix.hpp"

namespace conelab {

// Finitely generated subgroup of Q^k. Canonical representation: row Hermite
// normal form of the basis after clearing denominators, with the common
// denominator stored separately and gcd(matrix content, denominator) = 1.
// The canonical form is unique per subgroup, so structural equality decides
// lattice equality.
class IntLattice {
 public:
  IntLattice() : dim_(0), denom_(1) {}

  static IntLattice zero(std::size_t ambient_dim);
  static IntLattice from_vectors(const std::vector<RatVec>& gens, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& scaled_basis() const { return basis_; }
  const Int& denom() const { return denom_; }
  std::vector<RatVec> basis_rows() const;
  bool contains(const RatVec& v) const;

  bool operator==(const IntLattice& o) const;
  bool operator!=(const IntLattice& o) const { return !(*this == o); }
  bool operator<(const IntLattice& o) const;

  std::string str() const;

 private:
  std::size_t dim_;
  IntMat basis_;  // Hermite normal form, rows scaled by denom_
  Int denom_;
};

IntLattice lattice_canonical(const std::vector<RatVec>& vectors, std::size_t ambient_dim);

// Saturation: the subgroup of points of L lying in span_Q(V).
IntLattice lattice_intersect_span(const IntLattice& L, const std::vector<RatVec>& V);

// [sup : sub]; requires sub a finite-index subgroup of sup.
Int lattice_index(const IntLattice& sub, const IntLattice& sup);

}  // namespace conelab
