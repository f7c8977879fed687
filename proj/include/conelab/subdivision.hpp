#pragma once

#include "conelab/cone.hpp"

namespace conelab {

// For each ray of C, the generator of the rank-1 group L_C intersect ray,
// oriented along the ray. Rational in general (the lattice may be).
std::vector<RatVec> aligned_generators(const LatticeCone& C);

// Index of the subgroup spanned by the aligned generators inside L_C.
Int cone_index(const LatticeCone& C);

// True iff the aligned generators form a basis of L_C (index 1).
bool is_smooth(const LatticeCone& C);

// Nonzero points of L_C in the half-open parallelepiped spanned by the
// aligned generators. Empty iff C is smooth. Count = index - 1.
std::vector<RatVec> box_points(const LatticeCone& C);

// Stellar subdivision: replaces C by the cones obtained by substituting the
// ray through p for each generator supporting p. Pieces keep lattice L_C.
// p must be a lattice point interior to a face of dimension >= 2.
std::vector<LatticeCone> subdivide_at(const LatticeCone& C, const RatVec& p);

// Fan of smooth cones with union C, produced by repeated stellar subdivision
// at a shortest box point (ties broken lexicographically).
std::vector<LatticeCone> smooth_subdivision(const LatticeCone& C);

// Placing triangulation of the cone spanned by arbitrarily many generators,
// inserted in descending lexicographic order. Coefficient 1 on each maximal
// piece. Default lattice: group generated by the primitivised input rays.
ConeElement triangulate(const std::vector<IntVec>& generators,
                        const std::optional<std::vector<RatVec>>& lattice = std::nullopt,
                        std::optional<std::size_t> ambient_dim = std::nullopt);

}  // namespace conelab
