#pragma once

#include <optional>

#include "conelab/ratvec.hpp"

namespace conelab {

using RatMat = std::vector<RatVec>;  // row-major
using IntMat = std::vector<IntVec>;

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

// Basis of {x in Q^k : <row, x> = 0 for every row}, each vector primitive
// integer with positive leading coordinate, ordered by free column.
std::vector<RatVec> kernel_basis(const RatMat& rows, std::size_t k);

// Coefficients x with sum_i x_i basis[i] = v, or nullopt if v is outside the
// span. Dependent spanning sets are allowed; free coefficients become zero.
std::optional<RatVec> coordinates_in(const std::vector<RatVec>& basis, const RatVec& v);

Rat det(RatMat m);

// Unique row-style Hermite normal form: zero rows dropped, pivots positive,
// entries above a pivot reduced into [0, pivot).
IntMat hnf(IntMat m);

// Basis of the saturated kernel lattice {c in Z^n : m c = 0}, n = column
// count of m; rows returned in Hermite normal form.
IntMat int_kernel(const IntMat& m, std::size_t n);

}  // namespace conelab
