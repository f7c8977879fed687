#pragma once

#include <utility>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

// Vectors live in the filtered space Q^1 c Q^2 c ...; a vector of dimension k
// embeds into any larger dimension by appending zeros, and equality is up to
// that embedding. Binary operations pad to the common dimension first.
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

std::size_t trimmed_dim(const RatVec& v);
std::size_t trimmed_dim(const IntVec& v);
RatVec padded(RatVec v, std::size_t k);
IntVec padded(IntVec v, std::size_t k);
bool vec_eq(const RatVec& a, const RatVec& b);
bool vec_zero(const RatVec& v);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);  // standard bilinear form

RatVec to_ratvec(const IntVec& v);
IntVec int_vec(const std::vector<long>& v);
std::vector<RatVec> to_ratvecs(const std::vector<IntVec>& rows);

// Shortest integer vector on the ray through v (direction preserved).
IntVec primitive_direction(const RatVec& v);

// Primitive integer vector with the first nonzero coordinate positive.
// Second component is the sign that was absorbed: v = (c/|c|) * ... i.e.
// v is a positive multiple of (sign * result).
std::pair<IntVec, int> primitive_form(const RatVec& v);

std::string vec_str(const RatVec& v);
std::string vec_str(const IntVec& v);

}  // namespace conelab
