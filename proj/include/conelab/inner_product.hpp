#pragma once

#include <map>

#include "conelab/matrix.hpp"

namespace conelab {

// Compatible family of symmetric positive-definite rational forms, one per
// dimension, with Q_{k+1} restricting to Q_k on the leading block. Undeclared
// dimensions extend the largest declared Gram matrix by identity blocks, so
// the family is always defined on the whole filtered space.
class InnerProductForm {
 public:
  InnerProductForm() = default;  // standard dot product in every dimension

  static InnerProductForm standard() { return InnerProductForm(); }
  static InnerProductForm from_gram(const std::map<std::size_t, RatMat>& grams);

  bool is_standard() const { return grams_.empty(); }
  RatMat gram(std::size_t k) const;
  Rat operator()(const RatVec& u, const RatVec& v) const;

 private:
  std::map<std::size_t, RatMat> grams_;
};

Rat inner_product(const InnerProductForm& Q, const RatVec& u, const RatVec& v);

// Basis of {w in Q^k : Q(w, v) = 0 for all v in V}.
std::vector<RatVec> orthogonal_complement(const InnerProductForm& Q,
                                          const std::vector<RatVec>& V, std::size_t k);

// Component of v Q-orthogonal to span(V): the unique w with Q(w, V) = 0 and
// v - w in span(V).
RatVec project_orthogonal(const InnerProductForm& Q, const RatVec& v,
                          const std::vector<RatVec>& V);

}  // namespace conelab
