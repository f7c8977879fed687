#pragma once

#include "conelab/inner_product.hpp"
#include "conelab/polynomial.hpp"

namespace conelab {

// One factor <form, z>^pow of a denominator. Forms are primitive integer
// vectors with positive leading coordinate; absorbed signs live in the
// numerator coefficients.
struct DenFactor {
  IntVec form;
  int pow = 1;

  bool operator==(const DenFactor& o) const { return pow == o.pow && form == o.form; }
  bool operator<(const DenFactor& o) const {
    return form != o.form ? form < o.form : pow < o.pow;
  }
};

using Den = std::vector<DenFactor>;  // sorted, forms pairwise distinct

int pole_order(const Den& d);

// Truncated meromorphic germ at zero with linear poles: a finite sum of
// numerator polynomials over products of linear-form powers, keyed by
// denominator; the empty key is the holomorphic part. Homogeneous components
// of total degree <= valid_up_to are exact; nullopt means exact everywhere.
struct Germ {
  std::size_t dim = 0;
  std::optional<int> valid_up_to;
  std::map<Den, Poly> terms;
};

Germ germ_zero(std::size_t dim);
Germ germ_one(std::size_t dim);
Germ germ_from_poly(std::size_t dim, const Poly& p,
                    std::optional<int> valid = std::nullopt);

// Single term num / prod <form,z>^pow; forms are primitivised and
// sign-normalised here, scaling factors folded into the numerator.
Germ germ_polar(std::size_t dim, const std::vector<std::pair<RatVec, int>>& den,
                const Poly& num, std::optional<int> valid = std::nullopt);

Germ germ_pad(const Germ& f, std::size_t dim);
Germ germ_add(const Germ& f, const Germ& g);
Germ germ_sub(const Germ& f, const Germ& g);
Germ germ_neg(const Germ& f);
Germ germ_scale(const Rat& c, const Germ& f);

// Lowest homogeneous degree present (monomial degree minus pole order);
// nullopt when no terms are stored.
std::optional<int> germ_lowdeg(const Germ& f);

// Drop components of degree > window and shrink the validity window to it.
Germ germ_truncate(const Germ& f, int window);

// Pointwise product: denominators merge with power addition, no
// re-canonicalisation. The caller must know the result is wanted raw (e.g.
// jointly independent denominator forms); germ_mul re-canonicalises.
Germ germ_mul_raw(const Germ& f, const Germ& g);

// Laurent jet of e^t/(1-e^t) at t = <u,z> through degree D: -1/t plus a
// holomorphic jet with Bernoulli-type rational coefficients.
Germ geometric_germ(const IntVec& u, int D);

// Same jet at t = <v,z> for rational v on an integer ray (v = c*primitive).
Germ geometric_germ_scaled(const RatVec& v, int D);

// -1/<v,z>, the one-dimensional exponential integral along the ray of v.
Germ integral_ray_germ(const RatVec& v);

// Floating-point evaluation of the truncated germ; truncation error is
// O(|z|^{valid_up_to+1}).
std::complex<double> evaluate_numeric(const Germ& f,
                                      const std::vector<std::complex<double>>& z);

// Laurent-style printer, components in ascending degree, e.g.
// "-z1^-1 - 1/2 - 1/12 z1 + 1/720 z1^3".
std::string germ_str(const Germ& f);

}  // namespace conelab
