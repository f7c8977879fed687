#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "conelab/cone.hpp"
#include "conelab/germ.hpp"
#include "conelab/inner_product.hpp"
#include "conelab/locality.hpp"

namespace conelab {

// All pairs (C/F, F) of a face and its Q-transverse complement, one per face
// of C, including the coaugmentation pairs (C, J) and (J, C).
std::vector<std::pair<LatticeCone, LatticeCone>> cone_coproduct(
    const InnerProductForm& Q, const LatticeCone& c);

// cone_coproduct with both coaugmentation pairs removed; empty exactly for
// rays and the zero cone.
std::vector<std::pair<LatticeCone, LatticeCone>> reduced_coproduct(
    const InnerProductForm& Q, const LatticeCone& c);

// 1 on the zero cone, 0 otherwise.
Rat cone_counit(const LatticeCone& c);

// The graded connected coalgebra of lattice cones with Q-orthogonality as
// the independence relation.
CoalgebraSpec<LatticeCone> cone_coalgebra(const InnerProductForm& Q);

// Antipode of the cone bialgebra under the Minkowski product, as a formal
// combination of cones.
ConeElement cone_antipode(const InnerProductForm& Q, const LatticeCone& c);

// Exponential sum over the interior lattice points of C, expanded as a germ
// valid through degree `order`. Smooth cones multiply the geometric germs of
// an aligned generating set; other cones sum the open cells of a smooth
// subdivision fan that lie in the relative interior of C.
Germ exp_sum(const LatticeCone& c, int order);

// The open-cell sum run over a caller-supplied subdivision of C into
// simplicial cones; used to check independence of the subdivision choice.
Germ exp_sum_over(const LatticeCone& c, const std::vector<LatticeCone>& pieces,
                  int order);

// Exponential integral over C against the measure normalised by the cone's
// lattice; an exact germ, a sum of products of ray integrals.
Germ exp_integral(const LatticeCone& c);

// Holomorphic projection of exp_sum: the renormalised value of the cone.
Germ renormalized_mu(const InnerProductForm& Q, const LatticeCone& c, int order);

// Germ-valued target algebra split into holomorphic and polar components;
// independence is Q-orthogonality of support spans.
TargetSpec<Germ> germ_target(const InnerProductForm& Q);

// Memoizing characters for the three cone evaluations.
Character<LatticeCone, Germ> sum_character(int order);
Character<LatticeCone, Germ> integral_character();
Character<LatticeCone, Germ> mu_character(const InnerProductForm& Q, int order);

struct EulerMaclaurinReport {
  bool match;
  int window;        // degree through which the comparison ran
  Germ discrepancy;  // canonical difference through `window`; zero iff match
};

// Checks exp_sum = convolution(renormalized_mu, exp_integral) through degree
// `order`; internal expansions run dim(C) orders deeper so the convolution
// products stay valid through the reported window.
EulerMaclaurinReport euler_maclaurin_verify(const InnerProductForm& Q,
                                            const LatticeCone& c, int order);

struct LatticeSumSample {
  std::complex<double> value;
  double truncation;  // magnitude of the outermost enumerated shell
};

// Direct numeric evaluation of the defining lattice sum at a point z with
// Re<u, z> < 0 on every generator, truncated at coefficient-norm `radius`.
LatticeSumSample oracle_sum(const LatticeCone& c,
                            const std::vector<std::complex<double>>& z,
                            long radius);

}  // namespace conelab
