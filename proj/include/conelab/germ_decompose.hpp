#pragma once

#include "conelab/germ.hpp"

namespace conelab {

// Partial-fraction pass: rewrites every term whose denominator forms are
// linearly dependent as a sum of terms with independent denominator forms.
Germ make_denominators_independent(const Germ& f);

// Direct-sum split f = holomorphic + polar, exact through the validity
// window. Every polar output term is canonical: its numerator only involves
// directions Q-orthogonal to its denominator forms.
std::pair<Germ, Germ> decompose(const InnerProductForm& Q, const Germ& f);

Germ project_plus(const InnerProductForm& Q, const Germ& f);
Germ project_minus(const InnerProductForm& Q, const Germ& f);

// holomorphic + polar recombined, with all terms canonical
Germ canonical_form(const InnerProductForm& Q, const Germ& f);

// Pointwise product followed by re-canonicalisation of any term whose merged
// denominator forms became dependent, and cancellation of denominator forms
// dividing the numerator.
Germ germ_mul(const Germ& f, const Germ& g);

// Zero / equality through the (common) validity window.
bool germ_is_zero(const InnerProductForm& Q, const Germ& f);
bool germ_equal(const InnerProductForm& Q, const Germ& f, const Germ& g);

// Basis (primitive integer vectors) of the span of all linear forms
// occurring in the canonical decomposition of f.
std::vector<IntVec> support_span(const InnerProductForm& Q, const Germ& f);

// True iff the support spans are pairwise Q-orthogonal. Constant germs are
// independent of everything.
bool are_independent_germs(const InnerProductForm& Q, const Germ& f, const Germ& g);

}  // namespace conelab
