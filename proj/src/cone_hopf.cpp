#include "conelab/cone_hopf.hpp"

#include <cmath>
#include <set>

#include "conelab/germ_decompose.hpp"
#include "conelab/subdivision.hpp"

namespace conelab {

std::vector<std::pair<LatticeCone, LatticeCone>> cone_coproduct(
    const InnerProductForm& Q, const LatticeCone& c) {
  std::vector<std::pair<LatticeCone, LatticeCone>> out;
  for (const LatticeCone& f : faces(c))
    out.emplace_back(transverse_cone(Q, c, f), f);
  return out;
}

std::vector<std::pair<LatticeCone, LatticeCone>> reduced_coproduct(
    const InnerProductForm& Q, const LatticeCone& c) {
  std::vector<std::pair<LatticeCone, LatticeCone>> out;
  for (const LatticeCone& f : faces(c)) {
    if (f.is_zero() || f.dim() == c.dim()) continue;
    out.emplace_back(transverse_cone(Q, c, f), f);
  }
  return out;
}

Rat cone_counit(const LatticeCone& c) { return Rat(c.is_zero() ? 1 : 0); }

CoalgebraSpec<LatticeCone> cone_coalgebra(const InnerProductForm& Q) {
  CoalgebraSpec<LatticeCone> spec;
  spec.degree = [](const LatticeCone& c) { return static_cast<int>(c.dim()); };
  spec.unit = LatticeCone();
  spec.coproduct = [Q](const LatticeCone& c) {
    std::vector<CoproductTerm<LatticeCone>> out;
    for (auto& [t, f] : cone_coproduct(Q, c)) out.push_back({Rat(1), t, f});
    return out;
  };
  spec.counit = cone_counit;
  spec.locality = [Q](const LatticeCone& a, const LatticeCone& b) {
    return are_orthogonal(Q, a, b);
  };
  spec.show = [](const LatticeCone& c) { return c.str(); };
  return spec;
}

ConeElement cone_antipode(const InnerProductForm& Q, const LatticeCone& c) {
  std::function<ConeElement(const LatticeCone&, const LatticeCone&)> product =
      [](const LatticeCone& a, const LatticeCone& b) {
        return ConeElement::basis(minkowski_product(a, b));
      };
  return antipode<LatticeCone>(cone_coalgebra(Q), product)(c);
}

namespace {

// Product of the geometric germs of an aligned generating set. Each factor
// loses one degree of window per extra factor multiplied in, so the factors
// are expanded deep enough for the product to stay valid through `order`.
Germ exp_sum_smooth(const LatticeCone& c, int order) {
  std::vector<RatVec> gens = aligned_generators(c);
  int per_factor = order + static_cast<int>(gens.size()) - 1;
  Germ acc = germ_one(c.ambient_dim());
  for (const RatVec& g : gens)
    acc = germ_mul(acc, geometric_germ_scaled(g, per_factor));
  return germ_truncate(acc, order);
}

}  // namespace

Germ exp_sum(const LatticeCone& c, int order) {
  if (c.is_zero()) return germ_one(c.ambient_dim());
  if (is_smooth(c)) return exp_sum_smooth(c, order);
  return exp_sum_over(c, smooth_subdivision(c), order);
}

Germ exp_sum_over(const LatticeCone& c, const std::vector<LatticeCone>& pieces,
                  int order) {
  // The relative interiors of the fan cones of a subdivision partition C;
  // the cells lying inside the relative interior of C are recognised by the
  // ray coordinates of one interior sample point.
  std::set<LatticeCone> fan;
  for (const LatticeCone& p : pieces)
    for (const LatticeCone& f : faces(p))
      if (!f.is_zero()) fan.insert(f);
  Germ acc = germ_zero(c.ambient_dim());
  for (const LatticeCone& f : fan) {
    RatVec probe(c.ambient_dim(), Rat(0));
    for (const IntVec& g : f.generators())
      for (std::size_t i = 0; i < g.size(); ++i) probe[i] += Rat(g[i]);
    std::optional<RatVec> coords = c.ray_coordinates(probe);
    if (!coords) continue;
    bool interior = true;
    for (const Rat& x : *coords)
      if (x <= 0) {
        interior = false;
        break;
      }
    if (!interior) continue;
    acc = germ_add(acc, exp_sum(f, order));
  }
  return germ_truncate(acc, order);
}

Germ exp_integral(const LatticeCone& c) {
  if (c.is_zero()) return germ_one(c.ambient_dim());
  if (is_smooth(c)) {
    Germ acc = germ_one(c.ambient_dim());
    for (const RatVec& g : aligned_generators(c))
      acc = germ_mul(acc, integral_ray_germ(g));
    return acc;
  }
  // Full-dimensional pieces overlap in measure zero, so the integral splits
  // over the maximal cones of the subdivision only.
  Germ acc = germ_zero(c.ambient_dim());
  for (const LatticeCone& p : smooth_subdivision(c))
    acc = germ_add(acc, exp_integral(p));
  return acc;
}

Germ renormalized_mu(const InnerProductForm& Q, const LatticeCone& c,
                     int order) {
  return project_plus(Q, exp_sum(c, order));
}

TargetSpec<Germ> germ_target(const InnerProductForm& Q) {
  TargetSpec<Germ> t;
  t.zero = germ_zero(0);
  t.unit = germ_one(0);
  t.add = germ_add;
  t.scale = [](const Rat& c, const Germ& g) { return germ_scale(c, g); };
  t.mul = [](const Germ& a, const Germ& b) { return germ_mul(a, b); };
  t.independent = [Q](const Germ& a, const Germ& b) {
    return are_independent_germs(Q, a, b);
  };
  t.proj1 = [Q](const Germ& g) { return project_plus(Q, g); };
  t.proj2 = [Q](const Germ& g) { return project_minus(Q, g); };
  t.in_comp1 = [Q](const Germ& g) {
    Germ c = canonical_form(Q, g);
    for (const auto& [d, n] : c.terms)
      if (!d.empty()) return false;
    return true;
  };
  t.in_comp2 = [Q](const Germ& g) {
    Germ c = canonical_form(Q, g);
    auto it = c.terms.find(Den{});
    return it == c.terms.end() || it->second.is_zero();
  };
  t.comp1_subalgebra = true;
  t.comp2_ideal = true;
  t.show = germ_str;
  return t;
}

Character<LatticeCone, Germ> sum_character(int order) {
  return Character<LatticeCone, Germ>(
      [order](const LatticeCone& c) { return exp_sum(c, order); });
}

Character<LatticeCone, Germ> integral_character() {
  return Character<LatticeCone, Germ>(
      [](const LatticeCone& c) { return exp_integral(c); });
}

Character<LatticeCone, Germ> mu_character(const InnerProductForm& Q,
                                          int order) {
  return Character<LatticeCone, Germ>(
      [Q, order](const LatticeCone& c) { return renormalized_mu(Q, c, order); });
}

EulerMaclaurinReport euler_maclaurin_verify(const InnerProductForm& Q,
                                            const LatticeCone& c, int order) {
  // Convolving against the integral character costs up to dim(C) degrees of
  // window (one per pole order of the integral factor), so both sides are
  // expanded that much deeper before comparing through `order`.
  int internal = order + static_cast<int>(c.dim());
  Character<LatticeCone, Germ> conv =
      convolution(mu_character(Q, internal), integral_character(),
                  cone_coalgebra(Q), germ_target(Q));
  Germ diff = germ_truncate(germ_sub(conv(c), exp_sum(c, internal)), order);
  EulerMaclaurinReport report;
  report.window = order;
  report.discrepancy = canonical_form(Q, diff);
  report.match = germ_is_zero(Q, diff);
  return report;
}

LatticeSumSample oracle_sum(const LatticeCone& c,
                            const std::vector<std::complex<double>>& z,
                            long radius) {
  if (z.size() != c.ambient_dim())
    throw ValidationError("oracle point has dimension " +
                          std::to_string(z.size()) + ", cone is ambient " +
                          std::to_string(c.ambient_dim()));
  if (c.is_zero()) return {std::complex<double>(1.0, 0.0), 0.0};

  auto pairing = [&z](const RatVec& v) {
    std::complex<double> s(0.0, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i].get_d() * z[i];
    return s;
  };
  for (const IntVec& u : c.generators()) {
    RatVec ru(u.begin(), u.end());
    if (pairing(ru).real() >= 0.0)
      throw ValidationError("oracle sum requires Re<u, z> < 0 on generator " +
                            vec_str(u));
  }

  std::vector<RatVec> gens = aligned_generators(c);
  std::size_t n = gens.size();
  std::vector<std::complex<double>> t(n);
  for (std::size_t j = 0; j < n; ++j) t[j] = pairing(gens[j]);

  // Interior lattice points split into cosets: a point of the half-open box
  // spanned by the aligned generators, plus non-negative integer multiples
  // of those generators; strict positivity is demanded exactly in the ray
  // directions where the box point has coordinate zero.
  std::vector<RatVec> cosets = box_points(c);
  cosets.insert(cosets.begin(), RatVec(c.ambient_dim(), Rat(0)));

  std::complex<double> total(0.0, 0.0);
  double shell = 0.0;
  for (const RatVec& d : cosets) {
    std::optional<RatVec> coords = c.ray_coordinates(d);
    std::vector<long> lo(n);
    for (std::size_t j = 0; j < n; ++j) lo[j] = ((*coords)[j] == 0) ? 1 : 0;
    std::complex<double> base = pairing(d);
    std::vector<long> k(lo);
    while (true) {
      std::complex<double> e = base;
      bool outermost = false;
      for (std::size_t j = 0; j < n; ++j) {
        e += static_cast<double>(k[j]) * t[j];
        if (k[j] == radius) outermost = true;
      }
      total += std::exp(e);
      if (outermost) shell += std::abs(std::exp(e));
      std::size_t j = 0;
      while (j < n && ++k[j] > radius) {
        k[j] = lo[j];
        ++j;
      }
      if (j == n) break;
    }
  }
  return {total, shell};
}

}  // namespace conelab
