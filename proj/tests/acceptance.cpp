// Acceptance gate: one line per criterion, exit 0 only if every line is PASS.
// Tolerances and truncation orders are pinned here and nowhere else.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "conelab/cone_hopf.hpp"
#include "conelab/germ_decompose.hpp"
#include "conelab/locality.hpp"
#include "conelab/subdivision.hpp"

using namespace conelab;

namespace {

const InnerProductForm kStd = InnerProductForm::standard();

constexpr double kNumericTol = 1e-6;  // criterion 8 cross-validation bound

IntVec iv(std::vector<long> v) { return int_vec(v); }

RatVec rv(std::vector<long> v) {
  RatVec r;
  for (long x : v) r.emplace_back(x);
  return r;
}

// standard ambient lattice restricted to the span, so non-smooth examples
// keep their usual meaning relative to Z^n
LatticeCone std_cone(std::vector<std::vector<long>> gens, std::size_t ambient) {
  std::vector<IntVec> g;
  for (auto& r : gens) g.push_back(iv(r));
  std::vector<RatVec> eye;
  for (std::size_t i = 0; i < ambient; ++i) {
    RatVec e(ambient, Rat(0));
    e[i] = Rat(1);
    eye.push_back(e);
  }
  std::vector<RatVec> span;
  for (const IntVec& u : g) span.emplace_back(u.begin(), u.end());
  IntLattice sat = lattice_intersect_span(IntLattice::from_vectors(eye, ambient), span);
  return LatticeCone::make(g, sat.basis_rows(), ambient);
}

std::vector<LatticeCone> corpus() {
  return {
      LatticeCone(),                                      // zero cone
      std_cone({{1}}, 1),                                 // unit ray
      LatticeCone::make({iv({1})}, {{rv({2})}}, 1),       // ray with doubled lattice
      std_cone({{2, 1}}, 2),                              // skew ray
      std_cone({{1, 0}, {0, 1}}, 2),                      // smooth quadrant
      std_cone({{1, 0}, {1, 2}}, 2),                      // index 2
      std_cone({{1, 0}, {1, 3}}, 2),                      // index 3
      std_cone({{1, 1}, {1, -1}}, 2),                     // index 2, symmetric
      std_cone({{1, 0, 0}, {1, 2, 0}}, 3),                // planar cone in 3-space
      std_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3),     // smooth octant
      std_cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, 3),     // 3D index 2
      std_cone({{1, 0, 0}, {0, 1, 0}, {1, 1, 3}}, 3),     // 3D index 3
      std_cone({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}, 3),     // 3D unimodular, skew
  };
}

std::vector<std::pair<LatticeCone, LatticeCone>> orthogonal_pairs() {
  return {
      {LatticeCone(), std_cone({{1, 0}, {1, 2}}, 2)},
      {std_cone({{1, 0}}, 2), std_cone({{0, 1}}, 2)},
      {std_cone({{1, 1}}, 2), std_cone({{1, -1}}, 2)},
      {std_cone({{2, 1}}, 2), std_cone({{1, -2}}, 2)},
      {std_cone({{1, 2}}, 2), std_cone({{2, -1}}, 2)},
      {std_cone({{1, 0, 0}}, 3), std_cone({{0, 1, 0}, {0, 0, 1}}, 3)},
      {std_cone({{1, 0, 0}, {0, 1, 0}}, 3), std_cone({{0, 0, 1}}, 3)},
      {std_cone({{1, -1, 0}}, 3), std_cone({{1, 1, 2}}, 3)},
      {std_cone({{1, 0, 0}, {0, 1, 1}}, 3), std_cone({{0, 1, -1}}, 3)},
      {std_cone({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4),
       std_cone({{0, 0, 1, 1}, {0, 0, 1, -1}}, 4)},
      {std_cone({{1, 1, 0}}, 3), std_cone({{1, -1, 2}}, 3)},
  };
}

Rat holo_coeff(const Germ& f, const Mono& m) {
  auto it = f.terms.find(Den{});
  return it == f.terms.end() ? Rat(0) : it->second.coeff(m);
}

// accumulates the first failure description; later ones are dropped
struct Check {
  bool ok = true;
  std::string detail;

  void req(bool cond, const std::string& msg) {
    if (!cond && ok) detail = msg;
    ok = ok && cond;
  }
};

// ---------------------------------------------------------------- criterion 1

// Laurent coefficients of e^t/(1-e^t) by plain series long division:
// divide e^t by the unit part of (1-e^t)/t, then shift one degree down.
bool run_laurent_1d(Check& c) {
  const int N = 12;
  std::vector<Rat> fct(N + 2, Rat(1));
  for (int k = 1; k <= N + 1; ++k) fct[k] = fct[k - 1] * Rat(k);

  std::vector<Rat> num(N + 1), den(N + 1), q(N + 1);
  for (int k = 0; k <= N; ++k) {
    num[k] = Rat(1) / fct[k];         // e^t
    den[k] = Rat(-1) / fct[k + 1];    // (1 - e^t)/t
  }
  for (int k = 0; k <= N; ++k) {
    Rat acc = num[k];
    for (int j = 0; j < k; ++j) acc -= q[j] * den[k - j];
    q[k] = acc / den[0];
  }
  c.req(q[0] == Rat(-1), "residue is not -1");
  c.req(q[1] == Rat(-1, 2), "constant term is not -1/2");
  c.req(q[2] == Rat(-1, 12), "linear term is not -1/12");
  c.req(q[3] == Rat(0), "quadratic term is not 0");
  c.req(q[4] == Rat(1, 720), "cubic term is not 1/720");

  Germ g = exp_sum(std_cone({{1}}, 1), 10);
  auto polar = g.terms.find(Den{{iv({1}), 1}});
  c.req(polar != g.terms.end() && polar->second == Poly::constant(1, q[0]),
        "polar part disagrees with the division oracle");
  for (int m = 0; m <= 10; ++m)
    c.req(holo_coeff(g, Mono{m}) == q[m + 1],
          "degree " + std::to_string(m) + " coefficient disagrees");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 2

bool run_euler_maclaurin(Check& c) {
  for (const LatticeCone& cone : corpus()) {
    EulerMaclaurinReport r = euler_maclaurin_verify(kStd, cone, 6);
    c.req(r.match, "sum != mu * integral through degree 6 on " + cone.str());
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 3

bool run_multiplicativity(Check& c) {
  const int D = 4;
  for (const auto& [a, b] : orthogonal_pairs()) {
    LatticeCone ab = minkowski_product(a, b);
    c.req(germ_equal(kStd, exp_sum(ab, D), germ_mul(exp_sum(a, D), exp_sum(b, D))),
          "sum character not multiplicative on " + a.str() + ", " + b.str());
    c.req(germ_equal(kStd, exp_integral(ab),
                     germ_mul(exp_integral(a), exp_integral(b))),
          "integral character not multiplicative on " + a.str() + ", " + b.str());
    c.req(germ_equal(kStd, renormalized_mu(kStd, ab, D),
                     germ_mul(renormalized_mu(kStd, a, D),
                              renormalized_mu(kStd, b, D))),
          "mu not multiplicative on " + a.str() + ", " + b.str());
  }

  // negative control: a ray is not orthogonal to itself and its Minkowski
  // square is itself, so S(C.C) and S(C)^2 must differ
  LatticeCone e1 = std_cone({{1, 0}}, 2);
  LatticeCone sq = minkowski_product(e1, e1);
  c.req(sq == e1, "ray Minkowski square is not the ray");
  c.req(!germ_equal(kStd, exp_sum(sq, D), germ_mul(exp_sum(e1, D), exp_sum(e1, D))),
        "negative control failed: S(C.C) matched S(C)^2");
  return c.ok;
}

// ---------------------------------------------------------------- criterion 4

bool spans_orthogonal(const std::vector<IntVec>& u, const std::vector<IntVec>& v) {
  for (const IntVec& x : u)
    for (const IntVec& y : v)
      if (inner_product(kStd, to_ratvec(x), to_ratvec(y)) != Rat(0)) return false;
  return true;
}

bool run_locality_preservation(Check& c) {
  const int D = 4;
  for (const auto& [a, b] : orthogonal_pairs()) {
    c.req(spans_orthogonal(support_span(kStd, renormalized_mu(kStd, a, D)),
                           support_span(kStd, renormalized_mu(kStd, b, D))),
          "mu breaks span orthogonality on " + a.str() + ", " + b.str());
    c.req(spans_orthogonal(support_span(kStd, exp_integral(a)),
                           support_span(kStd, exp_integral(b))),
          "polar factor breaks span orthogonality on " + a.str() + ", " + b.str());
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 5

// random exact germ whose support touches only coordinates off, off+1
Germ random_local_germ(std::mt19937_64& rng, std::size_t off) {
  auto coef = [&rng] { return Rat(long(rng() % 7) - 3); };
  auto rand_poly = [&](int max_deg) {
    Poly p(4);
    for (int d0 = 0; d0 <= max_deg; ++d0)
      for (int d1 = 0; d0 + d1 <= max_deg; ++d1) {
        Mono m(4, 0);
        m[off] = d0;
        m[off + 1] = d1;
        p.add_term(m, coef());
      }
    return p;
  };
  RatVec e0(4, Rat(0)), e1(4, Rat(0)), mix(4, Rat(0));
  e0[off] = Rat(1);
  e1[off + 1] = Rat(1);
  mix[off] = Rat(1);
  mix[off + 1] = Rat(1);
  std::vector<std::vector<std::pair<RatVec, int>>> pool{
      {{e0, 1}}, {{e1, 1}}, {{e0, 1}, {e1, 1}}, {{mix, 2}}, {{e0, 2}, {e1, 1}}};
  Germ g = germ_from_poly(4, rand_poly(1));
  std::size_t picks = 1 + rng() % 2;
  for (std::size_t i = 0; i < picks; ++i) {
    Germ t = germ_polar(4, pool[rng() % pool.size()], rand_poly(2));
    g = germ_add(g, t);
  }
  return g;
}

bool run_germ_algebra(Check& c) {
  std::mt19937_64 rng(20250815);
  for (int it = 0; it < 100 && c.ok; ++it) {
    Germ f = random_local_germ(rng, 0);
    Germ g = random_local_germ(rng, 2);
    c.req(are_independent_germs(kStd, f, g), "generated pair is not independent");

    Germ pf_plus = project_plus(kStd, f);
    c.req(germ_equal(kStd, project_plus(kStd, pf_plus), pf_plus),
          "holomorphic projection is not idempotent");

    Germ prod = germ_mul(f, g);
    c.req(germ_equal(kStd, project_plus(kStd, prod),
                     germ_mul(pf_plus, project_plus(kStd, g))),
          "holomorphic projection is not multiplicative");

    Germ pf = project_minus(kStd, f);
    Germ pg = project_minus(kStd, g);
    Germ rb_lhs = germ_mul(pf, pg);
    Germ rb_rhs = germ_sub(germ_add(project_minus(kStd, germ_mul(pf, g)),
                                    project_minus(kStd, germ_mul(f, pg))),
                           project_minus(kStd, prod));
    c.req(germ_equal(kStd, rb_lhs, rb_rhs),
          "polar projection fails the weight -1 Rota-Baxter relation");

    c.req(germ_is_zero(kStd, project_plus(kStd, germ_mul(f, pg))),
          "polar germs do not absorb independent factors");
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 6

bool run_coalgebra_axioms(Check& c) {
  using Key3 = std::tuple<LatticeCone, LatticeCone, LatticeCone>;
  for (const LatticeCone& cone : corpus()) {
    std::map<Key3, Rat> lhs, rhs;
    for (const auto& [t, f] : cone_coproduct(kStd, cone)) {
      for (const auto& [t2, f2] : cone_coproduct(kStd, t)) lhs[{t2, f2, f}] += Rat(1);
      for (const auto& [t2, f2] : cone_coproduct(kStd, f)) rhs[{t, t2, f2}] += Rat(1);
    }
    c.req(lhs == rhs, "coproduct is not coassociative on " + cone.str());

    ConeElement left_counit, right_counit, expect = ConeElement::basis(cone);
    for (const auto& [t, f] : cone_coproduct(kStd, cone)) {
      left_counit.add_term(f, cone_counit(t));
      right_counit.add_term(t, cone_counit(f));
      c.req(t.dim() + f.dim() == cone.dim(), "coproduct grading broken on " + cone.str());
    }
    c.req(left_counit == expect && right_counit == expect,
          "counit laws broken on " + cone.str());

    // conilpotency: expanding the leftmost leg dim(C) times kills every term
    std::vector<std::vector<LatticeCone>> layer{{cone}};
    std::size_t steps = std::max<std::size_t>(cone.dim(), 1);
    for (std::size_t k = 0; k < steps; ++k) {
      std::vector<std::vector<LatticeCone>> next;
      for (const auto& tuple : layer)
        for (const auto& [t, f] : reduced_coproduct(kStd, tuple.front())) {
          std::vector<LatticeCone> grown{t, f};
          grown.insert(grown.end(), tuple.begin() + 1, tuple.end());
          next.push_back(std::move(grown));
        }
      layer = std::move(next);
    }
    c.req(layer.empty(),
          "reduced coproduct is not nilpotent at the dimension on " + cone.str());
  }

  // bialgebra law on orthogonal pairs
  using Key2 = std::pair<LatticeCone, LatticeCone>;
  for (const auto& [a, b] : orthogonal_pairs()) {
    std::map<Key2, Rat> lhs, rhs;
    for (const auto& [t, f] : cone_coproduct(kStd, minkowski_product(a, b)))
      lhs[{t, f}] += Rat(1);
    for (const auto& [ta, fa] : cone_coproduct(kStd, a))
      for (const auto& [tb, fb] : cone_coproduct(kStd, b))
        rhs[{minkowski_product(ta, tb), minkowski_product(fa, fb)}] += Rat(1);
    c.req(lhs == rhs,
          "coproduct is not multiplicative on " + a.str() + ", " + b.str());
  }

  // antipode: m(S x Id) applied to the coproduct collapses to the counit
  CoalgebraSpec<LatticeCone> coalg = cone_coalgebra(kStd);
  std::function<ConeElement(const LatticeCone&, const LatticeCone&)> product =
      [](const LatticeCone& x, const LatticeCone& y) {
        return ConeElement::basis(minkowski_product(x, y));
      };
  for (const LatticeCone& cone : corpus()) {
    ConeElement acc;
    for (const auto& [t, f] : cone_coproduct(kStd, cone))
      acc += locality_product_ext(cone_antipode(kStd, t), ConeElement::basis(f),
                                  product, coalg);
    ConeElement expect;
    expect.add_term(LatticeCone(), cone_counit(cone));
    c.req(acc == expect, "antipode identity fails on " + cone.str());
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 7

bool run_birkhoff(Check& c) {
  CoalgebraSpec<LatticeCone> coalg = cone_coalgebra(kStd);
  TargetSpec<Germ> target = germ_target(kStd);
  for (const LatticeCone& cone : corpus()) {
    int ord = 2 + static_cast<int>(cone.dim());
    auto direct = birkhoff_factorize(sum_character(ord), coalg, target);
    auto shortcut = birkhoff_via_projection(sum_character(ord), coalg, target);

    Germ h1 = direct.phi1_inv(cone), h2 = shortcut.phi1_inv(cone);
    Germ p1 = direct.phi2(cone), p2 = shortcut.phi2(cone);
    c.req(germ_equal(kStd, h1, h2) && germ_equal(kStd, p1, p2),
          "factorisations disagree on " + cone.str());
    c.req(germ_is_zero(kStd, project_minus(kStd, h1)),
          "counterterm inverse is not holomorphic on " + cone.str());
    if (!cone.is_zero())
      c.req(germ_is_zero(kStd, project_plus(kStd, p1)),
            "polar factor is not polar on " + cone.str());
    c.req(germ_equal(kStd, p1, exp_integral(cone)),
          "polar factor is not the cone integral on " + cone.str());
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 8

// z with prescribed pairings against the aligned generators: solve the
// normal equations of the underdetermined system in doubles (rank <= 3)
std::vector<std::complex<double>> dual_point(const std::vector<RatVec>& gens,
                                             std::size_t ambient,
                                             const std::vector<double>& t) {
  std::size_t k = gens.size();
  std::vector<std::vector<double>> A(k, std::vector<double>(ambient));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ambient; ++j) A[i][j] = gens[i][j].get_d();

  std::vector<std::vector<double>> M(k, std::vector<double>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      M[i][j] = std::inner_product(A[i].begin(), A[i].end(), A[j].begin(), 0.0);
    M[i][k] = t[i];
  }
  for (std::size_t col = 0; col < k; ++col) {  // Gaussian elimination, partial pivot
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      double s = M[r][col] / M[col][col];
      for (std::size_t j = col; j <= k; ++j) M[r][j] -= s * M[col][j];
    }
  }
  std::vector<std::complex<double>> z(ambient, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    double yi = M[i][k] / M[i][i];
    for (std::size_t j = 0; j < ambient; ++j) z[j] += yi * A[i][j];
  }
  return z;
}

bool run_numeric_cross_validation(Check& c) {
  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> mag(0.3, 1.2);
  for (const LatticeCone& cone : corpus()) {
    Germ jet = exp_sum(cone, 8);
    std::vector<RatVec> gens = aligned_generators(cone);
    for (int pt = 0; pt < 5 && c.ok; ++pt) {
      std::vector<std::complex<double>> z;
      double min_mag = 1.0;
      if (!cone.is_zero()) {
        std::vector<double> t(gens.size());
        for (double& x : t) {
          x = -mag(rng);
          min_mag = std::min(min_mag, std::abs(x));
        }
        z = dual_point(gens, cone.ambient_dim(), t);
      }
      long radius = static_cast<long>(std::ceil(30.0 / min_mag));
      LatticeSumSample ref = oracle_sum(cone, z, radius);
      double diff = std::abs(evaluate_numeric(jet, z) - ref.value);
      c.req(diff < kNumericTol + ref.truncation,
            "jet and lattice oracle differ by " + std::to_string(diff) + " on " +
                cone.str());
    }
  }
  return c.ok;
}

// ---------------------------------------------------------------- criterion 9

bool run_subdivision_invariance(Check& c) {
  LatticeCone c13 = std_cone({{1, 0}, {1, 3}}, 2);
  auto refine = [](const LatticeCone& cone, const RatVec& pivot) {
    std::vector<LatticeCone> out;
    for (const LatticeCone& piece : subdivide_at(cone, pivot))
      for (const LatticeCone& s : smooth_subdivision(piece)) out.push_back(s);
    return out;
  };
  std::vector<LatticeCone> fan_a = refine(c13, rv({1, 2}));  // box point pivot
  std::vector<LatticeCone> fan_b = refine(c13, rv({2, 3}));  // interior non-box pivot
  std::sort(fan_a.begin(), fan_a.end());
  std::sort(fan_b.begin(), fan_b.end());
  c.req(fan_a != fan_b, "the two pivot orders produced the same fan");

  Germ direct = exp_sum(c13, 6);
  c.req(germ_equal(kStd, exp_sum_over(c13, fan_a, 6), direct),
        "first subdivision disagrees with the direct sum");
  c.req(germ_equal(kStd, exp_sum_over(c13, fan_b, 6), direct),
        "second subdivision disagrees with the direct sum");
  c.req(germ_equal(kStd, exp_sum_over(c13, fan_a, 6), exp_sum_over(c13, fan_b, 6)),
        "the two subdivisions disagree");
  return c.ok;
}

// --------------------------------------------------------------- criterion 10

// rank-0/1/2 subspaces of the plane under sum, with transversality as the
// independence relation: not closed, so the checker must refuse it
struct Sub {
  int rank = 0;
  IntVec dir;

  bool operator==(const Sub& o) const { return rank == o.rank && dir == o.dir; }
  bool operator<(const Sub& o) const {
    return rank != o.rank ? rank < o.rank : dir < o.dir;
  }
};

bool run_axiom_calibration(Check& c) {
  LocalityStructure<Sub> planes;
  planes.top = [](const Sub& a, const Sub& b) {
    if (a.rank == 0 || b.rank == 0) return true;
    if (a.rank + b.rank > 2) return false;
    return !(a.dir == b.dir);
  };
  planes.product = [](const Sub& a, const Sub& b) {
    if (a.rank == 0) return b;
    if (b.rank == 0) return a;
    if (a.rank == 1 && b.rank == 1 && a.dir == b.dir) return a;
    return Sub{2, {}};
  };
  planes.show = [](const Sub& s) {
    if (s.rank == 0) return std::string("0");
    if (s.rank == 2) return std::string("plane");
    return "line" + vec_str(to_ratvec(s.dir));
  };
  std::vector<Sub> sample{Sub{1, iv({1, 1})}, Sub{0, {}}, Sub{1, iv({1, 0})},
                          Sub{1, iv({0, 1})}, Sub{2, {}}};
  AxiomReport transverse = check_locality_axioms(planes, sample);
  c.req(!transverse.pass, "transverse subspaces were wrongly accepted");
  c.req(!transverse.failure.empty() &&
            transverse.failure.find("(1,1)") != std::string::npos,
        "rejection carries no concrete witness");

  LocalityStructure<long> coprime;
  coprime.top = [](const long& a, const long& b) { return std::gcd(a, b) == 1; };
  coprime.product = [](const long& a, const long& b) { return a * b; };
  coprime.show = [](const long& a) { return std::to_string(a); };
  std::vector<long> ints{1, 2, 3, 4, 5, 6, 7, 9, 10, 12};
  AxiomReport accepted = check_locality_axioms(coprime, ints);
  c.req(accepted.pass, "coprime multiplication was wrongly rejected: " +
                           accepted.failure);

  auto totient = [](long n) {
    long r = 0;
    for (long k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++r;
    return r;
  };
  for (long a : ints)
    for (long b : ints)
      if (coprime.top(a, b))
        c.req(totient(a * b) == totient(a) * totient(b),
              "totient is not multiplicative on a coprime pair");
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"one-dim-laurent-oracle", run_laurent_1d},
      {"euler-maclaurin-degree-6", run_euler_maclaurin},
      {"orthogonal-multiplicativity", run_multiplicativity},
      {"support-span-orthogonality", run_locality_preservation},
      {"germ-projection-laws", run_germ_algebra},
      {"coalgebra-axioms", run_coalgebra_axioms},
      {"birkhoff-consistency", run_birkhoff},
      {"numeric-cross-validation", run_numeric_cross_validation},
      {"subdivision-invariance", run_subdivision_invariance},
      {"axiom-checker-calibration", run_axiom_calibration},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = criteria[i].run(check);
      detail = check.detail;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    std::printf("%s %2zu %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs, detail.empty() ? "" : ": ",
                detail.c_str());
    all = all && ok;
  }
  return all ? 0 : 1;
}
