#include "conelab/germ.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace conelab {

namespace {

constexpr long kInf = std::numeric_limits<int>::max() / 4;

long window_of(const Germ& f) { return f.valid_up_to ? *f.valid_up_to : kInf; }

std::optional<int> window_back(long w) {
  if (w >= kInf / 2) return std::nullopt;
  return static_cast<int>(w);
}

// lower bound for the lowest degree of the true germ behind f
long lowdeg_bound(const Germ& f) {
  auto d = germ_lowdeg(f);
  if (d) return *d;
  // nothing stored: all components through the window are zero
  return f.valid_up_to ? static_cast<long>(*f.valid_up_to) + 1 : kInf;
}

void drop_zero_terms(Germ& f) {
  for (auto it = f.terms.begin(); it != f.terms.end();)
    it = it->second.is_zero() ? f.terms.erase(it) : std::next(it);
}

Den merge_dens(const Den& a, const Den& b) {
  Den out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].form < b[j].form)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].form < a[i].form) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].form, a[i].pow + b[j].pow});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int pole_order(const Den& d) {
  int s = 0;
  for (const auto& f : d) s += f.pow;
  return s;
}

Germ germ_zero(std::size_t dim) {
  Germ f;
  f.dim = dim;
  return f;
}

Germ germ_one(std::size_t dim) {
  return germ_from_poly(dim, Poly::constant(dim, Rat(1)));
}

Germ germ_from_poly(std::size_t dim, const Poly& p, std::optional<int> valid) {
  Germ f;
  f.dim = std::max(dim, p.nvars());
  f.valid_up_to = valid;
  if (!p.is_zero()) f.terms.emplace(Den{}, p.padded_to(f.dim));
  return f;
}

Germ germ_polar(std::size_t dim, const std::vector<std::pair<RatVec, int>>& den,
                const Poly& num, std::optional<int> valid) {
  Germ f;
  f.dim = std::max(dim, num.nvars());
  f.valid_up_to = valid;
  Rat scale(1);
  Den d;
  for (const auto& [v, s] : den) {
    f.dim = std::max(f.dim, trimmed_dim(v));
    auto [form, sign] = primitive_form(v);
    form.resize(trimmed_dim(form));  // canonical key across ambient paddings
    // v = c * (sign * form) for the positive ray constant c
    std::size_t i = 0;
    while (i < form.size() && form[i] == 0) ++i;
    Rat c = v[i] / (Rat(sign) * Rat(form[i]));
    for (int e = 0; e < s; ++e) scale /= c * Rat(sign);
    Den unit{{form, s}};
    d = merge_dens(d, unit);
  }
  Poly n = num.padded_to(f.dim).scaled(scale);
  if (!n.is_zero()) f.terms.emplace(std::move(d), std::move(n));
  return f;
}

Germ germ_pad(const Germ& f, std::size_t dim) {
  if (dim <= f.dim) return f;
  Germ g;
  g.dim = dim;
  g.valid_up_to = f.valid_up_to;
  for (const auto& [d, n] : f.terms) g.terms.emplace(d, n.padded_to(dim));
  return g;
}

Germ germ_add(const Germ& f, const Germ& g) {
  std::size_t dim = std::max(f.dim, g.dim);
  Germ r = germ_pad(f, dim);
  r.valid_up_to = window_back(std::min(window_of(f), window_of(g)));
  for (const auto& [d, n] : g.terms) {
    auto it = r.terms.find(d);
    if (it == r.terms.end())
      r.terms.emplace(d, n.padded_to(dim));
    else
      it->second += n;
  }
  drop_zero_terms(r);
  return r;
}

Germ germ_neg(const Germ& f) { return germ_scale(Rat(-1), f); }

Germ germ_sub(const Germ& f, const Germ& g) { return germ_add(f, germ_neg(g)); }

Germ germ_scale(const Rat& c, const Germ& f) {
  Germ r;
  r.dim = f.dim;
  r.valid_up_to = f.valid_up_to;
  if (c == 0) return r;
  for (const auto& [d, n] : f.terms) r.terms.emplace(d, n.scaled(c));
  return r;
}

std::optional<int> germ_lowdeg(const Germ& f) {
  std::optional<int> best;
  for (const auto& [d, n] : f.terms) {
    auto l = n.low_deg();
    if (!l) continue;
    int deg = *l - pole_order(d);
    if (!best || deg < *best) best = deg;
  }
  return best;
}

Germ germ_truncate(const Germ& f, int window) {
  Germ r;
  r.dim = f.dim;
  r.valid_up_to = window_back(std::min(window_of(f), static_cast<long>(window)));
  for (const auto& [d, n] : f.terms) {
    Poly t = n.truncated(window + pole_order(d));
    if (!t.is_zero()) r.terms.emplace(d, std::move(t));
  }
  return r;
}

Germ germ_mul_raw(const Germ& f, const Germ& g) {
  std::size_t dim = std::max(f.dim, g.dim);
  long w = std::min(window_of(f) + lowdeg_bound(g), window_of(g) + lowdeg_bound(f));
  Germ r;
  r.dim = dim;
  r.valid_up_to = window_back(w);
  for (const auto& [df, nf] : f.terms)
    for (const auto& [dg, ng] : g.terms) {
      Den d = merge_dens(df, dg);
      std::optional<int> cap;
      if (w < kInf / 2) cap = static_cast<int>(w) + pole_order(d);
      Poly n = poly_mul(nf.padded_to(dim), ng.padded_to(dim), cap);
      if (n.is_zero()) continue;
      auto it = r.terms.find(d);
      if (it == r.terms.end())
        r.terms.emplace(std::move(d), std::move(n));
      else
        it->second += n;
    }
  drop_zero_terms(r);
  return r;
}

namespace {

// coefficients q_0..q_n of e^t / ((e^t - 1)/t), by exact series division
std::vector<Rat> division_coeffs(int n) {
  std::vector<Rat> A(n + 1), B(n + 1), q(n + 1);
  Rat fact(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= Rat(i);
    A[i] = 1 / fact;              // 1/i!
    B[i] = A[i] / Rat(i + 1);     // 1/(i+1)!
  }
  for (int i = 0; i <= n; ++i) {
    Rat s = A[i];
    for (int j = 1; j <= i; ++j) s -= B[j] * q[i - j];
    q[i] = s;
  }
  return q;
}

Germ geometric_common(const RatVec& v, int D) {
  // e^t/(1-e^t) = -q(t)/t at t = <v,z>
  std::vector<Rat> q = division_coeffs(D + 1);
  std::size_t dim = v.size();
  Germ polar = germ_polar(dim, {{v, 1}}, Poly::constant(dim, Rat(-1)), D);
  Poly t = Poly::linear_form(dim, v);
  Poly jet(dim), power = Poly::constant(dim, Rat(1));
  for (int m = 0; m <= D; ++m) {
    jet += power.scaled(-q[m + 1]);
    if (m < D) power = poly_mul(power, t, D);
  }
  return germ_add(polar, germ_from_poly(dim, jet, D));
}

}  // namespace

Germ geometric_germ(const IntVec& u, int D) {
  if (trimmed_dim(u) == 0 || primitive_direction(to_ratvec(u)) != u)
    throw ValidationError("geometric_germ requires a primitive integer vector");
  return geometric_common(to_ratvec(u), D);
}

Germ geometric_germ_scaled(const RatVec& v, int D) {
  if (trimmed_dim(v) == 0)
    throw ValidationError("geometric_germ requires a nonzero direction");
  return geometric_common(v, D);
}

Germ integral_ray_germ(const RatVec& v) {
  if (trimmed_dim(v) == 0)
    throw ValidationError("integral ray requires a nonzero direction");
  std::size_t dim = v.size();
  return germ_polar(dim, {{v, 1}}, Poly::constant(dim, Rat(-1)));
}

std::complex<double> evaluate_numeric(const Germ& f,
                                      const std::vector<std::complex<double>>& z) {
  std::complex<double> sum = 0.0;
  for (const auto& [d, n] : f.terms) {
    std::complex<double> den = 1.0;
    for (const auto& factor : d) {
      std::complex<double> val = 0.0;
      for (std::size_t i = 0; i < factor.form.size() && i < z.size(); ++i)
        val += factor.form[i].get_d() * z[i];
      if (std::abs(val) < 1e-12)
        throw PoleError("denominator form " + vec_str(factor.form) +
                        " vanishes at the evaluation point");
      for (int e = 0; e < factor.pow; ++e) den *= val;
    }
    sum += n.eval(z) / den;
  }
  return sum;
}

namespace {

std::string form_str(const IntVec& u) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Int a = u[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? "-" : "+");
    }
    Int mag = abs(a);
    if (mag != 1) os << mag.get_str();
    os << "z" << (i + 1);
    first = false;
  }
  return os.str();
}

// single-coordinate forms print as plain powers; others get parentheses
std::string den_factor_str(const DenFactor& f) {
  std::size_t nz = 0, idx = 0;
  for (std::size_t i = 0; i < f.form.size(); ++i)
    if (f.form[i] != 0) {
      ++nz;
      idx = i;
    }
  std::ostringstream os;
  if (nz == 1 && f.form[idx] == 1)
    os << "z" << (idx + 1);
  else
    os << "(" << form_str(f.form) << ")";
  os << "^-" << f.pow;
  return os.str();
}

struct PrintAtom {
  int deg;
  std::string factors;
  Rat coeff;
};

}  // namespace

std::string germ_str(const Germ& f) {
  std::vector<PrintAtom> atoms;
  for (const auto& [d, n] : f.terms) {
    // single-coordinate factors merge with monomial exponents; general forms
    // keep their parenthesised power
    std::vector<int> base(f.dim, 0);
    std::string general;
    for (const auto& factor : d) {
      std::size_t nz = 0, idx = 0;
      for (std::size_t i = 0; i < factor.form.size(); ++i)
        if (factor.form[i] != 0) {
          ++nz;
          idx = i;
        }
      if (nz == 1 && factor.form[idx] == 1) {
        if (idx >= base.size()) base.resize(idx + 1, 0);
        base[idx] -= factor.pow;
      } else {
        if (!general.empty()) general += " ";
        general += den_factor_str(factor);
      }
    }
    for (const auto& [m, c] : n.terms()) {
      std::vector<int> net = base;
      if (m.size() > net.size()) net.resize(m.size(), 0);
      for (std::size_t i = 0; i < m.size(); ++i) net[i] += m[i];
      std::string fac;
      for (std::size_t i = 0; i < net.size(); ++i) {
        if (net[i] == 0) continue;
        if (!fac.empty()) fac += " ";
        fac += "z" + std::to_string(i + 1);
        if (net[i] != 1) fac += "^" + std::to_string(net[i]);
      }
      if (!general.empty()) {
        if (!fac.empty()) fac += " ";
        fac += general;
      }
      atoms.push_back({mono_deg(m) - pole_order(d), std::move(fac), c});
    }
  }
  if (atoms.empty()) return "0";
  std::stable_sort(atoms.begin(), atoms.end(), [](const PrintAtom& a, const PrintAtom& b) {
    return a.deg != b.deg ? a.deg < b.deg : a.factors < b.factors;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& a : atoms) {
    Rat c = a.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (a.factors.empty())
      os << rat_str(c);
    else if (c == 1)
      os << a.factors;
    else
      os << rat_str(c) << " " << a.factors;
    first = false;
  }
  return os.str();
}

}  // namespace conelab
