#include "conelab/polynomial.hpp"

#include <algorithm>

namespace conelab {

int mono_deg(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::coordinate(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Rat(1));
  return p;
}

Poly Poly::linear_form(std::size_t nvars, const RatVec& u) {
  Poly p(nvars);
  for (std::size_t i = 0; i < u.size() && i < nvars; ++i) {
    Mono m(nvars, 0);
    m[i] = 1;
    p.add_term(m, u[i]);
  }
  return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  Mono key = m;
  key.resize(nvars_, 0);
  auto [it, inserted] = coef_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

Rat Poly::coeff(const Mono& m) const {
  Mono key = m;
  key.resize(nvars_, 0);
  auto it = coef_.find(key);
  return it == coef_.end() ? Rat(0) : it->second;
}

bool Poly::is_constant() const {
  if (coef_.empty()) return true;
  return coef_.size() == 1 && mono_deg(coef_.begin()->first) == 0;
}

Poly Poly::padded_to(std::size_t nvars) const {
  if (nvars <= nvars_) return *this;
  Poly p(nvars);
  for (const auto& [m, c] : coef_) p.add_term(m, c);
  return p;
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : coef_) p.coef_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ > nvars_) *this = padded_to(o.nvars_);
  for (const auto& [m, c] : o.coef_) add_term(m, c);
  return *this;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r += -b;
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly p(nvars_);
  if (c == 0) return p;
  for (const auto& [m, x] : coef_) p.coef_.emplace(m, c * x);
  return p;
}

bool Poly::operator==(const Poly& o) const {
  std::size_t k = std::max(nvars_, o.nvars_);
  return padded_to(k).coef_ == o.padded_to(k).coef_;
}

std::optional<int> Poly::low_deg() const {
  std::optional<int> d;
  for (const auto& [m, c] : coef_) {
    int e = mono_deg(m);
    if (!d || e < *d) d = e;
  }
  return d;
}

std::optional<int> Poly::high_deg() const {
  std::optional<int> d;
  for (const auto& [m, c] : coef_) {
    int e = mono_deg(m);
    if (!d || e > *d) d = e;
  }
  return d;
}

Poly Poly::truncated(int max_deg) const {
  Poly p(nvars_);
  for (const auto& [m, c] : coef_)
    if (mono_deg(m) <= max_deg) p.coef_.emplace(m, c);
  return p;
}

Poly Poly::homogeneous_part(int d) const {
  Poly p(nvars_);
  for (const auto& [m, c] : coef_)
    if (mono_deg(m) == d) p.coef_.emplace(m, c);
  return p;
}

Poly Poly::derivative(std::size_t i) const {
  Poly p(nvars_);
  for (const auto& [m, c] : coef_) {
    if (i >= m.size() || m[i] == 0) continue;
    Mono d = m;
    d[i] -= 1;
    p.add_term(d, c * Rat(m[i]));
  }
  return p;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& z) const {
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : coef_) {
    std::complex<double> v = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) v *= i < z.size() ? z[i] : 0.0;
    sum += v;
  }
  return sum;
}

Poly poly_mul(const Poly& a, const Poly& b, std::optional<int> max_deg) {
  std::size_t k = std::max(a.nvars(), b.nvars());
  Poly pa = a.padded_to(k), pb = b.padded_to(k);
  Poly r(k);
  for (const auto& [ma, ca] : pa.terms()) {
    int da = mono_deg(ma);
    for (const auto& [mb, cb] : pb.terms()) {
      if (max_deg && da + mono_deg(mb) > *max_deg) continue;
      Mono m(k);
      for (std::size_t i = 0; i < k; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly poly_pow(const Poly& a, int e, std::optional<int> max_deg) {
  Poly r = Poly::constant(a.nvars(), Rat(1));
  for (int i = 0; i < e; ++i) r = poly_mul(r, a, max_deg);
  return r;
}

namespace {

Poly subst_rec(const std::map<Mono, Rat>& terms, std::size_t k,
               const std::vector<Poly>& images, std::size_t out_vars,
               std::optional<int> max_deg) {
  Poly zero(out_vars);
  if (terms.empty()) return zero;
  if (k == 0) {
    Poly r(out_vars);
    for (const auto& [m, c] : terms) r.add_term(Mono(out_vars, 0), c);
    return r;
  }
  std::map<int, std::map<Mono, Rat>> groups;
  for (const auto& [m, c] : terms) {
    int e = k - 1 < m.size() ? m[k - 1] : 0;
    Mono rest = m;
    if (k - 1 < rest.size()) rest[k - 1] = 0;
    groups[e].emplace(std::move(rest), c);
  }
  // Horner on the trailing variable, highest exponent first
  Poly result(out_vars);
  int prev = -1;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (prev < 0) {
      result = subst_rec(it->second, k - 1, images, out_vars, max_deg);
    } else {
      for (int j = 0; j < prev - it->first; ++j)
        result = poly_mul(result, images[k - 1], max_deg);
      result += subst_rec(it->second, k - 1, images, out_vars, max_deg);
    }
    prev = it->first;
  }
  for (int j = 0; j < prev; ++j) result = poly_mul(result, images[k - 1], max_deg);
  return result;
}

}  // namespace

Poly substitute_linear(const Poly& p, const std::vector<Poly>& images,
                       std::optional<int> max_deg) {
  std::size_t out_vars = 0;
  for (const auto& im : images) out_vars = std::max(out_vars, im.nvars());
  std::vector<Poly> padded_images;
  padded_images.reserve(images.size());
  for (const auto& im : images) padded_images.push_back(im.padded_to(out_vars));
  return subst_rec(p.terms(), p.nvars(), padded_images, out_vars, max_deg);
}

std::optional<Poly> divide_by_linear(const Poly& p, const RatVec& L) {
  std::size_t k = std::max(p.nvars(), trimmed_dim(L));
  std::size_t piv = k;
  for (std::size_t i = 0; i < L.size(); ++i)
    if (L[i] != 0) piv = i;
  if (piv == k) return std::nullopt;  // zero form divides nothing

  Poly form = Poly::linear_form(k, L);
  Poly q(k), r = p.padded_to(k);
  while (true) {
    int e = 0;
    for (const auto& [m, c] : r.terms()) e = std::max(e, m[piv]);
    if (e == 0) break;
    Poly t(k);
    for (const auto& [m, c] : r.terms())
      if (m[piv] == e) {
        Mono m2 = m;
        m2[piv] = e - 1;
        t.add_term(m2, c / L[piv]);
      }
    q += t;
    r = r - poly_mul(t, form);
  }
  if (!r.is_zero()) return std::nullopt;
  return q;
}

}  // namespace conelab
