#include "conelab/germ_decompose.hpp"

#include <algorithm>
#include <limits>

#include "conelab/matrix.hpp"

namespace conelab {

namespace {

constexpr long kInf = std::numeric_limits<int>::max() / 4;

long window_of(const Germ& f) { return f.valid_up_to ? *f.valid_up_to : kInf; }

std::optional<int> term_cap(long window, const Den& d) {
  if (window >= kInf / 2) return std::nullopt;
  return static_cast<int>(window) + pole_order(d);
}

std::vector<RatVec> den_rows(const Den& d) {
  std::vector<RatVec> rows;
  rows.reserve(d.size());
  for (const auto& f : d) rows.push_back(to_ratvec(f.form));
  return rows;
}

// cancel denominator forms that divide the numerator exactly
void cancel_divisible(Den& d, Poly& num) {
  bool progress = true;
  while (progress && !num.is_zero()) {
    progress = false;
    for (auto& factor : d) {
      while (factor.pow > 0) {
        auto q = divide_by_linear(num, to_ratvec(factor.form));
        if (!q) break;
        num = std::move(*q);
        factor.pow -= 1;
        progress = true;
      }
    }
    d.erase(std::remove_if(d.begin(), d.end(),
                           [](const DenFactor& f) { return f.pow == 0; }),
            d.end());
  }
}

struct Circuit {
  std::vector<std::size_t> idx;  // positions in the den
  RatVec relation;               // sum relation[i] * form[idx[i]] = 0
  std::size_t m;                 // position in idx of the lex-largest form
};

std::optional<Circuit> find_circuit(const Den& d) {
  std::vector<RatVec> forms = den_rows(d);
  std::size_t n = forms.size();
  if (rank(forms) == n) return std::nullopt;
  std::size_t r = rank(forms);
  std::size_t k = 0;
  for (const auto& f : forms) k = std::max(k, f.size());
  for (std::size_t size = 2; size <= r + 1; ++size) {
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) idx.push_back(i);
      if (idx.size() != size) continue;
      RatMat rows(k, RatVec(size, Rat(0)));
      for (std::size_t c = 0; c < size; ++c)
        for (std::size_t j = 0; j < forms[idx[c]].size(); ++j)
          rows[j][c] = forms[idx[c]][j];
      std::vector<RatVec> ker = kernel_basis(rows, size);
      if (ker.empty()) continue;
      // ascending size scan: the first hit is a circuit, kernel is a line
      Circuit circ;
      circ.idx = idx;
      circ.relation = ker[0];
      circ.m = 0;
      for (std::size_t c = 1; c < size; ++c)
        if (d[idx[circ.m]].form < d[idx[c]].form) circ.m = c;
      return circ;
    }
  }
  return std::nullopt;
}

RatMat invert(const RatMat& m) {
  std::size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m[i].size() && j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw ValidationError("adapted coordinate basis is singular");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

bool fast_canonical(const InnerProductForm& Q, const Den& d, const Poly& num) {
  std::vector<bool> used(num.nvars(), false);
  for (const auto& [m, c] : num.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) used[i] = true;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) continue;
    RatVec e(i + 1, Rat(0));
    e[i] = 1;
    for (const auto& f : d)
      if (Q(e, to_ratvec(f.form)) != 0) return false;
  }
  return true;
}

void add_into(std::map<Den, Poly>& table, const Den& d, const Poly& p) {
  if (p.is_zero()) return;
  auto it = table.find(d);
  if (it == table.end()) {
    table.emplace(d, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) table.erase(it);
  }
}

// span of the directions a polynomial actually depends on: the standard-dot
// annihilator of the kernel of u -> directional derivative along u
std::vector<RatVec> dependence_span(const Poly& p, std::size_t k) {
  if (p.is_constant()) return {};
  std::map<Mono, RatVec> rowmap;
  for (std::size_t i = 0; i < k; ++i) {
    Poly di = p.derivative(i);
    for (const auto& [m, c] : di.terms()) {
      auto [it, inserted] = rowmap.emplace(m, RatVec(k, Rat(0)));
      it->second[i] = c;
    }
  }
  RatMat rows;
  rows.reserve(rowmap.size());
  for (auto& [m, row] : rowmap) rows.push_back(std::move(row));
  std::vector<RatVec> invariant = kernel_basis(rows, k);
  return kernel_basis(invariant, k);
}

}  // namespace

Germ make_denominators_independent(const Germ& f) {
  Germ out = germ_zero(f.dim);
  out.valid_up_to = f.valid_up_to;
  std::vector<std::pair<Den, Poly>> work(f.terms.begin(), f.terms.end());
  while (!work.empty()) {
    auto [d, num] = std::move(work.back());
    work.pop_back();
    if (num.is_zero()) continue;
    auto circ = find_circuit(d);
    if (!circ) {
      add_into(out.terms, d, num);
      continue;
    }
    // 1 = sum_{i != m} (-c_i/c_m) L_i / L_m: trades one denominator power of
    // each L_i for one of L_m; the power profile in descending form order
    // rises strictly, so iteration terminates
    const Rat& cm = circ->relation[circ->m];
    for (std::size_t c = 0; c < circ->idx.size(); ++c) {
      if (c == circ->m) continue;
      Rat alpha = -circ->relation[c] / cm;
      Den d2 = d;
      d2[circ->idx[c]].pow -= 1;
      d2[circ->idx[circ->m]].pow += 1;
      d2.erase(std::remove_if(d2.begin(), d2.end(),
                              [](const DenFactor& x) { return x.pow == 0; }),
               d2.end());
      work.emplace_back(std::move(d2), num.scaled(alpha));
    }
  }
  return out;
}

std::pair<Germ, Germ> decompose(const InnerProductForm& Q, const Germ& f) {
  Germ g = make_denominators_independent(f);
  long w = window_of(g);
  std::size_t k = g.dim;
  Germ holo = germ_zero(k);
  Germ polar = germ_zero(k);
  holo.valid_up_to = g.valid_up_to;
  polar.valid_up_to = g.valid_up_to;

  std::vector<std::pair<Den, Poly>> work(g.terms.begin(), g.terms.end());
  while (!work.empty()) {
    auto [d, num] = std::move(work.back());
    work.pop_back();
    if (num.is_zero()) continue;
    cancel_divisible(d, num);
    if (num.is_zero()) continue;
    if (d.empty()) {
      add_into(holo.terms, d, num);
      continue;
    }
    if (fast_canonical(Q, d, num)) {
      add_into(polar.terms, d, num);
      continue;
    }

    // adapted coordinates: denominator forms, then a basis of their
    // Q-orthogonal complement
    std::size_t m = d.size();
    std::vector<RatVec> basis = den_rows(d);
    for (auto& wv : orthogonal_complement(Q, basis, k)) basis.push_back(std::move(wv));
    RatMat M(basis.size(), RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis[i].size() && j < k; ++j) M[i][j] = basis[i][j];
    RatMat inv = invert(M);
    std::vector<Poly> images;
    images.reserve(k);
    for (std::size_t j = 0; j < k; ++j) images.push_back(Poly::linear_form(k, inv[j]));
    Poly num_u = substitute_linear(num, images, term_cap(w, d));

    // split each adapted monomial: cancel denominator powers, route the rest
    std::map<Den, Poly> canonical, recurse;
    for (const auto& [mu, c] : num_u.terms()) {
      Den d2;
      Mono residual = mu;
      bool leftover = false;
      for (std::size_t i = 0; i < m; ++i) {
        int a = mu[i];
        int cancelled = std::min(a, d[i].pow);
        residual[i] = a - cancelled;
        if (d[i].pow > cancelled) d2.push_back({d[i].form, d[i].pow - cancelled});
        if (residual[i] > 0) leftover = true;
      }
      Poly& target = leftover ? recurse[d2] : canonical[d2];
      if (target.nvars() != k) target = Poly(k);
      target.add_term(residual, c);
    }

    std::vector<Poly> back;
    back.reserve(k);
    for (std::size_t i = 0; i < k; ++i) back.push_back(Poly::linear_form(k, basis[i]));
    for (const auto& [d2, up] : canonical) {
      Poly num_z = substitute_linear(up, back, term_cap(w, d2));
      add_into(d2.empty() ? holo.terms : polar.terms, d2, num_z);
    }
    for (const auto& [d2, up] : recurse) {
      // a denominator form was consumed entirely but survives in the
      // numerator: strictly fewer forms, so the loop bottoms out
      Poly num_z = substitute_linear(up, back, term_cap(w, d2));
      if (!num_z.is_zero()) work.emplace_back(d2, std::move(num_z));
    }
  }
  if (g.valid_up_to) {
    holo = germ_truncate(holo, *g.valid_up_to);
    polar = germ_truncate(polar, *g.valid_up_to);
  }
  return {std::move(holo), std::move(polar)};
}

Germ project_plus(const InnerProductForm& Q, const Germ& f) {
  return decompose(Q, f).first;
}

Germ project_minus(const InnerProductForm& Q, const Germ& f) {
  return decompose(Q, f).second;
}

Germ canonical_form(const InnerProductForm& Q, const Germ& f) {
  auto [holo, polar] = decompose(Q, f);
  return germ_add(holo, polar);
}

Germ germ_mul(const Germ& f, const Germ& g) {
  Germ raw = make_denominators_independent(germ_mul_raw(f, g));
  Germ out = germ_zero(raw.dim);
  out.valid_up_to = raw.valid_up_to;
  for (auto& [d0, num0] : raw.terms) {
    Den d = d0;
    Poly num = num0;
    cancel_divisible(d, num);
    add_into(out.terms, d, num);
  }
  return out;
}

// Term-wise normal forms are not unique: a linear relation among the
// denominator forms of different terms, such as 1/(ab) + 1/(cb) - 1/(ac)
// for b = a + c, produces cancelling combinations that no rewrite of a
// single term can see. Zero is therefore decided over the common
// denominator, where cancellation is plain polynomial arithmetic. Every
// numerator is exact through window + its own pole order, so after
// multiplying up, components of degree <= window + total pole order are
// trustworthy and the rest are discarded.
bool germ_is_zero(const InnerProductForm& Q, const Germ& f) {
  (void)Q;
  if (f.terms.empty()) return true;
  std::map<IntVec, int> shared;  // max power of each form across all terms
  for (const auto& [d, num] : f.terms)
    for (const auto& factor : d) {
      int& p = shared[factor.form];
      p = std::max(p, factor.pow);
    }
  int depth = 0;
  for (const auto& [form, pw] : shared) depth += pw;
  std::optional<int> cap;
  if (f.valid_up_to) cap = *f.valid_up_to + depth;
  Poly total(f.dim);
  for (const auto& [d, num] : f.terms) {
    Poly m = num;
    for (const auto& [form, pw] : shared) {
      int have = 0;
      for (const auto& factor : d)
        if (factor.form == form) have = factor.pow;
      Poly lin = Poly::linear_form(f.dim, padded(to_ratvec(form), f.dim));
      for (int k = 0; k < pw - have; ++k) m = poly_mul(m, lin, cap);
    }
    total = total + m;
  }
  if (cap) total = total.truncated(*cap);
  return total.is_zero();
}

bool germ_equal(const InnerProductForm& Q, const Germ& f, const Germ& g) {
  return germ_is_zero(Q, germ_sub(f, g));
}

std::vector<IntVec> support_span(const InnerProductForm& Q, const Germ& f) {
  auto [holo, polar] = decompose(Q, f);
  std::size_t k = std::max(holo.dim, polar.dim);
  RatMat rows;
  for (const Germ* part : {&holo, &polar}) {
    for (const auto& [d, num] : part->terms) {
      for (const auto& factor : d) rows.push_back(to_ratvec(factor.form));
      for (auto& v : dependence_span(num, k)) rows.push_back(std::move(v));
    }
  }
  for (auto& r : rows) r = padded(r, k);
  rref(rows);
  std::vector<IntVec> out;
  for (const auto& r : rows)
    if (!vec_zero(r)) out.push_back(primitive_form(r).first);
  return out;
}

bool are_independent_germs(const InnerProductForm& Q, const Germ& f, const Germ& g) {
  std::vector<IntVec> a = support_span(Q, f);
  std::vector<IntVec> b = support_span(Q, g);
  for (const auto& u : a)
    for (const auto& v : b)
      if (Q(to_ratvec(u), to_ratvec(v)) != 0) return false;
  return true;
}

}  // namespace conelab
