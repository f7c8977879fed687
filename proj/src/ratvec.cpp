#include "conelab/ratvec.hpp"

#include <algorithm>

namespace conelab {

std::size_t trimmed_dim(const RatVec& v) {
  std::size_t k = v.size();
  while (k > 0 && v[k - 1] == 0) --k;
  return k;
}

std::size_t trimmed_dim(const IntVec& v) {
  std::size_t k = v.size();
  while (k > 0 && v[k - 1] == 0) --k;
  return k;
}

RatVec padded(RatVec v, std::size_t k) {
  if (v.size() < k) v.resize(k, Rat(0));
  return v;
}

IntVec padded(IntVec v, std::size_t k) {
  if (v.size() < k) v.resize(k, Int(0));
  return v;
}

bool vec_eq(const RatVec& a, const RatVec& b) {
  std::size_t ka = trimmed_dim(a), kb = trimmed_dim(b);
  if (ka != kb) return false;
  for (std::size_t i = 0; i < ka; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool vec_zero(const RatVec& v) { return trimmed_dim(v) == 0; }

RatVec vec_add(const RatVec& a, const RatVec& b) {
  std::size_t k = std::max(a.size(), b.size());
  RatVec r = padded(a, k);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  std::size_t k = std::max(a.size(), b.size());
  RatVec r = padded(a, k);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
  RatVec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  std::size_t k = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) s += a[i] * b[i];
  return s;
}

RatVec to_ratvec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVec int_vec(const std::vector<long>& v) {
  IntVec r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

std::vector<RatVec> to_ratvecs(const std::vector<IntVec>& rows) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.push_back(to_ratvec(row));
  return r;
}

IntVec primitive_direction(const RatVec& v) {
  if (vec_zero(v)) throw ValidationError("primitive direction of the zero vector");
  Int den(1);
  for (const auto& x : v) {
    Int d = x.get_den();
    den = den / gcd(den, d) * d;
  }
  IntVec w;
  w.reserve(v.size());
  Int content(0);
  for (const auto& x : v) {
    Rat y = x * Rat(den);
    w.push_back(y.get_num());
    content = gcd(content, w.back());
  }
  for (auto& x : w) x /= content;
  return w;
}

std::pair<IntVec, int> primitive_form(const RatVec& v) {
  IntVec w = primitive_direction(v);
  int sign = 1;
  for (const auto& x : w) {
    if (x == 0) continue;
    if (x < 0) sign = -1;
    break;
  }
  if (sign < 0)
    for (auto& x : w) x = -x;
  return {w, sign};
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace conelab
