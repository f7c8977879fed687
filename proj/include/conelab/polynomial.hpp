#pragma once

#include <complex>
#include <map>
#include <optional>

#include "conelab/ratvec.hpp"

namespace conelab {

using Mono = std::vector<int>;  // exponent vector, length = variable count

int mono_deg(const Mono& m);

// Sparse multivariate polynomial over Q with a fixed variable count.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rat& c);
  static Poly coordinate(std::size_t nvars, std::size_t i);
  static Poly linear_form(std::size_t nvars, const RatVec& u);  // z -> <u,z>

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return coef_.empty(); }
  const std::map<Mono, Rat>& terms() const { return coef_; }
  void add_term(const Mono& m, const Rat& c);
  Rat coeff(const Mono& m) const;
  bool is_constant() const;

  Poly padded_to(std::size_t nvars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(const Poly& a, const Poly& b);
  Poly scaled(const Rat& c) const;

  bool operator==(const Poly& o) const;  // up to padding
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::optional<int> low_deg() const;   // nullopt for the zero polynomial
  std::optional<int> high_deg() const;
  Poly truncated(int max_deg) const;
  Poly homogeneous_part(int d) const;
  Poly derivative(std::size_t i) const;

  std::complex<double> eval(const std::vector<std::complex<double>>& z) const;

 private:
  std::size_t nvars_;
  std::map<Mono, Rat> coef_;  // keys of length nvars_, no zero values
};

// Product, discarding monomials of total degree > max_deg when given.
Poly poly_mul(const Poly& a, const Poly& b, std::optional<int> max_deg = std::nullopt);

Poly poly_pow(const Poly& a, int e, std::optional<int> max_deg = std::nullopt);

// p(z) with z_i replaced by images[i]. Evaluated by Horner-style grouping on
// the trailing variable. The degree cap is sound only when every image has
// no component of degree < 1 (true for linear substitutions).
Poly substitute_linear(const Poly& p, const std::vector<Poly>& images,
                       std::optional<int> max_deg = std::nullopt);

// Exact quotient p / <L,z>, or nullopt when the form does not divide p.
std::optional<Poly> divide_by_linear(const Poly& p, const RatVec& L);

}  // namespace conelab
