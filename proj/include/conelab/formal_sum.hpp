#pragma once

#include <map>

#include "conelab/rational.hpp"

namespace conelab {

// Free module over the basis type; zero coefficients are never stored.
template <class B>
struct FormalSum {
  std::map<B, Rat> terms;

  FormalSum() = default;

  static FormalSum basis(const B& b, const Rat& c = Rat(1)) {
    FormalSum s;
    s.add_term(b, c);
    return s;
  }

  void add_term(const B& b, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [b, c] : o.terms) add_term(b, c);
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

  FormalSum scaled(const Rat& c) const {
    FormalSum s;
    if (c == 0) return s;
    for (const auto& [b, x] : terms) s.terms.emplace(b, c * x);
    return s;
  }

  bool zero() const { return terms.empty(); }

  bool operator==(const FormalSum& o) const { return terms == o.terms; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }
};

}  // namespace conelab
