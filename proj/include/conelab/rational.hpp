#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace conelab {

using Int = mpz_class;
using Rat = mpq_class;

// Input data failed validation (malformed file, broken precondition of a
// public operation). The CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A partial product was requested on a pair that is not independent for the
// ambient locality relation. Surfacing this loudly is intentional: the
// factorisation theorems guarantee such products never arise, so hitting one
// is a bug witness, not a recoverable condition.
struct LocalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric evaluation hit a vanishing denominator form.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q"; result is reduced with positive denominator.
Rat rat_parse(const std::string& s);

// Inverse of rat_parse; integers print without the "/1".
std::string rat_str(const Rat& r);

// Floor division. mpz_class operator/ truncates toward zero, which is the
// wrong convention for Hermite-form reduction.
Int fdiv(const Int& a, const Int& b);

}  // namespace conelab
