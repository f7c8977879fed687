#include "conelab/rational.hpp"

#include <cctype>

namespace conelab {

Rat rat_parse(const std::string& s) {
  auto fail = [&]() -> void {
    throw ValidationError("malformed rational '" + s + "' (want \"p\" or \"p/q\")");
  };
  std::size_t i = 0;
  auto scan_int = [&] {
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail();
  };
  scan_int();
  if (i != s.size()) {
    if (s[i] != '/') fail();
    ++i;
    scan_int();
    if (i != s.size()) fail();
  }
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), t.c_str(), 10) != 0) fail();
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw ValidationError("rational '" + s + "' has zero denominator");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace conelab
