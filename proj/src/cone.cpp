#include "conelab/cone.hpp"

#include <algorithm>
#include <sstream>

namespace conelab {

namespace {

int cmp_trimmed(const IntVec& a, const IntVec& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Int x = i < a.size() ? a[i] : Int(0);
    Int y = i < b.size() ? b[i] : Int(0);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

bool lt_trimmed(const IntVec& a, const IntVec& b) { return cmp_trimmed(a, b) < 0; }
bool eq_trimmed(const IntVec& a, const IntVec& b) { return cmp_trimmed(a, b) == 0; }

}  // namespace

LatticeCone LatticeCone::make(const std::vector<IntVec>& generators,
                              const std::optional<std::vector<RatVec>>& lattice,
                              std::optional<std::size_t> ambient_dim) {
  std::size_t ambient = ambient_dim.value_or(0);
  std::vector<IntVec> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    if (trimmed_dim(g) == 0) throw ValidationError("zero vector cannot generate a ray");
    gens.push_back(primitive_direction(to_ratvec(g)));
    ambient = std::max(ambient, trimmed_dim(g));
  }
  if (lattice)
    for (const auto& b : *lattice) ambient = std::max(ambient, trimmed_dim(b));
  for (auto& g : gens) g = padded(std::move(g), ambient);
  std::sort(gens.begin(), gens.end(), lt_trimmed);
  if (rank(to_ratvecs(gens)) != gens.size())
    throw ValidationError("non-simplicial input; triangulate first");

  IntLattice L;
  if (lattice) {
    L = IntLattice::from_vectors(*lattice, ambient);
    if (L.rank() != gens.size())
      throw ValidationError("lattice does not span the cone's span");
    std::vector<RatVec> span = to_ratvecs(gens);
    for (const auto& b : L.basis_rows())
      if (!coordinates_in(span, b))
        throw ValidationError("lattice does not span the cone's span");
  } else {
    L = IntLattice::from_vectors(to_ratvecs(gens), ambient);
  }

  LatticeCone c;
  c.ambient_ = ambient;
  c.gens_ = std::move(gens);
  c.lattice_ = std::move(L);
  return c;
}

LatticeCone LatticeCone::from_parts(std::vector<IntVec> generators, IntLattice lattice,
                                    std::size_t ambient_dim) {
  for (auto& g : generators) g = padded(std::move(g), ambient_dim);
  std::sort(generators.begin(), generators.end(), lt_trimmed);
  LatticeCone c;
  c.ambient_ = ambient_dim;
  c.gens_ = std::move(generators);
  c.lattice_ = std::move(lattice);
  return c;
}

std::optional<RatVec> LatticeCone::ray_coordinates(const RatVec& v) const {
  return coordinates_in(to_ratvecs(gens_), v);
}

bool LatticeCone::operator==(const LatticeCone& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!eq_trimmed(gens_[i], o.gens_[i])) return false;
  return lattice_ == o.lattice_;
}

bool LatticeCone::operator<(const LatticeCone& o) const {
  if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size();
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    int c = cmp_trimmed(gens_[i], o.gens_[i]);
    if (c != 0) return c < 0;
  }
  return lattice_ < o.lattice_;
}

std::string LatticeCone::str() const {
  if (is_zero()) return "<>";
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ",";
    os << vec_str(gens_[i]);
  }
  os << "> lattice " << lattice_.str();
  return os.str();
}

LatticeCone make_cone(const std::vector<IntVec>& generators,
                      const std::optional<std::vector<RatVec>>& lattice,
                      std::optional<std::size_t> ambient_dim) {
  return LatticeCone::make(generators, lattice, ambient_dim);
}

std::vector<LatticeCone> faces(const LatticeCone& C) {
  const auto& g = C.generators();
  std::size_t n = g.size();
  std::vector<LatticeCone> out;
  out.reserve(std::size_t(1) << n);
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<IntVec> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) sub.push_back(g[i]);
    IntLattice L = lattice_intersect_span(C.lattice(), to_ratvecs(sub));
    out.push_back(LatticeCone::from_parts(std::move(sub), std::move(L), C.ambient_dim()));
  }
  return out;
}

bool is_face_of(const LatticeCone& F, const LatticeCone& C) {
  for (const auto& f : F.generators()) {
    bool found = false;
    for (const auto& g : C.generators())
      if (eq_trimmed(f, g)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return F.lattice() == lattice_intersect_span(C.lattice(), to_ratvecs(F.generators()));
}

LatticeCone transverse_cone(const InnerProductForm& Q, const LatticeCone& C,
                            const LatticeCone& F) {
  if (!is_face_of(F, C))
    throw ValidationError("transverse cone requires a face of the cone");
  std::size_t ambient = std::max(C.ambient_dim(), F.ambient_dim());
  std::vector<RatVec> V = to_ratvecs(F.generators());
  std::vector<IntVec> gens;
  for (const auto& g : C.generators()) {
    RatVec w = project_orthogonal(Q, to_ratvec(g), V);
    if (vec_zero(w)) continue;
    gens.push_back(primitive_direction(w));
  }
  std::vector<RatVec> lat;
  for (const auto& b : C.lattice().basis_rows())
    lat.push_back(project_orthogonal(Q, b, V));
  IntLattice L = IntLattice::from_vectors(lat, ambient);
  return LatticeCone::from_parts(std::move(gens), std::move(L), ambient);
}

LatticeCone minkowski_product(const LatticeCone& a, const LatticeCone& b) {
  std::size_t ambient = std::max(a.ambient_dim(), b.ambient_dim());
  std::vector<IntVec> gens;
  auto add_gen = [&](const IntVec& g) {
    for (const auto& h : gens)
      if (eq_trimmed(g, h)) return;
    gens.push_back(padded(g, ambient));
  };
  for (const auto& g : a.generators()) add_gen(g);
  for (const auto& g : b.generators()) add_gen(g);
  if (rank(to_ratvecs(gens)) != gens.size())
    throw ValidationError("product leaves the simplicial class");
  std::vector<RatVec> lat = a.lattice().basis_rows();
  for (auto& v : b.lattice().basis_rows()) lat.push_back(std::move(v));
  IntLattice L = IntLattice::from_vectors(lat, ambient);
  return LatticeCone::from_parts(std::move(gens), std::move(L), ambient);
}

bool are_orthogonal(const InnerProductForm& Q, const LatticeCone& a, const LatticeCone& b) {
  for (const auto& u : a.lattice().basis_rows())
    for (const auto& v : b.lattice().basis_rows())
      if (Q(u, v) != 0) return false;
  return true;
}

std::string cone_element_str(const ConeElement& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, coef] : x.terms) {
    Rat a = coef;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << rat_str(a) << "*";
    os << c.str();
    first = false;
  }
  return os.str();
}

}  // namespace conelab
