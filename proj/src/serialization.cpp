#include "conelab/serialization.hpp"

#include <fstream>

namespace conelab {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw ValidationError("\"" + field + "\" " + what);
}

const Json& member(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) bad(field, "is missing");
  return j.at(field);
}

long long int_member(const Json& j, const std::string& field) {
  const Json& v = member(j, field);
  if (!v.is_number_integer()) bad(field, "must be an integer");
  return v.get<long long>();
}

Rat rat_from_string(const std::string& s, const std::string& field) {
  try {
    Rat r(s);
    if (r.get_den() == 0) bad(field, "has a zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    bad(field, "is not a rational \"p/q\": " + s);
  }
}

IntVec int_vector(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "must be an array of integers");
  IntVec v;
  for (const Json& x : j) {
    if (!x.is_number_integer()) bad(field, "must be an array of integers");
    v.emplace_back(x.get<long>());
  }
  return v;
}

Json int_entry(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

// lattice rows may be rational after transverse projections, so entries are
// numbers when integral and "p/q" strings otherwise
Json rat_entry(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p())
    return Json(x.get_num().get_si());
  return Json(rat_to_string(x));
}

}  // namespace

Rat rat_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>(), field);
  bad(field, "must be a rational \"p/q\" string");
}

std::string rat_to_string(const Rat& r) { return rat_str(r); }

Json cone_to_json(const LatticeCone& c) {
  Json gens = Json::array();
  for (const IntVec& g : c.generators()) {
    Json row = Json::array();
    for (const Int& x : padded(g, c.ambient_dim())) row.push_back(int_entry(x));
    gens.push_back(std::move(row));
  }
  Json lattice = Json::array();
  for (const RatVec& b : c.lattice().basis_rows()) {
    Json row = Json::array();
    for (const Rat& x : padded(b, c.ambient_dim())) row.push_back(rat_entry(x));
    lattice.push_back(std::move(row));
  }
  return Json{{"ambient_dim", c.ambient_dim()},
              {"generators", std::move(gens)},
              {"lattice", std::move(lattice)}};
}

LatticeCone cone_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("cone must be a JSON object");
  long long ambient = int_member(j, "ambient_dim");
  if (ambient < 0) bad("ambient_dim", "must be non-negative");

  const Json& jg = member(j, "generators");
  if (!jg.is_array()) bad("generators", "must be an array of integer vectors");
  std::vector<IntVec> gens;
  for (const Json& row : jg) gens.push_back(int_vector(row, "generators"));

  std::optional<std::vector<RatVec>> lattice;
  if (j.contains("lattice") && !j.at("lattice").is_null()) {
    const Json& jl = j.at("lattice");
    if (!jl.is_array()) bad("lattice", "must be an array of vectors");
    std::vector<RatVec> rows;
    for (const Json& row : jl) {
      if (!row.is_array()) bad("lattice", "must be an array of vectors");
      RatVec v;
      for (const Json& x : row) v.push_back(rat_from_json(x, "lattice"));
      rows.push_back(std::move(v));
    }
    lattice = std::move(rows);
  }
  return LatticeCone::make(gens, lattice, static_cast<std::size_t>(ambient));
}

Json cone_element_to_json(const ConeElement& x) {
  Json terms = Json::array();
  for (const auto& [c, coeff] : x.terms)
    terms.push_back(Json{{"coeff", rat_to_string(coeff)}, {"cone", cone_to_json(c)}});
  return Json{{"terms", std::move(terms)}};
}

ConeElement cone_element_from_json(const Json& j) {
  const Json& jt = member(j, "terms");
  if (!jt.is_array()) bad("terms", "must be an array");
  ConeElement x;
  for (const Json& t : jt)
    x.add_term(cone_from_json(member(t, "cone")),
               rat_from_json(member(t, "coeff"), "coeff"));
  return x;
}

Json germ_to_json(const Germ& f) {
  Json terms = Json::array();
  for (const auto& [den, num] : f.terms) {
    if (num.is_zero()) continue;
    Json jden = Json::array();
    for (const DenFactor& factor : den) {
      Json form = Json::array();
      for (const Int& x : factor.form) form.push_back(int_entry(x));
      jden.push_back(Json{{"form", std::move(form)}, {"pow", factor.pow}});
    }
    Json jnum = Json::array();
    for (const auto& [m, c] : num.terms())
      jnum.push_back(Json{{"exps", m}, {"coeff", rat_to_string(c)}});
    terms.push_back(Json{{"den", std::move(jden)}, {"num", std::move(jnum)}});
  }
  Json valid;  // null: exact
  if (f.valid_up_to) valid = *f.valid_up_to;
  return Json{{"ambient_dim", f.dim},
              {"valid_up_to", std::move(valid)},
              {"terms", std::move(terms)}};
}

Germ germ_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("germ must be a JSON object");
  long long ambient = int_member(j, "ambient_dim");
  if (ambient < 0) bad("ambient_dim", "must be non-negative");
  std::size_t dim = static_cast<std::size_t>(ambient);

  std::optional<int> valid;
  const Json& jv = member(j, "valid_up_to");
  if (!jv.is_null()) {
    if (!jv.is_number_integer()) bad("valid_up_to", "must be an integer or null");
    valid = jv.get<int>();
  }

  const Json& jt = member(j, "terms");
  if (!jt.is_array()) bad("terms", "must be an array");
  Germ out = germ_zero(dim);
  out.valid_up_to = valid;
  for (const Json& t : jt) {
    std::vector<std::pair<RatVec, int>> den;
    if (t.contains("den") && !t.at("den").is_null()) {
      const Json& jd = t.at("den");
      if (!jd.is_array()) bad("den", "must be an array of factors");
      for (const Json& factor : jd) {
        IntVec form = int_vector(member(factor, "form"), "form");
        long long pw = int_member(factor, "pow");
        if (pw < 1) bad("pow", "must be a positive integer");
        RatVec rform(form.begin(), form.end());
        if (rform.size() > dim) bad("form", "has more entries than ambient_dim");
        den.emplace_back(padded(std::move(rform), dim), static_cast<int>(pw));
      }
    }
    const Json& jn = member(t, "num");
    if (!jn.is_array()) bad("num", "must be an array of monomials");
    Poly num(dim);
    for (const Json& mono : jn) {
      const Json& je = member(mono, "exps");
      if (!je.is_array()) bad("exps", "must be an array of exponents");
      Mono m;
      for (const Json& e : je) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
          bad("exps", "must be non-negative integers");
        m.push_back(e.get<int>());
      }
      if (m.size() != dim) bad("exps", "must have ambient_dim entries");
      num.add_term(m, rat_from_json(member(mono, "coeff"), "coeff"));
    }
    Germ term = den.empty() ? germ_from_poly(dim, num, valid)
                            : germ_polar(dim, den, num, valid);
    out = germ_add(out, term);
  }
  return out;
}

InnerProductForm gram_family_from_json(const Json& j) {
  const Json& jd = member(j, "dims");
  if (!jd.is_array()) bad("dims", "must be an array of dimensions");
  const Json& jg = member(j, "gram");
  if (!jg.is_object()) bad("gram", "must map dimensions to matrices");
  std::map<std::size_t, RatMat> grams;
  for (const Json& d : jd) {
    if (!d.is_number_integer() || d.get<long long>() < 1)
      bad("dims", "must be positive integers");
    std::size_t k = d.get<std::size_t>();
    std::string key = std::to_string(k);
    if (!jg.contains(key)) bad("gram", "is missing the matrix for dimension " + key);
    const Json& jm = jg.at(key);
    if (!jm.is_array() || jm.size() != k)
      bad("gram", "matrix for dimension " + key + " must have " + key + " rows");
    RatMat m;
    for (const Json& row : jm) {
      if (!row.is_array() || row.size() != k)
        bad("gram", "matrix for dimension " + key + " must be square");
      RatVec r;
      for (const Json& x : row) r.push_back(rat_from_json(x, "gram"));
      m.push_back(std::move(r));
    }
    grams[k] = std::move(m);
  }
  if (jg.size() != grams.size())
    bad("gram", "has matrices for dimensions not listed in \"dims\"");
  return InnerProductForm::from_gram(grams);
}

std::vector<std::complex<double>> point_from_json(const Json& j) {
  if (!j.is_array()) bad("point", "must be an array of numbers");
  std::vector<std::complex<double>> z;
  for (const Json& x : j) {
    if (!x.is_number()) bad("point", "must be an array of numbers");
    z.emplace_back(x.get<double>(), 0.0);
  }
  return z;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace conelab
