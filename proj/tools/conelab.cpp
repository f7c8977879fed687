#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conelab/cone_hopf.hpp"
#include "conelab/germ_decompose.hpp"
#include "conelab/serialization.hpp"
#include "conelab/subdivision.hpp"

namespace {

using namespace conelab;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_complex(const std::complex<double>& v) {
  if (v.imag() == 0.0) return fmt_double(v.real());
  return fmt_double(v.real()) + (v.imag() < 0 ? " - " : " + ") +
         fmt_double(std::abs(v.imag())) + "i";
}

InnerProductForm load_gram(const std::string& path) {
  if (path.empty()) return InnerProductForm::standard();
  return gram_family_from_json(load_json_file(path));
}

void emit_germ(const Germ& g, const std::string& format) {
  if (format == "pretty")
    std::cout << germ_str(g) << "\n";
  else
    std::cout << germ_to_json(g).dump() << "\n";
}

// character table over the face lattice of the input cone
Json face_table_json(const std::vector<LatticeCone>& fs,
                     const Character<LatticeCone, Germ>& chi, int order) {
  Json out = Json::array();
  for (const LatticeCone& f : fs)
    out.push_back(Json{{"cone", cone_to_json(f)},
                       {"germ", germ_to_json(germ_truncate(chi(f), order))}});
  return out;
}

int run_verify(const InnerProductForm& Q, const LatticeCone& c, int order) {
  bool ok = true;

  EulerMaclaurinReport em = euler_maclaurin_verify(Q, c, order);
  if (em.match) {
    std::cout << "CHECK euler-maclaurin PASS\n";
  } else {
    std::cout << "CHECK euler-maclaurin FAIL discrepancy "
              << germ_str(em.discrepancy) << "\n";
    ok = false;
  }

  bool invariant = true;
  if (c.dim() >= 2) {
    // pivot the whole cone at the sum of its aligned generators, a lattice
    // point no stellar pass would pick first, and re-run the open-cell sum
    RatVec q(c.ambient_dim(), Rat(0));
    for (const RatVec& g : aligned_generators(c))
      for (std::size_t i = 0; i < q.size(); ++i) q[i] += g[i];
    Germ via = exp_sum_over(c, subdivide_at(c, q), order);
    invariant = germ_equal(Q, via, exp_sum(c, order));
  }
  std::cout << "CHECK subdivision-invariance " << (invariant ? "PASS" : "FAIL")
            << "\n";
  ok = ok && invariant;

  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generating functions of convex lattice cones"};
  app.require_subcommand(1);

  std::string cone_path, other_path, gram_path, point_path;
  int order = 4;
  long radius = 40;
  std::string format = "json";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output as machine json or a pretty line")
        ->check(CLI::IsMember({"json", "pretty"}));
  };
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "truncation degree (default 4)");
  };
  auto add_gram = [&](CLI::App* cmd) {
    cmd->add_option("--gram", gram_path, "Gram family file for the pairing");
  };

  CLI::App* sum = app.add_subcommand("sum", "interior lattice sum as a Laurent germ");
  sum->add_option("cone", cone_path, "cone file")->required();
  add_order(sum);
  add_format(sum);

  CLI::App* integral = app.add_subcommand("integral", "cone integral as an exact germ");
  integral->add_option("cone", cone_path, "cone file")->required();
  add_order(integral);  // accepted for uniformity; the integral is exact
  add_format(integral);

  CLI::App* mu = app.add_subcommand("mu", "renormalised holomorphic value");
  mu->add_option("cone", cone_path, "cone file")->required();
  add_order(mu);
  add_gram(mu);
  add_format(mu);

  CLI::App* birkhoff =
      app.add_subcommand("birkhoff", "factor the sum character over the face lattice");
  birkhoff->add_option("cone", cone_path, "cone file")->required();
  add_order(birkhoff);
  add_gram(birkhoff);
  add_format(birkhoff);

  CLI::App* coproduct =
      app.add_subcommand("coproduct", "face and transverse-complement pairs");
  coproduct->add_option("cone", cone_path, "cone file")->required();
  add_gram(coproduct);
  add_format(coproduct);

  CLI::App* subdivide = app.add_subcommand("subdivide", "smooth subdivision pieces");
  subdivide->add_option("cone", cone_path, "cone file")->required();
  add_format(subdivide);

  CLI::App* ortho =
      app.add_subcommand("check-orthogonal", "test two cones for orthogonality");
  ortho->add_option("cone", cone_path, "first cone file")->required();
  ortho->add_option("other", other_path, "second cone file")->required();
  add_gram(ortho);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a germ file at a point");
  eval->add_option("germ", cone_path, "germ file")->required();
  eval->add_option("--point", point_path, "point file (array of reals)")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle-sum", "numeric lattice sum truncated at a coefficient radius");
  oracle->add_option("cone", cone_path, "cone file")->required();
  oracle->add_option("--point", point_path, "point file (array of reals)")->required();
  oracle->add_option("--radius", radius, "coefficient-norm cutoff (default 40)");

  CLI::App* verify = app.add_subcommand("verify", "run the identity checks on a cone");
  verify->add_option("cone", cone_path, "cone file")->required();
  add_order(verify);
  add_gram(verify);

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(sum)) {
      emit_germ(exp_sum(cone_from_json(load_json_file(cone_path)), order), format);
    } else if (app.got_subcommand(integral)) {
      emit_germ(exp_integral(cone_from_json(load_json_file(cone_path))), format);
    } else if (app.got_subcommand(mu)) {
      InnerProductForm Q = load_gram(gram_path);
      emit_germ(renormalized_mu(Q, cone_from_json(load_json_file(cone_path)), order),
                format);
    } else if (app.got_subcommand(birkhoff)) {
      InnerProductForm Q = load_gram(gram_path);
      LatticeCone c = cone_from_json(load_json_file(cone_path));
      int internal = order + static_cast<int>(c.dim());
      BirkhoffFactors<LatticeCone, Germ> bf = birkhoff_via_projection(
          sum_character(internal), cone_coalgebra(Q), germ_target(Q));
      std::vector<LatticeCone> fs = faces(c);
      if (format == "pretty") {
        for (const LatticeCone& f : fs)
          std::cout << "phi1_inv(" << f.str()
                    << ") = " << germ_str(germ_truncate(bf.phi1_inv(f), order))
                    << "\n";
        for (const LatticeCone& f : fs)
          std::cout << "phi2(" << f.str()
                    << ") = " << germ_str(germ_truncate(bf.phi2(f), order)) << "\n";
      } else {
        std::cout << Json{{"order", order},
                          {"phi1_inv", face_table_json(fs, bf.phi1_inv, order)},
                          {"phi2", face_table_json(fs, bf.phi2, order)}}
                         .dump()
                  << "\n";
      }
    } else if (app.got_subcommand(coproduct)) {
      InnerProductForm Q = load_gram(gram_path);
      LatticeCone c = cone_from_json(load_json_file(cone_path));
      auto pairs = cone_coproduct(Q, c);
      if (format == "pretty") {
        for (const auto& [t, f] : pairs)
          std::cout << "(" << t.str() << ") x (" << f.str() << ")\n";
      } else {
        Json terms = Json::array();
        for (const auto& [t, f] : pairs)
          terms.push_back(
              Json{{"left", cone_to_json(t)}, {"right", cone_to_json(f)}});
        std::cout << Json{{"terms", std::move(terms)}}.dump() << "\n";
      }
    } else if (app.got_subcommand(subdivide)) {
      LatticeCone c = cone_from_json(load_json_file(cone_path));
      std::vector<LatticeCone> pieces = smooth_subdivision(c);
      if (format == "pretty") {
        for (const LatticeCone& p : pieces) std::cout << p.str() << "\n";
      } else {
        Json out = Json::array();
        for (const LatticeCone& p : pieces) out.push_back(cone_to_json(p));
        std::cout << Json{{"pieces", std::move(out)}}.dump() << "\n";
      }
    } else if (app.got_subcommand(ortho)) {
      InnerProductForm Q = load_gram(gram_path);
      bool orth = are_orthogonal(Q, cone_from_json(load_json_file(cone_path)),
                                 cone_from_json(load_json_file(other_path)));
      std::cout << "orthogonal: " << (orth ? "true" : "false") << "\n";
    } else if (app.got_subcommand(eval)) {
      Germ g = germ_from_json(load_json_file(cone_path));
      std::vector<std::complex<double>> z =
          point_from_json(load_json_file(point_path));
      if (z.size() != g.dim)
        throw ValidationError("\"point\" has " + std::to_string(z.size()) +
                              " entries, germ is ambient " + std::to_string(g.dim));
      std::complex<double> v = evaluate_numeric(g, z);
      std::cout << "value: " << fmt_complex(v) << "\n";
    } else if (app.got_subcommand(oracle)) {
      LatticeCone c = cone_from_json(load_json_file(cone_path));
      std::vector<std::complex<double>> z =
          point_from_json(load_json_file(point_path));
      LatticeSumSample s = oracle_sum(c, z, radius);
      std::cout << "value: " << fmt_complex(s.value) << "\n";
      std::cout << "truncation: " << fmt_double(s.truncation) << "\n";
    } else if (app.got_subcommand(verify)) {
      InnerProductForm Q = load_gram(gram_path);
      return run_verify(Q, cone_from_json(load_json_file(cone_path)), order);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
