// Command-line front end: sequence generation, Theorem-1-style grid
// verification, certificate generation and certification.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "partible/json_io.hpp"

namespace {

using namespace partible;

std::vector<int> epsilon_list(const std::string& s) {
  if (s == "both") return {-1, 1};
  if (s == "1") return {1};
  if (s == "-1") return {-1};
  throw CLI::ValidationError("--epsilon must be 1, -1 or both");
}

std::vector<Int> z_range(long zmin, long zmax) {
  std::vector<Int> zs;
  for (long z = zmin; z <= zmax; ++z) zs.push_back(Int(z));
  return zs;
}

int emit_report(const CongruenceReport& rep, const std::string& json_path, bool points) {
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report_to_json(rep, points).dump(2) << "\n";
  }
  std::cout << "passed " << rep.passed << ", failed " << rep.failed << ", skipped "
            << rep.skipped << "\n";
  if (!rep.ok()) {
    for (const auto& r : rep.points)
      if (!r.pass)
        std::cout << "FAIL " << r.family << " p=" << r.p << " r=" << r.r
                  << " eps=" << r.epsilon << " z=" << r.z.get_str() << " residue=" << r.residue
                  << " expected=" << r.expected << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-partible reduction and Schroder polynomial congruence toolkit"};
  app.require_subcommand(1);

  // seq
  auto* seq = app.add_subcommand("seq", "print exact sequence values or polynomials");
  std::string seq_family = "large";
  long seq_n = 10, seq_z = 1;
  bool seq_symbolic = false;
  seq->add_option("--family", seq_family, "large|little|delannoy");
  seq->add_option("--n", seq_n, "last index");
  seq->add_option("--z", seq_z, "integer z");
  seq->add_flag("--symbolic", seq_symbolic, "print polynomials in z");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification grid");
  verify->require_subcommand(1);
  long pmax = 100, rmax = 4, zmin = -10, zmax = 10, nmax = 200, smax = 6;
  std::string eps_str = "both", json_path;
  bool with_points = false;
  auto add_common = [&](CLI::App* c, bool z_opts) {
    c->add_option("--epsilon", eps_str, "1|-1|both");
    c->add_option("--json", json_path, "write JSON report here");
    c->add_flag("--points", with_points, "include per-point records in the JSON report");
    if (z_opts) {
      c->add_option("--zmin", zmin);
      c->add_option("--zmax", zmax);
    }
  };
  auto* th1 = verify->add_subcommand("theorem1", "full congruence grid");
  th1->add_option("--pmax", pmax);
  th1->add_option("--rmax", rmax);
  add_common(th1, true);
  auto* lem = verify->add_subcommand("lemma32", "r = 0 congruences and Delannoy identities");
  lem->add_option("--pmax", pmax);
  add_common(lem, true);
  auto* div = verify->add_subcommand("divisibility", "telescoped-sum closed form and divisibility");
  div->add_option("--nmax", nmax);
  div->add_option("--smax", smax);
  add_common(div, true);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "print a reduction certificate as JSON");
  long red_r = 1;
  int red_eps = 1;
  long red_z = 0;
  bool red_has_z = false;
  reduce->add_option("--r", red_r, "target exponent is 2r+1");
  reduce->add_option("--epsilon", red_eps, "1 or -1");
  reduce->add_option("--z", red_z, "also evaluate multipliers at this integer z");

  // certify
  auto* certify = app.add_subcommand("certify", "check a certificate symbolically and mod p");
  std::string cert_path;
  long cert_pmax = 50, cert_zmin = -6, cert_zmax = 6;
  certify->add_option("--in", cert_path, "certificate JSON file")->required();
  certify->add_option("--pmax", cert_pmax);
  certify->add_option("--zmin", cert_zmin);
  certify->add_option("--zmax", cert_zmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (seq->parsed()) {
      Family fam;
      if (seq_family == "large")
        fam = Family::LargeSchroder;
      else if (seq_family == "little")
        fam = Family::LittleSchroder;
      else if (seq_family == "delannoy")
        fam = Family::CentralDelannoy;
      else {
        std::cerr << "unknown family: " << seq_family << "\n";
        return 2;
      }
      for (long n = 0; n <= seq_n; ++n) {
        if (seq_symbolic)
          std::cout << render_zpoly(family_poly(fam, n)) << "\n";
        else
          std::cout << eval_int_poly(family_poly(fam, n), Int(seq_z)) << "\n";
      }
      return 0;
    }

    if (th1->parsed()) {
      GridSpec grid;
      grid.primes = odd_primes_below(static_cast<std::uint64_t>(pmax));
      for (long r = 0; r <= rmax; ++r) grid.r_values.push_back(r);
      grid.epsilons = epsilon_list(eps_str);
      grid.z_values = z_range(zmin, zmax);
      return emit_report(verify_theorem1(grid), json_path, with_points);
    }
    if (lem->parsed()) {
      return emit_report(verify_lemma32(odd_primes_below(static_cast<std::uint64_t>(pmax)),
                                        epsilon_list(eps_str), z_range(zmin, zmax)),
                         json_path, with_points);
    }
    if (div->parsed()) {
      return emit_report(verify_divisibility(nmax, smax, epsilon_list(eps_str),
                                             z_range(zmin, zmax)),
                         json_path, with_points);
    }

    if (reduce->parsed()) {
      red_has_z = reduce->count("--z") > 0;
      ReductionCertificate cert = schroder_certificate(red_r, red_eps);
      json j = certificate_to_json(cert);
      if (red_has_z) {
        require_eta_nonzero(red_eps, Rat(red_z));
        json sp;
        sp["z"] = red_z;
        json combo = json::array();
        for (const auto& term : cert.combo)
          combo.push_back({term.j, term.v.eval(Rat(red_z)).get_str()});
        sp["combo"] = combo;
        j["specialized"] = sp;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (certify->parsed()) {
      std::ifstream in(cert_path);
      if (!in) {
        std::cerr << "cannot open " << cert_path << "\n";
        return 2;
      }
      json j = json::parse(in);
      ReductionCertificate cert = certificate_from_json(j);
      ShiftOp L = schroder_operator(cert.epsilon);
      if (!verify_certificate(cert, L)) {
        std::cout << "certificate identity: FAIL\n";
        return 1;
      }
      std::cout << "certificate identity: ok (symbolic, Q(z)[k])\n";
      long checked = 0, skipped = 0;
      for (std::uint64_t p : odd_primes_below(static_cast<std::uint64_t>(cert_pmax)))
        for (long z = cert_zmin; z <= cert_zmax; ++z) {
          if (!hypothesis_ok(p, Int(z))) {
            ++skipped;
            continue;
          }
          if (!verify_via_certificate(cert, Int(z), p)) {
            std::cout << "two-path check: FAIL at p=" << p << " z=" << z << "\n";
            return 1;
          }
          ++checked;
        }
      std::cout << "two-path check: ok on " << checked << " points (" << skipped
                << " skipped by hypothesis)\n";
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
