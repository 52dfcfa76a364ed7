// Command line front end: exact verification suites, the one-row Macdonald
// polynomial, and numeric residue-sum integrals. Output is JSON (schema "1")
// or plain text; exit codes are 0 = pass, 1 = verified false / did not
// converge, 2 = usage or invalid input.

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cnqkz/hecke.hpp"
#include "cnqkz/macdonald.hpp"
#include "cnqkz/qintegral.hpp"
#include "cnqkz/report.hpp"
#include "cnqkz/rmatrix.hpp"
#include "cnqkz/rng.hpp"

namespace {

using cnqkz::Json;

int max_rank_guard(int fallback) {
  if (const char* env = std::getenv("CNQKZ_MAX_RANK")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, cnqkz::kMaxRank);
  }
  return fallback;
}

std::complex<double> parse_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

struct NumericOptions {
  int n = 1;
  int lambda = 1;
  double q = 0.3;
  double t = 0.7;
  double tol = 1e-8;
  int prod_trunc = 0;
  int ladder_trunc = 80;
  uint64_t seed = 12345;
  std::vector<std::string> y_raw;

  cnqkz::NumericPoint make_point() const {
    cnqkz::NumericPoint pt;
    pt.q = q;
    pt.t = t;
    pt.lambda = lambda;
    pt.tol = tol;
    pt.prod_trunc = prod_trunc;
    pt.ladder_trunc = ladder_trunc;
    if (!y_raw.empty()) {
      for (const auto& s : y_raw) pt.y.push_back(parse_complex(s));
    } else {
      cnqkz::SplitMix64 rng(seed);
      pt.y = cnqkz::sample_y(n, rng);
    }
    if (static_cast<int>(pt.y.size()) != n)
      throw CLI::ValidationError("--y must provide exactly n values");
    return pt;
  }
};

Json point_json(const cnqkz::NumericPoint& pt) {
  Json y = Json::array();
  for (const auto& v : pt.y) y.push_back(Json{{"re", v.real()}, {"im", v.imag()}});
  return Json{{"q", pt.q}, {"t", pt.t}, {"lambda", pt.lambda}, {"y", y}, {"tol", pt.tol}};
}

int emit_report(const std::string& suite, const cnqkz::Report& rep, Json extra) {
  Json out;
  out["schema"] = "1";
  out["command"] = "verify";
  out["suite"] = suite;
  for (auto& [k, v] : extra.items()) out[k] = v;
  out["report"] = rep.to_json();
  out["pass"] = rep.all_pass();
  std::cout << out.dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

int run_macdonald(int n, int lambda, const std::string& format, int max_work) {
  if (n < 1 || n > max_rank_guard(cnqkz::kMaxRank) || lambda < 1) {
    std::cerr << "error: need 1 <= n <= " << max_rank_guard(cnqkz::kMaxRank) << " and lambda >= 1\n";
    return 2;
  }
  if (n * lambda > max_work) {
    std::cerr << "error: n*lambda exceeds the desk-scale guard " << max_work
              << " (raise with --max-work)\n";
    return 2;
  }
  cnqkz::SymLaurent P = cnqkz::macdonald_onerow(n, lambda);
  cnqkz::Weight mu(static_cast<size_t>(n), 0);
  mu[0] = lambda;
  cnqkz::RatFunc c = cnqkz::eigenvalue_c(mu, n);
  auto mb = P.m_basis();
  if (format == "json") {
    Json out;
    out["schema"] = "1";
    out["command"] = "macdonald";
    out["n"] = n;
    out["lambda"] = lambda;
    Json monos = Json::array();
    for (const auto& [e, coeff] : P.terms) {
      Json je = Json::array();
      for (int v : e) je.push_back(v);
      monos.push_back(Json{{"y", je}, {"coeff", coeff.to_string()}});
    }
    out["monomial_expansion"] = monos;
    Json mbj = Json::array();
    for (const auto& [rep, coeff] : mb) {
      Json je = Json::array();
      for (int v : rep) je.push_back(v);
      mbj.push_back(Json{{"mu", je}, {"coeff", coeff.to_string()}});
    }
    out["m_basis_expansion"] = mbj;
    out["eigenvalue"] = c.to_string();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "P_(" << lambda;
    for (int i = 1; i < n; ++i) std::cout << ",0";
    std::cout << ") for C_" << n << "\n";
    std::cout << "monomials:\n";
    for (const auto& [e, coeff] : P.terms) {
      std::cout << "  y^(";
      for (size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
      std::cout << ")  " << coeff.to_string() << "\n";
    }
    std::cout << "m-basis:\n";
    for (const auto& [rep, coeff] : mb) {
      std::cout << "  m_(";
      for (size_t i = 0; i < rep.size(); ++i) std::cout << (i ? "," : "") << rep[i];
      std::cout << ")  " << coeff.to_string() << "\n";
    }
    std::cout << "eigenvalue: " << c.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C_n QKZ / Macdonald exact verification toolkit"};
  app.require_subcommand(1);

  // macdonald
  auto* mac = app.add_subcommand("macdonald", "one-row Macdonald polynomial");
  int mac_n = 1, mac_lambda = 1, mac_work = 16;
  std::string mac_format = "text";
  mac->add_option("--n", mac_n, "rank")->required();
  mac->add_option("--lambda", mac_lambda, "one-row parameter")->required();
  mac->add_option("--format", mac_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  mac->add_option("--max-work", mac_work, "desk-scale guard on n*lambda");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  ver->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"ybe", "conjugation", "hecke", "prop61", "lemmas4", "identity53",
                             "prop31", "eigen", "triangularity", "qkz-numeric", "lemma43",
                             "cor51", "all"}));
  NumericOptions vopt;
  bool self_test = false;
  int samples = 5;
  ver->add_option("--n", vopt.n, "rank");
  ver->add_option("--lambda", vopt.lambda, "spectral integer");
  ver->add_option("--q", vopt.q, "q in (0,1)");
  ver->add_option("--t", vopt.t, "t > 0");
  ver->add_option("--tol", vopt.tol, "numeric tolerance");
  ver->add_option("--seed", vopt.seed, "PRNG seed (splitmix64)");
  ver->add_option("--samples", samples, "samples for the ratio test");
  ver->add_option("--y", vopt.y_raw, "explicit y values, re or re,im");
  ver->add_option("--prod-trunc", vopt.prod_trunc, "q-Pochhammer truncation override");
  ver->add_option("--ladder-trunc", vopt.ladder_trunc, "pole-ladder truncation");
  ver->add_flag("--self-test", self_test, "run the documented mutation; the suite must fail");

  // integral
  auto* intg = app.add_subcommand("integral", "residue-sum bracket <psi>");
  NumericOptions iopt;
  std::string psi_name = "one";
  intg->add_option("--n", iopt.n, "rank")->required();
  intg->add_option("--lambda", iopt.lambda, "exponent lambda")->required();
  intg->add_option("--q", iopt.q, "q in (0,1)")->required();
  intg->add_option("--t", iopt.t, "t > 0")->required();
  intg->add_option("--y", iopt.y_raw, "y values, re or re,im")->required();
  intg->add_option("--psi", psi_name, "one | phi_k | s0_phi_k | id54");
  intg->add_option("--tol", iopt.tol, "truncation tolerance");
  intg->add_option("--prod-trunc", iopt.prod_trunc, "q-Pochhammer truncation override");
  intg->add_option("--ladder-trunc", iopt.ladder_trunc, "pole-ladder truncation");
  intg->add_option("--seed", iopt.seed, "PRNG seed (unused when --y given)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mac->parsed()) return run_macdonald(mac_n, mac_lambda, mac_format, mac_work);

    if (intg->parsed()) {
      cnqkz::NumericPoint pt;
      try {
        pt = iopt.make_point();
        pt.validate();
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      auto psi = cnqkz::parse_psi(psi_name, iopt.n);
      if (!psi) {
        std::cerr << "error: unknown psi selector '" << psi_name << "'\n";
        return 2;
      }
      cnqkz::Integrand ig = cnqkz::integrand_for(*psi, iopt.n, iopt.lambda);
      cnqkz::BracketResult r;
      try {
        r = cnqkz::bracket(ig, pt);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      Json out;
      out["schema"] = "1";
      out["command"] = "integral";
      out["psi"] = psi_name;
      out["point"] = point_json(pt);
      out["value"] = Json{{"re", r.value.real()}, {"im", r.value.imag()}};
      out["terms_used"] = r.terms;
      out["converged"] = r.converged;
      std::cout << out.dump(2) << "\n";
      return r.converged ? 0 : 1;
    }

    // verify
    int n = vopt.n;
    cnqkz::QKZParams params{n, vopt.lambda};
    params.perturb_d = self_test;
    Json extra{{"n", n}, {"lambda", vopt.lambda}, {"seed", vopt.seed}, {"self_test", self_test}};
    auto guard = [&](int cap, const char* what) {
      int lim = max_rank_guard(cap);
      if (n < 1 || n > lim) {
        std::cerr << "error: " << what << " requires 1 <= n <= " << lim << "\n";
        std::exit(2);
      }
    };
    if (suite == "ybe") {
      guard(3, "ybe");
      return emit_report(suite, cnqkz::verify_ybe(n, params), extra);
    }
    if (suite == "conjugation") {
      guard(3, "conjugation");
      return emit_report(suite, cnqkz::verify_conjugation(n, params), extra);
    }
    if (suite == "lemmas4") {
      guard(4, "lemmas4");
      cnqkz::Report rep;
      rep.suite = "lemmas4";
      rep.merge(cnqkz::verify_si_action(n, params));
      rep.merge(cnqkz::verify_partial_fractions(n, params));
      rep.merge(cnqkz::verify_induced_action(n, params));
      return emit_report(suite, rep, extra);
    }
    if (suite == "identity53") {
      guard(4, "identity53");
      return emit_report(suite, cnqkz::verify_identity_53(n, self_test), extra);
    }
    if (suite == "hecke") {
      guard(4, "hecke");
      return emit_report(suite, cnqkz::verify_hecke_relations(n, self_test), extra);
    }
    if (suite == "prop61") {
      guard(4, "prop61");
      return emit_report(suite, cnqkz::verify_prop61(n, self_test), extra);
    }
    if (suite == "prop31") {
      guard(3, "prop31");
      return emit_report(suite, cnqkz::verify_prop31_integrand(n, params), extra);
    }
    if (suite == "eigen" || suite == "triangularity") {
      guard(3, suite.c_str());
      int cap = n == 1 ? 6 : (n == 2 ? 4 : 3);
      if (vopt.lambda < 1 || vopt.lambda > cap) {
        std::cerr << "error: " << suite << " at n=" << n << " requires 1 <= lambda <= " << cap << "\n";
        return 2;
      }
      cnqkz::Report rep = (suite == "eigen") ? cnqkz::verify_eigen(n, vopt.lambda, self_test)
                                             : cnqkz::verify_triangularity(n, vopt.lambda, self_test);
      return emit_report(suite, rep, extra);
    }
    // numeric suites
    if (suite == "qkz-numeric" || suite == "lemma43" || suite == "cor51") {
      guard(3, suite.c_str());
      cnqkz::NumericPoint pt;
      try {
        pt = vopt.make_point();
        pt.validate();
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      extra["point"] = point_json(pt);
      if (suite == "qkz-numeric") return emit_report(suite, cnqkz::verify_qkz(pt, self_test), extra);
      if (suite == "lemma43") return emit_report(suite, cnqkz::verify_lemma43(pt, self_test), extra);
      cnqkz::Report rep;
      rep.suite = "cor51";
      rep.merge(cnqkz::verify_cor51(pt, self_test));
      rep.merge(cnqkz::ratio_test_macdonald(n, vopt.lambda, pt, samples, vopt.seed, self_test));
      return emit_report(suite, rep, extra);
    }
    if (suite == "all") {
      cnqkz::Report rep;
      rep.suite = "all";
      for (int nn : {2, 3}) {
        cnqkz::QKZParams p{nn, vopt.lambda};
        rep.merge(cnqkz::verify_ybe(nn, p));
        rep.merge(cnqkz::verify_conjugation(nn, p));
      }
      for (int nn = 1; nn <= 4; ++nn) {
        cnqkz::QKZParams p{nn, vopt.lambda};
        rep.merge(cnqkz::verify_si_action(nn, p));
        rep.merge(cnqkz::verify_partial_fractions(nn, p));
        rep.merge(cnqkz::verify_induced_action(nn, p));
        rep.merge(cnqkz::verify_identity_53(nn, false));
        rep.merge(cnqkz::verify_prop61(nn, false));
        rep.merge(cnqkz::verify_hecke_relations(nn, false));
      }
      for (int nn = 1; nn <= 3; ++nn) {
        cnqkz::QKZParams p{nn, vopt.lambda};
        rep.merge(cnqkz::verify_prop31_integrand(nn, p));
      }
      for (auto [nn, ll] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                                            {2, 1}, {2, 2}, {2, 3}, {2, 4},
                                                            {3, 1}, {3, 2}, {3, 3}}) {
        rep.merge(cnqkz::verify_eigen(nn, ll, false));
        rep.merge(cnqkz::verify_triangularity(nn, ll, false));
      }
      for (auto [nn, ll] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        cnqkz::NumericPoint pt;
        pt.q = vopt.q;
        pt.t = vopt.t;
        pt.lambda = ll;
        pt.tol = vopt.tol;
        cnqkz::SplitMix64 rng(vopt.seed + static_cast<uint64_t>(100 * nn + ll));
        pt.y = cnqkz::sample_y(nn, rng);
        rep.merge(cnqkz::verify_qkz(pt, false));
        rep.merge(cnqkz::verify_lemma43(pt, false));
        rep.merge(cnqkz::verify_cor51(pt, false));
      }
      for (auto [nn, ll] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}}) {
        cnqkz::NumericPoint base;
        base.q = vopt.q;
        base.t = vopt.t;
        base.lambda = ll;
        base.tol = vopt.tol;
        base.y.assign(static_cast<size_t>(nn), {1.0, 0.0});
        rep.merge(cnqkz::ratio_test_macdonald(nn, ll, base, samples, vopt.seed, false));
      }
      return emit_report(suite, rep, extra);
    }
    std::cerr << "error: unknown suite\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
