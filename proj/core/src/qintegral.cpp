#include "cnqkz/qintegral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cnqkz/hecke.hpp"
#include "cnqkz/macdonald.hpp"

namespace cnqkz {

namespace {

using Cplx = std::complex<double>;

Cplx mono_eval(const ExponentVec& e, const NumericPoint& pt) {
  int n = e.rank();
  if (e[gen_x(n)] != 0) throw std::logic_error("integrand base mentions x");
  Cplx v = std::sqrt(pt.q), u = std::sqrt(pt.t);
  Cplx out = complex_ipow(v, e[kGenV]) * complex_ipow(u, e[kGenU]);
  for (int i = 1; i <= n; ++i)
    if (e[gen_y(i)] != 0) out *= complex_ipow(pt.y[static_cast<size_t>(i - 1)], e[gen_y(i)]);
  return out;
}

std::vector<Cplx> point_gen_values(const NumericPoint& pt) {
  std::vector<Cplx> vals(static_cast<size_t>(pt.rank()) + 3, Cplx{1.0, 0.0});
  vals[kGenV] = std::sqrt(pt.q);
  vals[kGenU] = std::sqrt(pt.t);
  for (int i = 1; i <= pt.rank(); ++i) vals[static_cast<size_t>(gen_y(i))] = pt.y[static_cast<size_t>(i - 1)];
  return vals;
}

double rel_residual(Cplx lhs, Cplx rhs) {
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

}  // namespace

int NumericPoint::derived_prod_trunc() const {
  if (prod_trunc > 0) return prod_trunc;
  int N = static_cast<int>(std::ceil(17.0 * std::log(10.0) / -std::log(q))) + 1;
  return std::min(N, 20000);
}

void NumericPoint::validate() const {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("NumericPoint: q must be in (0,1)");
  if (!(t > 0.0)) throw std::invalid_argument("NumericPoint: t must be positive");
  if (lambda < 1) throw std::invalid_argument("NumericPoint: lambda must be a positive integer");
  if (y.empty()) throw std::invalid_argument("NumericPoint: empty y");
  for (const auto& yy : y)
    if (std::abs(yy) == 0.0) throw std::invalid_argument("NumericPoint: zero y_j");
  if (!(tol > 0.0)) throw std::invalid_argument("NumericPoint: tol must be positive");
}

NumericPoint NumericPoint::shifted_y(int i, Cplx factor) const {
  NumericPoint p = *this;
  p.y[static_cast<size_t>(i - 1)] *= factor;
  return p;
}

NumericPoint NumericPoint::shifted_all(Cplx factor) const {
  NumericPoint p = *this;
  for (auto& yy : p.y) yy *= factor;
  return p;
}

void Integrand::mul_lin(const ExponentVec& base, int e) {
  for (auto& [b, ex] : lin) {
    if (b == base) {
      ex += e;
      if (ex == 0) lin.erase(std::find_if(lin.begin(), lin.end(), [&](const auto& p) { return p.first == base; }));
      return;
    }
  }
  if (e != 0) lin.emplace_back(base, e);
}

void Integrand::mul_poch(const ExponentVec& base, int e) {
  for (auto& [b, ex] : poch) {
    if (b == base) {
      ex += e;
      if (ex == 0) poch.erase(std::find_if(poch.begin(), poch.end(), [&](const auto& p) { return p.first == base; }));
      return;
    }
  }
  if (e != 0) poch.emplace_back(base, e);
}

Integrand Integrand::s0_substituted() const {
  auto sub = [](const ExponentVec& e) {
    ExponentVec r = e;
    int k = e[gen_y(1)];
    r[gen_y(1)] = static_cast<int16_t>(-k);
    r[kGenV] = static_cast<int16_t>(r[kGenV] + 2 * k);
    return r;
  };
  Integrand out;
  out.rank = rank;
  out.lambda = lambda;
  for (const auto& [b, e] : lin) out.mul_lin(sub(b), e);
  for (const auto& [b, e] : poch) out.mul_poch(sub(b), e);
  return out;
}

Integrand Integrand::permuted(const SignedPerm& w) const {
  auto sub = [&](const ExponentVec& e) {
    ExponentVec r = e;
    for (int i = 1; i <= rank; ++i) r[gen_y(i)] = 0;
    for (int i = 1; i <= rank; ++i) {
      int j = w.image(i);
      int slot = gen_y(std::abs(j));
      r[slot] = static_cast<int16_t>(r[slot] + (j < 0 ? -e[gen_y(i)] : e[gen_y(i)]));
    }
    return r;
  };
  Integrand out;
  out.rank = rank;
  out.lambda = lambda;
  for (const auto& [b, e] : lin) out.mul_lin(sub(b), e);
  for (const auto& [b, e] : poch) out.mul_poch(sub(b), e);
  return out;
}

Integrand phi_form(int n, int lambda) {
  Integrand ig;
  ig.rank = n;
  ig.lambda = lambda;
  for (int j = 1; j <= n; ++j) {
    for (int pw : {1, -1}) {
      ExponentVec plain(n), witht(n);
      plain[gen_y(j)] = static_cast<int16_t>(pw);
      witht[gen_y(j)] = static_cast<int16_t>(pw);
      witht[kGenU] = 2;
      ig.mul_poch(witht, 1);
      ig.mul_poch(plain, -1);
    }
  }
  return ig;
}

Integrand phi_i_integrand(int n, int i, int lambda) {
  Integrand ig = phi_form(n, lambda);
  for (const auto& [mono, e] : phi_factors(n, i)) ig.mul_lin(mono, e);
  return ig;
}

Integrand ratio54_integrand(int n, int lambda) {
  Integrand ig = phi_form(n, lambda);
  for (int j = 1; j <= n; ++j) {
    for (int pw : {1, -1}) {
      ExponentVec plain(n), witht(n);
      plain[gen_y(j)] = static_cast<int16_t>(pw);
      witht[gen_y(j)] = static_cast<int16_t>(pw);
      witht[kGenU] = 2;
      ig.mul_lin(plain, 1);
      ig.mul_lin(witht, -1);
    }
  }
  return ig;
}

std::optional<PsiSpec> parse_psi(std::string_view text, int n) {
  if (text == "one") return PsiSpec{PsiSpec::kOne, 0};
  if (text == "id54" || text == "ratio54") return PsiSpec{PsiSpec::kRatio54, 0};
  auto parse_index = [&](std::string_view body) -> std::optional<int> {
    int idx = 0;
    if (body.empty()) return std::nullopt;
    for (char ch : body) {
      if (ch < '0' || ch > '9') return std::nullopt;
      idx = idx * 10 + (ch - '0');
    }
    if (idx < 1 || idx > 2 * n) return std::nullopt;
    return idx;
  };
  if (text.rfind("s0_phi_", 0) == 0) {
    auto idx = parse_index(text.substr(7));
    if (!idx) return std::nullopt;
    return PsiSpec{PsiSpec::kS0Phi, *idx};
  }
  if (text.rfind("phi_", 0) == 0) {
    auto idx = parse_index(text.substr(4));
    if (!idx) return std::nullopt;
    return PsiSpec{PsiSpec::kPhi, *idx};
  }
  return std::nullopt;
}

Integrand integrand_for(const PsiSpec& psi, int n, int lambda) {
  switch (psi.kind) {
    case PsiSpec::kOne:
      return phi_form(n, lambda);
    case PsiSpec::kPhi:
      return phi_i_integrand(n, psi.index, lambda);
    case PsiSpec::kS0Phi:
      return phi_i_integrand(n, psi.index, lambda).s0_substituted();
    case PsiSpec::kRatio54:
      return ratio54_integrand(n, lambda);
  }
  throw std::logic_error("integrand_for: bad selector");
}

std::complex<double> qpoch_inf(Cplx a, const NumericPoint& pt) {
  int N = pt.derived_prod_trunc();
  Cplx out{1.0, 0.0};
  double qs = 1.0;
  for (int s = 0; s < N; ++s) {
    out *= (Cplx{1.0, 0.0} - a * qs);
    qs *= pt.q;
  }
  return out;
}

std::complex<double> integrand_value(const Integrand& ig, Cplx x, const NumericPoint& pt) {
  Cplx out = complex_ipow(x, ig.lambda) / x;
  for (const auto& [b, e] : ig.lin) {
    Cplx z = Cplx{1.0, 0.0} - mono_eval(b, pt) / x;
    if (e < 0 && std::abs(z) < 1e-13) throw std::domain_error("integrand_value: at a pole");
    out *= complex_ipow(z, e);
  }
  for (const auto& [b, e] : ig.poch) {
    Cplx z = qpoch_inf(mono_eval(b, pt) / x, pt);
    if (e < 0 && std::abs(z) < 1e-290) throw std::domain_error("integrand_value: at a ladder pole");
    out *= complex_ipow(z, e);
  }
  return out;
}

bool genericity_ok(const Integrand& ig, const NumericPoint& pt, std::string* why) {
  const double margin = 1e-6;
  int M = pt.ladder_trunc;
  std::vector<Cplx> ladders;
  for (const auto& [b, e] : ig.poch) {
    if (e >= 0) continue;
    if (e < -1) {
      if (why) *why = "repeated pole ladder (double pole)";
      return false;
    }
    ladders.push_back(mono_eval(b, pt));
  }
  auto clear_of = [&](Cplx ratio, int dmin, int dmax) {
    // require |1 - ratio*q^d| >= margin for all d in [dmin, dmax]
    for (int d = dmin; d <= dmax; ++d) {
      double mag = std::abs(ratio) * std::pow(pt.q, d);
      if (mag > 2.0 && d < 0) continue;   // far outside; moving further out
      if (mag < margin / 2 && d > 0) break;  // shrinking towards 0, stays clear
      if (std::abs(Cplx{1.0, 0.0} - ratio * std::pow(pt.q, d)) < margin) return false;
    }
    return true;
  };
  for (size_t i = 0; i < ladders.size(); ++i) {
    for (size_t j = 0; j < ladders.size(); ++j) {
      if (i == j) continue;
      if (!clear_of(ladders[i] / ladders[j], -M, M)) {
        if (why) *why = "two pole ladders collide";
        return false;
      }
    }
  }
  for (const auto& [c, e] : ig.lin) {
    if (e >= 0) continue;
    Cplx pole = mono_eval(c, pt);
    for (const Cplx& b : ladders) {
      if (!clear_of(pole / b, -M, 0)) {  // pole vs b*q^m: 1 - (pole/b) q^{-m}
        if (why) *why = "linear-factor pole sits on a ladder";
        return false;
      }
    }
  }
  return true;
}

BracketResult bracket(const Integrand& ig, const NumericPoint& pt) {
  BracketResult res;
  std::string why;
  if (!genericity_ok(ig, pt, &why)) throw std::invalid_argument("bracket: genericity violated: " + why);
  int N = pt.derived_prod_trunc();
  double trunc_tol = pt.tol * 1e-3;
  std::vector<std::pair<Cplx, int>> lin_vals, poch_vals;
  for (const auto& [b, e] : ig.lin) lin_vals.emplace_back(mono_eval(b, pt), e);
  for (const auto& [b, e] : ig.poch) poch_vals.emplace_back(mono_eval(b, pt), e);
  Cplx total{0.0, 0.0};
  for (size_t lad = 0; lad < poch_vals.size(); ++lad) {
    if (poch_vals[lad].second >= 0) continue;
    Cplx base = poch_vals[lad].first;
    Cplx part{0.0, 0.0};
    int consec = 0;
    bool done = false;
    double qm = 1.0;
    for (int m = 0; m < pt.ladder_trunc; ++m, qm *= pt.q) {
      Cplx x0 = base * qm;
      Cplx val = complex_ipow(x0, ig.lambda);
      for (const auto& [c, e] : lin_vals) {
        Cplx z = Cplx{1.0, 0.0} - c / x0;
        val *= complex_ipow(z, e);
      }
      int smax = N + m;
      double qs = 1.0;
      for (int s = 0; s < smax; ++s, qs *= pt.q) {
        Cplx f{1.0, 0.0};
        for (size_t k = 0; k < poch_vals.size(); ++k) {
          if (k == lad && s == m) continue;  // stripped vanishing factor
          Cplx z = Cplx{1.0, 0.0} - poch_vals[k].first * qs / x0;
          f *= complex_ipow(z, poch_vals[k].second);
        }
        val *= f;
      }
      part += val;
      ++res.terms;
      if (std::abs(val) <= trunc_tol * std::abs(part)) {
        if (++consec >= 3) {
          done = true;
          break;
        }
      } else {
        consec = 0;
      }
    }
    if (!done) res.converged = false;
    total += part;
  }
  res.value = total;
  return res;
}

Report verify_lemma43(const NumericPoint& pt, bool self_test) {
  Report rep;
  rep.suite = "lemma43";
  pt.validate();
  int n = pt.rank(), lam = pt.lambda;
  QKZParams params{n, lam};
  params.perturb_d = self_test;
  auto vals = point_gen_values(pt);
  Weight mtheta(static_cast<size_t>(n), 0);
  mtheta[0] = -2;
  RCoeffs rc = r_coeffs(AffineRoot(mtheta, 1), params);
  Cplx a = rc.a.eval(vals), b = rc.b.eval(vals), c = rc.c.eval(vals), d = rc.d.eval(vals);
  auto B = [&](const Integrand& ig) { return bracket(ig, pt); };
  Integrand f1 = phi_i_integrand(n, 1, lam);
  Integrand f2n = phi_i_integrand(n, 2 * n, lam);
  BracketResult b1 = B(f1), b2n = B(f2n), s01 = B(f1.s0_substituted()), s02n = B(f2n.s0_substituted());
  bool conv = b1.converged && b2n.converged && s01.converged && s02n.converged;
  double ql = std::pow(pt.q, lam);
  Cplx lhs1 = ql * s01.value;
  Cplx rhs1 = a * b2n.value + ql * d * b1.value;
  double r1 = rel_residual(lhs1, rhs1);
  rep.add("lemma_4_3_eq1", Json{{"n", n}, {"lambda", lam}, {"residual", r1}}, conv && r1 < pt.tol,
          conv ? "" : "bracket did not converge");
  Cplx lhs2 = s02n.value / ql;
  Cplx rhs2 = b * b2n.value / ql + c * b1.value;
  double r2 = rel_residual(lhs2, rhs2);
  rep.add("lemma_4_3_eq2", Json{{"n", n}, {"lambda", lam}, {"residual", r2}}, conv && r2 < pt.tol,
          conv ? "" : "bracket did not converge");
  return rep;
}

Report verify_qkz(const NumericPoint& pt, bool self_test) {
  Report rep;
  rep.suite = "qkz_numeric";
  pt.validate();
  int n = pt.rank(), lam = pt.lambda;
  QKZParams params{n, lam};
  auto psi_at = [&](const NumericPoint& p) {
    std::vector<Cplx> v;
    bool conv = true;
    for (int k = 1; k <= 2 * n; ++k) {
      BracketResult r = bracket(phi_i_integrand(n, k, lam), p);
      conv = conv && r.converged;
      v.push_back(r.value);
    }
    return std::make_pair(v, conv);
  };
  auto [psi, conv0] = psi_at(pt);
  auto vals = point_gen_values(pt);
  auto run_equation = [&](int i) {
    bool ok = conv0;
    std::string err;
    double residual = 0.0;
    try {
      RatMatrix M = qkz_transport(i, params, self_test);
      NumericPoint shifted = (i == 0) ? pt.shifted_all(std::sqrt(pt.q)) : pt.shifted_y(i, pt.q);
      auto [lhs, conv1] = psi_at(shifted);
      ok = ok && conv1;
      double scale = 0.0;
      std::vector<Cplx> rhs(static_cast<size_t>(2 * n), Cplx{0.0, 0.0});
      for (int k = 1; k <= 2 * n; ++k) {
        Cplx mv{0.0, 0.0};
        for (int l = 1; l <= 2 * n; ++l) {
          const RatFunc& entry = M[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)];
          if (entry.is_zero()) continue;
          mv += entry.eval(vals) * psi[static_cast<size_t>(l - 1)];
        }
        double diag_exp = 0.0;  // exponent of q in q^{<mu, w_k u>}
        if (i == 0) {
          diag_exp = (k <= n) ? -lam / 2.0 : lam / 2.0;
        } else {
          if (k <= n) diag_exp = (k == i) ? -lam : 0.0;
          else diag_exp = (i == n - (k - n) + 1) ? lam : 0.0;
        }
        rhs[static_cast<size_t>(k - 1)] = std::pow(pt.q, diag_exp) * mv;
        scale = std::max({scale, std::abs(lhs[static_cast<size_t>(k - 1)]), std::abs(rhs[static_cast<size_t>(k - 1)])});
      }
      for (int k = 0; k < 2 * n; ++k)
        residual = std::max(residual, std::abs(lhs[static_cast<size_t>(k)] - rhs[static_cast<size_t>(k)]) / scale);
    } catch (const std::exception& ex) {
      ok = false;
      err = ex.what();
    }
    std::string name = (i == 0) ? "qkz_half_sum" : "qkz_eps_" + std::to_string(i);
    rep.add(name, Json{{"n", n}, {"lambda", lam}, {"residual", residual}}, ok && residual < pt.tol,
            err.empty() ? (ok ? "" : "bracket did not converge") : err);
  };
  for (int i = 1; i <= n; ++i) run_equation(i);
  run_equation(0);
  return rep;
}

Report verify_cor51(const NumericPoint& pt, bool self_test) {
  Report rep;
  rep.suite = "cor51";
  pt.validate();
  int n = pt.rank(), lam = pt.lambda;
  BracketResult one = bracket(phi_form(n, lam), pt);
  bool conv = one.converged;
  Cplx sum{0.0, 0.0};
  for (int i = 1; i <= 2 * n; ++i) {
    if (self_test && i == 2 * n) continue;  // documented mutation: drop the last term
    BracketResult bi = bracket(phi_i_integrand(n, i, lam), pt);
    conv = conv && bi.converged;
    sum += std::pow(pt.t, i - 1) * bi.value;
  }
  double ql = std::pow(pt.q, lam);
  Cplx rhs = (1.0 - ql * std::pow(pt.t, 2 * n)) / (1.0 - pt.t) * one.value;
  double r1 = rel_residual(sum, rhs);
  rep.add("cor_5_1_sum", Json{{"n", n}, {"lambda", lam}, {"residual", r1}}, conv && r1 < pt.tol,
          conv ? "" : "bracket did not converge");
  BracketResult prod = bracket(ratio54_integrand(n, lam), pt);
  double r2 = rel_residual(prod.value, ql * one.value);
  rep.add("identity_5_4", Json{{"n", n}, {"lambda", lam}, {"residual", r2}},
          conv && prod.converged && r2 < pt.tol, "");
  return rep;
}

std::vector<std::complex<double>> sample_y(int n, SplitMix64& rng) {
  std::vector<Cplx> y;
  for (int i = 0; i < n; ++i) {
    double r = rng.uniform(0.8, 1.4);
    double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    y.emplace_back(r * std::cos(theta), r * std::sin(theta));
  }
  return y;
}

Report ratio_test_macdonald(int n, int lambda, const NumericPoint& base, int samples,
                            uint64_t seed, bool self_test) {
  Report rep;
  rep.suite = "ratio_macdonald";
  if (samples < 3) throw std::invalid_argument("ratio_test_macdonald: need at least 3 samples");
  SymLaurent P = macdonald_onerow(n, lambda);
  if (self_test) {
    // documented mutation: replace P by a wrong W-invariant function
    P = SymLaurent::zero(n);
    if (n >= 2) {
      Weight mu(static_cast<size_t>(n), 0);
      mu[0] = mu[1] = 1;
      for (const auto& [e, c] : orbit_sum(mu, n).terms()) {
        Weight w(static_cast<size_t>(n), 0);
        for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = e[gen_y(i)];
        P.add(w, RatFunc::constant(n, c));
      }
    } else {
      P = macdonald_onerow(n, lambda);
      P.add(Weight{0}, RatFunc::one(n));
    }
  }
  SplitMix64 rng(seed);
  std::vector<Cplx> ratios;
  int attempts = 0;
  while (static_cast<int>(ratios.size()) < samples && attempts < 60 * samples) {
    ++attempts;
    NumericPoint pt = base;
    pt.y = sample_y(n, rng);
    pt.lambda = lambda;
    Integrand phi = phi_form(n, lambda);
    if (!genericity_ok(phi, pt)) continue;
    Cplx pv = P.eval(pt.q, pt.t, pt.y);
    if (std::abs(pv) < 1e-6) continue;  // resample near a zero of P
    BracketResult br = bracket(phi, pt);
    if (!br.converged) continue;
    ratios.push_back(br.value / pv);
  }
  bool enough = static_cast<int>(ratios.size()) == samples;
  double spread = 0.0, scale = 0.0;
  for (const Cplx& r : ratios) scale = std::max(scale, std::abs(r));
  for (size_t i = 0; i < ratios.size(); ++i)
    for (size_t j = i + 1; j < ratios.size(); ++j)
      spread = std::max(spread, std::abs(ratios[i] - ratios[j]) / scale);
  bool pass = enough && spread < base.tol;
  rep.add("ratio_constant",
          Json{{"n", n}, {"lambda", lambda}, {"samples", samples}, {"seed", seed}, {"spread", spread}},
          pass, enough ? "" : "could not draw enough generic samples");
  return rep;
}

}  // namespace cnqkz
