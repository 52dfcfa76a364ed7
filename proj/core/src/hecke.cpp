#include "cnqkz/hecke.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cnqkz {

namespace {

ExponentVec y_mono(int n, int mu, int pw, bool with_t = false, int qpow = 0) {
  ExponentVec e(n);
  e[gen_y(mu)] = static_cast<int16_t>(pw);
  if (with_t) e[kGenU] = 2;
  e[kGenV] = static_cast<int16_t>(2 * qpow);
  return e;
}

LaurentPoly lin(int n, const ExponentVec& mono) { return LaurentPoly::one_minus_over_x(n, mono); }

RatFunc from_factors(int n, const std::vector<std::pair<ExponentVec, int>>& fs) {
  LaurentPoly num = LaurentPoly::one(n), den = LaurentPoly::one(n);
  for (const auto& [mono, e] : fs) {
    LaurentPoly f = lin(n, mono);
    for (int k = 0; k < std::abs(e); ++k) (e > 0 ? num : den) *= f;
  }
  return RatFunc(num, den);
}

/// e^{alpha_i} as a monomial.
ExponentVec simple_root_mono(int i, int n) {
  ExponentVec e(n);
  if (i < n) {
    e[gen_y(i)] = 1;
    e[gen_y(i + 1)] = -1;
  } else {
    e[gen_y(n)] = 2;
  }
  return e;
}

using Mat = std::vector<std::vector<RatFunc>>;

Mat mat_mul(const Mat& A, const Mat& B, int n) {
  size_t d = A.size();
  Mat C(d, std::vector<RatFunc>(d, RatFunc::zero(n)));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      if (A[i][k].is_zero()) continue;
      for (size_t j = 0; j < d; ++j) {
        if (B[k][j].is_zero()) continue;
        C[i][j] = C[i][j] + A[i][k] * B[k][j];
      }
    }
  return C;
}

bool mat_equal(const Mat& A, const Mat& B) {
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A.size(); ++j)
      if (!A[i][j].equals(B[i][j])) return false;
  return true;
}

}  // namespace

std::vector<std::pair<ExponentVec, int>> phi_factors(int n, int i) {
  if (i < 1 || i > 2 * n) throw std::out_of_range("phi_factors: index out of range");
  std::vector<std::pair<ExponentVec, int>> fs;
  if (i <= n) {
    for (int mu = 1; mu < i; ++mu) fs.emplace_back(y_mono(n, mu, -1), 1);
    for (int mu = 1; mu <= i; ++mu) fs.emplace_back(y_mono(n, mu, -1, true), -1);
  } else {
    int k = 2 * n - i + 1;
    for (int mu = k + 1; mu <= n; ++mu) fs.emplace_back(y_mono(n, mu, 1), 1);
    for (int mu = k; mu <= n; ++mu) fs.emplace_back(y_mono(n, mu, 1, true), -1);
    for (int mu = 1; mu <= n; ++mu) {
      fs.emplace_back(y_mono(n, mu, -1), 1);
      fs.emplace_back(y_mono(n, mu, -1, true), -1);
    }
  }
  return fs;
}

std::vector<RatFunc> phi_basis(int n) {
  std::vector<RatFunc> out;
  out.reserve(static_cast<size_t>(2 * n));
  for (int i = 1; i <= 2 * n; ++i) out.push_back(from_factors(n, phi_factors(n, i)));
  return out;
}

RatFunc lusztig_T(int i, const RatFunc& f, int n) {
  if (i < 1 || i > n) throw std::out_of_range("lusztig_T: index out of range");
  LaurentPoly ea = LaurentPoly::monomial(n, simple_root_mono(i, n), Rat(1));
  LaurentPoly t = LaurentPoly::t_power(n, 1);
  LaurentPoly one = LaurentPoly::one(n);
  RatFunc coef(one - t * ea, one - ea);
  SignedPerm si = SignedPerm::simple_reflection(i, n);
  return RatFunc(t) * f + coef * (weyl_act(si, f) - f);
}

namespace {

/// phi_k = N_k / D over the shared denominator D = prod (1 - t y_mu^{+-1}/x).
std::pair<std::vector<LaurentPoly>, LaurentPoly> phi_common_den(int n) {
  std::vector<ExponentVec> dfactors;
  for (int mu = 1; mu <= n; ++mu) {
    dfactors.push_back(y_mono(n, mu, 1, true));
    dfactors.push_back(y_mono(n, mu, -1, true));
  }
  LaurentPoly D = LaurentPoly::one(n);
  for (const auto& m : dfactors) D *= lin(n, m);
  std::vector<LaurentPoly> N;
  for (int k = 1; k <= 2 * n; ++k) {
    auto fs = phi_factors(n, k);
    std::vector<ExponentVec> denset;
    LaurentPoly Nk = LaurentPoly::one(n);
    for (const auto& [mono, e] : fs) {
      if (e > 0)
        Nk *= lin(n, mono);
      else
        denset.push_back(mono);
    }
    std::vector<ExponentVec> rest = dfactors;
    for (const auto& m : denset) {
      auto it = std::find(rest.begin(), rest.end(), m);
      if (it == rest.end()) throw std::logic_error("phi denominator not inside D");
      rest.erase(it);
    }
    for (const auto& m : rest) Nk *= lin(n, m);
    N.push_back(std::move(Nk));
  }
  return {std::move(N), std::move(D)};
}

}  // namespace

std::optional<std::vector<RatFunc>> phi_span_solve(const RatFunc& f, int n) {
  int dim = 2 * n;
  auto [N, D] = phi_common_den(n);
  // Row system over Q(v,u): for each (y,x)-monomial signature,
  // sum_k c_k * [den*N_k]_sig = [num*D]_sig.
  LaurentPoly P = f.num() * D;
  std::vector<LaurentPoly> Q;
  for (int k = 0; k < dim; ++k) Q.push_back(f.den() * N[static_cast<size_t>(k)]);
  struct Row {
    std::vector<LaurentPoly> A;
    LaurentPoly b;
  };
  std::map<ExponentVec, Row> rows;
  auto signature = [n](const ExponentVec& e) {
    ExponentVec s = e;
    s[kGenV] = 0;
    s[kGenU] = 0;
    return s;
  };
  auto vu_part = [n](const ExponentVec& e) {
    ExponentVec s(n);
    s[kGenV] = e[kGenV];
    s[kGenU] = e[kGenU];
    return s;
  };
  auto touch = [&](const ExponentVec& sig) -> Row& {
    auto it = rows.find(sig);
    if (it == rows.end())
      it = rows.emplace(sig, Row{std::vector<LaurentPoly>(static_cast<size_t>(dim), LaurentPoly::zero(n)),
                                 LaurentPoly::zero(n)}).first;
    return it->second;
  };
  for (const auto& [e, c] : P.terms()) touch(signature(e)).b.add_term(vu_part(e), c);
  for (int k = 0; k < dim; ++k)
    for (const auto& [e, c] : Q[static_cast<size_t>(k)].terms())
      touch(signature(e)).A[static_cast<size_t>(k)].add_term(vu_part(e), c);

  // Fraction-free elimination over Q[v,u] until dim pivots are found:
  // r <- pivot_lead * r - r_lead * pivot keeps every entry polynomial.
  auto strip_content = [n](std::vector<LaurentPoly>& r) {
    // joint monomial-content strip to keep degrees from drifting
    bool first = true;
    ExponentVec lo(n);
    for (const auto& p : r)
      for (const auto& [e, c] : p.terms()) {
        if (first) {
          lo = e;
          first = false;
          continue;
        }
        for (int g = 0; g < n + 3; ++g) lo[g] = std::min(lo[g], e[g]);
      }
    if (first || lo.is_zero()) return;
    for (auto& p : r) p = p.mul_monomial(-lo, Rat(1));
  };
  std::vector<std::vector<LaurentPoly>> pivots;  // rows of length dim+1
  std::vector<int> pivot_col;
  for (const auto& [sig, row] : rows) {
    if (static_cast<int>(pivots.size()) == dim) break;
    std::vector<LaurentPoly> r;
    r.reserve(static_cast<size_t>(dim) + 1);
    for (int k = 0; k < dim; ++k) r.push_back(row.A[static_cast<size_t>(k)]);
    r.push_back(row.b);
    for (size_t p = 0; p < pivots.size(); ++p) {
      int c = pivot_col[p];
      if (r[static_cast<size_t>(c)].is_zero()) continue;
      LaurentPoly lead = r[static_cast<size_t>(c)];
      const LaurentPoly& plead = pivots[p][static_cast<size_t>(c)];
      for (int k = 0; k <= dim; ++k)
        r[static_cast<size_t>(k)] = plead * r[static_cast<size_t>(k)] - lead * pivots[p][static_cast<size_t>(k)];
      strip_content(r);
    }
    int col = -1;
    for (int k = 0; k < dim; ++k)
      if (!r[static_cast<size_t>(k)].is_zero()) {
        col = k;
        break;
      }
    if (col < 0) continue;
    pivots.push_back(std::move(r));
    pivot_col.push_back(col);
  }
  if (static_cast<int>(pivots.size()) < dim) return std::nullopt;
  // back-substitution with exact fractions (single division per variable)
  std::vector<RatFunc> sol(static_cast<size_t>(dim), RatFunc::zero(n));
  std::vector<bool> solved(static_cast<size_t>(dim), false);
  for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
    int c = pivot_col[static_cast<size_t>(p)];
    RatFunc acc = RatFunc(pivots[static_cast<size_t>(p)][static_cast<size_t>(dim)]);
    for (int k = 0; k < dim; ++k) {
      if (k == c || pivots[static_cast<size_t>(p)][static_cast<size_t>(k)].is_zero()) continue;
      if (!solved[static_cast<size_t>(k)])
        throw std::logic_error("phi_span_solve: unexpected elimination shape");
      acc = acc - RatFunc(pivots[static_cast<size_t>(p)][static_cast<size_t>(k)]) * sol[static_cast<size_t>(k)];
    }
    sol[static_cast<size_t>(c)] = acc / RatFunc(pivots[static_cast<size_t>(p)][static_cast<size_t>(c)]);
    solved[static_cast<size_t>(c)] = true;
  }
  // verify every row against the solution
  for (const auto& [sig, row] : rows) {
    RatFunc acc = RatFunc(row.b);
    for (int k = 0; k < dim; ++k) {
      if (row.A[static_cast<size_t>(k)].is_zero() || sol[static_cast<size_t>(k)].is_zero()) continue;
      acc = acc - RatFunc(row.A[static_cast<size_t>(k)]) * sol[static_cast<size_t>(k)];
    }
    if (!acc.is_zero()) return std::nullopt;
  }
  return sol;
}

Report verify_si_action(int n, const QKZParams& params) {
  Report rep;
  rep.suite = "si_action";
  auto phi = phi_basis(n);
  auto P = [&](int k) { return phi[static_cast<size_t>(k - 1)]; };
  for (int i = 1; i <= n; ++i) {
    SignedPerm si = SignedPerm::simple_reflection(i, n);
    RCoeffs rc = r_coeffs(AffineRoot(simple_root(i, n), 0), params);
    for (int k = 1; k <= 2 * n; ++k) {
      RatFunc got = weyl_act(si, P(k));
      RatFunc expect = P(k);
      std::string name = "lemma_4_1";
      int lo = 0;
      if (i < n && (k == i || k == i + 1)) lo = i;
      else if (i < n && (k == 2 * n - i || k == 2 * n - i + 1)) lo = 2 * n - i;
      else if (i == n && (k == n || k == n + 1)) lo = n;
      if (lo) {
        name = "lemma_4_2";
        expect = (k == lo) ? rc.b * P(lo) + rc.c * P(lo + 1) : rc.a * P(lo) + rc.d * P(lo + 1);
      }
      bool pass = got.equals(expect);
      rep.add(name, Json{{"n", n}, {"i", i}, {"k", k}}, pass, pass ? "" : "s_i phi_w" + std::to_string(k));
    }
  }
  // The i = 0 fixed points (Lemma 4.1(c)) hold in cohomology, not as
  // rational functions; they are checked numerically with the brackets.
  return rep;
}

Report verify_partial_fractions(int n, const QKZParams& params) {
  Report rep;
  rep.suite = "partial_fractions";
  auto frac = [&](std::vector<ExponentVec> num, std::vector<ExponentVec> den) {
    LaurentPoly nn = LaurentPoly::one(n), dd = LaurentPoly::one(n);
    for (const auto& m : num) nn *= lin(n, m);
    for (const auto& m : den) dd *= lin(n, m);
    return RatFunc(nn, dd);
  };
  auto check = [&](const std::string& id, Json jp, const RatFunc& lhs, const RatFunc& rhs) {
    bool pass = lhs.equals(rhs);
    rep.add(id, std::move(jp), pass, pass ? "" : "identity fails as RatFunc equality");
  };
  for (int i = 1; i <= n - 1; ++i) {
    RCoeffs rc = r_coeffs(AffineRoot(simple_root(i, n), 0), params);
    auto yi = y_mono(n, i, -1), yi1 = y_mono(n, i + 1, -1);
    auto tyi = y_mono(n, i, -1, true), tyi1 = y_mono(n, i + 1, -1, true);
    check("eq_4_4", Json{{"n", n}, {"i", i}}, frac({yi1}, {tyi, tyi1}),
          rc.a * frac({}, {tyi}) + rc.d * frac({yi}, {tyi1, tyi}));
    check("eq_4_5", Json{{"n", n}, {"i", i}}, frac({}, {tyi1}),
          rc.b * frac({}, {tyi}) + rc.c * frac({yi}, {tyi1, tyi}));
    auto pyi = y_mono(n, i, 1), pyi1 = y_mono(n, i + 1, 1);
    auto ptyi = y_mono(n, i, 1, true), ptyi1 = y_mono(n, i + 1, 1, true);
    check("eq_4_6", Json{{"n", n}, {"i", i}}, frac({pyi}, {ptyi, ptyi1}),
          rc.a * frac({}, {ptyi1}) + rc.d * frac({pyi1}, {ptyi, ptyi1}));
    check("eq_4_7", Json{{"n", n}, {"i", i}}, frac({}, {ptyi}),
          rc.b * frac({}, {ptyi1}) + rc.c * frac({pyi1}, {ptyi, ptyi1}));
  }
  {
    RCoeffs rc = r_coeffs(AffineRoot(simple_root(n, n), 0), params);
    auto pyn = y_mono(n, n, 1), myn = y_mono(n, n, -1);
    auto ptyn = y_mono(n, n, 1, true), mtyn = y_mono(n, n, -1, true);
    check("eq_4_8", Json{{"n", n}}, frac({pyn}, {ptyn, mtyn}),
          rc.a * frac({}, {mtyn}) + rc.d * frac({myn}, {ptyn, mtyn}));
    check("eq_4_9", Json{{"n", n}}, frac({}, {ptyn}),
          rc.b * frac({}, {mtyn}) + rc.c * frac({myn}, {ptyn, mtyn}));
  }
  {
    Weight mtheta(static_cast<size_t>(n), 0);
    mtheta[0] = -2;
    RCoeffs rc = r_coeffs(AffineRoot(mtheta, 1), params);
    auto qy1 = y_mono(n, 1, -1, false, 1), tqy1 = y_mono(n, 1, -1, true, 1);
    auto py1 = y_mono(n, 1, 1), pty1 = y_mono(n, 1, 1, true);
    check("eq_4_11", Json{{"n", n}}, frac({qy1}, {pty1, tqy1}),
          rc.a * frac({}, {pty1}) + rc.d * frac({py1}, {tqy1, pty1}));
    check("eq_4_12", Json{{"n", n}}, frac({}, {tqy1}),
          rc.b * frac({}, {pty1}) + rc.c * frac({py1}, {tqy1, pty1}));
  }
  return rep;
}

Report verify_prop61(int n, bool self_test) {
  Report rep;
  rep.suite = "prop61";
  auto phi = phi_basis(n);
  auto P = [&](int k) { return phi[static_cast<size_t>(k - 1)]; };
  RatFunc t = RatFunc::t_power(n, 1);
  RatFunc tm1 = t - RatFunc::one(n);
  if (self_test) std::swap(t, tm1);  // documented mutation: swap t <-> t-1
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= 2 * n; ++k) {
      RatFunc got = lusztig_T(i, P(k), n);
      RatFunc expect = t * P(k);
      std::string kase = "T_i phi_k = t phi_k";
      if (k <= n) {
        if (i == k - 1) {
          expect = tm1 * P(k) + P(k - 1);
          kase = "T_{k-1} phi_k";
        } else if (i == k) {
          expect = t * P(k + 1);
          kase = "T_k phi_k";
        }
      } else {
        int j = k - n;
        if (i == n - j + 1) {
          expect = tm1 * P(k) + P(k - 1);
          kase = "T_{n-j+1} phi_{n+j}";
        } else if (i == n - j) {
          expect = t * P(k + 1);
          kase = "T_{n-j} phi_{n+j}";
        }
      }
      bool pass = got.equals(expect);
      rep.add("prop61", Json{{"n", n}, {"i", i}, {"k", k}, {"case", kase}}, pass,
              pass ? "" : "T_" + std::to_string(i) + " phi_w" + std::to_string(k));
    }
  }
  return rep;
}

Report verify_hecke_relations(int n, bool self_test) {
  Report rep;
  rep.suite = "hecke_relations";
  int dim = 2 * n;
  auto phi = phi_basis(n);
  // T_i as matrices on the phi span; membership of every T_i phi_k is
  // established here by the exact linear solve.
  std::vector<Mat> T(static_cast<size_t>(n) + 1, Mat());
  bool closure = true;
  for (int i = 1; i <= n; ++i) {
    Mat M(static_cast<size_t>(dim), std::vector<RatFunc>(static_cast<size_t>(dim), RatFunc::zero(n)));
    for (int k = 1; k <= dim; ++k) {
      RatFunc img = lusztig_T(i, phi[static_cast<size_t>(k - 1)], n);
      if (self_test && i == 1 && k == 1) img = img + RatFunc::one(n);  // mutation: shift one image
      auto coords = phi_span_solve(img, n);
      bool ok = coords.has_value();
      rep.add("phi_span_closure", Json{{"n", n}, {"i", i}, {"k", k}}, ok,
              ok ? "" : "T_i phi_k outside the phi span");
      if (!ok) {
        closure = false;
        continue;
      }
      for (int r = 0; r < dim; ++r) M[static_cast<size_t>(r)][static_cast<size_t>(k - 1)] = (*coords)[static_cast<size_t>(r)];
    }
    T[static_cast<size_t>(i)] = std::move(M);
  }
  if (!closure) return rep;
  RatFunc t = RatFunc::t_power(n, 1);
  Mat id(static_cast<size_t>(dim), std::vector<RatFunc>(static_cast<size_t>(dim), RatFunc::zero(n)));
  for (int k = 0; k < dim; ++k) id[static_cast<size_t>(k)][static_cast<size_t>(k)] = RatFunc::one(n);
  auto scaled = [&](const Mat& A, const RatFunc& c) {
    Mat B = A;
    for (auto& row : B)
      for (auto& e : row) e = c * e;
    return B;
  };
  auto madd = [&](const Mat& A, const Mat& B) {
    Mat C = A;
    for (size_t i = 0; i < C.size(); ++i)
      for (size_t j = 0; j < C.size(); ++j) C[i][j] = C[i][j] + B[i][j];
    return C;
  };
  // quadratic (T_i - t)(T_i + 1) = 0, i.e. T_i^2 + (1-t) T_i - t = 0
  for (int i = 1; i <= n; ++i) {
    Mat lhs = madd(madd(mat_mul(T[static_cast<size_t>(i)], T[static_cast<size_t>(i)], n),
                        scaled(T[static_cast<size_t>(i)], RatFunc::one(n) - t)),
                   scaled(id, -t));
    Mat zero(static_cast<size_t>(dim), std::vector<RatFunc>(static_cast<size_t>(dim), RatFunc::zero(n)));
    rep.add("quadratic", Json{{"n", n}, {"i", i}}, mat_equal(lhs, zero), "");
  }
  // braid relations
  for (int i = 1; i + 2 <= n; ++i) {
    Mat lhs = mat_mul(mat_mul(T[static_cast<size_t>(i)], T[static_cast<size_t>(i + 1)], n), T[static_cast<size_t>(i)], n);
    Mat rhs = mat_mul(mat_mul(T[static_cast<size_t>(i + 1)], T[static_cast<size_t>(i)], n), T[static_cast<size_t>(i + 1)], n);
    rep.add("braid_a_type", Json{{"n", n}, {"i", i}}, mat_equal(lhs, rhs), "");
  }
  if (n >= 2) {
    const Mat &A = T[static_cast<size_t>(n - 1)], &B = T[static_cast<size_t>(n)];
    Mat lhs = mat_mul(mat_mul(mat_mul(A, B, n), A, n), B, n);
    Mat rhs = mat_mul(mat_mul(mat_mul(B, A, n), B, n), A, n);
    rep.add("braid_c_type", Json{{"n", n}}, mat_equal(lhs, rhs), "");
  }
  // commutation: the paper states |i-j| > 2; the usual presentation needs
  // only |i-j| >= 2. Both ranges are checked and reported separately.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      Mat lhs = mat_mul(T[static_cast<size_t>(i)], T[static_cast<size_t>(j)], n);
      Mat rhs = mat_mul(T[static_cast<size_t>(j)], T[static_cast<size_t>(i)], n);
      const char* name = (j - i > 2) ? "commutation_far" : "commutation_dist2";
      rep.add(name, Json{{"n", n}, {"i", i}, {"j", j}}, mat_equal(lhs, rhs), "");
    }
  }
  // direct functional spot check, independent of the span solver; deeper
  // compositions blow up the unreduced fractions, so only depth two here
  if (n <= 2) {
    RatFunc f = phi[0];
    RatFunc u1 = lusztig_T(1, f, n);
    RatFunc quad = lusztig_T(1, u1, n) + (RatFunc::one(n) - t) * u1 - t * f;
    rep.add("quadratic_direct", Json{{"n", n}, {"i", 1}, {"k", 1}}, quad.is_zero(), "");
  }
  return rep;
}

Report verify_identity_53(int n, bool self_test) {
  Report rep;
  rep.suite = "identity_53";
  // Both sides share the denominator D, so compare numerators over D.
  auto [N, D] = phi_common_den(n);
  LaurentPoly num = LaurentPoly::one(n);
  for (int mu = 1; mu <= n; ++mu)
    num *= lin(n, y_mono(n, mu, 1)) * lin(n, y_mono(n, mu, -1));
  LaurentPoly lhs_num = LaurentPoly::t_power(n, 2 * n) * num;
  LaurentPoly sum(n);
  for (int i = 1; i <= 2 * n; ++i) {
    LaurentPoly term = LaurentPoly::t_power(n, i - 1) * N[static_cast<size_t>(i - 1)];
    if (self_test && i == 2) term = LaurentPoly::t_power(n, 1) * term;  // mutation: scale one phi by t
    sum += term;
  }
  LaurentPoly rhs_num = D + (LaurentPoly::t_power(n, 1) - LaurentPoly::one(n)) * sum;
  rep.add("identity_5_3", Json{{"n", n}}, lhs_num == rhs_num, "");
  // t = 1 specialization: both sides are 1, i.e. lhs numerator equals D
  {
    ExponentVec zero_mono(n);
    LaurentPoly l1 = lhs_num.substitute(kGenU, Rat(1), zero_mono);
    LaurentPoly d1 = D.substitute(kGenU, Rat(1), zero_mono);
    rep.add("identity_5_3_t1", Json{{"n", n}}, l1 == d1, "");
  }
  return rep;
}

Report verify_prop31_integrand(int n, const QKZParams& params) {
  Report rep;
  rep.suite = "prop31";
  auto phi = phi_basis(n);
  InducedVec psi = InducedVec::zero(n);
  for (int k = 0; k < 2 * n; ++k) psi.c[static_cast<size_t>(k)] = phi[static_cast<size_t>(k)];
  for (int i = 1; i <= n; ++i) {
    SignedPerm si = SignedPerm::simple_reflection(i, n);
    InducedVec lhs = apply_rw_induced(si, psi);
    bool pass = false;
    std::string detail;
    try {
      InducedVec rhs = apply_R_induced(AffineRoot(simple_root(i, n), 0), psi, params);
      pass = lhs.equals(rhs);
      if (!pass) detail = "componentwise mismatch at i=" + std::to_string(i);
    } catch (const std::logic_error& e) {
      detail = e.what();
    }
    rep.add("prop_3_1", Json{{"n", n}, {"i", i}}, pass, detail);
  }
  return rep;
}

}  // namespace cnqkz
