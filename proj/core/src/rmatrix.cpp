#include "cnqkz/rmatrix.hpp"

#include <stdexcept>

namespace cnqkz {

namespace {

void fv_add(FullVec& F, const SignedPerm& w, const RatFunc& f) {
  if (f.is_zero()) return;
  auto it = F.find(w);
  if (it == F.end()) {
    F.emplace(w, f);
  } else {
    it->second = it->second + f;
    if (it->second.is_zero()) F.erase(it);
  }
}

bool fv_equal(const FullVec& A, const FullVec& B, int rank, std::string* where) {
  auto coeff = [rank](const FullVec& F, const SignedPerm& w) {
    auto it = F.find(w);
    return it == F.end() ? RatFunc::zero(rank) : it->second;
  };
  for (const auto& [w, f] : A) {
    if (!f.equals(coeff(B, w))) {
      if (where) *where = "coefficient of h_" + w.to_string();
      return false;
    }
  }
  for (const auto& [w, f] : B) {
    if (A.find(w) == A.end() && !f.is_zero()) {
      if (where) *where = "coefficient of h_" + w.to_string();
      return false;
    }
  }
  return true;
}

FullVec apply_word(const std::vector<AffineRoot>& word, const FullVec& F, const QKZParams& p) {
  FullVec v = F;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_R_full(*it, v, p);
  return v;
}

}  // namespace

RCoeffs r_coeffs(const AffineRoot& beta, const QKZParams& params) {
  int n = params.n;
  if (static_cast<int>(beta.root.size()) != n) throw std::invalid_argument("r_coeffs: rank mismatch");
  // z = q^m e^alpha
  ExponentVec ze(n);
  ze[kGenV] = static_cast<int16_t>(2 * beta.m);
  for (int i = 1; i <= n; ++i) ze[gen_y(i)] = static_cast<int16_t>(beta.root[static_cast<size_t>(i - 1)]);
  LaurentPoly z = LaurentPoly::monomial(n, ze, Rat(1));
  bool long_root = false;
  for (int v : beta.root)
    if (v == 2 || v == -2) long_root = true;
  LaurentPoly t = LaurentPoly::t_power(n, 1);
  const auto& ovr = long_root ? params.t_long : params.t_short;
  if (ovr) t = LaurentPoly::constant(n, *ovr);
  LaurentPoly one = LaurentPoly::one(n);
  LaurentPoly den = one - t * z;
  RCoeffs rc{
      RatFunc(one - z, den),
      RatFunc(one - t, den),
      RatFunc(t * (one - z), den),
      RatFunc(z * (one - t), den),
  };
  if (params.perturb_d) rc.d = rc.d + RatFunc::one(n);
  return rc;
}

FullVec apply_R_full(const AffineRoot& beta, const FullVec& F, const QKZParams& params) {
  int n = params.n;
  RCoeffs rc = r_coeffs(beta, params);
  SignedPerm refl = root_reflection(beta.root);
  Weight alpha_vee = coroot(beta.root);
  Weight u(static_cast<size_t>(n), 0);
  u[0] = -params.lambda;
  FullVec out;
  for (const auto& [y, f] : F) {
    Weight pulled = y.inverse().apply(beta.root);
    int k = beta.m * dot(alpha_vee, y.apply(u));
    RatFunc qk = RatFunc::q_power(n, k);
    SignedPerm target = refl * y;
    if (root_is_positive(pulled)) {
      fv_add(out, y, rc.a * f);
      fv_add(out, target, qk * rc.b * f);
    } else {
      fv_add(out, y, rc.c * f);
      fv_add(out, target, qk * rc.d * f);
    }
  }
  return out;
}

FullVec apply_rw(const SignedPerm& w, const FullVec& F) {
  FullVec out;
  for (const auto& [y, f] : F) fv_add(out, w * y, weyl_act(w, f));
  return out;
}

InducedVec InducedVec::zero(int n) {
  InducedVec v;
  v.n = n;
  v.c.assign(static_cast<size_t>(2 * n), RatFunc::zero(n));
  return v;
}

InducedVec InducedVec::unit(int n, int k) {
  InducedVec v = zero(n);
  v.c[static_cast<size_t>(k - 1)] = RatFunc::one(n);
  return v;
}

bool InducedVec::equals(const InducedVec& o) const {
  if (n != o.n) return false;
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].equals(o.c[i])) return false;
  return true;
}

FullVec embed_induced(const InducedVec& v) {
  auto reps = coset_reps(v.n);
  auto stab = stabilizer_eps1(v.n);
  FullVec out;
  for (size_t k = 0; k < v.c.size(); ++k) {
    if (v.c[k].is_zero()) continue;
    for (const SignedPerm& g : stab) fv_add(out, reps[k] * g, v.c[k]);
  }
  return out;
}

std::optional<InducedVec> extract_induced(const FullVec& F, int n) {
  auto reps = coset_reps(n);
  auto stab = stabilizer_eps1(n);
  InducedVec out = InducedVec::zero(n);
  auto coeff = [&](const SignedPerm& w) {
    auto it = F.find(w);
    return it == F.end() ? RatFunc::zero(n) : it->second;
  };
  for (size_t k = 0; k < reps.size(); ++k) {
    RatFunc common = coeff(reps[k] * stab.front());
    for (size_t s = 1; s < stab.size(); ++s) {
      if (!coeff(reps[k] * stab[s]).equals(common)) return std::nullopt;
    }
    out.c[k] = common;
  }
  return out;
}

InducedVec apply_R_induced(const AffineRoot& beta, const InducedVec& v, const QKZParams& params) {
  FullVec full = apply_R_full(beta, embed_induced(v), params);
  auto back = extract_induced(full, v.n);
  if (!back) throw std::logic_error("apply_R_induced: result left the induced span");
  return *back;
}

InducedVec apply_rw_induced(const SignedPerm& w, const InducedVec& v) {
  InducedVec out = InducedVec::zero(v.n);
  for (size_t k = 0; k < v.c.size(); ++k) {
    if (v.c[k].is_zero()) continue;
    int j = coset_index(w * coset_reps(v.n)[k], v.n);
    out.c[static_cast<size_t>(j - 1)] = out.c[static_cast<size_t>(j - 1)] + weyl_act(w, v.c[k]);
  }
  return out;
}

std::vector<AffineRoot> transport_word(int i, int n) {
  std::vector<AffineRoot> word;
  auto pair_root = [n](int a, int b, int sb) {
    Weight r(static_cast<size_t>(n), 0);
    r[static_cast<size_t>(a - 1)] += 1;
    r[static_cast<size_t>(b - 1)] += sb;
    return r;
  };
  auto twice = [n](int a) {
    Weight r(static_cast<size_t>(n), 0);
    r[static_cast<size_t>(a - 1)] = 2;
    return r;
  };
  if (i == 0) {
    // half-sum transport: (R_{2e_1} R_{e_1+e_2} ... R_{e_1+e_n}) ... R_{2e_n}
    for (int k = 1; k <= n - 1; ++k) {
      word.emplace_back(twice(k), 0);
      for (int j = k + 1; j <= n; ++j) word.emplace_back(pair_root(k, j, +1), 0);
    }
    word.emplace_back(twice(n), 0);
    return word;
  }
  if (i < 1 || i > n) throw std::out_of_range("transport_word: index out of range");
  for (int j = i - 1; j >= 1; --j) word.emplace_back(pair_root(i, j, -1), 1);
  word.emplace_back(twice(i), 1);
  for (int j = 1; j <= i - 1; ++j) word.emplace_back(pair_root(j, i, +1), 0);
  for (int j = i + 1; j <= n; ++j) word.emplace_back(pair_root(i, j, +1), 0);
  word.emplace_back(twice(i), 0);
  for (int j = n; j >= i + 1; --j) word.emplace_back(pair_root(i, j, -1), 0);
  return word;
}

RatMatrix qkz_transport(int i, const QKZParams& params, bool reverse) {
  int n = params.n;
  std::vector<AffineRoot> word = transport_word(i, n);
  if (reverse) std::reverse(word.begin(), word.end());
  RatMatrix M(static_cast<size_t>(2 * n), std::vector<RatFunc>(static_cast<size_t>(2 * n), RatFunc::zero(n)));
  for (int k = 1; k <= 2 * n; ++k) {
    InducedVec col = InducedVec::unit(n, k);
    for (auto it = word.rbegin(); it != word.rend(); ++it) col = apply_R_induced(*it, col, params);
    for (int r = 1; r <= 2 * n; ++r) M[static_cast<size_t>(r - 1)][static_cast<size_t>(k - 1)] = col.c[static_cast<size_t>(r - 1)];
  }
  return M;
}

Report verify_ybe(int n, const QKZParams& params) {
  Report rep;
  rep.suite = "ybe";
  auto elems = all_elements(n);
  auto run = [&](const std::vector<AffineRoot>& w1, const std::vector<AffineRoot>& w2,
                 const std::string& name, Json jp) {
    bool pass = true;
    std::string where;
    for (const SignedPerm& y : elems) {
      FullVec hy;
      hy.emplace(y, RatFunc::one(n));
      FullVec lhs = apply_word(w1, hy, params);
      FullVec rhs = apply_word(w2, hy, params);
      if (!fv_equal(lhs, rhs, n, &where)) {
        pass = false;
        where = "basis h_" + y.to_string() + ", " + where;
        break;
      }
    }
    rep.add(name, std::move(jp), pass, where);
  };
  auto eps = [n](int a, int b, int sb) {
    Weight r(static_cast<size_t>(n), 0);
    r[static_cast<size_t>(a - 1)] += 1;
    if (b) r[static_cast<size_t>(b - 1)] += sb;
    return r;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        std::vector<AffineRoot> w1{{eps(i, j, -1), 0}, {eps(i, k, -1), 0}, {eps(j, k, -1), 0}};
        std::vector<AffineRoot> w2(w1.rbegin(), w1.rend());
        run(w1, w2, "ybe_a_type", Json{{"n", n}, {"i", i}, {"j", j}, {"k", k}});
      }
      Weight ti(static_cast<size_t>(n), 0), tj(static_cast<size_t>(n), 0);
      ti[static_cast<size_t>(i - 1)] = 2;
      tj[static_cast<size_t>(j - 1)] = 2;
      std::vector<AffineRoot> w1{{eps(i, j, -1), 0}, {ti, 0}, {eps(i, j, +1), 0}, {tj, 0}};
      std::vector<AffineRoot> w2(w1.rbegin(), w1.rend());
      run(w1, w2, "ybe_c_type", Json{{"n", n}, {"i", i}, {"j", j}});
    }
  }
  return rep;
}

Report verify_conjugation(int n, const QKZParams& params) {
  Report rep;
  rep.suite = "conjugation";
  auto elems = all_elements(n);
  auto roots = all_roots(n);
  for (int i = 1; i <= n; ++i) {
    SignedPerm si = SignedPerm::simple_reflection(i, n);
    for (const Weight& alpha : roots) {
      AffineRoot a(alpha, 0);
      AffineRoot wa(si.apply(alpha), 0);
      bool pass = true;
      std::string where;
      for (const SignedPerm& y : elems) {
        FullVec hy;
        hy.emplace(y, RatFunc::one(n));
        FullVec lhs = apply_rw(si, apply_R_full(a, hy, params));
        FullVec rhs = apply_R_full(wa, apply_rw(si, hy), params);
        if (!fv_equal(lhs, rhs, n, &where)) {
          pass = false;
          where = "basis h_" + y.to_string() + ", " + where;
          break;
        }
      }
      rep.add("conjugation_2_1", Json{{"n", n}, {"w", "s" + std::to_string(i)}, {"alpha", a.to_string()}},
              pass, where);
    }
  }
  for (const Weight& alpha : roots) {
    for (int m : {-1, 0, 1}) {
      AffineRoot beta(alpha, m);
      bool pass = true;
      std::string where;
      for (const SignedPerm& y : elems) {
        FullVec hy;
        hy.emplace(y, RatFunc::one(n));
        FullVec round = apply_R_full(beta.negated(), apply_R_full(beta, hy, params), params);
        if (!fv_equal(round, hy, n, &where)) {
          pass = false;
          where = "basis h_" + y.to_string() + ", " + where;
          break;
        }
      }
      rep.add("inverse_2_2", Json{{"n", n}, {"beta", beta.to_string()}}, pass, where);
    }
  }
  return rep;
}

Report verify_induced_action(int n, const QKZParams& params) {
  Report rep;
  rep.suite = "induced_action";
  int lambda = params.lambda;
  auto unit = [n](int k) { return InducedVec::unit(n, k); };
  auto scaled = [n](const RatFunc& f, int k) {
    InducedVec v = InducedVec::zero(n);
    v.c[static_cast<size_t>(k - 1)] = f;
    return v;
  };
  auto add = [](InducedVec a, const InducedVec& b) {
    for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = a.c[i] + b.c[i];
    return a;
  };
  // simple roots alpha_i
  for (int i = 1; i <= n; ++i) {
    AffineRoot ai(simple_root(i, n), 0);
    RCoeffs rc = r_coeffs(ai, params);
    for (int k = 1; k <= 2 * n; ++k) {
      InducedVec got = InducedVec::zero(n);
      try {
        got = apply_R_induced(ai, unit(k), params);
      } catch (const std::logic_error& e) {
        rep.add("lemma_4_5", Json{{"n", n}, {"root", "alpha_" + std::to_string(i)}, {"k", k}},
                false, e.what());
        continue;
      }
      InducedVec expect = unit(k);
      bool mixing = false;
      if (i < n) {
        if (k == i || k == i + 1 || k == 2 * n - i || k == 2 * n - i + 1) mixing = true;
      } else {
        if (k == n || k == n + 1) mixing = true;
      }
      std::string name = "lemma_4_5";
      if (mixing) {
        name = "lemma_4_6";
        int lo = (k == i || k == i + 1) ? i : 2 * n - i;  // for i == n this is just n
        if (i == n) lo = n;
        if (k == lo) {
          expect = add(scaled(rc.a, lo), scaled(rc.b, lo + 1));
        } else {
          expect = add(scaled(rc.c, lo + 1), scaled(rc.d, lo));
        }
      }
      bool pass = got.equals(expect);
      rep.add(name, Json{{"n", n}, {"root", "alpha_" + std::to_string(i)}, {"k", k}}, pass,
              pass ? "" : "hbar_w" + std::to_string(k));
    }
  }
  // delta - theta
  {
    Weight mtheta(static_cast<size_t>(n), 0);
    mtheta[0] = -2;
    AffineRoot dt(mtheta, 1);
    RCoeffs rc = r_coeffs(dt, params);
    for (int k = 1; k <= 2 * n; ++k) {
      InducedVec got = InducedVec::zero(n);
      try {
        got = apply_R_induced(dt, unit(k), params);
      } catch (const std::logic_error& e) {
        rep.add("lemma_4_5", Json{{"n", n}, {"root", "delta-theta"}, {"k", k}}, false, e.what());
        continue;
      }
      InducedVec expect = unit(k);
      std::string name = "lemma_4_5";
      if (k == 2 * n) {
        name = "lemma_4_6";
        expect = add(scaled(rc.a, 2 * n), scaled(RatFunc::q_power(n, -lambda) * rc.b, 1));
      } else if (k == 1) {
        name = "lemma_4_6";
        expect = add(scaled(rc.c, 1), scaled(RatFunc::q_power(n, lambda) * rc.d, 2 * n));
      }
      bool pass = got.equals(expect);
      rep.add(name, Json{{"n", n}, {"root", "delta-theta"}, {"k", k}, {"lambda", lambda}}, pass,
              pass ? "" : "hbar_w" + std::to_string(k));
    }
  }
  return rep;
}

}  // namespace cnqkz
