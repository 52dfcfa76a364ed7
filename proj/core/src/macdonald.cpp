#include "cnqkz/macdonald.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace cnqkz {

namespace {

/// Sign-vector coefficient data: the xi monomials of the E operator.
std::vector<ExponentVec> xi_monomials(int n, const std::vector<int>& a) {
  std::vector<ExponentVec> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      ExponentVec e(n);
      e[gen_y(i)] = static_cast<int16_t>(a[static_cast<size_t>(i - 1)]);
      e[gen_y(j)] = static_cast<int16_t>(a[static_cast<size_t>(j - 1)]);
      out.push_back(e);
    }
    ExponentVec e(n);
    e[gen_y(i)] = static_cast<int16_t>(2 * a[static_cast<size_t>(i - 1)]);
    out.push_back(e);
  }
  return out;
}

LaurentPoly half_shift(const LaurentPoly& p, const std::vector<int>& a) {
  int n = p.rank();
  LaurentPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    int vshift = 0;
    for (int i = 1; i <= n; ++i) vshift += a[static_cast<size_t>(i - 1)] * e[gen_y(i)];
    ExponentVec ne = e;
    ne[kGenV] = static_cast<int16_t>(ne[kGenV] + vshift);
    out.add_term(ne, c);
  }
  return out;
}

bool y_and_x_free(const LaurentPoly& p) {
  std::vector<int> gens;
  for (int i = 1; i <= p.rank(); ++i) gens.push_back(gen_y(i));
  gens.push_back(gen_x(p.rank()));
  return p.independent_of(gens);
}

std::vector<std::vector<int>> sign_vectors(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = (bits & (1u << i)) ? -1 : 1;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

void SymLaurent::add(const Weight& e, const RatFunc& c) {
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

RatFunc SymLaurent::to_ratfunc() const {
  RatFunc acc = RatFunc::zero(n);
  for (const auto& [e, c] : terms) {
    ExponentVec m(n);
    for (int i = 1; i <= n; ++i) m[gen_y(i)] = static_cast<int16_t>(e[static_cast<size_t>(i - 1)]);
    acc = acc + RatFunc(LaurentPoly::monomial(n, m, Rat(1))) * c;
  }
  return acc;
}

bool SymLaurent::is_w_invariant() const {
  try {
    (void)m_basis();
  } catch (const std::logic_error&) {
    return false;
  }
  return true;
}

std::map<Weight, RatFunc> SymLaurent::m_basis() const {
  std::map<Weight, RatFunc> out;
  std::map<Weight, size_t> seen_count;
  for (const auto& [e, c] : terms) {
    Weight rep = e;
    for (int& v : rep) v = std::abs(v);
    std::sort(rep.begin(), rep.end(), std::greater<int>());
    auto it = out.find(rep);
    if (it == out.end()) {
      out.emplace(rep, c);
      seen_count[rep] = 1;
    } else {
      if (!it->second.equals(c))
        throw std::logic_error("SymLaurent::m_basis: coefficients differ inside a W-orbit");
      ++seen_count[rep];
    }
  }
  for (const auto& [rep, cnt] : seen_count) {
    if (cnt != orbit_sum(rep, n).term_count())
      throw std::logic_error("SymLaurent::m_basis: incomplete W-orbit in support");
  }
  return out;
}

std::complex<double> SymLaurent::eval(double q, double t,
                                      const std::vector<std::complex<double>>& y) const {
  std::vector<std::complex<double>> vals(static_cast<size_t>(n) + 3, {1.0, 0.0});
  vals[kGenV] = std::sqrt(q);
  vals[kGenU] = std::sqrt(t);
  for (int i = 1; i <= n; ++i) vals[static_cast<size_t>(gen_y(i))] = y[static_cast<size_t>(i - 1)];
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : terms) {
    std::complex<double> term = c.eval(vals);
    for (int i = 1; i <= n; ++i)
      term *= complex_ipow(y[static_cast<size_t>(i - 1)], e[static_cast<size_t>(i - 1)]);
    sum += term;
  }
  return sum;
}

RatFunc apply_E(const RatFunc& f, int n) {
  if (f.rank() != n) throw std::invalid_argument("apply_E: rank mismatch");
  LaurentPoly one = LaurentPoly::one(n);
  LaurentPoly t = LaurentPoly::t_power(n, 1);
  auto signs = sign_vectors(n);
  if (y_and_x_free(f.den())) {
    // common-denominator path: E(p/d) = [sum_a C_a D T_a(p)] / (D d)
    std::vector<ExponentVec> all_xi;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            ExponentVec e(n);
            e[gen_y(i)] = static_cast<int16_t>(si);
            e[gen_y(j)] = static_cast<int16_t>(sj);
            all_xi.push_back(e);
          }
      }
      for (int s : {2, -2}) {
        ExponentVec e(n);
        e[gen_y(i)] = static_cast<int16_t>(s);
        all_xi.push_back(e);
      }
    }
    LaurentPoly D = one;
    for (const auto& xi : all_xi) D *= one - LaurentPoly::monomial(n, xi, Rat(1));
    LaurentPoly total(n);
    for (const auto& a : signs) {
      auto mine = xi_monomials(n, a);
      LaurentPoly numer = half_shift(f.num(), a);
      for (const auto& xi : all_xi) {
        bool in_a = std::find(mine.begin(), mine.end(), xi) != mine.end();
        LaurentPoly factor = in_a ? one - t * LaurentPoly::monomial(n, xi, Rat(1))
                                  : one - LaurentPoly::monomial(n, xi, Rat(1));
        numer *= factor;
      }
      total += numer;
    }
    return RatFunc(total, D * f.den());
  }
  // generic path
  RatFunc acc = RatFunc::zero(n);
  for (const auto& a : signs) {
    LaurentPoly cn = one, cd = one;
    for (const auto& xi : xi_monomials(n, a)) {
      LaurentPoly z = LaurentPoly::monomial(n, xi, Rat(1));
      cn *= one - t * z;
      cd *= one - z;
    }
    RatFunc shifted(half_shift(f.num(), a), half_shift(f.den(), a));
    acc = acc + RatFunc(cn, cd) * shifted;
  }
  return acc;
}

RatFunc eigenvalue_c(const Weight& mu, int n) {
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("eigenvalue_c: rank mismatch");
  LaurentPoly num = LaurentPoly::one(n);
  int total = 0;
  for (int v : mu) total += v;
  for (int j = 1; j <= n; ++j) {
    ExponentVec e(n);
    e[kGenU] = static_cast<int16_t>(2 * j);
    e[kGenV] = static_cast<int16_t>(2 * mu[static_cast<size_t>(n - j)]);
    num *= LaurentPoly::one(n) + LaurentPoly::monomial(n, e, Rat(1));
  }
  return RatFunc(num, LaurentPoly::generator(n, kGenV, total));
}

LaurentPoly t_pochhammer(int n, int m) {
  LaurentPoly out = LaurentPoly::one(n);
  for (int k = 0; k < m; ++k) {
    ExponentVec e(n);
    e[kGenU] = 2;
    e[kGenV] = static_cast<int16_t>(2 * k);
    out *= LaurentPoly::one(n) - LaurentPoly::monomial(n, e, Rat(1));
  }
  return out;
}

namespace {

/// Gaussian binomial [m r]_q as a polynomial in v^2.
LaurentPoly gauss_binomial(int n, int m, int r) {
  if (r < 0 || r > m) return LaurentPoly::zero(n);
  // Pascal recursion [m r] = [m-1 r-1] + q^r [m-1 r]
  std::vector<std::vector<LaurentPoly>> row(static_cast<size_t>(m) + 1);
  for (int mm = 0; mm <= m; ++mm) {
    row[static_cast<size_t>(mm)].assign(static_cast<size_t>(mm) + 1, LaurentPoly::zero(n));
    row[static_cast<size_t>(mm)][0] = LaurentPoly::one(n);
    row[static_cast<size_t>(mm)][static_cast<size_t>(mm)] = LaurentPoly::one(n);
    for (int rr = 1; rr < mm; ++rr) {
      row[static_cast<size_t>(mm)][static_cast<size_t>(rr)] =
          row[static_cast<size_t>(mm - 1)][static_cast<size_t>(rr - 1)] +
          LaurentPoly::q_power(n, rr) * row[static_cast<size_t>(mm - 1)][static_cast<size_t>(rr)];
    }
  }
  return row[static_cast<size_t>(m)][static_cast<size_t>(r)];
}

void enumerate_compositions(int total, int parts, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  // colexicographic: last coordinates vary slowest
  for (int head = 0; head <= total; ++head) {
    cur.push_back(head);
    enumerate_compositions(total - head, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

SymLaurent macdonald_onerow(int n, int lambda) {
  if (lambda < 1) throw std::invalid_argument("macdonald_onerow: lambda must be positive");
  SymLaurent P = SymLaurent::zero(n);
  LaurentPoly t_lam = t_pochhammer(n, lambda);
  std::vector<int> cur;
  enumerate_compositions(lambda, 2 * n, cur, [&](const std::vector<int>& comp) {
    // coefficient = gauss multinomial(lambda; comp) * prod (t)_{i_k} / (t)_lambda
    LaurentPoly coeff_num = LaurentPoly::one(n);
    int partial = 0;
    for (int ik : comp) {
      partial += ik;
      coeff_num *= gauss_binomial(n, partial, ik);
    }
    for (int ik : comp) coeff_num *= t_pochhammer(n, ik);
    Weight e(static_cast<size_t>(n), 0);
    for (int j = 1; j <= n; ++j)
      e[static_cast<size_t>(j - 1)] = comp[static_cast<size_t>(j - 1)] - comp[static_cast<size_t>(2 * n - j)];
    P.add(e, RatFunc(coeff_num, t_lam));
  });
  return P;
}

Report verify_eigen(int n, int lambda, bool self_test) {
  Report rep;
  rep.suite = "eigen";
  SymLaurent P = macdonald_onerow(n, lambda);
  if (self_test) {
    // documented mutation: drop the composition term y_1^{-lambda}
    Weight drop(static_cast<size_t>(n), 0);
    drop[0] = -lambda;
    P.terms.erase(drop);
  }
  RatFunc pr = P.to_ratfunc();
  Weight mu(static_cast<size_t>(n), 0);
  mu[0] = lambda;
  RatFunc lhs = apply_E(pr, n);
  RatFunc rhs = eigenvalue_c(mu, n) * pr;
  bool pass = lhs.equals(rhs);
  rep.add("eigen_5_2", Json{{"n", n}, {"lambda", lambda}}, pass,
          pass ? "" : "E P != c_mu P");
  return rep;
}

Report verify_triangularity(int n, int lambda, bool self_test) {
  Report rep;
  rep.suite = "triangularity";
  SymLaurent P = macdonald_onerow(n, lambda);
  Weight mu(static_cast<size_t>(n), 0);
  mu[0] = lambda;
  if (self_test) {
    auto it = P.terms.find(mu);
    if (it != P.terms.end()) it->second = it->second + it->second;  // double the leading coefficient
  }
  bool invariant = true;
  std::map<Weight, RatFunc> mb;
  try {
    mb = P.m_basis();
  } catch (const std::logic_error&) {
    invariant = false;
  }
  rep.add("support_w_invariant", Json{{"n", n}, {"lambda", lambda}}, invariant, "");
  if (!invariant) return rep;
  auto lead = mb.find(mu);
  bool monic = lead != mb.end() && lead->second.equals(RatFunc::one(n));
  rep.add("monic_leading", Json{{"n", n}, {"lambda", lambda}}, monic,
          monic ? "" : "coefficient of m_(lambda,0,...) is not 1");
  for (const auto& [rep_w, coeff] : mb) {
    if (rep_w == mu) continue;
    bool less = dominance_leq(rep_w, mu);
    Json jw = Json::array();
    for (int v : rep_w) jw.push_back(v);
    rep.add("dominance", Json{{"n", n}, {"lambda", lambda}, {"nu", jw}}, less,
            less ? "" : "support orbit not below (lambda,0,...)");
  }
  return rep;
}

}  // namespace cnqkz
