#include <doctest.h>

#include <complex>
#include <vector>

#include "cnqkz/laurent.hpp"
#include "cnqkz/ratfunc.hpp"
#include "cnqkz/rng.hpp"

using namespace cnqkz;

namespace {

LaurentPoly y(int i, int rank, int pw = 1) { return LaurentPoly::generator(rank, gen_y(i), pw); }
LaurentPoly x(int rank, int pw = 1) { return LaurentPoly::generator(rank, gen_x(rank), pw); }

LaurentPoly random_poly(SplitMix64& rng, int rank, int max_terms = 5) {
  LaurentPoly p(rank);
  int terms = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    ExponentVec e(rank);
    for (int g = 0; g < rank + 3; ++g)
      e[g] = static_cast<int16_t>(static_cast<int>(rng.below(7)) - 3);
    long num = static_cast<long>(rng.below(19)) - 9;
    long den = 1 + static_cast<long>(rng.below(4));
    p.add_term(e, Rat(num, den));
  }
  return p;
}

std::vector<std::complex<double>> random_point(SplitMix64& rng, int rank) {
  std::vector<std::complex<double>> v;
  for (int g = 0; g < rank + 3; ++g) v.emplace_back(rng.uniform(0.5, 1.5), rng.uniform(-0.3, 0.3));
  return v;
}

}  // namespace

TEST_CASE("laurent addition") {
  int n = 1;
  CHECK((y(1, n) + (-y(1, n))).is_zero());
  LaurentPoly ty1 = LaurentPoly::t_power(n, 1) * y(1, n);
  CHECK((LaurentPoly::one(n) - ty1) + ty1 == LaurentPoly::one(n));
  LaurentPoly m = x(n, 3) * y(1, n);
  CHECK(m + m == m.scaled(Rat(2)));
}

TEST_CASE("laurent multiplication") {
  int n = 1;
  LaurentPoly a = LaurentPoly::one(n) - y(1, n) * x(n, -1);
  LaurentPoly b = LaurentPoly::one(n) + y(1, n) * x(n, -1);
  CHECK(a * b == LaurentPoly::one(n) - y(1, n, 2) * x(n, -2));
  SplitMix64 rng(7);
  LaurentPoly p = random_poly(rng, n);
  CHECK(LaurentPoly::one(n) * p == p);
  // (1 - q y)(1 - q^{-1} y) = 1 - (q + q^{-1}) y + y^2
  LaurentPoly c = (LaurentPoly::one(n) - LaurentPoly::q_power(n, 1) * y(1, n)) *
                  (LaurentPoly::one(n) - LaurentPoly::q_power(n, -1) * y(1, n));
  LaurentPoly expect = LaurentPoly::one(n) -
                       (LaurentPoly::q_power(n, 1) + LaurentPoly::q_power(n, -1)) * y(1, n) +
                       y(1, n, 2);
  CHECK(c == expect);
}

TEST_CASE("fraction arithmetic") {
  int n = 1;
  SplitMix64 rng(11);
  RatFunc a(random_poly(rng, n) + LaurentPoly::one(n), random_poly(rng, n) + LaurentPoly::q_power(n, 2));
  if (!a.is_zero()) CHECK((a / a).equals(RatFunc::one(n)));
  // 1/(1-y) + 1/(1-y^{-1}) = 1
  RatFunc f1(LaurentPoly::one(n), LaurentPoly::one(n) - y(1, n));
  RatFunc f2(LaurentPoly::one(n), LaurentPoly::one(n) - y(1, n, -1));
  CHECK((f1 + f2).equals(RatFunc::one(n)));
  // construction keeps the fraction unreduced
  LaurentPoly numr = LaurentPoly::one(n) - LaurentPoly::t_power(n, 1);
  LaurentPoly denr = LaurentPoly::one(n) - LaurentPoly::t_power(n, 1) * LaurentPoly::q_power(n, 1) * y(1, n);
  RatFunc g(numr, denr);
  CHECK(g.num().term_count() == 2);
  CHECK(g.den().term_count() == 2);
  CHECK_THROWS_AS(f1 / RatFunc::zero(n), std::domain_error);
}

TEST_CASE("fraction equality by cross-multiplication") {
  int n = 2;
  RatFunc lhs(y(1, n, 2) - LaurentPoly::one(n), y(1, n) - LaurentPoly::one(n));
  RatFunc rhs(y(1, n) + LaurentPoly::one(n));
  CHECK(lhs.equals(rhs));
  RatFunc p1(LaurentPoly::one(n),
             LaurentPoly::one(n) - LaurentPoly::t_power(n, 1) * y(1, n) * x(n, -1));
  RatFunc p2(LaurentPoly::one(n),
             LaurentPoly::one(n) - LaurentPoly::t_power(n, 1) * y(2, n) * x(n, -1));
  CHECK_FALSE(p1.equals(p2));
}

TEST_CASE("monomial substitution") {
  int n = 1;
  // y_1 -> q y_1^{-1} on 1/(1 - t y_1^{-1}/x) gives 1/(1 - (t/q) y_1/x)
  LaurentPoly den = LaurentPoly::one(n) -
                    LaurentPoly::t_power(n, 1) * y(1, n, -1) * x(n, -1);
  RatFunc f(LaurentPoly::one(n), den);
  ExponentVec img(n);
  img[kGenV] = 2;
  img[gen_y(1)] = -1;
  RatFunc got = f.substitute(gen_y(1), Rat(1), img);
  LaurentPoly den2 = LaurentPoly::one(n) -
                     LaurentPoly::t_power(n, 1) * LaurentPoly::q_power(n, -1) * y(1, n) * x(n, -1);
  CHECK(got.equals(RatFunc(LaurentPoly::one(n), den2)));
  // identity substitution
  ExponentVec self(n);
  self[gen_y(1)] = 1;
  CHECK(f.substitute(gen_y(1), Rat(1), self).equals(f));
  // x -> q x on x^2 gives q^2 x^2
  ExponentVec xq(n);
  xq[kGenV] = 2;
  xq[gen_x(n)] = 1;
  LaurentPoly xx = x(n, 2);
  CHECK(xx.substitute(gen_x(n), Rat(1), xq) == LaurentPoly::q_power(n, 2) * x(n, 2));
}

TEST_CASE("numeric evaluation") {
  int n = 1;
  std::vector<std::complex<double>> vals = {1.0, 0.7, 0.9, 1.0};  // v,u,y1,x
  CHECK(RatFunc::one(n).eval(vals) == std::complex<double>(1.0, 0.0));
  CHECK(RatFunc(y(1, n)).eval(vals) == std::complex<double>(0.9, 0.0));
  // (1-t)/(1-t y1) at t = 0.49, y1 = 0.9 against a direct evaluation
  RatFunc f(LaurentPoly::one(n) - LaurentPoly::t_power(n, 1),
            LaurentPoly::one(n) - LaurentPoly::t_power(n, 1) * y(1, n));
  double direct = (1.0 - 0.49) / (1.0 - 0.49 * 0.9);
  CHECK(std::abs(f.eval(vals) - direct) < 1e-12);
  CHECK(std::abs(direct - 0.9123434704830055) < 1e-12);
  // near-singular denominator
  RatFunc g(LaurentPoly::one(n), LaurentPoly::one(n) - y(1, n));
  std::vector<std::complex<double>> sing = {1.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(g.eval(sing), std::domain_error);
}

TEST_CASE("ring laws on random polynomials") {
  SplitMix64 rng(2024);
  int n = 2;
  for (int iter = 0; iter < 1000; ++iter) {
    LaurentPoly a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("fraction equality is an equivalence") {
  SplitMix64 rng(99);
  int n = 1;
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly pn = random_poly(rng, n) + LaurentPoly::one(n);
    LaurentPoly pd = random_poly(rng, n) + LaurentPoly::q_power(n, 1);
    if (pd.is_zero() || pn.is_zero()) continue;
    RatFunc a(pn, pd);
    LaurentPoly m1 = random_poly(rng, n) + LaurentPoly::one(n);
    LaurentPoly m2 = random_poly(rng, n) + LaurentPoly::t_power(n, 1);
    if (m1.is_zero() || m2.is_zero()) continue;
    RatFunc b(pn * m1, pd * m1);
    RatFunc c(pn * m2, pd * m2);
    CHECK(a.equals(a));
    CHECK(a.equals(b));
    CHECK(b.equals(a));
    CHECK(b.equals(c));
    CHECK(a.equals(c));  // transitivity across the chain
  }
}

TEST_CASE("substitution involutions") {
  SplitMix64 rng(5);
  int n = 2;
  ExponentVec inv1(n);
  inv1[gen_y(1)] = -1;
  ExponentVec xq(n), xqinv(n);
  xq[kGenV] = 2;
  xq[gen_x(n)] = 1;
  xqinv[kGenV] = -2;
  xqinv[gen_x(n)] = 1;
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng, n);
    CHECK(p.substitute(gen_y(1), Rat(1), inv1).substitute(gen_y(1), Rat(1), inv1) == p);
    CHECK(p.substitute(gen_x(n), Rat(1), xq).substitute(gen_x(n), Rat(1), xqinv) == p);
  }
}

TEST_CASE("evaluation is multiplicative") {
  SplitMix64 rng(31337);
  int n = 2;
  for (int iter = 0; iter < 300; ++iter) {
    LaurentPoly a = random_poly(rng, n), b = random_poly(rng, n);
    auto pt = random_point(rng, n);
    std::complex<double> lhs = (a * b).eval(pt);
    std::complex<double> rhs = a.eval(pt) * b.eval(pt);
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) / scale < 1e-10);
  }
}

TEST_CASE("canonical text rendering") {
  int n = 1;
  LaurentPoly p = LaurentPoly::one(n) - LaurentPoly::t_power(n, 1) * y(1, n, -2);
  CHECK(p.to_string() == "1 + -u^2*y1^-2");
  CHECK(LaurentPoly::zero(n).to_string() == "0");
  RatFunc f(LaurentPoly::one(n), p);
  CHECK(f.to_string() == "(1)/(1 + -u^2*y1^-2)");
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(LaurentPoly::one(1) + LaurentPoly::one(2), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::one(1) * LaurentPoly::one(2), std::invalid_argument);
}
