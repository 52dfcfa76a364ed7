#include <doctest.h>

#include <set>

#include "cnqkz/rng.hpp"
#include "cnqkz/weyl.hpp"

using namespace cnqkz;

namespace {

RatFunc random_frac(SplitMix64& rng, int n) {
  auto poly = [&](bool unit) {
    LaurentPoly p = unit ? LaurentPoly::one(n) : LaurentPoly::zero(n);
    for (int t = 0; t < 3; ++t) {
      ExponentVec e(n);
      for (int g = 0; g < n + 3; ++g) e[g] = static_cast<int16_t>(static_cast<int>(rng.below(5)) - 2);
      p.add_term(e, Rat(static_cast<long>(rng.below(9)) + 1));
    }
    return p;
  };
  return RatFunc(poly(false), poly(true));
}

}  // namespace

TEST_CASE("simple reflections") {
  SignedPerm s1 = SignedPerm::simple_reflection(1, 2);
  CHECK(s1.to_string() == "[2,1]");
  SignedPerm s2 = SignedPerm::simple_reflection(2, 2);
  CHECK(s2.to_string() == "[1,-2]");
  CHECK((s1 * s1).is_identity());
  CHECK_THROWS_AS(SignedPerm::simple_reflection(3, 2), std::out_of_range);
}

TEST_CASE("signed permutation action on weights") {
  int n = 3;
  SignedPerm sn = SignedPerm::simple_reflection(n, n);
  Weight en(static_cast<size_t>(n), 0);
  en[static_cast<size_t>(n - 1)] = 1;
  CHECK(sn.apply(en) == Weight{0, 0, -1});
  Weight e1{1, 0, 0};
  CHECK(theta_reflection(n).apply(e1) == Weight{-1, 0, 0});
  CHECK(long_flip(n).apply(e1) == Weight{0, 0, -1});
  // g(eps_i) = -eps_{n-i+1} for every i
  for (int i = 1; i <= n; ++i) {
    Weight ei(static_cast<size_t>(n), 0);
    ei[static_cast<size_t>(i - 1)] = 1;
    Weight img = long_flip(n).apply(ei);
    Weight expect(static_cast<size_t>(n), 0);
    expect[static_cast<size_t>(n - i)] = -1;
    CHECK(img == expect);
  }
}

TEST_CASE("coset representatives") {
  auto reps2 = coset_reps(2);
  REQUIRE(reps2.size() == 4);
  CHECK(reps2[0].is_identity());
  CHECK(reps2[1] == SignedPerm::simple_reflection(1, 2));
  std::vector<int> w3{2, 1};
  CHECK(reps2[2] == SignedPerm::from_word(w3, 2));
  std::vector<int> w4{1, 2, 1};
  CHECK(reps2[3] == SignedPerm::from_word(w4, 2));

  auto reps1 = coset_reps(1);
  REQUIRE(reps1.size() == 2);
  CHECK(reps1[0].is_identity());
  CHECK(reps1[1] == SignedPerm::simple_reflection(1, 1));

  // brute-force check of the defining images at n = 3, including w_4 = s_3 s_2 s_1
  auto reps3 = coset_reps(3);
  std::vector<int> word{3, 2, 1};
  CHECK(reps3[3] == SignedPerm::from_word(word, 3));
  for (int i = 1; i <= 6; ++i) {
    Weight img = reps3[static_cast<size_t>(i - 1)].apply(Weight{1, 0, 0});
    Weight expect(3, 0);
    if (i <= 3) expect[static_cast<size_t>(i - 1)] = 1;
    else expect[static_cast<size_t>(3 - (i - 3))] = -1;
    CHECK(img == expect);
    CHECK(coset_index(reps3[static_cast<size_t>(i - 1)], 3) == i);
  }
}

TEST_CASE("coset representatives are in distinct cosets") {
  for (int n : {1, 2, 3, 4}) {
    auto reps = coset_reps(n);
    Weight e1(static_cast<size_t>(n), 0);
    e1[0] = 1;
    for (size_t i = 0; i < reps.size(); ++i) {
      for (size_t j = 0; j < reps.size(); ++j) {
        bool fixes = (reps[i].inverse() * reps[j]).apply(e1) == e1;
        CHECK(fixes == (i == j));
      }
    }
  }
}

TEST_CASE("coxeter relations") {
  for (int n : {2, 3, 4}) {
    auto s = [n](int i) { return SignedPerm::simple_reflection(i, n); };
    for (int i = 1; i <= n; ++i) CHECK((s(i) * s(i)).is_identity());
    for (int i = 1; i + 1 <= n - 1; ++i) {
      SignedPerm p = s(i) * s(i + 1);
      CHECK((p * p * p).is_identity());
    }
    SignedPerm q = s(n - 1) * s(n);
    CHECK((q * q * q * q).is_identity());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) {
        SignedPerm r = s(i) * s(j);
        CHECK((r * r).is_identity());
      }
  }
}

TEST_CASE("group order") {
  for (int n : {1, 2, 3, 4}) {
    auto all = all_elements(n);
    std::set<SignedPerm> uniq(all.begin(), all.end());
    size_t expect = 1;
    for (int k = 1; k <= n; ++k) expect *= static_cast<size_t>(2 * k);
    CHECK(uniq.size() == expect);
    CHECK(stabilizer_eps1(n).size() == expect / static_cast<size_t>(2 * n));
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq({0, 0}, {2, 0}));
  CHECK_FALSE(dominance_leq({0, 0}, {1, 0}));
  CHECK(dominance_leq({1, 1}, {2, 0}));
  CHECK(dominance_leq({2, 0}, {2, 0}));  // non-strict by definition
  CHECK_FALSE(dominance_leq({2, 0}, {1, 1}));
}

TEST_CASE("orbit sums") {
  int n = 2;
  LaurentPoly m10 = orbit_sum({1, 0}, n);
  LaurentPoly expect(n);
  for (int i : {1, 2})
    for (int pw : {1, -1}) expect += LaurentPoly::generator(n, gen_y(i), pw);
  CHECK(m10 == expect);
  CHECK(orbit_sum({0, 0}, n) == LaurentPoly::one(n));

  // m_(1,1) by brute force over the whole group
  LaurentPoly m11 = orbit_sum({1, 1}, n);
  std::set<Weight> orbit;
  for (const SignedPerm& w : all_elements(n)) orbit.insert(w.apply(Weight{1, 1}));
  LaurentPoly brute(n);
  for (const Weight& v : orbit) {
    ExponentVec e(n);
    for (int i = 1; i <= n; ++i) e[gen_y(i)] = static_cast<int16_t>(v[static_cast<size_t>(i - 1)]);
    brute.add_term(e, Rat(1));
  }
  CHECK(m11 == brute);
  CHECK(m11.term_count() == 4);
  CHECK_THROWS_AS(orbit_sum({0, 1}, n), std::invalid_argument);
}

TEST_CASE("weyl action on rational functions") {
  int n = 2;
  // s_1 applied to 1/(1 - t y_1^{-1}/x)
  auto phi_like = [&](int idx) {
    ExponentVec e(n);
    e[kGenU] = 2;
    e[gen_y(idx)] = -1;
    e[gen_x(n)] = -1;
    LaurentPoly den = LaurentPoly::one(n) - LaurentPoly::monomial(n, e, Rat(1));
    return RatFunc(LaurentPoly::one(n), den);
  };
  CHECK(weyl_act(SignedPerm::simple_reflection(1, n), phi_like(1)).equals(phi_like(2)));
  RatFunc yn(LaurentPoly::generator(n, gen_y(n)));
  CHECK(weyl_act(SignedPerm::simple_reflection(n, n), yn)
            .equals(RatFunc(LaurentPoly::generator(n, gen_y(n), -1))));
  // s_0: y_1 -> q y_1^{-1}
  RatFunc y1(LaurentPoly::generator(n, gen_y(1)));
  RatFunc img = s0_act(y1);
  RatFunc expect(LaurentPoly::q_power(n, 1) * LaurentPoly::generator(n, gen_y(1), -1));
  CHECK(img.equals(expect));
}

TEST_CASE("weyl action is a group action") {
  SplitMix64 rng(17);
  int n = 3;
  auto elems = all_elements(n);
  for (int iter = 0; iter < 60; ++iter) {
    const SignedPerm& w = elems[rng.below(elems.size())];
    const SignedPerm& v = elems[rng.below(elems.size())];
    RatFunc f = random_frac(rng, n);
    CHECK(weyl_act(w, weyl_act(v, f)).equals(weyl_act(w * v, f)));
  }
}

TEST_CASE("orbit sums are invariant") {
  int n = 3;
  for (const Weight& mu : {Weight{1, 0, 0}, Weight{1, 1, 0}, Weight{2, 1, 0}}) {
    RatFunc m(orbit_sum(mu, n));
    for (int i = 1; i <= n; ++i)
      CHECK(weyl_act(SignedPerm::simple_reflection(i, n), m).equals(m));
  }
}

TEST_CASE("affine roots") {
  CHECK(is_cn_root({2, 0}));
  CHECK(is_cn_root({1, -1}));
  CHECK_FALSE(is_cn_root({1, 0}));
  CHECK_FALSE(is_cn_root({2, 1}));
  CHECK(root_is_positive({1, -1}));
  CHECK_FALSE(root_is_positive({-1, 1}));
  AffineRoot beta({-2, 0}, 1);
  CHECK(beta.negated().root == Weight{2, 0});
  CHECK(beta.negated().m == -1);
  CHECK_THROWS_AS(AffineRoot({1, 1, 1}, 0), std::invalid_argument);
  CHECK(coroot({2, 0}) == Weight{1, 0});
  CHECK(coroot({1, 1}) == Weight{1, 1});
}
