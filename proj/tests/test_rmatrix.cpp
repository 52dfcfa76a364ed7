#include <doctest.h>

#include "cnqkz/rmatrix.hpp"
#include "cnqkz/rng.hpp"

using namespace cnqkz;

namespace {

FullVec basis(const SignedPerm& y, int n) {
  FullVec v;
  v.emplace(y, RatFunc::one(n));
  return v;
}

RatFunc coeff_of(const FullVec& F, const SignedPerm& w, int n) {
  auto it = F.find(w);
  return it == F.end() ? RatFunc::zero(n) : it->second;
}

}  // namespace

TEST_CASE("r-matrix coefficient sum rules") {
  QKZParams p{2, 1};
  for (int i : {1, 2}) {
    for (int m : {-1, 0, 1}) {
      RCoeffs rc = r_coeffs(AffineRoot(simple_root(i, 2), m), p);
      CHECK((rc.a + rc.d).equals(RatFunc::one(2)));
      CHECK((rc.b + rc.c).equals(RatFunc::one(2)));
    }
  }
  // b vanishes at t = 1
  QKZParams pt1{2, 1, Rat(1), Rat(1)};
  RCoeffs rc1 = r_coeffs(AffineRoot(simple_root(1, 2), 0), pt1);
  CHECK(rc1.b.is_zero());
  // d_{delta-theta} = q e^{-theta} (1-t) / (1 - t q e^{-theta})
  QKZParams p1{1, 1};
  Weight mtheta{-2};
  RCoeffs dt = r_coeffs(AffineRoot(mtheta, 1), p1);
  LaurentPoly z = LaurentPoly::q_power(1, 1) * LaurentPoly::generator(1, gen_y(1), -2);
  LaurentPoly t = LaurentPoly::t_power(1, 1);
  RatFunc expect(z * (LaurentPoly::one(1) - t), LaurentPoly::one(1) - t * z);
  CHECK(dt.d.equals(expect));
}

TEST_CASE("full module action, two-case formula") {
  int n = 2;
  QKZParams p{n, 1};
  AffineRoot a1(simple_root(1, n), 0);
  RCoeffs rc = r_coeffs(a1, p);
  SignedPerm e(n), s1 = SignedPerm::simple_reflection(1, n);
  FullVec img = apply_R_full(a1, basis(e, n), p);
  CHECK(coeff_of(img, e, n).equals(rc.a));
  CHECK(coeff_of(img, s1, n).equals(rc.b));
  FullVec img2 = apply_R_full(a1, basis(s1, n), p);
  CHECK(coeff_of(img2, s1, n).equals(rc.c));
  CHECK(coeff_of(img2, e, n).equals(rc.d));
}

TEST_CASE("R_beta R_{-beta} is the identity") {
  int n = 2;
  QKZParams p{n, 2};
  SplitMix64 rng(41);
  auto elems = all_elements(n);
  auto roots = all_roots(n);
  for (int iter = 0; iter < 40; ++iter) {
    AffineRoot beta(roots[rng.below(roots.size())], static_cast<int>(rng.below(3)) - 1);
    const SignedPerm& y = elems[rng.below(elems.size())];
    FullVec round = apply_R_full(beta.negated(), apply_R_full(beta, basis(y, n), p), p);
    CHECK(round.size() == 1);
    CHECK(coeff_of(round, y, n).equals(RatFunc::one(n)));
  }
}

TEST_CASE("r_w action and composition") {
  int n = 2;
  SignedPerm e(n), s1 = SignedPerm::simple_reflection(1, n);
  FullVec v;
  v.emplace(e, RatFunc(LaurentPoly::generator(n, gen_y(1))));
  FullVec img = apply_rw(s1, v);
  CHECK(coeff_of(img, s1, n).equals(RatFunc(LaurentPoly::generator(n, gen_y(2)))));
  CHECK(apply_rw(SignedPerm(n), v) == v);
  SplitMix64 rng(4);
  auto elems = all_elements(n);
  for (int iter = 0; iter < 30; ++iter) {
    const SignedPerm& w = elems[rng.below(elems.size())];
    const SignedPerm& u = elems[rng.below(elems.size())];
    const SignedPerm& y = elems[rng.below(elems.size())];
    FullVec b = basis(y, n);
    CHECK(apply_rw(w, apply_rw(u, b)) == apply_rw(w * u, b));
  }
}

TEST_CASE("yang-baxter families") {
  QKZParams p2{2, 1};
  CHECK(verify_ybe(2, p2).all_pass());
  QKZParams bad{2, 1};
  bad.perturb_d = true;
  CHECK_FALSE(verify_ybe(2, bad).all_pass());
}

TEST_CASE("conjugation and inverse relations") {
  QKZParams p{2, 1};
  Report rep = verify_conjugation(2, p);
  CHECK(rep.all_pass());
  QKZParams bad{2, 1};
  bad.perturb_d = true;
  CHECK_FALSE(verify_conjugation(2, bad).all_pass());
}

TEST_CASE("two-parameter YBE experiment") {
  // exact rational overrides t_1 != t_2; run as an experiment, not a gate:
  // the two YBE families are exercised, and the outcome is simply recorded
  // by this test as the current behavior (both hold for the C-type family).
  QKZParams p{2, 1, Rat(4, 9), Rat(9, 25)};
  Report rep = verify_ybe(2, p);
  for (const auto& c : rep.checks) CHECK(c.pass);
}

TEST_CASE("induced action, fixed and mixing cases") {
  int n = 2;
  QKZParams p{n, 1};
  AffineRoot a1(simple_root(1, n), 0);
  RCoeffs rc = r_coeffs(a1, p);
  InducedVec img = apply_R_induced(a1, InducedVec::unit(n, 1), p);
  CHECK(img.c[0].equals(rc.a));
  CHECK(img.c[1].equals(rc.b));
  CHECK(img.c[2].is_zero());
  CHECK(img.c[3].is_zero());
  // delta-theta on e_1: c e_1 + q^lambda d e_{2n}
  QKZParams p2{n, 3};
  Weight mtheta(static_cast<size_t>(n), 0);
  mtheta[0] = -2;
  AffineRoot dt(mtheta, 1);
  RCoeffs rcdt = r_coeffs(dt, p2);
  InducedVec img2 = apply_R_induced(dt, InducedVec::unit(n, 1), p2);
  CHECK(img2.c[0].equals(rcdt.c));
  CHECK(img2.c[3].equals(RatFunc::q_power(n, 3) * rcdt.d));
  // closed-form case map, both lambdas
  CHECK(verify_induced_action(2, QKZParams{2, 1}).all_pass());
  CHECK(verify_induced_action(3, QKZParams{3, 2}).all_pass());
}

TEST_CASE("hbar_e is stabilizer invariant") {
  int n = 3;
  InducedVec e1 = InducedVec::unit(n, 1);
  FullVec embedded = embed_induced(e1);
  for (const SignedPerm& g : stabilizer_eps1(n)) {
    CHECK(apply_rw(g, embedded) == embedded);
  }
  // and extraction inverts embedding
  auto back = extract_induced(embedded, n);
  REQUIRE(back.has_value());
  CHECK(back->equals(e1));
}

TEST_CASE("induced agrees with the full module on transport roots") {
  int n = 2;
  QKZParams p{n, 2};
  for (int i : {0, 1, 2}) {
    for (const AffineRoot& beta : transport_word(i, n)) {
      for (int k = 1; k <= 2 * n; ++k) {
        InducedVec v = InducedVec::unit(n, k);
        FullVec full = apply_R_full(beta, embed_induced(v), p);
        auto back = extract_induced(full, n);
        REQUIRE(back.has_value());
        CHECK(back->equals(apply_R_induced(beta, v, p)));
      }
    }
  }
}

TEST_CASE("transport words follow the displayed products") {
  // n=2, i=1: R_{2e1+d} R_{e1+e2} R_{2e1} R_{e1-e2}
  auto w = transport_word(1, 2);
  REQUIRE(w.size() == 4);
  CHECK(w[0].root == Weight{2, 0});
  CHECK(w[0].m == 1);
  CHECK(w[1].root == Weight{1, 1});
  CHECK(w[1].m == 0);
  CHECK(w[2].root == Weight{2, 0});
  CHECK(w[2].m == 0);
  CHECK(w[3].root == Weight{1, -1});
  CHECK(w[3].m == 0);
  // n=1: R_{2e1+d} R_{2e1}; half-sum: R_{2e1}
  auto w1 = transport_word(1, 1);
  REQUIRE(w1.size() == 2);
  CHECK(w1[0].m == 1);
  CHECK(w1[1].m == 0);
  auto wh = transport_word(0, 1);
  REQUIRE(wh.size() == 1);
  CHECK(wh[0].root == Weight{2});
  // n=3, i=2: R_{e2-e1+d} R_{2e2+d} R_{e1+e2} R_{e2+e3} R_{2e2} R_{e2-e3}
  auto w2 = transport_word(2, 3);
  REQUIRE(w2.size() == 6);
  CHECK(w2[0].root == Weight{-1, 1, 0});
  CHECK(w2[0].m == 1);
  CHECK(w2[1].root == Weight{0, 2, 0});
  CHECK(w2[1].m == 1);
  CHECK(w2[2].root == Weight{1, 1, 0});
  CHECK(w2[3].root == Weight{0, 1, 1});
  CHECK(w2[4].root == Weight{0, 2, 0});
  CHECK(w2[4].m == 0);
  CHECK(w2[5].root == Weight{0, 1, -1});
}

TEST_CASE("qkz transport matrix at n=1") {
  int n = 1;
  QKZParams p{n, 1};
  // product R_{2e1+d} R_{2e1} assembled by hand from the induced action
  AffineRoot r0(Weight{2}, 0), r1(Weight{2}, 1);
  RatMatrix M = qkz_transport(1, p);
  for (int k = 1; k <= 2; ++k) {
    InducedVec col = apply_R_induced(r1, apply_R_induced(r0, InducedVec::unit(n, k), p), p);
    for (int r = 1; r <= 2; ++r)
      CHECK(M[static_cast<size_t>(r - 1)][static_cast<size_t>(k - 1)].equals(
          col.c[static_cast<size_t>(r - 1)]));
  }
  RatMatrix H = qkz_transport(0, p);
  for (int k = 1; k <= 2; ++k) {
    InducedVec col = apply_R_induced(r0, InducedVec::unit(n, k), p);
    for (int r = 1; r <= 2; ++r)
      CHECK(H[static_cast<size_t>(r - 1)][static_cast<size_t>(k - 1)].equals(
          col.c[static_cast<size_t>(r - 1)]));
  }
}
