#ifndef CNQKZ_WEYL_HPP
#define CNQKZ_WEYL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cnqkz/ratfunc.hpp"

namespace cnqkz {

/// Weight in epsilon coordinates, one integer per epsilon_i.
using Weight = std::vector<int>;

/// Element of the hyperoctahedral group W(C_n) as a signed permutation:
/// image(i) = (j, s) means eps_i -> s*eps_j.
class SignedPerm {
 public:
  explicit SignedPerm(int n);  // identity

  /// s_i: swaps eps_i, eps_{i+1} for i < n; s_n negates eps_n.
  static SignedPerm simple_reflection(int i, int n);
  /// Product s_{w[0]} s_{w[1]} ... applied right to left.
  static SignedPerm from_word(std::span<const int> word, int n);
  /// From signed one-line notation: images[i-1] = +-j means eps_i -> +-eps_j.
  static SignedPerm from_images(const std::vector<int>& images);

  int rank() const { return static_cast<int>(img_.size()); }
  /// Signed image of eps_i, encoded +-j (1-based).
  int image(int i) const { return img_[static_cast<size_t>(i - 1)]; }

  SignedPerm operator*(const SignedPerm& o) const;  // (w*v)(x) = w(v(x))
  SignedPerm inverse() const;
  Weight apply(const Weight& w) const;
  bool is_identity() const;

  bool operator==(const SignedPerm& o) const { return img_ == o.img_; }
  std::strong_ordering operator<=>(const SignedPerm& o) const { return img_ <=> o.img_; }
  size_t hash() const;

  /// One-line signed notation, e.g. "[2,-1]".
  std::string to_string() const;

 private:
  std::vector<int8_t> img_;
};

/// All 2^n n! elements of W(C_n), in a deterministic order.
std::vector<SignedPerm> all_elements(int n);

/// The 2n coset representatives of W / W_{eps_1}:
/// w_1 = e, w_2 = s_1, ..., w_{n+1} = s_n...s_1, w_{n+k+1} = s_{n-k}...s_{n-1} w_{n+1}.
/// They satisfy w_i(eps_1) = eps_i (i <= n) and w_{n+i}(eps_1) = -eps_{n-i+1}.
std::vector<SignedPerm> coset_reps(int n);

/// The stabilizer W_{eps_1} = <s_2,...,s_n> as the set of elements fixing eps_1.
std::vector<SignedPerm> stabilizer_eps1(int n);

/// 1-based index (in the coset_reps order) of the coset of w, from w(eps_1).
int coset_index(const SignedPerm& w, int n);

/// s_theta, the reflection by the highest root theta = 2 eps_1.
SignedPerm theta_reflection(int n);

/// g = s_n (s_{n-1} s_n) ... (s_1 ... s_n); satisfies g(eps_i) = -eps_{n-i+1}.
SignedPerm long_flip(int n);

/// Affine root alpha + m*delta with alpha a C_n root (+-eps_i+-eps_j or +-2eps_i).
struct AffineRoot {
  Weight root;
  int m = 0;

  AffineRoot() = default;
  AffineRoot(Weight r, int mm);
  AffineRoot negated() const;
  bool operator==(const AffineRoot& o) const { return root == o.root && m == o.m; }
  std::string to_string() const;
};

bool is_cn_root(const Weight& r);
/// First nonzero coordinate positive (characterizes Delta^+ for C_n).
bool root_is_positive(const Weight& r);
/// Reflection s_alpha as a signed permutation.
SignedPerm root_reflection(const Weight& r);
/// alpha^vee in epsilon coordinates (alpha for +-eps_i+-eps_j, +-eps_i for +-2eps_i).
Weight coroot(const Weight& r);
int dot(const Weight& a, const Weight& b);
Weight apply_to_root(const SignedPerm& w, const Weight& r);

/// Simple roots alpha_1..alpha_n of C_n.
Weight simple_root(int i, int n);
/// All 2n^2 roots of C_n.
std::vector<Weight> all_roots(int n);

/// mu - nu in the nonnegative integer span of the simple roots
/// (non-strict dominance; true when mu == nu).
bool dominance_leq(const Weight& nu, const Weight& mu);

/// m_mu = sum of e^nu over the W-orbit of the partition mu, each weight once.
LaurentPoly orbit_sum(const Weight& mu, int n);

/// Weyl action on polynomials and fractions: y_i -> y_{w(i)} with
/// y_{-j} = y_j^{-1}; v, u, x are fixed.
LaurentPoly weyl_act(const SignedPerm& w, const LaurentPoly& f);
RatFunc weyl_act(const SignedPerm& w, const RatFunc& f);

/// The affine generator's substitution y_1 -> q y_1^{-1} (x fixed).
LaurentPoly s0_act(const LaurentPoly& f);
RatFunc s0_act(const RatFunc& f);

}  // namespace cnqkz

#endif
