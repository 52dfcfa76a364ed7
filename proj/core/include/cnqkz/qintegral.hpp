#ifndef CNQKZ_QINTEGRAL_HPP
#define CNQKZ_QINTEGRAL_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnqkz/report.hpp"
#include "cnqkz/rmatrix.hpp"
#include "cnqkz/rng.hpp"

namespace cnqkz {

/// Floating evaluation context for the residue sums: 0 < q < 1, t > 0,
/// nonzero complex y_j, positive integer lambda, truncation orders and
/// the verification tolerance.
struct NumericPoint {
  double q = 0.3;
  double t = 0.7;
  std::vector<std::complex<double>> y;
  int lambda = 1;
  int prod_trunc = 0;    // 0: derived so that q^N < 1e-17
  int ladder_trunc = 80;
  double tol = 1e-8;

  int rank() const { return static_cast<int>(y.size()); }
  int derived_prod_trunc() const;
  void validate() const;  // throws std::invalid_argument
  NumericPoint shifted_y(int i, std::complex<double> factor) const;
  NumericPoint shifted_all(std::complex<double> factor) const;
};

/// Numeric integrand x^lambda * prod (1 - c/x)^e * prod (c/x; q)_inf^e
/// with every base c an exact monomial in v, u, y. The dx/x measure is
/// folded into the residue formula; the global 2*pi*i is dropped.
struct Integrand {
  int rank = 0;
  int lambda = 1;
  std::vector<std::pair<ExponentVec, int>> lin;
  std::vector<std::pair<ExponentVec, int>> poch;

  void mul_lin(const ExponentVec& base, int e);
  void mul_poch(const ExponentVec& base, int e);
  /// y_1 -> q y_1^{-1} applied to every base.
  Integrand s0_substituted() const;
  /// Signed permutation of the y slots in every base.
  Integrand permuted(const SignedPerm& w) const;
};

/// The weight form Phi alone (psi = 1).
Integrand phi_form(int n, int lambda);
/// phi_{w_i} * Phi.
Integrand phi_i_integrand(int n, int i, int lambda);
/// prod_j (1-y_j/x)(1-y_j^{-1}/x) / [(1-t y_j/x)(1-t y_j^{-1}/x)] * Phi.
Integrand ratio54_integrand(int n, int lambda);

struct PsiSpec {
  enum Kind { kOne, kPhi, kS0Phi, kRatio54 } kind = kOne;
  int index = 0;  // for kPhi / kS0Phi
};
std::optional<PsiSpec> parse_psi(std::string_view text, int n);
Integrand integrand_for(const PsiSpec& psi, int n, int lambda);

struct BracketResult {
  std::complex<double> value{0.0, 0.0};
  int terms = 0;
  bool converged = true;
};

/// Truncated (a; q)_infinity.
std::complex<double> qpoch_inf(std::complex<double> a, const NumericPoint& pt);

/// Value of the integrand (including the 1/x measure factor) at x.
std::complex<double> integrand_value(const Integrand& ig, std::complex<double> x,
                                     const NumericPoint& pt);

/// Ladder points must be pairwise separated and clear of the linear-factor
/// poles by a relative margin of 1e-6.
bool genericity_ok(const Integrand& ig, const NumericPoint& pt, std::string* why = nullptr);

/// <psi> as the residue sum over the pole ladders of the integrand.
/// The residue at x0 = base q^m is the integrand with the vanishing factor
/// stripped, evaluated at x0 (the measure's 1/x cancels the Jacobian).
BracketResult bracket(const Integrand& ig, const NumericPoint& pt);

/// Lemma 4.3, both equations of (4.10), residual < pt.tol.
Report verify_lemma43(const NumericPoint& pt, bool self_test = false);
/// Theorem 3.2: the n+1 QKZ equations in the L/P^u form at pt.
Report verify_qkz(const NumericPoint& pt, bool self_test = false);
/// Corollary 5.1 sum relation and identity (5.4).
Report verify_cor51(const NumericPoint& pt, bool self_test = false);
/// <1>/P_{(lambda,0,...)} constant across random y samples.
Report ratio_test_macdonald(int n, int lambda, const NumericPoint& base, int samples,
                            uint64_t seed, bool self_test = false);

/// Generic y sample with |y_j| in [0.8, 1.4] and random phase.
std::vector<std::complex<double>> sample_y(int n, SplitMix64& rng);

}  // namespace cnqkz

#endif
