#ifndef CNQKZ_RMATRIX_HPP
#define CNQKZ_RMATRIX_HPP

#include <map>
#include <optional>
#include <vector>

#include "cnqkz/report.hpp"
#include "cnqkz/weyl.hpp"

namespace cnqkz {

/// Parameters of the QKZ system: rank, the spectral integer lambda
/// (u = -lambda eps_1), and optional exact rational overrides for the
/// two Hecke parameters (t_short for +-eps_i+-eps_j, t_long for +-2eps_i).
/// Without overrides both are the symbolic t = u^2.
struct QKZParams {
  int n = 1;
  int lambda = 1;
  std::optional<Rat> t_short;
  std::optional<Rat> t_long;
  bool perturb_d = false;  // self-test mutation: d -> d + 1
};

/// The four R-matrix coefficients; a+d = 1 and b+c = 1 identically.
struct RCoeffs {
  RatFunc a, b, c, d;
};

/// Coefficients of R_{alpha+m delta} with e^{alpha+m delta} realized as
/// q^m times the y-monomial of alpha.
RCoeffs r_coeffs(const AffineRoot& beta, const QKZParams& params);

/// Element of the full module V: finitely many nonzero coefficients on h_w.
using FullVec = std::map<SignedPerm, RatFunc>;

/// R_{alpha+m delta} on the full module, two-case formula with the
/// off-diagonal factor q^{m<alpha^vee, y u>} from u = -lambda eps_1.
FullVec apply_R_full(const AffineRoot& beta, const FullVec& F, const QKZParams& params);

/// r_w(f h_y) = w(f) h_{wy}.
FullVec apply_rw(const SignedPerm& w, const FullVec& F);

/// Coefficientwise cross-multiplication equality (absent entries are zero).
bool fullvec_equal(const FullVec& A, const FullVec& B, int rank);

/// Coefficient vector on the induced basis hbar_{w_1}..hbar_{w_2n}.
struct InducedVec {
  int n = 0;
  std::vector<RatFunc> c;

  static InducedVec zero(int n);
  static InducedVec unit(int n, int k);  // 1 on hbar_{w_k}
  bool equals(const InducedVec& o) const;
};

/// hbar_{w_k} = sum over the stabilizer coset of h_{w_k g}.
FullVec embed_induced(const InducedVec& v);

/// Inverse of embed_induced; nullopt when the vector is not coset-uniform.
std::optional<InducedVec> extract_induced(const FullVec& F, int n);

/// Induced-module action of R_{alpha+m delta}, computed by embedding into
/// the full module. Throws if the result leaves the induced span.
InducedVec apply_R_induced(const AffineRoot& beta, const InducedVec& v, const QKZParams& params);

/// r_w on the induced module: coefficients transformed, cosets permuted.
InducedVec apply_rw_induced(const SignedPerm& w, const InducedVec& v);

using RatMatrix = std::vector<std::vector<RatFunc>>;

/// Left-to-right listed factors of R_{tau(eps_i)} (i >= 1) or of the
/// half-sum transport (i == 0), exactly as displayed in the QKZ definition.
std::vector<AffineRoot> transport_word(int i, int n);

/// The QKZ transport as a 2n x 2n matrix over the induced basis;
/// i in 1..n selects R_{tau(eps_i)}, i == 0 the half-sum operator.
/// reverse=true applies the factors in reversed order (self-test mutation).
RatMatrix qkz_transport(int i, const QKZParams& params, bool reverse = false);

/// Eq. (2.3): both Yang-Baxter families on the full module.
Report verify_ybe(int n, const QKZParams& params);
/// Eq. (2.1) on simple w and all roots, plus Eq. (2.2) R_beta R_{-beta} = id.
Report verify_conjugation(int n, const QKZParams& params);
/// Lemmas 4.5/4.6: induced action against the closed-form case maps.
Report verify_induced_action(int n, const QKZParams& params);

}  // namespace cnqkz

#endif
