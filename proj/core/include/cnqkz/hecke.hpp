#ifndef CNQKZ_HECKE_HPP
#define CNQKZ_HECKE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cnqkz/rmatrix.hpp"

namespace cnqkz {

/// Factor list of phi_{w_i}: pairs (mono, e) meaning (1 - mono/x)^e with
/// mono a monomial in v, u, y. The two-case definition:
///   1 <= i <= n:      prod_{mu<i}(1 - y_mu^{-1}/x) / prod_{mu<=i}(1 - t y_mu^{-1}/x)
///   n+1 <= i <= 2n:   prod_{2n-i+1<mu<=n}(1 - y_mu/x) / prod_{2n-i+1<=mu<=n}(1 - t y_mu/x)
///                     * prod_mu (1 - y_mu^{-1}/x)/(1 - t y_mu^{-1}/x)
std::vector<std::pair<ExponentVec, int>> phi_factors(int n, int i);

/// All 2n basis functions phi_{w_1}..phi_{w_2n} as rational functions.
std::vector<RatFunc> phi_basis(int n);

/// Lusztig operator T_i = t + (1 - t e^{alpha_i})/(1 - e^{alpha_i}) (s_i - 1).
RatFunc lusztig_T(int i, const RatFunc& f, int n);

/// Coordinates of f in the span of the phi basis over the constants
/// Q(q^{1/2}, t^{1/2}), via exact linear algebra; nullopt if f is outside.
std::optional<std::vector<RatFunc>> phi_span_solve(const RatFunc& f, int n);

/// Lemmas 4.1/4.2: fixed points and two-term mixing of s_0..s_n on the phi.
Report verify_si_action(int n, const QKZParams& params);
/// The displayed partial-fraction identities (4.4)-(4.9), (4.11), (4.12).
Report verify_partial_fractions(int n, const QKZParams& params);
/// Hecke algebra relations of the T_i as operator identities on the phi span.
Report verify_hecke_relations(int n, bool self_test = false);
/// All six displayed cases of the T_i action on the phi basis.
Report verify_prop61(int n, bool self_test = false);
/// Identity (5.3): the telescoping phi sum.
Report verify_identity_53(int n, bool self_test = false);
/// Proposition 3.1 at integrand level: r_{s_i} Psi = R_{alpha_i} Psi, i = 1..n.
Report verify_prop31_integrand(int n, const QKZParams& params);

}  // namespace cnqkz

#endif
