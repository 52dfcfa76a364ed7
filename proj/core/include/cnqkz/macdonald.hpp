#ifndef CNQKZ_MACDONALD_HPP
#define CNQKZ_MACDONALD_HPP

#include <map>
#include <vector>

#include "cnqkz/report.hpp"
#include "cnqkz/weyl.hpp"

namespace cnqkz {

/// W-invariant Laurent polynomial in the y generators with coefficients in
/// Q(q^{1/2}, t^{1/2}): a sparse map from y-exponent vectors to fractions
/// that are free of y and x.
struct SymLaurent {
  int n = 0;
  std::map<Weight, RatFunc> terms;

  static SymLaurent zero(int n) { return SymLaurent{n, {}}; }
  void add(const Weight& e, const RatFunc& c);
  /// Single fraction num/den; the terms share a y-free denominator.
  RatFunc to_ratfunc() const;
  bool is_w_invariant() const;
  /// Orbit decomposition: dominant representative -> coefficient.
  std::map<Weight, RatFunc> m_basis() const;
  std::complex<double> eval(double q, double t,
                            const std::vector<std::complex<double>>& y) const;
};

/// The C_n Macdonald q-difference operator: sum over sign vectors a of
///   prod_{i<j} (1-t y_i^{a_i} y_j^{a_j})/(1-y_i^{a_i} y_j^{a_j})
///   prod_i (1-t y_i^{2a_i})/(1-y_i^{2a_i})  T_{y_i}^{a_i/2},
/// with the half shift realized as y_i -> v^{a_i} y_i. The input must be
/// free of x; the result is an unreduced fraction.
RatFunc apply_E(const RatFunc& f, int n);

/// Product-form eigenvalue q^{-|mu|/2} prod_j (1 + t^j q^{mu_{n-j+1}}).
/// (The sum form over sign vectors factors to this times t^{-n(n+1)/4};
/// the product form is the one E itself reproduces, and is what we use.)
RatFunc eigenvalue_c(const Weight& mu, int n);

/// One-row Macdonald polynomial P_{(lambda,0,...,0)} via the closed-form
/// composition sum; monic on m_{(lambda,0,...,0)}.
SymLaurent macdonald_onerow(int n, int lambda);

/// Finite q-Pochhammer (t; q)_m as a polynomial in u, v.
LaurentPoly t_pochhammer(int n, int m);

Report verify_eigen(int n, int lambda, bool self_test = false);
Report verify_triangularity(int n, int lambda, bool self_test = false);

}  // namespace cnqkz

#endif
