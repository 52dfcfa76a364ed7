#ifndef CNQKZ_LAURENT_HPP
#define CNQKZ_LAURENT_HPP

#include <complex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cnqkz/exponents.hpp"
#include "cnqkz/rational.hpp"

namespace cnqkz {

/// Sparse multivariate Laurent polynomial over Q in the generators
/// (v, u, y_1..y_n, x) with v = q^{1/2} and u = t^{1/2}. Values are
/// immutable in spirit: every operation returns a fresh polynomial, and
/// no stored coefficient is ever zero.
class LaurentPoly {
 public:
  using TermMap = std::unordered_map<ExponentVec, Rat, ExpHash>;

  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, Rat c);
  static LaurentPoly one(int rank) { return constant(rank, Rat(1)); }
  static LaurentPoly monomial(int rank, const ExponentVec& e, Rat c);
  /// gen^power as a monomial.
  static LaurentPoly generator(int rank, int gen, int power = 1);
  /// q^k = v^{2k}.
  static LaurentPoly q_power(int rank, int k) { return generator(rank, kGenV, 2 * k); }
  /// t^k = u^{2k}.
  static LaurentPoly t_power(int rank, int k) { return generator(rank, kGenU, 2 * k); }
  /// 1 - c * mono / x  (the ubiquitous linear factor of this project).
  static LaurentPoly one_minus_over_x(int rank, const ExponentVec& mono, Rat c = Rat(1));

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// True when the support involves none of the listed generator slots.
  bool independent_of(std::span<const int> gens) const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(const ExponentVec& e) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  bool operator==(const LaurentPoly& o) const;

  LaurentPoly scaled(const Rat& c) const;
  /// Multiply by the monomial c * e.
  LaurentPoly mul_monomial(const ExponentVec& e, const Rat& c) const;
  LaurentPoly pow(int k) const;  // k >= 0

  /// Homomorphic substitution gen -> coeff * mono (mono may mention gen).
  LaurentPoly substitute(int gen, const Rat& coeff, const ExponentVec& mono) const;

  /// If the polynomial is a single term, return it.
  bool single_term(ExponentVec* e, Rat* c) const;
  /// Lexicographically least term (throws on zero polynomial).
  std::pair<ExponentVec, Rat> least_term() const;

  std::complex<double> eval(std::span<const std::complex<double>> gen_values) const;

  /// Terms in ascending lexicographic exponent order.
  std::vector<std::pair<ExponentVec, Rat>> sorted_terms() const;
  /// Canonical rendering: sorted terms joined by " + ", each "coeff*gens".
  std::string to_string() const;

  void add_term(const ExponentVec& e, const Rat& c);

 private:
  void check_rank(const LaurentPoly& o) const;

  int rank_;
  TermMap terms_;
};

std::complex<double> complex_ipow(std::complex<double> b, int e);

}  // namespace cnqkz

#endif
