#ifndef CNQKZ_RATFUNC_HPP
#define CNQKZ_RATFUNC_HPP

#include <complex>
#include <span>
#include <string>

#include "cnqkz/laurent.hpp"

namespace cnqkz {

/// Quotient of two Laurent polynomials. Fractions are kept unreduced
/// except for joint monomial-content stripping: after construction the
/// denominator's lexicographically least monomial is 1. Equality is
/// decided by cross-multiplication, never by a normal form.
class RatFunc {
 public:
  explicit RatFunc(LaurentPoly num);
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc zero(int rank) { return RatFunc(LaurentPoly::zero(rank)); }
  static RatFunc one(int rank) { return RatFunc(LaurentPoly::one(rank)); }
  static RatFunc constant(int rank, Rat c) { return RatFunc(LaurentPoly::constant(rank, std::move(c))); }
  static RatFunc generator(int rank, int gen, int power = 1) {
    return RatFunc(LaurentPoly::generator(rank, gen, power));
  }
  static RatFunc q_power(int rank, int k) { return RatFunc(LaurentPoly::q_power(rank, k)); }
  static RatFunc t_power(int rank, int k) { return RatFunc(LaurentPoly::t_power(rank, k)); }

  int rank() const { return num_.rank(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool den_is_one() const { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;

  /// Cross-multiplication equality: num*o.den == o.num*den.
  bool equals(const RatFunc& o) const;

  RatFunc substitute(int gen, const Rat& coeff, const ExponentVec& mono) const;

  /// Evaluate at the given generator values. Throws if |den| < tol.
  std::complex<double> eval(std::span<const std::complex<double>> gen_values,
                            double tol = 1e-12) const;

  std::string to_string() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace cnqkz

#endif
