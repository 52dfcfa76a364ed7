#include "cnqkz/ratfunc.hpp"

#include <stdexcept>

namespace cnqkz {

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::one(num_.rank())) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.rank() != den_.rank()) throw std::invalid_argument("RatFunc: rank mismatch");
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one(den_.rank());
    return;
  }
  if (num_ == den_) {
    num_ = LaurentPoly::one(num_.rank());
    den_ = LaurentPoly::one(den_.rank());
    return;
  }
  auto [e0, c0] = den_.least_term();
  if (e0.is_zero() && c0 == 1) return;
  Rat inv = 1 / c0;
  num_ = num_.mul_monomial(-e0, inv);
  den_ = den_.mul_monomial(-e0, inv);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

bool RatFunc::equals(const RatFunc& o) const {
  if (num_.rank() != o.num_.rank()) throw std::invalid_argument("RatFunc: rank mismatch");
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::substitute(int gen, const Rat& coeff, const ExponentVec& mono) const {
  return RatFunc(num_.substitute(gen, coeff, mono), den_.substitute(gen, coeff, mono));
}

std::complex<double> RatFunc::eval(std::span<const std::complex<double>> gen_values,
                                   double tol) const {
  std::complex<double> d = den_.eval(gen_values);
  if (std::abs(d) < tol) throw std::domain_error("RatFunc::eval: near-singular denominator");
  return num_.eval(gen_values) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cnqkz
