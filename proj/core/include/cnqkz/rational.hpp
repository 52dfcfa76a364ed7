#ifndef CNQKZ_RATIONAL_HPP
#define CNQKZ_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cnqkz {

/// Exact rational coefficient with unbounded numerator/denominator.
using Rat = mpq_class;

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

/// r^k for integral k; k < 0 requires r != 0.
inline Rat rat_pow(const Rat& r, long k) {
  if (k == 0) return Rat(1);
  if (rat_is_zero(r)) {
    if (k < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(0);
  }
  Rat base = k < 0 ? Rat(1 / r) : r;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  Rat acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// Canonical "p" or "p/q" form.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace cnqkz

#endif
