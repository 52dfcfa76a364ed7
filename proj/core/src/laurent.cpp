#include "cnqkz/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnqkz {

LaurentPoly LaurentPoly::constant(int rank, Rat c) {
  LaurentPoly p(rank);
  if (!rat_is_zero(c)) p.terms_.emplace(ExponentVec(rank), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(int rank, const ExponentVec& e, Rat c) {
  LaurentPoly p(rank);
  if (!rat_is_zero(c)) p.terms_.emplace(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::generator(int rank, int gen, int power) {
  ExponentVec e(rank);
  e[gen] = static_cast<int16_t>(power);
  return monomial(rank, e, Rat(1));
}

LaurentPoly LaurentPoly::one_minus_over_x(int rank, const ExponentVec& mono, Rat c) {
  LaurentPoly p = one(rank);
  ExponentVec e = mono;
  e[gen_x(rank)] -= 1;
  p.add_term(e, -c);
  return p;
}

bool LaurentPoly::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return e.is_zero() && c == 1;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_zero();
}

bool LaurentPoly::independent_of(std::span<const int> gens) const {
  for (const auto& [e, c] : terms_)
    for (int g : gens)
      if (e[g] != 0) return false;
  return true;
}

Rat LaurentPoly::coeff(const ExponentVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& e, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_rank(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_rank(o);
  LaurentPoly r(rank_);
  if (terms_.empty() || o.terms_.empty()) return r;
  const LaurentPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const LaurentPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
  r.terms_.reserve(big.terms_.size() + small.terms_.size());
  Rat prod;
  for (const auto& [ea, ca] : small.terms_) {
    for (const auto& [eb, cb] : big.terms_) {
      prod = ca * cb;
      r.add_term(ea + eb, prod);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(rank_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [e, c] : terms_) {
    auto it = o.terms_.find(e);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
  LaurentPoly r(rank_);
  if (rat_is_zero(c)) return r;
  for (const auto& [e, tc] : terms_) r.terms_.emplace(e, tc * c);
  return r;
}

LaurentPoly LaurentPoly::mul_monomial(const ExponentVec& e, const Rat& c) const {
  LaurentPoly r(rank_);
  if (rat_is_zero(c)) return r;
  for (const auto& [te, tc] : terms_) r.terms_.emplace(te + e, tc * c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly acc = one(rank_);
  LaurentPoly base(*this);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute(int gen, const Rat& coeff, const ExponentVec& mono) const {
  LaurentPoly r(rank_);
  ExponentVec unit(rank_);
  unit[gen] = 1;
  for (const auto& [e, c] : terms_) {
    int k = e[gen];
    if (k == 0) {
      r.add_term(e, c);
      continue;
    }
    ExponentVec ne = e - unit.scaled(k) + mono.scaled(k);
    r.add_term(ne, c * rat_pow(coeff, k));
  }
  return r;
}

bool LaurentPoly::single_term(ExponentVec* e, Rat* c) const {
  if (terms_.size() != 1) return false;
  *e = terms_.begin()->first;
  *c = terms_.begin()->second;
  return true;
}

std::pair<ExponentVec, Rat> LaurentPoly::least_term() const {
  if (terms_.empty()) throw std::logic_error("least_term on zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (it->first < best->first) best = it;
  return {best->first, best->second};
}

std::complex<double> complex_ipow(std::complex<double> b, int e) {
  if (e == 0) return {1.0, 0.0};
  if (e < 0) {
    b = 1.0 / b;
    e = -e;
  }
  std::complex<double> acc{1.0, 0.0};
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::complex<double> LaurentPoly::eval(std::span<const std::complex<double>> gen_values) const {
  if (static_cast<int>(gen_values.size()) != rank_ + 3)
    throw std::invalid_argument("LaurentPoly::eval: wrong number of generator values");
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : sorted_terms()) {
    std::complex<double> term{c.get_d(), 0.0};
    for (int g = 0; g < rank_ + 3; ++g)
      if (e[g] != 0) term *= complex_ipow(gen_values[static_cast<size_t>(g)], e[g]);
    sum += term;
  }
  return sum;
}

std::vector<std::pair<ExponentVec, Rat>> LaurentPoly::sorted_terms() const {
  std::vector<std::pair<ExponentVec, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (int g = 0; g < rank_ + 3; ++g) {
      if (e[g] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += gen_name(g, rank_);
      if (e[g] != 1) mono += "^" + std::to_string(e[g]);
    }
    if (mono.empty()) {
      out += rat_to_string(c);
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += rat_to_string(c) + "*" + mono;
    }
  }
  return out;
}

void LaurentPoly::check_rank(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("LaurentPoly: rank mismatch");
}

}  // namespace cnqkz
