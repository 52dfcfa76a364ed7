#ifndef CNQKZ_EXPONENTS_HPP
#define CNQKZ_EXPONENTS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnqkz {

/// Largest supported ambient rank n (generator list is v,u,y_1..y_n,x).
inline constexpr int kMaxRank = 13;

/// Indices into the fixed generator order (v, u, y_1, ..., y_n, x).
inline constexpr int kGenV = 0;
inline constexpr int kGenU = 1;
constexpr int gen_y(int i) { return 1 + i; }        // i in 1..n
constexpr int gen_x(int rank) { return rank + 2; }  // last slot

/// Laurent exponent vector of fixed length rank+3. Componentwise addition
/// is the monomial product. Ordering is lexicographic on (v,u,y_1..y_n,x).
class ExponentVec {
 public:
  ExponentVec() : len_(0) { e_.fill(0); }

  explicit ExponentVec(int rank) : len_(static_cast<int8_t>(rank + 3)) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("ExponentVec: rank out of range");
    e_.fill(0);
  }

  int rank() const { return len_ - 3; }
  int size() const { return len_; }

  int16_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  int16_t& operator[](int i) { return e_[static_cast<size_t>(i)]; }

  ExponentVec operator+(const ExponentVec& o) const {
    check_rank(o);
    ExponentVec r(*this);
    for (int i = 0; i < len_; ++i) r.e_[static_cast<size_t>(i)] += o.e_[static_cast<size_t>(i)];
    return r;
  }
  ExponentVec operator-(const ExponentVec& o) const {
    check_rank(o);
    ExponentVec r(*this);
    for (int i = 0; i < len_; ++i) r.e_[static_cast<size_t>(i)] -= o.e_[static_cast<size_t>(i)];
    return r;
  }
  ExponentVec& operator+=(const ExponentVec& o) {
    check_rank(o);
    for (int i = 0; i < len_; ++i) e_[static_cast<size_t>(i)] += o.e_[static_cast<size_t>(i)];
    return *this;
  }
  ExponentVec operator-() const {
    ExponentVec r(*this);
    for (int i = 0; i < len_; ++i) r.e_[static_cast<size_t>(i)] = static_cast<int16_t>(-r.e_[static_cast<size_t>(i)]);
    return r;
  }
  ExponentVec scaled(int k) const {
    ExponentVec r(*this);
    for (int i = 0; i < len_; ++i) r.e_[static_cast<size_t>(i)] = static_cast<int16_t>(k * e_[static_cast<size_t>(i)]);
    return r;
  }

  bool operator==(const ExponentVec& o) const {
    if (len_ != o.len_) return false;
    for (int i = 0; i < len_; ++i)
      if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)]) return false;
    return true;
  }
  std::strong_ordering operator<=>(const ExponentVec& o) const {
    if (len_ != o.len_) return len_ <=> o.len_;
    for (int i = 0; i < len_; ++i) {
      if (e_[static_cast<size_t>(i)] != o.e_[static_cast<size_t>(i)])
        return e_[static_cast<size_t>(i)] <=> o.e_[static_cast<size_t>(i)];
    }
    return std::strong_ordering::equal;
  }

  bool is_zero() const {
    for (int i = 0; i < len_; ++i)
      if (e_[static_cast<size_t>(i)] != 0) return false;
    return true;
  }

  size_t hash() const {
    // FNV-1a over the active int16 slots
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < len_; ++i) {
      h ^= static_cast<size_t>(static_cast<uint16_t>(e_[static_cast<size_t>(i)]));
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  void check_rank(const ExponentVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("ExponentVec: rank mismatch");
  }

  int8_t len_;
  std::array<int16_t, 16> e_;
};

struct ExpHash {
  size_t operator()(const ExponentVec& e) const { return e.hash(); }
};

/// Display name of generator slot g at ambient rank: v, u, y1..yn, x.
inline std::string gen_name(int g, int rank) {
  if (g == kGenV) return "v";
  if (g == kGenU) return "u";
  if (g == gen_x(rank)) return "x";
  return "y" + std::to_string(g - 1);
}

}  // namespace cnqkz

#endif
