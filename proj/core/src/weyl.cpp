#include "cnqkz/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cnqkz {

SignedPerm::SignedPerm(int n) : img_(static_cast<size_t>(n)) {
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("SignedPerm: rank out of range");
  for (int i = 0; i < n; ++i) img_[static_cast<size_t>(i)] = static_cast<int8_t>(i + 1);
}

SignedPerm SignedPerm::simple_reflection(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("simple_reflection: index out of range");
  SignedPerm w(n);
  if (i < n) {
    std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
  } else {
    w.img_[static_cast<size_t>(n - 1)] = static_cast<int8_t>(-n);
  }
  return w;
}

SignedPerm SignedPerm::from_word(std::span<const int> word, int n) {
  SignedPerm w(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = simple_reflection(*it, n) * w;
  return w;
}

SignedPerm SignedPerm::from_images(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  SignedPerm w(n);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    int j = std::abs(images[static_cast<size_t>(i)]);
    if (j < 1 || j > n || seen[static_cast<size_t>(j - 1)])
      throw std::invalid_argument("SignedPerm: not a signed permutation");
    seen[static_cast<size_t>(j - 1)] = true;
    w.img_[static_cast<size_t>(i)] = static_cast<int8_t>(images[static_cast<size_t>(i)]);
  }
  return w;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("SignedPerm: rank mismatch");
  SignedPerm r(rank());
  for (int i = 1; i <= rank(); ++i) {
    int vi = o.image(i);
    int wj = image(std::abs(vi));
    r.img_[static_cast<size_t>(i - 1)] = static_cast<int8_t>(vi < 0 ? -wj : wj);
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r(rank());
  for (int i = 1; i <= rank(); ++i) {
    int j = image(i);
    r.img_[static_cast<size_t>(std::abs(j) - 1)] = static_cast<int8_t>(j < 0 ? -i : i);
  }
  return r;
}

Weight SignedPerm::apply(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank()) throw std::invalid_argument("SignedPerm: rank mismatch");
  Weight r(w.size(), 0);
  for (int i = 1; i <= rank(); ++i) {
    int j = image(i);
    r[static_cast<size_t>(std::abs(j) - 1)] = (j < 0 ? -1 : 1) * w[static_cast<size_t>(i - 1)];
  }
  return r;
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= rank(); ++i)
    if (image(i) != i) return false;
  return true;
}

size_t SignedPerm::hash() const {
  size_t h = 1469598103934665603ull;
  for (int8_t v : img_) {
    h ^= static_cast<size_t>(static_cast<uint8_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

std::string SignedPerm::to_string() const {
  std::string s = "[";
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(image(i));
  }
  return s + "]";
}

std::vector<SignedPerm> all_elements(int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<size_t>(k);
  std::vector<SignedPerm> out;
  out.reserve((static_cast<size_t>(1) << n) * fact);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> img(perm.begin(), perm.end());
      for (int i = 0; i < n; ++i)
        if (signs & (1u << i)) img[static_cast<size_t>(i)] = -img[static_cast<size_t>(i)];
      out.push_back(SignedPerm::from_images(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SignedPerm> coset_reps(int n) {
  std::vector<SignedPerm> reps;
  reps.reserve(static_cast<size_t>(2 * n));
  std::vector<int> word;
  reps.push_back(SignedPerm(n));  // w_1 = e
  for (int i = 1; i <= n; ++i) {  // w_{i+1} = s_i ... s_1
    word.insert(word.begin(), i);
    reps.push_back(SignedPerm::from_word(word, n));
  }
  // word now spells w_{n+1} = s_n ... s_1
  std::vector<int> prefix;
  for (int k = 1; k <= n - 1; ++k) {  // w_{n+k+1} = s_{n-k} ... s_{n-1} w_{n+1}
    prefix.insert(prefix.begin(), n - k);
    std::vector<int> full = prefix;
    full.insert(full.end(), word.begin(), word.end());
    reps.push_back(SignedPerm::from_word(full, n));
  }
  return reps;
}

std::vector<SignedPerm> stabilizer_eps1(int n) {
  std::vector<SignedPerm> out;
  for (const SignedPerm& w : all_elements(n))
    if (w.image(1) == 1) out.push_back(w);
  return out;
}

int coset_index(const SignedPerm& w, int n) {
  int j = w.image(1);
  return j > 0 ? j : 2 * n + j + 1;  // -eps_{|j|} -> index 2n-|j|+1
}

SignedPerm theta_reflection(int n) {
  Weight theta(static_cast<size_t>(n), 0);
  theta[0] = 2;
  return root_reflection(theta);
}

SignedPerm long_flip(int n) {
  std::vector<int> word;
  for (int k = n; k >= 1; --k)
    for (int i = k; i <= n; ++i) word.push_back(i);
  return SignedPerm::from_word(word, n);
}

AffineRoot::AffineRoot(Weight r, int mm) : root(std::move(r)), m(mm) {
  if (!is_cn_root(root)) throw std::invalid_argument("AffineRoot: not a C_n root");
}

AffineRoot AffineRoot::negated() const {
  AffineRoot r;
  r.root.resize(root.size());
  for (size_t i = 0; i < root.size(); ++i) r.root[i] = -root[i];
  r.m = -m;
  return r;
}

std::string AffineRoot::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < root.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(root[i]);
  }
  s += ")";
  if (m) s += (m > 0 ? "+" : "") + std::to_string(m) + "d";
  return s;
}

bool is_cn_root(const Weight& r) {
  int n2 = 0, n1 = 0;
  for (int v : r) {
    if (v == 2 || v == -2) ++n2;
    else if (v == 1 || v == -1) ++n1;
    else if (v != 0) return false;
  }
  return (n2 == 1 && n1 == 0) || (n2 == 0 && n1 == 2);
}

bool root_is_positive(const Weight& r) {
  for (int v : r) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  throw std::invalid_argument("root_is_positive: zero vector");
}

SignedPerm root_reflection(const Weight& r) {
  int n = static_cast<int>(r.size());
  if (!is_cn_root(r)) throw std::invalid_argument("root_reflection: not a C_n root");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (r[static_cast<size_t>(i)] != 0) idx.push_back(i);
  if (idx.size() == 1) {
    img[static_cast<size_t>(idx[0])] = -(idx[0] + 1);  // +-2eps_i: negate eps_i
  } else {
    int i = idx[0], j = idx[1];
    if (r[static_cast<size_t>(i)] * r[static_cast<size_t>(j)] < 0) {
      img[static_cast<size_t>(i)] = j + 1;  // eps_i - eps_j: swap
      img[static_cast<size_t>(j)] = i + 1;
    } else {
      img[static_cast<size_t>(i)] = -(j + 1);  // eps_i + eps_j: swap and negate
      img[static_cast<size_t>(j)] = -(i + 1);
    }
  }
  return SignedPerm::from_images(img);
}

Weight coroot(const Weight& r) {
  Weight c = r;
  for (int& v : c)
    if (v == 2 || v == -2) v /= 2;
  return c;
}

int dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: rank mismatch");
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight apply_to_root(const SignedPerm& w, const Weight& r) { return w.apply(r); }

Weight simple_root(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("simple_root: index out of range");
  Weight r(static_cast<size_t>(n), 0);
  if (i < n) {
    r[static_cast<size_t>(i - 1)] = 1;
    r[static_cast<size_t>(i)] = -1;
  } else {
    r[static_cast<size_t>(n - 1)] = 2;
  }
  return r;
}

std::vector<Weight> all_roots(int n) {
  std::vector<Weight> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Weight r(static_cast<size_t>(n), 0);
          r[static_cast<size_t>(i)] = si;
          r[static_cast<size_t>(j)] = sj;
          out.push_back(r);
        }
      }
    }
    for (int s : {2, -2}) {
      Weight r(static_cast<size_t>(n), 0);
      r[static_cast<size_t>(i)] = s;
      out.push_back(r);
    }
  }
  return out;
}

bool dominance_leq(const Weight& nu, const Weight& mu) {
  if (nu.size() != mu.size()) throw std::invalid_argument("dominance_leq: rank mismatch");
  // mu - nu = sum c_i alpha_i with c_i the partial sums for i < n and
  // 2 c_n = grand total; nonnegative integers required throughout.
  long total = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    total += mu[i] - nu[i];
    if (i + 1 < mu.size() && total < 0) return false;
  }
  return total >= 0 && total % 2 == 0;
}

LaurentPoly orbit_sum(const Weight& mu, int n) {
  if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("orbit_sum: rank mismatch");
  for (size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) throw std::invalid_argument("orbit_sum: not a partition");
  if (!mu.empty() && mu.back() < 0) throw std::invalid_argument("orbit_sum: not a partition");
  std::set<Weight> orbit;
  Weight perm = mu;
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<size_t> pos;
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != 0) pos.push_back(i);
    unsigned nz = static_cast<unsigned>(pos.size());
    for (unsigned signs = 0; signs < (1u << nz); ++signs) {
      Weight w = perm;
      for (unsigned b = 0; b < nz; ++b)
        if (signs & (1u << b)) w[pos[b]] = -w[pos[b]];
      orbit.insert(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  LaurentPoly p(n);
  for (const Weight& w : orbit) {
    ExponentVec e(n);
    for (int i = 1; i <= n; ++i) e[gen_y(i)] = static_cast<int16_t>(w[static_cast<size_t>(i - 1)]);
    p.add_term(e, Rat(1));
  }
  return p;
}

LaurentPoly weyl_act(const SignedPerm& w, const LaurentPoly& f) {
  int n = f.rank();
  if (w.rank() != n) throw std::invalid_argument("weyl_act: rank mismatch");
  LaurentPoly out(n);
  for (const auto& [e, c] : f.terms()) {
    ExponentVec ne = e;
    for (int i = 1; i <= n; ++i) ne[gen_y(i)] = 0;
    for (int i = 1; i <= n; ++i) {
      int j = w.image(i);
      int exp = e[gen_y(i)];
      int slot = gen_y(std::abs(j));
      ne[slot] = static_cast<int16_t>(ne[slot] + (j < 0 ? -exp : exp));
    }
    out.add_term(ne, c);
  }
  return out;
}

RatFunc weyl_act(const SignedPerm& w, const RatFunc& f) {
  return RatFunc(weyl_act(w, f.num()), weyl_act(w, f.den()));
}

LaurentPoly s0_act(const LaurentPoly& f) {
  // y_1 -> q y_1^{-1} = v^2 y_1^{-1}
  ExponentVec img(f.rank());
  img[kGenV] = 2;
  img[gen_y(1)] = -1;
  return f.substitute(gen_y(1), Rat(1), img);
}

RatFunc s0_act(const RatFunc& f) { return RatFunc(s0_act(f.num()), s0_act(f.den())); }

}  // namespace cnqkz
