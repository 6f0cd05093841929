#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthocyc/rational.hpp"

namespace orthocyc {

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

using Elem = std::uint8_t;

/// Returns (p, k) with q = p^k, or throws UnsupportedField.
inline std::pair<int, int> prime_power_decompose(long q) {
  if (q < 2) throw UnsupportedField("q must be a prime power, got " + std::to_string(q));
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int k = 0;
  long r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw UnsupportedField("q must be a prime power, got " + std::to_string(q));
  return {static_cast<int>(p), k};
}

inline bool is_even_prime_power(long q) {
  try {
    return prime_power_decompose(q).first == 2;
  } catch (const UnsupportedField&) {
    return false;
  }
}

/// The finite field F_q, q = p^k ≤ 256.
///
/// Elements are encoded as integers 0..q−1 holding the base-p digits of
/// their coordinates in the polynomial basis of a fixed defining polynomial.
/// 0 and 1 are the field zero and one. In characteristic 2 addition is XOR.
class FqField {
 public:
  explicit FqField(long q) : q_(static_cast<int>(q)) {
    auto [p, k] = prime_power_decompose(q);
    if (q > 256) throw UnsupportedField("q must be at most 256");
    p_ = p;
    k_ = k;
    build_tables();
  }

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error("inverse of zero in F_q");
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long ord = q_ - 1;
    long r = ((log_[a] * (e % ord)) % ord + ord) % ord;
    return exp_[r];
  }
  Elem primitive() const { return exp_[1]; }

  /// Square root; defined for every element in characteristic 2.
  Elem sqrt(Elem a) const {
    if (p_ != 2) throw UnsupportedField("sqrt is only provided in characteristic 2");
    return pow(a, q_ / 2);
  }

  /// Coefficients of the defining polynomial (low to high, monic, degree k).
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  void build_tables() {
    modulus_ = find_modulus();
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<int> dn(k_);
      for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = static_cast<Elem>(undigits(dn));
      for (int b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<int> s(k_);
        for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = static_cast<Elem>(undigits(s));
        mul_[a * q_ + b] = static_cast<Elem>(undigits(polymulmod(da, db)));
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    // primitive element: smallest g of multiplicative order q−1
    log_.assign(q_, 0);
    exp_.assign(q_, 0);
    for (int g = 1; g < q_; ++g) {
      int x = 1, ord = 0;
      do {
        x = mul_[x * q_ + g];
        ++ord;
      } while (x != 1);
      if (ord == q_ - 1 || q_ == 2) {
        x = 1;
        for (int e = 0; e < q_ - 1; ++e) {
          exp_[e] = static_cast<Elem>(x);
          log_[x] = e;
          x = mul_[x * q_ + g];
        }
        exp_[q_ - 1] = 1;
        break;
      }
    }
  }

  std::vector<int> digits(int a) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  int undigits(const std::vector<int>& d) const {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }

  std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      int c = prod[d];
      if (!c) continue;
      for (int i = 0; i <= k_; ++i) prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(k_);
    return prod;
  }

  // Lexicographically first monic irreducible of degree k over F_p.
  std::vector<int> find_modulus() const {
    if (k_ == 1) return {0, 1};
    long count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (long code = 0; code < count; ++code) {
      std::vector<int> f(k_ + 1);
      long c = code;
      for (int i = 0; i < k_; ++i) {
        f[i] = static_cast<int>(c % p_);
        c /= p_;
      }
      f[k_] = 1;
      if (irreducible_over_prime(f)) return f;
    }
    throw UnsupportedField("no irreducible modulus found");
  }

  // Trial division by all monic polynomials of degree 1..k/2 over F_p.
  bool irreducible_over_prime(const std::vector<int>& f) const {
    int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
      long count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (long code = 0; code < count; ++code) {
        std::vector<int> g(d + 1);
        long c = code;
        for (int i = 0; i < d; ++i) {
          g[i] = static_cast<int>(c % p_);
          c /= p_;
        }
        g[d] = 1;
        std::vector<int> r = f;
        for (int top = n; top >= d; --top) {
          int lead = r[top];
          if (!lead) continue;
          for (int i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - lead * g[i]) % p_ + p_) % p_;
        }
        bool zero = true;
        for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  int q_, p_ = 2, k_ = 1;
  std::vector<int> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_, exp_;
  std::vector<int> log_;
};

}  // namespace orthocyc
