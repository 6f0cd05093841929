#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "orthocyc/partitions.hpp"
#include "orthocyc/rational.hpp"

namespace orthocyc {

class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

class DivergentFamily : public Error {
 public:
  using Error::Error;
};

/// Formal power series in u with exact rational coefficients, known up to
/// and including u^order. Binary operations truncate to the smaller order.
class Series {
 public:
  explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw Error("series order must be >= 0");
  }

  static Series constant(const Rational& v, int order) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }
  static Series one(int order) { return constant(1, order); }
  /// c·u^e
  static Series monomial(const Rational& c, int e, int order) {
    Series s(order);
    if (e >= 0 && e <= order) s.c_[e] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  Rational coeff(int i) const { return (i >= 0 && i <= order()) ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Series truncated(int order) const {
    Series s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  Series& operator+=(const Series& o) {
    truncate_to(o.order());
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    truncate_to(o.order());
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Series& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    int ord = std::min(a.order(), b.order());
    Series r(ord);
    for (int i = 0; i <= ord; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; i + j <= ord; ++j)
        if (sgn(b.c_[j]) != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const {
    if (sgn(c_[0]) == 0) throw NonUnitConstantTerm("series inverse needs a nonzero constant term");
    Series r(order());
    Rational inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      Rational s = 0;
      for (int k = 1; k <= n; ++k)
        if (sgn(c_[k]) != 0) s += c_[k] * r.c_[n - k];
      r.c_[n] = -s * inv0;
    }
    return r;
  }

  /// u ↦ u^d
  Series substitute_power(int d) const {
    if (d < 1) throw Error("substitute_power needs d >= 1");
    Series r(order());
    for (int i = 0; i * d <= order(); ++i) r.c_[i * d] = c_[i];
    return r;
  }

  /// Multiply by u^k, dropping terms past the order.
  Series shifted(int k) const {
    Series r(order());
    for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  /// this^e for a nonnegative (possibly huge) integer e.
  Series pow(const Integer& e) const {
    if (e < 0) throw Error("negative series power");
    Series result = one(order());
    Series base = *this;
    Integer k = e;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) result *= base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  void truncate_to(int ord) {
    if (ord < order()) c_.resize(static_cast<std::size_t>(ord) + 1);
  }

  std::vector<Rational> c_;
};

inline Series ts_add(const Series& a, const Series& b) { return a + b; }
inline Series ts_mul(const Series& a, const Series& b) { return a * b; }
inline Series ts_inv(const Series& a) { return a.inverse(); }
inline Rational ts_coeff(const Series& a, int i) { return a.coeff(i); }
inline Series ts_substitute_power(const Series& a, int d) { return a.substitute_power(d); }

/// One factor (1 + coefficient·u^exponent).
struct Monomial {
  Rational coefficient;
  int exponent;
};

/// Π (1 + c·u^e) over a finite list.
inline Series monomial_product(std::span<const Monomial> factors, int order) {
  Series r = Series::one(order);
  for (const auto& f : factors) {
    if (f.exponent < 0) throw Error("negative exponent in monomial product");
    if (f.exponent > order) continue;
    Series factor = Series::one(order);
    factor[f.exponent] += f.coefficient;
    r *= factor;
  }
  return r;
}

/// An infinite family of factors (1 + c_i·u^{e_i}), i = 1, 2, …
///
/// Exponents must strictly increase, so only finitely many factors reach any
/// given order and truncation is exact.
struct MonomialFamily {
  std::function<Monomial(long)> term;
};

inline Series monomial_product(const MonomialFamily& family, int order) {
  Series r = Series::one(order);
  int prev = -1;
  for (long i = 1;; ++i) {
    Monomial m = family.term(i);
    if (m.exponent <= prev)
      throw DivergentFamily("infinite factor family needs strictly increasing exponents");
    prev = m.exponent;
    if (m.exponent > order) break;
    Series factor = Series::one(order);
    factor[m.exponent] += m.coefficient;
    r *= factor;
  }
  return r;
}

/// Π_{i≥0} (1 + c·r^i·u^e) for |r| < 1, expanded exactly by the q-binomial
/// theorem: Σ_k c^k r^{k(k−1)/2} u^{ke} / ((1−r)(1−r²)⋯(1−r^k)).
///
/// Families like Π_{i≥1}(1 − u²/q^{2i−1}) have a fixed exponent, so every
/// factor contributes to every order; this closed form is what keeps them
/// exact.
inline Series geometric_product(const Rational& c, const Rational& r, int e, int order) {
  if (abs(r) >= 1) throw DivergentFamily("geometric factor family needs |ratio| < 1");
  if (e < 1) throw DivergentFamily("geometric factor family needs exponent >= 1");
  Series s(order);
  Rational denom = 1;
  Rational rk = 1;
  for (int k = 0; k * e <= order; ++k) {
    if (k > 0) {
      rk *= r;
      denom *= (1 - rk);
    }
    s[k * e] = rpow(c, k) * rpow(r, static_cast<long>(k) * (k - 1) / 2) / denom;
  }
  return s;
}

/// Σ_{λ: |λ|·step ≤ order, predicate(λ)} weight(λ)·u^{|λ|·step}
inline Series partition_sum_series(const std::function<Rational(const Partition&)>& weight,
                                   const PartitionPredicate& predicate, int step, int order) {
  if (step < 1) throw Error("partition_sum_series needs step >= 1");
  Series s(order);
  for (int n = 0; n * step <= order; ++n)
    for_each_partition(n, [&](const Partition& p) {
      if (predicate && !predicate(p)) return;
      s[n * step] += weight(p);
    });
  return s;
}

/// "c0 + c1 u + c2 u^2 …" with coefficients as num/den; zero terms omitted.
inline std::string to_string(const Series& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    if (sgn(s[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += format_rational(s[i]);
    if (i == 1) out += " u";
    if (i > 1) out += " u^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace orthocyc
