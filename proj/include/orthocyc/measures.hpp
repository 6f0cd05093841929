#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "orthocyc/cycleindex.hpp"

namespace orthocyc {

class NormalizationFailure : public Error {
 public:
  using Error::Error;
};

enum class MeasureVariant { R, Re, Ro };

inline std::string variant_name(MeasureVariant v) {
  switch (v) {
    case MeasureVariant::R: return "R";
    case MeasureVariant::Re: return "Re";
    case MeasureVariant::Ro: return "Ro";
  }
  return "?";
}

inline MeasureVariant parse_variant(const std::string& s) {
  if (s == "R") return MeasureVariant::R;
  if (s == "Re") return MeasureVariant::Re;
  if (s == "Ro") return MeasureVariant::Ro;
  throw Error("unknown measure variant '" + s + "'");
}

/// 0 < u < √q, q a power of 2.
struct MeasureParams {
  Rational u;
  long q;

  MeasureParams(const Rational& u_, long q_) : u(u_), q(q_) {
    if (!is_even_prime_power(q)) throw UnsupportedField("measures need q a power of 2");
    if (u <= 0 || u * u >= q) throw Error("measures need 0 < u < sqrt(q)");
  }
};

/// A closed interval [lo, hi] of rationals.
struct Bracket {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Bracket scaled(const Rational& c) const { return c >= 0 ? Bracket{c * lo, c * hi} : Bracket{c * hi, c * lo}; }
};

/// Π_{i≥1} (1 − u²/q^{2i−1}), within 2^{−bits}.
inline Bracket infinite_product(const MeasureParams& p, int bits = 128) {
  const Rational u2 = p.u * p.u;
  const Rational eps = rpow(2, -bits);
  Rational prod = 1;
  for (long i = 1;; ++i) {
    prod *= 1 - u2 / rpow(p.q, 2 * i - 1);
    // remaining factors lose at most Σ_{j>i} u²/q^{2j−1}
    Rational rest = u2 / rpow(p.q, 2 * i + 1) / (1 - rpow(p.q, -2));
    if (rest < eps) return {prod * (1 - rest), prod};
  }
}

/// The λ-dependent factor q^{l}u^{|λ|} / (q^{n+|λ|/2+o/2} Π_i Π_{j≤m_i/2}(1 − q^{−2j})).
inline Rational r_weight(const Partition& lambda, const MeasureParams& p) {
  return rpow(p.u, lambda.size()) * p_sum_unipotent(lambda, p.q);
}

/// Constant in front of Π(1 − u²/q^{2i−1}) in each measure.
inline Rational variant_prefactor(MeasureVariant v, const MeasureParams& p) {
  switch (v) {
    case MeasureVariant::R: return 1 / (1 + p.u * p.u);
    case MeasureVariant::Re: return 1;
    case MeasureVariant::Ro: return 1 / (p.u * p.u);
  }
  throw Error("unknown measure variant");
}

inline bool in_support(const Partition& lambda, MeasureVariant v) {
  if (!odd_parts_even_mult(lambda)) return false;
  if (v == MeasureVariant::Re) return lambda.length() % 2 == 0;
  if (v == MeasureVariant::Ro) return lambda.length() % 2 == 1;
  return true;
}

/// A mass c·Π_{i≥1}(1 − u²/q^{2i−1}): the exact rational c and a bracket for
/// the value.
struct Mass {
  Rational coefficient;
  Bracket value;

  double approx() const { return Rational((value.lo + value.hi) / 2).get_d(); }
};

inline Mass measure_mass(const Partition& lambda, const MeasureParams& p, MeasureVariant v) {
  Rational c = in_support(lambda, v) ? Rational(variant_prefactor(v, p) * r_weight(lambda, p)) : Rational(0);
  return {c, infinite_product(p).scaled(c)};
}

inline Mass r_mass(const Partition& lambda, const MeasureParams& p) { return measure_mass(lambda, p, MeasureVariant::R); }
inline Mass re_mass(const Partition& lambda, const MeasureParams& p) { return measure_mass(lambda, p, MeasureVariant::Re); }
inline Mass ro_mass(const Partition& lambda, const MeasureParams& p) { return measure_mass(lambda, p, MeasureVariant::Ro); }

namespace detail {
// (1 − u²/q)(1 − 1/q²)(1 − u²/q³)⋯, the first m factors
inline Rational alternating_pochhammer(const MeasureParams& p, int m) {
  Rational r = 1;
  const Rational u2 = p.u * p.u;
  for (int i = 1; i <= m; ++i) r *= i % 2 ? Rational(1 - u2 / rpow(p.q, i)) : Rational(1 - rpow(p.q, -i));
  return r;
}

// (q^m − 1)⋯(q⁴ − 1)(q² − 1) for even m
inline Integer even_q_factorial(long q, int m) {
  Integer r = 1;
  for (int j = 2; j <= m; j += 2) r *= ipow(q, j) - 1;
  return r;
}
}  // namespace detail

inline Rational pprime_sp(int a, const MeasureParams& p) {
  if (a < 0) throw Error("pprime_sp needs a >= 0");
  const long k = a / 2;
  if (a % 2 == 0) return rpow(p.u, 2 * k) / (rpow(p.q, 2 * k * k + k) * detail::alternating_pochhammer(p, a));
  return rpow(p.u, 2 * k + 2) / (rpow(p.q, 2 * k * k + 3 * k + 1) * detail::alternating_pochhammer(p, a));
}

inline Rational pprime_o(int a, const MeasureParams& p) {
  if (a < 0) throw Error("pprime_o needs a >= 0");
  const long k = a / 2;
  if (a % 2 == 0) return rpow(p.u, 2 * k) / (rpow(p.q, 2 * k * k - k) * detail::alternating_pochhammer(p, a));
  return rpow(p.u, 2 * k + 1) / (rpow(p.q, 2 * k * k + k) * detail::alternating_pochhammer(p, a));
}

/// Column transition a → b used after odd-numbered columns.
inline Rational k1(int a, int b, const MeasureParams& p) {
  if (a < 0 || b < 0) throw Error("chain states are nonnegative");
  if (b > a || (a - b) % 2) return 0;
  long e4 = static_cast<long>(a) * a - static_cast<long>(b) * b + 2L * (a + 1) * b;
  return rpow(p.u, a) * pprime_o(b, p) /
         (pprime_sp(a, p) * rpow(p.q, e4 / 4) * Rational(detail::even_q_factorial(p.q, a - b)));
}

/// Column transition a → b used after even-numbered columns.
inline Rational k2(int a, int b, const MeasureParams& p) {
  if (a < 0 || b < 0) throw Error("chain states are nonnegative");
  if (b > a) return 0;
  const long d = a - b;
  Rational num = rpow(p.u, a) * pprime_sp(b, p);
  if (d % 2 == 0) {
    long e = (static_cast<long>(a) * a + b) / 2 - a - d * d / 4;
    return num / (pprime_o(a, p) * rpow(p.q, e) * Rational(detail::even_q_factorial(p.q, d)));
  }
  long e = (static_cast<long>(a) * a - a) / 2 - (d * d - 1) / 4;
  return num / (pprime_o(a, p) * rpow(p.q, e) * Rational(detail::even_q_factorial(p.q, d - 1)));
}

/// Law of λ′₁ up to the factor Π(1 − u²/q^{2i−1}): zero off the variant's
/// parity.
inline Rational initial_column_coefficient(int a, const MeasureParams& p, MeasureVariant v) {
  if (a < 0) throw Error("column heights are nonnegative");
  if (v == MeasureVariant::Re && a % 2) return 0;
  if (v == MeasureVariant::Ro && a % 2 == 0) return 0;
  Rational c = a % 2 ? Rational(p.u * pprime_o(a, p)) : pprime_o(a, p);
  return variant_prefactor(v, p) * c;
}

namespace detail {
// A rational s with 0 < s ≤ √q.
inline Rational sqrt_lower(long q) {
  Integer scaled = Integer(q) * ipow(10, 40);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
  return frac(r, ipow(10, 20));
}

// Upper bound for e^z, 0 ≤ z < 64: (1 − z/64)^{−64}.
inline Rational exp_upper(const Rational& z) {
  if (z < 0 || z >= 64) throw Error("exp_upper needs 0 <= z < 64");
  return 1 / rpow(1 - z / 64, 64);
}

// 1/Π_{j≥1}(1 − q^{−2j}) ≤ (q²−1)/(q²−2)
inline Rational pochhammer_inverse_bound(long q) { return Rational(q * q - 1, q * q - 2); }
}  // namespace detail

/// Upper bound for Σ_{a>A} of initial_column_coefficient.
inline Rational initial_column_tail(int A, const MeasureParams& p, MeasureVariant v) {
  // coefficient(a) ≤ prefactor·max(1,u)·u^a q^{−(a²−a)/2} / lower(alternating_pochhammer)
  Rational poch_lower = infinite_product(p, 64).lo / detail::pochhammer_inverse_bound(p.q);
  Rational scale = variant_prefactor(v, p) * (p.u > 1 ? p.u : Rational(1)) / poch_lower;
  // terms decrease by at least the factor u/q^a ≤ 1/2 once a > A is large enough
  int a = A + 1;
  Rational bound = 0;
  while (p.u / rpow(p.q, a) > Rational(1, 2)) {
    bound += rpow(p.u, a) / rpow(p.q, (static_cast<long>(a) * a - a) / 2);
    ++a;
  }
  bound += 2 * rpow(p.u, a) / rpow(p.q, (static_cast<long>(a) * a - a) / 2);
  return scale * bound;
}

/// Σ_{a≤A} of the law of λ′₁ with its tail: a bracket for the total mass.
struct ColumnLaw {
  std::vector<Rational> coefficients;  // multiply by Π(1 − u²/q^{2i−1})
  Rational tail;                       // bound on the omitted coefficients
  Bracket total;
};

inline ColumnLaw initial_column_dist(const MeasureParams& p, MeasureVariant v, int A = 40) {
  ColumnLaw law;
  Rational s = 0;
  for (int a = 0; a <= A; ++a) {
    law.coefficients.push_back(initial_column_coefficient(a, p, v));
    s += law.coefficients.back();
  }
  law.tail = initial_column_tail(A, p, v);
  Bracket prod = infinite_product(p);
  law.total = {prod.lo * s, prod.hi * (s + law.tail)};
  if (!law.total.contains(1))
    throw NormalizationFailure("initial column law of " + variant_name(v) + " does not bracket 1");
  return law;
}

/// Upper bound for the total mass of the variant over partitions of size > T.
///
/// The weight of λ is at most q·(u/√q)^{|λ|}·c^{d(λ)} with d(λ) the number of
/// distinct parts and c = (q²−1)/(q²−2); the generating function
/// Π_i (1 + c s^i/(1 − s^i)) of these bounds is expanded exactly to size N
/// and the rest is bounded by a saddle-point estimate.
inline Rational partition_tail_bound(const MeasureParams& p, MeasureVariant v, int T, int N = 200) {
  const Rational c = detail::pochhammer_inverse_bound(p.q);
  const Rational x = p.u / detail::sqrt_lower(p.q);
  if (x >= 1) throw Error("tail bound needs u < sqrt(q)");
  std::vector<Rational> a(N + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= N; ++i) {
    // multiply by 1 + c(s^i + s^{2i} + ⋯)
    std::vector<Rational> next = a;
    for (int n = N; n >= i; --n) {
      Rational add = 0;
      for (int k = n - i; k >= 0; k -= i) add += a[k];
      next[n] += c * add;
    }
    a = std::move(next);
  }
  Rational tail = 0;
  Rational xn = rpow(x, T + 1);
  for (int n = T + 1; n <= N; ++n, xn *= x) tail += a[n] * xn;
  // Σ_{n>N} a_n x^n ≤ ρ^{−(N+1)} Π_i(1 + c t^i/(1−t^i)) with t = xρ
  Rational t = (1 + x) / 2;
  Rational rho = t / x;
  tail += detail::exp_upper(c * t / ((1 - t) * (1 - t))) / rpow(rho, N + 1);
  Rational scale = variant_prefactor(v, p) * p.q;
  return scale * tail;
}

/// Σ_{|λ|≤T} of the variant's masses with the tail bound: a bracket for the
/// total mass.
inline Bracket normalization_bracket(const MeasureParams& p, MeasureVariant v, int T = 40) {
  Rational s = 0;
  for (int n = 0; n <= T; ++n)
    for_each_partition(n, [&](const Partition& l) {
      if (in_support(l, v)) s += r_weight(l, p);
    });
  s *= variant_prefactor(v, p);
  Bracket prod = infinite_product(p);
  return {prod.lo * s, prod.hi * s + partition_tail_bound(p, v, T)};
}

/// Probability, up to the factor Π(1 − u²/q^{2i−1}), that the column chain
/// produces exactly λ.
inline Rational chain_path_coefficient(const Partition& lambda, const MeasureParams& p, MeasureVariant v) {
  std::vector<int> cols = lambda.conjugate().parts();
  int first = cols.empty() ? 0 : cols.front();
  Rational r = initial_column_coefficient(first, p, v);
  cols.push_back(0);
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) r *= i % 2 == 0 ? k1(cols[i], cols[i + 1], p) : k2(cols[i], cols[i + 1], p);
  return r;
}

/// Draws partitions from R, Rᵉ or Rᵒ by running the column chain.
///
/// Every categorical draw compares one 64-bit word against thresholds
/// ⌊F·2⁶⁴⌋ of the exact cumulative distribution F. The law of λ′₁ is
/// truncated where its tail falls below 2^{−80} and renormalized.
class Sampler {
 public:
  static constexpr int kStepCap = 10'000;

  Sampler(const MeasureParams& p, MeasureVariant v) : p_(p), v_(v) {
    std::vector<Rational> c;
    Rational total = 0;
    int A = 0;
    for (;; ++A) {
      c.push_back(initial_column_coefficient(A, p, v));
      total += c.back();
      if (A % 2 == 1 && initial_column_tail(A, p, v) < total * rpow(2, -80)) break;
      if (A > kStepCap) throw BudgetExceeded("initial column law did not converge");
    }
    initial_ = thresholds(c, total);
  }

  Partition sample(std::mt19937_64& rng) {
    int a = draw(initial_, rng());
    std::vector<int> cols;
    for (int i = 1; a > 0; ++i) {
      if (i > kStepCap) throw BudgetExceeded("column chain exceeded the step cap");
      cols.push_back(a);
      int b = draw(row(i % 2 == 1 ? 1 : 2, a), rng());
      if (i % 2 == 1 && (a - b) % 2) throw Error("sampled partition violates the support");
      a = b;
    }
    return Partition(cols).conjugate();
  }

 private:
  // Threshold list; the final entry is implicitly 2⁶⁴.
  using Thresholds = std::vector<std::uint64_t>;

  static Thresholds thresholds(const std::vector<Rational>& probs, const Rational& total) {
    Thresholds t;
    Rational cum = 0;
    const Integer two64 = ipow(2, 64);
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
      cum += probs[i];
      Rational x = cum / total * two64;
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
      if (f >= two64) f = two64 - 1;
      t.push_back(f.get_ui());
    }
    return t;
  }

  static int draw(const Thresholds& t, std::uint64_t x) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (x < t[i]) return static_cast<int>(i);
    return static_cast<int>(t.size());
  }

  const Thresholds& row(int chain, int a) {
    auto key = std::pair{chain, a};
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
    std::vector<Rational> probs;
    Rational total = 0;
    for (int b = 0; b <= a; ++b) {
      probs.push_back(chain == 1 ? k1(a, b, p_) : k2(a, b, p_));
      total += probs.back();
    }
    if (total != 1) throw NormalizationFailure("transition row does not sum to 1");
    return rows_.emplace(key, thresholds(probs, total)).first->second;
  }

  MeasureParams p_;
  MeasureVariant v_;
  Thresholds initial_;
  std::map<std::pair<int, int>, Thresholds> rows_;
};

inline std::vector<Partition> sample(const MeasureParams& p, MeasureVariant v, std::uint64_t seed, int count) {
  Sampler s(p, v);
  std::mt19937_64 rng(seed);
  std::vector<Partition> out;
  for (int i = 0; i < count; ++i) out.push_back(s.sample(rng));
  return out;
}

struct SamplerStatistics {
  double tv_distance;
  long n_samples;
  int truncation;
};

/// Total-variation distance between the empirical law of n samples and the
/// exact masses, on partitions of size ≤ truncation plus one lumped cell for
/// everything larger.
inline SamplerStatistics sampler_tv(const MeasureParams& p, MeasureVariant v, std::uint64_t seed, long n,
                                    int truncation = 20) {
  Sampler s(p, v);
  std::mt19937_64 rng(seed);
  std::map<std::vector<int>, long> counts;
  long beyond = 0;
  for (long i = 0; i < n; ++i) {
    Partition l = s.sample(rng);
    if (l.size() > truncation)
      ++beyond;
    else
      ++counts[l.parts()];
  }
  double tv = 0, inside = 0;
  const Bracket pb = infinite_product(p);
  const double prod = Rational((pb.lo + pb.hi) / 2).get_d();
  for (int m = 0; m <= truncation; ++m)
    for_each_partition(m, [&](const Partition& l) {
      double exact = in_support(l, v) ? Rational(variant_prefactor(v, p) * r_weight(l, p)).get_d() * prod : 0.0;
      inside += exact;
      auto it = counts.find(l.parts());
      double emp = it == counts.end() ? 0.0 : static_cast<double>(it->second) / n;
      tv += std::abs(emp - exact);
    });
  tv += std::abs(static_cast<double>(beyond) / n - (1 - inside));
  return {tv / 2, n, truncation};
}

/// Both sides of the grand-canonical mixture identity for λ_{z−1} = λ, as
/// series in u to the given order.
///
/// R: δ_{λ∅} + Σ_{n≥1} u^{2n}(p⁺_n(λ) + p⁻_n(λ)). Rᵉ: the same with each
/// p^ε_n restricted to l(λ_{z−1}) even, that is the Ω-average. Rᵒ: the
/// restriction to l odd. In all three cases the claim is that this equals
/// Π(1 − u²/q^{2i−1}) · q^{l}u^{|λ|}/(q^{n+|λ|/2+o/2}Π…) / (1 − u²), which
/// is the variant's mass times the normalizing factor of its size law.
struct MixtureSides {
  Series groups;
  Series measure;
};

inline MixtureSides mixture_identity(const Partition& lambda, long q, MeasureVariant v, int order) {
  if (!is_even_prime_power(q)) throw UnsupportedField("measures need q a power of 2");
  CycleWeights w;
  w.z_minus_1 = [lambda](const Partition& l) { return Rational(l == lambda ? 1 : 0); };
  Series groups(order);
  bool parity_ok = v == MeasureVariant::R || (lambda.length() % 2 == (v == MeasureVariant::Re ? 0 : 1));
  if (parity_ok) groups = cycle_index_series(q, w, order, CycleVariant::Sum);
  Series measure(order);
  if (in_support(lambda, v) && lambda.size() <= order) {
    Series p_inf = geometric_product(Rational(-1, q), Rational(1, q * q), 2, order);
    Series geometric(order);
    for (int j = 0; j <= order; j += 2) geometric[j] = 1;
    measure = (p_inf * geometric).shifted(lambda.size());
    measure *= p_sum_unipotent(lambda, q);
  }
  return {groups, measure};
}

}  // namespace orthocyc
