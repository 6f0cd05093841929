#pragma once

#include <string>
#include <vector>

#include "orthocyc/cycleindex.hpp"

namespace orthocyc {

namespace detail {
inline void require_even_q(long q) {
  if (!is_even_prime_power(q)) throw UnsupportedField("orthogonal formulas need q a power of 2, got " + std::to_string(q));
}

inline void require_range(int two_n, int k) {
  if (two_n < 2 || two_n % 2) throw BadDimension("dimension must be even and >= 2");
  if (k < 0 || k > two_n) throw Error("fixed-space dimension out of range");
}

// Π_{i=from..to} (1 − q^{−2i}); empty product is 1.
inline Rational pochhammer_inv_sq(long q, int from, int to) {
  Rational r = 1;
  for (int i = from; i <= to; ++i) r *= 1 - rpow(q, -2 * i);
  return r;
}

// Π_{i=1..j} (q^{2i} − 1)
inline Integer pochhammer_sq(long q, int j) {
  Integer r = 1;
  for (int i = 1; i <= j; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}
}  // namespace detail

/// Probability that an element of O^ε_{2n}(q) has a k-dimensional fixed space.
inline Rational fixed_space_prob(int epsilon, int two_n, int k, long q) {
  detail::require_even_q(q);
  detail::require_range(two_n, k);
  const int n = two_n / 2;
  const long q2 = q * q;
  if (k % 2 == 0) {
    const int h = k / 2;
    Rational gl(gl_order(h, q2));
    Rational s = 0;
    for (int j = 0; j <= n - h; ++j) {
      Rational term = 1 / (rpow(q, static_cast<long>(2 * h - 1) * j) * Rational(detail::pochhammer_sq(q, j)));
      if (j % 2)
        s -= term;
      else
        s += term;
    }
    Rational main = rpow(q, h) / (2 * gl) * s;
    Rational corr = 1 / (2 * rpow(q, 2L * h * (n - h)) * gl * Rational(detail::pochhammer_sq(q, n - h)));
    if ((n - h) % 2) corr = -corr;
    return epsilon > 0 ? Rational(main + corr) : Rational(main - corr);
  }
  const int h = (k - 1) / 2;
  Rational s = 0;
  for (int j = 0; j <= n - h - 1; ++j) {
    Rational term = 1 / (rpow(q, static_cast<long>(j) * j + 2L * (h + 1) * j) * detail::pochhammer_inv_sq(q, 1, j));
    if (j % 2)
      s -= term;
    else
      s += term;
  }
  return s / (2 * rpow(q, h) * Rational(gl_order(h, q2)));
}

/// The same probability within Ω^ε_{2n}(q): zero for odd k.
inline Rational omega_fixed_space_prob(int epsilon, int two_n, int k, long q) {
  if (k % 2) {
    detail::require_even_q(q);
    detail::require_range(two_n, k);
    return 0;
  }
  return 2 * fixed_space_prob(epsilon, two_n, k, q);
}

/// Proportion of elements of O^ε_{2n}(q) that are unipotent with a
/// k-dimensional fixed space.
inline Rational unip_fixed_prob(int epsilon, int two_n, int k, long q) {
  detail::require_even_q(q);
  detail::require_range(two_n, k);
  const int n = two_n / 2;
  const long q2 = q * q;
  if (k % 2 == 0) {
    const int h = k / 2;
    Rational r = detail::pochhammer_inv_sq(q, h, n - 1) /
                 (rpow(q, n - 2 * h) * Rational(gl_order(h, q2)) * detail::pochhammer_inv_sq(q, 1, n - h));
    Rational half_diff = 1 / (2 * rpow(q, n));
    return r * (Rational(1, 2) + (epsilon > 0 ? half_diff : Rational(-half_diff)));
  }
  const int h = (k - 1) / 2;
  return detail::pochhammer_inv_sq(q, h + 1, n - 1) /
         (2 * rpow(q, n - 1) * Rational(gl_order(h, q2)) * detail::pochhammer_inv_sq(q, 1, n - h - 1));
}

/// Number of unipotent elements of O^ε_{2n}(q): q^{2n²−2n+1}(1 + 1/q ∓ 1/q^n).
inline Integer unip_count(int epsilon, int two_n, long q) {
  detail::require_even_q(q);
  detail::require_range(two_n, 0);
  const int n = two_n / 2;
  Rational r = rpow(q, 2L * n * n - 2L * n + 1) * (1 + Rational(1, q) - epsilon * rpow(q, -n));
  if (!is_integer(r)) throw Error("unipotent count is not an integer");
  return r.get_num();
}

/// Unipotent proportions within Ω^ε_{2n}(q). A unipotent element lies in Ω
/// exactly when its fixed space has even dimension.
inline Rational omega_unip_fixed_prob(int epsilon, int two_n, int k, long q) {
  if (k % 2) {
    detail::require_even_q(q);
    detail::require_range(two_n, k);
    return 0;
  }
  return 2 * unip_fixed_prob(epsilon, two_n, k, q);
}

/// A pair of proportions for the plus and minus type groups.
struct ExtractedPair {
  Rational plus;
  Rational minus;
};

namespace detail {
inline ExtractedPair extract(long q, int two_n, const CycleWeights& w, bool omega) {
  Series diff = cycle_index_series(q, w, two_n, CycleVariant::Diff);
  Series sum = cycle_index_series(q, w, two_n, omega ? CycleVariant::OmegaSum : CycleVariant::Sum);
  // On Ω the diff variant is unchanged: all-even multiplicities force l(λ_{z−1}) even.
  if (omega) return {sum[two_n] + diff[two_n], sum[two_n] - diff[two_n]};
  return {(sum[two_n] + diff[two_n]) / 2, (sum[two_n] - diff[two_n]) / 2};
}

inline CycleWeights fixed_dim_weights(int k, bool unipotent_only) {
  CycleWeights w;
  w.z_minus_1 = [k](const Partition& l) { return Rational(l.length() == k ? 1 : 0); };
  if (unipotent_only) w.other = [](int, bool, const Partition& l) { return Rational(l.empty() ? 1 : 0); };
  return w;
}
}  // namespace detail

/// fixed_space_prob for both types, read off the cycle index instead of the
/// closed form.
inline ExtractedPair fixed_space_prob_series(int two_n, int k, long q, bool omega = false) {
  detail::require_even_q(q);
  detail::require_range(two_n, k);
  return detail::extract(q, two_n, detail::fixed_dim_weights(k, false), omega);
}

inline ExtractedPair unip_fixed_prob_series(int two_n, int k, long q, bool omega = false) {
  detail::require_even_q(q);
  detail::require_range(two_n, k);
  return detail::extract(q, two_n, detail::fixed_dim_weights(k, true), omega);
}

struct FixedSpaceRow {
  int k;
  Rational p_plus;
  Rational p_minus;
};

struct FixedSpaceTable {
  int two_n;
  long q;
  std::vector<FixedSpaceRow> rows;

  std::string to_csv() const {
    std::string s = "k,p_plus,p_minus\n";
    for (const auto& r : rows)
      s += std::to_string(r.k) + "," + format_rational(r.p_plus) + "," + format_rational(r.p_minus) + "\n";
    return s;
  }
};

enum class FixedSpaceKind { All, Unipotent, Omega, OmegaUnipotent };

inline FixedSpaceTable fixed_space_table(int two_n, long q, FixedSpaceKind kind = FixedSpaceKind::All) {
  FixedSpaceTable t{two_n, q, {}};
  for (int k = 0; k <= two_n; ++k) {
    switch (kind) {
      case FixedSpaceKind::All:
        t.rows.push_back({k, fixed_space_prob(1, two_n, k, q), fixed_space_prob(-1, two_n, k, q)});
        break;
      case FixedSpaceKind::Unipotent:
        t.rows.push_back({k, unip_fixed_prob(1, two_n, k, q), unip_fixed_prob(-1, two_n, k, q)});
        break;
      case FixedSpaceKind::Omega:
        t.rows.push_back({k, omega_fixed_space_prob(1, two_n, k, q), omega_fixed_space_prob(-1, two_n, k, q)});
        break;
      case FixedSpaceKind::OmegaUnipotent:
        t.rows.push_back({k, omega_unip_fixed_prob(1, two_n, k, q), omega_unip_fixed_prob(-1, two_n, k, q)});
        break;
    }
  }
  return t;
}

struct CyclicSeries {
  Series sum;   // C_{O⁺}(u) + C_{O⁻}(u)
  Series diff;  // C_{O⁺}(u) − C_{O⁻}(u)
};

namespace detail {
// 1 + sign·u^d / (c·(1 − ratio·u^d/q^d)) with ratio = ±1
inline Series cyclic_factor(long q, int d, const Integer& c, int sign, int ratio, int order) {
  Series s = Series::one(order);
  Rational qd = rpow(q, d);
  Rational term = Rational(sign) / Rational(c);
  for (int j = 1; static_cast<long>(j) * d <= order; ++j) {
    s[j * d] = term;
    term *= ratio / qd;
  }
  return s;
}
}  // namespace detail

/// Generating functions for cyclic proportions; u^n tracks dimension 2n.
inline CyclicSeries cyclic_gf(long q, int order) {
  detail::require_even_q(q);
  Series sum = Series::one(order);
  for (int j = 1; j <= order; ++j) sum[j] = rpow(q, -(j - 1));
  Series diff = Series::one(order);
  for (int d = 1; d <= order; ++d) {
    Integer qd = ipow(q, d);
    Integer n = n_star_count(q, 2 * d);
    if (n != 0) {
      sum *= detail::cyclic_factor(q, d, qd + 1, 1, 1, order).pow(n);
      diff *= detail::cyclic_factor(q, d, qd + 1, -1, -1, order).pow(n);
    }
    Integer m = m_star_count(q, d);
    if (m != 0) {
      Series pair = detail::cyclic_factor(q, d, qd - 1, 1, 1, order).pow(m);
      sum *= pair;
      diff *= pair;
    }
  }
  return {sum, diff};
}

/// Proportion of cyclic matrices in O^ε_{2n}(q).
inline Rational cyclic_proportion(int epsilon, int two_n, long q) {
  detail::require_range(two_n, 0);
  auto gf = cyclic_gf(q, two_n / 2);
  int n = two_n / 2;
  return (gf.sum[n] + epsilon * gf.diff[n]) / 2;
}

/// The same proportion summed over explicit data with every λ_φ of at most
/// one part.
inline Rational cyclic_proportion_direct(int epsilon, int two_n, long q) {
  detail::require_even_q(q);
  FqField F(q);
  IrreducibleCatalog cat(F);
  Rational total = 0;
  auto at_most_one = [](const Partition& l) { return l.length() <= 1; };
  for_each_o_data(
      cat, two_n,
      [&](const RcfData& d) {
        auto p = class_proportions(F, d);
        total += epsilon > 0 ? p.p_plus : p.p_minus;
      },
      DataFilter{at_most_one, at_most_one});
  return total;
}

}  // namespace orthocyc
