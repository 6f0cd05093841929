#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orthocyc/orders.hpp"
#include "orthocyc/partitions.hpp"
#include "orthocyc/poly.hpp"
#include "orthocyc/series.hpp"

namespace orthocyc {

class InvalidData : public Error {
 public:
  using Error::Error;
};

/// Rational canonical form data: φ ↦ λ_φ, finitely supported. Polynomials
/// with empty partitions are not stored.
struct RcfData {
  std::map<Poly, Partition> blocks;

  int dimension() const {
    int d = 0;
    for (const auto& [phi, lambda] : blocks) d += lambda.size() * phi.degree();
    return d;
  }

  Partition at(const Poly& phi) const {
    auto it = blocks.find(phi);
    return it == blocks.end() ? Partition{} : it->second;
  }

  void set(const Poly& phi, const Partition& lambda) {
    if (lambda.empty())
      blocks.erase(phi);
    else
      blocks[phi] = lambda;
  }

  bool operator==(const RcfData&) const = default;
  bool operator<(const RcfData& o) const { return blocks < o.blocks; }
};

inline std::string to_string(const RcfData& d) {
  std::string s = "{";
  bool first = true;
  for (const auto& [phi, lambda] : d.blocks) {
    if (!first) s += ", ";
    first = false;
    s += to_string(phi) + ":" + to_string(lambda);
  }
  return s + "}";
}

/// The three constraints on data coming from O^±_{2n}(q), plus the dimension.
inline bool validate_o_data(const FqField& F, const RcfData& data, int dimension) {
  const Poly z1 = z_minus_one(F);
  for (const auto& [phi, lambda] : data.blocks) {
    if (phi.constant() == 0) return false;
    if (phi == z1) {
      if (!odd_parts_even_mult(lambda)) return false;
      continue;
    }
    if (!(data.at(star(F, phi)) == lambda)) return false;
  }
  return data.dimension() == dimension;
}

/// p⁺(λ) + p⁻(λ): proportion of unipotent elements of type λ, summed over
/// both orthogonal groups of dimension |λ|. Zero off the support.
inline Rational p_sum_unipotent(const Partition& lambda, long q) {
  if (!odd_parts_even_mult(lambda)) return 0;
  long e2 = 2 * lambda.n() + lambda.size() + lambda.odd_parts();
  Rational denom = rpow(q, e2 / 2);
  for (int i = 1; i <= lambda.largest(); ++i)
    for (int j = 1; j <= lambda.multiplicity(i) / 2; ++j) denom *= 1 - rpow(q, -2 * j);
  return rpow(q, lambda.length()) / denom;
}

/// p⁺(λ) − p⁻(λ); zero unless every multiplicity is even.
inline Rational p_diff_unipotent(const Partition& lambda, long q) {
  if (!all_mults_even(lambda)) return 0;
  Rational denom = rpow(q, lambda.conjugate_square_sum() / 2);
  for (int i = 1; i <= lambda.largest(); ++i)
    for (int j = 1; j <= lambda.multiplicity(i) / 2; ++j) denom *= 1 - rpow(q, -2 * j);
  return 1 / denom;
}

struct ClassProportions {
  Rational p_plus;
  Rational p_minus;
};

/// Proportions of elements of O⁺_{2n}(q) and O⁻_{2n}(q) with the given
/// rational canonical form data.
inline ClassProportions class_proportions(const FqField& F, const RcfData& data) {
  const int dim = data.dimension();
  if (!validate_o_data(F, data, dim) || dim % 2)
    throw InvalidData("not orthogonal rational canonical form data: " + to_string(data));
  const Poly z1 = z_minus_one(F);
  const long q = F.q();
  Partition unip = data.at(z1);
  Rational sum = p_sum_unipotent(unip, q);
  Rational diff = p_diff_unipotent(unip, q);
  for (const auto& [phi, lambda] : data.blocks) {
    if (phi == z1) continue;
    if (is_self_conjugate(F, phi)) {
      Rational b(b_self_conjugate(phi.degree(), lambda, q));
      sum /= b;
      diff /= b;
      if (lambda.size() % 2) diff = -diff;
    } else if (phi < star(F, phi)) {
      Rational bb(b_pair(phi.degree(), lambda, q));
      sum /= bb;
      diff /= bb;
    }
  }
  return {(sum + diff) / 2, (sum - diff) / 2};
}

/// Proportion within Ω^ε_{2n}(q): twice the O^ε proportion when l(λ_{z−1})
/// is even, otherwise zero.
inline Rational omega_class_proportion(const FqField& F, const RcfData& data, int epsilon) {
  auto p = class_proportions(F, data);
  if (data.at(z_minus_one(F)).length() % 2) return 0;
  return 2 * (epsilon > 0 ? p.p_plus : p.p_minus);
}

enum class CycleVariant { Sum, Diff, OmegaSum };

/// Values substituted for the cycle-index variables x_{φ,λ}.
///
/// For φ ≠ z−1 the weight may depend on φ only through its degree and
/// whether it is self-conjugate; for a conjugate pair `other` supplies the
/// product x_{φ,λ}·x_{φ*,λ}. This lets the per-polynomial factors be grouped
/// by degree and raised to the counts N*(q;d), M*(q;d). Both must be 1 on
/// the empty partition, otherwise the infinite product is meaningless.
struct CycleWeights {
  std::function<Rational(const Partition&)> z_minus_1 = [](const Partition&) { return Rational(1); };
  std::function<Rational(int degree, bool self_conjugate, const Partition&)> other =
      [](int, bool, const Partition&) { return Rational(1); };
};

/// Factor contributed by all self-conjugate polynomials of one degree.
inline Series self_conjugate_factor(long q, int degree, const CycleWeights& w, CycleVariant variant, int order) {
  return partition_sum_series(
      [&](const Partition& lambda) -> Rational {
        Rational v = w.other(degree, true, lambda) / Rational(b_self_conjugate(degree, lambda, q));
        if (variant == CycleVariant::Diff && lambda.size() % 2) v = -v;
        return v;
      },
      {}, degree, order);
}

inline Series pair_factor(long q, int degree, const CycleWeights& w, int order) {
  return partition_sum_series(
      [&](const Partition& lambda) -> Rational { return w.other(degree, false, lambda) / Rational(b_pair(degree, lambda, q)); },
      {}, 2 * degree, order);
}

inline Series z_minus_1_factor(long q, const CycleWeights& w, CycleVariant variant, int order) {
  switch (variant) {
    case CycleVariant::Sum:
      return partition_sum_series([&](const Partition& l) -> Rational { return w.z_minus_1(l) * p_sum_unipotent(l, q); },
                                  odd_parts_even_mult, 1, order);
    case CycleVariant::OmegaSum:
      return partition_sum_series(
          [&](const Partition& l) -> Rational { return w.z_minus_1(l) * p_sum_unipotent(l, q); },
          [](const Partition& l) { return odd_parts_even_mult(l) && l.length() % 2 == 0; }, 1, order);
    case CycleVariant::Diff:
      return partition_sum_series([&](const Partition& l) -> Rational { return w.z_minus_1(l) * p_diff_unipotent(l, q); },
                                  all_mults_even, 1, order);
  }
  throw Error("unknown cycle index variant");
}

/// The cycle index with x_{φ,λ} := weight, truncated at u^order.
///
/// Sum: 1 + Σ_n u^{2n}(E⁺_n + E⁻_n); Diff: 1 + Σ_n u^{2n}(E⁺_n − E⁻_n), where
/// E^ε_n is the average of Π x_{φ,λ_φ(g)} over g ∈ O^ε_{2n}(q). OmegaSum
/// restricts the averages to Ω^ε while still dividing by |O^ε|.
inline Series cycle_index_series(long q, const CycleWeights& w, int order, CycleVariant variant) {
  if (!is_even_prime_power(q)) throw UnsupportedField("orthogonal cycle index needs q a power of 2");
  Series s = z_minus_1_factor(q, w, variant, order);
  for (int d = 2; d <= order; d += 2) {
    Integer count = n_star_count(q, d);
    if (count == 0) continue;
    s *= self_conjugate_factor(q, d, w, variant, order).pow(count);
  }
  for (int d = 1; 2 * d <= order; ++d) {
    Integer count = m_star_count(q, d);
    if (count == 0) continue;
    s *= pair_factor(q, d, w, order).pow(count);
  }
  return s;
}

struct DataFilter {
  /// Optional restriction on each λ_φ (φ ≠ z−1) and on λ_{z−1}.
  PartitionPredicate other;
  PartitionPredicate z_minus_1;
};

/// Visits every valid orthogonal data of the given dimension, built from
/// explicitly enumerated polynomials.
inline void for_each_o_data(IrreducibleCatalog& cat, int dimension, const std::function<void(const RcfData&)>& f,
                            const DataFilter& filter = {}) {
  const FqField& F = cat.field();
  struct Cell {
    Poly phi;
    int unit;  // dimension per unit of |λ|
    bool is_z1;
  };
  std::vector<Cell> cells;
  const Poly z1 = z_minus_one(F);
  cells.push_back({z1, 1, true});
  for (int d = 2; d <= dimension; d += 2)
    for (const auto& p : cat.self_conjugate(d)) cells.push_back({p, d, false});
  for (int d = 1; 2 * d <= dimension; ++d)
    for (const auto& p : cat.pair_representatives(d)) cells.push_back({p, 2 * d, false});

  RcfData data;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
    if (remaining == 0) {
      f(data);
      return;
    }
    if (idx == cells.size()) return;
    const Cell& cell = cells[idx];
    rec(idx + 1, remaining);
    for (int size = 1; size * cell.unit <= remaining; ++size) {
      for (const auto& lambda : iter_partitions(size)) {
        if (cell.is_z1 && !odd_parts_even_mult(lambda)) continue;
        const auto& pred = cell.is_z1 ? filter.z_minus_1 : filter.other;
        if (pred && !pred(lambda)) continue;
        data.set(cell.phi, lambda);
        Poly partner;
        bool paired = !cell.is_z1 && !is_self_conjugate(F, cell.phi);
        if (paired) {
          partner = star(F, cell.phi);
          data.set(partner, lambda);
        }
        rec(idx + 1, remaining - size * cell.unit);
        data.set(cell.phi, {});
        if (paired) data.set(partner, {});
      }
    }
  };
  rec(0, dimension);
}

}  // namespace orthocyc
