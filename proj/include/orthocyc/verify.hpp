#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "orthocyc/enumerate.hpp"
#include "orthocyc/measures.hpp"
#include "orthocyc/oracle/tables.hpp"
#include "orthocyc/unipotent.hpp"

namespace orthocyc::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  long checks;
  std::string detail;
  double seconds;
};

struct Options {
  long q = 2;                      // oracle field
  int max_dim = 6;                 // largest oracle dimension 2n
  std::uint64_t seed = 20240601;   // sampler seed
  long samples = 1'000'000;
};

/// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what());
  }

  void note(const std::string& s) { info_.push_back(s); }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  long checks() const { return checks_; }

  std::string detail() const {
    std::string s = std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failed";
    for (const auto& n : info_) s += "; " + n;
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> info_;
};

/// Enumerated groups and their class tables, built once per run.
class OracleCache {
 public:
  const oracle::Group& group(Family f, int dim, long q) {
    auto key = std::tuple{static_cast<int>(f), dim, q};
    auto it = groups_.find(key);
    if (it != groups_.end()) return *it->second;
    auto g = std::make_unique<oracle::Group>(oracle::build_group({f, dim, q}));
    return *groups_.emplace(key, std::move(g)).first->second;
  }

  const oracle::ClassTable& table(Family f, int dim, long q) {
    auto key = std::tuple{static_cast<int>(f), dim, q};
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    return tables_.emplace(key, oracle::empirical_class_table(group(f, dim, q))).first->second;
  }

 private:
  std::map<std::tuple<int, int, long>, std::unique_ptr<oracle::Group>> groups_;
  std::map<std::tuple<int, int, long>, oracle::ClassTable> tables_;
};

namespace detail {
inline Family o_family(int eps) { return eps > 0 ? Family::Oplus : Family::Ominus; }
inline Family omega_family(int eps) { return eps > 0 ? Family::OmegaPlus : Family::OmegaMinus; }
inline std::string sign(int eps) { return eps > 0 ? "+" : "-"; }
inline std::string r(const Rational& x) { return format_rational(x); }

// Frequencies of a statistic of the rational canonical form data.
inline std::map<int, Rational> frequencies(const oracle::ClassTable& t, const std::function<int(const RcfData&)>& stat) {
  std::map<int, Rational> out;
  for (const auto& [d, c] : t.counts) out[stat(d)] += frac(c, t.total);
  return out;
}

inline Rational at(const std::map<int, Rational>& m, int k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

inline bool is_cyclic_data(const RcfData& d) {
  for (const auto& [phi, lambda] : d.blocks)
    if (lambda.length() > 1) return false;
  return true;
}
}  // namespace detail

/// 1. Class proportions equal enumerated frequencies in O^±_{2n}(q), plus
/// the Ω proportions in Ω^±_{2n}(q).
inline CriterionResult master_oracle(const Options& o, OracleCache& cache, Tally& t) {
  const FqField F(o.q);
  for (int two_n = 2; two_n <= o.max_dim; two_n += 2)
    for (int eps : {1, -1}) {
      const auto& table = cache.table(detail::o_family(eps), two_n, o.q);
      Rational total = 0;
      for (const auto& [d, c] : table.counts) {
        auto p = class_proportions(F, d);
        Rational expect = eps > 0 ? p.p_plus : p.p_minus;
        total += expect;
        t.check(expect == table.proportion(d), [&] {
          return "O" + detail::sign(eps) + std::to_string(two_n) + " " + to_string(d) + ": formula " + detail::r(expect) +
                 " vs oracle " + detail::r(table.proportion(d));
        });
      }
      t.check(total == 1, [&] { return "occurring data do not exhaust the group"; });
      const auto& omega = cache.table(detail::omega_family(eps), two_n, o.q);
      for (const auto& [d, c] : omega.counts)
        t.check(omega_class_proportion(F, d, eps) == omega.proportion(d),
                [&] { return "Omega" + detail::sign(eps) + std::to_string(two_n) + " " + to_string(d); });
    }
  return {};
}

/// 2. Spot values of the class proportion formulas.
inline CriterionResult con_spots(const Options&, OracleCache& cache, Tally& t) {
  const FqField F(2);
  const Poly z1 = z_minus_one(F);
  RcfData identity, swap;
  identity.set(z1, Partition{1, 1});
  swap.set(z1, Partition{2});
  auto p = class_proportions(F, identity);
  t.check(p.p_plus == Rational(1, 2) && p.p_minus == Rational(1, 6), [] { return "identity proportions"; });
  t.check(p_sum_unipotent(Partition{2}, 2) == 1, [] { return "p_sum((2),2) != 1"; });
  t.check(p_diff_unipotent(Partition{2}, 2) == 0, [] { return "p_diff((2),2) != 0"; });
  const auto& plus = cache.table(Family::Oplus, 2, 2);
  const auto& minus = cache.table(Family::Ominus, 2, 2);
  t.check(plus.proportion(identity) == Rational(1, 2), [] { return "oracle p+((1,1))"; });
  t.check(minus.proportion(identity) == Rational(1, 6), [] { return "oracle p-((1,1))"; });
  t.check(plus.proportion(swap) + minus.proportion(swap) == 1, [] { return "oracle p_sum((2))"; });
  t.check(plus.proportion(swap) - minus.proportion(swap) == 0, [] { return "oracle p_diff((2))"; });
  return {};
}

/// 3. Fixed-space closed forms against series extraction and the oracle,
/// for O^± and Ω^±.
inline CriterionResult fixed_space(const Options& o, OracleCache& cache, Tally& t) {
  for (long q : {2L, 4L, 8L})
    for (int two_n = 2; two_n <= 12; two_n += 2)
      for (int k = 0; k <= two_n; ++k)
        for (bool omega : {false, true}) {
          auto s = fixed_space_prob_series(two_n, k, q, omega);
          auto f = omega ? omega_fixed_space_prob : fixed_space_prob;
          t.check(s.plus == f(1, two_n, k, q) && s.minus == f(-1, two_n, k, q), [&] {
            return std::string(omega ? "Omega" : "O") + " q=" + std::to_string(q) + " 2n=" + std::to_string(two_n) +
                   " k=" + std::to_string(k);
          });
        }
  t.check(omega_fixed_space_prob(-1, 4, 0, 2) == Rational(2, 5), [] { return "q-_4(0,2) != 2/5"; });
  t.check(omega_fixed_space_prob(-1, 4, 2, 2) == Rational(7, 12), [] { return "q-_4(2,2) != 7/12"; });
  t.check(omega_fixed_space_prob(-1, 4, 4, 2) == Rational(1, 60), [] { return "q-_4(4,2) != 1/60"; });
  const FqField F(o.q);
  const Poly z1 = z_minus_one(F);
  auto fixed_dim = [&](const RcfData& d) { return d.at(z1).length(); };
  for (int two_n = 2; two_n <= o.max_dim; two_n += 2)
    for (int eps : {1, -1}) {
      auto of = detail::frequencies(cache.table(detail::o_family(eps), two_n, o.q), fixed_dim);
      auto wf = detail::frequencies(cache.table(detail::omega_family(eps), two_n, o.q), fixed_dim);
      for (int k = 0; k <= two_n; ++k) {
        t.check(detail::at(of, k) == fixed_space_prob(eps, two_n, k, o.q),
                [&] { return "oracle O" + detail::sign(eps) + std::to_string(two_n) + " k=" + std::to_string(k); });
        t.check(detail::at(wf, k) == omega_fixed_space_prob(eps, two_n, k, o.q),
                [&] { return "oracle Omega" + detail::sign(eps) + std::to_string(two_n) + " k=" + std::to_string(k); });
      }
    }
  return {};
}

/// 4. Unipotent elements by fixed-space dimension and the unipotent count.
inline CriterionResult unipotent_counts(const Options& o, OracleCache& cache, Tally& t) {
  for (long q : {2L, 4L})
    for (int two_n = 2; two_n <= 12; two_n += 2)
      for (int eps : {1, -1}) {
        Rational s = 0;
        for (int k = 0; k <= two_n; ++k) {
          s += unip_fixed_prob(eps, two_n, k, q);
          auto series = unip_fixed_prob_series(two_n, k, q);
          t.check((eps > 0 ? series.plus : series.minus) == unip_fixed_prob(eps, two_n, k, q),
                  [&] { return "series q=" + std::to_string(q) + " 2n=" + std::to_string(two_n) + " k=" + std::to_string(k); });
        }
        Rational count = s * Rational(o_order(eps, two_n, q));
        Rational closed = rpow(q, 2L * (two_n / 2) * (two_n / 2) - two_n + 1) * (1 + Rational(1, q) - eps * rpow(q, -two_n / 2));
        t.check(count == closed && count == Rational(unip_count(eps, two_n, q)), [&] {
          return "count O" + detail::sign(eps) + std::to_string(two_n) + "(" + std::to_string(q) + ")";
        });
      }
  const FqField F(o.q);
  const Poly z1 = z_minus_one(F);
  auto unip_fixed = [&](const RcfData& d) { return d.blocks.size() == 1 && d.blocks.count(z1) ? d.at(z1).length() : -1; };
  for (int two_n = 2; two_n <= o.max_dim; two_n += 2)
    for (int eps : {1, -1}) {
      const auto& table = cache.table(detail::o_family(eps), two_n, o.q);
      auto of = detail::frequencies(table, unip_fixed);
      auto wf = detail::frequencies(cache.table(detail::omega_family(eps), two_n, o.q), unip_fixed);
      Rational unip = 0;
      for (int k = 0; k <= two_n; ++k) {
        unip += detail::at(of, k);
        t.check(detail::at(of, k) == unip_fixed_prob(eps, two_n, k, o.q),
                [&] { return "oracle O" + detail::sign(eps) + std::to_string(two_n) + " k=" + std::to_string(k); });
        t.check(detail::at(wf, k) == omega_unip_fixed_prob(eps, two_n, k, o.q),
                [&] { return "oracle Omega" + detail::sign(eps) + std::to_string(two_n) + " k=" + std::to_string(k); });
      }
      t.check(unip * Rational(table.total) == Rational(unip_count(eps, two_n, o.q)),
              [&] { return "oracle count O" + detail::sign(eps) + std::to_string(two_n); });
    }
  if (o.q == 2) {
    t.check(unip_count(1, 2, 2) == 2 && unip_count(-1, 2, 2) == 4, [] { return "counts at 2n=2"; });
  }
  return {};
}

/// 5. Cyclic proportions: generating function, oracle, and the direct sum
/// over data with at most one part per polynomial.
inline CriterionResult cyclic(const Options& o, OracleCache& cache, Tally& t) {
  t.check(cyclic_proportion(1, 2, 2) == Rational(1, 2), [] { return "c_O+(2,2) != 1/2"; });
  t.check(cyclic_proportion(-1, 2, 2) == Rational(5, 6), [] { return "c_O-(2,2) != 5/6"; });
  for (int two_n = 2; two_n <= o.max_dim; two_n += 2)
    for (int eps : {1, -1}) {
      auto f = detail::frequencies(cache.table(detail::o_family(eps), two_n, o.q),
                                   [](const RcfData& d) { return detail::is_cyclic_data(d) ? 1 : 0; });
      t.check(detail::at(f, 1) == cyclic_proportion(eps, two_n, o.q),
              [&] { return "oracle O" + detail::sign(eps) + std::to_string(two_n); });
    }
  for (long q : {2L, 4L})
    for (int two_n = 2; two_n <= 10; two_n += 2)
      for (int eps : {1, -1})
        t.check(cyclic_proportion(eps, two_n, q) == cyclic_proportion_direct(eps, two_n, q), [&] {
          return "direct O" + detail::sign(eps) + std::to_string(two_n) + "(" + std::to_string(q) + ")";
        });
  return {};
}

namespace detail {
// Unipotent classes of an enumerated group, grouped by Jordan type.
inline std::map<Partition, std::vector<oracle::ConjugacyClass>> unipotent_classes(const oracle::Group& g) {
  IrreducibleCatalog cat(g.F());
  const Poly z1 = z_minus_one(g.F());
  std::map<Partition, std::vector<oracle::ConjugacyClass>> out;
  for (const auto& c : oracle::conjugacy_classes(g, [&](oracle::Key k) { return oracle::is_unipotent(*g.space, k); }))
    out[oracle::rcf_extract(cat, g.space->decode(c.representative)).at(z1)].push_back(c);
  return out;
}

inline long theory_class_count(const Partition& lambda, Family f) {
  if (f == Family::Sp) return static_cast<long>(classes_of_type(lambda, Context::Sp).size());
  const bool omega = f == Family::OmegaPlus || f == Family::OmegaMinus;
  const int eps = f == Family::Oplus || f == Family::OmegaPlus ? 1 : -1;
  if (omega && lambda.length() % 2) return 0;
  long n = 0;
  for (const auto& d : enum_decomps(lambda.size())) {
    if (!(d.jordan_type() == lambda)) continue;
    auto od = o_class_data(d, eps);
    if (od.exists) n += od.h_class_count * (omega ? od.k_splitting : 1);
  }
  return n;
}
}  // namespace detail

/// 6. Unipotent class counts per Jordan type.
inline CriterionResult unipotent_classes(const Options&, OracleCache& cache, Tally& t) {
  const std::vector<std::pair<Family, int>> groups = {
      {Family::Sp, 4},        {Family::Sp, 6},        {Family::Oplus, 4},      {Family::Ominus, 4},
      {Family::Oplus, 6},     {Family::Ominus, 6},    {Family::OmegaPlus, 4},  {Family::OmegaMinus, 4},
      {Family::OmegaPlus, 6}, {Family::OmegaMinus, 6}};
  for (const auto& [f, dim] : groups) {
    auto by_type = detail::unipotent_classes(cache.group(f, dim, 2));
    std::size_t total = 0;
    for (const auto& [lambda, cls] : by_type) total += cls.size();
    for (const auto& lambda : iter_partitions(dim, odd_parts_even_mult)) {
      auto it = by_type.find(lambda);
      long oracle_count = it == by_type.end() ? 0 : static_cast<long>(it->second.size());
      long theory = detail::theory_class_count(lambda, f);
      t.check(oracle_count == theory, [&] {
        return family_name(f) + std::to_string(dim) + " " + to_string(lambda) + ": oracle " + std::to_string(oracle_count) +
               " vs " + std::to_string(theory);
      });
    }
    if (f == Family::Sp && dim == 4) t.check(total == 6, [] { return "Sp4(2) unipotent classes != 6"; });
  }
  return {};
}

/// 7. Fixed quadratic forms, the Weil difference character on unipotent
/// classes, and the induced character Λ.
inline CriterionResult weil(const Options&, OracleCache& cache, Tally& t) {
  for (int dim : {4, 6}) {
    const auto& g = cache.group(Family::Sp, dim, 2);
    const FqField& F = g.F();
    const oracle::Mat one = oracle::Mat::identity(dim);
    const Poly z1 = z_minus_one(F);
    IrreducibleCatalog cat(F);
    const Rational order(sp_order(dim, 2));
    long bad_total = 0;
    std::map<Partition, Rational> beta_sum;  // Σ β(g) over unipotent g of each Jordan type
    for (oracle::Key k : g.elements) {
      oracle::Mat m = g.space->decode(k);
      auto ff = oracle::fixed_forms_by_type(F, m);
      int d = oracle::nullity(F, oracle::mat_add(F, m, one));
      if (ff.plus + ff.minus != (1L << d)) ++bad_total;
      if (oracle::is_unipotent(*g.space, k)) beta_sum[oracle::rcf_extract(cat, m).at(z1)] += ff.plus - ff.minus;
    }
    t.check(bad_total == 0, [&] { return "Sp" + std::to_string(dim) + ": " + std::to_string(bad_total) + " elements with wrong form total"; });

    auto by_type = detail::unipotent_classes(g);
    for (const auto& [lambda, classes] : by_type) {
      std::multiset<std::string> oracle_values, theory_values;
      Rational expected_sum = 0;
      bool sizes_known = true;  // centralizer orders exist only without V-summands
      for (const auto& c : classes) {
        auto ff = oracle::fixed_forms_by_type(F, g.space->decode(c.representative));
        oracle_values.insert(std::to_string(ff.plus - ff.minus));
      }
      for (const auto& label : classes_of_type(lambda, Context::Sp)) {
        theory_values.insert(weil_diff_value(label, 2).get_str());
        if (!label.decomposition.v.empty()) {
          sizes_known = false;
          continue;
        }
        expected_sum += Rational(weil_diff_value(label, 2)) * order / Rational(sp_centralizer_order(label, 2));
      }
      t.check(oracle_values == theory_values, [&] { return "Sp" + std::to_string(dim) + " beta values on " + to_string(lambda); });
      if (sizes_known)
        t.check(beta_sum[lambda] == expected_sum, [&] { return "Sp" + std::to_string(dim) + " beta sum on " + to_string(lambda); });
      Rational oracle_lambda = beta_sum[lambda] * Rational(gl_unip_centralizer(lambda, 2)) / order;
      t.check(oracle_lambda == induced_weil(lambda, 2), [&] {
        return "Sp" + std::to_string(dim) + " Lambda" + to_string(lambda) + ": oracle " + detail::r(oracle_lambda) + " vs " +
               detail::r(induced_weil(lambda, 2));
      });
    }
  }
  for (long q : {2L, 4L})
    for (int n = 2; n <= 16; n += 2)
      for (const auto& lambda : iter_partitions(n)) {
        Rational lam = induced_weil(lambda, q);
        t.check(lam >= 0, [&] { return "Lambda negative at " + to_string(lambda); });
        t.check(p_diff_unipotent(lambda, q) == lam / Rational(gl_unip_centralizer(lambda, q)),
                [&] { return "p_diff != Lambda/|C_GL| at " + to_string(lambda) + " q=" + std::to_string(q); });
      }
  return {};
}

namespace detail {
// 1/((1 − u²/q)(1 − 1/q²)(1 − u²/q³)⋯) over the first m factors.
inline Series alternating_inverse(long q, int m, int order) {
  Series s = Series::one(order);
  for (int i = 1; i <= m; ++i) {
    Series f = Series::one(order);
    if (i % 2) {
      if (2 <= order) f[2] = -rpow(q, -i);
    } else {
      f[0] = 1 - rpow(q, -i);
    }
    s = s * f.inverse();
  }
  return s;
}
}  // namespace detail

/// 8. The two series identities behind the fixed-space distribution.
inline CriterionResult series_identities(const Options&, OracleCache&, Tally& t) {
  const int order = 30;
  for (long q : {2L, 4L}) {
    // partitions with a fixed number of parts a
    for (int a = 0; a <= order; ++a) {
      Series lhs = partition_sum_series(
          [&](const Partition& l) -> Rational { return l.length() == a ? p_sum_unipotent(l, q) : Rational(0); },
          odd_parts_even_mult, 1, order);
      const long k = a / 2;
      Series rhs = detail::alternating_inverse(q, a, order);
      if (a % 2 == 0)
        rhs *= rpow(q, k) / rpow(q, 2 * k * k);
      else
        rhs *= 1 / rpow(q, 2 * k * k + k);
      rhs = rhs.shifted(a % 2 == 0 ? a : a + 1);
      for (int i = 0; i <= order; ++i)
        t.check(lhs[i] == rhs[i], [&] { return "l=" + std::to_string(a) + " q=" + std::to_string(q) + " u^" + std::to_string(i); });
    }
    // product collapse over the polynomials other than z − 1
    Series collapse = geometric_product(Rational(-1, q), Rational(1, q * q), 2, order);
    Series geometric(order);
    for (int j = 0; j <= order; j += 2) geometric[j] = 1;
    collapse = collapse * geometric;
    Series explicit_product = Series::one(order);
    for (int d = 2; d <= order; d += 2) {
      Integer n = n_star_count(q, d);
      if (n == 0) continue;
      Rational c = -rpow(q, -d / 2);
      explicit_product = explicit_product * geometric_product(c, c, d, order).inverse().pow(n);
    }
    for (int d = 1; 2 * d <= order; ++d) {
      Integer m = m_star_count(q, d);
      if (m == 0) continue;
      explicit_product = explicit_product * geometric_product(-rpow(q, -d), rpow(q, -d), 2 * d, order).inverse().pow(m);
    }
    CycleWeights trivial_unipotent;
    trivial_unipotent.z_minus_1 = [](const Partition& l) { return Rational(l.empty() ? 1 : 0); };
    Series from_cycle_index = cycle_index_series(q, trivial_unipotent, order, CycleVariant::Sum);
    Series diff = cycle_index_series(q, trivial_unipotent, order, CycleVariant::Diff);
    Series diff_expected = geometric_product(Rational(-1, q * q), Rational(1, q * q), 2, order);
    for (int i = 0; i <= order; ++i) {
      t.check(explicit_product[i] == collapse[i], [&] { return "collapse q=" + std::to_string(q) + " u^" + std::to_string(i); });
      t.check(from_cycle_index[i] == collapse[i], [&] { return "B-sums q=" + std::to_string(q) + " u^" + std::to_string(i); });
      t.check(diff[i] == diff_expected[i], [&] { return "diff q=" + std::to_string(q) + " u^" + std::to_string(i); });
    }
  }
  return {};
}

/// 9. Normalization, transition rows, mixture identities and the sampler.
inline CriterionResult measure_suite(const Options& o, OracleCache&, Tally& t) {
  const std::vector<MeasureParams> params = {{Rational(1, 4), 2}, {Rational(1, 2), 2}, {Rational(1, 2), 4}};
  const std::vector<MeasureVariant> variants = {MeasureVariant::R, MeasureVariant::Re, MeasureVariant::Ro};
  for (const auto& p : params) {
    for (auto v : variants) {
      Bracket b = normalization_bracket(p, v, 40);
      t.check(b.contains(1), [&] { return "normalization " + variant_name(v) + " u=" + detail::r(p.u) + " q=" + std::to_string(p.q); });
      t.check(initial_column_dist(p, v).total.contains(1), [&] { return "column law " + variant_name(v); });
    }
    for (int a = 0; a <= 12; ++a) {
      Rational s1 = 0, s2 = 0;
      for (int b = 0; b <= a; ++b) {
        s1 += k1(a, b, p);
        s2 += k2(a, b, p);
      }
      t.check(s1 == 1 && s2 == 1, [&] { return "row sums a=" + std::to_string(a); });
    }
  }
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : iter_partitions(n))
      for (auto v : variants) {
        auto sides = mixture_identity(lambda, 2, v, 16);
        bool same = true;
        for (int i = 0; i <= 16; ++i) same = same && sides.groups[i] == sides.measure[i];
        t.check(same, [&] { return "mixture " + variant_name(v) + " " + to_string(lambda); });
      }
  auto stats = sampler_tv(params[1], MeasureVariant::R, o.seed, o.samples, 20);
  t.check(stats.tv_distance < 0.005, [&] { return "TV distance " + std::to_string(stats.tv_distance); });
  t.note("TV " + std::to_string(stats.tv_distance) + " over " + std::to_string(stats.n_samples) + " samples");
  return {};
}

/// 10. Elements of O_{2n+1}(2) and their symplectic quotients.
inline CriterionResult odd_dimension(const Options&, OracleCache& cache, Tally& t) {
  for (int dim : {3, 5}) {
    const auto& g = cache.group(Family::Odd, dim, 2);
    IrreducibleCatalog cat(g.F());
    for (oracle::Key k : g.elements) {
      oracle::Mat m = g.space->decode(k);
      RcfData whole = oracle::rcf_extract(cat, m);
      RcfData lifted = jordan_lift_odd_dim(g.F(), oracle::rcf_extract(cat, oracle::radical_quotient(m)));
      t.check(whole == lifted, [&] { return "O" + std::to_string(dim) + ": " + to_string(whole) + " vs " + to_string(lifted); });
    }
  }
  return {};
}

struct Criterion {
  int id;
  std::string name;
  std::string suite;
  CriterionResult (*run)(const Options&, OracleCache&, Tally&);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "master oracle equivalence", "oracle", master_oracle},
      {2, "class proportion spot values", "con", con_spots},
      {3, "fixed-space dimension", "fixdim", fixed_space},
      {4, "unipotent fixed space and count", "unipdim", unipotent_counts},
      {5, "cyclic matrices", "cyclic", cyclic},
      {6, "unipotent class bookkeeping", "classes", unipotent_classes},
      {7, "Weil character", "weil", weil},
      {8, "q-series identities", "series", series_identities},
      {9, "measures", "measures", measure_suite},
      {10, "odd dimension reduction", "odd", odd_dimension},
  };
  return all;
}

inline CriterionResult run_criterion(const Criterion& c, const Options& o, OracleCache& cache) {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  c.run(o, cache, t);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {c.id, c.name, t.passed(), t.checks(), t.detail(), secs};
}

/// Runs every criterion of the named suite ("all" for everything).
inline std::vector<CriterionResult> run_suite(const std::string& suite, const Options& o,
                                              const std::function<void(const CriterionResult&)>& progress = {}) {
  OracleCache cache;
  std::vector<CriterionResult> out;
  bool known = suite == "all";
  for (const auto& c : criteria()) {
    if (suite != "all" && suite != c.suite && suite != std::to_string(c.id)) continue;
    known = true;
    out.push_back(run_criterion(c, o, cache));
    if (progress) progress(out.back());
  }
  if (!known) throw Error("unknown verification suite '" + suite + "'");
  return out;
}

}  // namespace orthocyc::verify
