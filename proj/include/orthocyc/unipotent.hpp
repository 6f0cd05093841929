#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthocyc/cycleindex.hpp"
#include "orthocyc/orders.hpp"

namespace orthocyc {

/// W(m)^a: a copies of the indecomposable 2m-dimensional summand on which
/// g acts as 2J_m.
struct WTerm {
  int m;
  int a;
  bool operator==(const WTerm&) const = default;
};

/// V(2k)^b, b ∈ {1, 2}: b copies of a single Jordan block J_{2k}.
struct VTerm {
  int k;
  int b;
  bool operator==(const VTerm&) const = default;
};

struct CanonicalDecomposition {
  std::vector<WTerm> w;  // increasing m
  std::vector<VTerm> v;  // increasing k

  int dimension() const {
    int d = 0;
    for (const auto& t : w) d += 2 * t.m * t.a;
    for (const auto& t : v) d += 2 * t.k * t.b;
    return d;
  }

  Partition jordan_type() const {
    std::vector<int> parts;
    for (const auto& t : w) parts.insert(parts.end(), 2 * t.a, t.m);
    for (const auto& t : v) parts.insert(parts.end(), t.b, 2 * t.k);
    return Partition(std::move(parts));
  }

  int a_of(int m) const {
    for (const auto& t : w)
      if (t.m == m) return t.a;
    return 0;
  }

  bool operator==(const CanonicalDecomposition&) const = default;
};

inline std::string to_string(const CanonicalDecomposition& d) {
  std::string s;
  auto add = [&](const std::string& x) { s += (s.empty() ? "" : "+") + x; };
  for (const auto& t : d.w) add("W(" + std::to_string(t.m) + ")^" + std::to_string(t.a));
  for (const auto& t : d.v) add("V(" + std::to_string(2 * t.k) + ")^" + std::to_string(t.b));
  return s.empty() ? "0" : s;
}

/// Every canonical decomposition of the given even dimension.
inline std::vector<CanonicalDecomposition> enum_decomps(int two_n) {
  if (two_n < 0 || two_n % 2) throw BadDimension("canonical decompositions need an even dimension");
  std::vector<CanonicalDecomposition> out;
  CanonicalDecomposition cur;
  std::function<void(int, int)> choose_v = [&](int k, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (2 * k > remaining) return;
    choose_v(k + 1, remaining);
    for (int b = 1; b <= 2 && 2 * k * b <= remaining; ++b) {
      cur.v.push_back({k, b});
      choose_v(k + 1, remaining - 2 * k * b);
      cur.v.pop_back();
    }
  };
  std::function<void(int, int)> choose_w = [&](int m, int remaining) {
    if (2 * m > remaining) {
      choose_v(1, remaining);
      return;
    }
    choose_w(m + 1, remaining);
    for (int a = 1; 2 * m * a <= remaining; ++a) {
      cur.w.push_back({m, a});
      choose_w(m + 1, remaining - 2 * m * a);
      cur.w.pop_back();
    }
  };
  choose_w(1, two_n);
  return out;
}

enum class Context { Sp, Oplus, Ominus };

inline std::string context_name(Context c) {
  switch (c) {
    case Context::Sp: return "Sp";
    case Context::Oplus: return "O+";
    case Context::Ominus: return "O-";
  }
  return "?";
}

/// The bookkeeping attached to a canonical decomposition: the index set I,
/// the intervals K_u of K = {k_j}, and which odd W-summands are linked to
/// which interval.
struct DecompositionStructure {
  int s = 0;
  int t = 0;
  int delta = 0;
  std::vector<int> isolated;                   // indices into w forming I
  std::vector<std::vector<int>> intervals;     // indices into v
  std::vector<std::vector<int>> linked;        // per interval, indices into w
  bool first_interval_signed = true;           // false for K_0 in Sp
  bool exceptional = false;

  int sign_count() const { return s + t + delta; }
};

inline DecompositionStructure analyze(const CanonicalDecomposition& d, Context ctx) {
  DecompositionStructure st;
  const bool sp = ctx == Context::Sp;
  const int r = static_cast<int>(d.v.size());
  for (int j = 0; j < r; ++j) {
    if (j == 0 || d.v[j].k - d.v[j - 1].k >= 2) st.intervals.emplace_back();
    st.intervals.back().push_back(j);
  }
  st.t = r > 0 ? static_cast<int>(st.intervals.size()) - 1 : 0;
  st.delta = sp ? (r > 0 && d.v[0].k > 1) : (r > 0);
  st.first_interval_signed = !sp || st.delta == 1;
  st.linked.assign(st.intervals.size(), {});
  for (int i = 0; i < static_cast<int>(d.w.size()); ++i) {
    int m = d.w[i].m;
    if (m % 2 == 0 || (sp && m == 1)) continue;
    int home = -1;
    for (int u = 0; u < static_cast<int>(st.intervals.size()); ++u)
      for (int j : st.intervals[u])
        if (2 * d.v[j].k == m + 1 || 2 * d.v[j].k == m - 1) home = u;
    if (home < 0)
      st.isolated.push_back(i);
    else
      st.linked[home].push_back(i);
  }
  st.s = static_cast<int>(st.isolated.size());
  bool all_even = true;
  for (const auto& t : d.w) all_even = all_even && t.m % 2 == 0;
  st.exceptional = !sp && r == 0 && all_even;
  return st;
}

struct SpInvariants {
  int s;
  int t;
  int delta;
  long class_count;
};

inline SpInvariants sp_invariants(const CanonicalDecomposition& d) {
  auto st = analyze(d, Context::Sp);
  return {st.s, st.t, st.delta, 1L << st.sign_count()};
}

struct OClassData {
  bool exists;
  long h_class_count;
  int k_splitting;  // Ω-classes per O-class
  int s;
  int t;
  int delta;
  bool exceptional;
};

inline OClassData o_class_data(const CanonicalDecomposition& d, int epsilon) {
  auto st = analyze(d, epsilon > 0 ? Context::Oplus : Context::Ominus);
  OClassData r{true, 0, st.exceptional ? 2 : 1, st.s, st.t, st.delta, st.exceptional};
  if (st.exceptional) {
    r.exists = epsilon > 0;
    r.h_class_count = r.exists ? 1 : 0;
  } else {
    r.h_class_count = 1L << (st.sign_count() - 1);
  }
  return r;
}

/// A unipotent class: decomposition plus signs α_1..α_s, β_1..β_{t+δ}
/// (+1 / −1).
struct ClassLabel {
  CanonicalDecomposition decomposition;
  Context context;
  std::vector<int> alpha;
  std::vector<int> beta;

  int sign_product() const {
    int p = 1;
    for (int x : alpha) p *= x;
    for (int x : beta) p *= x;
    return p;
  }
};

inline std::string signs_string(const ClassLabel& l) {
  std::string s;
  for (int x : l.alpha) s += x > 0 ? '+' : '-';
  s += '|';
  for (int x : l.beta) s += x > 0 ? '+' : '-';
  return s;
}

/// All classes with the given decomposition, sign sequences in lexicographic
/// order with + before −. In O^ε only sequences with Πα·Πβ = ε occur.
inline std::vector<ClassLabel> class_labels(const CanonicalDecomposition& d, Context ctx) {
  auto st = analyze(d, ctx);
  const int len = st.sign_count();
  std::vector<ClassLabel> out;
  for (long bits = 0; bits < (1L << len); ++bits) {
    ClassLabel l{d, ctx, {}, {}};
    for (int i = 0; i < len; ++i) {
      int sign = (bits >> (len - 1 - i)) & 1 ? -1 : 1;
      (i < st.s ? l.alpha : l.beta).push_back(sign);
    }
    if (ctx == Context::Oplus && l.sign_product() != 1) continue;
    if (ctx == Context::Ominus && l.sign_product() != -1) continue;
    out.push_back(std::move(l));
  }
  return out;
}

/// Unipotent classes of Sp_{2n}(q) or O^ε_{2n}(q) with a given Jordan type.
inline std::vector<ClassLabel> classes_of_type(const Partition& jordan, Context ctx) {
  std::vector<ClassLabel> out;
  for (const auto& d : enum_decomps(jordan.size()))
    if (d.jordan_type() == jordan)
      for (auto& l : class_labels(d, ctx)) out.push_back(std::move(l));
  return out;
}

/// β(g) = (#invariant plus-type forms) − (#invariant minus-type forms) for
/// g in the labeled class of Sp_{2n}(q).
inline Integer weil_diff_value(const ClassLabel& label, long q) {
  if (label.context != Context::Sp) throw Error("weil_diff_value needs a symplectic class label");
  const auto& d = label.decomposition;
  if (!d.v.empty() && d.v[0].k == 1) return 0;
  auto st = analyze(d, Context::Sp);
  long e = d.a_of(1);
  for (const auto& t : d.w)
    if (t.m % 2 == 0) e += 2L * t.a;
  for (int i : st.isolated) e += 2L * d.w[i].a;
  for (std::size_t u = 0; u < st.intervals.size(); ++u) {
    for (int j : st.intervals[u]) e += d.v[j].b;
    for (int i : st.linked[u]) e += 2L * d.w[i].a;
  }
  Integer r = ipow(q, static_cast<unsigned long>(e));
  return label.sign_product() > 0 ? r : Integer(-r);
}

/// Λ(g), the Weil difference character induced from Sp_{2n}(q) to GL_{2n}(q),
/// at a unipotent g of Jordan type λ.
inline Rational induced_weil(const Partition& lambda, long q) {
  if (lambda.size() % 2) throw BadDimension("induced_weil needs |lambda| even");
  if (!all_mults_even(lambda)) return 0;
  // doubled exponent: Σc_i − 2Σ_{i<j} i c_i c_j − Σ(i−1)c_i²
  long e2 = lambda.length() - detail::doubled_b_exponent(lambda);
  Rational r = rpow(q, e2 / 2) * Rational(gl_unip_centralizer(lambda, q));
  for (int i = 1; i <= lambda.largest(); ++i) r /= Rational(sp_order(lambda.multiplicity(i), q));
  return r;
}

/// D = Σ_{i<j} i c_i c_j + Σ(i−1)c_i²/2 + Σ_{i even} c_i/2 + Σ_{i>1 odd} c_i
inline Rational d_exponent(const Partition& lambda) {
  Rational d = frac(detail::doubled_b_exponent(lambda), 2);
  for (int i = 1; i <= lambda.largest(); ++i) {
    int c = lambda.multiplicity(i);
    if (i % 2 == 0)
      d += frac(c, 2);
    else if (i > 1)
      d += c;
  }
  return d;
}

/// |C_{Sp_{2n}(q)}(g)| for a class whose decomposition has no V-summands:
/// q^D Π_{m=1 or even} |Sp_{2a}(q)| Π_{v} |O^{α_v}_{2a}(q)|.
inline Integer sp_centralizer_order(const ClassLabel& label, long q) {
  const auto& d = label.decomposition;
  if (label.context != Context::Sp) throw Error("sp_centralizer_order needs a symplectic class label");
  if (!d.v.empty()) throw Error("centralizer orders are only available for decompositions without V-summands");
  Rational D = d_exponent(d.jordan_type());
  if (!is_integer(D)) throw Error("non-integral centralizer exponent");
  Integer r = ipow(q, D.get_num().get_ui());
  auto st = analyze(d, Context::Sp);
  std::size_t v = 0;
  for (int i = 0; i < static_cast<int>(d.w.size()); ++i) {
    if (v < st.isolated.size() && st.isolated[v] == i)
      r *= o_order(label.alpha[v++], 2 * d.w[i].a, q);
    else
      r *= sp_order(2 * d.w[i].a, q);
  }
  return r;
}

/// Rational canonical form data of g ⊕ J_1(1) in O_{2n+1}(q), from the data
/// of its image in Sp_{2n}(q).
inline RcfData jordan_lift_odd_dim(const FqField& F, const RcfData& data) {
  RcfData out = data;
  Poly z1 = z_minus_one(F);
  std::vector<int> parts = data.at(z1).parts();
  parts.push_back(1);
  out.set(z1, Partition(std::move(parts)));
  return out;
}

}  // namespace orthocyc
