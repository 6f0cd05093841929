#pragma once

#include <memory>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orthocyc/oracle/forms.hpp"
#include "orthocyc/orders.hpp"

namespace orthocyc::oracle {

/// An explicitly enumerated matrix group. Elements are stored as packed keys
/// in discovery order, identity first.
struct Group {
  GroupKind kind;
  std::shared_ptr<const FqField> field;
  std::shared_ptr<const MatrixSpace> space;
  QuadraticForm form;   // the preserved form (O±, Ω±, odd); Q⁺ for Sp
  Mat gram;             // the preserved alternating form
  std::vector<Key> generators;  // closed under inverses
  std::vector<Key> elements;

  const FqField& F() const { return *field; }
  int dim() const { return space->dim(); }
  std::size_t size() const { return elements.size(); }
  Mat matrix(std::size_t i) const { return space->decode(elements[i]); }
};

inline constexpr std::size_t kDefaultElementCap = 10'000'000;

namespace detail {
// x ↦ x + c·(x, v)·v
inline Mat symplectic_transvection(const FqField& F, const Mat& gram, const Vec& v, Elem c) {
  const int n = gram.n;
  Mat t = Mat::identity(n);
  for (int j = 0; j < n; ++j) {
    Elem bj = 0;
    for (int k = 0; k < n; ++k) bj = F.add(bj, F.mul(gram(j, k), v[k]));
    Elem f = F.mul(c, bj);
    for (int i = 0; i < n; ++i) t(i, j) = F.add(t(i, j), F.mul(f, v[i]));
  }
  return t;
}

inline Mat permutation(const std::vector<int>& image) {
  Mat p(static_cast<int>(image.size()));
  for (int j = 0; j < p.n; ++j) p(image[j], j) = 1;
  return p;
}

// Swaps within a hyperbolic pair and between adjacent pairs, over the
// first `pairs` hyperbolic pairs.
inline std::vector<Mat> hyperbolic_swaps(int dim, int pairs) {
  std::vector<Mat> out;
  std::vector<int> id(dim);
  for (int i = 0; i < dim; ++i) id[i] = i;
  for (int p = 0; p < pairs; ++p) {
    auto im = id;
    std::swap(im[2 * p], im[2 * p + 1]);
    out.push_back(permutation(im));
  }
  for (int p = 0; p + 1 < pairs; ++p) {
    auto im = id;
    std::swap(im[2 * p], im[2 * p + 2]);
    std::swap(im[2 * p + 1], im[2 * p + 3]);
    out.push_back(permutation(im));
  }
  return out;
}

inline void closure(Group& g, std::size_t cap) {
  const MatrixSpace& S = *g.space;
  std::unordered_set<Key> seen;
  seen.reserve(std::min<std::size_t>(cap, 1 << 22));
  g.elements.assign(1, S.identity());
  seen.insert(S.identity());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (Key s : g.generators) {
      Key x = S.mul(g.elements[i], s);
      if (seen.insert(x).second) {
        if (g.elements.size() >= cap)
          throw BudgetExceeded("group closure exceeded " + std::to_string(cap) + " elements");
        g.elements.push_back(x);
      }
    }
  }
}
}  // namespace detail

/// Generates the group from transvections (plus hyperbolic swaps for O±)
/// and checks the order against the closed form.
///
/// Sp uses the polarization of Q⁺. Odd is O_{2n+1}(q) for
/// Q = Σ x_{2i−1}x_{2i} + x_{2n+1}². Ω± is the subgroup of O± where
/// dim ker(g−1) is even.
inline Group build_group(const GroupKind& kind, std::size_t cap = kDefaultElementCap) {
  auto field = std::make_shared<const FqField>(kind.q);
  const FqField& F = *field;
  if (F.characteristic() != 2) throw UnsupportedField("oracle groups need q a power of 2");
  const int dim = kind.dimension;
  if (dim < 1 || dim > 16) throw BadDimension("oracle dimension must be in [1, 16]");
  Group g{kind, field, std::make_shared<const MatrixSpace>(dim, F), {}, {}, {}, {}};

  const bool omega = kind.family == Family::OmegaPlus || kind.family == Family::OmegaMinus;
  std::vector<Mat> gens;
  switch (kind.family) {
    case Family::Oplus:
    case Family::Ominus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      int eps = kind.family == Family::Oplus || kind.family == Family::OmegaPlus ? 1 : -1;
      g.form = standard_form(F, eps, dim);
      g.gram = g.form.gram(F);
      for_each_vector(F, dim, [&](const Vec& v) {
        Elem qv = g.form(F, v);
        if (qv) gens.push_back(detail::symplectic_transvection(F, g.gram, v, F.inv(qv)));
      });
      for (auto& m : detail::hyperbolic_swaps(dim, eps > 0 ? dim / 2 : dim / 2 - 1)) gens.push_back(m);
      break;
    }
    case Family::Sp: {
      g.form = standard_form(F, 1, dim);
      g.gram = g.form.gram(F);
      // support of size 1 or 2 already generates
      for_each_vector(F, dim, [&](const Vec& v) {
        int support = 0;
        for (Elem x : v) support += x != 0;
        if (support == 0 || support > 2) return;
        for (int c = 1; c < F.q(); ++c) gens.push_back(detail::symplectic_transvection(F, g.gram, v, static_cast<Elem>(c)));
      });
      break;
    }
    case Family::Odd: {
      if (dim % 2 == 0) throw BadDimension("odd orthogonal group needs an odd dimension");
      g.form = odd_form(dim - 1);
      g.gram = g.form.gram(F);
      for_each_vector(F, dim, [&](const Vec& v) {
        Elem qv = g.form(F, v);
        if (qv) gens.push_back(detail::symplectic_transvection(F, g.gram, v, F.inv(qv)));
      });
      break;
    }
    default:
      throw Error("oracle cannot build " + family_name(kind.family));
  }

  for (const auto& m : gens) {
    bool ok = kind.family == Family::Sp ? preserves_bilinear(F, g.gram, m) : preserves(F, g.form, m);
    if (!ok) throw Error("generator does not preserve the form");
  }
  std::unordered_set<Key> distinct;
  for (const auto& m : gens)
    if (m != Mat::identity(dim) && distinct.insert(g.space->encode(m)).second) g.generators.push_back(g.space->encode(m));

  detail::closure(g, omega ? 2 * cap : cap);
  if (omega) {
    std::vector<Key> kept;
    for (Key k : g.elements)
      if (nullity(F, mat_add(F, g.space->decode(k), Mat::identity(dim))) % 2 == 0) kept.push_back(k);
    g.elements = std::move(kept);
    std::vector<Key> odd, even;
    for (Key s : g.generators)
      (nullity(F, mat_add(F, g.space->decode(s), Mat::identity(dim))) % 2 ? odd : even).push_back(s);
    // Ω is generated by the even generators, their conjugates by one odd
    // generator s₀, and the products s·s₀, s₀·s.
    std::vector<Key> og;
    const MatrixSpace& S = *g.space;
    for (Key s : even) {
      og.push_back(s);
      if (!odd.empty()) og.push_back(S.mul(S.mul(odd[0], s), odd[0]));
    }
    for (Key s : odd) {
      og.push_back(S.mul(s, odd[0]));
      og.push_back(S.mul(odd[0], s));
    }
    g.generators = std::move(og);
  }
  if (Integer(static_cast<unsigned long>(g.elements.size())) != group_order(kind))
    throw Error("closure of " + family_name(kind.family) + " has " + std::to_string(g.elements.size()) +
                " elements, expected " + group_order(kind).get_str());
  return g;
}

/// Index of every element key.
inline std::unordered_map<Key, std::uint32_t> element_index(const Group& g) {
  std::unordered_map<Key, std::uint32_t> idx;
  idx.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) idx.emplace(g.elements[i], static_cast<std::uint32_t>(i));
  return idx;
}

}  // namespace orthocyc::oracle
