#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "orthocyc/cycleindex.hpp"
#include "orthocyc/oracle/group.hpp"

namespace orthocyc::oracle {

namespace detail {
// f / d for d dividing f exactly (d monic).
inline Poly poly_div_exact(const FqField& F, const Poly& f, const Poly& d) {
  std::vector<Elem> r = f.coeffs;
  std::vector<Elem> quot(f.degree() - d.degree() + 1, 0);
  for (int i = f.degree() - d.degree(); i >= 0; --i) {
    Elem c = r[i + d.degree()];
    quot[i] = c;
    if (!c) continue;
    for (int j = 0; j <= d.degree(); ++j) r[i + j] = F.sub(r[i + j], F.mul(c, d.coeffs[j]));
  }
  return Poly{quot};
}
}  // namespace detail

/// Rational canonical form data of an invertible g, from the factorization of
/// its characteristic polynomial and the nullities of φ(g)^j.
inline RcfData rcf_extract(IrreducibleCatalog& cat, const Mat& g) {
  const FqField& F = cat.field();
  Poly rest = charpoly(F, g);
  RcfData data;
  for (int d = 1; d <= rest.degree(); ++d) {
    for (const auto& phi : cat.of_degree(d)) {
      int e = 0;
      while (rest.degree() >= d && divides(F, phi, rest)) {
        rest = detail::poly_div_exact(F, rest, phi);
        ++e;
      }
      if (!e) continue;
      if (phi.constant() == 0) throw Error("rcf_extract needs an invertible matrix");
      Mat p = poly_eval(F, phi, g);
      Mat pj = p;
      std::vector<int> dual;
      int prev = 0;
      for (int j = 1; j <= e; ++j) {
        int null = nullity(F, pj);
        if (null == prev) break;
        dual.push_back((null - prev) / d);
        prev = null;
        pj = mat_mul(F, pj, p);
      }
      if (prev != e * d) throw Error("nullity sequence does not match the characteristic polynomial");
      data.set(phi, Partition(std::move(dual)).conjugate());
    }
  }
  if (rest.degree() != 0 || data.dimension() != g.n) throw Error("characteristic polynomial did not factor");
  return data;
}

/// Element counts per rational canonical form data.
struct ClassTable {
  std::map<RcfData, Integer> counts;
  Integer total = 0;

  Rational proportion(const RcfData& d) const {
    auto it = counts.find(d);
    return it == counts.end() ? Rational(0) : frac(it->second, total);
  }
};

inline ClassTable empirical_class_table(const Group& g) {
  IrreducibleCatalog cat(g.F());
  ClassTable t;
  for (Key k : g.elements) {
    t.counts[rcf_extract(cat, g.space->decode(k))] += 1;
    t.total += 1;
  }
  return t;
}

/// Keeps only the elements with l(λ_{z−1}) even; proportions are still
/// relative to the full group, so Ω-proportions are twice these.
inline ClassTable omega_filter(const FqField& F, const ClassTable& t) {
  ClassTable r;
  r.total = t.total;
  const Poly z1 = z_minus_one(F);
  for (const auto& [d, c] : t.counts)
    if (d.at(z1).length() % 2 == 0) r.counts.emplace(d, c);
  return r;
}

inline bool is_unipotent(const MatrixSpace& S, Key g) {
  // char 2: the packed key of g − 1 is g XOR 1
  Key n = g ^ S.identity();
  for (int p = 1; p < S.dim(); p *= 2) n = S.mul(n, n);
  return n == 0;
}

struct ConjugacyClass {
  Key representative;  // first element of the class in group order
  std::size_t size;
};

/// Orbits under conjugation by the generators, on the elements accepted by
/// `keep` (which must be a union of classes).
inline std::vector<ConjugacyClass> conjugacy_classes(const Group& g, const std::function<bool(Key)>& keep = {}) {
  const MatrixSpace& S = *g.space;
  std::vector<Key> elems;
  for (Key k : g.elements)
    if (!keep || keep(k)) elems.push_back(k);
  std::unordered_map<Key, std::uint32_t> idx;
  idx.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], static_cast<std::uint32_t>(i));

  std::vector<std::pair<Key, Key>> conj;  // (h, h⁻¹)
  for (Key h : g.generators) {
    Key p = h, prev = S.identity();
    while (p != S.identity()) {
      prev = p;
      p = S.mul(p, h);
    }
    conj.emplace_back(h, prev);
  }

  std::vector<std::uint32_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [h, hinv] : conj) {
      auto it = idx.find(S.mul(S.mul(h, elems[i]), hinv));
      if (it == idx.end()) throw Error("conjugation left the selected elements");
      std::uint32_t a = find(static_cast<std::uint32_t>(i)), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<std::uint32_t, std::size_t> sizes;
  for (std::size_t i = 0; i < elems.size(); ++i) ++sizes[find(static_cast<std::uint32_t>(i))];
  std::vector<ConjugacyClass> out;
  for (const auto& [root, n] : sizes) out.push_back({elems[root], n});
  return out;
}

struct FixedForms {
  long plus = 0;
  long minus = 0;
};

/// Whether the form Q⁺ + Σ d_i x_i² is of plus type: its Arf invariant
/// Σ d_{2i−1}d_{2i} lies in {z² + z}.
inline bool diagonal_shift_is_plus(const FqField& F, const Vec& d) {
  Elem arf = 0;
  for (std::size_t i = 0; i + 1 < d.size(); i += 2) arf = F.add(arf, F.mul(d[i], d[i + 1]));
  for (int z = 0; z < F.q(); ++z)
    if (F.add(F.mul(z, z), z) == arf) return true;
  return false;
}

/// The forms polarized to the standard symplectic form that g fixes, by type.
///
/// These forms are Q⁺ + Σ d_i x_i²; g fixes one exactly when
/// Σ_k g_ki² d_k + d_i = Q⁺(g e_i) for all i, an affine system in d.
inline FixedForms fixed_forms_by_type(const FqField& F, const Mat& g) {
  const int n = g.n;
  QuadraticForm q0 = standard_form(F, 1, n);
  Mat m(n);
  Vec b(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) m(i, k) = F.mul(g(k, i), g(k, i));
    m(i, i) = F.add(m(i, i), 1);
    b[i] = q0(F, g.column(i));
  }
  FixedForms r;
  auto sol = solve(F, m, b);
  if (!sol) return r;
  const int dim = static_cast<int>(sol->kernel.size());
  for_each_vector(F, dim, [&](const Vec& c) {
    Vec d = sol->particular;
    for (int j = 0; j < dim; ++j)
      if (c[j])
        for (int i = 0; i < n; ++i) d[i] = F.add(d[i], F.mul(c[j], sol->kernel[j][i]));
    (diagonal_shift_is_plus(F, d) ? r.plus : r.minus) += 1;
  });
  return r;
}

/// The action of g ∈ O_{2n+1}(q) on V / rad, V = F_q^{2n+1}, rad = ⟨e_{2n+1}⟩.
inline Mat radical_quotient(const Mat& g) {
  const int n = g.n - 1;
  for (int i = 0; i < n; ++i)
    if (g(i, n)) throw Error("matrix does not fix the radical");
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = g(i, j);
  return r;
}

}  // namespace orthocyc::oracle
