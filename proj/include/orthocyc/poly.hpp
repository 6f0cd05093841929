#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "orthocyc/field.hpp"

namespace orthocyc {

class ZeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// Monic polynomial over F_q, coefficients stored low to high.
///
/// Identity is the coefficient vector. Ordering is by degree, then by the
/// coefficient vector read from the top down; this is the enumeration order
/// used throughout.
struct Poly {
  std::vector<Elem> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Elem constant() const { return coeffs.empty() ? 0 : coeffs.front(); }

  bool operator==(const Poly&) const = default;
  bool operator<(const Poly& o) const {
    if (coeffs.size() != o.coeffs.size()) return coeffs.size() < o.coeffs.size();
    return std::lexicographical_compare(coeffs.rbegin(), coeffs.rend(), o.coeffs.rbegin(), o.coeffs.rend());
  }
};

/// z − 1 (equal to z + 1 in characteristic 2).
inline Poly z_minus_one(const FqField& F) { return Poly{{F.neg(1), 1}}; }
inline Poly z_poly() { return Poly{{0, 1}}; }

inline Poly poly_from_code(const FqField& F, long code, int degree) {
  Poly p;
  p.coeffs.assign(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    p.coeffs[i] = static_cast<Elem>(code % F.q());
    code /= F.q();
  }
  p.coeffs[degree] = 1;
  return p;
}

namespace detail {
inline void trim(std::vector<Elem>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace detail

inline std::vector<Elem> poly_mul(const FqField& F, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  detail::trim(r);
  return r;
}

/// Remainder of a modulo the monic polynomial m.
inline std::vector<Elem> poly_rem(const FqField& F, std::vector<Elem> a, const Poly& m) {
  int d = m.degree();
  detail::trim(a);
  for (int top = static_cast<int>(a.size()) - 1; top >= d; --top) {
    Elem lead = a[top];
    if (!lead) continue;
    for (int i = 0; i <= d; ++i) a[top - d + i] = F.sub(a[top - d + i], F.mul(lead, m.coeffs[i]));
  }
  if (static_cast<int>(a.size()) > d) a.resize(d);
  detail::trim(a);
  return a;
}

inline bool divides(const FqField& F, const Poly& d, const Poly& f) { return poly_rem(F, f.coeffs, d).empty(); }

/// φ* = φ(0)^{-1} z^{deg φ} φ(1/z)
inline Poly star(const FqField& F, const Poly& phi) {
  if (phi.constant() == 0) throw ZeroConstantTerm("star requires a nonzero constant term");
  Elem c = F.inv(phi.constant());
  Poly r;
  r.coeffs.assign(phi.coeffs.rbegin(), phi.coeffs.rend());
  for (auto& x : r.coeffs) x = F.mul(x, c);
  return r;
}

inline bool is_self_conjugate(const FqField& F, const Poly& phi) { return phi.constant() != 0 && star(F, phi) == phi; }

/// Monic irreducibles over a fixed field, computed on demand and cached.
///
/// Not thread-safe; give each thread its own catalog.
class IrreducibleCatalog {
 public:
  explicit IrreducibleCatalog(const FqField& field) : F_(field) {}

  const FqField& field() const { return F_; }

  /// Every monic irreducible of degree d, in canonical order.
  const std::vector<Poly>& of_degree(int d) {
    if (d < 1) throw Error("degree must be >= 1");
    auto it = by_degree_.find(d);
    if (it != by_degree_.end()) return it->second;
    std::vector<Poly> out;
    long count = 1;
    for (int i = 0; i < d; ++i) count *= F_.q();
    for (long code = 0; code < count; ++code) {
      Poly f = poly_from_code(F_, code, d);
      if (is_irreducible(f)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return by_degree_.emplace(d, std::move(out)).first->second;
  }

  /// Self-conjugate irreducibles of degree d, including z − 1 at d = 1.
  ///
  /// Even degrees are found among palindromic candidates with constant
  /// term 1; odd degrees above 1 have none.
  const std::vector<Poly>& self_conjugate(int d) {
    auto it = self_conj_.find(d);
    if (it != self_conj_.end()) return it->second;
    std::vector<Poly> out;
    if (d == 1) {
      for (const auto& p : of_degree(1))
        if (is_self_conjugate(F_, p)) out.push_back(p);
    } else if (d % 2 == 0) {
      int e = d / 2;
      long count = 1;
      for (int i = 0; i < e; ++i) count *= F_.q();
      for (long code = 0; code < count; ++code) {
        Poly f;
        f.coeffs.assign(static_cast<std::size_t>(d) + 1, 0);
        f.coeffs[0] = 1;
        f.coeffs[d] = 1;
        long c = code;
        for (int i = 1; i <= e; ++i) {
          Elem v = static_cast<Elem>(c % F_.q());
          c /= F_.q();
          f.coeffs[i] = v;
          f.coeffs[d - i] = v;
        }
        if (is_irreducible(f)) out.push_back(std::move(f));
      }
      std::sort(out.begin(), out.end());
    }
    return self_conj_.emplace(d, std::move(out)).first->second;
  }

  /// One representative φ < φ* of each conjugate pair {φ, φ*} of degree d.
  const std::vector<Poly>& pair_representatives(int d) {
    auto it = pairs_.find(d);
    if (it != pairs_.end()) return it->second;
    std::vector<Poly> out;
    for (const auto& p : of_degree(d)) {
      if (p.constant() == 0) continue;
      Poly s = star(F_, p);
      if (p < s) out.push_back(p);
    }
    return pairs_.emplace(d, std::move(out)).first->second;
  }

  bool is_irreducible(const Poly& f) {
    int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d)
      for (const auto& g : of_degree(d))
        if (divides(F_, g, f)) return false;
    return true;
  }

 private:
  const FqField& F_;
  std::map<int, std::vector<Poly>> by_degree_, self_conj_, pairs_;
};

inline std::vector<Poly> irreducibles(long q, int d) {
  FqField F(q);
  IrreducibleCatalog cat(F);
  return cat.of_degree(d);
}

/// N*(q;d) by enumeration: self-conjugate monic irreducibles of degree d
/// (z excluded, z − 1 included at d = 1).
inline long n_star(long q, int d) {
  FqField F(q);
  IrreducibleCatalog cat(F);
  long n = 0;
  for (const auto& p : cat.of_degree(d)) n += is_self_conjugate(F, p) ? 1 : 0;
  return n;
}

/// M*(q;d) by enumeration: unordered pairs {φ, φ*} with φ ≠ φ*.
inline long m_star(long q, int d) {
  FqField F(q);
  IrreducibleCatalog cat(F);
  return static_cast<long>(cat.pair_representatives(d).size());
}

namespace detail {
inline int mobius(long n) {
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}
}  // namespace detail

/// Number of monic irreducibles of degree d over F_q (necklace formula).
inline Integer irreducible_count(long q, int d) {
  Integer s = 0;
  for (long e : detail::divisors(d)) s += detail::mobius(d / e) * ipow(q, static_cast<unsigned long>(e));
  return s / d;
}

/// N*(q;d) in closed form. Roots of a self-conjugate irreducible of degree
/// 2e are exactly the elements of degree 2e with α^{q^e+1} = 1; counting
/// them by Möbius inversion over the subfields F_{q^f}, f | 2e.
inline Integer n_star_count(long q, int d) {
  auto [p, k] = prime_power_decompose(q);
  (void)k;
  if (d == 1) return p == 2 ? 1 : 2;
  if (d % 2 != 0) return 0;
  long e = d / 2;
  Integer target = ipow(q, static_cast<unsigned long>(e)) + 1;
  Integer s = 0;
  for (long f : detail::divisors(d)) {
    int mu = detail::mobius(d / f);
    if (!mu) continue;
    Integer g;
    Integer qf = ipow(q, static_cast<unsigned long>(f)) - 1;
    mpz_gcd(g.get_mpz_t(), target.get_mpz_t(), qf.get_mpz_t());
    s += mu * g;
  }
  return s / d;
}

inline Integer m_star_count(long q, int d) {
  Integer rest = irreducible_count(q, d) - n_star_count(q, d) - (d == 1 ? 1 : 0);
  return rest / 2;
}

inline std::string to_string(const Poly& p) {
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    int c = p.coeffs[i];
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += "z";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace orthocyc
