#pragma once

#include <string>

#include "orthocyc/partitions.hpp"
#include "orthocyc/poly.hpp"
#include "orthocyc/rational.hpp"

namespace orthocyc {

class BadDimension : public Error {
 public:
  using Error::Error;
};

class HalfPowerExposure : public Error {
 public:
  using Error::Error;
};

enum class Family { GL, U, Sp, Oplus, Ominus, OmegaPlus, OmegaMinus, Odd };

/// A concrete finite group. For Sp, O± and Ω± the dimension is the even
/// ambient dimension 2n; Odd is O_{2n+1}(q) with dimension 2n+1.
struct GroupKind {
  Family family;
  int dimension;
  long q;
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::U: return "U";
    case Family::Sp: return "Sp";
    case Family::Oplus: return "O+";
    case Family::Ominus: return "O-";
    case Family::OmegaPlus: return "Omega+";
    case Family::OmegaMinus: return "Omega-";
    case Family::Odd: return "O";
  }
  return "?";
}

/// |GL_n(Q)| = Q^{n(n−1)/2} Π_{i=1..n} (Q^i − 1), for any nonzero integer Q
/// (negative Q is used for unitary groups). |GL_0| = 1.
inline Integer gl_order(int n, const Integer& Q) {
  Integer r = ipow(Q, static_cast<unsigned long>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) r *= ipow(Q, i) - 1;
  return r;
}

inline Integer gl_order(int n, long Q) { return gl_order(n, Integer(Q)); }

/// |U_n(Q)| = (−1)^n |GL_n(−Q)|
inline Integer unitary_order(int n, const Integer& Q) {
  Integer r = gl_order(n, Integer(-Q));
  return n % 2 ? Integer(-r) : r;
}

/// |Sp_{2n}(q)|, with |Sp_0| = 1.
inline Integer sp_order(int two_n, long q) {
  if (two_n < 0 || two_n % 2) throw BadDimension("Sp needs an even dimension");
  int n = two_n / 2;
  Integer r = ipow(q, static_cast<unsigned long>(n) * n);
  for (int i = 1; i <= n; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

/// |O^ε_{2n}(q)| = 2 q^{n²−n} (q^n − ε) Π_{i=1..n−1} (q^{2i} − 1)
inline Integer o_order(int epsilon, int two_n, long q) {
  if (two_n < 2 || two_n % 2) throw BadDimension("O± needs an even dimension >= 2");
  int n = two_n / 2;
  Integer r = 2 * ipow(q, static_cast<unsigned long>(n) * (n - 1));
  r *= ipow(q, n) - epsilon;
  for (int i = 1; i < n; ++i) r *= ipow(q, 2 * i) - 1;
  return r;
}

inline Integer group_order(const GroupKind& kind) {
  const long q = kind.q;
  switch (kind.family) {
    case Family::GL: return gl_order(kind.dimension, q);
    case Family::U: return unitary_order(kind.dimension, q);
    case Family::Sp: return sp_order(kind.dimension, q);
    case Family::Oplus: return o_order(+1, kind.dimension, q);
    case Family::Ominus: return o_order(-1, kind.dimension, q);
    case Family::OmegaPlus: return o_order(+1, kind.dimension, q) / 2;
    case Family::OmegaMinus: return o_order(-1, kind.dimension, q) / 2;
    case Family::Odd:
      if (kind.dimension % 2 == 0) throw BadDimension("odd orthogonal group needs an odd dimension");
      return sp_order(kind.dimension - 1, q);
  }
  throw Error("unknown group family");
}

namespace detail {
// 2·[Σ_{h<i} h m_h m_i + ½ Σ_i (i−1) m_i²]
inline long doubled_b_exponent(const Partition& lambda) {
  long s = 0;
  long prefix = 0;  // Σ_{h<i} h m_h
  for (int i = 1; i <= lambda.largest(); ++i) {
    long m = lambda.multiplicity(i);
    s += 2 * prefix * m + static_cast<long>(i - 1) * m * m;
    prefix += static_cast<long>(i) * m;
  }
  return s;
}
}  // namespace detail

/// B(φ, λ) for a self-conjugate φ ≠ z−1 of even degree d:
/// q^{d·[Σ_{h<i} h m_h m_i + ½Σ(i−1)m_i²]} Π_i |U_{m_i}(q^{d/2})|
inline Integer b_self_conjugate(int degree, const Partition& lambda, long q) {
  if (degree % 2) throw Error("self-conjugate polynomials other than z-1 have even degree");
  long e2 = degree * detail::doubled_b_exponent(lambda);
  Integer r = ipow(q, static_cast<unsigned long>(e2 / 2));
  Integer Q = ipow(q, degree / 2);
  for (int i = 1; i <= lambda.largest(); ++i) r *= unitary_order(lambda.multiplicity(i), Q);
  return r;
}

/// B(φ, λ)·B(φ*, λ) for a conjugate pair of degree d:
/// q^{2d·[…]} Π_i |GL_{m_i}(q^d)|
inline Integer b_pair(int degree, const Partition& lambda, long q) {
  long e2 = degree * detail::doubled_b_exponent(lambda);
  Integer r = ipow(q, static_cast<unsigned long>(e2));
  Integer Q = ipow(q, degree);
  for (int i = 1; i <= lambda.largest(); ++i) r *= gl_order(lambda.multiplicity(i), Q);
  return r;
}

/// A(φ, λ, i) for self-conjugate φ: |U_{m_i(λ)}(q^{deg φ/2})|. The unpaired
/// value for φ ≠ φ* is a square root and is never returned.
inline Integer a_factor(const FqField& F, const Poly& phi, const Partition& lambda, int i) {
  if (phi == z_minus_one(F)) throw Error("A is not defined for z-1");
  if (!is_self_conjugate(F, phi))
    throw HalfPowerExposure("A(phi, lambda, i) for phi != phi* is |GL|^(1/2); use a_pair_factor");
  return unitary_order(lambda.multiplicity(i), ipow(F.q(), phi.degree() / 2));
}

/// A(φ,λ,i)·A(φ*,λ,i) = |GL_{m_i(λ)}(q^{deg φ})| for φ ≠ φ*.
inline Integer a_pair_factor(const FqField& F, const Poly& phi, const Partition& lambda, int i) {
  return gl_order(lambda.multiplicity(i), ipow(F.q(), phi.degree()));
}

inline Integer b_factor(const FqField& F, const Poly& phi, const Partition& lambda) {
  if (phi == z_minus_one(F)) throw Error("B is not defined for z-1");
  if (!is_self_conjugate(F, phi)) throw HalfPowerExposure("unpaired B(phi, lambda) for phi != phi*; use b_pair_factor");
  return b_self_conjugate(phi.degree(), lambda, F.q());
}

inline Integer b_pair_factor(const FqField& F, const Poly& phi, const Partition& lambda) {
  if (is_self_conjugate(F, phi)) throw Error("b_pair_factor needs phi != phi*");
  return b_pair(phi.degree(), lambda, F.q());
}

/// Centralizer order in GL_{|λ|}(q) of a unipotent element of Jordan type λ:
/// q^{Σ(λ′_i)²} Π_i Π_{k=1..m_i} (1 − q^{−k})
inline Integer gl_unip_centralizer(const Partition& lambda, long q) {
  long e = lambda.conjugate_square_sum();
  Integer r = 1;
  for (int i = 1; i <= lambda.largest(); ++i) {
    int m = lambda.multiplicity(i);
    e -= static_cast<long>(m) * (m + 1) / 2;
    for (int k = 1; k <= m; ++k) r *= ipow(q, k) - 1;
  }
  return r * ipow(q, static_cast<unsigned long>(e));
}

}  // namespace orthocyc
