#pragma once

#include <vector>

#include "orthocyc/oracle/matrix.hpp"
#include "orthocyc/orders.hpp"

namespace orthocyc::oracle {

/// Q(x) = Σ_{i≤j} c_ij x_i x_j, stored as an upper-triangular matrix.
struct QuadraticForm {
  Mat c;

  int dim() const { return c.n; }

  Elem operator()(const FqField& F, const Vec& x) const {
    Elem s = 0;
    for (int i = 0; i < c.n; ++i) {
      if (!x[i]) continue;
      for (int j = i; j < c.n; ++j)
        if (c(i, j) && x[j]) s = F.add(s, F.mul(c(i, j), F.mul(x[i], x[j])));
    }
    return s;
  }

  /// Gram matrix of the polarization (x, y) = Q(x+y) − Q(x) − Q(y).
  Mat gram(const FqField& F) const {
    Mat g(c.n);
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j) {
        if (i < j) g(i, j) = c(i, j);
        if (i > j) g(i, j) = c(j, i);
        if (i == j) g(i, j) = F.add(c(i, i), c(i, i));
      }
    return g;
  }
};

inline Elem bilinear(const FqField& F, const Mat& gram, const Vec& x, const Vec& y) {
  Elem s = 0;
  for (int i = 0; i < gram.n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < gram.n; ++j)
      if (gram(i, j) && y[j]) s = F.add(s, F.mul(x[i], F.mul(gram(i, j), y[j])));
  }
  return s;
}

/// The first a (in element order) with z² + z + a irreducible over F_q.
inline Elem anisotropic_constant(const FqField& F) {
  for (int a = 0; a < F.q(); ++a) {
    bool has_root = false;
    for (int z = 0; z < F.q() && !has_root; ++z) has_root = F.add(F.add(F.mul(z, z), z), a) == 0;
    if (!has_root) return static_cast<Elem>(a);
  }
  throw Error("no anisotropic constant");
}

/// Q⁺ = Σ x_{2i−1}x_{2i}; Q⁻ replaces the last pair by x² + xy + a y².
inline QuadraticForm standard_form(const FqField& F, int epsilon, int two_n) {
  if (two_n < 2 || two_n % 2) throw BadDimension("standard_form needs an even dimension >= 2");
  QuadraticForm Q{Mat(two_n)};
  for (int i = 0; i < two_n; i += 2) Q.c(i, i + 1) = 1;
  if (epsilon < 0) {
    Q.c(two_n - 2, two_n - 2) = 1;
    Q.c(two_n - 1, two_n - 1) = anisotropic_constant(F);
  }
  return Q;
}

/// Σ x_{2i−1}x_{2i} + x_{2n+1}²: polarization has a one-dimensional radical.
inline QuadraticForm odd_form(int two_n) {
  QuadraticForm Q{Mat(two_n + 1)};
  for (int i = 0; i < two_n; i += 2) Q.c(i, i + 1) = 1;
  Q.c(two_n, two_n) = 1;
  return Q;
}

/// Calls f on every vector of F_q^dim, in counting order.
template <class Fn>
void for_each_vector(const FqField& F, int dim, Fn&& f) {
  Vec v(dim, 0);
  while (true) {
    f(static_cast<const Vec&>(v));
    int i = 0;
    while (i < dim && ++v[i] == F.q()) v[i++] = 0;
    if (i == dim) return;
  }
}

inline long singular_count(const FqField& F, const QuadraticForm& Q) {
  long n = 0;
  for_each_vector(F, Q.dim(), [&](const Vec& v) { n += Q(F, v) == 0 ? 1 : 0; });
  return n - 1;
}

/// +1 or −1 for a non-degenerate form in even dimension, by counting its
/// nonzero singular vectors: (qⁿ−1)(q^{n−1}+1) for +, (qⁿ+1)(q^{n−1}−1) for −.
inline int form_type(const FqField& F, const QuadraticForm& Q) {
  const int n = Q.dim() / 2;
  long qn = 1;
  for (int i = 0; i < n; ++i) qn *= F.q();
  long plus = (qn - 1) * (qn / F.q() + 1);
  long minus = (qn + 1) * (qn / F.q() - 1);
  long s = singular_count(F, Q);
  if (s == plus) return 1;
  if (s == minus) return -1;
  throw Error("form is degenerate or of unknown type");
}

inline bool preserves(const FqField& F, const QuadraticForm& Q, const Mat& g) {
  Mat gram = Q.gram(F);
  for (int i = 0; i < g.n; ++i) {
    Vec ei(g.n, 0);
    ei[i] = 1;
    if (Q(F, g.column(i)) != Q(F, ei)) return false;
    for (int j = i + 1; j < g.n; ++j)
      if (bilinear(F, gram, g.column(i), g.column(j)) != gram(i, j)) return false;
  }
  return true;
}

inline bool preserves_bilinear(const FqField& F, const Mat& gram, const Mat& g) {
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (bilinear(F, gram, g.column(i), g.column(j)) != gram(i, j)) return false;
  return true;
}

}  // namespace orthocyc::oracle
