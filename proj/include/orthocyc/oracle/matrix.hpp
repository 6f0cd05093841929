#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthocyc/field.hpp"
#include "orthocyc/poly.hpp"

namespace orthocyc::oracle {

using Key = std::uint64_t;
using Vec = std::vector<Elem>;

/// Dense square matrix over F_q, row-major. Matrices act on column vectors.
struct Mat {
  int n = 0;
  std::vector<Elem> e;

  Mat() = default;
  explicit Mat(int dim) : n(dim), e(static_cast<std::size_t>(dim) * dim, 0) {}
  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  Elem& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
  Elem operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const Mat&) const = default;

  Vec column(int j) const {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (*this)(i, j);
    return v;
  }
};

inline Mat mat_mul(const FqField& F, const Mat& a, const Mat& b) {
  Mat r(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      Elem x = a(i, k);
      if (!x) continue;
      for (int j = 0; j < a.n; ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
    }
  return r;
}

inline Mat mat_add(const FqField& F, const Mat& a, const Mat& b) {
  Mat r(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = F.add(a.e[i], b.e[i]);
  return r;
}

inline Mat mat_scale(const FqField& F, const Mat& a, Elem c) {
  Mat r(a.n);
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = F.mul(c, a.e[i]);
  return r;
}

inline Vec mat_vec(const FqField& F, const Mat& a, const Vec& v) {
  Vec r(a.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) r[i] = F.add(r[i], F.mul(a(i, j), v[j]));
  return r;
}

/// φ(g) by Horner's rule.
inline Mat poly_eval(const FqField& F, const Poly& phi, const Mat& g) {
  Mat r(g.n);
  for (int i = phi.degree(); i >= 0; --i) {
    r = mat_mul(F, r, g);
    for (int d = 0; d < g.n; ++d) r(d, d) = F.add(r(d, d), phi.coeffs[i]);
  }
  return r;
}

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
inline std::vector<int> row_reduce(const FqField& F, std::vector<Vec>& rows, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Elem inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Elem f = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(const FqField& F, const Mat& a) {
  std::vector<Vec> rows(a.n);
  for (int i = 0; i < a.n; ++i) rows[i].assign(a.e.begin() + i * a.n, a.e.begin() + (i + 1) * a.n);
  return static_cast<int>(row_reduce(F, rows, a.n).size());
}

inline int nullity(const FqField& F, const Mat& a) { return a.n - rank(F, a); }

/// Solution set {x : a·x = b} as a particular solution plus a kernel basis.
struct AffineSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

inline std::optional<AffineSolution> solve(const FqField& F, const Mat& a, const Vec& b) {
  const int n = a.n;
  std::vector<Vec> rows(n);
  for (int i = 0; i < n; ++i) {
    rows[i].assign(a.e.begin() + i * n, a.e.begin() + (i + 1) * n);
    rows[i].push_back(b[i]);
  }
  auto pivots = row_reduce(F, rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  AffineSolution s;
  s.particular.assign(n, 0);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    s.particular[pivots[r]] = rows[r][n];
  }
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(rows[r][f]);
    s.kernel.push_back(std::move(v));
  }
  return s;
}

/// Characteristic polynomial det(zI − g) via reduction to upper Hessenberg
/// form.
inline Poly charpoly(const FqField& F, Mat h) {
  const int n = h.n;
  for (int m = 1; m < n - 1; ++m) {
    int p = m;
    while (p < n && h(p, m - 1) == 0) ++p;
    if (p == n) continue;
    if (p != m) {
      for (int j = 0; j < n; ++j) std::swap(h(p, j), h(m, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, p), h(i, m));
    }
    Elem inv = F.inv(h(m, m - 1));
    for (int i = m + 1; i < n; ++i) {
      Elem f = F.mul(h(i, m - 1), inv);
      if (!f) continue;
      for (int j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(f, h(m, j)));
      for (int j = 0; j < n; ++j) h(j, m) = F.add(h(j, m), F.mul(f, h(j, i)));
    }
  }
  // p_k = charpoly of the leading k×k block
  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {1};
  for (int k = 1; k <= n; ++k) {
    // p_k = (z − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}
    std::vector<Elem> r(k + 1, 0);
    for (int d = 0; d < k; ++d) {
      r[d + 1] = F.add(r[d + 1], p[k - 1][d]);
      r[d] = F.sub(r[d], F.mul(h(k - 1, k - 1), p[k - 1][d]));
    }
    Elem prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      if (!prod) break;
      Elem c = F.mul(h(i - 1, k - 1), prod);
      for (std::size_t d = 0; d < p[i - 1].size(); ++d) r[d] = F.sub(r[d], F.mul(c, p[i - 1][d]));
    }
    p[k] = std::move(r);
  }
  return Poly{p[n]};
}

/// Packs matrices into 64-bit keys, log2(q) bits per entry; multiplication
/// works directly on keys (bit operations when q = 2).
class MatrixSpace {
 public:
  MatrixSpace(int dim, const FqField& field) : n_(dim), F_(field) {
    if (field.characteristic() != 2) throw UnsupportedField("matrix keys need characteristic 2");
    bits_ = field.degree();
    if (dim * dim * bits_ > 64)
      throw Error("matrix of dimension " + std::to_string(dim) + " over F_" + std::to_string(field.q()) +
                  " does not fit a 64-bit key");
  }

  int dim() const { return n_; }
  const FqField& field() const { return F_; }

  Key encode(const Mat& m) const {
    Key k = 0;
    for (int i = n_ * n_ - 1; i >= 0; --i) k = (k << bits_) | m.e[i];
    return k;
  }

  Mat decode(Key k) const {
    Mat m(n_);
    const Key mask = (Key{1} << bits_) - 1;
    for (int i = 0; i < n_ * n_; ++i) {
      m.e[i] = static_cast<Elem>(k & mask);
      k >>= bits_;
    }
    return m;
  }

  Key identity() const { return encode(Mat::identity(n_)); }

  Key mul(Key a, Key b) const {
    if (bits_ == 1) {
      const Key row_mask = (Key{1} << n_) - 1;
      Key r = 0;
      for (int i = 0; i < n_; ++i) {
        Key row_a = (a >> (i * n_)) & row_mask;
        Key acc = 0;
        while (row_a) {
          int j = __builtin_ctzll(row_a);
          acc ^= (b >> (j * n_)) & row_mask;
          row_a &= row_a - 1;
        }
        r |= acc << (i * n_);
      }
      return r;
    }
    return encode(mat_mul(F_, decode(a), decode(b)));
  }

 private:
  int n_;
  const FqField& F_;
  int bits_;
};

}  // namespace orthocyc::oracle
