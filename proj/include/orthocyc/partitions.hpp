#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "orthocyc/rational.hpp"

namespace orthocyc {

class NonPositivePart : public Error {
 public:
  using Error::Error;
};

/// An integer partition stored as a nonincreasing list of positive parts.
///
/// Multiplicities are computed once at construction; the object is
/// immutable afterwards.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw NonPositivePart("partition parts must be >= 1, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    build_multiplicities();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// |λ|
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  /// l(λ)
  int length() const { return static_cast<int>(parts_.size()); }
  /// o(λ)
  int odd_parts() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; }));
  }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// m_i(λ); zero for i outside 1..largest.
  int multiplicity(int i) const {
    return (i >= 1 && i < static_cast<int>(mult_.size())) ? mult_[i] : 0;
  }
  /// Index i holds m_i(λ); index 0 is unused.
  const std::vector<int>& multiplicities() const { return mult_; }

  /// λ′ with λ′_j = m_j + m_{j+1} + …
  Partition conjugate() const {
    std::vector<int> cols;
    int running = 0;
    for (int i = largest(); i >= 1; --i) {
      running += multiplicity(i);
      cols.push_back(running);
    }
    std::reverse(cols.begin(), cols.end());
    return Partition(std::move(cols));
  }

  /// n(λ) = Σ C(λ′_j, 2) = Σ (i−1) λ_i
  long n() const {
    long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
    return s;
  }

  /// Σ (λ′_j)²
  long conjugate_square_sum() const {
    long s = 0;
    Partition c = conjugate();
    for (int x : c.parts()) s += static_cast<long>(x) * x;
    return s;
  }

  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  void build_multiplicities() {
    mult_.assign(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_) ++mult_[p];
  }

  std::vector<int> parts_;
  std::vector<int> mult_ = {0};
};

inline Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

struct PartitionStats {
  int size;
  int length;
  int odd_parts;
  long n;
  std::vector<int> multiplicities;
  Partition conjugate;
};

inline PartitionStats stats(const Partition& p) {
  return {p.size(), p.length(), p.odd_parts(), p.n(), p.multiplicities(), p.conjugate()};
}

/// Odd parts occur with even multiplicity: the support condition for λ_{z−1}.
inline bool odd_parts_even_mult(const Partition& p) {
  for (int i = 1; i <= p.largest(); i += 2)
    if (p.multiplicity(i) % 2 != 0) return false;
  return true;
}

inline bool all_mults_even(const Partition& p) {
  for (int i = 1; i <= p.largest(); ++i)
    if (p.multiplicity(i) % 2 != 0) return false;
  return true;
}

using PartitionPredicate = std::function<bool(const Partition&)>;

namespace detail {
inline void for_each_partition_rec(int remaining, int max_part, std::vector<int>& cur,
                                   const std::function<void(const Partition&)>& f) {
  if (remaining == 0) {
    f(Partition(cur));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    for_each_partition_rec(remaining - p, p, cur, f);
    cur.pop_back();
  }
}
}  // namespace detail

/// Visits every partition of `size` in lexicographically descending order.
inline void for_each_partition(int size, const std::function<void(const Partition&)>& f) {
  if (size < 0) return;
  std::vector<int> cur;
  detail::for_each_partition_rec(size, size, cur, f);
}

inline std::vector<Partition> iter_partitions(int size, const PartitionPredicate& predicate = {}) {
  std::vector<Partition> out;
  for_each_partition(size, [&](const Partition& p) {
    if (!predicate || predicate(p)) out.push_back(p);
  });
  return out;
}

inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + "]";
}

}  // namespace orthocyc
