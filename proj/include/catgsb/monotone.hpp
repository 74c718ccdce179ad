#pragma once

#include <vector>

#include "catgsb/quiver.hpp"

namespace catgsb {

/// A weakly monotone map [q] -> [p], the concrete model of a simplicial
/// morphism: values has length q+1 with entries in [0..p] and
/// values[i] <= values[i+1].
class MonotoneMap {
public:
  MonotoneMap(int domain_dim, int codomain_dim, std::vector<int> values);
  static MonotoneMap identity(int q);

  int domain_dim() const { return q_; }
  int codomain_dim() const { return p_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j)]; }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.q_ == b.q_ && a.p_ == b.p_ && a.values_ == b.values_;
  }
  friend bool operator!=(const MonotoneMap& a, const MonotoneMap& b) {
    return !(a == b);
  }
  friend bool operator<(const MonotoneMap& a, const MonotoneMap& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.values_ < b.values_;
  }

private:
  int q_;
  int p_;
  std::vector<int> values_;
};

/// The face map eps_q^i : [q-1] -> [q]:  j |-> j if i > j, else j+1.
MonotoneMap face_map(int q, int i);

/// The degeneracy map eta_q^i : [q+1] -> [q]:  j |-> j if i >= j, else j-1.
MonotoneMap degeneracy_map(int q, int i);

/// outer . inner (inner applied first).
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

/// Evaluates a word of E/H edges as a monotone map, applicative order;
/// identity words give identity maps. Rejects non-simplicial edges.
MonotoneMap eval_word(const Quiver& q, const Word& w);

/// All monotone maps [q] -> [p] by brute force over all (p+1)^(q+1)
/// functions with a monotonicity filter; deliberately takes no
/// combinatorial shortcut so it can serve as an independent oracle.
std::vector<MonotoneMap> enumerate_monotone(int q, int p);

/// The canonical factorization of mu as
/// E(p,i1)...E(p-m+1,im) . H(q-n,j1)...H(q-1,jn) with the i's the missing
/// values of the image in strictly decreasing order and the j's the
/// positions with mu(j) = mu(j+1) in strictly increasing order. The quiver
/// must contain the required E/H edges.
Word factorize(const Quiver& q, const MonotoneMap& mu);

}  // namespace catgsb
