#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catgsb/quiver.hpp"

namespace catgsb {

enum class OrderKind { deglex, simplicial, cyclic };

std::string order_kind_name(OrderKind k);
std::optional<OrderKind> order_kind_from_name(std::string_view name);

/// Total comparator on words of one quiver satisfying the monomial law:
/// u > v implies uw > vw and wu > wv whenever the products are defined.
/// Comparability does not require matching endpoints; ties between distinct
/// identity words are broken by anchor vertex so the order stays strict.
/// Comparators are pure and freely shareable between threads.
class MonomialOrder {
public:
  virtual ~MonomialOrder() = default;

  virtual std::strong_ordering compare(const Word& u, const Word& v) const = 0;
  virtual OrderKind kind() const = 0;

  bool greater(const Word& u, const Word& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }
  bool less(const Word& u, const Word& v) const {
    return compare(u, v) == std::strong_ordering::less;
  }
  std::string name() const { return order_kind_name(kind()); }
};

/// Degree-then-left-to-right-lexicographic order; ranked_desc lists edges
/// from largest to smallest and must cover every edge that appears in a
/// compared word.
class DegLexOrder final : public MonomialOrder {
public:
  DegLexOrder(const Quiver& q, std::vector<EdgeId> ranked_desc);

  std::strong_ordering compare(const Word& u, const Word& v) const override;
  OrderKind kind() const override { return OrderKind::deglex; }

private:
  const Quiver* quiver_;
  std::vector<int> rank_;  // by edge id; -1 = unranked
};

/// Structured generator of a simplicial/cyclic quiver, parsed from the wire
/// names E(p,i), H(q,j), T(q).
struct FamilyGen {
  enum class Fam { eps, eta, t };
  Fam fam;
  int level;
  int index;  // unused for t
};

std::optional<FamilyGen> parse_generator_name(std::string_view name);

/// The weight-tuple orders on simplicial/cyclic words. A word decomposes as
/// v0 e1 v1 e2 ... en vn with the vi runs of {t, eta} letters; its weight is
/// (n, v0, ..., vn, e1, ..., en) compared lexicographically. Each factor vi
/// is in turn w0 h1 w1 ... hm wm with wi powers of a single t letter and
/// weight (m, w0, ..., wm, hm, ..., h1).
///
/// Note the factor weight reads the eta letters in REVERSED (right-to-left)
/// order while the t runs and the top-level eps letters read left-to-right;
/// this asymmetry is load-bearing and easy to misread.
///
/// Generators rank as: eps_p^i > eps_q^j  iff p > q or (p = q and i < j),
/// eta likewise, and (t_p)^i > (t_q)^j iff i > j or (i = j and p > q).
/// The simplicial variant refuses words containing t letters.
class FamilyOrder final : public MonomialOrder {
public:
  FamilyOrder(const Quiver& q, bool cyclic);

  std::strong_ordering compare(const Word& u, const Word& v) const override;
  OrderKind kind() const override {
    return cyclic_ ? OrderKind::cyclic : OrderKind::simplicial;
  }

private:
  const Quiver* quiver_;
  bool cyclic_;
  std::vector<FamilyGen> gens_;  // by edge id
};

/// Orients a relation under the order: returns (leading, trailing) with
/// leading > trailing. Throws on non-parallel or equal sides.
std::pair<Word, Word> orient_relation(const MonomialOrder& ord,
                                      const Word& lhs, const Word& rhs);

std::unique_ptr<MonomialOrder> make_order(OrderKind kind, const Quiver& q,
                                          std::vector<EdgeId> deglex_rank = {});

}  // namespace catgsb
