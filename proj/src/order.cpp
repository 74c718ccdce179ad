#include "catgsb/order.hpp"

#include <charconv>

namespace catgsb {

std::string order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::deglex: return "deglex";
    case OrderKind::simplicial: return "simplicial";
    case OrderKind::cyclic: return "cyclic";
  }
  return "?";
}

std::optional<OrderKind> order_kind_from_name(std::string_view name) {
  if (name == "deglex") return OrderKind::deglex;
  if (name == "simplicial") return OrderKind::simplicial;
  if (name == "cyclic") return OrderKind::cyclic;
  return std::nullopt;
}

DegLexOrder::DegLexOrder(const Quiver& q, std::vector<EdgeId> ranked_desc)
    : quiver_(&q), rank_(q.edge_count(), -1) {
  int pos = 0;
  for (EdgeId e : ranked_desc) {
    q.edge(e);
    if (rank_[static_cast<std::size_t>(e)] != -1)
      throw Error("deglex rank lists edge '" + q.edge(e).name + "' twice");
    rank_[static_cast<std::size_t>(e)] = pos++;
  }
}

std::strong_ordering DegLexOrder::compare(const Word& u, const Word& v) const {
  if (u.size() != v.size())
    return u.size() < v.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  for (std::size_t k = 0; k < u.size(); ++k) {
    EdgeId a = u.edge_at(k), b = v.edge_at(k);
    if (a == b) continue;
    int ra = rank_[static_cast<std::size_t>(a)];
    int rb = rank_[static_cast<std::size_t>(b)];
    if (ra < 0)
      throw Error("deglex: edge '" + quiver_->edge(a).name + "' has no rank");
    if (rb < 0)
      throw Error("deglex: edge '" + quiver_->edge(b).name + "' has no rank");
    // Lower rank position = bigger edge.
    return ra < rb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (u.source() != v.source())
    return u.source() < v.source() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  if (u.target() != v.target())
    return u.target() < v.target() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::optional<FamilyGen> parse_generator_name(std::string_view name) {
  if (name.size() < 4 || name.back() != ')') return std::nullopt;
  char head = name[0];
  if (name[1] != '(') return std::nullopt;
  std::string_view body = name.substr(2, name.size() - 3);
  if (head == 'T') {
    int level;
    if (!parse_int(body, level) || level < 0) return std::nullopt;
    return FamilyGen{FamilyGen::Fam::t, level, 0};
  }
  if (head != 'E' && head != 'H') return std::nullopt;
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  int level, index;
  if (!parse_int(body.substr(0, comma), level) ||
      !parse_int(body.substr(comma + 1), index))
    return std::nullopt;
  if (level < 0 || index < 0 || index > level) return std::nullopt;
  return FamilyGen{head == 'E' ? FamilyGen::Fam::eps : FamilyGen::Fam::eta,
                   level, index};
}

FamilyOrder::FamilyOrder(const Quiver& q, bool cyclic)
    : quiver_(&q), cyclic_(cyclic) {
  gens_.reserve(q.edge_count());
  for (const Edge& e : q.edges()) {
    auto gen = parse_generator_name(e.name);
    if (!gen)
      throw Error("edge '" + e.name +
                  "' does not follow the E(p,i)/H(q,j)/T(q) naming scheme "
                  "required by the " +
                  order_kind_name(kind()) + " order");
    gens_.push_back(*gen);
  }
}

namespace {

struct TRun {
  int exp = 0;
  int level = -1;
};

// A maximal {t, eta} run: w0 h1 w1 ... hm wm.
struct Factor {
  std::vector<TRun> runs;   // size etas.size() + 1
  std::vector<int> etas;    // edge positions of eta letters, left to right
};

struct Weight {
  std::vector<Factor> factors;  // size eps.size() + 1
  std::vector<int> eps;         // edge positions of eps letters, left to right
};

std::strong_ordering cmp_int(int a, int b) {
  if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// eps_p^i > eps_q^j iff p > q or (p = q and i < j); eta identical.
std::strong_ordering cmp_gen(const FamilyGen& a, const FamilyGen& b) {
  if (a.level != b.level) return cmp_int(a.level, b.level);
  return cmp_int(b.index, a.index);
}

std::strong_ordering cmp_run(const TRun& a, const TRun& b) {
  if (a.exp != b.exp) return cmp_int(a.exp, b.exp);
  if (a.exp == 0) return std::strong_ordering::equal;
  return cmp_int(a.level, b.level);
}

}  // namespace

std::strong_ordering FamilyOrder::compare(const Word& u, const Word& v) const {
  auto weight = [&](const Word& w) {
    Weight wt;
    wt.factors.push_back(Factor{{TRun{}}, {}});
    for (EdgeId e : w.edges()) {
      const FamilyGen& g = gens_[static_cast<std::size_t>(e)];
      switch (g.fam) {
        case FamilyGen::Fam::eps:
          wt.eps.push_back(e);
          wt.factors.push_back(Factor{{TRun{}}, {}});
          break;
        case FamilyGen::Fam::eta:
          wt.factors.back().etas.push_back(e);
          wt.factors.back().runs.push_back(TRun{});
          break;
        case FamilyGen::Fam::t: {
          if (!cyclic_)
            throw Error("word contains non-simplicial edge '" +
                        quiver_->edge(e).name + "'");
          TRun& r = wt.factors.back().runs.back();
          if (r.exp == 0) r.level = g.level;
          ++r.exp;
          break;
        }
      }
    }
    return wt;
  };

  auto cmp_factor = [&](const Factor& a, const Factor& b) {
    if (a.etas.size() != b.etas.size())
      return cmp_int(static_cast<int>(a.etas.size()),
                     static_cast<int>(b.etas.size()));
    for (std::size_t k = 0; k < a.runs.size(); ++k) {
      auto c = cmp_run(a.runs[k], b.runs[k]);
      if (c != std::strong_ordering::equal) return c;
    }
    // Eta letters compare right-to-left (the reversed reading in the weight).
    for (std::size_t k = a.etas.size(); k-- > 0;) {
      auto c = cmp_gen(gens_[static_cast<std::size_t>(a.etas[k])],
                       gens_[static_cast<std::size_t>(b.etas[k])]);
      if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
  };

  Weight wu = weight(u), wv = weight(v);
  if (wu.eps.size() != wv.eps.size())
    return cmp_int(static_cast<int>(wu.eps.size()),
                   static_cast<int>(wv.eps.size()));
  for (std::size_t k = 0; k < wu.factors.size(); ++k) {
    auto c = cmp_factor(wu.factors[k], wv.factors[k]);
    if (c != std::strong_ordering::equal) return c;
  }
  for (std::size_t k = 0; k < wu.eps.size(); ++k) {
    auto c = cmp_gen(gens_[static_cast<std::size_t>(wu.eps[k])],
                     gens_[static_cast<std::size_t>(wv.eps[k])]);
    if (c != std::strong_ordering::equal) return c;
  }
  // Equal weights reconstruct the same edge sequence; only identity anchors
  // can still differ.
  if (u.source() != v.source())
    return u.source() < v.source() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  if (u.target() != v.target())
    return u.target() < v.target() ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::pair<Word, Word> orient_relation(const MonomialOrder& ord,
                                      const Word& lhs, const Word& rhs) {
  if (lhs.source() != rhs.source() || lhs.target() != rhs.target())
    throw Error("cannot orient a relation between non-parallel words");
  auto c = ord.compare(lhs, rhs);
  if (c == std::strong_ordering::equal)
    throw Error("cannot orient a relation with equal sides");
  if (c == std::strong_ordering::greater) return {lhs, rhs};
  return {rhs, lhs};
}

std::unique_ptr<MonomialOrder> make_order(OrderKind kind, const Quiver& q,
                                          std::vector<EdgeId> deglex_rank) {
  switch (kind) {
    case OrderKind::deglex: {
      if (deglex_rank.empty())
        for (const Edge& e : q.edges()) deglex_rank.push_back(e.id);
      return std::make_unique<DegLexOrder>(q, std::move(deglex_rank));
    }
    case OrderKind::simplicial:
      return std::make_unique<FamilyOrder>(q, false);
    case OrderKind::cyclic:
      return std::make_unique<FamilyOrder>(q, true);
  }
  throw Error("unknown order kind");
}

}  // namespace catgsb
