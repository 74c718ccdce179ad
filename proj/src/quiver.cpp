#include "catgsb/quiver.hpp"

#include <algorithm>

namespace catgsb {

VertexId Quiver::add_vertex(std::string name, int dim) {
  if (vertex_by_name_.count(name))
    throw Error("duplicate vertex name '" + name + "'");
  VertexId id = static_cast<VertexId>(vertices_.size());
  vertex_by_name_.emplace(name, id);
  vertices_.push_back(Vertex{id, std::move(name), dim});
  return id;
}

EdgeId Quiver::add_edge(std::string name, VertexId source, VertexId target,
                        std::string display) {
  if (edge_by_name_.count(name))
    throw Error("duplicate edge name '" + name + "'");
  if (source < 0 || static_cast<std::size_t>(source) >= vertices_.size() ||
      target < 0 || static_cast<std::size_t>(target) >= vertices_.size())
    throw Error("edge '" + name + "' references an unregistered vertex");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edge_by_name_.emplace(name, id);
  edges_.push_back(Edge{id, std::move(name), source, target, std::move(display)});
  return id;
}

const Vertex& Quiver::vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
    throw Error("unknown vertex id " + std::to_string(v));
  return vertices_[static_cast<std::size_t>(v)];
}

const Edge& Quiver::edge(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= edges_.size())
    throw Error("unknown edge id " + std::to_string(e));
  return edges_[static_cast<std::size_t>(e)];
}

std::optional<VertexId> Quiver::find_vertex(std::string_view name) const {
  auto it = vertex_by_name_.find(std::string(name));
  if (it == vertex_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Quiver::find_edge(std::string_view name) const {
  auto it = edge_by_name_.find(std::string(name));
  if (it == edge_by_name_.end()) return std::nullopt;
  return it->second;
}

std::string Quiver::vertex_display(VertexId v) const {
  const Vertex& vx = vertex(v);
  if (vx.dim >= 0) return "[" + std::to_string(vx.dim) + "]";
  return vx.name;
}

Word Word::of_edge(const Quiver& q, EdgeId e) {
  const Edge& ed = q.edge(e);
  return Word(ed.source, ed.target, {e});
}

Word Word::from_edges(const Quiver& q, std::vector<EdgeId> edges) {
  if (edges.empty())
    throw Error("from_edges: empty edge list (use Word::identity)");
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const Edge& cur = q.edge(edges[k]);
    const Edge& next = q.edge(edges[k + 1]);
    if (next.target != cur.source)
      throw Error("edges not composable at position " + std::to_string(k) +
                  ": target of '" + next.name + "' is " +
                  q.vertex_display(next.target) + " but source of '" +
                  cur.name + "' is " + q.vertex_display(cur.source));
  }
  VertexId src = q.edge(edges.back()).source;
  VertexId tgt = q.edge(edges.front()).target;
  return Word(src, tgt, std::move(edges));
}

VertexId Word::boundary(const Quiver& q, std::size_t k) const {
  if (k > edges_.size()) throw Error("boundary: cut position out of range");
  if (edges_.empty()) return source_;
  if (k == edges_.size()) return source_;
  return q.edge(edges_[k]).target;
}

Word Word::subword(const Quiver& q, std::size_t first, std::size_t last) const {
  if (first > last || last > edges_.size())
    throw Error("subword: invalid range");
  if (first == last) return Word::identity(boundary(q, first));
  std::vector<EdgeId> sub(edges_.begin() + static_cast<std::ptrdiff_t>(first),
                          edges_.begin() + static_cast<std::ptrdiff_t>(last));
  VertexId src = q.edge(sub.back()).source;
  VertexId tgt = q.edge(sub.front()).target;
  return Word(src, tgt, std::move(sub));
}

int Word::key_compare(const Word& a, const Word& b) {
  if (a.edges_.size() != b.edges_.size())
    return a.edges_.size() < b.edges_.size() ? -1 : 1;
  for (std::size_t k = 0; k < a.edges_.size(); ++k)
    if (a.edges_[k] != b.edges_[k]) return a.edges_[k] < b.edges_[k] ? -1 : 1;
  if (a.source_ != b.source_) return a.source_ < b.source_ ? -1 : 1;
  if (a.target_ != b.target_) return a.target_ < b.target_ ? -1 : 1;
  return 0;
}

Word compose(const Quiver& q, const Word& left, const Word& right) {
  if (left.source() != right.target())
    throw Error("cannot compose: source of left word is " +
                q.vertex_display(left.source()) +
                " but target of right word is " +
                q.vertex_display(right.target()));
  if (left.is_identity()) return right;
  if (right.is_identity()) return left;
  std::vector<EdgeId> edges;
  edges.reserve(left.size() + right.size());
  edges.insert(edges.end(), left.edges().begin(), left.edges().end());
  edges.insert(edges.end(), right.edges().begin(), right.edges().end());
  return Word::from_edges(q, std::move(edges));
}

std::vector<Occurrence> find_subword_occurrences(const Quiver& q,
                                                 const Word& haystack,
                                                 const Word& needle) {
  if (needle.is_identity())
    throw Error("find_subword_occurrences: identity needle rejected");
  std::vector<Occurrence> out;
  if (needle.size() > haystack.size()) return out;
  const std::size_t n = haystack.size();
  const std::size_t m = needle.size();
  for (std::size_t start = 0; start + m <= n; ++start) {
    bool match = true;
    for (std::size_t k = 0; k < m; ++k)
      if (haystack.edge_at(start + k) != needle.edge_at(k)) {
        match = false;
        break;
      }
    if (!match) continue;
    out.push_back(Occurrence{haystack.subword(q, 0, start),
                             haystack.subword(q, start + m, n), start});
  }
  return out;
}

std::vector<Overlap> overlap_pairs(const Quiver& q, const Word& u,
                                   const Word& v) {
  if (u.is_identity() || v.is_identity())
    throw Error("overlap_pairs: identity words rejected");
  std::vector<Overlap> out;
  // Inclusions: v occurs inside u, so w = u = a.v.b.
  for (const Occurrence& occ : find_subword_occurrences(q, u, v))
    out.push_back(Overlap{u, occ.prefix, occ.suffix, OverlapKind::inclusion});
  // Intersections: a nonempty proper overlap c with u = a.c, v = c.b and
  // |c| < |u|, |c| < |v|, so w = u.b = a.v.
  const std::size_t max_c = std::min(u.size(), v.size()) - 1;
  for (std::size_t c = max_c; c >= 1; --c) {
    bool match = true;
    for (std::size_t k = 0; k < c; ++k)
      if (u.edge_at(u.size() - c + k) != v.edge_at(k)) {
        match = false;
        break;
      }
    if (!match) continue;
    Word a = u.subword(q, 0, u.size() - c);
    Word b = v.subword(q, c, v.size());
    out.push_back(Overlap{compose(q, u, b), a, b, OverlapKind::intersection});
  }
  return out;
}

void walk_words(const Quiver& q, VertexId from, VertexId to,
                std::size_t max_len,
                const std::function<bool(EdgeId, std::size_t)>& enter,
                const std::function<void(const Word&)>& emit) {
  q.vertex(from);
  q.vertex(to);
  const std::size_t nv = q.vertex_count();
  // incoming[v]: edges with target v, ascending by id (lexicographic order).
  std::vector<std::vector<EdgeId>> incoming(nv);
  for (const Edge& e : q.edges()) incoming[static_cast<std::size_t>(e.target)].push_back(e.id);
  // reach[r][v]: there is a word of length exactly r from `from` to v.
  std::vector<std::vector<char>> reach(max_len + 1, std::vector<char>(nv, 0));
  reach[0][static_cast<std::size_t>(from)] = 1;
  for (std::size_t r = 1; r <= max_len; ++r)
    for (const Edge& e : q.edges())
      if (reach[r - 1][static_cast<std::size_t>(e.source)])
        reach[r][static_cast<std::size_t>(e.target)] = 1;

  std::vector<EdgeId> buf;
  std::function<void(VertexId, std::size_t, std::size_t)> dfs =
      [&](VertexId open, std::size_t depth, std::size_t len) {
        if (depth == len) {
          if (len == 0)
            emit(Word::identity(from));
          else
            emit(Word::from_edges(q, buf));
          return;
        }
        for (EdgeId e : incoming[static_cast<std::size_t>(open)]) {
          const Edge& ed = q.edge(e);
          if (!reach[len - depth - 1][static_cast<std::size_t>(ed.source)])
            continue;
          if (!enter(e, depth)) continue;
          buf.push_back(e);
          dfs(ed.source, depth + 1, len);
          buf.pop_back();
        }
      };

  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len == 0) {
      if (from == to) emit(Word::identity(from));
      continue;
    }
    if (!reach[len][static_cast<std::size_t>(to)]) continue;
    dfs(to, 0, len);
  }
}

std::vector<Word> enumerate_words(const Quiver& q, VertexId from, VertexId to,
                                  std::size_t max_len) {
  std::vector<Word> out;
  walk_words(
      q, from, to, max_len, [](EdgeId, std::size_t) { return true; },
      [&](const Word& w) { out.push_back(w); });
  return out;
}

std::optional<int> word_max_dim(const Quiver& q, const Word& w) {
  int best = -1;
  auto feed = [&](VertexId v) {
    int d = q.vertex(v).dim;
    if (d < 0) best = -2;  // poisoned: some vertex lacks a dimension
    if (best != -2 && d > best) best = d;
  };
  feed(w.source());
  feed(w.target());
  for (EdgeId e : w.edges()) {
    feed(q.edge(e).source);
    feed(q.edge(e).target);
  }
  if (best == -2) return std::nullopt;
  return best;
}

}  // namespace catgsb
