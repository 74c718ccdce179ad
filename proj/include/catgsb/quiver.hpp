#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catgsb/error.hpp"

namespace catgsb {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// An object of the generated category. `dim` is the dimension carried by
/// the object [p] of a simplicial/cyclic presentation, or -1 when the vertex
/// has no dimension semantics.
struct Vertex {
  VertexId id;
  std::string name;
  int dim = -1;
};

/// A generating morphism. `display` is an optional human-readable alias
/// (e.g. "ε_1^0" for the wire name "E(1,0)").
struct Edge {
  EdgeId id;
  std::string name;
  VertexId source;
  VertexId target;
  std::string display;
};

/// Oriented multigraph of generators. Immutable once handed to words,
/// orders and bases; mutation is only expected during construction.
class Quiver {
public:
  VertexId add_vertex(std::string name, int dim = -1);
  EdgeId add_edge(std::string name, VertexId source, VertexId target,
                  std::string display = "");

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(VertexId v) const;
  const Edge& edge(EdgeId e) const;
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Display form of a vertex: "[p]" when it carries a dimension, else its name.
  std::string vertex_display(VertexId v) const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_by_name_;
  std::unordered_map<std::string, EdgeId> edge_by_name_;
};

/// A path of the free category, stored in applicative order: in
/// edges = [x1, ..., xn] the leftmost edge is applied last, so
/// target(word) = target(x1), source(word) = source(xn) and
/// target(x_{k+1}) = source(x_k) at every interior position. The empty
/// sequence encodes the identity 1_v anchored at a vertex.
class Word {
public:
  static Word identity(VertexId v) { return Word(v, v, {}); }
  static Word of_edge(const Quiver& q, EdgeId e);
  /// Builds a word from an applicative-order edge list, checking
  /// composability at every position. Empty lists are rejected; use
  /// identity() for 1_v.
  static Word from_edges(const Quiver& q, std::vector<EdgeId> edges);

  bool is_identity() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }
  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  std::span<const EdgeId> edges() const { return edges_; }
  EdgeId edge_at(std::size_t k) const { return edges_[k]; }

  /// The vertex sitting at cut position k (before the k-th edge);
  /// boundary(0) = target, boundary(size()) = source.
  VertexId boundary(const Quiver& q, std::size_t k) const;

  /// Contiguous subword over edge positions [first, last); an empty range
  /// yields the identity at the cut vertex.
  Word subword(const Quiver& q, std::size_t first, std::size_t last) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.edges_ == b.edges_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  /// Structural total order (length, edge ids, endpoints) used for term
  /// storage keys; unrelated to any monomial order.
  static int key_compare(const Word& a, const Word& b);

private:
  Word(VertexId src, VertexId tgt, std::vector<EdgeId> edges)
      : source_(src), target_(tgt), edges_(std::move(edges)) {}

  VertexId source_;
  VertexId target_;
  std::vector<EdgeId> edges_;
};

struct WordKeyLess {
  bool operator()(const Word& a, const Word& b) const {
    return Word::key_compare(a, b) < 0;
  }
};

/// Categorical composition left . right, defined when
/// source(left) = target(right).
Word compose(const Quiver& q, const Word& left, const Word& right);

/// One decomposition haystack = prefix . needle . suffix; `start` is the
/// edge position at which the needle begins.
struct Occurrence {
  Word prefix;
  Word suffix;
  std::size_t start;
};

/// All decompositions haystack = a . needle . b, left to right. The needle
/// must be non-identity.
std::vector<Occurrence> find_subword_occurrences(const Quiver& q,
                                                 const Word& haystack,
                                                 const Word& needle);

enum class OverlapKind { inclusion, intersection };

/// An ambiguity word between u and v:
///   inclusion:    whole = u = prefix . v . suffix
///   intersection: whole = u . suffix = prefix . v, with a nonempty overlap
///                 strictly shorter than both u and v.
struct Overlap {
  Word whole;
  Word prefix;
  Word suffix;
  OverlapKind kind;
};

std::vector<Overlap> overlap_pairs(const Quiver& q, const Word& u,
                                   const Word& v);

/// Depth-first traversal of all words from `from` to `to` of length
/// <= max_len, emitted in length-then-lexicographic order (by edge id).
/// `enter(e, depth)` is called before descending through edge e at prefix
/// depth `depth`; returning false prunes that branch.
void walk_words(const Quiver& q, VertexId from, VertexId to,
                std::size_t max_len,
                const std::function<bool(EdgeId, std::size_t)>& enter,
                const std::function<void(const Word&)>& emit);

std::vector<Word> enumerate_words(const Quiver& q, VertexId from, VertexId to,
                                  std::size_t max_len);

/// Largest object dimension touched by the word, or nullopt when some
/// visited vertex carries no dimension.
std::optional<int> word_max_dim(const Quiver& q, const Word& w);

}  // namespace catgsb
