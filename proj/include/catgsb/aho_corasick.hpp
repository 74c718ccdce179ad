#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "catgsb/error.hpp"

namespace catgsb {

/// Multi-pattern matcher over edge-id sequences with a dense goto table;
/// pattern ids are assigned in insertion order. Built once, then read-only.
class AhoCorasick {
public:
  using State = std::int32_t;

  explicit AhoCorasick(std::size_t alphabet) : alphabet_(alphabet) {
    nodes_.push_back(Node(alphabet_));
  }

  int add_pattern(std::span<const std::int32_t> pattern) {
    if (built_) throw Error("AhoCorasick: add_pattern after build");
    if (pattern.empty()) throw Error("AhoCorasick: empty pattern");
    State s = 0;
    for (auto c : pattern) {
      State& next = nodes_[static_cast<std::size_t>(s)].go[check(c)];
      if (next < 0) {
        next = static_cast<State>(nodes_.size());
        nodes_.push_back(Node(alphabet_));
      }
      s = next;
    }
    int id = static_cast<int>(lengths_.size());
    lengths_.push_back(pattern.size());
    nodes_[static_cast<std::size_t>(s)].outputs.push_back(id);
    return id;
  }

  void build() {
    std::deque<State> queue;
    Node& root = nodes_[0];
    root.fail = 0;
    root.out_link = -1;
    root.match = !root.outputs.empty();
    for (std::size_t c = 0; c < alphabet_; ++c) {
      State s = root.go[c];
      if (s < 0) {
        root.go[c] = 0;
      } else {
        node(s).fail = 0;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      State u = queue.front();
      queue.pop_front();
      Node& nu = node(u);
      const Node& nf = node(nu.fail);
      nu.match = !nu.outputs.empty() || nf.match;
      nu.out_link = nf.outputs.empty() ? nf.out_link : nu.fail;
      for (std::size_t c = 0; c < alphabet_; ++c) {
        State v = nu.go[c];
        if (v < 0) {
          nu.go[c] = nf.go[c];
        } else {
          node(v).fail = nf.go[c];
          queue.push_back(v);
        }
      }
    }
    built_ = true;
  }

  State root() const { return 0; }

  State step(State s, std::int32_t c) const {
    return nodes_[static_cast<std::size_t>(s)].go[check(c)];
  }

  /// True when some pattern ends at this state.
  bool match_at(State s) const {
    return nodes_[static_cast<std::size_t>(s)].match;
  }

  struct Match {
    int pattern;
    std::size_t start;  // edge position at which the pattern begins
  };

  void find_all(std::span<const std::int32_t> text,
                std::vector<Match>& out) const {
    out.clear();
    State s = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
      s = step(s, text[k]);
      for (State v = first_output(s); v >= 0; v = node_c(v).out_link)
        for (int pid : node_c(v).outputs)
          out.push_back(Match{pid, k + 1 - lengths_[static_cast<std::size_t>(pid)]});
    }
  }

  std::size_t pattern_count() const { return lengths_.size(); }
  std::size_t pattern_length(int id) const {
    return lengths_[static_cast<std::size_t>(id)];
  }

private:
  struct Node {
    explicit Node(std::size_t alphabet) : go(alphabet, -1) {}
    std::vector<State> go;
    State fail = 0;
    State out_link = -1;
    bool match = false;
    std::vector<int> outputs;
  };

  std::size_t check(std::int32_t c) const {
    if (c < 0 || static_cast<std::size_t>(c) >= alphabet_)
      throw Error("AhoCorasick: symbol out of alphabet");
    return static_cast<std::size_t>(c);
  }
  Node& node(State s) { return nodes_[static_cast<std::size_t>(s)]; }
  const Node& node_c(State s) const { return nodes_[static_cast<std::size_t>(s)]; }
  State first_output(State s) const {
    const Node& n = node_c(s);
    return n.outputs.empty() ? n.out_link : s;
  }

  std::size_t alphabet_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> lengths_;
  bool built_ = false;
};

}  // namespace catgsb
