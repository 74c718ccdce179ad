#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "catgsb/aho_corasick.hpp"
#include "catgsb/poly.hpp"
#include "catgsb/presentation.hpp"

namespace catgsb {

struct BasisElement {
  Poly poly;          // monic under the basis order
  Word leading;       // cached leading word
  std::string name;
};

/// A monic relation set with a multi-pattern index over its leading words.
/// check_gsb and compositions are read-only and may run over an immutable
/// snapshot from several threads; complete() is a single-writer loop — a
/// Basis must not be mutated while any reduction holds its index.
class Basis {
public:
  /// Orients the presentation's relations under the order. Rejects
  /// relations with equal sides or an identity leading word.
  Basis(const Presentation& pres, const MonomialOrder& ord);

  /// Raw constructor for completion-internal and test use; polynomials are
  /// made monic here. Family/max_dim carry the truncation scope, if any.
  Basis(const Quiver& quiver, const MonomialOrder& ord,
        std::vector<std::pair<Poly, std::string>> elements,
        Family family = Family::none, int max_dim = 0);

  const Quiver& quiver() const { return *quiver_; }
  const MonomialOrder& order() const { return *ord_; }
  std::size_t size() const { return elements_.size(); }
  const BasisElement& element(std::size_t i) const { return elements_[i]; }
  const AhoCorasick& index() const { return index_; }

  void add_element(Poly poly, std::string name);
  void remove_element(std::size_t i);

  Family family() const { return family_; }
  int max_dim() const { return max_dim_; }
  /// Conservative truncation scope: for built-in families a word is in
  /// scope when every object it touches has dimension <= max_dim - 2, so
  /// reductions cannot run off the truncation boundary.
  bool in_scope(const Word& w) const;

  bool verified() const { return verified_; }
  void set_verified(bool v) { verified_ = v; }

private:
  void insert(Poly poly, std::string name);
  void rebuild_index();

  const Quiver* quiver_;
  const MonomialOrder* ord_;
  std::vector<BasisElement> elements_;
  AhoCorasick index_;
  Family family_ = Family::none;
  int max_dim_ = 0;
  bool verified_ = false;
};

struct TraceStep {
  Rational coeff;
  Word left;
  std::size_t elem_index;
  Poly elem;  // snapshot of the basis element, so traces replay standalone
  Word right;
  Word eliminated;  // the word a.s̄.b this step removed
};

/// Certificate that remainder == input modulo the ideal:
/// input = remainder + sum coeff_i * left_i . elem_i . right_i, with the
/// eliminated words strictly decreasing.
struct ReductionTrace {
  Poly input;
  std::vector<TraceStep> steps;
  Poly remainder;

  /// Replays the certificate with exact arithmetic.
  bool replay_ok(const Quiver& q) const;
};

enum class ReduceMode { head_only, full };

/// Rewrites f by the basis. head_only stops once the leading word has no
/// leading-word subword; full additionally normalizes every lower term, so
/// the remainder is supported on Irr(S). Deterministic tie-break: leftmost
/// occurrence, then lowest basis index.
ReductionTrace reduce(const Basis& basis, const Poly& f, ReduceMode mode);

/// Full reduction choosing uniformly among all (occurrence, element)
/// matches at every step; used to exercise confluence.
ReductionTrace reduce_randomized(const Basis& basis, const Poly& f,
                                 std::mt19937& rng);

struct Composition {
  std::size_t f_index;
  std::size_t g_index;
  OverlapKind kind;
  Word ambiguity;  // w
  Word left;       // a
  Word right;      // b
  Poly value;      // (f,g)_w
  bool in_scope;
};

/// Every inclusion/intersection ambiguity among ordered pairs of basis
/// elements (self-pairs included), each with its value computed. The
/// composition bound leading(value) < w is checked on every item.
std::vector<Composition> compositions(const Basis& basis);

struct TrivialityResult {
  bool trivial;
  ReductionTrace trace;
};

/// Full reduction of the composition value; also asserts every eliminated
/// word sits strictly below the ambiguity.
TrivialityResult is_trivial(const Basis& basis, const Composition& c);

struct CheckEntry {
  std::size_t f_index;
  std::size_t g_index;
  OverlapKind kind;
  Word ambiguity;
  Poly remainder;
};

struct CheckReport {
  std::size_t n_relations = 0;
  std::size_t n_compositions = 0;      // all ambiguities examined
  std::size_t n_in_scope = 0;
  std::size_t n_trivial = 0;
  std::vector<CheckEntry> failures;             // in-scope, nontrivial
  std::vector<CheckEntry> out_of_scope_nontrivial;
  double elapsed_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Checks every composition; nontrivial ambiguities whose word leaves the
/// truncation scope are reported separately, not as failures. Marks the
/// basis verified on success.
CheckReport check_gsb(Basis& basis, int threads = 1);

struct CompletionLogEntry {
  std::string name;
  Poly added;
  std::string from_f;
  std::string from_g;
  Word ambiguity;
  std::vector<std::string> removed;  // elements displaced by inter-reduction
};

struct CompletionResult {
  bool completed;  // false when max_steps ran out (non-confluent result)
  std::size_t n_added;
  std::vector<CompletionLogEntry> log;
};

/// Shirshov-style completion: repeatedly adjoin the fully reduced remainder
/// of the first nontrivial in-scope composition, inter-reducing old
/// elements whose leading word contains the new one.
CompletionResult complete(Basis& basis, std::size_t max_steps);

/// Words between the endpoints of length <= max_len containing no leading
/// word of the basis, by pruned DFS (automaton state threaded through the
/// search), in length-then-lexicographic order.
std::vector<Word> irr_enumerate(const Basis& basis, VertexId from, VertexId to,
                                std::size_t max_len);
std::uint64_t irr_count(const Basis& basis, VertexId from, VertexId to,
                        std::size_t max_len);

struct MembershipResult {
  bool member;
  ReductionTrace trace;
  bool basis_verified;  // false = verdict rests on an unchecked basis
};

MembershipResult membership(const Basis& basis, const Poly& f);

}  // namespace catgsb
