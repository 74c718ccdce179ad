#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catgsb/order.hpp"
#include "catgsb/poly.hpp"
#include "catgsb/quiver.hpp"

namespace catgsb {

/// One unoriented defining relation lhs = rhs between parallel words;
/// orientation happens at basis construction under the chosen order.
struct Relation {
  Word lhs;
  Word rhs;
  std::string name;
};

enum class Family { none, simplicial, cyclic };
enum class CyclicVariant { S, SC };

/// A category presentation C(X|S): quiver, relations, and a default order.
/// Built-in truncated families also record which family and the truncation
/// bound, which the engine uses to scope composition verdicts.
struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  OrderKind default_order = OrderKind::deglex;
  std::vector<EdgeId> deglex_rank;  // descending; empty = edge insertion order
  Family family = Family::none;
  int max_dim = 0;

  std::unique_ptr<MonomialOrder> make_order(
      std::optional<OrderKind> override_kind = std::nullopt) const;
};

/// Truncated simplicial presentation: vertices [0..N], faces E(p,i) for
/// 1 <= p <= N, degeneracies H(q,j) for 0 <= q <= N-1, and every f/g/h
/// relation instance whose edges exist. Default order: simplicial.
Presentation build_simplicial(int max_dim);

/// Truncated cyclic presentation: the simplicial data plus loops T(q) for
/// 0 <= q <= N and rho1..rho3 (variant S) or rho1..rho5 (variant SC).
/// rho1/rho2 range over i = 1..q; the i = 0 instances are exactly rho4/rho5
/// and only appear in variant SC. Default order: cyclic.
Presentation build_cyclic(int max_dim, CyclicVariant variant);

/// Parses the line-oriented presentation grammar:
///   vertex <name>
///   edge <name> : <src> -> <tgt>
///   rel <word> = <word>
///   order deglex <name>... | order simplicial | order cyclic
///   <word> := id(<vertex>) | <edge> ('.' <edge>)*
/// '#' starts a comment. Words are in applicative order (leftmost edge
/// applied last). Diagnostics carry line:column positions.
Presentation parse_presentation(std::string_view text);

std::string render_presentation(const Presentation& p);

// --- word / polynomial wire text ---------------------------------------
// Words render as '.'-joined edge names, identities as id(<vertex>).
// Polynomials render as coeff '*' word terms joined by ' + ' / ' - ';
// a unit coefficient is omitted. The parsers accept the same grammar.

std::string render_word(const Quiver& q, const Word& w);
std::string render_word_pretty(const Quiver& q, const Word& w);
Word parse_word(const Quiver& q, std::string_view text);

std::string render_poly(const Quiver& q, const Poly& f,
                        const MonomialOrder* ord = nullptr);
Poly parse_poly(const Quiver& q, std::string_view text);

}  // namespace catgsb
