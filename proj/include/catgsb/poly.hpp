#pragma once

#include <map>
#include <utility>

#include "catgsb/order.hpp"
#include "catgsb/quiver.hpp"
#include "catgsb/rational.hpp"

namespace catgsb {

/// A finite linear combination of parallel words over an exact field F.
/// The zero polynomial keeps its endpoints so that "reduces to zero" stays
/// endpoint-typed. Terms are stored under a structural key; monomial-order
/// ranking is applied at use sites. Immutable-by-convention value type.
template <class F>
class BasicPoly {
public:
  using Terms = std::map<Word, F, WordKeyLess>;

  BasicPoly(VertexId source, VertexId target)
      : source_(source), target_(target) {}

  static BasicPoly monomial(const Word& w, F coeff) {
    BasicPoly p(w.source(), w.target());
    p.add_term(w, std::move(coeff));
    return p;
  }

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Adds coeff * w, pruning a resulting zero. The word must be parallel
  /// with the polynomial's endpoints.
  void add_term(const Word& w, F coeff) {
    if (w.source() != source_ || w.target() != target_)
      throw Error("term endpoints do not match the polynomial's");
    if (coeff == F()) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == F()) terms_.erase(it);
    }
  }

  friend BasicPoly operator+(const BasicPoly& f, const BasicPoly& g) {
    if (f.source_ != g.source_ || f.target_ != g.target_)
      throw Error("cannot add polynomials with different endpoints");
    BasicPoly out = f;
    for (const auto& [w, c] : g.terms_) out.add_term(w, c);
    return out;
  }
  friend BasicPoly operator-(const BasicPoly& f, const BasicPoly& g) {
    return f + g.negated();
  }

  BasicPoly negated() const {
    BasicPoly out(source_, target_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }

  BasicPoly scaled(const F& a) const {
    BasicPoly out(source_, target_);
    if (a == F()) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, a * c);
    return out;
  }

  std::pair<Word, F> leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  BasicPoly monic(const MonomialOrder& ord) const {
    auto [w, c] = leading(ord);
    return scaled(field_inverse(c));
  }

  friend bool operator==(const BasicPoly& f, const BasicPoly& g) {
    return f.source_ == g.source_ && f.target_ == g.target_ &&
           f.terms_ == g.terms_;
  }
  friend bool operator!=(const BasicPoly& f, const BasicPoly& g) {
    return !(f == g);
  }

private:
  VertexId source_;
  VertexId target_;
  Terms terms_;
};

/// a . f . b with endpoints (source(b), target(a)); requires
/// source(a) = target(f) and source(f) = target(b).
template <class F>
BasicPoly<F> mul_word(const Quiver& q, const Word& a, const BasicPoly<F>& f,
                      const Word& b) {
  if (a.source() != f.target())
    throw Error("mul_word: source of left word is " +
                q.vertex_display(a.source()) + " but polynomial target is " +
                q.vertex_display(f.target()));
  if (f.source() != b.target())
    throw Error("mul_word: polynomial source is " +
                q.vertex_display(f.source()) + " but target of right word is " +
                q.vertex_display(b.target()));
  BasicPoly<F> out(b.source(), a.target());
  for (const auto& [w, c] : f.terms())
    out.add_term(compose(q, a, compose(q, w, b)), c);
  return out;
}

using Poly = BasicPoly<Rational>;

}  // namespace catgsb
