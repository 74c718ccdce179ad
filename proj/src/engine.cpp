#include "catgsb/engine.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

namespace catgsb {

namespace {

constexpr std::size_t kReductionStepLimit = 2'000'000;

}  // namespace

Basis::Basis(const Presentation& pres, const MonomialOrder& ord)
    : quiver_(&pres.quiver),
      ord_(&ord),
      index_(pres.quiver.edge_count()),
      family_(pres.family),
      max_dim_(pres.max_dim) {
  for (const Relation& r : pres.relations) {
    try {
      auto [leading, trailing] = orient_relation(ord, r.lhs, r.rhs);
      Poly p(r.lhs.source(), r.lhs.target());
      p.add_term(leading, 1);
      p.add_term(trailing, -1);
      insert(std::move(p), r.name);
    } catch (const Error& e) {
      throw Error("relation " + r.name + ": " + e.what());
    }
  }
  rebuild_index();
}

Basis::Basis(const Quiver& quiver, const MonomialOrder& ord,
             std::vector<std::pair<Poly, std::string>> elements,
             Family family, int max_dim)
    : quiver_(&quiver),
      ord_(&ord),
      index_(quiver.edge_count()),
      family_(family),
      max_dim_(max_dim) {
  for (auto& [p, name] : elements) insert(std::move(p), std::move(name));
  rebuild_index();
}

void Basis::insert(Poly poly, std::string name) {
  if (poly.is_zero())
    throw Error("basis element " + name + " is zero");
  Poly monic = poly.monic(*ord_);
  Word lw = monic.leading(*ord_).first;
  if (lw.is_identity())
    throw Error("basis element " + name +
                " has an identity leading word; it would rewrite 1_v");
  elements_.push_back(BasisElement{std::move(monic), std::move(lw), std::move(name)});
}

void Basis::rebuild_index() {
  AhoCorasick fresh(quiver_->edge_count());
  for (const BasisElement& e : elements_) fresh.add_pattern(e.leading.edges());
  fresh.build();
  index_ = std::move(fresh);
}

void Basis::add_element(Poly poly, std::string name) {
  insert(std::move(poly), std::move(name));
  rebuild_index();
  verified_ = false;
}

void Basis::remove_element(std::size_t i) {
  elements_.erase(elements_.begin() + static_cast<std::ptrdiff_t>(i));
  rebuild_index();
  verified_ = false;
}

bool Basis::in_scope(const Word& w) const {
  if (family_ == Family::none) return true;
  auto d = word_max_dim(*quiver_, w);
  if (!d) return true;
  return *d <= max_dim_ - 2;
}

bool ReductionTrace::replay_ok(const Quiver& q) const {
  Poly acc = remainder;
  for (const TraceStep& s : steps)
    acc = acc + mul_word(q, s.left, s.elem, s.right).scaled(s.coeff);
  return acc == input;
}

namespace {

struct Hit {
  std::size_t elem;
  std::size_t start;
};

std::optional<Hit> best_occurrence(const Basis& B, const Word& w,
                                   std::vector<AhoCorasick::Match>& scratch) {
  if (w.is_identity()) return std::nullopt;
  B.index().find_all(w.edges(), scratch);
  std::optional<Hit> best;
  for (const auto& m : scratch) {
    Hit h{static_cast<std::size_t>(m.pattern), m.start};
    if (!best || h.start < best->start ||
        (h.start == best->start && h.elem < best->elem))
      best = h;
  }
  return best;
}

ReductionTrace reduce_impl(const Basis& B, const Poly& f, ReduceMode mode,
                           std::mt19937* rng) {
  const Quiver& q = B.quiver();
  const MonomialOrder& ord = B.order();
  ReductionTrace trace{f, {}, Poly(f.source(), f.target())};
  Poly work = f;
  std::optional<Word> prev_eliminated;
  std::vector<AhoCorasick::Match> scratch;
  std::size_t guard = 0;
  while (!work.is_zero()) {
    if (++guard > kReductionStepLimit)
      throw InternalError("reduction exceeded the step limit");
    auto [lw, lc] = work.leading(ord);
    std::optional<Hit> hit;
    if (rng) {
      if (!lw.is_identity()) {
        B.index().find_all(lw.edges(), scratch);
        if (!scratch.empty()) {
          std::uniform_int_distribution<std::size_t> pick(0, scratch.size() - 1);
          const auto& m = scratch[pick(*rng)];
          hit = Hit{static_cast<std::size_t>(m.pattern), m.start};
        }
      }
    } else {
      hit = best_occurrence(B, lw, scratch);
    }
    if (!hit) {
      if (mode == ReduceMode::head_only) {
        trace.remainder = trace.remainder + work;
        break;
      }
      trace.remainder.add_term(lw, lc);
      work.add_term(lw, -lc);
      continue;
    }
    const BasisElement& el = B.element(hit->elem);
    const std::size_t len = el.leading.size();
    Word a = lw.subword(q, 0, hit->start);
    Word b = lw.subword(q, hit->start + len, lw.size());
    work = work - mul_word(q, a, el.poly, b).scaled(lc);
    // Strict descent: eliminated words decrease along the whole trace.
    if (prev_eliminated && !ord.greater(*prev_eliminated, lw))
      throw InternalError("eliminated words did not strictly decrease");
    if (!work.is_zero() && !ord.greater(lw, work.leading(ord).first))
      throw InternalError("leading word did not decrease under elimination");
    prev_eliminated = lw;
    trace.steps.push_back(TraceStep{lc, std::move(a), hit->elem, el.poly,
                                    std::move(b), lw});
  }
  return trace;
}

}  // namespace

ReductionTrace reduce(const Basis& basis, const Poly& f, ReduceMode mode) {
  return reduce_impl(basis, f, mode, nullptr);
}

ReductionTrace reduce_randomized(const Basis& basis, const Poly& f,
                                 std::mt19937& rng) {
  return reduce_impl(basis, f, ReduceMode::full, &rng);
}

std::vector<Composition> compositions(const Basis& basis) {
  const Quiver& q = basis.quiver();
  const MonomialOrder& ord = basis.order();
  std::vector<Composition> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const BasisElement& fi = basis.element(i);
      const BasisElement& gj = basis.element(j);
      for (const Overlap& o : overlap_pairs(q, fi.leading, gj.leading)) {
        if (i == j && o.kind == OverlapKind::inclusion &&
            o.prefix.is_identity() && o.suffix.is_identity())
          continue;  // f - f
        Poly value(0, 0);
        if (o.kind == OverlapKind::inclusion) {
          value = fi.poly - mul_word(q, o.prefix, gj.poly, o.suffix);
        } else {
          Word left_id = Word::identity(fi.poly.target());
          Word right_id = Word::identity(gj.poly.source());
          value = mul_word(q, left_id, fi.poly, o.suffix) -
                  mul_word(q, o.prefix, gj.poly, right_id);
        }
        if (!value.is_zero() &&
            !ord.greater(o.whole, value.leading(ord).first))
          throw InternalError("composition value is not below its ambiguity");
        bool scoped = basis.in_scope(o.whole);
        out.push_back(Composition{i, j, o.kind, o.whole, o.prefix, o.suffix,
                                  std::move(value), scoped});
      }
    }
  }
  return out;
}

TrivialityResult is_trivial(const Basis& basis, const Composition& c) {
  ReductionTrace tr = reduce(basis, c.value, ReduceMode::full);
  for (const TraceStep& s : tr.steps)
    if (!basis.order().greater(c.ambiguity, s.eliminated))
      throw InternalError("triviality certificate touched a word >= w");
  return TrivialityResult{tr.remainder.is_zero(), std::move(tr)};
}

CheckReport check_gsb(Basis& basis, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Composition> comps = compositions(basis);
  std::vector<Poly> remainders(comps.size(), Poly(0, 0));

  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k)
      remainders[k] = reduce(basis, comps[k].value, ReduceMode::full).remainder;
  };
  if (threads <= 1 || comps.size() < 2) {
    run(0, comps.size());
  } else {
    std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                           comps.size());
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::size_t chunk = (comps.size() + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
      std::size_t lo = t * chunk;
      std::size_t hi = std::min(comps.size(), lo + chunk);
      if (lo < hi)
        pool.emplace_back([&, lo, hi] {
          try {
            run(lo, hi);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  CheckReport report;
  report.n_relations = basis.size();
  report.n_compositions = comps.size();
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const Composition& c = comps[k];
    if (c.in_scope) ++report.n_in_scope;
    if (remainders[k].is_zero()) {
      ++report.n_trivial;
      continue;
    }
    CheckEntry entry{c.f_index, c.g_index, c.kind, c.ambiguity, remainders[k]};
    if (c.in_scope)
      report.failures.push_back(std::move(entry));
    else
      report.out_of_scope_nontrivial.push_back(std::move(entry));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (report.ok()) basis.set_verified(true);
  return report;
}

CompletionResult complete(Basis& basis, std::size_t max_steps) {
  CompletionResult result{true, 0, {}};
  for (;;) {
    std::vector<Composition> comps = compositions(basis);
    bool adjoined = false;
    for (const Composition& c : comps) {
      if (!c.in_scope) continue;
      ReductionTrace tr = reduce(basis, c.value, ReduceMode::full);
      if (tr.remainder.is_zero()) continue;
      if (result.n_added >= max_steps) {
        result.completed = false;
        return result;
      }
      Poly monic = tr.remainder.monic(basis.order());
      CompletionLogEntry entry{"c" + std::to_string(result.n_added + 1),
                               monic,
                               basis.element(c.f_index).name,
                               basis.element(c.g_index).name,
                               c.ambiguity,
                               {}};
      basis.add_element(std::move(monic), entry.name);
      ++result.n_added;

      // Inter-reduce: displace old elements whose leading word now contains
      // the new leading word (Shirshov's reduced-system discipline).
      // Re-added replacements are fully reduced, so they never re-trigger.
      const Word new_leading = entry.added.leading(basis.order()).first;
      for (std::size_t i = 0; i < basis.size();) {
        const BasisElement& el = basis.element(i);
        bool contains =
            el.name != entry.name && el.leading.size() >= new_leading.size() &&
            !find_subword_occurrences(basis.quiver(), el.leading, new_leading)
                 .empty();
        if (!contains) {
          ++i;
          continue;
        }
        Poly old = el.poly;
        std::string old_name = el.name;
        basis.remove_element(i);
        ReductionTrace rtr = reduce(basis, old, ReduceMode::full);
        if (rtr.remainder.is_zero()) {
          entry.removed.push_back(old_name);
        } else {
          entry.removed.push_back(old_name + " -> " + old_name + "'");
          basis.add_element(rtr.remainder.monic(basis.order()),
                            old_name + "'");
        }
      }
      result.log.push_back(std::move(entry));
      adjoined = true;
      break;
    }
    if (!adjoined) break;
  }
  basis.set_verified(true);
  return result;
}

namespace {

template <class Emit>
void irr_walk(const Basis& basis, VertexId from, VertexId to,
              std::size_t max_len, const Emit& emit) {
  const AhoCorasick& ac = basis.index();
  std::vector<AhoCorasick::State> state(max_len + 1);
  state[0] = ac.root();
  walk_words(
      basis.quiver(), from, to, max_len,
      [&](EdgeId e, std::size_t depth) {
        AhoCorasick::State s = ac.step(state[depth], e);
        if (ac.match_at(s)) return false;
        state[depth + 1] = s;
        return true;
      },
      emit);
}

}  // namespace

std::vector<Word> irr_enumerate(const Basis& basis, VertexId from, VertexId to,
                                std::size_t max_len) {
  std::vector<Word> out;
  irr_walk(basis, from, to, max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::uint64_t irr_count(const Basis& basis, VertexId from, VertexId to,
                        std::size_t max_len) {
  std::uint64_t n = 0;
  irr_walk(basis, from, to, max_len, [&](const Word&) { ++n; });
  return n;
}

MembershipResult membership(const Basis& basis, const Poly& f) {
  ReductionTrace tr = reduce(basis, f, ReduceMode::full);
  bool member = tr.remainder.is_zero();
  return MembershipResult{member, std::move(tr), basis.verified()};
}

}  // namespace catgsb
