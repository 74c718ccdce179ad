#include "catgsb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "catgsb/monotone.hpp"

namespace catgsb {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int r = 1; r <= n; ++r)
    for (int c = r; c >= 1; --c) row[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(c - 1)];
  return row[static_cast<std::size_t>(k)];
}

bool in_scope_poly(const Basis& basis, const Poly& f) {
  for (const auto& [w, c] : f.terms())
    if (!basis.in_scope(w)) return false;
  return true;
}

namespace {

std::size_t default_irr_len(int q, int p) {
  return static_cast<std::size_t>(p + 2 * q + 2);
}

/// Checks the eps-desc / eta-asc (/ t-power) normal-form shape.
bool normal_form_shape_ok(const Quiver& quiver, const Word& w, bool cyclic) {
  int phase = 0;  // 0 = eps block, 1 = eta block, 2 = t block
  int last_eps_index = -1, last_eps_level = -1;
  int last_eta_index = -1, last_eta_level = -1;
  int t_level = -1;
  int t_count = 0;
  for (EdgeId e : w.edges()) {
    auto g = parse_generator_name(quiver.edge(e).name);
    if (!g) return false;
    switch (g->fam) {
      case FamilyGen::Fam::eps:
        if (phase > 0) return false;
        if (last_eps_level >= 0 &&
            (g->level != last_eps_level - 1 || g->index >= last_eps_index))
          return false;
        last_eps_level = g->level;
        last_eps_index = g->index;
        break;
      case FamilyGen::Fam::eta:
        if (phase > 1) return false;
        phase = 1;
        if (last_eta_level >= 0 &&
            (g->level != last_eta_level + 1 || g->index <= last_eta_index))
          return false;
        last_eta_level = g->level;
        last_eta_index = g->index;
        break;
      case FamilyGen::Fam::t:
        if (!cyclic) return false;
        phase = 2;
        if (t_level >= 0 && g->level != t_level) return false;
        t_level = g->level;
        ++t_count;
        break;
    }
  }
  int q = quiver.vertex(w.source()).dim;
  if (t_count > 0 && (t_level != q || t_count > q)) return false;
  return true;
}

struct CheckCollector {
  std::vector<SuiteCheck> checks;
  void add(std::string name, bool ok, std::string detail) {
    checks.push_back(SuiteCheck{std::move(name), ok, std::move(detail)});
  }
};

std::string count_summary(const CheckReport& r) {
  std::ostringstream os;
  os << r.n_compositions << " compositions (" << r.n_in_scope << " in scope), "
     << r.n_trivial << " trivial, " << r.failures.size() << " failures";
  return os.str();
}

}  // namespace

SuiteReport verify_simplicial(int max_dim, int threads) {
  if (max_dim < 1) throw Error("verify: max_dim must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  CheckCollector cc;

  Presentation pres = build_simplicial(max_dim);
  auto ord = pres.make_order();
  Basis basis(pres, *ord);

  // At max_dim 1 the two relations have no ambiguities at all, which is a
  // vacuous pass; from 2 on the scan must find compositions.
  CheckReport check = check_gsb(basis, threads);
  cc.add("gsb_check", check.ok() && (max_dim < 2 || check.n_compositions > 0),
         count_summary(check));

  {
    bool ok = true;
    std::string detail = std::to_string(pres.relations.size()) + " relations";
    for (const Relation& r : pres.relations)
      if (eval_word(pres.quiver, r.lhs) != eval_word(pres.quiver, r.rhs)) {
        ok = false;
        detail = "relation " + r.name + " fails in the monotone-map model";
        break;
      }
    cc.add("relation_soundness", ok, detail);
  }

  {
    bool bij_ok = true, shape_ok = true, count_ok = true;
    std::string bij_detail, shape_detail, count_detail;
    std::uint64_t pairs = 0;
    for (int q = 0; q <= max_dim - 1 && bij_ok && shape_ok && count_ok; ++q)
      for (int p = 0; p <= max_dim - 1; ++p) {
        VertexId vq = *pres.quiver.find_vertex(std::to_string(q));
        VertexId vp = *pres.quiver.find_vertex(std::to_string(p));
        auto irr = irr_enumerate(basis, vq, vp, default_irr_len(q, p));
        auto maps = enumerate_monotone(q, p);
        ++pairs;
        if (irr.size() != maps.size() ||
            static_cast<std::uint64_t>(maps.size()) !=
                binomial(p + q + 1, q + 1)) {
          count_ok = false;
          count_detail = "([" + std::to_string(q) + "]->[" + std::to_string(p) +
                         "]): irr=" + std::to_string(irr.size()) +
                         " maps=" + std::to_string(maps.size()) + " binom=" +
                         std::to_string(binomial(p + q + 1, q + 1));
          break;
        }
        std::set<MonotoneMap> seen;
        for (const Word& w : irr) {
          MonotoneMap mu = eval_word(pres.quiver, w);
          if (!seen.insert(mu).second || factorize(pres.quiver, mu) != w) {
            bij_ok = false;
            bij_detail = "word " + render_word(pres.quiver, w) +
                         " breaks the bijection at ([" + std::to_string(q) +
                         "]->[" + std::to_string(p) + "])";
            break;
          }
          if (!normal_form_shape_ok(pres.quiver, w, false)) {
            shape_ok = false;
            shape_detail =
                "word " + render_word(pres.quiver, w) + " has a bad shape";
            break;
          }
        }
        if (bij_ok && seen.size() != maps.size()) {
          bij_ok = false;
          bij_detail = "image not onto at ([" + std::to_string(q) + "]->[" +
                       std::to_string(p) + "])";
        }
        if (!bij_ok || !shape_ok) break;
      }
    std::string range = std::to_string(pairs) + " hom-sets, p,q <= " +
                        std::to_string(max_dim - 1);
    cc.add("normal_form_bijection", bij_ok, bij_ok ? range : bij_detail);
    cc.add("normal_form_shape", shape_ok, shape_ok ? range : shape_detail);
    cc.add("hom_set_counts", count_ok, count_ok ? range : count_detail);
  }

  SuiteReport report{"simplicial", max_dim, std::move(cc.checks), 0.0};
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

SuiteReport verify_cyclic(int max_dim, int threads) {
  if (max_dim < 1) throw Error("verify: max_dim must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  CheckCollector cc;

  Presentation sc = build_cyclic(max_dim, CyclicVariant::SC);
  auto ord_sc = sc.make_order();
  Basis basis_sc(sc, *ord_sc);

  CheckReport check = check_gsb(basis_sc, threads);
  cc.add("gsb_check", check.ok() && check.n_compositions > 0,
         count_summary(check));

  Presentation delta = build_simplicial(max_dim);
  auto ord_delta = delta.make_order();
  Basis basis_delta(delta, *ord_delta);

  {
    bool count_ok = true, shape_ok = true;
    std::string count_detail, shape_detail;
    std::uint64_t pairs = 0;
    for (int q = 0; q <= max_dim - 1 && count_ok && shape_ok; ++q)
      for (int p = 0; p <= max_dim - 1; ++p) {
        VertexId vq_c = *sc.quiver.find_vertex(std::to_string(q));
        VertexId vp_c = *sc.quiver.find_vertex(std::to_string(p));
        VertexId vq_d = *delta.quiver.find_vertex(std::to_string(q));
        VertexId vp_d = *delta.quiver.find_vertex(std::to_string(p));
        auto irr_c = irr_enumerate(basis_sc, vq_c, vp_c, default_irr_len(q, p));
        std::uint64_t n_d =
            irr_count(basis_delta, vq_d, vp_d, default_irr_len(q, p));
        ++pairs;
        if (irr_c.size() != static_cast<std::uint64_t>(q + 1) * n_d) {
          count_ok = false;
          count_detail = "([" + std::to_string(q) + "]->[" + std::to_string(p) +
                         "]): cyclic=" + std::to_string(irr_c.size()) +
                         " expected " + std::to_string(q + 1) + "*" +
                         std::to_string(n_d);
          break;
        }
        for (const Word& w : irr_c)
          if (!normal_form_shape_ok(sc.quiver, w, true)) {
            shape_ok = false;
            shape_detail =
                "word " + render_word(sc.quiver, w) + " has a bad shape";
            break;
          }
        if (!shape_ok) break;
      }
    std::string range = std::to_string(pairs) + " hom-sets, p,q <= " +
                        std::to_string(max_dim - 1);
    cc.add("cyclic_hom_set_counts", count_ok, count_ok ? range : count_detail);
    cc.add("cyclic_normal_form_shape", shape_ok,
           shape_ok ? range : shape_detail);
  }

  {
    // Completing the plain variant must reproduce the extended relation set
    // on the in-scope range, and nothing essentially more.
    Presentation plain = build_cyclic(max_dim, CyclicVariant::S);
    auto ord_plain = plain.make_order();
    Basis basis_plain(plain, *ord_plain);
    // Intermediate elements grow quickly with the truncation (82 adjoins at
    // max_dim 6, 226 at 7), so the runaway guard scales with it.
    std::size_t cap = 64 * static_cast<std::size_t>(max_dim + 1) *
                      static_cast<std::size_t>(max_dim + 1);
    CompletionResult comp = complete(basis_plain, cap);

    auto scoped_forms = [](const Basis& b) {
      std::vector<std::string> forms;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (in_scope_poly(b, b.element(i).poly))
          forms.push_back(render_poly(b.quiver(), b.element(i).poly, &b.order()));
      std::sort(forms.begin(), forms.end());
      return forms;
    };
    bool equal = comp.completed &&
                 scoped_forms(basis_plain) == scoped_forms(basis_sc);
    std::ostringstream detail;
    detail << comp.n_added << " elements adjoined; in-scope basis "
           << (equal ? "matches" : "differs from") << " the extended set";
    cc.add("variant_completion_matches_extended_set", equal, detail.str());

    bool member_ok = true;
    std::size_t instances = 0;
    std::string member_detail;
    for (const Relation& r : sc.relations) {
      if (r.name.rfind("rho4", 0) != 0 && r.name.rfind("rho5", 0) != 0)
        continue;
      Poly f(r.lhs.source(), r.lhs.target());
      f.add_term(r.lhs, 1);
      f.add_term(r.rhs, -1);
      // Port the polynomial onto the plain variant's quiver by edge name.
      Poly ported(f.source(), f.target());
      for (const auto& [w, cfv] : f.terms()) {
        if (w.is_identity()) {
          ported.add_term(
              Word::identity(*plain.quiver.find_vertex(
                  sc.quiver.vertex(w.source()).name)),
              cfv);
          continue;
        }
        std::vector<EdgeId> edges;
        for (EdgeId e : w.edges())
          edges.push_back(*plain.quiver.find_edge(sc.quiver.edge(e).name));
        ported.add_term(Word::from_edges(plain.quiver, std::move(edges)), cfv);
      }
      if (!in_scope_poly(basis_plain, ported)) continue;
      ++instances;
      if (!membership(basis_plain, ported).member) {
        member_ok = false;
        member_detail = r.name + " is not in the completed ideal";
        break;
      }
    }
    cc.add("derived_relation_membership", member_ok,
           member_ok ? std::to_string(instances) + " in-scope instances"
                     : member_detail);
  }

  SuiteReport report{"cyclic", max_dim, std::move(cc.checks), 0.0};
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace catgsb
