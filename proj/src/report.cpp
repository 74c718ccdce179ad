#include "catgsb/report.hpp"

#include "catgsb/version.hpp"

namespace catgsb {

using nlohmann::json;

json make_envelope(const std::string& command, json config) {
  json j;
  j["tool"] = "catgsb";
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

namespace {

std::string family_name(Family f) {
  switch (f) {
    case Family::none: return "none";
    case Family::simplicial: return "simplicial";
    case Family::cyclic: return "cyclic";
  }
  return "?";
}

}  // namespace

json presentation_summary_json(const Presentation& p) {
  json j;
  j["n_vertices"] = p.quiver.vertex_count();
  j["n_edges"] = p.quiver.edge_count();
  j["n_relations"] = p.relations.size();
  j["order"] = order_kind_name(p.default_order);
  j["family"] = family_name(p.family);
  if (p.family != Family::none) j["max_dim"] = p.max_dim;
  return j;
}

json check_report_json(const Basis& basis, const CheckReport& r) {
  const Quiver& q = basis.quiver();
  json j;
  j["order"] = basis.order().name();
  if (basis.family() != Family::none) {
    j["scope"] = {{"family", family_name(basis.family())},
                  {"max_dim", basis.max_dim()},
                  {"in_scope_max_dim", basis.max_dim() - 2}};
  } else {
    j["scope"] = nullptr;
  }
  j["n_relations"] = r.n_relations;
  j["n_compositions"] = r.n_compositions;
  j["n_in_scope"] = r.n_in_scope;
  j["n_trivial"] = r.n_trivial;
  auto entry_json = [&](const CheckEntry& e) {
    return json{{"f", basis.element(e.f_index).name},
                {"g", basis.element(e.g_index).name},
                {"kind", e.kind == OverlapKind::inclusion ? "inclusion"
                                                          : "intersection"},
                {"w", render_word(q, e.ambiguity)},
                {"remainder", render_poly(q, e.remainder, &basis.order())}};
  };
  j["failures"] = json::array();
  for (const CheckEntry& e : r.failures) j["failures"].push_back(entry_json(e));
  j["out_of_scope_nontrivial"] = json::array();
  for (const CheckEntry& e : r.out_of_scope_nontrivial)
    j["out_of_scope_nontrivial"].push_back(entry_json(e));
  j["elapsed"] = r.elapsed_seconds;
  j["ok"] = r.ok();
  return j;
}

json completion_json(const Basis& after, const CompletionResult& r) {
  const Quiver& q = after.quiver();
  json j;
  j["completed"] = r.completed;
  j["n_added"] = r.n_added;
  j["log"] = json::array();
  for (const CompletionLogEntry& e : r.log) {
    json removed = json::array();
    for (const std::string& s : e.removed) removed.push_back(s);
    j["log"].push_back(json{{"name", e.name},
                            {"added", render_poly(q, e.added, &after.order())},
                            {"from", {e.from_f, e.from_g}},
                            {"ambiguity", render_word(q, e.ambiguity)},
                            {"removed", removed}});
  }
  j["basis"] = json::array();
  for (std::size_t i = 0; i < after.size(); ++i)
    j["basis"].push_back(
        json{{"name", after.element(i).name},
             {"poly", render_poly(q, after.element(i).poly, &after.order())}});
  return j;
}

json trace_json(const Quiver& q, const ReductionTrace& t) {
  json j;
  j["source"] = q.vertex(t.input.source()).name;
  j["target"] = q.vertex(t.input.target()).name;
  j["input"] = render_poly(q, t.input);
  j["remainder"] = render_poly(q, t.remainder);
  j["steps"] = json::array();
  for (const TraceStep& s : t.steps)
    j["steps"].push_back(json{{"coeff", to_string(s.coeff)},
                              {"left", render_word(q, s.left)},
                              {"elem_index", s.elem_index},
                              {"elem", render_poly(q, s.elem)},
                              {"right", render_word(q, s.right)},
                              {"eliminated", render_word(q, s.eliminated)}});
  return j;
}

namespace {

Poly poly_from_text(const Quiver& q, const std::string& text, VertexId src,
                    VertexId tgt) {
  if (text == "0") return Poly(src, tgt);
  return parse_poly(q, text);
}

}  // namespace

ReductionTrace trace_from_json(const Quiver& q, const json& j) {
  auto src = q.find_vertex(j.at("source").get<std::string>());
  auto tgt = q.find_vertex(j.at("target").get<std::string>());
  if (!src || !tgt) throw Error("trace references unknown vertices");
  ReductionTrace t{poly_from_text(q, j.at("input").get<std::string>(), *src, *tgt),
                   {},
                   poly_from_text(q, j.at("remainder").get<std::string>(), *src,
                                  *tgt)};
  for (const json& js : j.at("steps")) {
    t.steps.push_back(TraceStep{
        rational_from_string(js.at("coeff").get<std::string>()),
        parse_word(q, js.at("left").get<std::string>()),
        js.at("elem_index").get<std::size_t>(),
        parse_poly(q, js.at("elem").get<std::string>()),
        parse_word(q, js.at("right").get<std::string>()),
        parse_word(q, js.at("eliminated").get<std::string>())});
  }
  return t;
}

json suite_report_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["max_dim"] = r.max_dim;
  j["checks"] = json::array();
  for (const SuiteCheck& c : r.checks)
    j["checks"].push_back(
        json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["ok"] = r.ok();
  j["elapsed"] = r.elapsed_seconds;
  return j;
}

}  // namespace catgsb
