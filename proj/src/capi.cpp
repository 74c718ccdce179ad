#include "catgsb/catgsb.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "catgsb/report.hpp"
#include "catgsb/verify.hpp"
#include "catgsb/version.hpp"

using namespace catgsb;
using nlohmann::json;

struct catgsb_presentation_s {
  Presentation pres;
};

namespace {

thread_local std::string tl_last_error;

void set_error(const std::string& msg) { tl_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int emit(char** out, const json& j) {
  if (!out) return CATGSB_OK;
  *out = dup_string(j.dump(2));
  return *out ? CATGSB_OK : CATGSB_ERR_INTERNAL;
}

/// Runs the body, translating exceptions to status codes.
template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_error(e.what());
    return CATGSB_ERR_PARSE;
  } catch (const InternalError& e) {
    set_error(e.what());
    return CATGSB_ERR_INTERNAL;
  } catch (const Error& e) {
    set_error(e.what());
    return CATGSB_ERR_INVALID;
  } catch (const std::exception& e) {
    set_error(e.what());
    return CATGSB_ERR_INTERNAL;
  }
}

struct ResolvedOptions {
  std::optional<OrderKind> order;
  int threads = 1;
  long max_steps = 256;
  long max_len = -1;
  unsigned long long seed = 0;
};

ResolvedOptions resolve(const catgsb_options* opts) {
  ResolvedOptions r;
  if (!opts) return r;
  if (opts->order) {
    auto kind = order_kind_from_name(opts->order);
    if (!kind) throw Error(std::string("unknown order '") + opts->order + "'");
    r.order = kind;
  }
  if (opts->threads > 0) r.threads = opts->threads;
  if (opts->max_steps > 0) r.max_steps = opts->max_steps;
  r.max_len = opts->max_len;
  r.seed = opts->seed;
  return r;
}

json options_echo(const ResolvedOptions& r) {
  json j;
  j["order"] = r.order ? json(order_kind_name(*r.order)) : json(nullptr);
  j["threads"] = r.threads;
  j["max_steps"] = r.max_steps;
  j["max_len"] = r.max_len;
  j["seed"] = r.seed;
  return j;
}

VertexId resolve_vertex(const Presentation& p, const char* name) {
  if (!name) throw Error("missing vertex name");
  auto v = p.quiver.find_vertex(name);
  if (!v) throw Error(std::string("unknown vertex '") + name + "'");
  return *v;
}

std::size_t irr_len_for(const Presentation& p, long max_len, VertexId from,
                        VertexId to) {
  if (max_len >= 0) return static_cast<std::size_t>(max_len);
  int q = p.quiver.vertex(from).dim;
  int pp = p.quiver.vertex(to).dim;
  if (q < 0 || pp < 0)
    throw Error("max_len is required for presentations without dimensions");
  return static_cast<std::size_t>(pp + 2 * q + 2);
}

}  // namespace

extern "C" {

void catgsb_options_init(catgsb_options* opts) {
  if (!opts) return;
  opts->order = nullptr;
  opts->threads = 1;
  opts->max_steps = 256;
  opts->max_len = -1;
  opts->seed = 0;
}

const char* catgsb_version(void) { return kVersion; }

const char* catgsb_last_error(void) { return tl_last_error.c_str(); }

void catgsb_string_free(char* s) { std::free(s); }

int catgsb_presentation_parse(const char* text, catgsb_presentation** out) {
  return guarded([&] {
    if (!text || !out) throw Error("null argument");
    auto* handle = new catgsb_presentation_s{parse_presentation(text)};
    *out = handle;
    return CATGSB_OK;
  });
}

int catgsb_presentation_builtin(const char* family, int max_dim,
                                catgsb_presentation** out) {
  return guarded([&] {
    if (!family || !out) throw Error("null argument");
    std::string f = family;
    Presentation pres = [&] {
      if (f == "simplicial") return build_simplicial(max_dim);
      if (f == "cyclic") return build_cyclic(max_dim, CyclicVariant::S);
      if (f == "cyclic-sc") return build_cyclic(max_dim, CyclicVariant::SC);
      throw Error("unknown builtin family '" + f +
                  "' (expected simplicial, cyclic or cyclic-sc)");
    }();
    *out = new catgsb_presentation_s{std::move(pres)};
    return CATGSB_OK;
  });
}

void catgsb_presentation_free(catgsb_presentation* p) { delete p; }

int catgsb_presentation_render(const catgsb_presentation* p, char** out_text) {
  return guarded([&] {
    if (!p || !out_text) throw Error("null argument");
    *out_text = dup_string(render_presentation(p->pres));
    return *out_text ? CATGSB_OK : CATGSB_ERR_INTERNAL;
  });
}

int catgsb_presentation_summary(const catgsb_presentation* p,
                                char** out_json) {
  return guarded([&] {
    if (!p || !out_json) throw Error("null argument");
    json j = make_envelope("parse", json::object());
    j.update(presentation_summary_json(p->pres));
    return emit(out_json, j);
  });
}

int catgsb_check(const catgsb_presentation* p, const catgsb_options* opts,
                 char** out_json) {
  return guarded([&] {
    if (!p) throw Error("null presentation");
    ResolvedOptions r = resolve(opts);
    auto ord = p->pres.make_order(r.order);
    Basis basis(p->pres, *ord);
    CheckReport report = check_gsb(basis, r.threads);
    json j = make_envelope("check", options_echo(r));
    j.update(check_report_json(basis, report));
    int rc = emit(out_json, j);
    if (rc != CATGSB_OK) return rc;
    if (!report.ok()) {
      set_error("nontrivial compositions found");
      return CATGSB_FAIL;
    }
    return CATGSB_OK;
  });
}

int catgsb_complete(const catgsb_presentation* p, const catgsb_options* opts,
                    char** out_json) {
  return guarded([&] {
    if (!p) throw Error("null presentation");
    ResolvedOptions r = resolve(opts);
    auto ord = p->pres.make_order(r.order);
    Basis basis(p->pres, *ord);
    CompletionResult result =
        complete(basis, static_cast<std::size_t>(r.max_steps));
    json j = make_envelope("complete", options_echo(r));
    j.update(completion_json(basis, result));
    int rc = emit(out_json, j);
    if (rc != CATGSB_OK) return rc;
    if (!result.completed) {
      set_error("completion hit max_steps; result is not confluent");
      return CATGSB_ERR_LIMIT;
    }
    return CATGSB_OK;
  });
}

int catgsb_normal_form(const catgsb_presentation* p,
                       const catgsb_options* opts, const char* word,
                       int with_trace, char** out_json) {
  return guarded([&] {
    if (!p || !word) throw Error("null argument");
    ResolvedOptions r = resolve(opts);
    auto ord = p->pres.make_order(r.order);
    Basis basis(p->pres, *ord);
    Word w = parse_word(p->pres.quiver, word);
    ReductionTrace trace =
        reduce(basis, Poly::monomial(w, 1), ReduceMode::full);
    json j = make_envelope("nf", options_echo(r));
    j["word"] = render_word(p->pres.quiver, w);
    j["normal_form"] = render_poly(p->pres.quiver, trace.remainder, ord.get());
    j["normal_form_pretty"] = [&] {
      if (trace.remainder.is_zero()) return std::string("0");
      std::string s;
      for (const auto& [tw, c] : trace.remainder.terms()) {
        if (!s.empty()) s += " ; ";
        if (c != 1) s += to_string(c) + " * ";
        s += render_word_pretty(p->pres.quiver, tw);
      }
      return s;
    }();
    j["n_steps"] = trace.steps.size();
    if (with_trace) j["trace"] = trace_json(p->pres.quiver, trace);
    return emit(out_json, j);
  });
}

int catgsb_irr(const catgsb_presentation* p, const catgsb_options* opts,
               const char* from, const char* to, char** out_json) {
  return guarded([&] {
    if (!p) throw Error("null presentation");
    ResolvedOptions r = resolve(opts);
    auto ord = p->pres.make_order(r.order);
    Basis basis(p->pres, *ord);
    VertexId vf = resolve_vertex(p->pres, from);
    VertexId vt = resolve_vertex(p->pres, to);
    std::size_t len = irr_len_for(p->pres, r.max_len, vf, vt);
    auto words = irr_enumerate(basis, vf, vt, len);
    json j = make_envelope("irr", options_echo(r));
    j["from"] = p->pres.quiver.vertex(vf).name;
    j["to"] = p->pres.quiver.vertex(vt).name;
    j["max_len"] = len;
    j["count"] = words.size();
    j["words"] = json::array();
    for (const Word& w : words)
      j["words"].push_back(render_word(p->pres.quiver, w));
    return emit(out_json, j);
  });
}

int catgsb_irr_count(const catgsb_presentation* p, const catgsb_options* opts,
                     const char* from, const char* to,
                     unsigned long long* out_count) {
  return guarded([&] {
    if (!p || !out_count) throw Error("null argument");
    ResolvedOptions r = resolve(opts);
    auto ord = p->pres.make_order(r.order);
    Basis basis(p->pres, *ord);
    VertexId vf = resolve_vertex(p->pres, from);
    VertexId vt = resolve_vertex(p->pres, to);
    std::size_t len = irr_len_for(p->pres, r.max_len, vf, vt);
    *out_count = irr_count(basis, vf, vt, len);
    return CATGSB_OK;
  });
}

int catgsb_verify(const char* suite, int max_dim, const catgsb_options* opts,
                  char** out_json) {
  return guarded([&] {
    if (!suite) throw Error("null suite");
    ResolvedOptions r = resolve(opts);
    std::string s = suite;
    SuiteReport report = [&] {
      if (s == "simplicial") return verify_simplicial(max_dim, r.threads);
      if (s == "cyclic") return verify_cyclic(max_dim, r.threads);
      throw Error("unknown suite '" + s + "' (expected simplicial or cyclic)");
    }();
    json j = make_envelope("verify", options_echo(r));
    j.update(suite_report_json(report));
    int rc = emit(out_json, j);
    if (rc != CATGSB_OK) return rc;
    if (!report.ok()) {
      for (const SuiteCheck& c : report.checks)
        if (!c.ok) {
          set_error("sub-check failed: " + c.name + " (" + c.detail + ")");
          break;
        }
      return CATGSB_FAIL;
    }
    return CATGSB_OK;
  });
}

}  // extern "C"
