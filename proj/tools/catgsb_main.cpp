// Command-line front end for the catgsb shared library. Talks to the engine
// exclusively through the C API in catgsb/catgsb.h; output formatting is
// done here from the library's JSON reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "catgsb/catgsb.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string presentation;
  int max_dim = 0;
  std::string order;
  std::string format = "text";
  int threads = 1;
  long max_steps = 256;
  long max_len = -1;
  unsigned long long seed = 0;
};

void add_presentation_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--presentation", args.presentation,
                  "file path or builtin:{simplicial,cyclic,cyclic-sc}")
      ->required();
  cmd->add_option("--max-dim", args.max_dim,
                  "truncation bound for builtin presentations");
  cmd->add_option("--order", args.order,
                  "order override: deglex, simplicial or cyclic");
  cmd->add_option("--format", args.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--threads", args.threads, "engine worker threads");
  cmd->add_option("--seed", args.seed, "seed for randomized checks");
}

int report_error(int rc) {
  std::cerr << "error: " << catgsb_last_error() << "\n";
  switch (rc) {
    case CATGSB_FAIL:
    case CATGSB_ERR_LIMIT:
      return kExitMathFailure;
    default:
      return kExitUsage;
  }
}

/// Loads the presentation named by --presentation; exits via return code on
/// failure. Caller owns the handle.
int load_presentation(const CommonArgs& args, catgsb_presentation** out) {
  const std::string& src = args.presentation;
  if (src.rfind("builtin:", 0) == 0) {
    std::string family = src.substr(8);
    if (args.max_dim < 1) {
      std::cerr << "error: builtin presentations need --max-dim >= 1\n";
      return kExitUsage;
    }
    int rc = catgsb_presentation_builtin(family.c_str(), args.max_dim, out);
    if (rc != CATGSB_OK) return report_error(rc);
    return kExitOk;
  }
  std::ifstream in(src);
  if (!in) {
    std::cerr << "error: cannot read presentation file '" << src << "'\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  int rc = catgsb_presentation_parse(text.str().c_str(), out);
  if (rc != CATGSB_OK) return report_error(rc);
  return kExitOk;
}

catgsb_options make_options(const CommonArgs& args) {
  catgsb_options opts;
  catgsb_options_init(&opts);
  if (!args.order.empty()) opts.order = args.order.c_str();
  opts.threads = args.threads;
  opts.max_steps = args.max_steps;
  opts.max_len = args.max_len;
  opts.seed = args.seed;
  return opts;
}

json parse_json(char* text) {
  json j = json::parse(text);
  catgsb_string_free(text);
  return j;
}

void print_check_text(const json& j) {
  std::cout << "order: " << j["order"].get<std::string>() << "\n";
  if (!j["scope"].is_null())
    std::cout << "scope: max_dim " << j["scope"]["max_dim"]
              << ", verdicts within dim " << j["scope"]["in_scope_max_dim"]
              << "\n";
  std::cout << "relations: " << j["n_relations"] << "\n"
            << "compositions: " << j["n_compositions"] << " ("
            << j["n_in_scope"] << " in scope), trivial: " << j["n_trivial"]
            << "\n";
  for (const auto& f : j["failures"])
    std::cout << "nontrivial: (" << f["f"].get<std::string>() << ", "
              << f["g"].get<std::string>() << ") at "
              << f["w"].get<std::string>() << "  remainder "
              << f["remainder"].get<std::string>() << "\n";
  for (const auto& f : j["out_of_scope_nontrivial"])
    std::cout << "out-of-scope: (" << f["f"].get<std::string>() << ", "
              << f["g"].get<std::string>() << ") at "
              << f["w"].get<std::string>() << "\n";
  std::cout << (j["ok"].get<bool>()
                    ? "result: PASS (Grobner-Shirshov basis within scope)"
                    : "result: FAIL")
            << "\n";
}

void print_verify_text(const json& j) {
  for (const auto& c : j["checks"])
    std::cout << (c["ok"].get<bool>() ? "[pass] " : "[FAIL] ")
              << c["name"].get<std::string>() << " — "
              << c["detail"].get<std::string>() << "\n";
  std::cout << "suite " << j["suite"].get<std::string>() << " (max_dim "
            << j["max_dim"] << "): " << (j["ok"].get<bool>() ? "PASS" : "FAIL")
            << "\n";
}

void print_complete_text(const json& j) {
  for (const auto& e : j["log"]) {
    std::cout << "adjoined " << e["name"].get<std::string>() << " = "
              << e["added"].get<std::string>() << "  [from ("
              << e["from"][0].get<std::string>() << ", "
              << e["from"][1].get<std::string>() << ") at "
              << e["ambiguity"].get<std::string>() << "]\n";
    for (const auto& r : e["removed"])
      std::cout << "  displaced " << r.get<std::string>() << "\n";
  }
  std::cout << "added " << j["n_added"] << " elements; "
            << (j["completed"].get<bool>() ? "confluent" : "NOT confluent")
            << "\n";
  std::cout << "basis (" << j["basis"].size() << " elements):\n";
  for (const auto& b : j["basis"])
    std::cout << "  " << b["name"].get<std::string>() << ": "
              << b["poly"].get<std::string>() << "\n";
}

void print_trace_text(const json& t) {
  for (const auto& s : t["steps"])
    std::cout << "  - " << s["coeff"].get<std::string>() << " * "
              << s["left"].get<std::string>() << " . ["
              << s["elem"].get<std::string>() << "] . "
              << s["right"].get<std::string>() << "   (eliminates "
              << s["eliminated"].get<std::string>() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grobner-Shirshov bases for small categories"};
  app.set_version_flag("--version", catgsb_version());
  app.require_subcommand(1);

  CommonArgs args;
  std::string nf_word;
  bool nf_trace = false;
  std::string from_vertex, to_vertex;
  std::string verify_suite;

  CLI::App* cmd_parse = app.add_subcommand("parse", "validate a presentation");
  add_presentation_options(cmd_parse, args);
  bool parse_render = false;
  cmd_parse->add_flag("--render", parse_render, "echo the canonical form");

  CLI::App* cmd_check =
      app.add_subcommand("check", "check the Grobner-Shirshov property");
  add_presentation_options(cmd_check, args);

  CLI::App* cmd_complete =
      app.add_subcommand("complete", "run Shirshov completion");
  add_presentation_options(cmd_complete, args);
  cmd_complete->add_option("--max-steps", args.max_steps,
                           "cap on adjoined elements");

  CLI::App* cmd_nf = app.add_subcommand("nf", "normal form of a word");
  add_presentation_options(cmd_nf, args);
  cmd_nf->add_option("word", nf_word, "word in wire syntax")->required();
  cmd_nf->add_flag("--trace", nf_trace, "print the reduction certificate");

  CLI::App* cmd_irr =
      app.add_subcommand("irr", "list irreducible words between two objects");
  add_presentation_options(cmd_irr, args);
  cmd_irr->add_option("--from", from_vertex, "source vertex")->required();
  cmd_irr->add_option("--to", to_vertex, "target vertex")->required();
  cmd_irr->add_option("--max-len", args.max_len, "length cap");

  CLI::App* cmd_count =
      app.add_subcommand("count", "count irreducible words");
  add_presentation_options(cmd_count, args);
  cmd_count->add_option("--from", from_vertex, "source vertex")->required();
  cmd_count->add_option("--to", to_vertex, "target vertex")->required();
  cmd_count->add_option("--max-len", args.max_len, "length cap");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run a built-in verification battery");
  cmd_verify->add_option("suite", verify_suite, "simplicial or cyclic")
      ->required();
  cmd_verify->add_option("--max-dim", args.max_dim, "truncation bound")
      ->required();
  cmd_verify->add_option("--threads", args.threads, "engine worker threads");
  cmd_verify->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  const bool json_out = args.format == "json";
  catgsb_options opts = make_options(args);

  if (cmd_verify->parsed()) {
    char* out = nullptr;
    int rc = catgsb_verify(verify_suite.c_str(), args.max_dim, &opts, &out);
    if (rc != CATGSB_OK && rc != CATGSB_FAIL) return report_error(rc);
    json j = parse_json(out);
    if (json_out)
      std::cout << j.dump(2) << "\n";
    else
      print_verify_text(j);
    return rc == CATGSB_OK ? kExitOk : kExitMathFailure;
  }

  catgsb_presentation* pres = nullptr;
  if (int rc = load_presentation(args, &pres); rc != kExitOk) return rc;
  struct Guard {
    catgsb_presentation* p;
    ~Guard() { catgsb_presentation_free(p); }
  } guard{pres};

  if (cmd_parse->parsed()) {
    char* out = nullptr;
    int rc = catgsb_presentation_summary(pres, &out);
    if (rc != CATGSB_OK) return report_error(rc);
    json j = parse_json(out);
    if (json_out) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "ok: " << j["n_vertices"] << " vertices, " << j["n_edges"]
                << " edges, " << j["n_relations"] << " relations, order "
                << j["order"].get<std::string>() << "\n";
      if (parse_render) {
        char* text = nullptr;
        if (catgsb_presentation_render(pres, &text) == CATGSB_OK) {
          std::cout << text;
          catgsb_string_free(text);
        }
      }
    }
    return kExitOk;
  }

  if (cmd_check->parsed()) {
    char* out = nullptr;
    int rc = catgsb_check(pres, &opts, &out);
    if (rc != CATGSB_OK && rc != CATGSB_FAIL) return report_error(rc);
    json j = parse_json(out);
    if (json_out)
      std::cout << j.dump(2) << "\n";
    else
      print_check_text(j);
    return rc == CATGSB_OK ? kExitOk : kExitMathFailure;
  }

  if (cmd_complete->parsed()) {
    char* out = nullptr;
    int rc = catgsb_complete(pres, &opts, &out);
    if (rc != CATGSB_OK && rc != CATGSB_ERR_LIMIT) return report_error(rc);
    json j = parse_json(out);
    if (json_out)
      std::cout << j.dump(2) << "\n";
    else
      print_complete_text(j);
    return rc == CATGSB_OK ? kExitOk : kExitMathFailure;
  }

  if (cmd_nf->parsed()) {
    char* out = nullptr;
    int rc = catgsb_normal_form(pres, &opts, nf_word.c_str(),
                                nf_trace ? 1 : 0, &out);
    if (rc != CATGSB_OK) return report_error(rc);
    json j = parse_json(out);
    if (json_out) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << j["normal_form"].get<std::string>() << "\n";
      std::cout << "  = " << j["normal_form_pretty"].get<std::string>() << "  ("
                << j["n_steps"] << " steps)\n";
      if (nf_trace && j.contains("trace")) print_trace_text(j["trace"]);
    }
    return kExitOk;
  }

  if (cmd_irr->parsed()) {
    char* out = nullptr;
    int rc = catgsb_irr(pres, &opts, from_vertex.c_str(), to_vertex.c_str(),
                        &out);
    if (rc != CATGSB_OK) return report_error(rc);
    json j = parse_json(out);
    if (json_out) {
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& w : j["words"])
        std::cout << w.get<std::string>() << "\n";
      std::cout << "count: " << j["count"] << " (length <= " << j["max_len"]
                << ")\n";
    }
    return kExitOk;
  }

  if (cmd_count->parsed()) {
    unsigned long long count = 0;
    int rc = catgsb_irr_count(pres, &opts, from_vertex.c_str(),
                              to_vertex.c_str(), &count);
    if (rc != CATGSB_OK) return report_error(rc);
    if (json_out) {
      json j{{"from", from_vertex}, {"to", to_vertex}, {"count", count}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << count << "\n";
    }
    return kExitOk;
  }

  return kExitUsage;
}
