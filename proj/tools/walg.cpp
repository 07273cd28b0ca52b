// walg: parse, normalize, compile and evaluate weighted omega grammars.
//
// Exit codes: 0 pass, 1 semantic failure, 2 usage, 3 inconclusive.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "walg/checks.hpp"
#include "walg/eval.hpp"
#include "walg/gnf.hpp"
#include "walg/io.hpp"
#include "walg/version.hpp"

#ifndef WALG_DATA_DIR
#define WALG_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
using namespace walg;

constexpr int kPass = 0, kFail = 1, kUsage = 2, kInconclusive = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Write to a sibling temporary and rename, so readers never see partial output.
void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  // devices and pipes are written in place
  if (std::filesystem::exists(*path) && !std::filesystem::is_regular_file(*path)) {
    std::ofstream f(*path, std::ios::binary);
    if (!(f << text) || !f.flush()) throw std::runtime_error("cannot write " + *path);
    return;
  }
  const std::string tmp = *path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + *path);
    f << text;
    if (!f.flush()) throw std::runtime_error("cannot write " + *path);
  }
  std::filesystem::rename(tmp, *path);
}

json tool_json() { return {{"name", "walg"}, {"version", kVersion}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

GrammarFile stage_grammar(const PipelineStage& st) {
  GrammarFile g = std::visit(
      [](const auto& s) -> GrammarFile {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, MixedSystem>) return from_mixed(s);
        else if constexpr (std::is_same_v<T, OmegaSystem>) return from_omega(s);
        else return from_algebraic(s);
      },
      st.system);
  if (const auto* m = std::get_if<MixedSystem>(&st.system)) {
    g.start = {m->x_vars[st.x_comp], m->z_vars[st.z_comp]};
  } else if (const auto* o = std::get_if<OmegaSystem>(&st.system)) {
    g.start = {o->vars[st.z_comp]};
  }
  g.buchi = st.buchi;
  return g;
}

int cmd_parse(const std::string& path, bool canonical) {
  const GrammarFile g = read_grammar(path);
  if (canonical) {
    std::cout << serialize_grammar(g);
  } else {
    json j = system_json(g);
    j["tool"] = tool_json();
    std::cout << dump(j);
  }
  return kPass;
}

struct GnfArgs {
  std::string path;
  std::string target = "mixed";
  std::optional<std::size_t> buchi;
  std::optional<std::string> component;
  std::optional<std::string> out;
  std::optional<std::string> report;
};

int cmd_gnf(const GnfArgs& a) {
  const GrammarFile g = read_grammar(a.path);
  if (g.algebraic()) throw usage_error("gnf expects a mixed or omega system");
  const GnfTarget target = a.target == "omega" ? GnfTarget::omega : GnfTarget::mixed;
  const std::size_t buchi = a.buchi ? *a.buchi : g.buchi.value_or(0);
  GnfPipelineReport r;
  if (g.mixed()) {
    const MixedSystem s = to_mixed(g);
    if (buchi > s.m()) throw usage_error("Büchi count exceeds the number of z-variables");
    r = gnf_pipeline(s, buchi, select_variable(g, Sort::x, std::nullopt),
                     select_variable(g, Sort::z, a.component), target);
  } else {
    const OmegaSystem s = to_omega(g);
    if (buchi > s.size()) throw usage_error("Büchi count exceeds the number of variables");
    r = gnf_pipeline(s, buchi, select_variable(g, Sort::y, a.component), target);
  }
  json j;
  j["tool"] = tool_json();
  j["input"] = a.path;
  j["target"] = a.target;
  j["pipeline"] = pipeline_json(r);
  const PipelineStage& last = r.stages.back();
  j["selector"] = {{"buchi", last.buchi}, {"start", stage_grammar(last).start}};
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  write_output(a.out, serialize_grammar(stage_grammar(last)));
  if (a.report) write_output(a.report, dump(j));
  else if (a.out) std::cout << dump(j);
  return kPass;
}

struct PdaArgs {
  std::string path;
  std::optional<std::string> start;
  std::optional<std::size_t> buchi;
  std::string format = "json";
  std::optional<std::string> out;
};

int cmd_build_pda(const PdaArgs& a) {
  const GrammarFile g = read_grammar(a.path);
  const BuiltPda b = build_pda(g, a.start, a.buchi);
  if (!is_zero(b.eps))
    std::cerr << "warning: epsilon coefficient " << to_string(b.eps)
              << " of the start variable is not part of the automaton\n";
  if (a.format == "dot") {
    write_output(a.out, automaton_dot(b.automaton));
  } else {
    json j = automaton_json(b.automaton);
    j["tool"] = tool_json();
    j["epsilon"] = to_string(b.eps);
    write_output(a.out, dump(j));
  }
  return kPass;
}

struct EvalArgs {
  std::string path;
  std::optional<std::string> word;
  std::optional<std::string> lasso;
  std::optional<std::size_t> maxlen;
  std::optional<std::string> component;
  std::optional<std::size_t> buchi;
  bool pda = false;
  bool as_json = false;
  std::size_t rounds = 0;
  std::size_t factor_len = 0;
  std::size_t periods = 0;
};

int cmd_eval(const EvalArgs& a) {
  const Input in = load_input(a.path);
  EvalOptions opt;
  opt.component = a.component;
  opt.buchi = a.buchi;
  opt.via_pda = a.pda;
  opt.pda.max_rounds = a.rounds;
  opt.lasso.factor_len = a.factor_len;
  opt.lasso.periods = a.periods;

  json j;
  j["tool"] = tool_json();
  j["input"] = a.path;
  j["caps"] = {{"rounds", a.rounds ? a.rounds : default_pda_rounds},
               {"factor_len", a.factor_len},
               {"periods", a.periods}};
  int code = kPass;
  std::string text;
  if (a.lasso) {
    Lasso w({}, {0});
    try {
      w = parse_lasso(in.sigma(), *a.lasso);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
    if (in.kind() == Kind::counting)
      throw std::runtime_error("omega evaluation is unsupported over the counting semiring");
    const OmegaResult r = eval_lasso(in, w, opt);
    const bool exact = r.status == Status::exact;
    j["lasso"] = *a.lasso;
    j["status"] = exact ? "exact" : "inconclusive";
    j["value"] = exact ? json(to_string(r.value)) : json(nullptr);
    j["cap_used"] = r.cap_used;
    text = exact ? to_string(r.value) + "\n" : "inconclusive\n";
    if (!exact) code = kInconclusive;
  } else if (a.word) {
    Word w;
    try {
      w = parse_word(in.sigma(), *a.word);
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
    const Value v = eval_word(in, w, opt);
    j["word"] = *a.word;
    j["value"] = to_string(v);
    text = to_string(v) + "\n";
  } else {
    j["maxlen"] = *a.maxlen;
    j["support"] = json::array();
    for (const auto& [w, c] : eval_upto(in, *a.maxlen, opt)) {
      const std::string s = show_word(in.sigma(), w);
      j["support"].push_back({s, to_string(c)});
      text += (s.empty() ? "eps" : s) + "\t" + to_string(c) + "\n";
    }
  }
  std::cout << (a.as_json ? dump(j) : text);
  return code;
}

struct CheckArgs {
  std::string suite;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cases;
  std::string golden = std::string(WALG_DATA_DIR) + "/golden.json";
  bool as_json = false;
};

int cmd_check(const CheckArgs& a) {
  SuiteReport r;
  if (a.suite == "identities") r = identity_suite(a.seed, a.cases.value_or(200));
  else if (a.suite == "oracle") r = oracle_suite(a.seed, a.cases.value_or(100));
  else r = examples_suite(a.golden);
  if (a.as_json) {
    json j = report_json(r);
    j["tool"] = tool_json();
    if (a.suite == "examples") j["golden"] = a.golden;
    std::cout << dump(j);
  } else {
    std::size_t total = 0;
    for (const auto& [name, n] : r.cases) total += n;
    for (const auto& f : r.failures) std::cout << "FAIL " << f.check << "\n" << f.detail << "\n";
    std::cout << r.suite << " (seed " << r.seed << "): " << total << " cases, "
              << r.failures.size() << " failures\n";
  }
  if (!r.passed()) return kFail;
  return r.inconclusive ? kInconclusive : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted omega-algebraic systems and simple reset pushdown automata"};
  app.set_version_flag("--version", std::string("walg ") + kVersion);
  app.require_subcommand(1);

  std::string parse_path;
  bool canonical = false;
  auto* parse = app.add_subcommand("parse", "Parse a grammar file and print a JSON summary");
  parse->add_option("file", parse_path, "grammar file")->required();
  parse->add_flag("--canonical", canonical, "print the canonical serialization instead");

  GnfArgs gnf_args;
  auto* gnf = app.add_subcommand("gnf", "Transform a selected series to Greibach normal form");
  gnf->add_option("file", gnf_args.path, "grammar file")->required();
  gnf->add_option("--target", gnf_args.target, "mixed or omega")
      ->check(CLI::IsMember({"mixed", "omega"}));
  gnf->add_option("--buchi", gnf_args.buchi, "canonical solution index (default @buchi)");
  gnf->add_option("--component", gnf_args.component, "z (or y) variable, name or 1-based index");
  gnf->add_option("-o,--out", gnf_args.out, "output grammar file");
  gnf->add_option("--report", gnf_args.report, "pipeline report file");

  PdaArgs pda_args;
  auto* pda = app.add_subcommand("build-pda", "Build the induced simple reset pushdown automaton");
  pda->add_option("file", pda_args.path, "grammar file in GNF")->required();
  pda->add_option("--start", pda_args.start, "start variable, name or 1-based index");
  pda->add_option("--buchi", pda_args.buchi, "number of repeated states");
  pda->add_option("--format", pda_args.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  pda->add_option("-o,--out", pda_args.out, "output file");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a grammar or automaton");
  eval->add_option("file", eval_args.path, "grammar file or automaton JSON")->required();
  auto* word = eval->add_option("--word", eval_args.word, "finite word");
  auto* lasso = eval->add_option("--lasso", eval_args.lasso, "ultimately periodic word u:v");
  auto* maxlen = eval->add_option("--maxlen", eval_args.maxlen, "list the support up to this length");
  word->excludes(lasso)->excludes(maxlen);
  lasso->excludes(maxlen);
  eval->add_option("--component", eval_args.component, "variable, name or 1-based index");
  eval->add_option("--buchi", eval_args.buchi, "canonical solution index / repeated states");
  eval->add_flag("--pda", eval_args.pda, "evaluate the induced automaton of a GNF grammar");
  eval->add_option("--rounds", eval_args.rounds, "automaton summary rounds (0: default)");
  eval->add_option("--factor-len", eval_args.factor_len, "first factor length of the lasso ladder");
  eval->add_option("--periods", eval_args.periods, "lasso ladder periods");
  eval->add_flag("--json", eval_args.as_json, "JSON report");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run a property or golden-value suite");
  check->add_option("--suite", check_args.suite, "identities, examples or oracle")
      ->required()
      ->check(CLI::IsMember({"identities", "examples", "oracle"}));
  check->add_option("--seed", check_args.seed, "random seed");
  check->add_option("--cases", check_args.cases, "random cases per check");
  check->add_option("--golden", check_args.golden, "golden file for the examples suite");
  check->add_flag("--json", check_args.as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse) return cmd_parse(parse_path, canonical);
    if (*gnf) return cmd_gnf(gnf_args);
    if (*pda) return cmd_build_pda(pda_args);
    if (*eval) {
      if (!eval_args.word && !eval_args.lasso && !eval_args.maxlen)
        throw usage_error("one of --word, --lasso, --maxlen is required");
      return cmd_eval(eval_args);
    }
    return cmd_check(check_args);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const selection_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
