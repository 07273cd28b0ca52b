#include "walg/eval.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

namespace walg {

const Alphabet& Input::sigma() const {
  return grammar ? grammar->sigma : automaton->matrix.sigma;
}

Kind Input::kind() const { return grammar ? grammar->kind : automaton->matrix.kind; }

namespace {

const char* sort_label(Sort s) { return s == Sort::x ? "x" : s == Sort::z ? "z" : "y"; }

}  // namespace

Input load_input(const std::string& path) {
  Input in;
  in.path = path;
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
      throw pda_error(path + ": " + e.what());
    }
    in.automaton = automaton_from_json(j);
  } else {
    in.grammar = read_grammar(path);
  }
  return in;
}

std::size_t select_variable(const GrammarFile& g, Sort s, const std::optional<std::string>& which) {
  std::vector<std::size_t> of_sort;
  for (std::size_t i = 0; i < g.vars.size(); ++i)
    if (g.sorts[i] == s) of_sort.push_back(i);
  if (which) {
    const bool numeric = !which->empty() && std::all_of(which->begin(), which->end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
    if (numeric) {
      const std::size_t k = std::stoul(*which);
      if (k == 0 || k > of_sort.size())
        throw selection_error("component " + *which + " out of range (" +
                              std::to_string(of_sort.size()) + " " + sort_label(s) +
                              "-variables)");
      return k - 1;
    }
    const auto it = std::find_if(of_sort.begin(), of_sort.end(),
                                 [&](std::size_t v) { return g.vars[v] == *which; });
    if (it == of_sort.end())
      throw selection_error("no " + std::string(sort_label(s)) + "-variable " + *which);
    return static_cast<std::size_t>(it - of_sort.begin());
  }
  if (auto st = start_of(g, s)) return *st;
  if (of_sort.size() == 1) return 0;
  throw selection_error(std::string("no start variable of sort ") + sort_label(s) + " given");
}

namespace {

std::size_t buchi_of(const GrammarFile& g, const std::optional<std::size_t>& b) {
  if (b) return *b;
  if (g.buchi) return *g.buchi;
  throw std::invalid_argument("Büchi count required (@buchi or --buchi)");
}

// Mixed view of a grammar with its selected x and z components.
struct MixedView {
  MixedSystem sys;
  std::size_t x = 0;
  std::size_t z = 0;
};

MixedView mixed_view(const GrammarFile& g, const std::optional<std::string>& comp, Sort query) {
  MixedView v;
  if (g.algebraic()) throw std::invalid_argument("an algebraic system has no omega part");
  if (g.mixed()) {
    v.sys = to_mixed(g);
    v.x = select_variable(g, Sort::x, query == Sort::x ? comp : std::nullopt);
    v.z = select_variable(g, Sort::z, query == Sort::z ? comp : std::nullopt);
  } else {
    v.sys = induce_mixed(to_omega(g));
    v.x = v.z = select_variable(g, Sort::y, comp);
  }
  return v;
}

// Equations of the finite part and the selected component.
std::pair<std::vector<Polynomial>, std::size_t> finite_view(const GrammarFile& g,
                                                            const std::optional<std::string>& comp) {
  if (g.algebraic()) return {g.rhs, select_variable(g, Sort::x, comp)};
  const MixedView v = mixed_view(g, comp, g.mixed() ? Sort::x : Sort::y);
  return {v.sys.x_rhs, v.x};
}

BuiltPda finite_pda(AlgebraicSystem s, std::size_t start) {
  try {
    return {induced_finite_pda(s, start), zero(s.kind)};
  } catch (const pda_epsilon_error& e) {
    s.rhs[start] = without_epsilon(s.rhs[start]);
    return {induced_finite_pda(s, start), e.eps};
  }
}

BuiltPda omega_pda(MixedSystem s, std::size_t x, std::size_t z, std::size_t l) {
  try {
    return {induced_omega_pda(s, x, z, l), zero(s.kind)};
  } catch (const pda_epsilon_error& e) {
    s.x_rhs[x] = without_epsilon(s.x_rhs[x]);
    return {induced_omega_pda(s, x, z, l), e.eps};
  }
}

}  // namespace

BuiltPda build_pda(const GrammarFile& g, const std::optional<std::string>& start,
                   const std::optional<std::size_t>& buchi) {
  if (g.algebraic()) return finite_pda(to_algebraic(g), select_variable(g, Sort::x, start));
  const MixedView v = mixed_view(g, start, g.mixed() ? Sort::z : Sort::y);
  return omega_pda(v.sys, v.x, v.z, buchi_of(g, buchi));
}

Value eval_word(const Input& in, const Word& w, const EvalOptions& opt) {
  if (in.automaton) return behavior_finite(*in.automaton, w);
  const GrammarFile& g = *in.grammar;
  if (opt.via_pda) {
    BuiltPda b;
    if (g.algebraic()) {
      b = finite_pda(to_algebraic(g), select_variable(g, Sort::x, opt.component));
    } else {
      const MixedView v = mixed_view(g, opt.component, g.mixed() ? Sort::x : Sort::y);
      b = omega_pda(v.sys, v.x, v.z, opt.buchi.value_or(g.buchi.value_or(0)));
    }
    const Value r = behavior_finite(b.automaton, w);
    return w.empty() ? add(r, b.eps) : r;
  }
  const auto [rhs, comp] = finite_view(g, opt.component);
  return least_solution_finite(g.kind, rhs, w.size())[comp].coeff(w);
}

std::vector<std::pair<Word, Value>> eval_upto(const Input& in, std::size_t max_len,
                                              const EvalOptions& opt) {
  std::vector<std::pair<Word, Value>> out;
  if (in.grammar && !opt.via_pda) {
    const GrammarFile& g = *in.grammar;
    const auto [rhs, comp] = finite_view(g, opt.component);
    const auto sol = least_solution_finite(g.kind, rhs, max_len);
    for (const auto& [w, c] : sol[comp].terms())
      if (!is_zero(c)) out.emplace_back(w, c);
    return out;
  }
  std::vector<Word> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == max_len) continue;
    for (std::size_t a = 0; a < in.sigma().size(); ++a) {
      Word w = words[i];
      w.push_back(static_cast<Sym>(a));
      words.push_back(std::move(w));
    }
  }
  for (const Word& w : words) {
    const Value c = eval_word(in, w, opt);
    if (!is_zero(c)) out.emplace_back(w, c);
  }
  return out;
}

OmegaResult eval_lasso(const Input& in, const Lasso& w, const EvalOptions& opt) {
  if (in.automaton) {
    SimpleOmegaPDA a = *in.automaton;
    if (opt.buchi) a.buchi = opt.buchi;
    if (!a.buchi) throw std::invalid_argument("automaton has no Büchi count");
    return behavior_omega_lasso(a, w, opt.pda);
  }
  const GrammarFile& g = *in.grammar;
  if (opt.via_pda)
    return behavior_omega_lasso(build_pda(g, opt.component, opt.buchi).automaton, w, opt.pda);
  const MixedView v = mixed_view(g, opt.component, g.mixed() ? Sort::z : Sort::y);
  return canonical_omega_lasso(v.sys, buchi_of(g, opt.buchi), v.z, w, opt.lasso);
}

}  // namespace walg
