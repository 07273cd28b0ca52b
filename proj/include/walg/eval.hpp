#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walg/io.hpp"
#include "walg/pda.hpp"

namespace walg {

/// A grammar file or an automaton in JSON form.
struct Input {
  std::string path;
  std::optional<GrammarFile> grammar;
  std::optional<SimpleOmegaPDA> automaton;

  const Alphabet& sigma() const;
  Kind kind() const;
};

/// A component or start variable that does not exist.
class selection_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Position among the variables of sort s of the variable named by which (a
/// name or a 1-based index); without it the @start variable of that sort.
std::size_t select_variable(const GrammarFile& g, Sort s, const std::optional<std::string>& which);

/// Files ending in .json are automata, everything else grammars.
Input load_input(const std::string& path);

struct EvalOptions {
  std::optional<std::string> component;  // variable name or 1-based index
  std::optional<std::size_t> buchi;      // overrides @buchi / the automaton's l
  bool via_pda = false;                  // evaluate the induced automaton of a grammar
  LassoCaps lasso;
  PdaCaps pda;
};

/// Induced automaton of a GNF grammar together with the epsilon coefficient
/// that had to be split off the start variable.
struct BuiltPda {
  SimpleOmegaPDA automaton;
  Value eps;
};

/// Algebraic files give finite automata; mixed files omega automata started
/// at the x start and at `start` (a z-variable).
BuiltPda build_pda(const GrammarFile& g, const std::optional<std::string>& start,
                   const std::optional<std::size_t>& buchi);

Value eval_word(const Input& in, const Word& w, const EvalOptions& opt);
/// Every word up to max_len with a nonzero coefficient.
std::vector<std::pair<Word, Value>> eval_upto(const Input& in, std::size_t max_len,
                                              const EvalOptions& opt);
OmegaResult eval_lasso(const Input& in, const Lasso& w, const EvalOptions& opt);

}  // namespace walg
