#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "walg/gnf.hpp"
#include "walg/pda.hpp"

namespace walg {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& file, std::size_t line, std::size_t col, const std::string& msg);
  std::size_t line, col;
  std::string message;
};

enum class Sort { x, z, y };

/// A grammar file.  Polynomials range over the alphabet and all variables
/// (in equation order); z-equations are linear in z with z last.
struct GrammarFile {
  Kind kind = Kind::boolean;
  Alphabet sigma;
  std::vector<std::string> vars;
  std::vector<Sort> sorts;
  std::vector<Polynomial> rhs;
  std::vector<std::string> start;  // one variable, or one x and one z for mixed files
  std::optional<std::size_t> buchi;

  bool mixed() const;      // every variable x or z
  bool algebraic() const;  // every variable x
  std::size_t index(const std::string& var) const;  // throws when absent
};

GrammarFile parse_grammar(const std::string& text, const std::string& file = "<input>");
GrammarFile read_grammar(const std::string& path);
std::string serialize_grammar(const GrammarFile& g);

OmegaSystem to_omega(const GrammarFile& g);
MixedSystem to_mixed(const GrammarFile& g);  // algebraic files give m = 0
AlgebraicSystem to_algebraic(const GrammarFile& g);

GrammarFile from_omega(const OmegaSystem& s);
GrammarFile from_mixed(const MixedSystem& s);
GrammarFile from_algebraic(const AlgebraicSystem& s);

/// Position of the start variable of sort s among the variables of that sort.
std::optional<std::size_t> start_of(const GrammarFile& g, Sort s);

/// Words and lassos over the alphabet of g: letters separated by spaces, or
/// concatenated when every letter is one character.
Word parse_word(const Alphabet& sigma, const std::string& text);
Lasso parse_lasso(const Alphabet& sigma, const std::string& text);  // "u:v"
std::string show_word(const Alphabet& sigma, const Word& w);

nlohmann::json system_json(const GrammarFile& g);
nlohmann::json automaton_json(const SimpleOmegaPDA& a);
SimpleOmegaPDA automaton_from_json(const nlohmann::json& j);
nlohmann::json pipeline_json(const GnfPipelineReport& r);
std::string automaton_dot(const SimpleOmegaPDA& a);

}  // namespace walg
