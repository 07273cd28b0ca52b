#include "walg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace walg {

parse_error::parse_error(const std::string& file, std::size_t l, std::size_t c,
                         const std::string& msg)
    : std::runtime_error(file + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
      line(l),
      col(c),
      message(msg) {}

bool GrammarFile::mixed() const {
  return std::none_of(sorts.begin(), sorts.end(), [](Sort s) { return s == Sort::y; });
}

bool GrammarFile::algebraic() const {
  return std::all_of(sorts.begin(), sorts.end(), [](Sort s) { return s == Sort::x; });
}

std::size_t GrammarFile::index(const std::string& var) const {
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw std::out_of_range("unknown variable '" + var + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

namespace {

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::x: return "x";
    case Sort::z: return "z";
    case Sort::y: return "y";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Pos {
  std::size_t line = 1, col = 1;
};

struct RawSym {
  std::string name;
  Pos at;
};

struct RawMono {
  std::optional<std::pair<std::string, Pos>> coeff;
  std::vector<RawSym> syms;  // empty: epsilon
};

struct RawEq {
  RawSym lhs;
  std::vector<RawMono> monos;
};

class Parser {
 public:
  Parser(const std::string& text, std::string file) : file_(std::move(file)) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines_.push_back(line);
  }

  GrammarFile run() {
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      std::string s = lines_[i];
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
      line_ = i + 1;
      text_ = s;
      p_ = 0;
      skip_ws();
      if (p_ == text_.size()) continue;
      if (text_[p_] == '@') {
        directive();
        current_.reset();
      } else if (text_[p_] == '|') {
        if (!current_) fail("continuation line without an equation");
        ++p_;
        rhs(eqs_[*current_]);
      } else {
        equation();
      }
    }
    return resolve();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at({line_, p_ + 1}, msg); }
  [[noreturn]] void fail_at(Pos at, const std::string& msg) const {
    throw parse_error(file_, at.line, at.col, msg);
  }
  Pos here() const { return {line_, p_ + 1}; }

  void skip_ws() {
    while (p_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[p_]))) ++p_;
  }

  RawSym ident() {
    skip_ws();
    const Pos at = here();
    if (p_ >= text_.size() || !ident_start(text_[p_])) fail("identifier expected");
    const std::size_t b = p_;
    while (p_ < text_.size() && ident_char(text_[p_])) ++p_;
    return {text_.substr(b, p_ - b), at};
  }

  // whitespace separated word, for directive arguments
  RawSym word() {
    skip_ws();
    const Pos at = here();
    const std::size_t b = p_;
    while (p_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[p_]))) ++p_;
    return {text_.substr(b, p_ - b), at};
  }

  std::vector<RawSym> words() {
    std::vector<RawSym> r;
    for (skip_ws(); p_ < text_.size(); skip_ws()) r.push_back(word());
    return r;
  }

  void directive() {
    const RawSym d = word();
    const std::vector<RawSym> args = words();
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) fail_at(d.at, "wrong number of arguments to " + d.name);
    };
    if (d.name == "@semiring") {
      need(1, 1);
      if (kind_) fail_at(d.at, "duplicate @semiring directive");
      try {
        kind_ = parse_kind(args[0].name);
      } catch (const semiring_error& e) {
        fail_at(args[0].at, e.what());
      }
    } else if (d.name == "@alphabet") {
      for (const auto& a : args) {
        check_ident(a);
        if (std::find_if(alphabet_.begin(), alphabet_.end(), [&](const RawSym& s) { return s.name == a.name; }) !=
            alphabet_.end())
          fail_at(a.at, "letter '" + a.name + "' declared twice");
        alphabet_.push_back(a);
      }
    } else if (d.name == "@sort") {
      need(2, static_cast<std::size_t>(-1));
      Sort s;
      if (args[0].name == "x") s = Sort::x;
      else if (args[0].name == "z") s = Sort::z;
      else if (args[0].name == "y") s = Sort::y;
      else fail_at(args[0].at, "sort must be x, z or y");
      for (std::size_t i = 1; i < args.size(); ++i) {
        check_ident(args[i]);
        if (sorts_.count(args[i].name)) fail_at(args[i].at, "sort of '" + args[i].name + "' given twice");
        sorts_[args[i].name] = {s, args[i].at};
      }
    } else if (d.name == "@start") {
      need(1, 2);
      if (!start_.empty()) fail_at(d.at, "duplicate @start directive");
      for (const auto& a : args) check_ident(a);
      start_ = args;
    } else if (d.name == "@buchi") {
      need(1, 1);
      if (buchi_) fail_at(d.at, "duplicate @buchi directive");
      const auto& t = args[0].name;
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          t.size() > 9)
        fail_at(args[0].at, "Büchi count must be a natural number");
      buchi_ = {static_cast<std::size_t>(std::stoul(t)), args[0].at};
    } else {
      fail_at(d.at, "unknown directive " + d.name);
    }
  }

  void check_ident(const RawSym& s) const {
    if (s.name.empty() || !ident_start(s.name[0]) ||
        !std::all_of(s.name.begin(), s.name.end(), ident_char))
      fail_at(s.at, "malformed identifier '" + s.name + "'");
    if (s.name == "eps") fail_at(s.at, "'eps' is reserved");
  }

  void equation() {
    const RawSym lhs = ident();
    if (lhs.name == "eps") fail_at(lhs.at, "'eps' is reserved");
    skip_ws();
    if (p_ >= text_.size() || text_[p_] != '=') fail("'=' expected");
    ++p_;
    for (const auto& e : eqs_)
      if (e.lhs.name == lhs.name) fail_at(lhs.at, "second equation for '" + lhs.name + "'");
    eqs_.push_back({lhs, {}});
    current_ = eqs_.size() - 1;
    rhs(eqs_.back());
  }

  // monomial ('|' monomial)*
  void rhs(RawEq& eq) {
    for (;;) {
      skip_ws();
      const Pos start = here();
      RawMono m;
      bool zero_mono = false, eps = false;
      if (p_ < text_.size() && text_[p_] == '(') {
        ++p_;
        const std::size_t close = text_.find(')', p_);
        if (close == std::string::npos) fail("')' expected");
        std::string v = text_.substr(p_, close - p_);
        const std::size_t lead = v.find_first_not_of(" \t");
        const Pos vat{line_, p_ + 1 + (lead == std::string::npos ? 0 : lead)};
        v.erase(0, lead == std::string::npos ? v.size() : lead);
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
        m.coeff = {v, vat};
        p_ = close + 1;
      }
      for (skip_ws(); p_ < text_.size() && text_[p_] != '|'; skip_ws()) {
        if (text_[p_] == '0' && (p_ + 1 == text_.size() || !ident_char(text_[p_ + 1]))) {
          if (m.coeff || !m.syms.empty() || eps) fail("'0' must stand alone");
          zero_mono = true;
          ++p_;
          continue;
        }
        if (zero_mono) fail("'0' must stand alone");
        const RawSym s = ident();
        if (s.name == "eps") {
          if (!m.syms.empty() || eps) fail_at(s.at, "'eps' must stand alone");
          eps = true;
          continue;
        }
        if (eps) fail_at(s.at, "'eps' must stand alone");
        m.syms.push_back(s);
      }
      if (!zero_mono && !eps && m.syms.empty()) fail_at(start, "empty monomial");
      if (!zero_mono) eq.monos.push_back(std::move(m));
      if (p_ >= text_.size()) return;
      ++p_;  // '|'
    }
  }

  GrammarFile resolve() {
    if (!kind_) throw parse_error(file_, 1, 1, "missing @semiring directive");
    GrammarFile g;
    g.kind = *kind_;
    std::map<std::string, std::size_t> var;
    for (const auto& e : eqs_) {
      var.emplace(e.lhs.name, g.vars.size());
      g.vars.push_back(e.lhs.name);
    }
    for (const auto& a : alphabet_) {
      if (var.count(a.name)) fail_at(a.at, "'" + a.name + "' is both a letter and a variable");
      g.sigma.intern(a.name);
    }
    for (const auto& [name, s] : sorts_)
      if (!var.count(name)) fail_at(s.second, "sort given for '" + name + "', which has no equation");
    for (const auto& e : eqs_) {
      auto it = sorts_.find(e.lhs.name);
      g.sorts.push_back(it == sorts_.end() ? Sort::y : it->second.first);
    }
    const bool any_xz = std::any_of(g.sorts.begin(), g.sorts.end(), [](Sort s) { return s != Sort::y; });
    for (std::size_t i = 0; i < eqs_.size(); ++i) {
      const RawEq& e = eqs_[i];
      if (any_xz && g.sorts[i] == Sort::y)
        fail_at(e.lhs.at, "'" + e.lhs.name + "' needs sort x or z in a mixed system");
      Polynomial p(g.kind);
      for (const auto& m : e.monos) {
        Value c = one(g.kind);
        if (m.coeff) {
          try {
            c = parse_value(g.kind, m.coeff->first);
          } catch (const semiring_error& err) {
            fail_at(m.coeff->second, err.what());
          }
        }
        Word w;
        for (std::size_t k = 0; k < m.syms.size(); ++k) {
          const RawSym& s = m.syms[k];
          if (auto v = var.find(s.name); v != var.end()) {
            const Sort vs = g.sorts[v->second];
            if (g.sorts[i] == Sort::x && vs == Sort::z)
              fail_at(s.at, "z-variable '" + s.name + "' in an x-equation");
            if (g.sorts[i] == Sort::z && vs == Sort::z && k + 1 != m.syms.size())
              fail_at(s.at, "a z-variable may only end a monomial");
            w.push_back(var_sym(v->second));
          } else {
            const Sym t = g.sigma.find(s.name);
            if (t < 0) fail_at(s.at, "undeclared symbol '" + s.name + "'");
            w.push_back(t);
          }
        }
        if (g.sorts[i] == Sort::z && (w.empty() || !is_var(w.back()) || g.sorts[var_index(w.back())] != Sort::z)) {
          const Pos at = m.syms.empty() ? e.lhs.at : m.syms.back().at;
          fail_at(at, "every monomial of a z-equation must end with a z-variable");
        }
        p.add_term(w, c);
      }
      g.rhs.push_back(std::move(p));
    }
    std::set<Sort> seen;
    for (const auto& s : start_) {
      auto v = var.find(s.name);
      if (v == var.end()) fail_at(s.at, "start variable '" + s.name + "' has no equation");
      const Sort so = g.sorts[v->second];
      if (!seen.insert(so).second) fail_at(s.at, "two start variables of the same sort");
      g.start.push_back(s.name);
    }
    if (start_.size() == 2 && !any_xz) fail_at(start_[1].at, "two start variables need a mixed system");
    if (buchi_) {
      const std::size_t limit = any_xz ? static_cast<std::size_t>(std::count(g.sorts.begin(), g.sorts.end(), Sort::z))
                                       : g.vars.size();
      if (buchi_->first > limit) fail_at(buchi_->second, "Büchi count exceeds the number of candidates");
      g.buchi = buchi_->first;
    }
    return g;
  }

  std::string file_;
  std::vector<std::string> lines_;
  std::string text_;
  std::size_t line_ = 0, p_ = 0;
  std::optional<Kind> kind_;
  std::vector<RawSym> alphabet_;
  std::map<std::string, std::pair<Sort, Pos>> sorts_;
  std::vector<RawSym> start_;
  std::optional<std::pair<std::size_t, Pos>> buchi_;
  std::vector<RawEq> eqs_;
  std::optional<std::size_t> current_;  // equation continued by '|' lines
};

}  // namespace

GrammarFile parse_grammar(const std::string& text, const std::string& file) {
  return Parser(text, file).run();
}

GrammarFile read_grammar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grammar(ss.str(), path);
}

std::string serialize_grammar(const GrammarFile& g) {
  std::ostringstream out;
  out << "@semiring " << kind_name(g.kind) << "\n";
  if (g.sigma.size()) {
    out << "@alphabet";
    for (const auto& a : g.sigma.names) out << " " << a;
    out << "\n";
  }
  for (Sort s : {Sort::x, Sort::z}) {
    std::string line;
    for (std::size_t i = 0; i < g.vars.size(); ++i)
      if (g.sorts[i] == s) line += " " + g.vars[i];
    if (!line.empty()) out << "@sort " << sort_name(s) << line << "\n";
  }
  if (!g.start.empty()) {
    out << "@start";
    for (const auto& s : g.start) out << " " << s;
    out << "\n";
  }
  if (g.buchi) out << "@buchi " << *g.buchi << "\n";
  for (std::size_t i = 0; i < g.vars.size(); ++i)
    out << g.vars[i] << " = "
        << format_poly(g.rhs[i], g.sigma.names, [&](std::size_t v) { return g.vars.at(v); }) << "\n";
  return out.str();
}

namespace {

std::vector<std::size_t> positions_in_sort(const GrammarFile& g) {
  std::vector<std::size_t> r(g.vars.size());
  std::map<Sort, std::size_t> next;
  for (std::size_t i = 0; i < g.vars.size(); ++i) r[i] = next[g.sorts[i]]++;
  return r;
}

}  // namespace

std::optional<std::size_t> start_of(const GrammarFile& g, Sort s) {
  const auto pos = positions_in_sort(g);
  for (const auto& name : g.start) {
    const std::size_t i = g.index(name);
    if (g.sorts[i] == s) return pos[i];
  }
  return std::nullopt;
}

OmegaSystem to_omega(const GrammarFile& g) {
  if (std::any_of(g.sorts.begin(), g.sorts.end(), [](Sort s) { return s != Sort::y; }))
    throw system_error("not an omega-algebraic system (x/z sorts present)");
  return OmegaSystem{g.kind, g.sigma, g.vars, g.rhs};
}

MixedSystem to_mixed(const GrammarFile& g) {
  if (!g.mixed()) throw system_error("not a mixed system (y sorts present)");
  const auto pos = positions_in_sort(g);
  MixedSystem s;
  s.kind = g.kind;
  s.sigma = g.sigma;
  for (std::size_t i = 0; i < g.vars.size(); ++i)
    (g.sorts[i] == Sort::x ? s.x_vars : s.z_vars).push_back(g.vars[i]);
  s.rho = empty_rho(g.kind, s.z_vars.size());
  auto xmap = [&](std::size_t v) { return var_sym(pos[v]); };
  for (std::size_t i = 0; i < g.vars.size(); ++i) {
    if (g.sorts[i] == Sort::x) {
      s.x_rhs.push_back(g.rhs[i].map_vars(xmap));
      continue;
    }
    for (const auto& [w, c] : g.rhs[i].terms()) {
      Word pre(w.begin(), w.end() - 1);
      for (Sym& x : pre)
        if (is_var(x)) x = xmap(var_index(x));
      s.rho[pos[i]][pos[var_index(w.back())]].add_term(pre, c);
    }
  }
  return s;
}

AlgebraicSystem to_algebraic(const GrammarFile& g) {
  if (!g.algebraic()) throw system_error("not an algebraic system (every variable needs sort x)");
  return AlgebraicSystem{g.kind, g.sigma, g.vars, g.rhs};
}

GrammarFile from_omega(const OmegaSystem& s) {
  validate(s);
  return GrammarFile{s.kind, s.sigma, s.vars, std::vector<Sort>(s.size(), Sort::y), s.rhs, {}, {}};
}

GrammarFile from_algebraic(const AlgebraicSystem& s) {
  validate(s);
  return GrammarFile{s.kind, s.sigma, s.vars, std::vector<Sort>(s.size(), Sort::x), s.rhs, {}, {}};
}

GrammarFile from_mixed(const MixedSystem& s) {
  validate(s);
  GrammarFile g{s.kind, s.sigma, s.x_vars, std::vector<Sort>(s.n(), Sort::x), s.x_rhs, {}, {}};
  for (std::size_t i = 0; i < s.m(); ++i) {
    g.vars.push_back(s.z_vars[i]);
    g.sorts.push_back(Sort::z);
    Polynomial p(s.kind);
    for (std::size_t j = 0; j < s.m(); ++j)
      for (const auto& [w, c] : s.rho[i][j].terms()) {
        Word nw = w;
        nw.push_back(var_sym(s.n() + j));
        p.add_term(nw, c);
      }
    g.rhs.push_back(std::move(p));
  }
  return g;
}

Word parse_word(const Alphabet& sigma, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::vector<std::string> parts;
  for (std::string t; in >> t;) parts.push_back(t);
  const bool single = std::all_of(sigma.names.begin(), sigma.names.end(),
                                  [](const std::string& n) { return n.size() == 1; });
  if (parts.size() == 1 && single) {
    parts.clear();
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) parts.emplace_back(1, c);
  }
  for (const auto& t : parts) {
    const Sym a = sigma.find(t);
    if (a < 0) throw std::invalid_argument("unknown letter '" + t + "'");
    w.push_back(a);
  }
  return w;
}

Lasso parse_lasso(const Alphabet& sigma, const std::string& text) {
  const std::size_t c = text.find(':');
  if (c == std::string::npos) throw std::invalid_argument("lasso must be written u:v");
  Word v = parse_word(sigma, text.substr(c + 1));
  if (v.empty()) throw std::invalid_argument("lasso period must be nonempty");
  return Lasso(parse_word(sigma, text.substr(0, c)), std::move(v));
}

std::string show_word(const Alphabet& sigma, const Word& w) {
  const bool single = std::all_of(sigma.names.begin(), sigma.names.end(),
                                  [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (Sym a : w) {
    if (!single && !out.empty()) out += ' ';
    out += sigma.names.at(static_cast<std::size_t>(a));
  }
  return out;
}

nlohmann::json system_json(const GrammarFile& g) {
  nlohmann::json j;
  j["semiring"] = kind_name(g.kind);
  j["alphabet"] = g.sigma.names;
  std::string kind = "omega";
  bool gnf = false;
  if (g.algebraic()) {
    kind = "algebraic";
    gnf = is_gnf(to_algebraic(g));
  } else if (g.mixed()) {
    kind = "mixed";
    gnf = is_gnf_mixed(to_mixed(g));
  } else {
    gnf = is_gnf_omega(to_omega(g));
  }
  j["system"] = kind;
  j["gnf"] = gnf;
  std::map<std::string, std::size_t> counts{{"x", 0}, {"z", 0}, {"y", 0}};
  j["variables"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.vars.size(); ++i) {
    ++counts[sort_name(g.sorts[i])];
    j["variables"].push_back(
        {{"name", g.vars[i]},
         {"sort", sort_name(g.sorts[i])},
         {"rhs", format_poly(g.rhs[i], g.sigma.names, [&](std::size_t v) { return g.vars.at(v); })}});
  }
  j["counts"] = counts;
  j["start"] = g.start;
  j["buchi"] = g.buchi ? nlohmann::json(*g.buchi) : nlohmann::json(nullptr);
  return j;
}

namespace {

nlohmann::json block_json(const ResetPDMatrix& m, const PolyMatrix& b) {
  nlohmann::json r = nlohmann::json::array();
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t k = 0; k < m.n(); ++k)
      for (const auto& [w, c] : b[i][k].terms())
        r.push_back({m.states[i], m.states[k], m.sigma.names.at(static_cast<std::size_t>(w[0])), to_string(c)});
  return r;
}

nlohmann::json vector_json(const ResetPDMatrix& m, const std::vector<Value>& v) {
  nlohmann::json r = nlohmann::json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) r[m.states[i]] = to_string(v[i]);
  return r;
}

std::size_t find_name(const std::vector<std::string>& names, const std::string& n, const char* what) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw pda_error(std::string("unknown ") + what + " '" + n + "'");
  return static_cast<std::size_t>(it - names.begin());
}

void read_block(const nlohmann::json& j, ResetPDMatrix& m, PolyMatrix& b) {
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw pda_error("transition entries are [from, to, letter, coeff]");
    const std::size_t i = find_name(m.states, e[0].get<std::string>(), "state");
    const std::size_t k = find_name(m.states, e[1].get<std::string>(), "state");
    const Sym a = m.sigma.find(e[2].get<std::string>());
    if (a < 0) throw pda_error("unknown letter '" + e[2].get<std::string>() + "'");
    b[i][k].add_term({a}, parse_value(m.kind, e[3].get<std::string>()));
  }
}

}  // namespace

nlohmann::json automaton_json(const SimpleOmegaPDA& a) {
  validate(a);
  const ResetPDMatrix& m = a.matrix;
  nlohmann::json j;
  j["semiring"] = kind_name(m.kind);
  j["alphabet"] = m.sigma.names;
  j["states"] = m.states;
  j["stack_alphabet"] = m.gamma;
  j["neutral"] = block_json(m, m.neutral);
  j["push"] = nlohmann::json::object();
  j["pop"] = nlohmann::json::object();
  for (std::size_t p = 0; p < m.gamma.size(); ++p) {
    j["push"][m.gamma[p]] = block_json(m, m.push[p]);
    j["pop"][m.gamma[p]] = block_json(m, m.pop[p]);
  }
  j["initial"] = vector_json(m, a.initial);
  j["final"] = vector_json(m, a.final);
  j["buchi"] = a.buchi ? nlohmann::json(*a.buchi) : nlohmann::json(nullptr);
  return j;
}

SimpleOmegaPDA automaton_from_json(const nlohmann::json& j) {
  try {
    const Kind k = parse_kind(j.at("semiring").get<std::string>());
    Alphabet sigma;
    for (const auto& a : j.at("alphabet")) sigma.intern(a.get<std::string>());
    SimpleOmegaPDA a;
    a.matrix = empty_pd_matrix(k, sigma, j.at("states").get<std::vector<std::string>>(),
                               j.at("stack_alphabet").get<std::vector<std::string>>());
    ResetPDMatrix& m = a.matrix;
    read_block(j.at("neutral"), m, m.neutral);
    const nlohmann::json push = j.value("push", nlohmann::json::object());
    const nlohmann::json pop = j.value("pop", nlohmann::json::object());
    for (const auto& [sym, block] : push.items())
      read_block(block, m, m.push[find_name(m.gamma, sym, "stack symbol")]);
    for (const auto& [sym, block] : pop.items())
      read_block(block, m, m.pop[find_name(m.gamma, sym, "stack symbol")]);
    a.initial.assign(m.n(), zero(k));
    a.final.assign(m.n(), zero(k));
    for (const auto& [st, v] : j.at("initial").items())
      a.initial[find_name(m.states, st, "state")] = parse_value(k, v.get<std::string>());
    for (const auto& [st, v] : j.at("final").items())
      a.final[find_name(m.states, st, "state")] = parse_value(k, v.get<std::string>());
    if (j.contains("buchi") && !j["buchi"].is_null()) a.buchi = j["buchi"].get<std::size_t>();
    validate(a);
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw pda_error(std::string("malformed automaton JSON: ") + e.what());
  } catch (const semiring_error& e) {
    throw pda_error(std::string("malformed automaton JSON: ") + e.what());
  }
}

nlohmann::json pipeline_json(const GnfPipelineReport& r) {
  nlohmann::json j;
  j["skipped"] = r.skipped;
  j["warnings"] = r.warnings;
  j["stages"] = nlohmann::json::array();
  for (const auto& st : r.stages) {
    GrammarFile g = std::visit(
        [](const auto& s) -> GrammarFile {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, AlgebraicSystem>) return from_algebraic(s);
          else if constexpr (std::is_same_v<T, MixedSystem>) return from_mixed(s);
          else return from_omega(s);
        },
        st.system);
    nlohmann::json e{{"name", st.name},
                     {"claims_gnf", st.claims_gnf},
                     {"is_gnf", st.is_gnf},
                     {"buchi", st.buchi},
                     {"system", system_json(g)}};
    if (std::holds_alternative<OmegaSystem>(st.system)) {
      e["component"] = st.z_comp;
    } else {
      e["x_component"] = st.x_comp;
      e["z_component"] = st.z_comp;
    }
    j["stages"].push_back(std::move(e));
  }
  return j;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

}  // namespace

std::string automaton_dot(const SimpleOmegaPDA& a) {
  validate(a);
  const ResetPDMatrix& m = a.matrix;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> labels;
  auto collect = [&](const PolyMatrix& b, const std::string& op) {
    for (std::size_t i = 0; i < m.n(); ++i)
      for (std::size_t k = 0; k < m.n(); ++k)
        for (const auto& [w, c] : b[i][k].terms()) {
          std::string l = m.sigma.names.at(static_cast<std::size_t>(w[0])) + op;
          if (!is_one(c)) l = to_string(c) + " " + l;
          labels[{i, k}].push_back(l);
        }
  };
  collect(m.neutral, "#");
  for (std::size_t p = 0; p < m.gamma.size(); ++p) {
    collect(m.push[p], "↓" + m.gamma[p]);
    collect(m.pop[p], "↑" + m.gamma[p]);
  }
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  const std::size_t l = a.buchi.value_or(0);
  for (std::size_t i = 0; i < m.n(); ++i) {
    out << "  s" << i << " [label=\"" << dot_escape(m.states[i]) << "\", shape="
        << (i < l ? "doublecircle" : "circle") << "];\n";
    if (!is_zero(a.initial[i])) {
      out << "  in" << i << " [shape=point];\n  in" << i << " -> s" << i;
      if (!is_one(a.initial[i])) out << " [label=\"" << to_string(a.initial[i]) << "\"]";
      out << ";\n";
    }
    if (!is_zero(a.final[i])) {
      out << "  out" << i << " [shape=point];\n  s" << i << " -> out" << i;
      if (!is_one(a.final[i])) out << " [label=\"" << to_string(a.final[i]) << "\"]";
      out << ";\n";
    }
  }
  for (const auto& [e, ls] : labels) {
    std::string lab;
    for (const auto& s : ls) lab += (lab.empty() ? "" : "\\n") + dot_escape(s);
    out << "  s" << e.first << " -> s" << e.second << " [label=\"" << lab << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace walg
