#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "walg/semiring.hpp"

namespace walg {

/// Interned symbol: terminals are >= 0, variable i is encoded as -(i+1).
using Sym = std::int32_t;
using Word = std::vector<Sym>;

inline bool is_var(Sym s) { return s < 0; }
inline std::size_t var_index(Sym s) { return static_cast<std::size_t>(-(s + 1)); }
inline Sym var_sym(std::size_t i) { return -static_cast<Sym>(i) - 1; }

/// Length-lexicographic order (shorter words first).
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, LengthLex>;

struct Alphabet {
  std::vector<std::string> names;

  Sym find(const std::string& name) const;  // -1 when absent
  Sym intern(const std::string& name);
  std::size_t size() const { return names.size(); }
};

bool is_terminal_word(const Word& w);

/// Interns every name of `from` into `to`; result[a] is the new symbol of a.
std::vector<Sym> merge_alphabet(Alphabet& to, const Alphabet& from);

/// Finite sum of monomials c * w, merged by word, no zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Word, Value, LengthLex>;

  explicit Polynomial(Kind k = Kind::boolean) : kind_(k) {}
  static Polynomial monomial(const Value& c, Word w);
  static Polynomial epsilon(Kind k) { return monomial(one(k), {}); }

  Kind kind() const { return kind_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Value& c);
  Value coeff(const Word& w) const;

  /// Variables occurring, ascending.
  std::vector<std::size_t> variables() const;
  /// Renames every variable symbol through f (terminals untouched).
  Polynomial map_vars(const std::function<Sym(std::size_t)>& f) const;

  bool operator==(const Polynomial& o) const { return kind_ == o.kind_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  Kind kind_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Value& c, const Polynomial& p);
/// Renames terminals through map and variables by adding offset.
Polynomial relabel(const Polynomial& p, const std::vector<Sym>& terminal_map, std::size_t var_offset);

/// The z-linear part p_x of p over (Sigma u Y), returned as the row of
/// coefficient polynomials over (Sigma u X): entry j multiplies z_j.
std::vector<Polynomial> split_px(const Polynomial& p, std::size_t n);

std::string format_word(const Word& w, const std::vector<std::string>& terminals,
                        const std::function<std::string(std::size_t)>& var_name);
std::string format_poly(const Polynomial& p, const std::vector<std::string>& terminals,
                        const std::function<std::string(std::size_t)>& var_name);

/// Coefficients of all terminal words of length <= max_len, optionally
/// restricted to a factor-closed word set.
class TruncatedSeries {
 public:
  using Terms = std::map<Word, Value, LengthLex>;

  TruncatedSeries(Kind k, std::size_t max_len) : kind_(k), max_len_(max_len) {}

  Kind kind() const { return kind_; }
  std::size_t max_len() const { return max_len_; }
  const Terms& terms() const { return terms_; }

  Value coeff(const Word& w) const;  // throws std::out_of_range past max_len
  void add_term(const Word& w, const Value& c);

  bool operator==(const TruncatedSeries& o) const {
    return kind_ == o.kind_ && max_len_ == o.max_len_ && terms_ == o.terms_;
  }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  Kind kind_;
  std::size_t max_len_;
  Terms terms_;
};

/// Words kept by truncated arithmetic: length bound plus optional whitelist.
struct Domain {
  std::size_t max_len = 0;
  const WordSet* words = nullptr;
  bool contains(const Word& w) const {
    return w.size() <= max_len && (!words || words->count(w) > 0);
  }
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, const Domain& d);

class unbound_variable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p evaluated at the assignment, truncated to the domain.
TruncatedSeries substitute(const Polynomial& p, const std::vector<TruncatedSeries>& assignment,
                           const Domain& d);
TruncatedSeries substitute(const Polynomial& p, const std::vector<TruncatedSeries>& assignment,
                           std::size_t max_len);

/// Ultimately periodic word u v^omega, |v| >= 1.
struct Lasso {
  Word u;
  Word v;

  Lasso(Word u_, Word v_);
  Sym at(std::size_t pos) const;
  /// Positions >= |u| are folded into [|u|, |u|+|v|).
  std::size_t fold(std::size_t pos) const;
  std::size_t positions() const { return u.size() + v.size(); }
  /// Factor of length len starting at pos.
  Word factor(std::size_t pos, std::size_t len) const;
  /// All factors of length <= max_len (factor closed, contains epsilon).
  WordSet factors(std::size_t max_len) const;
  /// The lasso read from position pos onwards.
  Lasso shifted(std::size_t pos) const;
};

}  // namespace walg
