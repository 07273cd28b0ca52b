#include "walg/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace walg {

Sym Alphabet::find(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<Sym>(it - names.begin());
}

Sym Alphabet::intern(const std::string& name) {
  Sym s = find(name);
  if (s >= 0) return s;
  names.push_back(name);
  return static_cast<Sym>(names.size() - 1);
}

bool is_terminal_word(const Word& w) {
  return std::none_of(w.begin(), w.end(), [](Sym s) { return is_var(s); });
}

std::vector<Sym> merge_alphabet(Alphabet& to, const Alphabet& from) {
  std::vector<Sym> map;
  map.reserve(from.size());
  for (const auto& name : from.names) map.push_back(to.intern(name));
  return map;
}

Polynomial Polynomial::monomial(const Value& c, Word w) {
  Polynomial p(c.kind);
  p.add_term(w, c);
  return p;
}

void Polynomial::add_term(const Word& w, const Value& c) {
  if (c.kind != kind_) throw semiring_error("polynomial coefficient of another semiring");
  if (is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) it->second = add(it->second, c);
}

Value Polynomial::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? zero(kind_) : it->second;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::set<std::size_t> vs;
  for (const auto& [w, c] : terms_)
    for (Sym s : w)
      if (is_var(s)) vs.insert(var_index(s));
  return {vs.begin(), vs.end()};
}

Polynomial Polynomial::map_vars(const std::function<Sym(std::size_t)>& f) const {
  Polynomial r(kind_);
  for (const auto& [w, c] : terms_) {
    Word nw;
    nw.reserve(w.size());
    for (Sym s : w) nw.push_back(is_var(s) ? f(var_index(s)) : s);
    r.add_term(nw, c);
  }
  return r;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [w, c] : b.terms()) r.add_term(w, c);
  return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.kind());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, mul(ca, cb));
    }
  return r;
}

Polynomial poly_scale(const Value& c, const Polynomial& p) {
  Polynomial r(p.kind());
  for (const auto& [w, d] : p.terms()) r.add_term(w, mul(c, d));
  return r;
}

Polynomial relabel(const Polynomial& p, const std::vector<Sym>& terminal_map,
                   std::size_t var_offset) {
  Polynomial r(p.kind());
  for (const auto& [w, c] : p.terms()) {
    Word nw;
    nw.reserve(w.size());
    for (Sym s : w)
      nw.push_back(is_var(s) ? var_sym(var_index(s) + var_offset)
                             : terminal_map.at(static_cast<std::size_t>(s)));
    r.add_term(nw, c);
  }
  return r;
}

std::vector<Polynomial> split_px(const Polynomial& p, std::size_t n) {
  std::vector<Polynomial> row(n, Polynomial(p.kind()));
  for (const auto& [w, c] : p.terms())
    for (std::size_t q = 0; q < w.size(); ++q)
      if (is_var(w[q])) {
        const std::size_t j = var_index(w[q]);
        if (j >= n) throw std::out_of_range("split_px: variable index out of range");
        row[j].add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(q)), c);
      }
  return row;
}

std::string format_word(const Word& w, const std::vector<std::string>& terminals,
                        const std::function<std::string(std::size_t)>& var_name) {
  std::string out;
  for (Sym s : w) {
    if (!out.empty()) out += ' ';
    out += is_var(s) ? var_name(var_index(s)) : terminals.at(static_cast<std::size_t>(s));
  }
  return out;
}

std::string format_poly(const Polynomial& p, const std::vector<std::string>& terminals,
                        const std::function<std::string(std::size_t)>& var_name) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    if (!out.empty()) out += " | ";
    std::string body = w.empty() ? "eps" : format_word(w, terminals, var_name);
    if (!is_one(c)) body = "(" + to_string(c) + ") " + body;
    out += body;
  }
  return out;
}

Value TruncatedSeries::coeff(const Word& w) const {
  if (w.size() > max_len_) throw std::out_of_range("coefficient requested beyond truncation length");
  auto it = terms_.find(w);
  return it == terms_.end() ? zero(kind_) : it->second;
}

void TruncatedSeries::add_term(const Word& w, const Value& c) {
  if (w.size() > max_len_ || is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) it->second = add(it->second, c);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(a.kind(), std::min(a.max_len(), b.max_len()));
  for (const auto& [w, c] : a.terms()) r.add_term(w, c);
  for (const auto& [w, c] : b.terms()) r.add_term(w, c);
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, const Domain& d) {
  TruncatedSeries r(a.kind(), d.max_len);
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.size() > d.max_len) break;  // length-lex: all later words are longer
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.size() + wb.size() > d.max_len) break;
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      if (d.contains(w)) r.add_term(w, mul(ca, cb));
    }
  }
  return r;
}

TruncatedSeries substitute(const Polynomial& p, const std::vector<TruncatedSeries>& assignment,
                           const Domain& d) {
  const Kind k = p.kind();
  TruncatedSeries total(k, d.max_len);
  for (const auto& [w, c] : p.terms()) {
    TruncatedSeries acc(k, d.max_len);
    acc.add_term({}, c);
    for (Sym s : w) {
      if (acc.terms().empty()) break;
      if (is_var(s)) {
        const std::size_t i = var_index(s);
        if (i >= assignment.size()) throw unbound_variable("substitute: unbound variable");
        acc = series_mul(acc, assignment[i], d);
      } else {
        TruncatedSeries next(k, d.max_len);
        for (const auto& [aw, ac] : acc.terms()) {
          Word nw = aw;
          nw.push_back(s);
          if (d.contains(nw)) next.add_term(nw, ac);
        }
        acc = std::move(next);
      }
    }
    for (const auto& [aw, ac] : acc.terms()) total.add_term(aw, ac);
  }
  return total;
}

TruncatedSeries substitute(const Polynomial& p, const std::vector<TruncatedSeries>& assignment,
                           std::size_t max_len) {
  return substitute(p, assignment, Domain{max_len, nullptr});
}

Lasso::Lasso(Word u_, Word v_) : u(std::move(u_)), v(std::move(v_)) {
  if (v.empty()) throw std::invalid_argument("lasso period must be nonempty");
}

Sym Lasso::at(std::size_t pos) const {
  if (pos < u.size()) return u[pos];
  return v[(pos - u.size()) % v.size()];
}

std::size_t Lasso::fold(std::size_t pos) const {
  if (pos < u.size()) return pos;
  return u.size() + (pos - u.size()) % v.size();
}

Word Lasso::factor(std::size_t pos, std::size_t len) const {
  Word w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = at(pos + i);
  return w;
}

WordSet Lasso::factors(std::size_t max_len) const {
  WordSet out;
  for (std::size_t p = 0; p < positions(); ++p)
    for (std::size_t len = 0; len <= max_len; ++len) out.insert(factor(p, len));
  return out;
}

Lasso Lasso::shifted(std::size_t pos) const {
  const std::size_t f = fold(pos);
  if (f < u.size()) return Lasso(Word(u.begin() + static_cast<std::ptrdiff_t>(f), u.end()), v);
  const std::size_t r = f - u.size();
  Word nv(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
  nv.insert(nv.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
  return Lasso({}, nv);
}

}  // namespace walg
