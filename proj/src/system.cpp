#include "walg/system.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "walg/buchi.hpp"

namespace walg {

namespace {

void check_poly(const Polynomial& p, Kind k, std::size_t n_vars, std::size_t n_terms,
                const std::string& where) {
  if (p.kind() != k) throw system_error(where + ": coefficient of another semiring");
  for (const auto& [w, c] : p.terms())
    for (Sym s : w) {
      if (is_var(s) && var_index(s) >= n_vars)
        throw system_error(where + ": undeclared variable");
      if (!is_var(s) && static_cast<std::size_t>(s) >= n_terms)
        throw system_error(where + ": unknown terminal");
    }
}

std::string renamed(const std::string& name, char sort) {
  if (!name.empty() && name[0] == 'y') return std::string(1, sort) + name.substr(1);
  return std::string(1, sort) + "_" + name;
}

}  // namespace

void validate(const AlgebraicSystem& s) {
  if (s.rhs.size() != s.vars.size()) throw system_error("rhs count differs from variable count");
  for (std::size_t i = 0; i < s.rhs.size(); ++i)
    check_poly(s.rhs[i], s.kind, s.size(), s.sigma.size(), "equation of " + s.vars[i]);
}

void validate(const OmegaSystem& s) {
  if (s.rhs.size() != s.vars.size()) throw system_error("rhs count differs from variable count");
  for (std::size_t i = 0; i < s.rhs.size(); ++i)
    check_poly(s.rhs[i], s.kind, s.size(), s.sigma.size(), "equation of " + s.vars[i]);
}

void validate(const MixedSystem& s) {
  if (s.x_rhs.size() != s.n()) throw system_error("x-rhs count differs from x-variable count");
  if (s.rho.size() != s.m()) throw system_error("rho row count differs from z-variable count");
  for (std::size_t i = 0; i < s.n(); ++i)
    check_poly(s.x_rhs[i], s.kind, s.n(), s.sigma.size(), "equation of " + s.x_vars[i]);
  for (std::size_t i = 0; i < s.m(); ++i) {
    if (s.rho[i].size() != s.m()) throw system_error("rho is not square");
    for (std::size_t j = 0; j < s.m(); ++j)
      check_poly(s.rho[i][j], s.kind, s.n(), s.sigma.size(), "equation of " + s.z_vars[i]);
  }
}

std::vector<std::vector<Polynomial>> empty_rho(Kind k, std::size_t m) {
  return std::vector<std::vector<Polynomial>>(m, std::vector<Polynomial>(m, Polynomial(k)));
}

MixedSystem induce_mixed(const OmegaSystem& s) {
  validate(s);
  MixedSystem r;
  r.kind = s.kind;
  r.sigma = s.sigma;
  r.x_rhs = s.rhs;
  for (const auto& v : s.vars) {
    r.x_vars.push_back(renamed(v, 'x'));
    r.z_vars.push_back(renamed(v, 'z'));
  }
  for (const auto& p : s.rhs) r.rho.push_back(split_px(p, s.size()));
  return r;
}

AlgebraicSystem x_part(const MixedSystem& s) {
  return AlgebraicSystem{s.kind, s.sigma, s.x_vars, s.x_rhs};
}

namespace {

bool gnf_word(const Word& w, std::size_t max_vars) {
  if (w.empty() || is_var(w[0]) || w.size() > max_vars + 1) return false;
  return std::all_of(w.begin() + 1, w.end(), [](Sym s) { return is_var(s); });
}

}  // namespace

bool is_gnf_x_poly(const Polynomial& p) {
  for (const auto& [w, c] : p.terms())
    if (!w.empty() && !gnf_word(w, 2)) return false;
  return true;
}

bool is_strict_gnf_x_poly(const Polynomial& p) {
  for (const auto& [w, c] : p.terms())
    if (!gnf_word(w, 2)) return false;
  return true;
}

bool is_gnf_rho_poly(const Polynomial& p) {
  for (const auto& [w, c] : p.terms())
    if (!gnf_word(w, 1)) return false;
  return true;
}

bool is_gnf(const AlgebraicSystem& s) {
  return std::all_of(s.rhs.begin(), s.rhs.end(), is_gnf_x_poly);
}

bool is_strict_gnf(const AlgebraicSystem& s) {
  return std::all_of(s.rhs.begin(), s.rhs.end(), is_strict_gnf_x_poly);
}

bool is_gnf_mixed(const MixedSystem& s) {
  for (const auto& p : s.x_rhs)
    if (!is_gnf_x_poly(p)) return false;
  for (const auto& row : s.rho)
    for (const auto& p : row)
      if (!is_gnf_rho_poly(p)) return false;
  return true;
}

bool is_gnf_omega(const OmegaSystem& s) {
  for (const auto& p : s.rhs)
    if (!is_gnf_x_poly(p)) return false;
  return true;
}

std::size_t default_max_iter(std::size_t n, std::size_t max_len) {
  return 4 * (max_len + 1) * (n + 1) + 16;
}

std::vector<TruncatedSeries> least_solution_finite(Kind k, const std::vector<Polynomial>& rhs,
                                                   const Domain& d, std::size_t max_iter) {
  std::vector<TruncatedSeries> cur(rhs.size(), TruncatedSeries(k, d.max_len));
  for (std::size_t it = 0; it < max_iter; ++it) {
    std::vector<TruncatedSeries> next;
    next.reserve(rhs.size());
    for (const auto& p : rhs) next.push_back(substitute(p, cur, d));
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw not_stabilized("Kleene iteration did not stabilize within " + std::to_string(max_iter) +
                       " iterations");
}

std::vector<TruncatedSeries> least_solution_finite(Kind k, const std::vector<Polynomial>& rhs,
                                                   std::size_t max_len) {
  return least_solution_finite(k, rhs, Domain{max_len, nullptr},
                               default_max_iter(rhs.size(), max_len));
}

Value oracle_coeff_gnf(Kind k, const std::vector<Polynomial>& rhs, std::size_t comp,
                       const Word& w) {
  for (const auto& p : rhs)
    if (!is_gnf_x_poly(p)) throw system_error("oracle_coeff_gnf needs a GNF system");
  if (comp >= rhs.size()) throw std::out_of_range("oracle_coeff_gnf: component out of range");
  // pending holds the sentential form's variables, leftmost at the back
  std::vector<std::size_t> pending{comp};
  std::function<Value(std::size_t)> go = [&](std::size_t pos) -> Value {
    if (pending.empty()) return pos == w.size() ? one(k) : zero(k);
    Value total = zero(k);
    const std::size_t x = pending.back();
    pending.pop_back();
    for (const auto& [mw, c] : rhs[x].terms()) {
      if (!mw.empty() && (pos >= w.size() || mw[0] != w[pos])) continue;
      for (std::size_t q = mw.size(); q-- > 1;) pending.push_back(var_index(mw[q]));
      const Value sub = go(mw.empty() ? pos : pos + 1);
      for (std::size_t q = 1; q < mw.size(); ++q) pending.pop_back();
      total = add(total, mul(c, sub));
    }
    pending.push_back(x);
    return total;
  };
  return go(0);
}

namespace {

void require_idempotent(Kind k) {
  if (!idempotent(k))
    throw semiring_error("lasso evaluation of omega parts needs an idempotent semiring");
}

}  // namespace

Value canonical_omega_at_cap(const MixedSystem& s, std::size_t k, std::size_t i, const Lasso& w,
                             std::size_t factor_len) {
  require_idempotent(s.kind);
  validate(s);
  const std::size_t m = s.m();
  if (k > m) throw std::out_of_range("Büchi count exceeds the number of z-variables");
  if (i >= m) throw std::out_of_range("z-component out of range");

  const WordSet words = w.factors(factor_len);
  const Domain d{factor_len, &words};
  const std::size_t max_iter = default_max_iter(s.n(), factor_len) + s.n() * words.size() + 2;
  const auto sigma = least_solution_finite(s.kind, s.x_rhs, d, max_iter);
  std::vector<std::vector<TruncatedSeries>> e;
  e.reserve(m);
  for (std::size_t p = 0; p < m; ++p) {
    e.emplace_back();
    for (std::size_t q = 0; q < m; ++q) e.back().push_back(substitute(s.rho[p][q], sigma, d));
  }

  // node (j, pos, f): f = 2 right after a letter step that followed a Büchi
  // visit, otherwise f records whether a Büchi variable was seen since the
  // last letter step.  Accepting: f = 2.
  const std::size_t npos = w.positions();
  auto id = [&](std::size_t j, std::size_t pos, std::size_t f) { return (j * npos + pos) * 3 + f; };
  BuchiGraph g(s.kind);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t pos = 0; pos < npos; ++pos)
      for (std::size_t f = 0; f < 3; ++f) g.add_node(f == 2);
  auto buchi = [&](std::size_t j) -> std::size_t { return j < k ? 1 : 0; };
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t pos = 0; pos < npos; ++pos)
      for (std::size_t f = 0; f < 3; ++f) {
        const std::size_t cur = f == 2 ? buchi(j) : f;
        for (std::size_t q = 0; q < m; ++q)
          for (const auto& [fw, c] : e[j][q].terms()) {
            if (fw.empty()) {
              g.add_edge(id(j, pos, f), id(q, pos, cur | buchi(q)), c);
              continue;
            }
            if (fw != w.factor(pos, fw.size())) continue;
            const std::size_t next = w.fold(pos + fw.size());
            g.add_edge(id(j, pos, f), id(q, next, cur ? 2 : buchi(q)), c);
          }
      }
  return buchi_values(g)[id(i, 0, buchi(i))];
}

OmegaResult canonical_omega_lasso(const MixedSystem& s, std::size_t k, std::size_t i,
                                  const Lasso& w, LassoCaps caps) {
  require_idempotent(s.kind);
  const std::size_t lu = w.u.size(), lv = w.v.size();
  const std::size_t first = caps.factor_len ? caps.factor_len : lu + 4 * lv;
  const std::size_t periods = caps.periods ? caps.periods : 2 * s.m() * lv + 4;
  const std::size_t last = std::max(first, lu + periods * lv);
  OmegaResult r;
  r.value = canonical_omega_at_cap(s, k, i, w, first);
  r.cap_used = first;
  for (std::size_t f = first + lv; f <= last; f += lv) {
    const Value v = canonical_omega_at_cap(s, k, i, w, f);
    const bool settled = v == r.value;
    r.value = v;
    r.cap_used = f;
    if (settled) return r;
  }
  r.status = Status::inconclusive;
  return r;
}

}  // namespace walg
