#include "walg/pda.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "walg/buchi.hpp"

namespace walg {

PolyMatrix zero_poly_matrix(Kind k, std::size_t n) {
  return PolyMatrix(n, std::vector<Polynomial>(n, Polynomial(k)));
}

ResetPDMatrix empty_pd_matrix(Kind k, Alphabet sigma, std::vector<std::string> states,
                              std::vector<std::string> gamma) {
  ResetPDMatrix m;
  m.kind = k;
  m.sigma = std::move(sigma);
  m.states = std::move(states);
  m.gamma = std::move(gamma);
  m.neutral = zero_poly_matrix(k, m.n());
  m.push.assign(m.gamma.size(), m.neutral);
  m.pop.assign(m.gamma.size(), m.neutral);
  return m;
}

namespace {

void check_block(const ResetPDMatrix& m, const PolyMatrix& b, const std::string& name) {
  if (b.size() != m.n()) throw pda_error(name + ": wrong number of rows");
  for (const auto& row : b) {
    if (row.size() != m.n()) throw pda_error(name + ": wrong number of columns");
    for (const auto& p : row) {
      if (p.kind() != m.kind) throw pda_error(name + ": coefficient of another semiring");
      for (const auto& [w, c] : p.terms())
        if (w.size() != 1 || is_var(w[0]) || static_cast<std::size_t>(w[0]) >= m.sigma.size())
          throw pda_error(name + ": entries must be sums of single letters");
    }
  }
}

}  // namespace

void validate(const ResetPDMatrix& m) {
  if (m.n() == 0) throw pda_error("automaton without states");
  check_block(m, m.neutral, "M_{eps,eps}");
  if (m.push.size() != m.gamma.size() || m.pop.size() != m.gamma.size())
    throw pda_error("one push and one pop block per stack symbol expected");
  for (std::size_t p = 0; p < m.gamma.size(); ++p) {
    check_block(m, m.push[p], "M_{eps," + m.gamma[p] + "}");
    check_block(m, m.pop[p], "M_{" + m.gamma[p] + ",eps}");
  }
}

void validate(const SimpleOmegaPDA& a) {
  validate(a.matrix);
  if (a.initial.size() != a.n() || a.final.size() != a.n())
    throw pda_error("initial and final vectors must have one entry per state");
  for (const auto& v : a.initial)
    if (v.kind != a.matrix.kind) throw pda_error("initial vector of another semiring");
  for (const auto& v : a.final)
    if (v.kind != a.matrix.kind) throw pda_error("final vector of another semiring");
  if (a.buchi && *a.buchi > a.n()) throw pda_error("Büchi count exceeds the number of states");
}

PolyMatrix expand_entry(const ResetPDMatrix& m, const Stack& from, const Stack& to) {
  if (from.empty()) {
    if (to.empty()) return m.neutral;
    if (to.size() == 1) return m.push.at(to[0]);
    return zero_poly_matrix(m.kind, m.n());
  }
  const Stack rest(from.begin() + 1, from.end());
  if (to == from) return m.neutral;
  if (to == rest) return m.pop.at(from[0]);
  if (to.size() == from.size() + 1 && std::equal(from.begin(), from.end(), to.begin() + 1))
    return m.push.at(to[0]);
  return zero_poly_matrix(m.kind, m.n());
}

bool is_sink(const ResetPDMatrix& m, std::size_t q) {
  auto row_empty = [&](const PolyMatrix& b) {
    return std::all_of(b[q].begin(), b[q].end(), [](const Polynomial& p) { return p.empty(); });
  };
  if (!row_empty(m.neutral)) return false;
  for (std::size_t p = 0; p < m.gamma.size(); ++p)
    if (!row_empty(m.push[p]) || !row_empty(m.pop[p])) return false;
  return true;
}

Polynomial without_epsilon(const Polynomial& p) {
  Polynomial r(p.kind());
  for (const auto& [w, c] : p.terms())
    if (!w.empty()) r.add_term(w, c);
  return r;
}

namespace {

void add_letter(Polynomial& p, Sym a, const Value& c) { p.add_term({a}, c); }

std::string stack_name(const std::string& var, char upper, std::vector<std::string>& taken) {
  std::string name = (!var.empty() && var[0] == upper - 'A' + 'a')
                         ? std::string(1, upper) + var.substr(1)
                         : std::string(1, upper) + "_" + var;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  taken.push_back(name);
  return name;
}

// Variables occurring in some monomial.
std::vector<char> referenced(std::size_t n, const std::vector<const Polynomial*>& polys) {
  std::vector<char> r(n, 0);
  for (const Polynomial* p : polys)
    for (std::size_t v : p->variables()) r[v] = 1;
  return r;
}

void check_epsilon(const std::vector<Polynomial>& rhs, const std::vector<std::string>& names,
                   std::size_t start, const std::vector<char>& used) {
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    const Value e = rhs[i].coeff({});
    if (is_zero(e)) continue;
    if (i == start && !used[i])
      throw pda_epsilon_error("start variable " + names[i] + " has epsilon coefficient " +
                                  to_string(e),
                              e);
    throw pda_error("equation of " + names[i] + " has an epsilon monomial");
  }
}

}  // namespace

SimpleOmegaPDA induced_finite_pda(const AlgebraicSystem& s, std::size_t start) {
  validate(s);
  if (start >= s.size()) throw std::out_of_range("start variable out of range");
  if (!is_gnf(s)) throw pda_error("induced automaton needs a system in GNF");
  std::vector<const Polynomial*> polys;
  for (const auto& p : s.rhs) polys.push_back(&p);
  check_epsilon(s.rhs, s.vars, start, referenced(s.size(), polys));

  const std::size_t n = s.size(), f = n;
  std::vector<std::string> states = s.vars;
  std::string fname = "f";
  while (std::find(states.begin(), states.end(), fname) != states.end()) fname += "_";
  states.push_back(fname);
  SimpleOmegaPDA a;
  a.matrix = empty_pd_matrix(s.kind, s.sigma, states, s.vars);
  ResetPDMatrix& m = a.matrix;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [w, c] : s.rhs[i].terms()) {
      const Sym t = w[0];
      if (w.size() == 3) {
        add_letter(m.push[var_index(w[2])][i][var_index(w[1])], t, c);
      } else if (w.size() == 2) {
        add_letter(m.neutral[i][var_index(w[1])], t, c);
      } else {
        for (std::size_t k = 0; k < n; ++k) add_letter(m.pop[k][i][k], t, c);
        add_letter(m.neutral[i][f], t, c);
      }
    }
  a.initial.assign(n + 1, zero(s.kind));
  a.final.assign(n + 1, zero(s.kind));
  a.initial[start] = one(s.kind);
  a.final[f] = one(s.kind);
  return a;
}

SimpleOmegaPDA induced_omega_pda(const MixedSystem& s, std::size_t x_start, std::size_t z_start,
                                 std::size_t l) {
  validate(s);
  const std::size_t n = s.n(), zm = s.m();
  if (x_start >= n) throw std::out_of_range("x start variable out of range");
  if (z_start >= zm) throw std::out_of_range("z start variable out of range");
  if (l > zm) throw std::out_of_range("Büchi count exceeds the number of z-variables");
  if (!is_gnf_mixed(s)) throw pda_error("induced automaton needs a mixed system in GNF");
  std::vector<const Polynomial*> polys;
  for (const auto& p : s.x_rhs) polys.push_back(&p);
  for (const auto& row : s.rho)
    for (const auto& p : row) polys.push_back(&p);
  check_epsilon(s.x_rhs, s.x_vars, x_start, referenced(n, polys));

  // state order z_1..z_m, x_1..x_n, f; stack order X_1..X_n, Z_1..Z_m
  auto zs = [](std::size_t i) { return i; };
  auto xs = [zm](std::size_t i) { return zm + i; };
  const std::size_t f = zm + n;
  std::vector<std::string> states = s.z_vars;
  states.insert(states.end(), s.x_vars.begin(), s.x_vars.end());
  std::string fname = "f";
  while (std::find(states.begin(), states.end(), fname) != states.end()) fname += "_";
  states.push_back(fname);
  std::vector<std::string> gamma;
  for (const auto& v : s.x_vars) stack_name(v, 'X', gamma);
  for (const auto& v : s.z_vars) stack_name(v, 'Z', gamma);
  auto xsym = [](std::size_t k) { return k; };
  auto zsym = [n](std::size_t k) { return n + k; };

  SimpleOmegaPDA a;
  a.matrix = empty_pd_matrix(s.kind, s.sigma, states, gamma);
  ResetPDMatrix& m = a.matrix;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [w, c] : s.x_rhs[i].terms()) {
      const Sym t = w[0];
      if (w.size() == 3) {
        add_letter(m.push[xsym(var_index(w[2]))][xs(i)][xs(var_index(w[1]))], t, c);
      } else if (w.size() == 2) {
        add_letter(m.neutral[xs(i)][xs(var_index(w[1]))], t, c);
      } else {
        for (std::size_t k = 0; k < n; ++k) add_letter(m.pop[xsym(k)][xs(i)][xs(k)], t, c);
        for (std::size_t k = 0; k < zm; ++k) add_letter(m.pop[zsym(k)][xs(i)][zs(k)], t, c);
        add_letter(m.neutral[xs(i)][f], t, c);
      }
    }
  for (std::size_t i = 0; i < zm; ++i)
    for (std::size_t j = 0; j < zm; ++j)
      for (const auto& [w, c] : s.rho[i][j].terms()) {
        if (w.size() == 1)
          add_letter(m.neutral[zs(i)][zs(j)], w[0], c);
        else
          add_letter(m.push[zsym(j)][zs(i)][xs(var_index(w[1]))], w[0], c);
      }
  a.initial.assign(f + 1, zero(s.kind));
  a.final.assign(f + 1, zero(s.kind));
  a.initial[xs(x_start)] = one(s.kind);
  a.initial[zs(z_start)] = one(s.kind);
  a.final[f] = one(s.kind);
  a.buchi = l;
  return a;
}

namespace {

struct Move {
  std::size_t to;
  std::size_t sym;  // stack symbol (push and pop moves)
  Value w;
};

// Transitions indexed by letter and source state.
struct Steps {
  std::size_t n = 0;
  // [letter][state]
  std::vector<std::vector<std::vector<Move>>> neutral, push;
  // [letter][symbol][state]
  std::vector<std::vector<std::vector<std::vector<Move>>>> pop;

  explicit Steps(const ResetPDMatrix& m) : n(m.n()) {
    const std::size_t ns = m.sigma.size(), ng = m.gamma.size();
    neutral.assign(ns, std::vector<std::vector<Move>>(n));
    push = neutral;
    pop.assign(ns, std::vector<std::vector<std::vector<Move>>>(ng, std::vector<std::vector<Move>>(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [w, c] : m.neutral[i][j].terms()) neutral[w[0]][i].push_back({j, 0, c});
        for (std::size_t p = 0; p < ng; ++p) {
          for (const auto& [w, c] : m.push[p][i][j].terms()) push[w[0]][i].push_back({j, p, c});
          for (const auto& [w, c] : m.pop[p][i][j].terms()) pop[w[0]][p][i].push_back({j, p, c});
        }
      }
  }

  bool known(Sym a) const { return a >= 0 && static_cast<std::size_t>(a) < neutral.size(); }
};

}  // namespace

std::vector<std::pair<Configuration, Value>> successors(const SimpleOmegaPDA& a,
                                                        const Configuration& c, Sym letter) {
  validate(a);
  const Steps st(a.matrix);
  std::vector<std::pair<Configuration, Value>> r;
  if (!st.known(letter) || c.state >= a.n()) return r;
  for (const auto& mv : st.neutral[letter][c.state]) r.push_back({{mv.to, c.stack}, mv.w});
  for (const auto& mv : st.push[letter][c.state]) {
    Stack s{mv.sym};
    s.insert(s.end(), c.stack.begin(), c.stack.end());
    r.push_back({{mv.to, s}, mv.w});
  }
  if (!c.stack.empty())
    for (const auto& mv : st.pop[letter][c.stack[0]][c.state])
      r.push_back({{mv.to, Stack(c.stack.begin() + 1, c.stack.end())}, mv.w});
  return r;
}

namespace {

// Balanced runs: F(i, q)[j - i][q'] sums the runs from (q, pi) at position i
// to (q', pi) at position j that never pop below pi.
class Balanced {
 public:
  Balanced(const Steps& st, Kind k, const Word& w) : st_(st), k_(k), w_(w) {}

  const std::vector<std::vector<Value>>& from(std::size_t i, std::size_t q) {
    auto it = memo_.find({i, q});
    if (it != memo_.end()) return it->second;
    const std::size_t len = w_.size();
    std::vector<std::vector<Value>> cur(len - i + 1, std::vector<Value>(st_.n, zero(k_)));
    cur[0][q] = one(k_);
    for (std::size_t j = i; j < len; ++j) {
      const Sym a = w_[j];
      if (!st_.known(a)) break;
      for (std::size_t s = 0; s < st_.n; ++s) {
        const Value here = cur[j - i][s];
        if (is_zero(here)) continue;
        for (const auto& mv : st_.neutral[a][s]) {
          Value& dst = cur[j + 1 - i][mv.to];
          dst = add(dst, mul(here, mv.w));
        }
        if (j + 1 >= len) continue;
        for (const auto& mv : st_.push[a][s]) {
          const auto& inner = from(j + 1, mv.to);
          const Value pre = mul(here, mv.w);
          for (std::size_t j2 = j + 1; j2 < len; ++j2) {
            const Sym b = w_[j2];
            for (std::size_t s2 = 0; s2 < st_.n; ++s2) {
              const Value mid = inner[j2 - j - 1][s2];
              if (is_zero(mid)) continue;
              for (const auto& pm : st_.pop[b][mv.sym][s2]) {
                Value& dst = cur[j2 + 1 - i][pm.to];
                dst = add(dst, mul(mul(pre, mid), pm.w));
              }
            }
          }
        }
      }
    }
    return memo_.emplace(std::make_pair(i, q), std::move(cur)).first->second;
  }

 private:
  const Steps& st_;
  Kind k_;
  const Word& w_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Value>>> memo_;
};

}  // namespace

Value behavior_finite(const SimpleOmegaPDA& a, const Word& w) {
  validate(a);
  const Kind k = a.matrix.kind;
  const Steps st(a.matrix);
  Balanced bal(st, k, w);
  Value total = zero(k);
  for (std::size_t q = 0; q < a.n(); ++q) {
    if (is_zero(a.initial[q])) continue;
    const auto& row = bal.from(0, q).back();
    for (std::size_t q2 = 0; q2 < a.n(); ++q2)
      total = add(total, mul(mul(a.initial[q], row[q2]), a.final[q2]));
  }
  return total;
}

Value run_value(const SimpleOmegaPDA& a, const Configuration& from, const Configuration& to,
                const Word& w) {
  validate(a);
  const Kind k = a.matrix.kind;
  const Steps st(a.matrix);
  std::map<std::tuple<std::size_t, std::size_t, Stack>, Value> memo;
  std::function<Value(std::size_t, const Configuration&)> go = [&](std::size_t pos,
                                                                  const Configuration& c) {
    if (pos == w.size()) return c == to ? one(k) : zero(k);
    // every step pops at most one symbol
    if (c.stack.size() > to.stack.size() + (w.size() - pos)) return zero(k);
    const auto key = std::make_tuple(pos, c.state, c.stack);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Value r = zero(k);
    const Sym x = w[pos];
    if (st.known(x)) {
      for (const auto& mv : st.neutral[x][c.state])
        r = add(r, mul(mv.w, go(pos + 1, {mv.to, c.stack})));
      for (const auto& mv : st.push[x][c.state]) {
        Stack s{mv.sym};
        s.insert(s.end(), c.stack.begin(), c.stack.end());
        r = add(r, mul(mv.w, go(pos + 1, {mv.to, s})));
      }
      if (!c.stack.empty())
        for (const auto& mv : st.pop[x][c.stack[0]][c.state])
          r = add(r, mul(mv.w, go(pos + 1, {mv.to, Stack(c.stack.begin() + 1, c.stack.end())})));
    }
    memo.emplace(key, r);
    return r;
  };
  if (from.state >= a.n() || to.state >= a.n()) throw std::out_of_range("state out of range");
  return go(0, from);
}

namespace {

// Omega runs on u v^omega.  Every infinite run splits uniquely into steps
// that keep the stack height, pushes that are never popped, and excursions
// (push X, a run above X, pop X).  Excursions are summarised per entry node
// by a least fixed point over the folded positions; the rest is a Büchi
// graph over (state, position).
class OmegaRuns {
 public:
  OmegaRuns(const SimpleOmegaPDA& a, const Lasso& w, std::size_t max_rounds)
      : w_(w), st_(a.matrix), k_(a.matrix.kind), n_(a.n()), np_(w.positions()) {
    if (!idempotent(k_)) throw semiring_error("omega behavior needs an idempotent semiring");
    if (!a.buchi) throw pda_error("omega behavior needs a Büchi count");
    l_ = *a.buchi;
    for (std::size_t p = 0; p < np_; ++p) {
      const Sym x = w_.at(p);
      if (!st_.known(x)) continue;
      for (std::size_t q = 0; q < n_; ++q)
        for (const auto& mv : st_.push[x][q]) entry_of(mv.to, w_.fold(p + 1));
    }
    solve(max_rounds);
    build_top();
  }

  bool exact() const { return exact_; }
  std::size_t rounds() const { return rounds_; }

  Value value(const Configuration& c) {
    std::map<std::pair<std::size_t, std::size_t>, Value> memo;
    return value_at(c.stack, 0, c.state, 0, memo);
  }

 private:
  using Facts = std::vector<std::pair<std::size_t, Value>>;

  std::size_t node(std::size_t q, std::size_t p, std::size_t g) const { return (q * np_ + p) * 2 + g; }
  std::size_t rep(std::size_t q) const { return q < l_ ? 1 : 0; }

  std::size_t entry_of(std::size_t q, std::size_t p) {
    auto [it, fresh] = entries_.emplace(std::make_pair(q, p), entry_nodes_.size());
    if (fresh) entry_nodes_.push_back(node(q, p, rep(q)));
    return it->second;
  }

  // Excursion atoms leaving (q, p) with flag g, given the summaries.
  template <class F>
  void excursions(std::size_t q, std::size_t p, const std::vector<Facts>& facts, F&& emit) const {
    const Sym x = w_.at(p);
    if (!st_.known(x)) return;
    for (const auto& mv : st_.push[x][q]) {
      const std::size_t e = entries_.at({mv.to, w_.fold(p + 1)});
      for (const auto& [d, v] : facts[e]) {
        const std::size_t g2 = d % 2, p2 = (d / 2) % np_, q2 = d / 2 / np_;
        const Sym y = w_.at(p2);
        if (!st_.known(y)) continue;
        for (const auto& pm : st_.pop[y][mv.sym][q2])
          emit(pm.to, w_.fold(p2 + 1), g2, mul(mul(mv.w, v), pm.w));
      }
    }
  }

  BuchiGraph level_graph(const std::vector<Facts>& facts) const {
    BuchiGraph g(k_);
    for (std::size_t i = 0; i < n_ * np_ * 2; ++i) g.add_node(false);
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t p = 0; p < np_; ++p) {
        const Sym x = w_.at(p);
        if (!st_.known(x)) continue;
        for (std::size_t f = 0; f < 2; ++f) {
          for (const auto& mv : st_.neutral[x][q])
            g.add_edge(node(q, p, f), node(mv.to, w_.fold(p + 1), f | rep(mv.to)), mv.w);
          excursions(q, p, facts, [&](std::size_t q2, std::size_t p2, std::size_t g2, const Value& v) {
            g.add_edge(node(q, p, f), node(q2, p2, f | g2 | rep(q2)), v);
          });
        }
      }
    return g;
  }

  static Facts sparse(const std::vector<Value>& v) {
    Facts r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) r.emplace_back(i, v[i]);
    return r;
  }

  void solve(std::size_t max_rounds) {
    const std::size_t ne = entry_nodes_.size();
    facts_.assign(ne, Facts{});
    std::vector<std::vector<char>> frozen(ne, std::vector<char>(n_ * np_ * 2, 0));
    // Past this round a changing summary contains a pumpable positive part.
    const std::size_t widen = ne * n_ * np_ * 2 + 1;
    for (rounds_ = 1; rounds_ <= max_rounds; ++rounds_) {
      const BuchiGraph g = level_graph(facts_);
      std::vector<Facts> next(ne);
      for (std::size_t e = 0; e < ne; ++e) {
        std::vector<Value> v = path_sums(g, entry_nodes_[e]);
        for (std::size_t d = 0; d < v.size(); ++d)
          if (frozen[e][d]) v[d] = top(k_);
        next[e] = sparse(v);
      }
      if (next == facts_) {
        exact_ = true;
        level_ = level_graph(facts_);
        return;
      }
      if (rounds_ > widen) {
        std::vector<Value> old(n_ * np_ * 2, zero(k_));
        for (std::size_t e = 0; e < ne; ++e) {
          std::fill(old.begin(), old.end(), zero(k_));
          for (const auto& [d, v] : facts_[e]) old[d] = v;
          for (auto& [d, v] : next[e])
            if (v != old[d]) {
              frozen[e][d] = 1;
              v = top(k_);
            }
        }
      }
      facts_ = std::move(next);
    }
    rounds_ = max_rounds;
    level_ = level_graph(facts_);
  }

  void build_top() {
    const std::size_t base = n_ * np_;
    top_ = BuchiGraph(k_);
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t p = 0; p < np_; ++p) top_.add_node(q < l_);
    // relay nodes mark excursions that visit a repeated state
    for (std::size_t i = 0; i < base; ++i) top_.add_node(true);
    for (std::size_t i = 0; i < base; ++i) top_.add_edge(base + i, i, one(k_));
    auto id = [&](std::size_t q, std::size_t p) { return q * np_ + p; };
    for (std::size_t q = 0; q < n_; ++q)
      for (std::size_t p = 0; p < np_; ++p) {
        const Sym x = w_.at(p);
        if (!st_.known(x)) continue;
        const std::size_t next = w_.fold(p + 1);
        for (const auto& mv : st_.neutral[x][q]) top_.add_edge(id(q, p), id(mv.to, next), mv.w);
        for (const auto& mv : st_.push[x][q]) top_.add_edge(id(q, p), id(mv.to, next), mv.w);
        excursions(q, p, facts_, [&](std::size_t q2, std::size_t p2, std::size_t g2, const Value& v) {
          top_.add_edge(id(q, p), g2 ? base + id(q2, p2) : id(q2, p2), v);
        });
      }
    top_values_ = buchi_values(top_);
  }

  // Runs from (q, p) with stack[depth..] below.
  Value value_at(const Stack& stack, std::size_t depth, std::size_t q, std::size_t p,
                 std::map<std::pair<std::size_t, std::size_t>, Value>& memo) {
    if (depth == stack.size()) return top_values_[q * np_ + p];
    const auto key = std::make_pair(depth * n_ + q, p);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // runs that never pop stack[depth] see an empty stack
    Value r = top_values_[q * np_ + p];
    const std::vector<Value> reach = path_sums(level_, node(q, p, rep(q)));
    for (std::size_t d = 0; d < reach.size(); ++d) {
      if (is_zero(reach[d])) continue;
      const std::size_t p2 = (d / 2) % np_, q2 = d / 2 / np_;
      const Sym y = w_.at(p2);
      if (!st_.known(y)) continue;
      for (const auto& pm : st_.pop[y][stack[depth]][q2])
        r = add(r, mul(mul(reach[d], pm.w), value_at(stack, depth + 1, pm.to, w_.fold(p2 + 1), memo)));
    }
    memo.emplace(key, r);
    return r;
  }

  const Lasso& w_;
  Steps st_;
  Kind k_;
  std::size_t n_, np_, l_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries_;
  std::vector<std::size_t> entry_nodes_;
  std::vector<Facts> facts_;
  bool exact_ = false;
  std::size_t rounds_ = 0;
  BuchiGraph level_{Kind::boolean};
  BuchiGraph top_{Kind::boolean};
  std::vector<Value> top_values_;
};

}  // namespace

OmegaResult omega_from(const SimpleOmegaPDA& a, const Configuration& c, const Lasso& w,
                       PdaCaps caps) {
  validate(a);
  if (c.state >= a.n()) throw std::out_of_range("state out of range");
  for (std::size_t s : c.stack)
    if (s >= a.matrix.gamma.size()) throw std::out_of_range("stack symbol out of range");
  OmegaRuns runs(a, w, caps.max_rounds ? caps.max_rounds : default_pda_rounds);
  OmegaResult r;
  r.value = runs.value(c);
  r.status = runs.exact() ? Status::exact : Status::inconclusive;
  r.cap_used = runs.rounds();
  return r;
}

OmegaResult behavior_omega_lasso(const SimpleOmegaPDA& a, const Lasso& w, PdaCaps caps) {
  validate(a);
  OmegaRuns runs(a, w, caps.max_rounds ? caps.max_rounds : default_pda_rounds);
  OmegaResult r;
  r.value = zero(a.matrix.kind);
  for (std::size_t q = 0; q < a.n(); ++q)
    if (!is_zero(a.initial[q])) r.value = add(r.value, mul(a.initial[q], runs.value({q, {}})));
  r.status = runs.exact() ? Status::exact : Status::inconclusive;
  r.cap_used = runs.rounds();
  return r;
}

Value omega_lasso_bounded(const SimpleOmegaPDA& a, const Lasso& w, std::size_t height,
                          std::size_t max_configs) {
  validate(a);
  if (!a.buchi) throw pda_error("omega behavior needs a Büchi count");
  const Kind k = a.matrix.kind;
  const Steps st(a.matrix);
  using Key = std::tuple<std::size_t, std::size_t, Stack>;  // state, position, stack
  std::map<Key, std::size_t> ids;
  std::vector<Key> keys;
  BuchiGraph g(k);
  auto intern = [&](const Key& key) {
    auto [it, fresh] = ids.emplace(key, keys.size());
    if (fresh) {
      if (keys.size() >= max_configs) throw pda_error("configuration budget exhausted");
      keys.push_back(key);
      g.add_node(std::get<0>(key) < *a.buchi);
    }
    return it->second;
  };
  for (std::size_t q = 0; q < a.n(); ++q)
    if (!is_zero(a.initial[q])) intern({q, 0, {}});
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto [q, p, stack] = keys[i];
    const Sym x = w.at(p);
    if (!st.known(x)) continue;
    const std::size_t next = w.fold(p + 1);
    for (const auto& mv : st.neutral[x][q]) g.add_edge(i, intern({mv.to, next, stack}), mv.w);
    if (stack.size() < height)
      for (const auto& mv : st.push[x][q]) {
        Stack s{mv.sym};
        s.insert(s.end(), stack.begin(), stack.end());
        g.add_edge(i, intern({mv.to, next, s}), mv.w);
      }
    if (!stack.empty())
      for (const auto& mv : st.pop[x][stack[0]][q])
        g.add_edge(i, intern({mv.to, next, Stack(stack.begin() + 1, stack.end())}), mv.w);
  }
  const auto val = buchi_values(g);
  Value r = zero(k);
  for (std::size_t q = 0; q < a.n(); ++q)
    if (!is_zero(a.initial[q])) r = add(r, mul(a.initial[q], val[ids.at({q, 0, {}})]));
  return r;
}

}  // namespace walg
