#include <algorithm>
#include <functional>
#include <map>

#include "walg/gnf.hpp"
#include "walg/matrix.hpp"

namespace walg {

namespace {

std::size_t fresh_var(AlgebraicSystem& s, const std::string& base) {
  std::string name = base;
  while (std::find(s.vars.begin(), s.vars.end(), name) != s.vars.end()) name += "_";
  s.vars.push_back(name);
  s.rhs.emplace_back(s.kind);
  return s.vars.size() - 1;
}

// one Kleene round on epsilon coefficients
std::vector<Value> eps_round(const AlgebraicSystem& s, const std::vector<Value>& e,
                             const std::vector<char>& fixed) {
  std::vector<Value> r(s.size(), zero(s.kind));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (fixed[i]) {
      r[i] = top(s.kind);
      continue;
    }
    for (const auto& [w, c] : s.rhs[i].terms()) {
      if (!std::all_of(w.begin(), w.end(), [](Sym x) { return is_var(x); })) continue;
      Value v = c;
      for (Sym x : w) v = mul(v, e[var_index(x)]);
      r[i] = add(r[i], v);
    }
  }
  return r;
}

// Step 2: x_i = e_i eps + x_i', rhs rewritten over the primed variables.
AlgebraicSystem proper_system(const AlgebraicSystem& s, const std::vector<Value>& e) {
  AlgebraicSystem r{s.kind, s.sigma, s.vars, {}};
  for (const auto& p : s.rhs) {
    Polynomial q(s.kind);
    for (const auto& [w, c] : p.terms()) {
      // expand every variable occurrence into its eps part or itself
      std::vector<std::pair<Word, Value>> acc{{Word{}, c}};
      for (Sym x : w) {
        std::vector<std::pair<Word, Value>> next;
        for (auto& [aw, ac] : acc) {
          if (is_var(x) && !is_zero(e[var_index(x)])) next.emplace_back(aw, mul(ac, e[var_index(x)]));
          Word nw = aw;
          nw.push_back(x);
          next.emplace_back(std::move(nw), ac);
        }
        acc = std::move(next);
      }
      for (const auto& [aw, ac] : acc)
        if (!aw.empty()) q.add_term(aw, ac);
    }
    r.rhs.push_back(std::move(q));
  }
  return r;
}

// Step 3: x = C x + q  =>  x = C* q.
AlgebraicSystem eliminate_chains(const AlgebraicSystem& s) {
  const std::size_t n = s.size();
  Matrix chain(s.kind, n, n);
  std::vector<Polynomial> rest(n, Polynomial(s.kind));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [w, c] : s.rhs[i].terms()) {
      if (w.size() == 1 && is_var(w[0]))
        chain.at(i, var_index(w[0])) = add(chain.at(i, var_index(w[0])), c);
      else
        rest[i].add_term(w, c);
    }
  const Matrix cs = mat_star(chain);
  AlgebraicSystem r{s.kind, s.sigma, s.vars, std::vector<Polynomial>(n, Polynomial(s.kind))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(cs.at(i, j))) r.rhs[i] = poly_add(r.rhs[i], poly_scale(cs.at(i, j), rest[j]));
  return r;
}

void drop_unproductive(AlgebraicSystem& s) {
  const auto prod = productive(s);
  for (auto& p : s.rhs) {
    Polynomial q(s.kind);
    for (const auto& [w, c] : p.terms())
      if (std::all_of(w.begin(), w.end(), [&](Sym x) { return !is_var(x) || prod[var_index(x)]; }))
        q.add_term(w, c);
    p = std::move(q);
  }
}

// Step 4: monomials become `a` or `A B`.
void to_quadratic(AlgebraicSystem& s) {
  std::map<Sym, std::size_t> term_var;
  std::map<Word, std::size_t> pair_var;
  auto term_of = [&](Sym a) {
    auto it = term_var.find(a);
    if (it != term_var.end()) return it->second;
    const std::size_t v = fresh_var(s, "t_" + s.sigma.names.at(static_cast<std::size_t>(a)));
    s.rhs[v].add_term({a}, one(s.kind));
    term_var.emplace(a, v);
    return v;
  };
  std::function<std::size_t(const Word&)> chain_of = [&](const Word& w) -> std::size_t {
    auto it = pair_var.find(w);
    if (it != pair_var.end()) return it->second;
    const std::size_t v = fresh_var(s, "c" + std::to_string(pair_var.size() + 1));
    pair_var.emplace(w, v);
    Word body{w[0]};
    body.push_back(w.size() == 2 ? w[1] : var_sym(chain_of(Word(w.begin() + 1, w.end()))));
    s.rhs[v].add_term(body, one(s.kind));
    return v;
  };
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial cur = s.rhs[i];  // fresh variables reallocate rhs
    Polynomial q(s.kind);
    for (const auto& [w, c] : cur.terms()) {
      if (w.size() == 1) {
        q.add_term(w, c);
        continue;
      }
      Word vw;
      for (Sym x : w) vw.push_back(is_var(x) ? x : var_sym(term_of(x)));
      if (vw.size() > 2) vw = {vw[0], var_sym(chain_of(Word(vw.begin() + 1, vw.end())))};
      q.add_term(vw, c);
    }
    s.rhs[i] = std::move(q);
  }
}

// Step 5: with quadratic rules written as the row system x = x H + K (K the
// single terminals, H_{j,i} the B of each x_j B in x_i), x = K + K Y and
// Y = H + H Y.  Leading variables of H are then replaced by the new x rules.
void to_leading_terminal(AlgebraicSystem& s) {
  const std::size_t r = s.size();
  std::vector<Polynomial> K(r, Polynomial(s.kind));
  // H[j][i]: weighted variables B with x_j B in the rule of x_i
  std::vector<std::vector<std::vector<std::pair<std::size_t, Value>>>> H(
      r, std::vector<std::vector<std::pair<std::size_t, Value>>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& [w, c] : s.rhs[i].terms()) {
      if (w.size() == 1)
        K[i].add_term(w, c);
      else
        H[var_index(w[0])][i].emplace_back(var_index(w[1]), c);
    }
  // Y_{j,i} is nonzero only when i is reachable from j along H
  std::vector<std::vector<char>> reach(r, std::vector<char>(r, 0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) reach[j][i] = !H[j][i].empty();
  for (std::size_t m = 0; m < r; ++m)
    for (std::size_t j = 0; j < r; ++j)
      if (reach[j][m])
        for (std::size_t i = 0; i < r; ++i) reach[j][i] = reach[j][i] || reach[m][i];
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> Y(r, std::vector<std::size_t>(r, kNone));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i)
      if (reach[j][i]) Y[j][i] = fresh_var(s, s.vars[j] + "_" + s.vars[i]);
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial q = K[i];
    for (std::size_t j = 0; j < r; ++j)
      if (Y[j][i] != kNone)
        q = poly_add(q, poly_mul(K[j], Polynomial::monomial(one(s.kind), {var_sym(Y[j][i])})));
    s.rhs[i] = std::move(q);
  }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) {
      if (Y[j][i] == kNone) continue;
      Polynomial q(s.kind);
      for (std::size_t k = 0; k < r; ++k) {
        Polynomial tail = Polynomial::epsilon(s.kind);
        if (k != i) tail = Polynomial(s.kind);
        if (Y[k][i] != kNone) tail.add_term({var_sym(Y[k][i])}, one(s.kind));
        if (tail.empty()) continue;
        for (const auto& [b, c] : H[j][k])
          q = poly_add(q, poly_mul(poly_scale(c, s.rhs[b]), tail));
      }
      s.rhs[Y[j][i]] = std::move(q);
    }
}

// Step 6: at most two trailing variables, via variables for variable strings.
void shorten_tails(AlgebraicSystem& s) {
  std::map<Word, std::size_t> named;
  std::vector<std::pair<std::size_t, Word>> pending;
  auto compress = [&](const Word& w, Word& out) {
    if (w.empty()) return;
    if (w.size() == 1) {
      out.push_back(w[0]);
      return;
    }
    auto it = named.find(w);
    if (it == named.end()) {
      const std::size_t v = fresh_var(s, "n" + std::to_string(named.size() + 1));
      it = named.emplace(w, v).first;
      pending.emplace_back(v, w);
    }
    out.push_back(var_sym(it->second));
  };
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial cur = s.rhs[i];
    Polynomial q(s.kind);
    for (const auto& [w, c] : cur.terms()) {
      if (w.size() <= 3) {
        q.add_term(w, c);
        continue;
      }
      Word nw{w[0], w[1]};
      compress(Word(w.begin() + 2, w.end()), nw);
      q.add_term(nw, c);
    }
    s.rhs[i] = std::move(q);
  }
  while (!pending.empty()) {
    auto [v, w] = pending.back();
    pending.pop_back();
    Polynomial q(s.kind);
    const Word rest(w.begin() + 1, w.end());
    const Polynomial lead = s.rhs[var_index(w[0])];
    for (const auto& [lw, lc] : lead.terms()) {
      Word nw{lw[0]};
      compress(Word(lw.begin() + 1, lw.end()), nw);
      compress(rest, nw);
      q.add_term(nw, lc);
    }
    s.rhs[v] = std::move(q);
  }
}

}  // namespace

std::vector<char> productive(const AlgebraicSystem& s) {
  std::vector<char> prod(s.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (prod[i]) continue;
      for (const auto& [w, c] : s.rhs[i].terms())
        if (std::all_of(w.begin(), w.end(), [&](Sym x) { return !is_var(x) || prod[var_index(x)]; })) {
          prod[i] = 1;
          changed = true;
          break;
        }
    }
  }
  return prod;
}

std::vector<Value> epsilon_coefficients(const AlgebraicSystem& s) {
  const std::size_t n = s.size();
  std::vector<char> fixed(n, 0);
  for (;;) {
    std::vector<Value> e(n, zero(s.kind));
    for (std::size_t r = 0; r <= n; ++r) e = eps_round(s, e, fixed);
    const auto next = eps_round(s, e, fixed);
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i)
      if (next[i] != e[i]) {
        // a derivation of height n+2 beats all lower ones: it contains a pump
        fixed[i] = 1;
        changed = true;
      }
    if (!changed) return e;
  }
}

AlgebraicSystem extract_component(const AlgebraicSystem& s, std::size_t c) {
  if (c >= s.size()) throw std::out_of_range("extract_component: variable out of range");
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(s.size(), kNone);
  std::vector<std::size_t> order{c};
  index[c] = 0;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (std::size_t v : s.rhs[order[q]].variables())
      if (index[v] == kNone) {
        index[v] = order.size();
        order.push_back(v);
      }
  AlgebraicSystem r{s.kind, s.sigma, {}, {}};
  for (std::size_t v : order) {
    r.vars.push_back(s.vars[v]);
    r.rhs.push_back(s.rhs[v].map_vars([&](std::size_t x) { return var_sym(index[x]); }));
  }
  return r;
}

GnfResult finite_gnf(const AlgebraicSystem& in, bool force) {
  validate(in);
  const std::size_t n = in.size();
  GnfResult res;
  res.eps = epsilon_coefficients(in);
  if (!force && is_gnf(in)) {
    res.sys = in;
    res.unchanged = true;
    for (std::size_t i = 0; i < n; ++i) res.component.push_back(i);
    return res;
  }
  AlgebraicSystem s = eliminate_chains(proper_system(in, res.eps));
  drop_unproductive(s);
  to_quadratic(s);
  to_leading_terminal(s);
  shorten_tails(s);
  for (std::size_t i = 0; i < n; ++i) {
    res.proper.push_back(i);
    if (is_zero(res.eps[i])) {
      res.component.push_back(i);
      continue;
    }
    const std::size_t f = fresh_var(s, s.vars[i] + "_e");
    s.rhs[f] = poly_add(Polynomial::monomial(res.eps[i], {}), s.rhs[i]);
    res.component.push_back(f);
  }
  res.sys = std::move(s);
  return res;
}

}  // namespace walg
