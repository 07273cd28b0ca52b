#include "doctest.h"

#include <algorithm>
#include <string>

#include "gen.hpp"
#include "walg/io.hpp"
#include "walg/pda.hpp"

using namespace walg;
using walg::testing::Rng;

namespace {

GrammarFile fixture(const std::string& name) { return read_grammar(std::string(WALG_DATA_DIR) + "/" + name); }

Lasso random_lasso(Rng& r, std::size_t letters) {
  Word u, v;
  for (std::size_t i = r.below(3); i > 0; --i) u.push_back(static_cast<Sym>(r.below(letters)));
  for (std::size_t i = 1 + r.below(2); i > 0; --i) v.push_back(static_cast<Sym>(r.below(letters)));
  return Lasso(u, v);
}

std::size_t state(const SimpleOmegaPDA& a, const std::string& name) {
  const auto& s = a.matrix.states;
  return static_cast<std::size_t>(std::find(s.begin(), s.end(), name) - s.begin());
}

std::size_t symbol(const SimpleOmegaPDA& a, const std::string& name) {
  const auto& g = a.matrix.gamma;
  return static_cast<std::size_t>(std::find(g.begin(), g.end(), name) - g.begin());
}

}  // namespace

TEST_CASE("automaton of the arctic block grammar") {
  const GrammarFile g = fixture("max_blocks_arctic.wg");
  const SimpleOmegaPDA a = induced_finite_pda(AlgebraicSystem{g.kind, g.sigma, g.vars, g.rhs}, 1);
  CHECK(a.n() == 6);
  CHECK(a.matrix.gamma.size() == 5);
  CHECK_FALSE(a.buchi.has_value());
  const std::size_t R = state(a, "R");
  // R pushes B on a, weight 1
  CHECK(a.matrix.push[symbol(a, "B")][R][R] == Polynomial::monomial(Value{Kind::arctic, 1}, {0}));
  CHECK(is_sink(a.matrix, state(a, "f")));
  CHECK_FALSE(is_sink(a.matrix, R));
  CHECK(behavior_finite(a, parse_word(g.sigma, "abab")) == Value{Kind::arctic, 1});
  CHECK(behavior_finite(a, parse_word(g.sigma, "aabbab")) == Value{Kind::arctic, 2});
  CHECK(behavior_finite(a, parse_word(g.sigma, "aab")) == zero(Kind::arctic));
}

TEST_CASE("blocks of the infinite matrix") {
  const GrammarFile g = fixture("max_blocks_arctic.wg");
  const SimpleOmegaPDA a = induced_finite_pda(AlgebraicSystem{g.kind, g.sigma, g.vars, g.rhs}, 1);
  const ResetPDMatrix& m = a.matrix;
  const std::size_t B = symbol(a, "B"), T = symbol(a, "T");
  CHECK(expand_entry(m, {}, {B}) == m.push[B]);
  CHECK(expand_entry(m, {T}, {B, T}) == m.push[B]);
  CHECK(expand_entry(m, {B, T}, {T}) == m.pop[B]);
  CHECK(expand_entry(m, {T, B}, {T, B}) == m.neutral);
  CHECK(expand_entry(m, {}, {}) == m.neutral);
  CHECK(expand_entry(m, {}, {B, T}) == zero_poly_matrix(Kind::arctic, m.n()));
  CHECK(expand_entry(m, {T}, {B}) == zero_poly_matrix(Kind::arctic, m.n()));
}

TEST_CASE("epsilon in the start component is reported") {
  const GrammarFile g = parse_grammar("@semiring boolean\n@alphabet a b\nx1 = eps | a x2\nx2 = b\n");
  const AlgebraicSystem x{g.kind, g.sigma, g.vars, g.rhs};
  try {
    induced_finite_pda(x, 0);
    FAIL("expected an epsilon error");
  } catch (const pda_epsilon_error& e) {
    CHECK(e.eps == one(Kind::boolean));
  }
  CHECK(without_epsilon(x.rhs[0]).coeff({}) == zero(Kind::boolean));
}

TEST_CASE("single rule automaton") {
  const Kind B = Kind::boolean;
  const AlgebraicSystem s{B, walg::testing::letters(1), {"x1"}, {Polynomial::monomial(one(B), {0})}};
  const SimpleOmegaPDA a = induced_finite_pda(s, 0);
  CHECK(a.n() == 2);
  CHECK(behavior_finite(a, {0}) == one(B));
  CHECK(behavior_finite(a, {}) == zero(B));
  CHECK(behavior_finite(a, {0, 0}) == zero(B));
}

TEST_CASE("finite behavior equals the least solution") {
  Rng r(41);
  for (int c = 0; c < 80; ++c) {
    const Kind k = c % 2 ? Kind::tropical : Kind::counting;
    const AlgebraicSystem s = walg::testing::gnf_system(r, k, 1 + r.below(3), 2);
    const auto sol = least_solution_finite(k, s.rhs, 5);
    const std::size_t start = r.below(s.size());
    const SimpleOmegaPDA a = induced_finite_pda(s, start);
    for (const Word& w : walg::testing::words_upto(2, 5)) CHECK(behavior_finite(a, w) == sol[start].coeff(w));
  }
}

TEST_CASE("finite and infinite parts of the omega automaton separate") {
  Rng r(43);
  for (int c = 0; c < 60; ++c) {
    const Kind k = c % 2 ? Kind::tropical : Kind::boolean;
    const MixedSystem s = walg::testing::gnf_mixed(r, k, 1 + r.below(2), 1 + r.below(3), 2);
    const std::size_t xs = r.below(s.n()), zs = r.below(s.m());
    SimpleOmegaPDA a = induced_omega_pda(s, xs, zs, 1 + r.below(s.m()));
    const auto sol = least_solution_finite(k, s.x_rhs, 4);
    for (const Word& w : walg::testing::words_upto(2, 4)) CHECK(behavior_finite(a, w) == sol[xs].coeff(w));

    // x-started runs end in the sink, z-started runs never empty the stack in f
    SimpleOmegaPDA x_only = a;
    x_only.initial[zs] = zero(k);
    SimpleOmegaPDA z_only = a;
    z_only.initial[s.m() + xs] = zero(k);
    for (const Word& w : walg::testing::words_upto(2, 4)) CHECK(behavior_finite(z_only, w) == zero(k));
    for (int t = 0; t < 3; ++t) {
      const Lasso w = random_lasso(r, 2);
      const OmegaResult xr = behavior_omega_lasso(x_only, w);
      if (xr.status == Status::exact) CHECK(xr.value == zero(k));
      const OmegaResult full = behavior_omega_lasso(a, w);
      const OmegaResult canon = canonical_omega_lasso(s, *a.buchi, zs, w);
      if (full.status == Status::exact && canon.status == Status::exact) CHECK(full.value == canon.value);
    }
  }
}

TEST_CASE("runs from a pushed symbol back to its state") {
  Rng r(47);
  for (int c = 0; c < 60; ++c) {
    const Kind k = c % 2 ? Kind::tropical : Kind::counting;
    MixedSystem s = walg::testing::gnf_mixed(r, k, 1 + r.below(3), 1 + r.below(2), 2);
    // without z-moves a run ends at the pop of Z_j
    s.rho = empty_rho(k, s.m());
    const SimpleOmegaPDA a = induced_omega_pda(s, 0, 0, s.m());
    const std::size_t n = s.n(), m = s.m();
    const auto sol = least_solution_finite(k, s.x_rhs, 4);
    const std::size_t x = r.below(n);
    const std::size_t j = r.below(m);
    for (const Word& w : walg::testing::words_upto(2, 4)) {
      // (x_k, Z_j) reaches (z_j, eps) with the weight of x_k at w
      CHECK(run_value(a, {m + x, {n + j}}, {j, {}}, w) == sol[x].coeff(w));
      CHECK(run_value(a, {m + x, {}}, {m + n, {}}, w) == sol[x].coeff(w));
    }
  }
}

TEST_CASE("omega behavior unfolds one step") {
  Rng r(53);
  for (int c = 0; c < 60; ++c) {
    const Kind k = c % 2 ? Kind::tropical : Kind::boolean;
    const MixedSystem s = walg::testing::gnf_mixed(r, k, 1 + r.below(2), 1 + r.below(3), 2);
    const SimpleOmegaPDA a = induced_omega_pda(s, 0, 0, 1 + r.below(s.m()));
    const Lasso w = random_lasso(r, 2);
    const Configuration start{r.below(s.m()), r.coin(50) ? Stack{} : Stack{s.n() + r.below(s.m())}};
    const OmegaResult here = omega_from(a, start, w);
    if (here.status != Status::exact) continue;
    Value sum = zero(k);
    bool exact = true;
    for (const auto& [next, weight] : successors(a, start, w.at(0))) {
      const OmegaResult rest = omega_from(a, next, w.shifted(1));
      exact = exact && rest.status == Status::exact;
      sum = add(sum, mul(weight, rest.value));
    }
    if (exact) CHECK(sum == here.value);
  }
}

TEST_CASE("bounded stack runs give lower bounds") {
  Rng r(59);
  for (int c = 0; c < 60; ++c) {
    const Kind k = c % 2 ? Kind::tropical : Kind::boolean;
    const MixedSystem s = walg::testing::gnf_mixed(r, k, 1 + r.below(2), 1 + r.below(3), 2);
    const SimpleOmegaPDA a = induced_omega_pda(s, 0, 0, 1 + r.below(s.m()));
    const Lasso w = random_lasso(r, 2);
    const OmegaResult exact = behavior_omega_lasso(a, w);
    if (exact.status != Status::exact) continue;
    Value prev = zero(k);
    for (std::size_t h = 0; h <= 4; ++h) {
      const Value b = omega_lasso_bounded(a, w, h);
      CHECK(natural_leq(prev, b));
      CHECK(natural_leq(b, exact.value));
      prev = b;
    }
  }
}

TEST_CASE("automaton JSON round trip") {
  Rng r(61);
  for (int c = 0; c < 30; ++c) {
    const Kind k = c % 2 ? Kind::tropical : Kind::counting;
    const MixedSystem s = walg::testing::gnf_mixed(r, k, 1 + r.below(3), 1 + r.below(3), 2);
    const SimpleOmegaPDA a = induced_omega_pda(s, 0, 0, 1);
    const nlohmann::json j = automaton_json(a);
    CHECK(automaton_json(automaton_from_json(j)) == j);
  }
  const MixedSystem m = to_mixed(fixture("anbn_ddc_pair.wg"));
  const SimpleOmegaPDA f = induced_finite_pda(AlgebraicSystem{m.kind, m.sigma, m.x_vars, m.x_rhs}, 0);
  CHECK_FALSE(automaton_from_json(automaton_json(f)).buchi.has_value());
}
