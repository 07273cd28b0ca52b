#include "doctest.h"

#include <string>

#include "gen.hpp"
#include "oracle.hpp"
#include "walg/gnf.hpp"
#include "walg/io.hpp"

using namespace walg;
using walg::testing::Rng;
using walg::testing::series;

namespace {

const Kind B = Kind::boolean;
const Kind T = Kind::tropical;

Value tv(std::int64_t v) { return Value{T, v}; }

// Finite coefficients of a series on all words up to max_len over `letters`.
std::vector<Value> coefficients(const SeriesRef& r, std::size_t letters, std::size_t max_len) {
  const auto sol = least_solution_finite(r.sys.kind, r.sys.rhs, max_len)[r.comp];
  std::vector<Value> out;
  for (const Word& w : walg::testing::words_upto(letters, max_len)) {
    Word x;
    bool ok = true;
    for (Sym a : w) {
      const Sym b = r.sys.sigma.find(std::string(1, static_cast<char>('a' + a)));
      ok = ok && b >= 0;
      x.push_back(b);
    }
    out.push_back(ok ? sol.coeff(x) : zero(r.sys.kind));
  }
  return out;
}

Value at(const SelectedMixed& m, const Alphabet& sigma, const std::string& lasso) {
  const auto w = walg::testing::translate(parse_lasso(sigma, lasso), sigma, m.sys.sigma);
  if (!w) return zero(m.sys.kind);
  const OmegaResult r = canonical_omega_lasso(m.sys, m.buchi, m.z_comp, *w);
  REQUIRE(r.status == Status::exact);
  return r.value;
}

const Alphabet abcd = walg::testing::alphabet("a b c d");

const char* const lassos[] = {":c", "ab:c", "aabb:c", "a:b", ":ab", "ab:ddc", "a:a", "abc:abc", "b:a", "aab:ba"};

std::string text(const MixedSystem& s) { return serialize_grammar(from_mixed(s)); }

}  // namespace

TEST_CASE("finite GNF leaves GNF input alone") {
  const SeriesRef r = series(B, "x1 = a x1 x1 | b");
  const GnfResult g = finite_gnf(r.sys);
  CHECK(g.unchanged);
  CHECK(g.sys.rhs == r.sys.rhs);
}

TEST_CASE("finite GNF of the Dyck star") {
  const SeriesRef r = series(B, "x1 = x2 x1 | eps\nx2 = a x2 b | eps", "a b");
  const GnfResult g = finite_gnf(r.sys);
  CHECK(is_gnf(g.sys));
  CHECK(g.eps[0] == one(B));
  CHECK(coefficients({g.sys, g.component[0]}, 2, 6) == coefficients(r, 2, 6));
  CHECK(coefficients({g.sys, g.component[1]}, 2, 6) == coefficients({r.sys, 1}, 2, 6));
}

TEST_CASE("finite GNF preserves least solutions") {
  Rng r(31);
  for (int c = 0; c < 120; ++c) {
    const Kind k = c % 2 ? T : B;
    AlgebraicSystem s;
    s.kind = k;
    s.sigma = walg::testing::letters(2);
    const std::size_t n = 1 + r.below(3);
    for (std::size_t i = 0; i < n; ++i) {
      s.vars.push_back("x" + std::to_string(i + 1));
      s.rhs.push_back(walg::testing::any_poly(r, k, n, 2));
    }
    CAPTURE(serialize_grammar(from_algebraic(s)));
    const GnfResult g = finite_gnf(s, true);
    CHECK(is_gnf(g.sys));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(coefficients({g.sys, g.component[i]}, 2, 5) == coefficients({s, i}, 2, 5));
  }
}

TEST_CASE("normalization splits epsilon parts") {
  // boolean t = eps + a: (eps + a)^omega = a^omega
  OmegaDecomposition d{B, abcd, {{series(B, "s = b"), series(B, "t = eps | a"), std::nullopt}}};
  const OmegaDecomposition n = normalize_decomposition(d);
  REQUIRE(n.terms.size() == 1);
  CHECK(least_solution_finite(B, n.terms[0].t.sys.rhs, 2)[n.terms[0].t.comp].coeff({}) == zero(B));
  CHECK(at(char_to_mixed(n), abcd, "b:a") == one(B));

  // tropical s = 2 eps + a: one scalar term and one proper term
  OmegaDecomposition e{T, abcd, {{series(T, "s = (2) eps | a"), series(T, "t = c"), std::nullopt}}};
  const OmegaDecomposition m = normalize_decomposition(e);
  REQUIRE(m.terms.size() == 2);
  CHECK(m.terms[0].eps_scalar == tv(2));
  CHECK_FALSE(m.terms[1].eps_scalar.has_value());

  OmegaDecomposition f{T, abcd, {{series(T, "s = a"), series(T, "t = c"), std::nullopt}}};
  CHECK(normalize_decomposition(f).terms.size() == 1);
}

TEST_CASE("pair system for a^n b^n ((dd)^* c)^omega") {
  const SeriesRef s = series(T, "s = (1) a s b | (1) a b");
  const SeriesRef t = series(T, "t = c | d d t");
  const OmegaDecomposition d =
      normalize_decomposition({T, abcd, {{s, t, std::nullopt}}});
  const SelectedMixed m = build_pair_system(d.terms[0].s, d.terms[0].t, PairCase::eps_zero, one(T));
  CHECK(is_gnf_mixed(m.sys));
  CHECK(m.buchi == 1);
  CHECK(at(m, abcd, "ab:ddc") == tv(1));
  CHECK(at(m, abcd, "aabb:ddc") == tv(2));
  CHECK(at(m, abcd, "abddc:ddc") == tv(1));
  CHECK(at(m, abcd, "ab:dc") == zero(T));
}

TEST_CASE("pair system with a scalar prefix") {
  const SeriesRef t = series(T, "t = a");
  const SelectedMixed m = build_pair_system(t, t, PairCase::eps_scalar, tv(3));
  CHECK(is_gnf_mixed(m.sys));
  CHECK(at(m, abcd, ":a") == tv(3));
  CHECK(at(m, abcd, "b:a") == zero(T));
  CHECK_THROWS_AS(build_pair_system(series(T, "s = s a | b"), t, PairCase::eps_zero, one(T)),
                  gnf_error);
}

TEST_CASE("sums of pair systems") {
  auto pair = [](Kind k, const char* s, const char* t) {
    const OmegaDecomposition d = normalize_decomposition({k, abcd, {{series(k, s), series(k, t), std::nullopt}}});
    return build_pair_system(d.terms[0].s, d.terms[0].t, PairCase::eps_zero, one(k));
  };
  const SelectedMixed p1 = pair(B, "s = a", "t = b");
  const SelectedMixed single = sum_systems(B, abcd, {p1});
  for (const char* w : lassos) CHECK(at(single, abcd, w) == at(p1, abcd, w));

  const SelectedMixed p2 = pair(B, "s = b", "t = a");
  const SelectedMixed both = sum_systems(B, abcd, {p1, p2});
  CHECK(is_gnf_mixed(both.sys));
  CHECK(both.buchi == 2);
  for (const char* w : lassos) CHECK(at(both, abcd, w) == add(at(p1, abcd, w), at(p2, abcd, w)));
  CHECK(at(both, abcd, "a:b") == one(B));
  CHECK(at(both, abcd, "b:a") == one(B));

  const SelectedMixed t1 = pair(T, "s = (2) a", "t = c");
  const SelectedMixed t2 = pair(T, "s = (1) a | (5) b", "t = c");
  const SelectedMixed tt = sum_systems(T, abcd, {t1, t2});
  CHECK(at(tt, abcd, "a:c") == tv(1));
  CHECK(at(tt, abcd, "b:c") == tv(5));
  CHECK(at(tt, abcd, "c:b") == zero(T));
  for (const char* w : lassos) CHECK(at(tt, abcd, w) == add(at(t1, abcd, w), at(t2, abcd, w)));

  const SelectedMixed none = sum_systems(T, abcd, {});
  CHECK(at(none, abcd, ":c") == zero(T));
}

TEST_CASE("unmixing the contrast system") {
  const GrammarFile g = parse_grammar(
      "@semiring boolean\n@alphabet a c\n@sort x x1\n@sort z z1 z2\n"
      "x1 = a | c x1\nz1 = c z1\nz2 = a z1 | a x1 z2\n");
  const MixedSystem s = to_mixed(g);
  const OmegaSystem o = unmix(s, 0, 1, 1);
  CHECK(is_gnf_omega(o));
  CHECK(serialize_grammar(from_omega(o)) ==
        "@semiring boolean\n@alphabet a c\n"
        "yh1 = c yh1\n"
        "yh2 = a yh1 | a yb1 yh2\n"
        "yb1 = a | c yb1\n"
        "yd = a | a yh1 | c yb1 | a yb1 yh2\n");

  // Büchi positions 1..t hold the z-derived variables
  CHECK(o.vars.front() == "yh1");
  const MixedSystem back = induce_mixed(o);
  const std::size_t last = o.size() - 1;
  const auto fin = least_solution_finite(o.kind, back.x_rhs, 6)[last];
  const auto orig = least_solution_finite(s.kind, s.x_rhs, 6)[0];
  CHECK(fin == orig);
  for (const char* w : {":c", "a:c", ":aa", "acaa:c", "ca:ac"}) {
    const Lasso l = parse_lasso(g.sigma, w);
    CHECK(canonical_omega_lasso(back, 1, last, l).value == canonical_omega_lasso(s, 1, 1, l).value);
  }
  CHECK(canonical_omega_lasso(back, 1, last, parse_lasso(g.sigma, "a:c")).value == one(B));
}

TEST_CASE("characteristic mixed system") {
  const SeriesRef a = series(B, "s = a");
  const SelectedMixed m = char_to_mixed({B, abcd, {{a, a, std::nullopt}}});
  CHECK(m.buchi == 1);
  CHECK(m.z_comp == 1);
  CHECK(at(m, abcd, "a:a") == one(B));
  CHECK(at(m, abcd, ":b") == zero(B));

  const SelectedMixed empty = char_to_mixed({T, abcd, {}});
  CHECK(at(empty, abcd, ":c") == zero(T));

  const SelectedMixed ex = char_to_mixed(
      {T, abcd, {{series(T, "s = (1) a s b | (1) a b"), series(T, "t = c"), std::nullopt}}});
  CHECK(at(ex, abcd, "aabb:c") == tv(2));
}

TEST_CASE("characteristic system matches the factorization oracle") {
  struct Case {
    Kind k;
    const char* s;
    const char* t;
  };
  const Case cases[] = {
      {T, "s = (1) a s b | (1) a b", "t = c"},
      {B, "s = a s | eps", "t = a b | c"},
      {T, "s = a | (2) b", "t = (1) a | b a"},
      {Kind::arctic, "s = (1) a s | b", "t = (2) a | c t"},
      {B, "s = a | b", "t = d d t | c"},
  };
  for (const Case& c : cases) {
    const OmegaDecomposition d{c.k, abcd, {{series(c.k, c.s), series(c.k, c.t), std::nullopt}}};
    const SelectedMixed m = char_to_mixed(d);
    for (const char* w : lassos) {
      CAPTURE(c.s);
      CAPTURE(c.t);
      CAPTURE(w);
      CHECK(at(m, abcd, w) == walg::testing::decomposition_at(d, parse_lasso(abcd, w), 8, 4));
    }
  }
}

TEST_CASE("mixed system back to a decomposition") {
  const GrammarFile g = read_grammar(std::string(WALG_DATA_DIR) + "/anbn_c_mixed.wg");
  const MixedSystem s = to_mixed(g);
  const OmegaDecomposition d = mixed_to_decomposition(s, 1, 1);
  for (const char* w : {":c", "ab:c", "aabb:c", "a:c", ":ab"}) {
    const Lasso l = parse_lasso(g.sigma, w);
    CHECK(walg::testing::decomposition_at(d, *walg::testing::translate(l, g.sigma, d.sigma), 8, 4) ==
          canonical_omega_lasso(s, 1, 1, l).value);
  }
}

TEST_CASE("pipeline stages claimed GNF are GNF") {
  const GrammarFile g = read_grammar(std::string(WALG_DATA_DIR) + "/anbn_c_mixed.wg");
  const GnfPipelineReport r = gnf_pipeline(to_mixed(g), 1, 0, 1, GnfTarget::omega);
  CHECK_FALSE(r.skipped);
  for (const auto& st : r.stages) {
    CAPTURE(st.name);
    if (st.claims_gnf) CHECK(st.is_gnf);
  }
  CHECK(r.stages.back().name == "omega-gnf");

  const GrammarFile c = read_grammar(std::string(WALG_DATA_DIR) + "/contrast_omega.wg");
  const GnfPipelineReport skip = gnf_pipeline(to_omega(c), 1, 1, GnfTarget::omega);
  CHECK(skip.skipped);

  std::string src = serialize_grammar(g);
  src.replace(src.find("tropical"), 8, "counting");
  const GnfPipelineReport cnt = gnf_pipeline(to_mixed(parse_grammar(src)), 1, 0, 1, GnfTarget::mixed);
  CHECK(cnt.warnings.size() == 1);
}

TEST_CASE("fresh names are deterministic") {
  const GrammarFile g = read_grammar(std::string(WALG_DATA_DIR) + "/anbn_c_mixed.wg");
  const auto a = gnf_pipeline(to_mixed(g), 1, 0, 1, GnfTarget::mixed);
  const auto b = gnf_pipeline(to_mixed(g), 1, 0, 1, GnfTarget::mixed);
  CHECK(text(std::get<MixedSystem>(a.stages.back().system)) ==
        text(std::get<MixedSystem>(b.stages.back().system)));
}
