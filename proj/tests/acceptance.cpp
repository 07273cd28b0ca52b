// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "walg/checks.hpp"
#include "walg/eval.hpp"
#include "walg/gnf.hpp"
#include "walg/io.hpp"
#include "walg/pda.hpp"

using namespace walg;

namespace {

// Every comparison below is exact: values are integers or booleans.
struct Outcome {
  bool pass = true;
  std::string detail;
  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

GrammarFile fixture(const std::string& name) { return read_grammar(std::string(WALG_DATA_DIR) + "/" + name); }

Value tv(std::int64_t v) { return Value{Kind::tropical, v}; }
Value av(std::int64_t v) { return Value{Kind::arctic, v}; }

std::string rep(const std::string& s, std::size_t n) {
  std::string r;
  for (std::size_t i = 0; i < n; ++i) r += s;
  return r;
}

std::string show(const Value& v) { return to_string(v); }

std::string show(const OmegaResult& r) {
  return r.status == Status::exact ? to_string(r.value) : "inconclusive";
}

// a^n1 b^n1 ... a^nk b^nk with every n_i >= 1
bool dyck_blocks(const std::string& w) {
  std::size_t p = 0;
  while (p < w.size()) {
    std::size_t n = 0;
    while (p < w.size() && w[p] == 'a') ++n, ++p;
    if (n == 0) return false;
    for (std::size_t i = 0; i < n; ++i, ++p)
      if (p >= w.size() || w[p] != 'b') return false;
  }
  return true;
}

std::vector<std::string> all_words(const std::string& letters, std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() < max_len)
      for (char c : letters) out.push_back(out[i] + c);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const GrammarFile g = fixture("anbn_c_mixed.wg");
  const MixedSystem m = to_mixed(g);
  const auto sol = least_solution_finite(m.kind, m.x_rhs, 12);
  for (std::int64_t n = 1; n <= 6; ++n) {
    const std::string w = rep("a", n) + rep("b", n);
    const Value v = sol[0].coeff(parse_word(g.sigma, w));
    o.expect(v == tv(n), "sigma at " + w + " = " + show(v));
  }
  for (std::int64_t n = 0; n <= 4; ++n) {
    const std::string u = rep("a", n) + rep("b", n);
    const OmegaResult r = canonical_omega_lasso(m, 1, 1, Lasso(parse_word(g.sigma, u), parse_word(g.sigma, "c")));
    o.expect(r.status == Status::exact && r.value == tv(n), "(" + u + ", c) = " + show(r));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const GrammarFile g = fixture("dyck_star_boolean.wg");
  const MixedSystem m = induce_mixed(to_omega(g));
  const Kind B = Kind::boolean;
  const auto sol = least_solution_finite(B, m.x_rhs, 8);
  for (const std::string& w : all_words("ab", 8)) {
    const bool member = w.empty() || dyck_blocks(w);
    o.expect(sol[0].coeff(parse_word(g.sigma, w)) == (member ? one(B) : zero(B)), "word " + w);
  }
  auto at = [&](std::size_t k, const std::string& v) {
    return canonical_omega_lasso(m, k, 0, Lasso({}, parse_word(g.sigma, v)));
  };
  const OmegaResult ab1 = at(1, "ab"), a1 = at(1, "a"), a2 = at(2, "a");
  o.expect(ab1.status == Status::exact && ab1.value == one(B), "(eps, ab) at k=1 = " + show(ab1));
  o.expect(a1.status == Status::exact && a1.value == zero(B), "(eps, a) at k=1 = " + show(a1));
  o.expect(a2.status == Status::exact && a2.value == one(B), "(eps, a) at k=2 = " + show(a2));
  return o;
}

Outcome criterion3() {
  Outcome o;
  // the fixture file and a fresh pair construction from s and t
  const GrammarFile g = fixture("anbn_ddc_pair.wg");
  const MixedSystem file = to_mixed(g);
  const std::size_t z1 = g.index("z1") - file.n();
  const OmegaDecomposition d = normalize_decomposition(
      {Kind::tropical,
       g.sigma,
       {{walg::testing::series(Kind::tropical, "s = (1) a s b | (1) a b"),
         walg::testing::series(Kind::tropical, "t = c | d d t"), std::nullopt}}});
  o.expect(d.terms.size() == 1, "normalised decomposition has one term");
  if (!o.pass) return o;
  const SelectedMixed built =
      build_pair_system(d.terms[0].s, d.terms[0].t, PairCase::eps_zero, one(Kind::tropical));
  o.expect(is_gnf_mixed(built.sys), "pair system is not in GNF");
  auto check = [&](const std::string& u, std::int64_t n) {
    const Lasso w(parse_word(g.sigma, u), parse_word(g.sigma, "ddc"));
    const OmegaResult a = canonical_omega_lasso(file, 1, z1, w);
    o.expect(a.status == Status::exact && a.value == tv(n), "file at (" + u + ", ddc) = " + show(a));
    const auto bw = walg::testing::translate(w, g.sigma, built.sys.sigma);
    const OmegaResult b = canonical_omega_lasso(built.sys, built.buchi, built.z_comp, *bw);
    o.expect(b.status == Status::exact && b.value == tv(n), "pair system at (" + u + ", ddc) = " + show(b));
  };
  for (std::int64_t n = 1; n <= 3; ++n) check(rep("a", n) + rep("b", n), n);
  check("abddc", 1);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const GrammarFile g = fixture("max_blocks_arctic.wg");
  const SimpleOmegaPDA a =
      induced_finite_pda(AlgebraicSystem{g.kind, g.sigma, g.vars, g.rhs}, g.index("S"));
  // the first 20 of all (n_1..n_k) with k <= 3, n_i <= 3: 3 singles, 9 pairs, 8 triples
  std::vector<std::vector<std::int64_t>> blocks;
  for (std::int64_t x = 1; x <= 3; ++x) blocks.push_back({x});
  for (std::int64_t x = 1; x <= 3; ++x)
    for (std::int64_t y = 1; y <= 3; ++y) blocks.push_back({x, y});
  for (std::int64_t x = 1; x <= 3; ++x)
    for (std::int64_t y = 1; y <= 3; ++y)
      for (std::int64_t z = 1; z <= 3; ++z)
        blocks.push_back({x, y, z});
  blocks.resize(20);
  for (const auto& bl : blocks) {
    std::string w;
    std::int64_t mx = 0;
    for (std::int64_t n : bl) {
      w += rep("a", n) + rep("b", n);
      mx = std::max(mx, n);
    }
    const Value v = behavior_finite(a, parse_word(g.sigma, w));
    o.expect(v == av(mx), w + " = " + show(v));
  }
  for (const char* w : {"", "a", "b", "ba", "aab", "abb", "abba", "aabbb", "abaab", "ababa"}) {
    const Value v = behavior_finite(a, parse_word(g.sigma, w));
    o.expect(v == zero(Kind::arctic), std::string(w) + " = " + show(v));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Input in = load_input(std::string(WALG_DATA_DIR) + "/anbn_c_automaton.json");
  const SimpleOmegaPDA& a = *in.automaton;
  auto at = [&](const std::string& u, const std::string& v) {
    return behavior_omega_lasso(a, Lasso(parse_word(in.sigma(), u), parse_word(in.sigma(), v)));
  };
  for (std::int64_t n = 0; n <= 4; ++n) {
    const std::string u = rep("a", n) + rep("b", n);
    const OmegaResult r = at(u, "c");
    o.expect(r.status == Status::exact && r.value == tv(n), "(" + u + ", c) = " + show(r));
  }
  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{
           {"a", "a"}, {"ab", "ab"}, {"ab", "abb"}, {"ab", "abc"}}) {
    const OmegaResult r = at(u, v);
    o.expect(r.status == Status::exact && r.value == zero(Kind::tropical),
             "(" + u + ", " + v + ") = " + show(r));
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const GrammarFile g = fixture("contrast_mixed.wg");
  const MixedSystem m = to_mixed(g);
  const Kind B = Kind::boolean;
  const SimpleOmegaPDA a = induced_omega_pda(m, g.index("x2"), g.index("z2") - m.n(), 1);
  auto at = [&](const std::string& u, const std::string& v) {
    return behavior_omega_lasso(a, Lasso(parse_word(g.sigma, u), parse_word(g.sigma, v)));
  };
  const OmegaResult r0 = at("", "aa"), r1 = at("a", "c"), r2 = at("acaa", "c");
  o.expect(r0.status == Status::exact && r0.value == zero(B), "(eps, aa) = " + show(r0));
  o.expect(r1.status == Status::exact && r1.value == one(B), "(a, c) = " + show(r1));
  o.expect(r2.status == Status::exact && r2.value == one(B), "(acaa, c) = " + show(r2));

  // x1 = c*a and x2 = (a c* a)^+
  auto c_star_a = [](const std::string& w) {
    return !w.empty() && w.back() == 'a' && w.find('a') == w.size() - 1;
  };
  auto aca_plus = [&](const std::string& w) {
    if (w.empty()) return false;
    std::size_t p = 0;
    while (p < w.size()) {
      if (w[p] != 'a') return false;
      const std::size_t q = w.find('a', p + 1);
      if (q == std::string::npos) return false;
      p = q + 1;
    }
    return true;
  };
  const auto sol = least_solution_finite(B, m.x_rhs, 8);
  for (const std::string& w : all_words("ac", 8)) {
    const Word x = parse_word(g.sigma, w);
    o.expect(sol[0].coeff(x) == (c_star_a(w) ? one(B) : zero(B)), "x1 at " + w);
    o.expect(sol[1].coeff(x) == (aca_plus(w) ? one(B) : zero(B)), "x2 at " + w);
    o.expect(behavior_finite(a, x) == (aca_plus(w) ? one(B) : zero(B)), "automaton at " + w);
  }
  return o;
}

Outcome from_suite(const SuiteReport& r) {
  Outcome o;
  std::size_t total = 0;
  for (const auto& [name, n] : r.cases) total += n;
  o.expect(r.failures.empty(), r.failures.empty() ? "" : r.failures.front().check + ": " + r.failures.front().detail);
  o.expect(r.inconclusive == 0, std::to_string(r.inconclusive) + " inconclusive");
  if (o.pass) o.detail = std::to_string(total) + " cases";
  return o;
}

struct Fixture {
  Kind k;
  std::vector<std::pair<const char*, const char*>> terms;
};

Outcome criterion9() {
  Outcome o;
  const Kind B = Kind::boolean, T = Kind::tropical, A = Kind::arctic;
  const std::vector<Fixture> fixtures = {
      {T, {{"s = (1) a s b | (1) a b", "t = c"}}},
      {T, {{"s = (1) a s b | (1) a b", "t = c | d d t"}}},
      {B, {{"s = a s | eps", "t = a b | c"}}},
      {B, {{"s = a", "t = b"}, {"s = b", "t = a"}}},
      {T, {{"s = (2) a", "t = c"}, {"s = (1) a | (5) b", "t = c"}}},
      {T, {{"s = (2) eps | a", "t = c"}}},
      {A, {{"s = (1) a s | b", "t = (2) a | c t"}}},
      {A, {{"s = a s b | a b", "t = c"}, {"s = (3) d", "t = d c"}}},
      {B, {{"s = a | b", "t = d d t | c"}, {"s = eps", "t = a b"}}},
      {T, {{"s = a s | eps", "t = eps | (1) a | b a"}}},
  };
  const Alphabet sigma = walg::testing::alphabet("a b c d");
  const char* const lassos[] = {":c", "ab:c", "aabb:c", "ab:ddc", "a:a", ":ab", "abc:abc", "b:a", "aab:ba", "d:dc"};
  std::size_t agreed = 0, inconclusive = 0;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    OmegaDecomposition d{fixtures[f].k, sigma, {}};
    for (const auto& [s, t] : fixtures[f].terms)
      d.terms.push_back({walg::testing::series(d.kind, s), walg::testing::series(d.kind, t), std::nullopt});
    const SelectedMixed direct = char_to_mixed(d);
    const SelectedMixed gnf = decomposition_to_mixed_gnf(d);
    const OmegaSystem unmixed = unmix(gnf.sys, gnf.x_comp, gnf.z_comp, gnf.buchi);
    const MixedSystem reinduced = induce_mixed(unmixed);
    MixedSystem stripped = gnf.sys;
    stripped.x_rhs[gnf.x_comp] = without_epsilon(stripped.x_rhs[gnf.x_comp]);
    const SimpleOmegaPDA pda = induced_omega_pda(stripped, gnf.x_comp, gnf.z_comp, gnf.buchi);

    auto eval = [&](const MixedSystem& s, std::size_t k, std::size_t i, const Lasso& w) {
      const auto x = walg::testing::translate(w, sigma, s.sigma);
      return x ? canonical_omega_lasso(s, k, i, *x) : OmegaResult{Status::exact, zero(d.kind), 0};
    };
    for (const char* text : lassos) {
      const Lasso w = parse_lasso(sigma, text);
      const auto pw = walg::testing::translate(w, sigma, pda.matrix.sigma);
      const OmegaResult r[4] = {
          eval(direct.sys, direct.buchi, direct.z_comp, w),
          eval(gnf.sys, gnf.buchi, gnf.z_comp, w),
          eval(reinduced, gnf.buchi, unmixed.size() - 1, w),
          pw ? behavior_omega_lasso(pda, *pw) : OmegaResult{Status::exact, zero(d.kind), 0},
      };
      std::size_t exact = 0;
      for (const auto& x : r) exact += x.status == Status::exact;
      bool same = exact == 4;
      for (const auto& x : r) same = same && x.value == r[0].value;
      if (exact == 0) {
        ++inconclusive;
      } else {
        std::ostringstream msg;
        msg << "fixture " << f + 1 << " at " << text << ": " << show(r[0]) << " " << show(r[1]) << " "
            << show(r[2]) << " " << show(r[3]);
        o.expect(same, msg.str());
        agreed += same;
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(agreed) + " exact agreements, " + std::to_string(inconclusive) + " joint inconclusive";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tropical mixed system a^n b^n c^omega", criterion1},
      {"boolean Dyck star and its canonical solutions", criterion2},
      {"pair construction a^n b^n ((dd)^* c)^omega", criterion3},
      {"arctic automaton max n_i", criterion4},
      {"omega automaton a^n b^n c^omega", criterion5},
      {"contrast automaton (a c^* a)^omega excluded", criterion6},
      {"identity suite, seed 0", [] { return from_suite(identity_suite(0, 200)); }},
      {"oracle equivalence, seed 0", [] { return from_suite(oracle_suite(0, 100, 6)); }},
      {"end-to-end pipeline agreement", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("criterion %zu: %s  %s%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
