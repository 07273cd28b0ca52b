#include "walg/checks.hpp"

#include <filesystem>
#include <functional>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "walg/buchi.hpp"
#include "walg/eval.hpp"
#include "walg/matrix.hpp"
#include "walg/pda.hpp"
#include "walg/system.hpp"

namespace walg {

namespace {

const Kind kAllKinds[] = {Kind::boolean, Kind::tropical, Kind::arctic, Kind::counting};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin(std::size_t percent) { return below(100) < percent; }

  Value grid(Kind k) {
    const auto g = value_grid(k);
    return g[below(g.size())];
  }
  // finite nonzero weight
  Value weight(Kind k) {
    for (;;) {
      Value v = grid(k);
      if (!is_zero(v) && v.v != Value::kInf) return v;
    }
  }
  Matrix matrix(Kind k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        // sparse-ish so that zero rows and transient states show up
        m.at(i, j) = coin(35) ? zero(k) : grid(k);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

std::string show(const Matrix& m) {
  std::ostringstream out;
  out << kind_name(m.kind()) << " [";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m.at(i, j));
  }
  out << "]";
  return out.str();
}

std::string show(const OmegaVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s + ")";
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}
  void expect(const std::string& check, bool ok, const std::function<std::string()>& detail) {
    ++r_.cases[check];
    if (!ok) r_.failures.push_back({check, detail()});
  }

 private:
  SuiteReport& r_;
};

void scalar_identities(Gen& gen, Recorder& rec, Kind k) {
  const Value a = gen.grid(k), b = gen.grid(k), o = one(k);
  auto ctx = [&] { return std::string(kind_name(k)) + " a=" + to_string(a) + " b=" + to_string(b); };
  rec.expect("star unfolding", star(a) == add(o, mul(a, star(a))), ctx);
  rec.expect("sum star", star(add(a, b)) == mul(star(mul(star(a), b)), star(a)), ctx);
  rec.expect("product star", star(mul(a, b)) == add(o, mul(mul(a, star(mul(b, a))), b)), ctx);
  rec.expect("omega unfolding", omega(a) == mul(a, omega(a)), ctx);
  rec.expect("product omega", omega(mul(a, b)) == mul(a, omega(mul(b, a))), ctx);
  const Value asb = mul(star(a), b);
  rec.expect("sum omega", omega(add(a, b)) == add(omega(asb), mul(star(asb), omega(a))), ctx);
}

void matrix_identities(Gen& gen, Recorder& rec, Kind k, std::size_t n) {
  const Matrix m = gen.matrix(k, n);
  const Matrix s = mat_star(m);
  auto ctx = [&] { return show(m); };

  for (std::size_t n1 = 1; n1 < n; ++n1) {
    rec.expect("star split first", mat_star_split(m, n1, StarForm::first) == s, ctx);
    rec.expect("star split second", mat_star_split(m, n1, StarForm::second) == s, ctx);
    rec.expect("omega split", mat_omega_split(m, n1) == mat_omega(m), ctx);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[gen.below(i)]);
  rec.expect("star permutation", mat_star(permute(m, perm)) == permute(s, perm), ctx);

  for (std::size_t t = 0; t <= n; ++t) {
    const OmegaVector w = mat_omega_t(m, t);
    for (std::size_t kk = t; kk <= n; ++kk) {
      if (kk == 0) continue;
      const OmegaVector alt = mat_omega_t_alt(m, t, kk);
      rec.expect("omega_t alternative", alt == w, [&] {
        return show(m) + " t=" + std::to_string(t) + " k=" + std::to_string(kk) + " " + show(w) +
               " vs " + show(alt);
      });
    }
    rec.expect("omega_t fixed point", mat_vec_mul(m, w) == w,
               [&] { return show(m) + " t=" + std::to_string(t) + " " + show(w); });
    if (idempotent(k)) {
      const OmegaVector g = buchi_values(graph_of(m, t));
      rec.expect("omega_t path semantics", g == w, [&] {
        return show(m) + " t=" + std::to_string(t) + " " + show(w) + " vs graph " + show(g);
      });
    }
  }
}

Polynomial random_strict_gnf(Gen& gen, Kind k, std::size_t n, std::size_t letters) {
  Polynomial p(k);
  const std::size_t terms = 1 + gen.below(3);
  for (std::size_t t = 0; t < terms; ++t) {
    Word w{static_cast<Sym>(gen.below(letters))};
    const std::size_t vars = gen.below(3);
    for (std::size_t v = 0; v < vars; ++v) w.push_back(var_sym(gen.below(n)));
    p.add_term(w, gen.weight(k));
  }
  return p;
}

std::vector<Word> words_upto(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (std::size_t a = 0; a < letters; ++a) {
      Word w = out[i];
      w.push_back(static_cast<Sym>(a));
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

SuiteReport identity_suite(std::uint64_t seed, std::size_t cases) {
  SuiteReport r;
  r.suite = "identities";
  r.seed = seed;
  Gen gen(seed);
  Recorder rec(r);
  for (std::size_t c = 0; c < cases; ++c) {
    const Kind k = kAllKinds[c % 4];
    scalar_identities(gen, rec, k);
    matrix_identities(gen, rec, k, 1 + gen.below(4));
  }
  return r;
}

SuiteReport oracle_suite(std::uint64_t seed, std::size_t systems, std::size_t max_len) {
  SuiteReport r;
  r.suite = "oracle";
  r.seed = seed;
  Gen gen(seed);
  Recorder rec(r);
  for (std::size_t c = 0; c < systems; ++c) {
    AlgebraicSystem s;
    s.kind = c % 2 ? Kind::tropical : Kind::boolean;
    const std::size_t n = 1 + gen.below(3), letters = 1 + gen.below(2);
    for (std::size_t a = 0; a < letters; ++a) s.sigma.intern(std::string(1, static_cast<char>('a' + a)));
    for (std::size_t i = 0; i < n; ++i) {
      s.vars.push_back("x" + std::to_string(i + 1));
      s.rhs.push_back(random_strict_gnf(gen, s.kind, n, letters));
    }
    const std::string text = serialize_grammar(from_algebraic(s));
    const auto sol = least_solution_finite(s.kind, s.rhs, max_len);
    for (std::size_t i = 0; i < n; ++i) {
      const SimpleOmegaPDA a = induced_finite_pda(s, i);
      for (const Word& w : words_upto(letters, max_len)) {
        const Value kleene = sol[i].coeff(w), oracle = oracle_coeff_gnf(s.kind, s.rhs, i, w);
        const Value pda = behavior_finite(a, w);
        rec.expect("finite behavior agreement", kleene == oracle && oracle == pda, [&] {
          return "x" + std::to_string(i + 1) + " at '" + show_word(s.sigma, w) + "': kleene " +
                 to_string(kleene) + ", derivations " + to_string(oracle) + ", automaton " +
                 to_string(pda) + "\n" + text;
        });
      }
    }
  }
  return r;
}

SuiteReport examples_suite(const std::string& golden_path) {
  SuiteReport r;
  r.suite = "examples";
  Recorder rec(r);
  std::ifstream f(golden_path);
  if (!f) throw std::runtime_error("cannot open " + golden_path);
  const nlohmann::json golden = nlohmann::json::parse(f);
  const std::filesystem::path dir = std::filesystem::path(golden_path).parent_path();
  std::map<std::string, Input> loaded;
  for (const auto& e : golden.at("cases")) {
    const std::string name = e.at("name").get<std::string>();
    const std::string file = e.at("input").get<std::string>();
    if (!loaded.count(file)) loaded.emplace(file, load_input((dir / file).string()));
    const Input& in = loaded.at(file);
    EvalOptions opt;
    if (e.contains("component")) opt.component = e["component"].get<std::string>();
    if (e.contains("buchi")) opt.buchi = e["buchi"].get<std::size_t>();
    opt.via_pda = e.value("pda", false);
    const std::string expect = e.at("expect").get<std::string>();
    std::string got;
    if (e.contains("word")) {
      got = to_string(eval_word(in, parse_word(in.sigma(), e["word"].get<std::string>()), opt));
    } else {
      const OmegaResult res =
          eval_lasso(in, parse_lasso(in.sigma(), e.at("lasso").get<std::string>()), opt);
      got = res.status == Status::exact ? to_string(res.value) : "inconclusive";
      if (res.status != Status::exact) ++r.inconclusive;
    }
    rec.expect(name, got == expect, [&] { return "- expected " + expect + "\n+ got      " + got; });
  }
  return r;
}

nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["inconclusive"] = r.inconclusive;
  j["passed"] = r.passed();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"check", f.check}, {"detail", f.detail}});
  return j;
}

}  // namespace walg
