#include <algorithm>
#include <map>
#include <memory>

#include "walg/gnf.hpp"

namespace walg {

namespace {

// Series expressions over the x-variables of a fixed algebraic system.
struct Expr;
using E = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { zero, one, poly, sum, prod, star } op;
  Polynomial poly;
  E a, b;
};

E mk_zero() {
  static const E z = std::make_shared<Expr>(Expr{Expr::Op::zero, Polynomial(), nullptr, nullptr});
  return z;
}
E mk_one() {
  static const E o = std::make_shared<Expr>(Expr{Expr::Op::one, Polynomial(), nullptr, nullptr});
  return o;
}
E mk_poly(const Polynomial& p) {
  if (p.empty()) return mk_zero();
  return std::make_shared<Expr>(Expr{Expr::Op::poly, p, nullptr, nullptr});
}
E mk_sum(E a, E b) {
  if (a->op == Expr::Op::zero) return b;
  if (b->op == Expr::Op::zero) return a;
  return std::make_shared<Expr>(Expr{Expr::Op::sum, Polynomial(), a, b});
}
E mk_prod(E a, E b) {
  if (a->op == Expr::Op::zero || b->op == Expr::Op::zero) return mk_zero();
  if (a->op == Expr::Op::one) return b;
  if (b->op == Expr::Op::one) return a;
  return std::make_shared<Expr>(Expr{Expr::Op::prod, Polynomial(), a, b});
}
E mk_star(E a) {
  if (a->op == Expr::Op::zero) return mk_one();
  return std::make_shared<Expr>(Expr{Expr::Op::star, Polynomial(), a, nullptr});
}

using EMat = std::vector<std::vector<E>>;
// sum_j s_j t_j^omega
using OmegaTerms = std::vector<std::pair<E, E>>;

EMat sub(const EMat& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  EMat r(nr, std::vector<E>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r[i][j] = m[r0 + i][c0 + j];
  return r;
}

EMat emul(const EMat& a, const EMat& b) {
  const std::size_t p = b.empty() ? 0 : b[0].size();
  EMat r(a.size(), std::vector<E>(p, mk_zero()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t q = 0; q < b.size(); ++q) r[i][j] = mk_sum(r[i][j], mk_prod(a[i][q], b[q][j]));
  return r;
}

EMat eadd(const EMat& a, const EMat& b) {
  EMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] = mk_sum(a[i][j], b[i][j]);
  return r;
}

EMat estar(const EMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return m;
  if (n == 1) return {{mk_star(m[0][0])}};
  const EMat a = sub(m, 0, 0, 1, 1), b = sub(m, 0, 1, 1, n - 1), c = sub(m, 1, 0, n - 1, 1),
             d = sub(m, 1, 1, n - 1, n - 1);
  const EMat ds = estar(d);
  const EMat tl = estar(eadd(a, emul(emul(b, ds), c)));
  const EMat tr = emul(emul(tl, b), ds);
  const EMat bl = emul(emul(ds, c), tl);
  const EMat br = eadd(ds, emul(emul(emul(ds, c), tl), emul(b, ds)));
  EMat r(n, std::vector<E>(n));
  r[0][0] = tl[0][0];
  for (std::size_t j = 1; j < n; ++j) r[0][j] = tr[0][j - 1];
  for (std::size_t i = 1; i < n; ++i) {
    r[i][0] = bl[i - 1][0];
    for (std::size_t j = 1; j < n; ++j) r[i][j] = br[i - 1][j - 1];
  }
  return r;
}

std::vector<OmegaTerms> act(const EMat& m, const std::vector<OmegaTerms>& v) {
  std::vector<OmegaTerms> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      for (const auto& [s, t] : v[j]) {
        E p = mk_prod(m[i][j], s);
        if (p->op != Expr::Op::zero) r[i].emplace_back(p, t);
      }
  return r;
}

void append_terms(OmegaTerms& a, const OmegaTerms& b) { a.insert(a.end(), b.begin(), b.end()); }

std::vector<OmegaTerms> eomega(const EMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  if (n == 1) {
    if (m[0][0]->op == Expr::Op::zero) return {OmegaTerms{}};
    return {OmegaTerms{{mk_one(), m[0][0]}}};
  }
  const EMat a = sub(m, 0, 0, 1, 1), b = sub(m, 0, 1, 1, n - 1), c = sub(m, 1, 0, n - 1, 1),
             d = sub(m, 1, 1, n - 1, n - 1);
  const EMat top_base = eadd(a, emul(emul(b, estar(d)), c));
  const EMat bot_base = eadd(d, emul(emul(c, estar(a)), b));
  auto top = eomega(top_base);
  append_terms(top[0], act(emul(emul(estar(top_base), b), estar(d)), eomega(d))[0]);
  auto bot = eomega(bot_base);
  const auto via = act(emul(emul(estar(bot_base), c), estar(a)), eomega(a));
  std::vector<OmegaTerms> r{top[0]};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    append_terms(bot[i], via[i]);
    r.push_back(bot[i]);
  }
  return r;
}

std::vector<OmegaTerms> eomega_k(const EMat& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k == 0) return std::vector<OmegaTerms>(n);
  if (k == n) return eomega(m);
  const EMat a = sub(m, 0, 0, k, k), b = sub(m, 0, k, k, n - k), c = sub(m, k, 0, n - k, k),
             d = sub(m, k, k, n - k, n - k);
  const EMat ds = estar(d);
  auto top = eomega(eadd(a, emul(emul(b, ds), c)));
  auto bot = act(emul(ds, c), top);
  top.insert(top.end(), bot.begin(), bot.end());
  return top;
}

// Turns expressions into variables of one growing algebraic system.
class Builder {
 public:
  explicit Builder(AlgebraicSystem base) : sys_(std::move(base)), base_n_(sys_.size()) {}

  std::size_t var(const E& e) {
    auto it = memo_.find(e.get());
    if (it != memo_.end()) return it->second;
    const Kind k = sys_.kind;
    Polynomial p(k);
    switch (e->op) {
      case Expr::Op::zero: break;
      case Expr::Op::one: p = Polynomial::epsilon(k); break;
      case Expr::Op::poly: p = e->poly; break;
      case Expr::Op::sum:
        p.add_term({var_sym(var(e->a))}, one(k));
        p.add_term({var_sym(var(e->b))}, one(k));
        break;
      case Expr::Op::prod: p.add_term({var_sym(var(e->a)), var_sym(var(e->b))}, one(k)); break;
      case Expr::Op::star: break;
    }
    const std::size_t v = sys_.size();
    sys_.vars.push_back("e" + std::to_string(v - base_n_ + 1));
    sys_.rhs.push_back(p);
    memo_.emplace(e.get(), v);
    if (e->op == Expr::Op::star) {
      // v = eps + a v
      Polynomial q = Polynomial::epsilon(k);
      q.add_term({var_sym(var(e->a)), var_sym(v)}, one(k));
      sys_.rhs[v] = q;
    }
    return v;
  }

  SeriesRef ref(const E& e) { return SeriesRef{extract_component(sys_, var(e)), 0}; }

 private:
  AlgebraicSystem sys_;
  std::size_t base_n_;
  std::map<const Expr*, std::size_t> memo_;
};

}  // namespace

OmegaDecomposition mixed_to_decomposition(const MixedSystem& s, std::size_t k, std::size_t z_comp) {
  validate(s);
  if (k > s.m()) throw std::out_of_range("Büchi count exceeds the number of z-variables");
  if (z_comp >= s.m()) throw std::out_of_range("z-component out of range");
  EMat m(s.m(), std::vector<E>(s.m()));
  for (std::size_t i = 0; i < s.m(); ++i)
    for (std::size_t j = 0; j < s.m(); ++j) m[i][j] = mk_poly(s.rho[i][j]);
  const auto terms = eomega_k(m, k)[z_comp];
  Builder b(x_part(s));
  OmegaDecomposition d{s.kind, s.sigma, {}};
  for (const auto& [se, te] : terms) d.terms.push_back({b.ref(se), b.ref(te), std::nullopt});
  return d;
}

namespace {

PipelineStage stage(std::string name, MixedSystem s, bool claims, std::size_t buchi,
                    std::size_t x, std::size_t z) {
  const bool g = is_gnf_mixed(s);
  return PipelineStage{std::move(name), std::move(s), claims, g, buchi, x, z};
}

PipelineStage stage(std::string name, OmegaSystem s, bool claims, std::size_t buchi,
                    std::size_t comp) {
  const bool g = is_gnf_omega(s);
  return PipelineStage{std::move(name), std::move(s), claims, g, buchi, comp, comp};
}

void warn_counting(Kind k, GnfPipelineReport& r) {
  if (k == Kind::counting)
    r.warnings.push_back("omega evaluation is unsupported over the counting semiring");
}

}  // namespace

GnfPipelineReport gnf_pipeline(const MixedSystem& s, std::size_t buchi, std::size_t x_comp,
                               std::size_t z_comp, GnfTarget target) {
  validate(s);
  if (x_comp >= s.n()) throw std::out_of_range("x-component out of range");
  if (z_comp >= s.m()) throw std::out_of_range("z-component out of range");
  if (buchi > s.m()) throw std::out_of_range("Büchi count exceeds the number of z-variables");
  GnfPipelineReport r;
  warn_counting(s.kind, r);
  r.stages.push_back(stage("input", s, false, buchi, x_comp, z_comp));
  SelectedMixed sel{s, buchi, x_comp, z_comp};
  if (is_gnf_mixed(s)) {
    if (target == GnfTarget::mixed) {
      r.skipped = true;
      return r;
    }
  } else {
    const OmegaDecomposition d = mixed_to_decomposition(s, buchi, z_comp);
    const SelectedMixed ch = char_to_mixed(d);
    r.stages.push_back(stage("decomposition", ch.sys, false, ch.buchi, ch.x_comp, ch.z_comp));
    sel = decomposition_to_mixed_gnf(d);
    // carry the finite part along as an unreferenced GNF block
    const GnfResult fg = finite_gnf(x_part(s));
    const AlgebraicSystem fin = extract_component(fg.sys, fg.component[x_comp]);
    const auto tmap = merge_alphabet(sel.sys.sigma, fin.sigma);
    const std::size_t off = sel.sys.n();
    for (std::size_t i = 0; i < fin.size(); ++i) {
      std::string name = fin.vars[i] + "_f";
      while (std::find(sel.sys.x_vars.begin(), sel.sys.x_vars.end(), name) != sel.sys.x_vars.end())
        name += "_";
      sel.sys.x_vars.push_back(name);
      sel.sys.x_rhs.push_back(relabel(fin.rhs[i], tmap, off));
    }
    sel.x_comp = off;
    r.stages.push_back(stage("mixed-gnf", sel.sys, true, sel.buchi, sel.x_comp, sel.z_comp));
  }
  if (target == GnfTarget::omega) {
    OmegaSystem o = unmix(sel.sys, sel.x_comp, sel.z_comp, sel.buchi);
    const std::size_t last = o.size() - 1;
    r.stages.push_back(stage("omega-gnf", std::move(o), true, sel.buchi, last));
  }
  return r;
}

GnfPipelineReport gnf_pipeline(const OmegaSystem& s, std::size_t buchi, std::size_t comp,
                               GnfTarget target) {
  validate(s);
  if (comp >= s.size()) throw std::out_of_range("component out of range");
  if (buchi > s.size()) throw std::out_of_range("Büchi count exceeds the number of variables");
  if (target == GnfTarget::omega && is_gnf_omega(s)) {
    GnfPipelineReport r;
    warn_counting(s.kind, r);
    r.stages.push_back(stage("input", s, false, buchi, comp));
    r.skipped = true;
    return r;
  }
  GnfPipelineReport r;
  r.stages.push_back(stage("input", s, false, buchi, comp));
  GnfPipelineReport rest = gnf_pipeline(induce_mixed(s), buchi, comp, comp, target);
  rest.stages.front().name = "induced";
  r.stages.insert(r.stages.end(), rest.stages.begin(), rest.stages.end());
  r.skipped = false;
  r.warnings = rest.warnings;
  return r;
}

}  // namespace walg
