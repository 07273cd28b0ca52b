#include "walg/gnf.hpp"

#include <algorithm>

namespace walg {

namespace {

std::string unique_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
  return name;
}

// Appends the variables of `part` to `into`, terminals merged by name.
// Returns the variable offset.
std::size_t append_vars(std::vector<std::string>& names, std::vector<Polynomial>& rhs,
                        Alphabet& sigma, const AlgebraicSystem& part, const std::string& suffix) {
  const auto tmap = merge_alphabet(sigma, part.sigma);
  const std::size_t off = names.size();
  for (std::size_t i = 0; i < part.size(); ++i) {
    names.push_back(unique_name(names, part.vars[i] + suffix));
    rhs.push_back(relabel(part.rhs[i], tmap, off));
  }
  return off;
}

SeriesRef normalized_ref(const SeriesRef& r) {
  if (r.comp == 0) return r;
  return SeriesRef{extract_component(r.sys, r.comp), 0};
}

AlgebraicSystem scalar_system(Kind k, const Alphabet& sigma, const Value& e) {
  return AlgebraicSystem{k, sigma, {"e"}, {Polynomial::monomial(e, {})}};
}

// The epsilon-free part of component c, scaled by `scale`, as a strict GNF series.
std::optional<SeriesRef> proper_part(const GnfResult& g, std::size_t c, const Value& scale) {
  AlgebraicSystem s = g.sys;
  const std::size_t v = s.size();
  s.vars.push_back(unique_name(s.vars, "w"));
  s.rhs.push_back(poly_scale(scale, s.rhs[g.proper[c]]));
  SeriesRef r{extract_component(s, v), 0};
  if (!productive(r.sys)[0]) return std::nullopt;
  return r;
}

}  // namespace

OmegaDecomposition normalize_decomposition(const OmegaDecomposition& d) {
  OmegaDecomposition out{d.kind, d.sigma, {}};
  for (const auto& term : d.terms) {
    const SeriesRef t = normalized_ref(term.t);
    const GnfResult tg = finite_gnf(t.sys, true);
    // t^omega = ((t,eps)^* t')^omega since eps^omega = 0
    const auto tn = proper_part(tg, 0, star(tg.eps[0]));
    if (!tn) continue;
    if (term.eps_scalar) {
      if (!is_zero(*term.eps_scalar))
        out.terms.push_back({term.s, *tn, term.eps_scalar});
      continue;
    }
    const SeriesRef s = normalized_ref(term.s);
    const GnfResult sg = finite_gnf(s.sys, true);
    if (!is_zero(sg.eps[0]))
      out.terms.push_back({SeriesRef{scalar_system(d.kind, s.sys.sigma, sg.eps[0]), 0}, *tn,
                           sg.eps[0]});
    if (auto sn = proper_part(sg, 0, one(d.kind))) out.terms.push_back({*sn, *tn, std::nullopt});
  }
  return out;
}

SelectedMixed build_pair_system(const SeriesRef& s_in, const SeriesRef& t_in, PairCase pc,
                                const Value& e) {
  const SeriesRef t = normalized_ref(t_in);
  if (!is_strict_gnf(t.sys)) throw gnf_error("pair construction: t-system is not in strict GNF");
  const Kind k = t.sys.kind;
  MixedSystem r;
  r.kind = k;
  std::size_t n = 0;
  AlgebraicSystem s;
  if (pc == PairCase::eps_zero) {
    s = normalized_ref(s_in).sys;
    if (!is_strict_gnf(s)) throw gnf_error("pair construction: s-system is not in strict GNF");
    if (s.kind != k) throw gnf_error("pair construction: systems over different semirings");
    n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      r.x_vars.push_back("x" + std::to_string(i + 1));
      r.x_rhs.push_back(relabel(s.rhs[i], merge_alphabet(r.sigma, s.sigma), 0));
    }
  }
  const std::size_t m = t.sys.size();
  const auto tmap = merge_alphabet(r.sigma, t.sys.sigma);
  for (std::size_t i = 0; i < m; ++i) {
    r.x_vars.push_back("x" + std::to_string(i + 1) + "'");
    r.x_rhs.push_back(relabel(t.sys.rhs[i], tmap, n));
  }
  // z order: z'', z'_1..z'_m, z_1..z_n (or the single scaled z_1)
  r.z_vars.push_back("z''");
  for (std::size_t i = 0; i < m; ++i) r.z_vars.push_back("z" + std::to_string(i + 1) + "'");
  const std::size_t zn = pc == PairCase::eps_zero ? n : 1;
  for (std::size_t i = 0; i < zn; ++i) r.z_vars.push_back("z" + std::to_string(i + 1));
  r.rho = empty_rho(k, r.z_vars.size());

  // a -> a z'', a X -> a X z'', a X Y -> a X z_Y
  auto emit = [&](std::size_t row, const Polynomial& p, std::size_t var_base, std::size_t z_base) {
    for (const auto& [w, c] : p.terms()) {
      if (w.size() <= 2) {
        r.rho[row][0].add_term(w, c);
      } else {
        const std::size_t y = var_index(w[2]) - var_base;
        r.rho[row][z_base + y].add_term({w[0], w[1]}, c);
      }
    }
  };
  for (std::size_t i = 0; i < m; ++i) emit(1 + i, r.x_rhs[n + i], n, 1);
  r.rho[0] = r.rho[1];
  if (pc == PairCase::eps_zero) {
    for (std::size_t i = 0; i < n; ++i) emit(1 + m + i, r.x_rhs[i], 0, 1 + m);
  } else {
    for (std::size_t j = 0; j < r.z_vars.size(); ++j) r.rho[1 + m][j] = poly_scale(e, r.rho[0][j]);
  }
  return SelectedMixed{std::move(r), 1, 0, 1 + m};
}

SelectedMixed sum_systems(Kind k, const Alphabet& sigma, const std::vector<SelectedMixed>& parts) {
  MixedSystem r;
  r.kind = k;
  r.sigma = sigma;
  const std::size_t l = parts.size();
  // global z index of every part's z variables
  std::vector<std::vector<std::size_t>> zmap(l);
  std::size_t next = l;
  for (std::size_t i = 0; i < l; ++i) {
    const auto& p = parts[i];
    if (p.buchi != 1 || p.z_comp == 0 || p.z_comp >= p.sys.m())
      throw gnf_error("sum_systems: each part needs one Büchi variable first and a distinct designated variable");
    zmap[i].assign(p.sys.m(), 0);
    zmap[i][0] = i;
    zmap[i][p.z_comp] = next++;
    for (std::size_t j = 1; j < p.sys.m(); ++j)
      if (j != p.z_comp) zmap[i][j] = next++;
  }
  const std::size_t m = next + 1;
  r.z_vars.assign(m, "");
  r.z_vars[m - 1] = "z'";
  r.rho = empty_rho(k, m);
  for (std::size_t i = 0; i < l; ++i) {
    const auto& p = parts[i];
    const std::string suffix = "_" + std::to_string(i + 1);
    const std::size_t off =
        append_vars(r.x_vars, r.x_rhs, r.sigma, x_part(p.sys), suffix);
    const auto tmap = merge_alphabet(r.sigma, p.sys.sigma);
    for (std::size_t a = 0; a < p.sys.m(); ++a) {
      r.z_vars[zmap[i][a]] = p.sys.z_vars[a] + suffix;
      for (std::size_t b = 0; b < p.sys.m(); ++b)
        r.rho[zmap[i][a]][zmap[i][b]] = relabel(p.sys.rho[a][b], tmap, off);
    }
    for (std::size_t b = 0; b < p.sys.m(); ++b)
      r.rho[m - 1][zmap[i][b]] = relabel(p.sys.rho[p.z_comp][b], tmap, off);
  }
  return SelectedMixed{std::move(r), l, 0, m - 1};
}

OmegaSystem unmix(const MixedSystem& s, std::size_t k, std::size_t l, std::size_t t) {
  if (!is_gnf_mixed(s)) throw gnf_error("unmix: input is not a mixed GNF system");
  const std::size_t n = s.n(), m = s.m();
  if (k >= n) throw std::out_of_range("unmix: x-component out of range");
  if (l >= m) throw std::out_of_range("unmix: z-component out of range");
  if (t > m) throw std::out_of_range("unmix: Büchi count exceeds the z-variables");
  OmegaSystem r;
  r.kind = s.kind;
  r.sigma = s.sigma;
  for (std::size_t i = 0; i < m; ++i) r.vars.push_back("yh" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) r.vars.push_back("yb" + std::to_string(i + 1));
  r.vars.push_back("yd");
  auto bar = [&](const Polynomial& p) { return p.map_vars([m](std::size_t j) { return var_sym(m + j); }); };
  auto row = [&](std::size_t i) {
    Polynomial acc(s.kind);
    for (std::size_t j = 0; j < m; ++j)
      acc = poly_add(acc, poly_mul(bar(s.rho[i][j]), Polynomial::monomial(one(s.kind), {var_sym(j)})));
    return acc;
  };
  for (std::size_t i = 0; i < m; ++i) r.rhs.push_back(row(i));
  for (std::size_t i = 0; i < n; ++i) r.rhs.push_back(bar(s.x_rhs[i]));
  r.rhs.push_back(poly_add(bar(s.x_rhs[k]), row(l)));
  return r;
}

SelectedMixed char_to_mixed(const OmegaDecomposition& d) {
  const std::size_t l = d.terms.size();
  MixedSystem r;
  r.kind = d.kind;
  r.sigma = d.sigma;
  // designated components occupy x_1..x_2l, remaining variables follow
  std::vector<const SeriesRef*> refs;
  for (const auto& t : d.terms) refs.push_back(&t.s);
  for (const auto& t : d.terms) refs.push_back(&t.t);
  std::vector<std::string> names(2 * l);
  std::vector<Polynomial> rhs(2 * l, Polynomial(d.kind));
  for (std::size_t q = 0; q < refs.size(); ++q) {
    const AlgebraicSystem& sys = refs[q]->sys;
    const auto tmap = merge_alphabet(r.sigma, sys.sigma);
    const std::string suffix = (q < l ? "_s" : "_t") + std::to_string(q % std::max<std::size_t>(l, 1) + 1);
    std::vector<std::size_t> index(sys.size());
    for (std::size_t v = 0; v < sys.size(); ++v) {
      if (v == refs[q]->comp) {
        index[v] = q;
        continue;
      }
      index[v] = names.size();
      names.emplace_back();
      rhs.emplace_back(d.kind);
    }
    for (std::size_t v = 0; v < sys.size(); ++v) {
      names[index[v]] = sys.vars[v] + suffix;
      rhs[index[v]] = relabel(sys.rhs[v], tmap, 0).map_vars([&](std::size_t x) { return var_sym(index[x]); });
    }
  }
  std::vector<std::string> taken;
  for (auto& nme : names) {
    nme = unique_name(taken, nme);
    taken.push_back(nme);
  }
  r.x_vars = std::move(names);
  r.x_rhs = std::move(rhs);
  for (std::size_t j = 0; j <= l; ++j) r.z_vars.push_back("z" + std::to_string(j + 1));
  r.rho = empty_rho(d.kind, l + 1);
  for (std::size_t j = 0; j < l; ++j) {
    r.rho[j][j] = Polynomial::monomial(one(d.kind), {var_sym(l + j)});
    r.rho[l][j] = Polynomial::monomial(one(d.kind), {var_sym(j)});
  }
  validate(r);
  return SelectedMixed{std::move(r), l, 0, l};
}

SelectedMixed decomposition_to_mixed_gnf(const OmegaDecomposition& d) {
  const OmegaDecomposition nd = normalize_decomposition(d);
  std::vector<SelectedMixed> parts;
  for (const auto& term : nd.terms) {
    if (term.eps_scalar)
      parts.push_back(build_pair_system(term.s, term.t, PairCase::eps_scalar, *term.eps_scalar));
    else
      parts.push_back(build_pair_system(term.s, term.t, PairCase::eps_zero, one(d.kind)));
  }
  return sum_systems(d.kind, d.sigma, parts);
}

}  // namespace walg
