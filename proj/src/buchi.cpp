#include "walg/buchi.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace walg {

std::vector<std::size_t> scc(const std::vector<std::vector<std::size_t>>& succ,
                             std::size_t* count) {
  // iterative Tarjan
  const std::size_t n = succ.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (node, next edge)
  std::size_t next_index = 0, ncomp = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < succ[v].size()) {
        const std::size_t w = succ[v][e++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != done);
        ++ncomp;
      }
    }
  }
  if (count) *count = ncomp;
  return comp;
}

namespace {

struct Components {
  std::vector<std::size_t> comp;
  std::size_t count = 0;
  std::vector<char> nontrivial;
};

Components components(std::size_t n, const std::function<bool(const Value&)>& keep,
                      const BuchiGraph& g) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& [v, w] : g.adj[u])
      if (keep(w)) succ[u].push_back(v);
  Components c;
  c.comp = scc(succ, &c.count);
  c.nontrivial.assign(c.count, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : succ[u])
      if (c.comp[u] == c.comp[v]) c.nontrivial[c.comp[u]] = 1;
  return c;
}

// nodes lying on a cycle (over kept edges) through an accepting node
std::vector<char> good_nodes(const BuchiGraph& g, const std::function<bool(const Value&)>& keep) {
  const std::size_t n = g.size();
  const Components c = components(n, keep, g);
  std::vector<char> good_comp(c.count, 0);
  for (std::size_t u = 0; u < n; ++u)
    if (g.accepting[u] && c.nontrivial[c.comp[u]]) good_comp[c.comp[u]] = 1;
  std::vector<char> good(n, 0);
  for (std::size_t u = 0; u < n; ++u) good[u] = good_comp[c.comp[u]];
  return good;
}

std::vector<Value> boolean_values(const BuchiGraph& g) {
  const std::size_t n = g.size();
  const auto good = good_nodes(g, [](const Value&) { return true; });
  std::vector<std::vector<std::size_t>> pred(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& e : g.adj[u]) pred[e.first].push_back(u);
  std::vector<Value> val(n, zero(g.kind));
  std::vector<std::size_t> work;
  for (std::size_t u = 0; u < n; ++u)
    if (good[u]) {
      val[u] = one(g.kind);
      work.push_back(u);
    }
  while (!work.empty()) {
    const std::size_t v = work.back();
    work.pop_back();
    for (std::size_t u : pred[v])
      if (is_zero(val[u])) {
        val[u] = one(g.kind);
        work.push_back(u);
      }
  }
  return val;
}

std::vector<Value> tropical_values(const BuchiGraph& g) {
  // an infinite path has finite weight iff it ends in zero-weight edges
  const std::size_t n = g.size();
  const auto good = good_nodes(g, [](const Value& w) { return w.v == 0; });
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> pred(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& [v, w] : g.adj[u]) pred[v].emplace_back(u, w.v);
  std::vector<std::int64_t> dist(n, Value::kInf);
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (std::size_t u = 0; u < n; ++u)
    if (good[u]) {
      dist[u] = 0;
      pq.emplace(0, u);
    }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (const auto& [u, w] : pred[v]) {
      const std::int64_t nd = mul(Value{Kind::tropical, d}, Value{Kind::tropical, w}).v;
      if (nd < dist[u]) {
        dist[u] = nd;
        pq.emplace(nd, u);
      }
    }
  }
  std::vector<Value> val(n);
  for (std::size_t u = 0; u < n; ++u) val[u] = Value{Kind::tropical, dist[u]};
  return val;
}

std::vector<Value> arctic_values(const BuchiGraph& g) {
  const std::size_t n = g.size();
  const Components c = components(n, [](const Value&) { return true; }, g);
  std::vector<char> good(c.count, 0), pump(c.count, 0);
  std::vector<std::vector<std::size_t>> members(c.count);
  for (std::size_t u = 0; u < n; ++u) {
    members[c.comp[u]].push_back(u);
    if (g.accepting[u] && c.nontrivial[c.comp[u]]) good[c.comp[u]] = 1;
    for (const auto& [v, w] : g.adj[u])
      if (c.comp[u] == c.comp[v] && w.v > 0) pump[c.comp[u]] = 1;
  }
  // inside a component without positive cycles every internal edge weighs 0,
  // so a component is summarised by one value; sinks come first
  std::vector<Value> best(c.count, zero(Kind::arctic));
  for (std::size_t k = 0; k < c.count; ++k) {
    Value b = good[k] ? one(Kind::arctic) : zero(Kind::arctic);
    for (std::size_t u : members[k])
      for (const auto& [v, w] : g.adj[u])
        if (c.comp[v] != k) b = add(b, mul(w, best[c.comp[v]]));
    if (pump[k] && !is_zero(b)) b = top(Kind::arctic);
    best[k] = b;
  }
  std::vector<Value> val(n);
  for (std::size_t u = 0; u < n; ++u) val[u] = best[c.comp[u]];
  return val;
}

}  // namespace

std::vector<Value> buchi_values(const BuchiGraph& g) {
  switch (g.kind) {
    case Kind::boolean: return boolean_values(g);
    case Kind::tropical: return tropical_values(g);
    case Kind::arctic: return arctic_values(g);
    case Kind::counting: break;
  }
  throw semiring_error("Büchi path sums need an idempotent semiring");
}

namespace {

std::vector<Value> tropical_sums(const BuchiGraph& g, std::size_t src) {
  std::vector<std::int64_t> dist(g.size(), Value::kInf);
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0;
  pq.emplace(0, src);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const auto& [v, w] : g.adj[u]) {
      const std::int64_t nd = mul(Value{Kind::tropical, d}, w).v;
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  std::vector<Value> val(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) val[u] = Value{Kind::tropical, dist[u]};
  return val;
}

std::vector<Value> arctic_sums(const BuchiGraph& g, std::size_t src) {
  const std::size_t n = g.size();
  const Components c = components(n, [](const Value&) { return true; }, g);
  std::vector<char> pump(c.count, 0);
  std::vector<std::vector<std::size_t>> members(c.count);
  for (std::size_t u = 0; u < n; ++u) {
    members[c.comp[u]].push_back(u);
    for (const auto& [v, w] : g.adj[u])
      if (c.comp[u] == c.comp[v] && w.v > 0) pump[c.comp[u]] = 1;
  }
  // sources last in the numbering; a component without positive cycles
  // has only zero-weight internal edges and one common value
  std::vector<Value> in(c.count, zero(Kind::arctic));
  in[c.comp[src]] = one(Kind::arctic);
  std::vector<Value> val(n, zero(Kind::arctic));
  for (std::size_t k = c.count; k-- > 0;) {
    Value b = in[k];
    if (pump[k] && !is_zero(b)) b = top(Kind::arctic);
    for (std::size_t u : members[k]) val[u] = b;
    if (is_zero(b)) continue;
    for (std::size_t u : members[k])
      for (const auto& [v, w] : g.adj[u])
        if (c.comp[v] != k) in[c.comp[v]] = add(in[c.comp[v]], mul(b, w));
  }
  return val;
}

}  // namespace

std::vector<Value> path_sums(const BuchiGraph& g, std::size_t src) {
  if (src >= g.size()) throw std::out_of_range("path_sums: source out of range");
  switch (g.kind) {
    case Kind::boolean: {
      std::vector<Value> val(g.size(), zero(g.kind));
      std::vector<std::size_t> work{src};
      val[src] = one(g.kind);
      while (!work.empty()) {
        const std::size_t u = work.back();
        work.pop_back();
        for (const auto& e : g.adj[u])
          if (is_zero(val[e.first])) {
            val[e.first] = one(g.kind);
            work.push_back(e.first);
          }
      }
      return val;
    }
    case Kind::tropical: return tropical_sums(g, src);
    case Kind::arctic: return arctic_sums(g, src);
    case Kind::counting: break;
  }
  throw semiring_error("path sums need an idempotent semiring");
}

BuchiGraph graph_of(const Matrix& m, std::size_t t) {
  BuchiGraph g(m.kind());
  for (std::size_t i = 0; i < m.rows(); ++i) g.add_node(i < t);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g.add_edge(i, j, m.at(i, j));
  return g;
}

}  // namespace walg
