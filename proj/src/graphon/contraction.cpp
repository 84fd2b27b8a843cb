#include "graphon/contraction.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "netmoments/error.hpp"

namespace nm::detail {
namespace {

struct Factor {
  std::vector<int> vars;  // sorted
  std::vector<double> data;
};

struct Layout {
  std::vector<std::size_t> dim;              // per motif vertex
  std::vector<std::span<const double>> pts;  // per motif vertex
  std::vector<int> domain;                   // 0 = rule, i+1 = pinned[i]
};

// Row-major stride of `var` inside factor f, or 0 if f does not mention it.
std::size_t stride_of(const Factor& f, int var, const Layout& lay) {
  std::size_t s = 1;
  bool found = false;
  for (auto it = f.vars.rbegin(); it != f.vars.rend(); ++it) {
    if (*it == var) {
      found = true;
      break;
    }
    s *= lay.dim[*it];
  }
  return found ? s : 0;
}

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// out[idx over out_vars] = sum_i weights[i] * prod_f f[...] with the summed
// variable at index i; sum_var < 0 means a plain product (no summation).
std::vector<double> product_sum(const std::vector<const Factor*>& fs,
                                const std::vector<int>& out_vars, int sum_var,
                                std::span<const double> weights, const Layout& lay) {
  std::size_t total = 1;
  for (int v : out_vars) total *= lay.dim[v];
  const std::size_t inner = sum_var >= 0 ? lay.dim[sum_var] : 1;
  const std::size_t nf = fs.size();
  const std::size_t nv = out_vars.size();
  std::vector<std::size_t> strides(nf * nv);
  std::vector<std::size_t> inner_stride(nf, 0);
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t p = 0; p < nv; ++p) strides[f * nv + p] = stride_of(*fs[f], out_vars[p], lay);
    if (sum_var >= 0) inner_stride[f] = stride_of(*fs[f], sum_var, lay);
  }
  std::vector<std::size_t> dims(nv);
  for (std::size_t p = 0; p < nv; ++p) dims[p] = lay.dim[out_vars[p]];

  std::vector<double> out(total);
  const double work = static_cast<double>(total) * static_cast<double>(inner) * static_cast<double>(nf);
  const auto total_i = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static) if (work > 1e5)
  for (std::int64_t idx = 0; idx < total_i; ++idx) {
    std::vector<std::size_t> base(nf, 0);
    std::size_t rem = static_cast<std::size_t>(idx);
    for (std::size_t p = nv; p-- > 0;) {
      const std::size_t digit = rem % dims[p];
      rem /= dims[p];
      for (std::size_t f = 0; f < nf; ++f) base[f] += digit * strides[f * nv + p];
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < inner; ++i) {
      double prod = sum_var >= 0 ? weights[i] : 1.0;
      for (std::size_t f = 0; f < nf; ++f) prod *= fs[f]->data[base[f] + i * inner_stride[f]];
      acc += prod;
    }
    out[idx] = acc;
  }
  return out;
}

}  // namespace

std::vector<double> contract(const MultiMotif& f, const Graphon& w, const QuadratureRule& rule,
                             std::span<const PinnedVertex> pinned) {
  const int k = f.num_vertices();
  Layout lay;
  lay.dim.assign(k, rule.size());
  lay.pts.assign(k, std::span<const double>(rule.nodes));
  lay.domain.assign(k, 0);
  for (std::size_t i = 0; i < pinned.size(); ++i) {
    const int v = pinned[i].vertex;
    if (v < 0 || v >= k) throw DomainError("pinned vertex out of range");
    if (lay.domain[v] != 0) throw DomainError("vertex pinned twice");
    lay.dim[v] = pinned[i].points.size();
    lay.pts[v] = pinned[i].points;
    lay.domain[v] = static_cast<int>(i) + 1;
  }

  // Kernel matrices are shared between edges over the same pair of domains.
  struct CacheEntry {
    int du, dv, mult;
    std::vector<double> data;
  };
  std::vector<CacheEntry> cache;
  auto edge_matrix = [&](int u, int v, int mult) -> const std::vector<double>& {
    for (const auto& c : cache)
      if (c.du == lay.domain[u] && c.dv == lay.domain[v] && c.mult == mult) return c.data;
    Eigen::MatrixXd m = w.evaluate(lay.pts[u], lay.pts[v]);
    std::vector<double> data(static_cast<std::size_t>(m.size()));
    std::size_t t = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) data[t++] = int_pow(m(i, j), mult);
    cache.push_back({lay.domain[u], lay.domain[v], mult, std::move(data)});
    return cache.back().data;
  };

  std::vector<Factor> factors;
  factors.reserve(f.edges().size() + k);
  for (const auto& e : f.edges()) {
    const auto [u, v] = e.pair;
    factors.push_back({{u, v}, edge_matrix(u, v, e.multiplicity)});
  }

  std::vector<bool> is_pinned(k, false);
  for (const auto& p : pinned) is_pinned[p.vertex] = true;
  std::vector<int> summed;
  for (int v = 0; v < k; ++v)
    if (!is_pinned[v]) summed.push_back(v);

  double scalar = 1.0;
  const double weight_sum = std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0);

  while (!summed.empty()) {
    // Greedy: eliminate the vertex whose elimination creates the smallest factor.
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < summed.size(); ++s) {
      const int v = summed[s];
      std::vector<int> nb;
      for (const auto& fa : factors) {
        if (!std::binary_search(fa.vars.begin(), fa.vars.end(), v)) continue;
        for (int x : fa.vars)
          if (x != v) nb.push_back(x);
      }
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      double cost = 1.0;
      for (int x : nb) cost *= static_cast<double>(lay.dim[x]);
      if (cost < best_cost) {
        best_cost = cost;
        best = s;
      }
    }
    const int v = summed[best];
    summed.erase(summed.begin() + static_cast<std::ptrdiff_t>(best));

    std::vector<Factor> keep;
    std::vector<Factor> touch;
    for (auto& fa : factors) {
      if (std::binary_search(fa.vars.begin(), fa.vars.end(), v)) {
        touch.push_back(std::move(fa));
      } else {
        keep.push_back(std::move(fa));
      }
    }
    if (touch.empty()) {
      scalar *= weight_sum;  // isolated vertex integrates to 1 (or the rule's mass)
      factors = std::move(keep);
      continue;
    }
    std::vector<int> out_vars;
    for (const auto& fa : touch)
      for (int x : fa.vars)
        if (x != v) out_vars.push_back(x);
    std::sort(out_vars.begin(), out_vars.end());
    out_vars.erase(std::unique(out_vars.begin(), out_vars.end()), out_vars.end());
    std::vector<const Factor*> ptrs;
    for (const auto& fa : touch) ptrs.push_back(&fa);
    Factor merged{out_vars, product_sum(ptrs, out_vars, v, rule.weights, lay)};
    keep.push_back(std::move(merged));
    factors = std::move(keep);
  }

  std::vector<int> order;
  for (const auto& p : pinned) order.push_back(p.vertex);
  std::vector<const Factor*> ptrs;
  for (const auto& fa : factors) ptrs.push_back(&fa);
  auto out = product_sum(ptrs, order, -1, {}, lay);
  if (scalar != 1.0)
    for (double& x : out) x *= scalar;
  return out;
}

}  // namespace nm::detail
