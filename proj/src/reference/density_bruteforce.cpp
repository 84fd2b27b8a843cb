#include <cmath>

#include "netmoments/error.hpp"
#include "netmoments/reference.hpp"

namespace nm::reference {

double hom_density_bruteforce(const MultiMotif& f, const Graphon& w) {
  const auto& rule = w.quadrature();
  const int k = f.num_vertices();
  const int b = static_cast<int>(rule.size());
  const Eigen::MatrixXd vals = w.evaluate(rule.nodes, rule.nodes);
  if (std::pow(static_cast<double>(b), k) > 1e9) throw SizeError("brute-force density too large");
  std::vector<int> idx(k, 0);
  double total = 0.0;
  while (true) {
    double term = 1.0;
    for (int v = 0; v < k; ++v) term *= rule.weights[idx[v]];
    for (const auto& e : f.edges()) term *= std::pow(vals(idx[e.pair.first], idx[e.pair.second]), e.multiplicity);
    total += term;
    int p = k - 1;
    while (p >= 0 && ++idx[p] == b) idx[p--] = 0;
    if (p < 0) break;
  }
  return total;
}

double all_maps_density(const Motif& h, const Graph& g) {
  const int k = h.num_vertices();
  const int n = g.num_vertices();
  if (std::pow(static_cast<double>(n), k) > 1e9) throw SizeError("all-maps enumeration too large");
  std::vector<int> idx(k, 0);
  std::int64_t hom = 0;
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : h.edges())
      if (!g.adjacent(idx[u], idx[v])) {
        ok = false;
        break;
      }
    hom += ok;
    int p = k - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) break;
  }
  return static_cast<double>(hom) / std::pow(static_cast<double>(n), k);
}

}  // namespace nm::reference
