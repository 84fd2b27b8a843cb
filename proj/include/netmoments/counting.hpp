#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graph.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/kernels.hpp"
#include "netmoments/motif.hpp"

namespace nm {

// (n)_k = n (n-1) ... (n-k+1) as a double.
double falling_factorial(int n, int k);

// Injective homomorphisms of h into g (= |Aut(h)| times the number of copies).
// Closed forms for K2, K_{1,2}, K3, C4 and the bowtie; backtracking otherwise.
std::int64_t count_injective(const Motif& h, const Graph& g);

// Unlabeled copies of h in g.
std::int64_t count_copies(const Motif& h, const Graph& g);

// Unbiased density estimate |Aut| X / (n)_k = inj / (n)_k.
double density_hat(const Motif& h, const Graph& g);

struct OnePointDensity {
  Eigen::VectorXd t_hat;  // (1/|Aut|) sum_a X_a(v) / n^{k-1}
  RootedCounts raw;       // X_a(v)
};
OnePointDensity one_point_density(const Motif& h, const Graph& g);

// (1/(2|Aut|)) sum_{a != b} X_{a,b}(u,v) / n^{k-2}, symmetric, zero diagonal.
Eigen::MatrixXd two_point_matrix(const Motif& h, const Graph& g);

Graphon empirical_graphon(const Graph& g);

// sum_{a,b} t_hat(h (+)_{ab} h) - k^2 t_hat(h)^2, unclamped.
double regularity_empirical(const Motif& h, const Graph& g);

}  // namespace nm
