#pragma once

#include "netmoments/graph.hpp"
#include "netmoments/graphon.hpp"
#include "netmoments/kernels.hpp"
#include "netmoments/motif.hpp"

namespace nm::reference {

// Sum over all |rule|^k node assignments of prod W^mult times node weights.
// Exponential in k; for tests on small block graphons.
double hom_density_bruteforce(const MultiMotif& f, const Graphon& w);

// hom(h, g) / n^k by enumerating all (not necessarily injective) maps.
double all_maps_density(const Motif& h, const Graph& g);

}  // namespace nm::reference
