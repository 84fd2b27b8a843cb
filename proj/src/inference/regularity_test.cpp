#include <cmath>

#include "netmoments/counting.hpp"
#include "netmoments/error.hpp"
#include "netmoments/inference.hpp"

namespace nm {

RegularityTest regularity_test(const Graph& g, const Motif& h, std::optional<double> scale) {
  RegularityTest out;
  out.r = regularity_empirical(h, g);
  out.scale = scale.value_or(std::sqrt(static_cast<double>(g.num_vertices())));
  if (!(out.scale > 0.0)) throw DomainError("regularity test scale must be positive");
  out.statistic = out.scale * out.r;
  out.reject = out.statistic > 1.0;
  return out;
}

}  // namespace nm
