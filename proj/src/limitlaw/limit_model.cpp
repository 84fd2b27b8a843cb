#include <string>

#include "netmoments/error.hpp"
#include "netmoments/limit_law.hpp"

namespace nm {

std::vector<int> LimitSpec::regular_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < regular.size(); ++i)
    if (regular[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> LimitSpec::irregular_indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < regular.size(); ++i)
    if (!regular[i]) out.push_back(static_cast<int>(i));
  return out;
}

LimitSpec make_limit_spec(std::vector<Motif> motifs, const Graphon& w, int grid) {
  std::vector<bool> flags;
  flags.reserve(motifs.size());
  for (const auto& h : motifs) flags.push_back(is_regular(h, w));
  return make_limit_spec(std::move(motifs), std::move(flags), w, grid);
}

LimitSpec make_limit_spec(std::vector<Motif> motifs, std::vector<bool> regular, const Graphon& w,
                          int grid) {
  if (motifs.empty()) throw DomainError("limit law needs at least one motif");
  if (motifs.size() != regular.size()) {
    throw DomainError("got " + std::to_string(regular.size()) + " regularity flags for " +
                      std::to_string(motifs.size()) + " motifs");
  }
  if (grid < 2) throw DomainError("limit grid needs at least 2 points");
  LimitSpec spec{std::move(motifs), std::move(regular), w, grid, {}};
  std::vector<Motif> reg;
  for (int i : spec.regular_indices()) reg.push_back(spec.motifs[i]);
  if (!reg.empty()) spec.sigma = sigma_matrix(reg, w);
  return spec;
}

}  // namespace nm
