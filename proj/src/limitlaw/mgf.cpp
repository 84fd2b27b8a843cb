#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "motifs/orbits.hpp"
#include "netmoments/error.hpp"
#include "netmoments/limit_law.hpp"

namespace nm {
namespace {

constexpr double kTermTol = 1e-12;
constexpr int kMaxTerms = 200;

void check_alpha(const LimitSpec& spec, std::span<const double> alpha) {
  if (alpha.size() != spec.motifs.size()) {
    throw DomainError("coefficient vector has " + std::to_string(alpha.size()) +
                      " entries for " + std::to_string(spec.motifs.size()) + " motifs");
  }
}

// sum over ordered pairs a != b of h1 and c != d of h2 of the density of the
// extended weak join; (a,b),(c,d) and (b,a),(d,c) give isomorphic joins.
double extended_join_sum(const Motif& h1, const Motif& h2, const Graphon& w) {
  double s = 0.0;
  for (const auto& [ab, cab] : detail::unordered_pair_orbit_reps(h1)) {
    for (const auto& [cd, ccd] : detail::unordered_pair_orbit_reps(h2)) {
      const OrderedPair dc{cd.second, cd.first};
      s += cab * ccd *
           (hom_density(extended_edge_join(h1, ab, h2, cd, JoinMode::kWeak), w) +
            hom_density(extended_edge_join(h1, ab, h2, dc, JoinMode::kWeak), w));
    }
  }
  return 2.0 * s;
}

struct SecondOrder {
  double eta = 0.0;        // variance of the linear part
  double eta_tilde = 0.0;  // variance of the Gaussian block plus twice ||U||^2
};

SecondOrder second_order(const LimitSpec& spec, std::span<const double> alpha) {
  SecondOrder out;
  std::vector<Motif> irr;
  std::vector<double> a_irr;
  for (int i : spec.irregular_indices()) {
    if (alpha[i] == 0.0) continue;
    irr.push_back(spec.motifs[i]);
    a_irr.push_back(alpha[i]);
  }
  if (!irr.empty()) {
    const Eigen::Map<const Eigen::VectorXd> a(a_irr.data(), static_cast<Eigen::Index>(a_irr.size()));
    out.eta = a.dot(gamma_matrix(irr, spec.graphon).entries * a);
  }
  double joins = 0.0;
  double degree = 0.0;
  const auto reg = spec.regular_indices();
  for (int i : reg) {
    if (alpha[i] == 0.0) continue;
    degree += alpha[i] * kernel_degree(spec.motifs[i], spec.graphon);
    for (int j : reg) {
      if (alpha[j] == 0.0) continue;
      const Motif& hi = spec.motifs[i];
      const Motif& hj = spec.motifs[j];
      joins += alpha[i] * alpha[j] * extended_join_sum(hi, hj, spec.graphon) /
               (2.0 * static_cast<double>(hi.automorphisms()) * hj.automorphisms());
    }
  }
  out.eta_tilde = joins - 2.0 * degree * degree;
  return out;
}

// Grid versions of the combined linear part v = sum alpha_i g_i and the
// combined operator T = sum alpha_i K_i / m.
struct GridParts {
  Eigen::VectorXd v;
  Eigen::MatrixXd t;
  int m = 0;
};

GridParts grid_parts(const LimitSpec& spec, std::span<const double> alpha) {
  LimitSpec trimmed = spec;
  trimmed.sigma = {};  // the Gaussian block does not enter the grid parts
  const LimitSampler sampler(trimmed);
  GridParts out;
  out.m = spec.grid;
  out.v = Eigen::VectorXd::Zero(out.m);
  out.t = Eigen::MatrixXd::Zero(out.m, out.m);
  for (std::size_t i = 0; i < spec.motifs.size(); ++i) {
    if (alpha[i] == 0.0) continue;
    if (spec.regular[i]) {
      out.t += alpha[i] * sampler.centered_kernel(static_cast<int>(i));
    } else {
      const auto& g = sampler.linear_part(static_cast<int>(i));
      out.v += alpha[i] * Eigen::Map<const Eigen::VectorXd>(g.data(), out.m);
    }
  }
  out.t /= static_cast<double>(out.m);
  return out;
}

}  // namespace

double mgf_radius_constant(const LimitSpec& spec, std::span<const double> alpha) {
  check_alpha(spec, alpha);
  double c = 0.0;
  for (int i : spec.regular_indices()) {
    const Motif& h = spec.motifs[i];
    const double k = h.num_vertices();
    c += std::abs(alpha[i]) * k * (k - 1.0) / static_cast<double>(h.automorphisms());
  }
  return c;
}

double log_mgf_oracle(const LimitSpec& spec, std::span<const double> alpha, double theta) {
  const double c = mgf_radius_constant(spec, alpha);
  if (c > 0.0 && !(std::abs(theta) < 1.0 / (32.0 * c))) {
    throw DomainError("theta " + std::to_string(theta) + " is outside the series radius 1/(32 C) = " +
                      std::to_string(1.0 / (32.0 * c)));
  }
  const SecondOrder so = second_order(spec, alpha);
  double total = 0.5 * (so.eta + so.eta_tilde) * theta * theta;
  if (theta == 0.0) return total;

  const GridParts gp = grid_parts(spec, alpha);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gp.t, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd mu = es.eigenvalues();
  Eigen::VectorXd power = Eigen::VectorXd::Ones(mu.size());  // mu^L
  Eigen::VectorXd walk = gp.v;                               // T^L v
  const double inv_m = 1.0 / gp.m;
  for (int len = 1; len <= kMaxTerms; ++len) {
    walk = gp.t * walk;
    power = power.cwiseProduct(mu);
    const double linear = std::ldexp(std::pow(theta, len + 2), len - 1) * gp.v.dot(walk) * inv_m;
    const double quad = len >= 3 ? 0.5 * std::pow(2.0 * theta, len) / len * power.sum() : 0.0;
    total += linear + quad;
    if (len >= 3 && std::abs(linear) + std::abs(quad) < kTermTol) break;
  }
  return total;
}

double log_mgf_spectral(const LimitSpec& spec, std::span<const double> alpha, double theta) {
  check_alpha(spec, alpha);
  const SecondOrder so = second_order(spec, alpha);
  const GridParts gp = grid_parts(spec, alpha);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gp.t);
  const Eigen::VectorXd& mu = es.eigenvalues();
  const Eigen::VectorXd coef = es.eigenvectors().transpose() * gp.v;
  // Second-order terms come from the exact join densities; the grid only
  // supplies the third and higher orders, as in the series.
  double total = 0.5 * (so.eta + so.eta_tilde) * theta * theta;
  for (Eigen::Index s = 0; s < mu.size(); ++s) {
    const double x = 2.0 * theta * mu(s);
    if (!(x < 1.0)) throw DomainError("theta is beyond the spectral singularity of the kernel");
    const double vs2 = coef(s) * coef(s) / gp.m;
    total += 0.5 * theta * theta * vs2 * (x / (1.0 - x));
    total += -0.5 * x - 0.5 * std::log1p(-x) - 0.25 * x * x;
  }
  return total;
}

}  // namespace nm
