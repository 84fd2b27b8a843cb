#include "netmoments/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "netmoments/error.hpp"
#include "netmoments/rng.hpp"

namespace nm {
namespace {

constexpr double kSizeTol = 1e-12;
constexpr double kSymmetryTol = 1e-12;
constexpr int kSpotChecks = 64;

}  // namespace

Graphon Graphon::block(std::vector<double> sizes, const Eigen::MatrixXd& values, std::string name) {
  const auto b = static_cast<Eigen::Index>(sizes.size());
  if (b == 0) throw DomainError("block graphon needs at least one block");
  if (values.rows() != b || values.cols() != b) {
    throw DomainError("block value matrix must be " + std::to_string(b) + "x" + std::to_string(b));
  }
  double total = 0.0;
  for (double s : sizes) {
    if (!(s >= 0.0)) throw DomainError("block sizes must be non-negative");
    total += s;
  }
  if (std::abs(total - 1.0) > kSizeTol) throw DomainError("block sizes must sum to 1");
  for (Eigen::Index i = 0; i < b; ++i) {
    for (Eigen::Index j = 0; j < b; ++j) {
      const double v = values(i, j);
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("block values must lie in [0, 1]");
      if (std::abs(v - values(j, i)) > kSymmetryTol) throw DomainError("block values must be symmetric");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kBlock;
  impl->name = std::move(name);
  impl->values = 0.5 * (values + values.transpose());
  impl->sizes = std::move(sizes);
  impl->cumulative.resize(b);
  std::partial_sum(impl->sizes.begin(), impl->sizes.end(), impl->cumulative.begin());
  double left = 0.0;
  for (Eigen::Index i = 0; i < b; ++i) {
    impl->rule.nodes.push_back(left + 0.5 * impl->sizes[i]);
    impl->rule.weights.push_back(impl->sizes[i]);
    left += impl->sizes[i];
  }
  for (Eigen::Index i = 0; i + 1 < b; ++i) {
    if (impl->cumulative[i] > 0.0 && impl->cumulative[i] < 1.0) {
      impl->breakpoints.push_back(impl->cumulative[i]);
    }
  }
  return Graphon(std::move(impl));
}

Graphon Graphon::expression(std::string name, Function w, std::vector<double> breakpoints,
                            int order) {
  if (!w) throw DomainError("expression graphon needs a callable");
  if (order < 1) throw DomainError("quadrature order must be positive");
  Rng rng(0x5eedULL);
  for (int i = 0; i < kSpotChecks; ++i) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    const double a = w(x, y);
    const double b = w(y, x);
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("graphon '" + name + "' leaves [0, 1]");
    if (std::abs(a - b) > kSymmetryTol) throw DomainError("graphon '" + name + "' is not symmetric");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kExpression;
  impl->name = std::move(name);
  impl->fn = std::move(w);
  impl->breakpoints = std::move(breakpoints);
  impl->order = order;
  impl->rule = composite_gauss_legendre(impl->breakpoints, order);
  return Graphon(std::move(impl));
}

Graphon Graphon::empirical(std::shared_ptr<const Graph> g) {
  if (!g) throw DomainError("empirical graphon needs a graph");
  const int n = g->num_vertices();
  if (n < 1) throw DomainError("empirical graphon needs at least one vertex");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kEmpirical;
  impl->name = "empirical";
  impl->graph = std::move(g);
  impl->rule = midpoint_rule(n);
  for (int i = 1; i < n; ++i) impl->breakpoints.push_back(static_cast<double>(i) / n);
  return Graphon(std::move(impl));
}

Graphon Graphon::empirical(const Graph& g) { return empirical(std::make_shared<const Graph>(g)); }

int Graphon::block_of(double x) const {
  if (impl_->kind == Kind::kEmpirical) {
    // Vertex i owns the cell ((i-1)/n, i/n] in 1-based labels.
    const int n = impl_->graph->num_vertices();
    int i = static_cast<int>(std::ceil(x * n)) - 1;
    return std::clamp(i, 0, n - 1);
  }
  const auto& c = impl_->cumulative;
  auto it = std::upper_bound(c.begin(), c.end(), x);
  int i = static_cast<int>(it - c.begin());
  return std::min(i, static_cast<int>(c.size()) - 1);
}

double Graphon::operator()(double x, double y) const {
  switch (impl_->kind) {
    case Kind::kBlock:
      return impl_->values(block_of(x), block_of(y));
    case Kind::kExpression:
      return impl_->fn(x, y);
    case Kind::kEmpirical:
      return impl_->graph->adjacent(block_of(x), block_of(y)) ? 1.0 : 0.0;
  }
  return 0.0;
}

QuadratureRule Graphon::quadrature(int refine) const {
  if (impl_->kind != Kind::kExpression || refine == 1) return impl_->rule;
  return composite_gauss_legendre(impl_->breakpoints, impl_->order * refine);
}

Eigen::MatrixXd Graphon::evaluate(std::span<const double> xs, std::span<const double> ys) const {
  const auto nx = static_cast<Eigen::Index>(xs.size());
  const auto ny = static_cast<Eigen::Index>(ys.size());
  Eigen::MatrixXd out(nx, ny);
  if (impl_->kind == Kind::kExpression) {
    for (Eigen::Index i = 0; i < nx; ++i)
      for (Eigen::Index j = 0; j < ny; ++j) out(i, j) = impl_->fn(xs[i], ys[j]);
    return out;
  }
  std::vector<int> bx(nx), by(ny);
  for (Eigen::Index i = 0; i < nx; ++i) bx[i] = block_of(xs[i]);
  for (Eigen::Index j = 0; j < ny; ++j) by[j] = block_of(ys[j]);
  if (impl_->kind == Kind::kBlock) {
    for (Eigen::Index i = 0; i < nx; ++i)
      for (Eigen::Index j = 0; j < ny; ++j) out(i, j) = impl_->values(bx[i], by[j]);
  } else {
    const Graph& g = *impl_->graph;
    for (Eigen::Index i = 0; i < nx; ++i)
      for (Eigen::Index j = 0; j < ny; ++j) out(i, j) = g.adjacent(bx[i], by[j]) ? 1.0 : 0.0;
  }
  return out;
}

int Graphon::num_blocks() const {
  switch (impl_->kind) {
    case Kind::kBlock:
      return static_cast<int>(impl_->sizes.size());
    case Kind::kEmpirical:
      return impl_->graph->num_vertices();
    case Kind::kExpression:
      break;
  }
  throw DomainError("expression graphons have no block structure");
}

Eigen::VectorXd Graphon::block_sizes() const {
  if (impl_->kind == Kind::kExpression) throw DomainError("expression graphons have no block structure");
  return Eigen::Map<const Eigen::VectorXd>(impl_->rule.weights.data(),
                                           static_cast<Eigen::Index>(impl_->rule.weights.size()));
}

Eigen::MatrixXd Graphon::block_values() const {
  if (impl_->kind == Kind::kBlock) return impl_->values;
  if (impl_->kind == Kind::kEmpirical) return impl_->graph->adjacency_matrix();
  throw DomainError("expression graphons have no block structure");
}

bool Graphon::zero_one_valued() const {
  if (impl_->kind == Kind::kEmpirical) return true;
  if (impl_->kind == Kind::kBlock) {
    return (impl_->values.array() == 0.0 || impl_->values.array() == 1.0).all();
  }
  return false;
}

Graphon Graphon::with_order(int order) const {
  if (impl_->kind != Kind::kExpression) return *this;
  return expression(impl_->name, impl_->fn, impl_->breakpoints, order);
}

}  // namespace nm
