#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netmoments/graph.hpp"
#include "netmoments/quadrature.hpp"

namespace nm {

// Symmetric kernel W: [0,1]^2 -> [0,1].
//
// Block graphons are step functions; their densities are exact finite sums.
// Expression graphons wrap a callable and are integrated with composite
// Gauss-Legendre on panels cut at declared breakpoints. Empirical graphons
// are the step function of an observed graph and behave like a Block
// graphon with n equal blocks.
class Graphon {
 public:
  enum class Kind { kBlock, kExpression, kEmpirical };
  using Function = std::function<double(double, double)>;

  static constexpr int kDefaultOrder = 16;

  static Graphon block(std::vector<double> sizes, const Eigen::MatrixXd& values,
                       std::string name = "block");
  // W is spot-checked for symmetry and range on a fixed pseudo-random point set.
  static Graphon expression(std::string name, Function w, std::vector<double> breakpoints = {},
                            int order = kDefaultOrder);
  static Graphon empirical(std::shared_ptr<const Graph> g);
  static Graphon empirical(const Graph& g);

  Kind kind() const { return impl_->kind; }
  const std::string& name() const { return impl_->name; }

  double operator()(double x, double y) const;

  // Block and Empirical: block midpoints weighted by block sizes; evaluating
  // W on these nodes is exact. Expression: composite Gauss-Legendre with
  // order * refine nodes per panel.
  const QuadratureRule& quadrature() const { return impl_->rule; }
  QuadratureRule quadrature(int refine) const;
  bool exact_quadrature() const { return impl_->kind != Kind::kExpression; }

  // Dense matrix of W over two point sets.
  Eigen::MatrixXd evaluate(std::span<const double> xs, std::span<const double> ys) const;

  // Block-level data; for Empirical graphons these are the n equal blocks.
  int num_blocks() const;
  Eigen::VectorXd block_sizes() const;
  Eigen::MatrixXd block_values() const;

  bool zero_one_valued() const;
  std::shared_ptr<const Graph> graph() const { return impl_->graph; }
  std::vector<double> breakpoints() const { return impl_->breakpoints; }
  int order() const { return impl_->order; }
  Graphon with_order(int order) const;

 private:
  struct Impl {
    Kind kind;
    std::string name;
    // Block
    std::vector<double> sizes;
    std::vector<double> cumulative;
    Eigen::MatrixXd values;
    // Expression
    Function fn;
    std::vector<double> breakpoints;
    int order = kDefaultOrder;
    // Empirical
    std::shared_ptr<const Graph> graph;
    QuadratureRule rule;
  };
  explicit Graphon(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  int block_of(double x) const;

  std::shared_ptr<const Impl> impl_;
};

// W-random graph: iid uniform labels, then independent edge coins.
Graph sample_graph(const Graphon& w, int n, std::uint64_t seed);
// Same, returning the latent labels too.
Graph sample_graph(const Graphon& w, int n, std::uint64_t seed, std::vector<double>* labels);

}  // namespace nm
