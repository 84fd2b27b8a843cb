#include "netmoments/fixtures.hpp"

#include <charconv>
#include <string>

#include "netmoments/error.hpp"
#include "netmoments/io.hpp"

namespace nm {
namespace {

double parse_probability(std::string_view s, std::string_view spec) {
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  if (ec != std::errc() || ptr != s.data() + s.size() || !(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("graphon parameter must be a probability in '" + std::string(spec) + "'");
  }
  return p;
}

}  // namespace

Graphon constant_graphon(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("constant graphon needs p in [0, 1]");
  return Graphon::block({1.0}, Eigen::MatrixXd::Constant(1, 1, p), "const:" + std::to_string(p));
}

Graphon product_graphon() {
  return Graphon::expression("product", [](double x, double y) { return x * y; });
}

Graphon affine_graphon() {
  return Graphon::expression("affine", [](double x, double y) { return 0.5 * (x + y); });
}

Graphon bipartite_graphon(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bipartite graphon needs p in [0, 1]");
  Eigen::MatrixXd v(2, 2);
  v << 0.0, p, p, 0.0;
  return Graphon::block({0.5, 0.5}, v, "bipartite:" + std::to_string(p));
}

Graphon three_block_graphon() {
  Eigen::MatrixXd v(3, 3);
  v << 0, 0, 1,
       0, 1, 0,
       1, 0, 0;
  const double third = 1.0 / 3.0;
  return Graphon::block({third, third, 1.0 - 2.0 * third}, v, "three-block");
}

Graphon six_block_graphon() {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(6, 6);
  for (int t = 0; t < 2; ++t)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) v(3 * t + i, 3 * t + j) = 1.0;
  v(0, 3) = v(3, 0) = 0.5;
  const double s = 1.0 / 6.0;
  return Graphon::block({s, s, s, s, s, 1.0 - 5.0 * s}, v, "six-block");
}

bool is_builtin_graphon_name(std::string_view spec) {
  return spec.rfind("const:", 0) == 0 || spec.rfind("bipartite:", 0) == 0 || spec == "product" ||
         spec == "wminus" || spec == "affine" || spec == "paper-w1" || spec == "wplus" ||
         spec == "three-block" || spec == "paper-w2" || spec == "six-block" ||
         spec == "paper-w3";
}

Graphon builtin_graphon(std::string_view spec) {
  if (spec.rfind("const:", 0) == 0) return constant_graphon(parse_probability(spec.substr(6), spec));
  if (spec.rfind("bipartite:", 0) == 0) {
    return bipartite_graphon(parse_probability(spec.substr(10), spec));
  }
  if (spec == "product" || spec == "wminus") return product_graphon();
  if (spec == "affine" || spec == "paper-w1") return affine_graphon();
  if (spec == "wplus") return bipartite_graphon(0.5);
  if (spec == "three-block" || spec == "paper-w2") return three_block_graphon();
  if (spec == "six-block" || spec == "paper-w3") return six_block_graphon();
  return load_block_graphon(std::string(spec));
}

}  // namespace nm
