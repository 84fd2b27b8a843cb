#include <algorithm>
#include <cstdint>

#include "netmoments/error.hpp"
#include "netmoments/kernels.hpp"

namespace nm::kernels {

Eigen::VectorXd quadratic_forms(const Eigen::MatrixXd& m, const Eigen::MatrixXd& z) {
  if (m.rows() != m.cols() || m.rows() != z.rows()) {
    throw DomainError("quadratic_forms: dimension mismatch");
  }
  const Eigen::Index cols = z.cols();
  Eigen::VectorXd out(cols);
  // Blocks of columns go through one GEMM each; blocks are independent.
  constexpr Eigen::Index kBlock = 64;
  const auto blocks = static_cast<std::int64_t>((cols + kBlock - 1) / kBlock);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(b) * kBlock;
    const Eigen::Index w = std::min(kBlock, cols - c0);
    const auto zb = z.middleCols(c0, w);
    const Eigen::MatrixXd mz = m * zb;
    out.segment(c0, w) = zb.cwiseProduct(mz).colwise().sum().transpose();
  }
  return out;
}

}  // namespace nm::kernels
