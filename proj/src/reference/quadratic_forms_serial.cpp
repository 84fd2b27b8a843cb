#include "netmoments/error.hpp"
#include "netmoments/kernels.hpp"

namespace nm::reference {

Eigen::VectorXd quadratic_forms(const Eigen::MatrixXd& m, const Eigen::MatrixXd& z) {
  if (m.rows() != m.cols() || m.rows() != z.rows()) {
    throw DomainError("quadratic_forms: dimension mismatch");
  }
  const Eigen::Index n = m.rows();
  Eigen::VectorXd out(z.cols());
  for (Eigen::Index b = 0; b < z.cols(); ++b) {
    double s = 0.0;
    for (Eigen::Index u = 0; u < n; ++u)
      for (Eigen::Index v = 0; v < n; ++v) s += m(u, v) * z(u, b) * z(v, b);
    out(b) = s;
  }
  return out;
}

}  // namespace nm::reference
