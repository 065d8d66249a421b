#include "nalg/linalg.hpp"

#include <Eigen/Dense>

namespace nalg {

namespace {
Eigen::MatrixXd to_eigen(const Matrix<double>& M) {
  Eigen::MatrixXd E(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) E(i, j) = M(i, j);
  return E;
}
}  // namespace

SymEigen symmetric_eigen(const Matrix<double>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("symmetric_eigen: not square");
  if (!is_symmetric(M, 1e-9 * std::max(1.0, max_abs(M)))) throw std::invalid_argument("symmetric_eigen: asymmetric input");
  Eigen::MatrixXd E = to_eigen(M);
  E = 0.5 * (E + E.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(E);
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric_eigen: no convergence");
  SymEigen out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + M.rows());
  out.vectors = Matrix<double>(M.rows(), M.cols());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out.vectors(i, j) = es.eigenvectors()(i, j);
  return out;
}

RealEigen general_real_eigenvalues(const Matrix<double>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("general_real_eigenvalues: not square");
  RealEigen out;
  if (M.rows() == 0) return out;
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(M), false);
  out.converged = es.info() == Eigen::Success;
  const auto& ev = es.eigenvalues();
  double scale = std::max(1.0, max_abs(M));
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    out.re.push_back(ev[i].real());
    out.im.push_back(ev[i].imag());
    if (std::abs(ev[i].imag()) > 1e-9 * scale) out.has_complex = true;
  }
  return out;
}

Inertia eigen_inertia(const Matrix<double>& M, double rank_tol) {
  Inertia out;
  for (double l : symmetric_eigen(M).values) {
    if (std::abs(l) < rank_tol)
      ++out.z;
    else if (l > 0)
      ++out.p;
    else
      ++out.m;
  }
  return out;
}

}  // namespace nalg
