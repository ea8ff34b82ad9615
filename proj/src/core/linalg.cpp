#include "linalg.hpp"

#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "error.hpp"

namespace nhls {

EigenDecomposition eig_general(const Eigen::MatrixXcd& a, bool want_vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.rows() != a.cols()) fail(ErrorCode::InvalidArgument, "eig_general: matrix must be square");
  Eigen::MatrixXcd work = a;
  EigenDecomposition out;
  out.values.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, work.data(), n,
                                  out.values.data(), nullptr, 1, want_vectors ? out.vectors.data() : nullptr,
                                  want_vectors ? n : 1);
  if (info != 0) fail(ErrorCode::NumericalFailure, "zgeev failed with info=" + std::to_string(info));
  return out;
}

EigenDecomposition eig_hermitian(const Eigen::MatrixXcd& a, bool want_vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (a.rows() != a.cols()) fail(ErrorCode::InvalidArgument, "eig_hermitian: matrix must be square");
  Eigen::MatrixXcd work = a;
  Eigen::VectorXd w(n);
  lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n, work.data(), n, w.data());
  if (info != 0) fail(ErrorCode::NumericalFailure, "zheevd failed with info=" + std::to_string(info));
  EigenDecomposition out;
  out.values = w.cast<std::complex<double>>();
  if (want_vectors) out.vectors = std::move(work);
  return out;
}

double condition_number_1(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& a_inv) {
  auto norm1 = [](const Eigen::MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); };
  return norm1(a) * norm1(a_inv);
}

}  // namespace nhls
