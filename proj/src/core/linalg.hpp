#pragma once

#include <Eigen/Dense>

namespace nhls {

struct EigenDecomposition {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // right eigenvectors as columns, unit 2-norm; empty if not requested
};

// General complex matrix (zgeev).
EigenDecomposition eig_general(const Eigen::MatrixXcd& a, bool want_vectors);
// Hermitian matrix (zheevd); values come back ascending with zero imaginary part.
EigenDecomposition eig_hermitian(const Eigen::MatrixXcd& a, bool want_vectors);

// 1-norm condition number from a matrix and its inverse.
double condition_number_1(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& a_inv);

}  // namespace nhls
