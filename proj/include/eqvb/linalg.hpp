#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace eqvb {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Max-norm of a matrix (largest entry modulus).
inline double max_abs(const Mat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

/// Max-norm residual of A A* - I.
inline double unitary_residual(const Mat& a) {
  return max_abs(a * a.adjoint() - Mat::Identity(a.rows(), a.rows()));
}

Mat kron(const Mat& a, const Mat& b);
Mat direct_sum(const std::vector<Mat>& blocks);

double smallest_singular_value(const Mat& a);

/// Condition number from the SVD; infinity if singular to machine precision.
double condition_number(const Mat& a);

/// Unitary factor of the polar decomposition a = u p (p positive semidefinite).
Mat unitary_polar_factor(const Mat& a);

/// Rank counted as the number of singular values above tol * max(1, s_max).
int rank_within(const Mat& a, double tol);

/// Number of eigenvalues of a Hermitian matrix within tol of 1.
int near_one_eigenvalue_count(const Mat& hermitian, double tol);

/// Orthonormal basis of the eigenspace of a Hermitian matrix for eigenvalues near 1.
Mat near_one_eigenspace(const Mat& hermitian, double tol);

/// Gram-Schmidt with the Frobenius inner product; drops vectors below tol.
std::vector<Mat> orthonormalize_matrices(const std::vector<Mat>& mats, double tol);

}  // namespace eqvb
