#include "eqvb/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <limits>

namespace eqvb {

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat direct_sum(const std::vector<Mat>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const Mat& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat out = Mat::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const Mat& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

double smallest_singular_value(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double condition_number(const Mat& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

Mat unitary_polar_factor(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

int rank_within(const Mat& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  double cut = tol * std::max(1.0, s(0));
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

int near_one_eigenvalue_count(const Mat& hermitian, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
  int n = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i) - 1.0) < tol) ++n;
  return n;
}

Mat near_one_eigenspace(const Mat& hermitian, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i) - 1.0) < tol) keep.push_back(i);
  Mat out(hermitian.rows(), static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) out.col(j) = es.eigenvectors().col(keep[j]);
  return out;
}

std::vector<Mat> orthonormalize_matrices(const std::vector<Mat>& mats, double tol) {
  std::vector<Mat> basis;
  for (Mat m : mats) {
    for (const Mat& b : basis) {
      Cplx coeff = (b.adjoint() * m).trace();
      m -= coeff * b;
    }
    double norm = m.norm();
    if (norm > tol) basis.push_back(m / norm);
  }
  return basis;
}

}  // namespace eqvb
