#include "hjbmp/symmat.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace hjbmp {

namespace {

// lambda_min of a 2x2 symmetric matrix [[a, b], [b, c]].
double lambda_min_2x2(double a, double b, double c) {
  const double mean = 0.5 * (a + c);
  const double rad = std::hypot(0.5 * (a - c), b);
  return mean - rad;
}

double lambda_max_2x2(double a, double b, double c) {
  const double mean = 0.5 * (a + c);
  const double rad = std::hypot(0.5 * (a - c), b);
  return mean + rad;
}

std::pair<double, double> eigen_range(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 1) return {m(0, 0), m(0, 0)};
  if (n == 2) {
    return {lambda_min_2x2(m(0, 0), m(0, 1), m(1, 1)),
            lambda_max_2x2(m(0, 0), m(0, 1), m(1, 1))};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  if (n == 3) {
    es.computeDirect(m, Eigen::EigenvaluesOnly);
  } else {
    es.compute(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw NumericalError("symmetric eigenvalue iteration did not converge");
    }
  }
  return {es.eigenvalues()(0), es.eigenvalues()(n - 1)};
}

void check_same_dim(const SymMatrix& a, const SymMatrix& b,
                    const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a.dim() << " vs " << b.dim()
       << ")";
    throw std::invalid_argument(os.str());
  }
}

void require_pd(const SymMatrix& p, const char* what) {
  if (!is_positive_definite(p)) {
    std::ostringstream os;
    os << what << ": matrix is not positive definite (lambda_min = "
       << lambda_min(p) << ")";
    throw std::domain_error(os.str());
  }
}

}  // namespace

SymMatrix::SymMatrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("SymMatrix: matrix must be square, nonempty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("SymMatrix: non-finite entry");
  }
  m_ = 0.5 * (m + m.transpose()).eval();
}

SymMatrix SymMatrix::Identity(int dim) {
  return SymMatrix(Matrix::Identity(dim, dim));
}

SymMatrix SymMatrix::Zero(int dim) { return SymMatrix(Matrix::Zero(dim, dim)); }

SymMatrix SymMatrix::Diagonal(const Vector& diag) {
  return SymMatrix(Matrix(diag.asDiagonal()));
}

EigenDecomposition eigen_sym(const SymMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.mat());
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigen_sym: iteration did not converge for a " << m.dim() << "x"
       << m.dim() << " matrix";
    throw NumericalError(os.str());
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

double lambda_min(const SymMatrix& m) { return eigen_range(m.mat()).first; }

double lambda_max(const SymMatrix& m) { return eigen_range(m.mat()).second; }

double op_norm(const SymMatrix& m) {
  auto [lo, hi] = eigen_range(m.mat());
  return std::max(std::abs(lo), std::abs(hi));
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
  check_same_dim(a, b, "loewner_leq");
  if (tol < 0) throw std::invalid_argument("loewner_leq: negative tolerance");
  return eigen_range(b.mat() - a.mat()).first >= -tol;
}

bool loewner_leq(const SymMatrix& a, const SymMatrix& b) {
  check_same_dim(a, b, "loewner_leq");
  Matrix d = b.mat() - a.mat();
  auto [lo, hi] = eigen_range(d);
  const double scale = std::max(std::abs(lo), std::abs(hi));
  return lo >= -1e-10 * scale;
}

bool is_positive_definite(const SymMatrix& p) {
  auto [lo, hi] = eigen_range(p.mat());
  const double norm = std::max(std::abs(lo), std::abs(hi));
  return lo > kPdThreshold * (1.0 + norm);
}

double dominance_factor(const SymMatrix& p1, const SymMatrix& p2) {
  check_same_dim(p1, p2, "dominance_factor");
  require_pd(p2, "dominance_factor");
  Eigen::LLT<Matrix> llt(p2.mat());
  if (llt.info() != Eigen::Success) {
    throw NumericalError("dominance_factor: Cholesky factorization failed");
  }
  const Matrix& l = llt.matrixL();
  // L^{-1} P1 L^{-T}; same spectrum as the pencil (P1, P2).
  Matrix w = l.triangularView<Eigen::Lower>().solve(p1.mat());
  Matrix ws = l.triangularView<Eigen::Lower>().solve(Matrix(w.transpose()));
  return eigen_range(0.5 * (ws + ws.transpose())).second;
}

double thompson_distance(const SymMatrix& p1, const SymMatrix& p2) {
  check_same_dim(p1, p2, "thompson_distance");
  require_pd(p1, "thompson_distance");
  require_pd(p2, "thompson_distance");
  const double m12 = dominance_factor(p1, p2);
  const double m21 = dominance_factor(p2, p1);
  return std::max(0.0, std::log(std::max(m12, m21)));
}

bool dominated_within(const SymMatrix& p, const SymMatrix& q, double theta,
                      double tol) {
  check_same_dim(p, q, "dominated_within");
  const Matrix& pm = p.mat();
  const Matrix& qm = q.mat();
  const int n = p.dim();
  if (n == 1) return theta * qm(0, 0) - pm(0, 0) >= -tol;
  if (n == 2) {
    const double a = theta * qm(0, 0) - pm(0, 0);
    const double b = theta * qm(0, 1) - pm(0, 1);
    const double c = theta * qm(1, 1) - pm(1, 1);
    return lambda_min_2x2(a, b, c) >= -tol;
  }
  return eigen_range(theta * qm - pm).first >= -tol;
}

OrderInterval::OrderInterval(SymMatrix lo, SymMatrix hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!loewner_leq(lo_, hi_)) {
    throw std::invalid_argument(
        "OrderInterval: lower bound is not below upper bound");
  }
}

bool OrderInterval::contains(const SymMatrix& p, double tol) const {
  return loewner_leq(lo_, p, tol) && loewner_leq(p, hi_, tol);
}

}  // namespace hjbmp
