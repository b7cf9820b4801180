#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "hjbmp/errors.hpp"

namespace hjbmp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Relative cutoff below which a matrix is treated as not positive definite.
inline constexpr double kPdThreshold = 1e-12;

// Dense symmetric matrix. The constructor symmetrizes its argument once
// ((M + M')/2) and rejects non-finite entries, so downstream code can rely on
// exact entrywise symmetry. Immutable after construction.
class SymMatrix {
 public:
  explicit SymMatrix(Matrix m);

  static SymMatrix Identity(int dim);
  static SymMatrix Zero(int dim);
  // Diagonal matrix from the given entries.
  static SymMatrix Diagonal(const Vector& diag);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double trace() const { return m_.trace(); }

  friend SymMatrix operator*(double s, const SymMatrix& m) {
    return SymMatrix(s * m.m_);
  }
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(a.m_ + b.m_);
  }
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(a.m_ - b.m_);
  }

  bool operator==(const SymMatrix& o) const { return m_ == o.m_; }

 private:
  Matrix m_;
};

struct EigenDecomposition {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // orthonormal columns, same order
};

// Full symmetric eigendecomposition M = Q diag(w) Q'.
EigenDecomposition eigen_sym(const SymMatrix& m);

// Extremal eigenvalues and the operator (spectral) norm. Closed-form for
// dim <= 3, iterative otherwise.
double lambda_min(const SymMatrix& m);
double lambda_max(const SymMatrix& m);
double op_norm(const SymMatrix& m);

// Largest singular value of a general rectangular matrix.
double spectral_norm(const Matrix& m);

// A <= B in the Loewner order, i.e. lambda_min(B - A) >= -tol.
bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol);

// Same with the default tolerance 1e-10 scaled by ||B - A||.
bool loewner_leq(const SymMatrix& a, const SymMatrix& b);

// lambda_min(P) > kPdThreshold * (1 + ||P||). Matrices below the cutoff are
// rejected by the metric operations, never regularized.
bool is_positive_definite(const SymMatrix& p);

// Smallest t with P1 <= t*P2, i.e. the largest eigenvalue of the pencil
// (P1, P2), computed through a Cholesky factor of P2 and a standard
// symmetric eigenproblem. Requires P2 positive definite.
double dominance_factor(const SymMatrix& p1, const SymMatrix& p2);

// Part metric on the positive-definite cone:
//   d(P1, P2) = log max{ t(P1/P2), t(P2/P1) }
// where t(A/B) is the dominance factor. Requires both arguments PD.
double thompson_distance(const SymMatrix& p1, const SymMatrix& p2);

// Fast combined test lambda_min(theta * Q - P) >= -tol without forming
// temporaries for small dimensions; the pruning hot path.
bool dominated_within(const SymMatrix& p, const SymMatrix& q, double theta,
                      double tol);

// Order interval [lo, hi]; construction checks lo <= hi.
class OrderInterval {
 public:
  OrderInterval(SymMatrix lo, SymMatrix hi);

  const SymMatrix& lo() const { return lo_; }
  const SymMatrix& hi() const { return hi_; }

  bool contains(const SymMatrix& p, double tol) const;

 private:
  SymMatrix lo_;
  SymMatrix hi_;
};

}  // namespace hjbmp
