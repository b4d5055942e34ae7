#pragma once

#include <Eigen/Dense>

#include "semeq/matrix.hpp"
#include "semeq/rng.hpp"

namespace semeq {

// x minimizing ||a*x - b||^2. Solves the normal equations with an LDLT
// factorization while the Gram matrix is well conditioned (condition
// estimate <= 1e12); otherwise falls back to a rank-revealing complete
// orthogonal decomposition, which also yields the minimum-norm solution
// for rank-deficient systems.
inline Vec least_squares_solve(const Matrix& a, const Vec& b) {
    if (a.rows() == 0 || a.cols() == 0)
        throw InvalidArgument("least_squares_solve: empty matrix");
    if (a.rows() != b.size())
        throw InvalidArgument("least_squares_solve: a has " + std::to_string(a.rows()) +
                              " rows but b has length " + std::to_string(b.size()));

    const auto A = as_eigen(a);
    const auto bv = as_eigen(b);

    const Eigen::MatrixXd gram = A.transpose() * A;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive() && ldlt.rcond() > 1e-12) {
        const Eigen::VectorXd x = ldlt.solve(A.transpose() * bv);
        return Vec(x.data(), x.data() + x.size());
    }

    const Eigen::VectorXd x = A.completeOrthogonalDecomposition().solve(bv);
    return Vec(x.data(), x.data() + x.size());
}

// Spectral condition number sigma_max / sigma_min. Infinite when singular.
inline double condition_estimate(const Matrix& m) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(as_eigen(m));
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

inline double numerical_rank(const Matrix& m) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(as_eigen(m));
    return static_cast<double>(qr.rank());
}

// Q from the QR factorization of g, with the sign convention diag(R) > 0
// so the result is unique for a given input.
inline Matrix orthonormalize(const Matrix& g) {
    if (g.rows() != g.cols() || g.rows() == 0)
        throw InvalidArgument("orthonormalize: square nonempty matrix required");
    const Eigen::MatrixXd gm = as_eigen(g);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(gm);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
        if (r(i, i) < 0.0) q.col(i) = -q.col(i);
    }
    return from_eigen(q);
}

// Haar-ish random rotation: orthonormalized seeded Gaussian matrix.
inline Matrix random_orthogonal(std::size_t n, Rng& rng) {
    Matrix g(n, n);
    for (double& x : g.data()) x = rng.gaussian();
    return orthonormalize(g);
}

}  // namespace semeq
