#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "vacuum/error.hpp"

namespace vacuum {

/// Gauss-Hermite rule for weight exp(-x^2) on the real line.
template <typename Scalar>
struct GaussHermiteRule
{
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Vector nodes;
    Vector weights;

    Eigen::Index size() const { return nodes.size(); }

    /// sum_i w_i f(x_i)
    template <typename F>
    Scalar integrate(F&& f) const
    {
        Scalar sum(0);
        for (Eigen::Index i = 0; i < nodes.size(); ++i)
            sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
/// Jacobi matrix of the Hermite recurrence, off-diagonal sqrt(k/2); weights
/// are sqrt(pi) times the squared first eigenvector components. Exact for
/// polynomials of degree < 2n.
template <typename Scalar>
GaussHermiteRule<Scalar> gauss_hermite_rule(int n)
{
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (n < 1)
        throw NumericError("Gauss-Hermite rule needs at least one node");
    Matrix jacobi = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        Scalar b = std::sqrt(Scalar(k) / Scalar(2));
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(jacobi);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("Gauss-Hermite eigenvalue problem did not converge");

    GaussHermiteRule<Scalar> rule;
    rule.nodes = solver.eigenvalues();
    rule.weights = std::sqrt(std::numbers::pi_v<Scalar>) * solver.eigenvectors().row(0).transpose().cwiseAbs2();
    return rule;
}

} // namespace vacuum
