#pragma once
// Dense complex linear algebra substrate. All verdict-producing routines use
// relative tolerances scaled by (1 + ||M||_inf) where ||.||_inf is the
// max-abs-entry norm, so decisions stay meaningful across widely different
// moment-matrix scales.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <optional>
#include <vector>

#include "opclass/errors.hpp"

namespace opclass {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kHermitianTol = 1e-8;

// Max-abs-entry norm; 0 for empty matrices.
inline double entry_inf_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

inline void require_square(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw NonSquareError(std::string(who) + ": matrix is " + std::to_string(m.rows()) +
                             "x" + std::to_string(m.cols()));
}

inline double hermitian_defect(const CMatrix& m) {
    return entry_inf_norm(m - m.adjoint());
}

inline CMatrix hermitian_part(const CMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

// Ascending eigenvalues of a Hermitian matrix. The input is symmetrized
// before the solve; inputs that are not Hermitian within the relative
// tolerance are rejected.
inline std::vector<double> hermitian_eigenvalues(const CMatrix& m,
                                                 double herm_tol = kHermitianTol) {
    require_square(m, "hermitian_eigenvalues");
    const double defect = hermitian_defect(m);
    if (defect > herm_tol * (1.0 + entry_inf_norm(m)))
        throw NotHermitianError("hermitian_eigenvalues: ||M - M*|| = " + std::to_string(defect),
                                defect);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m),
                                                  Eigen::EigenvaluesOnly);
    const auto& vals = solver.eigenvalues();
    return std::vector<double>(vals.data(), vals.data() + vals.size());
}

struct PsdVerdict {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
    double tolerance_used = 0.0;  // absolute threshold: tol * (1 + ||M||_inf)
    std::optional<CVector> witness_vector;  // unit eigenvector of the min eigenvalue when not PSD
};

// PSD decision with relative tolerance: PSD iff min eigenvalue >= -tol*(1+||M||_inf).
// The input is symmetrized first so verdicts are deterministic.
inline PsdVerdict is_psd(const CMatrix& m, double tol = kDefaultTol) {
    require_square(m, "is_psd");
    PsdVerdict v;
    if (m.rows() == 0) {
        v.is_psd = true;
        v.tolerance_used = tol;
        return v;
    }
    const CMatrix h = hermitian_part(m);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    v.min_eigenvalue = solver.eigenvalues()(0);
    v.tolerance_used = tol * (1.0 + entry_inf_norm(m));
    v.is_psd = v.min_eigenvalue >= -v.tolerance_used;
    if (!v.is_psd) v.witness_vector = solver.eigenvectors().col(0);
    return v;
}

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw DimensionMismatchError("commutator: operands must be square of equal size");
    return a * b - b * a;
}

// T*T - TT*.
inline CMatrix self_commutator(const CMatrix& t) {
    require_square(t, "self_commutator");
    return t.adjoint() * t - t * t.adjoint();
}

// Orthonormal basis for the span of `vectors` (columns of the result).
// Modified Gram-Schmidt with one reorthogonalization pass; vectors whose
// residual after projection is <= tol*(1+||v||) are dropped.
inline CMatrix orthonormal_span(const std::vector<CVector>& vectors, double tol = 1e-12) {
    if (vectors.empty()) throw EmptyInputError("orthonormal_span: no input vectors");
    const Eigen::Index dim = vectors.front().size();
    std::vector<CVector> basis;
    for (const auto& v : vectors) {
        if (v.size() != dim)
            throw DimensionMismatchError("orthonormal_span: inconsistent vector dimensions");
        CVector w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
        if (w.norm() > tol * (1.0 + v.norm())) basis.push_back(w.normalized());
    }
    CMatrix q(dim, static_cast<Eigen::Index>(basis.size()));
    for (Eigen::Index j = 0; j < q.cols(); ++j) q.col(j) = basis[static_cast<std::size_t>(j)];
    return q;
}

// Repeated multiplication; dimensions here are small enough that
// scaling-and-squaring refinements are unnecessary.
inline CMatrix matrix_power(const CMatrix& t, int n) {
    require_square(t, "matrix_power");
    if (n < 0) throw Error("matrix_power: negative exponent");
    CMatrix acc = CMatrix::Identity(t.rows(), t.cols());
    for (int i = 0; i < n; ++i) acc = acc * t;
    return acc;
}

// Largest singular value.
inline double operator_norm(const CMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

// Eigenvalues of a general square matrix, sorted by (re, im) so output is
// deterministic. Non-normal eigenproblems are ill-conditioned; callers in
// the extension machinery report defects instead of hard-failing on these.
inline std::vector<Complex> spectrum(const CMatrix& m) {
    require_square(m, "spectrum");
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
    std::vector<Complex> eigs(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(eigs.begin(), eigs.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eigs;
}

}  // namespace opclass
