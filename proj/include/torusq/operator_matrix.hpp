// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "torusq/floquet.hpp"

namespace torusq {

// Basis frame of a k x k operator matrix.
//   Epsilon     : the distributional basis (epsilon_l), orthonormal by fiat.
//   E           : the theta basis (e_l), orthogonal but not normalized.
//   ENormalized : the unit-norm theta basis (e_l / ||e_l||); spectra and
//                 operator norms are always taken in this frame (or in
//                 Epsilon, which is isometric to it).
enum class BasisFrame { Epsilon, E, ENormalized };

// k x k complex matrix tagged with its basis frame.  Column index = source
// basis label l, row index = target label l'.
struct OperatorMatrix {
    BasisFrame basis = BasisFrame::Epsilon;
    int k = 0;
    Eigen::MatrixXcd entries;

    static OperatorMatrix zero(BasisFrame basis, int k) {
        return {basis, k, Eigen::MatrixXcd::Zero(k, k)};
    }
    static OperatorMatrix identity(BasisFrame basis, int k) {
        return {basis, k, Eigen::MatrixXcd::Identity(k, k)};
    }
};

// Diagonal rescaling between the E frame and the unit-norm frame, done with
// log-space norm ratios so large levels do not overflow.
OperatorMatrix to_normalized_frame(const OperatorMatrix& m, const FloquetTorus& torus);
OperatorMatrix from_normalized_frame(const OperatorMatrix& m, const FloquetTorus& torus);

// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& a);

// Sorted eigenvalues of a (numerically) Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a);

// Hausdorff distance between two finite point sets on the real line.
double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace torusq
