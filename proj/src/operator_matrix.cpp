// SPDX-License-Identifier: Apache-2.0

#include "torusq/operator_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "torusq/errors.hpp"
#include "torusq/theta_basis.hpp"

namespace torusq {

namespace {
OperatorMatrix rescale_rows_cols(const OperatorMatrix& m, const FloquetTorus& torus,
                                 double direction, BasisFrame out) {
    OperatorMatrix r{out, m.k, Eigen::MatrixXcd(m.k, m.k)};
    std::vector<double> half_log(m.k);
    for (int l = 0; l < m.k; ++l) half_log[l] = 0.5 * log_basis_norm_sq(torus, l);
    for (int col = 0; col < m.k; ++col) {
        for (int row = 0; row < m.k; ++row) {
            r.entries(row, col) =
                m.entries(row, col) * std::exp(direction * (half_log[row] - half_log[col]));
        }
    }
    return r;
}
}  // namespace

OperatorMatrix to_normalized_frame(const OperatorMatrix& m, const FloquetTorus& torus) {
    if (m.basis != BasisFrame::E) throw FrameError("to_normalized_frame: expected E frame");
    if (m.k != torus.k) throw PreconditionError("to_normalized_frame: level mismatch");
    return rescale_rows_cols(m, torus, +1.0, BasisFrame::ENormalized);
}

OperatorMatrix from_normalized_frame(const OperatorMatrix& m, const FloquetTorus& torus) {
    if (m.basis != BasisFrame::ENormalized) {
        throw FrameError("from_normalized_frame: expected ENormalized frame");
    }
    if (m.k != torus.k) throw PreconditionError("from_normalized_frame: level mismatch");
    return rescale_rows_cols(m, torus, -1.0, BasisFrame::E);
}

double spectral_norm(const Eigen::MatrixXcd& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    if (es.info() != Eigen::Success) throw InputError("hermitian_eigenvalues: solver failed");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
    std::sort(ev.begin(), ev.end());
    return ev;
}

double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b) {
    auto one_sided = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0.0;
        for (double x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (double y : to) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    if (a.empty() || b.empty()) return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace torusq
