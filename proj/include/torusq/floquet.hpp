// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace torusq {

// Quantization context for one level k: Floquet angles, theta-series
// truncation and quadrature resolution.  u = e^{ic} and v = e^{id} are the
// Floquet indices; k plays the role of the inverse semiclassical parameter.
struct FloquetTorus {
    int k = 1;
    double c = 0.0;  // in [0, 2pi)
    double d = 0.0;  // in [0, 2pi)
    int J = 8;       // theta truncation half-width
    int np = 32;     // trapezoid nodes in p over [0, 2pi]
    int nq = 32;     // Gauss-Legendre nodes in q over [0, 1]

    // Builds a context with validated invariants (k >= 1, J >= 1,
    // np, nq >= 4k, angles reduced mod 2pi).  Negative overrides select the
    // defaults, which scale with k and with the symbol truncation bounds.
    static FloquetTorus make(int k, double c = 0.0, double d = 0.0, int J = -1,
                             int np = -1, int nq = -1, int m_max = 16, int n_max = 16);

    // Context with doubled quadrature resolution (used for refinement checks).
    FloquetTorus refined() const;
};

int default_theta_width(int k);

}  // namespace torusq
