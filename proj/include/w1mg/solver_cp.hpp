#pragma once

#include "w1mg/report.hpp"

namespace w1mg {

/// Iterate of the primal-dual flux solver: flux m, potential phi, and the
/// previous flux (needed by the over-relaxed divergence update and by the
/// fixed-point residual).
struct CPState {
    FluxField m;
    ScalarField phi;
    FluxField m_prev;
    double mu = 0.0;
    double tau = 0.0;
    long k = 0;
};

/// Step sizes for a grid: 1/(2*||A||) in safe mode, 1/||A|| in practical
/// mode, with ||A|| the Gershgorin bound.
double cp_step_size(const GridSpec& grid, StepMode mode);

CPState cp_init(const GridSpec& grid, StepMode mode, FluxField m0, ScalarField phi0);

/// One primal-dual sweep:
///   m_{k+1}(x)  = shrink(m_k(x) - mu * (A* phi_k)(x), mu, p)
///   mbar        = 2 m_{k+1} - m_k
///   phi_{k+1}   = phi_k + tau * (A mbar - rho)
CPState cp_step(const CPState& state, const SourceField& rho, PNorm p);

/// Fixed-point residual between consecutive iterates:
///   (1/mu)||dm||_L2^2 + (1/tau)||dphi||_L2^2 - 2 <dphi, A dm>_h.
double cp_residual(const CPState& curr, const CPState& prev);

/// Runs the iteration until the residual drops below params.tolerance or
/// max_iters is reached (the report is returned either way, with
/// converged=false in the latter case).  Initial fields default to zero.
SolveReport cp_run(const SourceField& rho, const SolverParams& params,
                   const FluxField* m0 = nullptr, const ScalarField* phi0 = nullptr);

}  // namespace w1mg
