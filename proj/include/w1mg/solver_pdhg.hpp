#pragma once

#include "w1mg/poisson.hpp"
#include "w1mg/report.hpp"

namespace w1mg {

/// Iterate of the prox-PDHG solver: flux m, dual flux varphi (the gradient
/// of the Kantorovich potential), and its over-relaxed companion.
struct PDHGState {
    FluxField m;
    FluxField dual_flux;      // varphi_k
    FluxField dual_flux_bar;  // 2*varphi_k - varphi_{k-1}; equals varphi at k=0
    double mu = 0.0;
    double tau = 0.0;
    long k = 0;
};

/// Step size: 1/2 in safe mode (guaranteed), 1 in practical mode.
double pdhg_step_size(StepMode mode);

PDHGState pdhg_init(const GridSpec& grid, StepMode mode, FluxField m0, FluxField dual0);

/// One prox-PDHG sweep:
///   m_{k+1}        = Proj_{A m = rho} (m_k - mu * varphi_bar_k)
///   varphi_{k+1}x) = Proj_{||.||_q <= 1} (varphi_k(x) + tau * m_{k+1}(x))
///   varphi_bar     = 2*varphi_{k+1} - varphi_k
PDHGState pdhg_step(const PDHGState& state, const SourceField& rho, PNorm p,
                    const NeumannPoissonSolver& solver);
PDHGState pdhg_step(const PDHGState& state, const SourceField& rho, PNorm p);

/// Fixed-point residual between consecutive iterates:
///   (1/mu)||dm||_L2^2 + (1/tau)||dvarphi||_L2^2 + 2 <dvarphi, dm>_h.
double pdhg_residual(const PDHGState& curr, const PDHGState& prev);

/// Runs prox-PDHG until the residual drops below params.tolerance or
/// max_iters is reached.  The report's potential comes from
/// recover_potential applied to the final dual flux.
SolveReport pdhg_run(const SourceField& rho, const SolverParams& params,
                     const FluxField* m0 = nullptr, const FluxField* dual0 = nullptr);

/// Kantorovich potential from a dual flux: the zero-mean solution of
/// A_h A_h^* phi = A_h varphi.  When varphi = A^* psi exactly, this
/// recovers psi - mean(psi).
ScalarField recover_potential(const FluxField& dual_flux);
ScalarField recover_potential(const FluxField& dual_flux, const NeumannPoissonSolver& solver);

}  // namespace w1mg
