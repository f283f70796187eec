#include "w1mg/solver_cp.hpp"

#include <chrono>
#include <cmath>

#include "w1mg/prox.hpp"

namespace w1mg {

namespace {

struct CPScratch {
    FluxField grad;      // A* phi
    FluxField dm;        // m_{k+1} - m_k
    ScalarField div_m;   // A m_{k+1}
    ScalarField div_dm;  // A dm
    explicit CPScratch(GridSpec g) : grad(g), dm(g), div_m(g), div_dm(g) {}
};

// One sweep of the iteration, in place.  Returns the fixed-point residual
// between the old and new iterates.
double cp_sweep(FluxField& m, ScalarField& phi, const ScalarField& rho, PNorm p,
                double mu, double tau, CPScratch& s) {
    const int n = m.grid.n;
    const double h2 = m.grid.h * m.grid.h;

    adjoint_into(phi, s.grad);

    // m-update: pointwise shrink over the node vectors of live edges.
    double sum_dm2 = 0.0;
    for (int j = 0; j <= n; ++j) {
        double* mx = &m.x_edges[std::size_t(j) * n];
        double* my = &m.y_edges[std::size_t(j) * (n + 1)];
        const double* gx = &s.grad.x_edges[std::size_t(j) * n];
        const double* gy = &s.grad.y_edges[std::size_t(j) * (n + 1)];
        double* dx = &s.dm.x_edges[std::size_t(j) * n];
        double* dy = &s.dm.y_edges[std::size_t(j) * (n + 1)];
        const bool has_y = j < n;
        for (int i = 0; i <= n; ++i) {
            const bool has_x = i < n;
            Vec2 v{has_x ? mx[i] - mu * gx[i] : 0.0, has_y ? my[i] - mu * gy[i] : 0.0};
            Vec2 u = shrink(v, mu, p);
            if (has_x) {
                double d = u.x - mx[i];
                dx[i] = d;
                mx[i] = u.x;
                sum_dm2 += d * d;
            }
            if (has_y) {
                double d = u.y - my[i];
                dy[i] = d;
                my[i] = u.y;
                sum_dm2 += d * d;
            }
        }
    }

    divergence_into(m, s.div_m);
    divergence_into(s.dm, s.div_dm);

    // phi-update with the over-relaxed flux: A mbar = A m_{k+1} + A dm.
    double sum_dphi2 = 0.0, sum_cross = 0.0;
    for (std::size_t k = 0; k < phi.values.size(); ++k) {
        double d = tau * (s.div_m.values[k] + s.div_dm.values[k] - rho.values[k]);
        phi.values[k] += d;
        sum_dphi2 += d * d;
        sum_cross += d * s.div_dm.values[k];
    }

    return h2 * (sum_dm2 / mu + sum_dphi2 / tau - 2.0 * sum_cross);
}

}  // namespace

double cp_step_size(const GridSpec& grid, StepMode mode) {
    double bound = operator_norm_bound(grid);
    return mode == StepMode::safe ? 1.0 / (2.0 * bound) : 1.0 / bound;
}

CPState cp_init(const GridSpec& grid, StepMode mode, FluxField m0, ScalarField phi0) {
    if (m0.grid != grid || phi0.grid != grid)
        throw std::invalid_argument("cp_init: grid mismatch");
    CPState state;
    state.m_prev = m0;
    state.m = std::move(m0);
    state.phi = std::move(phi0);
    state.mu = state.tau = cp_step_size(grid, mode);
    state.k = 0;
    return state;
}

CPState cp_step(const CPState& state, const SourceField& rho, PNorm p) {
    if (rho.grid() != state.m.grid) throw std::invalid_argument("cp_step: grid mismatch");
    CPState next = state;
    next.m_prev = state.m;
    CPScratch scratch(state.m.grid);
    cp_sweep(next.m, next.phi, rho.rho, p, next.mu, next.tau, scratch);
    next.k = state.k + 1;
    return next;
}

double cp_residual(const CPState& curr, const CPState& prev) {
    FluxField dm = curr.m;
    for (std::size_t k = 0; k < dm.x_edges.size(); ++k) dm.x_edges[k] -= prev.m.x_edges[k];
    for (std::size_t k = 0; k < dm.y_edges.size(); ++k) dm.y_edges[k] -= prev.m.y_edges[k];
    ScalarField dphi = curr.phi;
    for (std::size_t k = 0; k < dphi.values.size(); ++k) dphi.values[k] -= prev.phi.values[k];
    ScalarField a_dm = divergence(dm);
    double nm = norm_L2(dm), np = norm_L2(dphi);
    return nm * nm / curr.mu + np * np / curr.tau - 2.0 * inner_h(dphi, a_dm);
}

SolveReport cp_run(const SourceField& rho, const SolverParams& params, const FluxField* m0,
                   const ScalarField* phi0) {
    const GridSpec grid = rho.grid();
    FluxField m = m0 ? *m0 : FluxField(grid);
    ScalarField phi = phi0 ? *phi0 : ScalarField(grid);
    if (m.grid != grid || phi.grid != grid)
        throw std::invalid_argument("cp_run: grid mismatch");

    const double step = cp_step_size(grid, params.step_mode);
    CPScratch scratch(grid);

    auto t0 = std::chrono::steady_clock::now();
    SolveReport report;
    double fpr = 0.0;
    long k = 0;
    while (k < params.max_iters) {
        fpr = cp_sweep(m, phi, rho.rho, params.p, step, step, scratch);
        ++k;
        report.residual_history.push_back(fpr);
        if (fpr < params.tolerance) {
            report.converged = true;
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();

    report.distance = primal_value(m, params.p);
    report.dual_value = dual_value(phi, rho);
    report.iterations = k;
    report.total_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.levels.push_back({grid.h, params.tolerance, k, fpr, report.total_seconds});
    report.flux = std::move(m);
    report.potential = std::move(phi);
    return report;
}

}  // namespace w1mg
