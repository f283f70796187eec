#include "w1mg/poisson.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace w1mg {

namespace {
// FFTW plan creation is not thread-safe; execution is.
std::mutex g_fftw_plan_mutex;
}  // namespace

struct NeumannPoissonSolver::Impl {
    int m = 0;                   // nodes per side
    std::vector<double> lambda;  // 1D eigenvalues of the cosine modes
    double* buf_a = nullptr;
    double* buf_b = nullptr;
    fftw_plan forward = nullptr;   // REDFT10 (DCT-II), buf_a -> buf_b
    fftw_plan backward = nullptr;  // REDFT01 (DCT-III), buf_b -> buf_a
    mutable std::mutex run_mutex;

    explicit Impl(const GridSpec& grid) : m(grid.nodes_per_side()) {
        lambda.resize(m);
        const double inv_h2 = 1.0 / (grid.h * grid.h);
        for (int k = 0; k < m; ++k)
            lambda[k] = (2.0 - 2.0 * std::cos(M_PI * k / m)) * inv_h2;

        buf_a = fftw_alloc_real(std::size_t(m) * m);
        buf_b = fftw_alloc_real(std::size_t(m) * m);
        std::lock_guard<std::mutex> lock(g_fftw_plan_mutex);
        forward = fftw_plan_r2r_2d(m, m, buf_a, buf_b, FFTW_REDFT10, FFTW_REDFT10,
                                   FFTW_ESTIMATE);
        backward = fftw_plan_r2r_2d(m, m, buf_b, buf_a, FFTW_REDFT01, FFTW_REDFT01,
                                    FFTW_ESTIMATE);
    }

    ~Impl() {
        std::lock_guard<std::mutex> lock(g_fftw_plan_mutex);
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
        fftw_free(buf_a);
        fftw_free(buf_b);
    }
};

NeumannPoissonSolver::NeumannPoissonSolver(GridSpec grid)
    : grid_(grid), impl_(std::make_unique<Impl>(grid)) {}

NeumannPoissonSolver::~NeumannPoissonSolver() = default;

ScalarField NeumannPoissonSolver::solve(const ScalarField& b) const {
    ScalarField out(grid_);
    solve_into(b, out);
    return out;
}

void NeumannPoissonSolver::solve_into(const ScalarField& b, ScalarField& out) const {
    double total = 0.0, absolute = 0.0;
    for (double v : b.values) {
        total += v;
        absolute += std::abs(v);
    }
    if (std::abs(total) > 1e-10 * absolute)
        throw std::invalid_argument("NeumannPoissonSolver: right-hand side must sum to zero");
    solve_projected_into(b, out);
}

void NeumannPoissonSolver::solve_projected_into(const ScalarField& b, ScalarField& out) const {
    if (b.grid != grid_ || out.grid != grid_)
        throw std::invalid_argument("NeumannPoissonSolver: grid mismatch");

    Impl& im = *impl_;
    const int m = im.m;
    const std::size_t count = std::size_t(m) * m;

    std::lock_guard<std::mutex> lock(im.run_mutex);
    std::copy(b.values.begin(), b.values.end(), im.buf_a);
    fftw_execute(im.forward);

    im.buf_b[0] = 0.0;  // constant mode is pinned to zero
    for (int k2 = 0; k2 < m; ++k2) {
        double l2 = im.lambda[k2];
        double* row = im.buf_b + std::size_t(k2) * m;
        for (int k1 = (k2 == 0 ? 1 : 0); k1 < m; ++k1) row[k1] /= (im.lambda[k1] + l2);
    }

    fftw_execute(im.backward);

    const double scale = 1.0 / (4.0 * double(m) * double(m));
    for (std::size_t k = 0; k < count; ++k) out.values[k] = im.buf_a[k] * scale;

    // The zeroed mode leaves the mean at round-off level; remove the rest.
    const double mean = compensated_sum(out.values) / double(count);
    for (double& v : out.values) v -= mean;
}

FluxField project_affine(const NeumannPoissonSolver& solver, const FluxField& m,
                         const SourceField& rho) {
    if (m.grid != solver.grid() || rho.grid() != solver.grid())
        throw std::invalid_argument("project_affine: grid mismatch");
    FluxField result = m;
    AffineProjectionScratch scratch(solver.grid());
    project_affine_inplace(solver, result, rho.rho, scratch);
    return result;
}

void project_affine_inplace(const NeumannPoissonSolver& solver, FluxField& m,
                            const ScalarField& rho, AffineProjectionScratch& scratch) {
    divergence_into(m, scratch.residual);
    for (std::size_t k = 0; k < scratch.residual.values.size(); ++k)
        scratch.residual.values[k] -= rho.values[k];
    solver.solve_projected_into(scratch.residual, scratch.potential);

    // m -= A^* potential, expanded over the two edge arrays.
    const int n = m.grid.n;
    const double inv_h = 1.0 / m.grid.h;
    for (int j = 0; j <= n; ++j) {
        const double* row = &scratch.potential.values[std::size_t(j) * (n + 1)];
        double* mx = &m.x_edges[std::size_t(j) * n];
        for (int i = 0; i < n; ++i) mx[i] -= (row[i] - row[i + 1]) * inv_h;
    }
    for (int j = 0; j < n; ++j) {
        const double* row = &scratch.potential.values[std::size_t(j) * (n + 1)];
        const double* next = &scratch.potential.values[std::size_t(j + 1) * (n + 1)];
        double* my = &m.y_edges[std::size_t(j) * (n + 1)];
        for (int i = 0; i <= n; ++i) my[i] -= (row[i] - next[i]) * inv_h;
    }
}

}  // namespace w1mg
