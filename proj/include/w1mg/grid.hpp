#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "w1mg/pnorm.hpp"

namespace w1mg {

/// Uniform square grid on [0,1]^2 with N cells per side, step h = 1/N.
/// Nodes live at (i*h, j*h), i,j in 0..N; all arrays are row-major with
/// the x1 index i running fastest.
struct GridSpec {
    int n = 1;       ///< cells per side
    double h = 1.0;  ///< 1.0 / n

    GridSpec() = default;
    explicit GridSpec(int cells_per_side) : n(cells_per_side), h(1.0 / cells_per_side) {
        if (cells_per_side < 1) throw std::invalid_argument("GridSpec: cells_per_side must be positive");
    }

    int nodes_per_side() const { return n + 1; }
    std::size_t node_count() const { return std::size_t(n + 1) * std::size_t(n + 1); }

    bool operator==(const GridSpec& o) const { return n == o.n; }
    bool operator!=(const GridSpec& o) const { return n != o.n; }
};

/// One real value per grid node ((N+1)^2 entries).
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(GridSpec g) : grid(g), values(g.node_count(), 0.0) {}

    double& at(int i, int j) { return values[idx(i, j)]; }
    double at(int i, int j) const { return values[idx(i, j)]; }
    std::size_t idx(int i, int j) const { return std::size_t(j) * (grid.n + 1) + i; }
};

/// Discrete flux m: one value per live grid edge.  x_edges[i + j*N] is the
/// edge (i*h, j*h) -> ((i+1)*h, j*h); y_edges[i + j*(N+1)] is the edge
/// (i*h, j*h) -> (i*h, (j+1)*h).  Components pointing out of the top/right
/// boundary are not stored; they are structurally zero (zero-flux boundary).
struct FluxField {
    GridSpec grid;
    std::vector<double> x_edges;  ///< N*(N+1) entries
    std::vector<double> y_edges;  ///< (N+1)*N entries

    FluxField() = default;
    explicit FluxField(GridSpec g)
        : grid(g),
          x_edges(std::size_t(g.n) * (g.n + 1), 0.0),
          y_edges(std::size_t(g.n + 1) * g.n, 0.0) {}

    double& x_at(int i, int j) { return x_edges[std::size_t(j) * grid.n + i]; }
    double x_at(int i, int j) const { return x_edges[std::size_t(j) * grid.n + i]; }
    double& y_at(int i, int j) { return y_edges[std::size_t(j) * (grid.n + 1) + i]; }
    double y_at(int i, int j) const { return y_edges[std::size_t(j) * (grid.n + 1) + i]; }

    /// Node view (m1(x), m2(x)): outgoing edge values, zero where absent.
    Vec2 node_vector(int i, int j) const {
        return {i < grid.n ? x_at(i, j) : 0.0, j < grid.n ? y_at(i, j) : 0.0};
    }
};

/// Right-hand side rho = rho^0 - rho^1 of the divergence constraint.
/// Construction enforces compatibility: |sum rho| <= 1e-12 * sum |rho|.
struct SourceField {
    ScalarField rho;

    SourceField() = default;
    explicit SourceField(ScalarField f);

    const GridSpec& grid() const { return rho.grid; }
};

// --- discrete operators ----------------------------------------------------

/// Discrete divergence A_h: backward-difference sum over both directions,
/// with the absent boundary components read as zero.
ScalarField divergence(const FluxField& m);
void divergence_into(const FluxField& m, ScalarField& out);

/// Algebraic adjoint A_h^* of the divergence: edge x -> x+h*e_i carries
/// (phi(x) - phi(x+h*e_i)) / h, so <A m, phi> = <m, A* phi> exactly.
FluxField adjoint(const ScalarField& phi);
void adjoint_into(const ScalarField& phi, FluxField& out);

// --- inner products and norms ----------------------------------------------

double inner_h(const ScalarField& a, const ScalarField& b);  ///< sum a*b*h^2
double inner_h(const FluxField& a, const FluxField& b);
double norm_L2(const ScalarField& a);  ///< sqrt(inner_h(a,a))
double norm_L2(const FluxField& a);
double norm_plain(const ScalarField& a);  ///< unweighted Euclidean norm
double norm_plain(const FluxField& a);

/// Gershgorin bound on the operator norm of A_h: 2*sqrt(2)/h.
double operator_norm_bound(const GridSpec& grid);

/// Primal objective: sum_x ||(m1(x), m2(x))||_p * h^2.
double primal_value(const FluxField& m, PNorm p);

/// Dual objective: <phi, rho>_h.
double dual_value(const ScalarField& phi, const SourceField& rho);

/// Compensated (Neumaier) summation; used wherever 1e-12-level exactness
/// of large sums is part of a contract.
double compensated_sum(const std::vector<double>& v);

}  // namespace w1mg
