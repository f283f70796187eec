#pragma once

#include <memory>

#include "w1mg/grid.hpp"

namespace w1mg {

/// Spectral solver for the node Laplacian A_h A_h^* (5-point, Neumann
/// boundary, positive semidefinite).  The operator is diagonal in the
/// type-II cosine basis; forward/inverse transforms run through FFTW.
/// Spectral tables and plans are fixed at construction; solves on the same
/// instance may run concurrently.
class NeumannPoissonSolver {
  public:
    explicit NeumannPoissonSolver(GridSpec grid);
    ~NeumannPoissonSolver();

    NeumannPoissonSolver(const NeumannPoissonSolver&) = delete;
    NeumannPoissonSolver& operator=(const NeumannPoissonSolver&) = delete;

    const GridSpec& grid() const { return grid_; }

    /// Solves A_h A_h^* phi = b for the unique zero-mean phi.
    /// Requires |sum b| <= 1e-10 * sum |b| (compatibility).
    ScalarField solve(const ScalarField& b) const;
    void solve_into(const ScalarField& b, ScalarField& out) const;

    /// Same inversion without the compatibility guard: the constant mode of
    /// b is discarded.  For right-hand sides that are zero-sum by
    /// construction (divergences, differences of zero-sum fields).
    void solve_projected_into(const ScalarField& b, ScalarField& out) const;

  private:
    GridSpec grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Euclidean projection of m onto the affine space {m' : A_h m' = rho}:
/// m - A_h^* ( (A_h A_h^*)^{-1} (A_h m - rho) ).
FluxField project_affine(const NeumannPoissonSolver& solver, const FluxField& m,
                         const SourceField& rho);

/// Scratch buffers for the in-place variant.
struct AffineProjectionScratch {
    ScalarField residual;
    ScalarField potential;
    explicit AffineProjectionScratch(GridSpec g) : residual(g), potential(g) {}
};

/// In-place projection: replaces m by its projection onto {A_h m = rho}.
/// rho must be zero-sum (take it from a SourceField).
void project_affine_inplace(const NeumannPoissonSolver& solver, FluxField& m,
                            const ScalarField& rho, AffineProjectionScratch& scratch);

}  // namespace w1mg
