#pragma once

#include <optional>
#include <vector>

#include "w1mg/grid.hpp"

namespace w1mg {

enum class StepMode {
    safe,       ///< step sizes with a convergence guarantee
    practical,  ///< the faster choice used for production runs
};

struct SolverParams {
    PNorm p = PNorm::p1;
    double tolerance = 1e-8;  ///< stop when the fixed-point residual drops below this
    long max_iters = 5'000'000;
    StepMode step_mode = StepMode::practical;
};

struct LevelStats {
    double h = 0.0;
    double eps = 0.0;
    long iters = 0;
    double fpr_final = 0.0;
    double seconds = 0.0;
};

struct SolveReport {
    double distance = 0.0;    ///< primal objective at the final flux
    double dual_value = 0.0;  ///< <potential, rho>_h certificate
    bool converged = false;
    long iterations = 0;  ///< total across levels
    FluxField flux;
    ScalarField potential;
    std::optional<FluxField> dual_flux;  ///< prox-PDHG only
    std::vector<LevelStats> levels;
    std::vector<double> residual_history;  ///< finest level
    double total_seconds = 0.0;
};

}  // namespace w1mg
