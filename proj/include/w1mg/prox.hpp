#pragma once

#include "w1mg/pnorm.hpp"

namespace w1mg {

/// Proximal map of mu*||.||_p at v: argmin_u ||u||_p + ||u - v||_2^2 / (2*mu).
/// p=1 soft-thresholds componentwise, p=2 shrinks the whole vector toward
/// zero, p=inf goes through the Moreau decomposition with the l1-ball
/// projection.  Requires mu > 0.
Vec2 shrink(Vec2 v, double mu, PNorm p);

/// Euclidean projection onto the unit q-ball {u : ||u||_q <= 1}.
Vec2 project_unit_ball(Vec2 v, PNorm q);

/// Euclidean projection onto {u : ||u||_1 <= radius}.  Requires radius > 0.
Vec2 project_l1_ball(Vec2 v, double radius);

}  // namespace w1mg
