#include "w1mg/prox.hpp"

#include <algorithm>
#include <cmath>

namespace w1mg {

namespace {

inline double soft(double v, double mu) {
    return std::copysign(std::max(std::abs(v) - mu, 0.0), v);
}

}  // namespace

Vec2 project_l1_ball(Vec2 v, double radius) {
    if (radius <= 0.0) throw std::invalid_argument("project_l1_ball: radius must be positive");
    double ax = std::abs(v.x), ay = std::abs(v.y);
    if (ax + ay <= radius) return v;
    // Two components: the soft-threshold level is either hi - radius (one
    // active component) or (ax + ay - radius) / 2 (both active).
    double hi = std::max(ax, ay), lo = std::min(ax, ay);
    double theta = (hi - radius >= lo) ? hi - radius : 0.5 * (ax + ay - radius);
    return {soft(v.x, theta), soft(v.y, theta)};
}

Vec2 shrink(Vec2 v, double mu, PNorm p) {
    if (mu <= 0.0) throw std::invalid_argument("shrink: mu must be positive");
    switch (p) {
        case PNorm::p1:
            return {soft(v.x, mu), soft(v.y, mu)};
        case PNorm::p2: {
            double norm = std::sqrt(v.x * v.x + v.y * v.y);
            if (norm <= mu) return {0.0, 0.0};
            double scale = 1.0 - mu / norm;
            return {scale * v.x, scale * v.y};
        }
        case PNorm::pinf: {
            // Moreau: prox_{mu*||.||_inf}(v) = v - Proj_{mu*l1-ball}(v).
            Vec2 q = project_l1_ball(v, mu);
            return {v.x - q.x, v.y - q.y};
        }
    }
    throw std::logic_error("bad PNorm");
}

Vec2 project_unit_ball(Vec2 v, PNorm q) {
    switch (q) {
        case PNorm::p1:
            if (std::abs(v.x) + std::abs(v.y) <= 1.0) return v;
            return project_l1_ball(v, 1.0);
        case PNorm::p2: {
            double norm2 = v.x * v.x + v.y * v.y;
            if (norm2 <= 1.0) return v;
            double scale = 1.0 / std::sqrt(norm2);
            return {scale * v.x, scale * v.y};
        }
        case PNorm::pinf:
            return {std::clamp(v.x, -1.0, 1.0), std::clamp(v.y, -1.0, 1.0)};
    }
    throw std::logic_error("bad PNorm");
}

}  // namespace w1mg
