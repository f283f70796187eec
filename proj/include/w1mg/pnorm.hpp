#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace w1mg {

/// A vector attached to one grid node: (x-component, y-component).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

/// Ground-metric exponent p of the transport cost ||x - y||_p.
enum class PNorm { p1, p2, pinf };

/// Holder conjugate q, 1/p + 1/q = 1.
inline PNorm conjugate(PNorm p) {
    switch (p) {
        case PNorm::p1: return PNorm::pinf;
        case PNorm::p2: return PNorm::p2;
        case PNorm::pinf: return PNorm::p1;
    }
    throw std::logic_error("bad PNorm");
}

inline double vec_norm(Vec2 v, PNorm p) {
    switch (p) {
        case PNorm::p1: return std::abs(v.x) + std::abs(v.y);
        case PNorm::p2: return std::sqrt(v.x * v.x + v.y * v.y);
        case PNorm::pinf: return std::max(std::abs(v.x), std::abs(v.y));
    }
    throw std::logic_error("bad PNorm");
}

inline std::string to_string(PNorm p) {
    switch (p) {
        case PNorm::p1: return "1";
        case PNorm::p2: return "2";
        case PNorm::pinf: return "inf";
    }
    throw std::logic_error("bad PNorm");
}

inline PNorm pnorm_from_string(const std::string& s) {
    if (s == "1") return PNorm::p1;
    if (s == "2") return PNorm::p2;
    if (s == "inf" || s == "Inf" || s == "INF") return PNorm::pinf;
    throw std::invalid_argument("p must be one of 1, 2, inf (got '" + s + "')");
}

}  // namespace w1mg
