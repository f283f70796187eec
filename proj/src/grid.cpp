#include "w1mg/grid.hpp"

#include <cmath>

namespace w1mg {

namespace {

void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (a != b) throw std::invalid_argument("grid mismatch");
}

struct NeumaierAcc {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace

double compensated_sum(const std::vector<double>& v) {
    NeumaierAcc acc;
    for (double x : v) acc.add(x);
    return acc.value();
}

SourceField::SourceField(ScalarField f) : rho(std::move(f)) {
    NeumaierAcc total, absolute;
    for (double v : rho.values) {
        total.add(v);
        absolute.add(std::abs(v));
    }
    if (std::abs(total.value()) > 1e-12 * absolute.value())
        throw std::invalid_argument("SourceField: values do not sum to zero");
}

void divergence_into(const FluxField& m, ScalarField& out) {
    require_same_grid(m.grid, out.grid);
    const int n = m.grid.n;
    const double inv_h = 1.0 / m.grid.h;
    for (int j = 0; j <= n; ++j) {
        const double* mx = &m.x_edges[std::size_t(j) * n];
        double* row = &out.values[std::size_t(j) * (n + 1)];
        for (int i = 0; i <= n; ++i) {
            double left = (i > 0) ? mx[i - 1] : 0.0;
            double right = (i < n) ? mx[i] : 0.0;
            row[i] = (right - left) * inv_h;
        }
    }
    for (int j = 0; j <= n; ++j) {
        const double* ylo = (j > 0) ? &m.y_edges[std::size_t(j - 1) * (n + 1)] : nullptr;
        const double* yhi = (j < n) ? &m.y_edges[std::size_t(j) * (n + 1)] : nullptr;
        double* row = &out.values[std::size_t(j) * (n + 1)];
        for (int i = 0; i <= n; ++i) {
            double below = ylo ? ylo[i] : 0.0;
            double above = yhi ? yhi[i] : 0.0;
            row[i] += (above - below) * inv_h;
        }
    }
}

ScalarField divergence(const FluxField& m) {
    ScalarField out(m.grid);
    divergence_into(m, out);
    return out;
}

void adjoint_into(const ScalarField& phi, FluxField& out) {
    require_same_grid(phi.grid, out.grid);
    const int n = phi.grid.n;
    const double inv_h = 1.0 / phi.grid.h;
    for (int j = 0; j <= n; ++j) {
        const double* row = &phi.values[std::size_t(j) * (n + 1)];
        double* mx = &out.x_edges[std::size_t(j) * n];
        for (int i = 0; i < n; ++i) mx[i] = (row[i] - row[i + 1]) * inv_h;
    }
    for (int j = 0; j < n; ++j) {
        const double* row = &phi.values[std::size_t(j) * (n + 1)];
        const double* next = &phi.values[std::size_t(j + 1) * (n + 1)];
        double* my = &out.y_edges[std::size_t(j) * (n + 1)];
        for (int i = 0; i <= n; ++i) my[i] = (row[i] - next[i]) * inv_h;
    }
}

FluxField adjoint(const ScalarField& phi) {
    FluxField out(phi.grid);
    adjoint_into(phi, out);
    return out;
}

double inner_h(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid);
    NeumaierAcc acc;
    for (std::size_t k = 0; k < a.values.size(); ++k) acc.add(a.values[k] * b.values[k]);
    return acc.value() * a.grid.h * a.grid.h;
}

double inner_h(const FluxField& a, const FluxField& b) {
    require_same_grid(a.grid, b.grid);
    NeumaierAcc acc;
    for (std::size_t k = 0; k < a.x_edges.size(); ++k) acc.add(a.x_edges[k] * b.x_edges[k]);
    for (std::size_t k = 0; k < a.y_edges.size(); ++k) acc.add(a.y_edges[k] * b.y_edges[k]);
    return acc.value() * a.grid.h * a.grid.h;
}

double norm_L2(const ScalarField& a) { return std::sqrt(inner_h(a, a)); }
double norm_L2(const FluxField& a) { return std::sqrt(inner_h(a, a)); }

double norm_plain(const ScalarField& a) {
    NeumaierAcc acc;
    for (double v : a.values) acc.add(v * v);
    return std::sqrt(acc.value());
}

double norm_plain(const FluxField& a) {
    NeumaierAcc acc;
    for (double v : a.x_edges) acc.add(v * v);
    for (double v : a.y_edges) acc.add(v * v);
    return std::sqrt(acc.value());
}

double operator_norm_bound(const GridSpec& grid) { return 2.0 * std::sqrt(2.0) / grid.h; }

double primal_value(const FluxField& m, PNorm p) {
    const int n = m.grid.n;
    NeumaierAcc acc;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) acc.add(vec_norm(m.node_vector(i, j), p));
    return acc.value() * m.grid.h * m.grid.h;
}

double dual_value(const ScalarField& phi, const SourceField& rho) {
    return inner_h(phi, rho.rho);
}

}  // namespace w1mg
