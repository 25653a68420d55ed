#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gammahodge {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

GaussRule gauss_legendre(std::size_t order);

struct QuadratureResult {
    double value = 0.0;
    std::size_t order = 0;  // per-axis nodes of the accepted level
    double last_change = 0.0;
};

// Tensor-product Gauss–Legendre over the box [0, L_1] × ... × [0, L_dim].
// The per-axis order doubles from 4 until two successive levels differ by
// less than rel_tol relative (abs_floor absolute near zero). Throws
// QuadratureError when the point budget runs out first.
QuadratureResult integrate_box(const std::function<double(std::span<const double>)>& f,
                               std::span<const double> lengths, double rel_tol = 1e-10,
                               double abs_floor = 1e-14, std::size_t max_points = std::size_t{1} << 22);

}  // namespace gammahodge
