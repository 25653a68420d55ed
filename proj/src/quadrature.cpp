#include "gammahodge/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gammahodge/errors.hpp"

namespace gammahodge {

GaussRule gauss_legendre(std::size_t order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const std::size_t half = (order + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Newton iteration from the Tricomi initial guess
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= order; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            if (order == 1) p0 = 1.0;
            dp = static_cast<double>(order) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

namespace {

double tensor_sum(const std::function<double(std::span<const double>)>& f, std::span<const double> lengths,
                  const GaussRule& rule) {
    const std::size_t dim = lengths.size();
    const std::size_t n = rule.nodes.size();
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> x(dim);
    double jacobian = 1.0;
    for (double len : lengths) jacobian *= 0.5 * len;

    double sum = 0.0;
    while (true) {
        double w = 1.0;
        for (std::size_t a = 0; a < dim; ++a) {
            x[a] = 0.5 * lengths[a] * (rule.nodes[idx[a]] + 1.0);
            w *= rule.weights[idx[a]];
        }
        sum += w * f(x);
        std::size_t a = 0;
        while (a < dim && ++idx[a] == n) idx[a++] = 0;
        if (a == dim) break;
    }
    return sum * jacobian;
}

}  // namespace

QuadratureResult integrate_box(const std::function<double(std::span<const double>)>& f,
                               std::span<const double> lengths, double rel_tol, double abs_floor,
                               std::size_t max_points) {
    auto points = [&](std::size_t order) {
        double total = 1.0;
        for (std::size_t a = 0; a < lengths.size(); ++a) total *= static_cast<double>(order);
        return total;
    };
    std::size_t order = 4;
    double previous = tensor_sum(f, lengths, gauss_legendre(order));
    while (points(order * 2) <= static_cast<double>(max_points)) {
        order *= 2;
        const double current = tensor_sum(f, lengths, gauss_legendre(order));
        const double change = std::abs(current - previous);
        if (change <= rel_tol * std::abs(current) || change <= abs_floor) return {current, order, change};
        previous = current;
    }
    throw QuadratureError("quadrature did not converge to relative " + std::to_string(rel_tol) + " within " +
                          std::to_string(max_points) + " points");
}

}  // namespace gammahodge
