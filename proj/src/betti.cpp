#include "gammahodge/betti.hpp"

#include <functional>

#include "gammahodge/errors.hpp"

namespace gammahodge {

BettiVector::BettiVector(std::size_t dim, std::vector<Integer> values) : d(dim), beta(std::move(values)) {
    if (d < 1) throw InputError("Betti vector dimension d must be >= 1");
    if (beta.size() != d + 1)
        throw InputError("Betti vector for d=" + std::to_string(d) + " needs " + std::to_string(d + 1) +
                         " entries, got " + std::to_string(beta.size()));
    for (const auto& b : beta)
        if (b < 0) throw InputError("Betti numbers must be non-negative");
}

BettiVector BettiVector::from_ints(std::size_t dim, const std::vector<long>& values) {
    std::vector<Integer> beta;
    beta.reserve(values.size());
    for (long v : values) beta.emplace_back(v);
    return BettiVector(dim, std::move(beta));
}

std::vector<std::string> input_warnings(const BettiVector& betti) {
    std::vector<std::string> out;
    if (betti.beta[0] != 0)
        out.push_back("beta_0 = " + to_decimal(betti.beta[0]) +
                      " is nonzero; the configuration-space formula assumes an infinite-volume base and "
                      "ignores beta_0");
    return out;
}

Integer beta_super(const Integer& beta_k, std::size_t k, std::size_t s) {
    if (k % 2 != 0) return binomial(beta_k, s);
    if (beta_k == 0) return s == 0 ? 1 : 0;
    return binomial(Integer(beta_k + static_cast<unsigned long>(s) - 1), s);
}

Integer config_betti(const BettiVector& betti, std::size_t n) {
    if (n == 0) return 1;
    const std::size_t d = betti.d;
    Integer total = 0;

    // multiplicities s_i >= 1 with sum s_i * degrees[i] == n
    std::function<void(const std::vector<std::size_t>&, std::size_t, std::size_t, Integer)> solve =
        [&](const std::vector<std::size_t>& degrees, std::size_t i, std::size_t left, Integer acc) {
            if (i == degrees.size()) {
                if (left == 0) total += acc;
                return;
            }
            const std::size_t k = degrees[i];
            std::size_t reserved = 0;  // every later degree takes at least one slot
            for (std::size_t j = i + 1; j < degrees.size(); ++j) reserved += degrees[j];
            for (std::size_t s = 1; s * k + reserved <= left; ++s) {
                Integer factor = beta_super(betti.beta[k], k, s);
                if (factor == 0) continue;
                solve(degrees, i + 1, left - s * k, acc * factor);
            }
        };

    // strictly increasing subsets {k_1 < ... < k_m} of {1..d}, m = 1..n
    std::vector<std::size_t> subset;
    std::function<void(std::size_t)> choose = [&](std::size_t next) {
        if (!subset.empty() && subset.size() <= n) solve(subset, 0, n, Integer(1));
        if (subset.size() == n) return;
        for (std::size_t k = next; k <= d; ++k) {
            subset.push_back(k);
            choose(k + 1);
            subset.pop_back();
        }
    };
    choose(1);
    return total;
}

std::vector<Integer> config_betti_series(const BettiVector& betti, std::size_t n_max) {
    std::vector<Integer> poly(n_max + 1, 0);
    poly[0] = 1;
    for (std::size_t k = 1; k <= betti.d; ++k) {
        std::vector<Integer> next(n_max + 1, 0);
        for (std::size_t t = 0; t <= n_max; ++t) {
            if (poly[t] == 0) continue;
            for (std::size_t s = 0; t + s * k <= n_max; ++s) {
                Integer coeff = s == 0 ? Integer(1) : beta_super(betti.beta[k], k, s);
                if (coeff == 0) break;
                next[t + s * k] += poly[t] * coeff;
            }
        }
        poly = std::move(next);
    }
    return poly;
}

VanishingThreshold vanishing_threshold(const BettiVector& betti) {
    VanishingThreshold out;
    out.k0 = 0;
    out.valid = true;
    for (std::size_t i = 1; i <= betti.d; ++i) {
        out.k0 += betti.beta[i] * static_cast<unsigned long>(i);
        if (i % 2 == 0 && betti.beta[i] != 0) out.valid = false;
    }
    if (!out.valid) return out;

    if (!out.k0.fits_ulong_p() || out.k0.get_ui() > 1'000'000)
        throw ResourceError("vanishing threshold K_0 = " + to_decimal(out.k0) + " is too large to verify");
    const std::size_t k0 = out.k0.get_ui();
    const auto b = config_betti_series(betti, k0 + betti.d);
    if (config_betti(betti, k0) != 1 || b[k0] != 1)
        throw InvariantViolation("b_{K_0} != 1 for K_0 = " + std::to_string(k0));
    for (std::size_t k = k0 + 1; k <= k0 + betti.d; ++k)
        if (config_betti(betti, k) != 0 || b[k] != 0)
            throw InvariantViolation("b_" + std::to_string(k) + " != 0 above K_0 = " + std::to_string(k0));
    return out;
}

BettiVector kunneth_product(const BettiVector& x, const BettiVector& m) {
    const std::size_t d = x.d + m.d;
    std::vector<Integer> beta(d + 1, 0);
    for (std::size_t i = 0; i <= x.d; ++i)
        for (std::size_t j = 0; j <= m.d; ++j) beta[i + j] += x.beta[i] * m.beta[j];
    return BettiVector(d, std::move(beta));
}

FiberCheck fiber_decomposition_check(std::size_t points, std::size_t d, std::size_t n) {
    if (points < 1 || d < 1) throw InputError("fiber_decomposition_check: need N >= 1 and d >= 1");
    if (n > points * d) throw InputError("fiber_decomposition_check: n exceeds N*d");

    FiberCheck out;
    out.lhs = binomial(static_cast<unsigned long>(points * d), n);

    // ordered (k_1..k_m), 1 <= k_i <= d, sum k_i = n, weighted by prod C(d, k_i)
    std::function<Integer(std::size_t, std::size_t)> ordered = [&](std::size_t m, std::size_t left) -> Integer {
        if (m == 0) return left == 0 ? 1 : 0;
        Integer sum = 0;
        for (std::size_t k = 1; k <= d && k <= left; ++k) sum += binomial(d, k) * ordered(m - 1, left - k);
        return sum;
    };
    out.rhs = 0;
    for (std::size_t m = 0; m <= std::min(n, points); ++m) out.rhs += binomial(points, m) * ordered(m, n);
    return out;
}

BettiReport betti_report(const BettiVector& betti, std::size_t n_max) {
    BettiReport report;
    report.input = betti;
    report.n_max = n_max;
    report.warnings = input_warnings(betti);
    report.b.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) report.b.push_back(config_betti(betti, n));
    const auto fast = config_betti_series(betti, n_max);
    if (fast != report.b) throw InvariantViolation("generating-function path disagrees with the triple sum");
    auto threshold = vanishing_threshold(betti);
    if (threshold.valid) report.vanishing = threshold;
    return report;
}

}  // namespace gammahodge
