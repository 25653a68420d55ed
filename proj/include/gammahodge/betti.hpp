#pragma once

// L²-Betti numbers of the configuration space over a manifold X, computed
// from the Betti numbers beta_1..beta_d of X.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gammahodge/exact.hpp"

namespace gammahodge {

// beta_0, ..., beta_d of the base manifold.
struct BettiVector {
    std::size_t d = 1;
    std::vector<Integer> beta;

    BettiVector() = default;
    BettiVector(std::size_t dim, std::vector<Integer> values);
    static BettiVector from_ints(std::size_t dim, const std::vector<long>& values);

    const Integer& operator[](std::size_t k) const { return beta[k]; }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

// Nonfatal diagnostics about the input (e.g. beta_0 != 0).
std::vector<std::string> input_warnings(const BettiVector& betti);

// dim of the s-th antisymmetric (odd k) or symmetric (even k) power of a
// beta_k-dimensional space.
Integer beta_super(const Integer& beta_k, std::size_t k, std::size_t s);

// b_n by the triple sum over m, increasing degree subsets k_1 < ... < k_m,
// and positive multiplicities with sum s_i k_i = n. b_0 = 1.
Integer config_betti(const BettiVector& betti, std::size_t n);

// b_0..b_{n_max} from the product of per-degree generating polynomials.
// Independent of config_betti; the two must agree exactly.
std::vector<Integer> config_betti_series(const BettiVector& betti, std::size_t n_max);

struct VanishingThreshold {
    Integer k0;  // sum_i i * beta_i
    bool valid = false;  // all even-degree beta vanish
    friend bool operator==(const VanishingThreshold&, const VanishingThreshold&) = default;
};

// When valid, checks b_{K_0} = 1 and b_k = 0 for K_0 < k <= K_0 + d and
// throws InvariantViolation otherwise.
VanishingThreshold vanishing_threshold(const BettiVector& betti);

// Betti vector of X × M by convolution.
BettiVector kunneth_product(const BettiVector& x, const BettiVector& m);

struct FiberCheck {
    Integer lhs;
    Integer rhs;
};

// Dimension of the n-th exterior power of the tangent space at an N-point
// configuration in a d-manifold, computed directly and via the split
// over which points carry the form.
FiberCheck fiber_decomposition_check(std::size_t points, std::size_t d, std::size_t n);

struct BettiReport {
    BettiVector input;
    std::size_t n_max = 0;
    std::vector<Integer> b;  // b_0..b_{n_max}
    std::optional<VanishingThreshold> vanishing;  // present only when valid
    std::vector<std::string> warnings;
    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

BettiReport betti_report(const BettiVector& betti, std::size_t n_max);

}  // namespace gammahodge
