#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "gammahodge/errors.hpp"
#include "gammahodge/quadrature.hpp"
#include "gammahodge/rng.hpp"

using namespace gammahodge;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("sample streams are deterministic and distinct") {
    SampleStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
        CHECK(x != d.next_u64());
        seen.insert(x);
    }
    CHECK(seen.size() == 100);

    SampleStream u(1, 0);
    double mean = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const double x = u.uniform();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        mean += x;
    }
    mean /= 100000;
    CHECK(std::abs(mean - 0.5) < 3.0 * std::sqrt(1.0 / 12.0 / 100000));
}

TEST_CASE("Gauss-Legendre rules") {
    for (std::size_t order : {1u, 2u, 5u, 16u, 64u}) {
        const auto rule = gauss_legendre(order);
        double total = 0.0;
        for (double w : rule.weights) total += w;
        CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
        // exact for polynomials of degree 2n - 1
        double moment = 0.0;
        const int deg = static_cast<int>(2 * order - 2);
        for (std::size_t i = 0; i < order; ++i) moment += rule.weights[i] * std::pow(rule.nodes[i], deg);
        CHECK(moment == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-12));
    }
}

TEST_CASE("integrate_box") {
    const std::vector<double> box{1.0, 2.0};
    const auto poly = integrate_box([](std::span<const double> x) { return x[0] * x[0] * x[1]; }, box);
    CHECK(poly.value == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

    const std::vector<double> line{3.0};
    const auto gauss = integrate_box([](std::span<const double> x) { return std::exp(-(x[0] - 1.5) * (x[0] - 1.5) / 0.18); }, line);
    const double exact = std::sqrt(0.18 * std::numbers::pi) * std::erf(1.5 / std::sqrt(0.18));
    CHECK(std::abs(gauss.value - exact) < 1e-10 * exact);

    CHECK_THROWS_AS(integrate_box([](std::span<const double> x) { return x[0] < 0.3 ? 0.0 : 1.0; }, line, 1e-12, 0.0, 256),
                    QuadratureError);
}
