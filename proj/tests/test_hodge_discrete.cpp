#include <doctest.h>

#include "gammahodge/errors.hpp"
#include "gammahodge/hodge_discrete.hpp"
#include "gammahodge/rng.hpp"
#include "oracles.hpp"

using namespace gammahodge;

namespace {

// β_k = nullity ∂_k - rank ∂_{k+1}, by plain row reduction.
std::vector<std::size_t> oracle_betti(const SimplicialComplex& k) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= k.max_dim(); ++d) {
        const std::size_t cycles = oracle::nullity(to_rational(boundary_matrix(k, d)));
        const std::size_t boundaries = oracle::rref_rank(to_rational(boundary_matrix(k, d + 1)));
        out.push_back(cycles - boundaries);
    }
    return out;
}

SymMatrix random_gram(SampleStream& stream) {
    const std::size_t rows = 1 + stream.next_u64() % 6;
    const std::size_t cols = 1 + stream.next_u64() % 6;
    IntegerMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) g(r, c) = static_cast<long>(stream.next_u64() % 5) - 2;
    return SymMatrix::gram(g);
}

}  // namespace

TEST_CASE("load_complex closes under faces") {
    const auto hollow = catalog::hollow_triangle();
    CHECK(hollow.count(0) == 3);
    CHECK(hollow.count(1) == 3);
    CHECK(hollow.max_dim() == 1);

    const auto solid = catalog::solid_triangle();
    CHECK(solid.count(0) == 3);
    CHECK(solid.count(1) == 3);
    CHECK(solid.count(2) == 1);

    const auto empty = SimplicialComplex::from_maximal({});
    CHECK(empty.empty());
    CHECK(empty.max_dim() == -1);
    CHECK(betti_numbers(empty).empty());

    const auto unsorted = SimplicialComplex::from_maximal({{2, 0, 1}});
    CHECK(unsorted.contains({0, 1, 2}));
    CHECK(unsorted.contains({0, 2}));

    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{0, -1}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{0, 1, 1}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal({{}}), InputError);
}

TEST_CASE("boundary of a boundary vanishes") {
    for (const auto& [name, k] : catalog::all()) {
        CAPTURE(name);
        for (int d = 1; d <= k.max_dim(); ++d) CHECK((boundary_matrix(k, d) * boundary_matrix(k, d + 1)).is_zero());
    }
}

TEST_CASE("betti_numbers") {
    using V = std::vector<std::size_t>;
    CHECK(betti_numbers(catalog::hollow_triangle()) == V{1, 1});
    CHECK(betti_numbers(catalog::solid_triangle()) == V{1, 0, 0});
    CHECK(betti_numbers(SimplicialComplex::from_maximal({{0}, {1}})) == V{2});
    CHECK(betti_numbers(catalog::two_hollow_triangles()) == V{2, 2});
    CHECK(betti_numbers(catalog::hollow_tetrahedron()) == V{1, 0, 1});
    CHECK(betti_numbers(catalog::minimal_torus()) == V{1, 2, 1});
    for (const auto& [name, k] : catalog::all()) {
        CAPTURE(name);
        CHECK(betti_numbers(k) == oracle_betti(k));
    }
}

TEST_CASE("minimal torus is a closed surface with 7 vertices") {
    const auto t = catalog::minimal_torus();
    CHECK(t.count(0) == 7);
    CHECK(t.count(1) == 21);
    CHECK(t.count(2) == 14);
    // every edge lies in exactly two triangles
    const auto d2 = boundary_matrix(t, 2);
    for (std::size_t r = 0; r < d2.rows(); ++r) {
        int incident = 0;
        for (std::size_t c = 0; c < d2.cols(); ++c) incident += d2(r, c) != 0;
        CHECK(incident == 2);
    }
}

TEST_CASE("hodge_laplacian") {
    CHECK(nullity(hodge_laplacian(catalog::hollow_triangle(), 1)) == 1);
    CHECK(nullity(hodge_laplacian(catalog::solid_triangle(), 1)) == 0);
    CHECK_THROWS_AS(hodge_laplacian(catalog::solid_triangle(), 3), InputError);

    SampleStream stream(1, 2);
    for (const auto& [name, k] : catalog::all())
        for (int d = 0; d <= k.max_dim(); ++d) {
            const auto lap = hodge_laplacian(k, d);
            CHECK(is_positive_semidefinite(lap));
            for (std::size_t i = 0; i < lap.size(); ++i) CHECK(lap(i, i) >= 0);
            for (int probe = 0; probe < 5; ++probe) {
                RationalMatrix x(lap.size(), 1);
                for (std::size_t i = 0; i < lap.size(); ++i) x(i, 0) = static_cast<long>(stream.next_u64() % 7) - 3;
                CHECK((x.transpose() * lap.matrix() * x)(0, 0) >= 0);
            }
        }
}

TEST_CASE("hodge_decomposition_dims") {
    CHECK(hodge_decomposition_dims(catalog::hollow_triangle(), 1) == HodgeDims{3, 1, 2, 0});
    CHECK(hodge_decomposition_dims(catalog::solid_triangle(), 1) == HodgeDims{3, 0, 2, 1});
    for (const auto& [name, k] : catalog::all()) {
        CAPTURE(name);
        const auto betti = betti_numbers(k);
        for (int d = 0; d <= k.max_dim(); ++d) {
            const auto h = hodge_decomposition_dims(k, d);
            CHECK(h.harmonic + h.exact + h.coexact == h.chains);
            CHECK(h.harmonic == betti[static_cast<std::size_t>(d)]);
        }
    }
    CHECK(hodge_decomposition_dims(catalog::minimal_torus(), 0).harmonic == 1);
}

TEST_CASE("harmonic 1-form of the hollow triangle is orthogonal to exact and coexact forms") {
    const auto k = catalog::hollow_triangle();
    // edges in order (0,1), (0,2), (1,2); the cycle 0 -> 1 -> 2 -> 0
    RationalMatrix h(3, 1);
    h(0, 0) = 1;
    h(1, 0) = -1;
    h(2, 0) = 1;
    CHECK((hodge_laplacian(k, 1).matrix() * h).is_zero());
    const auto d1 = to_rational(boundary_matrix(k, 1));  // columns of ∂_1ᵀ are rows of ∂_1
    CHECK((d1 * h).is_zero());
    const auto d2 = to_rational(boundary_matrix(k, 2));
    CHECK(d2.cols() == 0);
    CHECK((d2.transpose() * h).is_zero());
}

TEST_CASE("positive semidefinite detection") {
    CHECK(is_positive_semidefinite(SymMatrix::diagonal({0, 1, 2})));
    CHECK_FALSE(is_positive_semidefinite(SymMatrix::diagonal({1, -1})));
    CHECK_FALSE(is_positive_semidefinite(SymMatrix(RationalMatrix{{0, 1}, {1, 0}})));
    CHECK_FALSE(is_positive_semidefinite(SymMatrix(RationalMatrix{{1, 2}, {2, 1}})));
    CHECK(is_positive_semidefinite(SymMatrix(RationalMatrix{{1, 1}, {1, 1}})));
    CHECK_THROWS_AS(SymMatrix(RationalMatrix{{1, 2}, {3, 1}}), InputError);
}

TEST_CASE("kron_sum_kernel_dim") {
    auto r = kron_sum_kernel_dim(SymMatrix::diagonal({0, 1}), SymMatrix::diagonal({0, 0, 2}));
    CHECK(r.computed == 2);
    CHECK(r.predicted == 2);

    r = kron_sum_kernel_dim(SymMatrix::zero(3), SymMatrix::zero(4));
    CHECK(r.computed == 12);
    CHECK(r.predicted == 12);

    SUBCASE("diagonal operands: count eigenvalue pairs summing to zero") {
        SampleStream stream(4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long> a(1 + stream.next_u64() % 5), b(1 + stream.next_u64() % 5);
            for (auto& x : a) x = static_cast<long>(stream.next_u64() % 3);
            for (auto& x : b) x = static_cast<long>(stream.next_u64() % 3);
            std::size_t zero_pairs = 0;
            for (long x : a)
                for (long y : b) zero_pairs += (x + y == 0);
            CHECK(kron_sum_kernel_dim(SymMatrix::diagonal(a), SymMatrix::diagonal(b)).computed == zero_pairs);
        }
    }
    SUBCASE("random Gram operands against row reduction of the Kronecker sum") {
        SampleStream stream(8, 0);
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_gram(stream);
            const auto b = random_gram(stream);
            const auto sum = kron(a.matrix(), RationalMatrix::identity(b.size())) +
                             kron(RationalMatrix::identity(a.size()), b.matrix());
            const auto dims = kron_sum_kernel_dim(a, b);
            CHECK(dims.computed == oracle::nullity(sum));
            CHECK(dims.computed == dims.predicted);
        }
    }
    CHECK_THROWS_AS(kron_sum_kernel_dim(SymMatrix::diagonal({-1}), SymMatrix::diagonal({1})), InputError);
}
