#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gammahodge/errors.hpp"
#include "gammahodge/graded_algebra.hpp"
#include "oracles.hpp"

using namespace gammahodge;

namespace {

GradedSpace space_of(std::vector<int> degrees, std::vector<std::size_t> dims) {
    std::vector<Component> comps;
    for (std::size_t i = 0; i < degrees.size(); ++i) comps.push_back({degrees[i], dims[i]});
    return GradedSpace(std::move(comps));
}

// Sign by counting inversions directly, for the all-odd case.
int parity_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("super_sign") {
    const std::vector<std::size_t> id{0, 1, 2};
    const std::vector<int> odd3{1, 3, 5};
    CHECK(super_sign(id, odd3) == 1);

    const std::vector<std::size_t> swap{1, 0};
    CHECK(super_sign(swap, std::vector<int>{1, 1}) == -1);
    CHECK(super_sign(swap, std::vector<int>{2, 1}) == 1);

    SUBCASE("all odd degrees reduce to the permutation parity") {
        std::vector<std::size_t> perm{0, 1, 2, 3};
        const std::vector<int> ones{1, 1, 1, 1};
        do {
            CHECK(super_sign(perm, ones) == parity_sign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(super_sign(swap, std::vector<int>{1}), InputError);
        CHECK_THROWS_AS(super_sign(std::vector<std::size_t>{0, 0}, std::vector<int>{1, 1}), InputError);
        CHECK_THROWS_AS(super_sign(std::vector<std::size_t>{0, 2}, std::vector<int>{1, 1}), InputError);
    }
}

TEST_CASE("enumerate_words") {
    CHECK(enumerate_words(space_of({1}, {2}), 2, 2).size() == 4);

    const auto empty = enumerate_words(space_of({1, 2}, {1, 1}), 0, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    const auto mixed = enumerate_words(space_of({1, 2}, {1, 1}), 2, 3);
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0] == BasisWord{{0, 0}, {1, 0}});
    CHECK(mixed[1] == BasisWord{{1, 0}, {0, 0}});

    CHECK(enumerate_words(space_of({2}, {3}), 2, 3).empty());
    CHECK(enumerate_words(space_of({1}, {0}), 1, 1).empty());

    SUBCASE("degree bookkeeping and counts") {
        const auto space = space_of({1, 2, 3}, {2, 1, 2});
        for (std::size_t m = 0; m <= 4; ++m)
            for (int n = 0; n <= 8; ++n) {
                const auto words = enumerate_words(space, m, n);
                CHECK(count_words(space, m, n) == words.size());
                CHECK(std::is_sorted(words.begin(), words.end()));
                for (const auto& w : words) {
                    CHECK(w.size() == m);
                    CHECK(multidegree(space, w) == n);
                }
            }
    }
}

TEST_CASE("project") {
    const auto odd = space_of({1}, {2});
    CHECK(project(odd, BasisWord{{0, 1}}) == TensorVector::basis({{0, 1}}));
    CHECK(project(odd, BasisWord{{0, 0}, {0, 0}}).is_zero());

    const auto mixed = space_of({1, 2}, {1, 1});
    const BasisWord ef{{0, 0}, {1, 0}};
    const BasisWord fe{{1, 0}, {0, 0}};
    const auto p = project(mixed, ef);
    CHECK(p.size() == 2);
    CHECK(p.coefficient(ef) == Rational(1, 2));
    CHECK(p.coefficient(fe) == Rational(1, 2));

    SUBCASE("two odd distinct letters antisymmetrize") {
        const BasisWord ab{{0, 0}, {0, 1}};
        const auto q = project(odd, ab);
        CHECK(q.coefficient(ab) == Rational(1, 2));
        CHECK(q.coefficient({{0, 1}, {0, 0}}) == Rational(-1, 2));
    }
    SUBCASE("empty word is fixed") { CHECK(project(odd, BasisWord{}) == TensorVector::basis({})); }
}

TEST_CASE("gram_matrix_sym") {
    const auto g1 = gram_matrix_sym(space_of({1}, {1}), 2, 2);
    REQUIRE(g1.rows() == 1);
    CHECK(g1(0, 0) == 0);

    const auto g2 = gram_matrix_sym(space_of({2}, {1}), 2, 4);
    REQUIRE(g2.rows() == 1);
    CHECK(g2(0, 0) == 1);

    const auto space = space_of({1, 2}, {2, 1});
    const auto g3 = gram_matrix_sym(space, 1, 1);
    CHECK(g3 == RationalMatrix::identity(2));

    SUBCASE("symmetric and idempotent") {
        for (std::size_t m = 0; m <= 3; ++m)
            for (int n = 0; n <= 5; ++n) {
                const auto g = gram_matrix_sym(space, m, n);
                CHECK(g == g.transpose());
                CHECK(g * g == g);
            }
    }
    CHECK(gram_matrix_sym(space, 2, 9).rows() == 0);
}

TEST_CASE("sym_component_dim_bruteforce against the full Gram rank") {
    // oracle: rank of the unblocked Gram matrix by plain row reduction
    auto oracle_rank = [](const GradedSpace& s, std::size_t m, int n) {
        return oracle::rref_rank(gram_matrix_sym(s, m, n));
    };
    CHECK(oracle_rank(space_of({1}, {3}), 2, 2) == 3);
    CHECK(sym_component_dim_bruteforce(space_of({1}, {3}), 2, 2) == 3);
    CHECK(oracle_rank(space_of({2}, {2}), 2, 4) == 3);
    CHECK(sym_component_dim_bruteforce(space_of({2}, {2}), 2, 4) == 3);
    CHECK(oracle_rank(space_of({1, 2}, {1, 1}), 3, 3) == 0);
    CHECK(sym_component_dim_bruteforce(space_of({1, 2}, {1, 1}), 3, 3) == 0);

    for (const auto& space : {space_of({1, 2}, {2, 2}), space_of({1, 3}, {2, 1}), space_of({2, 2}, {1, 2})})
        for (std::size_t m = 0; m <= 4; ++m)
            for (int n = 0; n <= 6; ++n)
                CHECK(sym_component_dim_bruteforce(space, m, n) == oracle_rank(space, m, n));
}

TEST_CASE("word enumeration cap is a reported resource error") {
    const auto space = space_of({1}, {10});
    CHECK_THROWS_AS(sym_component_dim_bruteforce(space, 5, 5, 1000), ResourceError);
    CHECK_THROWS_AS(gram_matrix_sym(space, 5, 5, 1000), ResourceError);
    try {
        sym_component_dim_bruteforce(space, 5, 5, 1000);
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("1000") != std::string::npos);
    }
    CHECK(sym_component_dim_bruteforce(space, 2, 2, 100) == 45);
}

TEST_CASE("sym_component_dim_closed") {
    CHECK(sym_component_dim_closed(space_of({1}, {3}), 2, 2) == 3);
    CHECK(sym_component_dim_closed(space_of({1, 4}, {2, 2}), 0, 0) == 1);
    CHECK(sym_component_dim_closed(space_of({2}, {0}), 0, 0) == 1);
    CHECK(sym_component_dim_closed(space_of({2}, {0}), 1, 2) == 0);

    SUBCASE("all degrees one: exterior power of the direct sum") {
        for (std::size_t a = 0; a <= 3; ++a)
            for (std::size_t b = 0; b <= 3; ++b)
                for (int n = 0; n <= 6; ++n)
                    CHECK(sym_component_dim_closed(space_of({1, 1}, {a, b}), static_cast<std::size_t>(n), n) ==
                          oracle::pascal(a + b, static_cast<std::size_t>(n)));
    }
    SUBCASE("one even generator space: symmetric powers count multisets") {
        for (std::size_t dim = 0; dim <= 4; ++dim)
            for (std::size_t s = 0; s <= 4; ++s)
                CHECK(sym_component_dim_closed(space_of({2}, {dim}), s, static_cast<int>(2 * s)) ==
                      oracle::count_multisets(dim, s));
    }
    SUBCASE("one odd generator space: exterior powers count subsets") {
        for (std::size_t dim = 0; dim <= 5; ++dim)
            for (std::size_t s = 0; s <= 5; ++s)
                CHECK(sym_component_dim_closed(space_of({3}, {dim}), s, static_cast<int>(3 * s)) ==
                      oracle::count_subsets(dim, s));
    }
}

TEST_CASE("closed form equals brute force; dims are permutation-closed") {
    // ordered component lists, l <= 2, with every relabeling
    for (int p1 = 1; p1 <= 4; ++p1)
        for (int p2 = 1; p2 <= 4; ++p2)
            for (std::size_t d1 = 0; d1 <= 2; ++d1)
                for (std::size_t d2 = 0; d2 <= 2; ++d2) {
                    const auto s = space_of({p1, p2}, {d1, d2});
                    const auto swapped = space_of({p2, p1}, {d2, d1});
                    for (std::size_t m = 0; m <= 4; ++m)
                        for (int n = 0; n <= 6; ++n) {
                            const Integer closed = sym_component_dim_closed(s, m, n);
                            CHECK(closed == sym_component_dim_bruteforce(s, m, n));
                            CHECK(closed == sym_component_dim_bruteforce(swapped, m, n));
                            CHECK(count_words(s, m, n) == count_words(swapped, m, n));
                        }
                }
}

TEST_CASE("projected_norm_sq") {
    const auto odd = space_of({1}, {3});
    CHECK(projected_norm_sq(odd, {{0, 2}}) == 1);
    CHECK(projected_norm_sq(space_of({2}, {1}), {{0, 0}, {0, 0}}) == 1);
    CHECK(projected_norm_sq(odd, {{0, 0}, {0, 0}}) == 0);
    CHECK(projected_norm_sq(odd, {{0, 0}, {0, 1}, {0, 2}}) == Rational(1, 6));
    CHECK_THROWS_AS(projected_norm_sq(odd, {{0, 1}, {0, 0}}), InputError);

    const std::vector<std::size_t> distinct{0, 1, 2};
    const std::vector<std::size_t> repeated{0, 0, 1};
    CHECK(diamond_norm_sq(1, distinct) == Rational(1, 6));
    CHECK(diamond_norm_sq(2, repeated) == Rational(1, 3));
    CHECK(diamond_norm_sq(1, repeated) == 0);

    SUBCASE("agrees with <P w, w> on all block-sorted words, l <= 2, m <= 4") {
        for (int p1 = 1; p1 <= 3; ++p1)
            for (int p2 = 1; p2 <= 3; ++p2) {
                const auto space = space_of({p1, p2}, {2, 2});
                for (std::size_t m = 0; m <= 4; ++m)
                    for (int n = 0; n <= 12; ++n)
                        for (const auto& w : enumerate_words(space, m, n)) {
                            if (!std::is_sorted(w.begin(), w.end())) continue;
                            CHECK(projected_norm_sq(space, w) == inner(project(space, w), TensorVector::basis(w)));
                        }
            }
    }
}

TEST_CASE("projector laws on a mixed-degree space") {
    const auto space = space_of({1, 2}, {2, 1});
    for (std::size_t m = 0; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) {
            const auto words = enumerate_words(space, m, n);
            for (const auto& u : words) {
                const auto pu = project(space, u);
                CHECK(project(space, pu) == pu);
                for (const auto& v : words)
                    CHECK(inner(pu, TensorVector::basis(v)) == inner(TensorVector::basis(u), project(space, v)));

                std::vector<std::size_t> perm(m);
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                std::vector<int> degrees;
                for (const auto& l : u) degrees.push_back(space.degree(l.component));
                do {
                    BasisWord permuted(m);
                    for (std::size_t k = 0; k < m; ++k) permuted[k] = u[perm[k]];
                    CHECK(project(space, permuted) == Rational(super_sign(perm, degrees)) * pu);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
}

TEST_CASE("graded space validation") {
    CHECK_THROWS_AS(GradedSpace({}), InputError);
    CHECK_THROWS_AS(space_of({0}, {1}), InputError);
    const auto conf = GradedSpace::with_index_degrees({2, 0, 1});
    CHECK(conf.size() == 3);
    CHECK(conf.degree(2) == 3);
    CHECK(conf.alphabet_size() == 3);
}
