#pragma once

// Supercommutative tensor algebra over finitely many graded generator
// spaces H_1, ..., H_l. Tensor words over orthonormal bases are the
// ambient basis; the supersymmetric part is the image of the projector P.
//
// Indices are 0-based throughout: component i in [0, l), basis b in
// [0, dim(H_i)), permutations of {0, ..., m-1}.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "gammahodge/exact.hpp"

namespace gammahodge {

inline constexpr std::size_t kDefaultWordCap = 20000;

struct Component {
    int degree = 1;       // p(i) >= 1
    std::size_t dim = 0;  // zero-dimensional components contribute no letters
};

class GradedSpace {
  public:
    explicit GradedSpace(std::vector<Component> components);

    // Components K^(1), ..., K^(d) with p(i) = i and dim K^(i) = dims[i-1].
    static GradedSpace with_index_degrees(const std::vector<std::size_t>& dims);

    std::size_t size() const { return components_.size(); }
    const Component& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Component>& components() const { return components_; }
    int degree(std::size_t i) const { return components_[i].degree; }
    std::size_t alphabet_size() const;

  private:
    std::vector<Component> components_;
};

struct Letter {
    std::size_t component = 0;
    std::size_t basis = 0;
    auto operator<=>(const Letter&) const = default;
};

using BasisWord = std::vector<Letter>;

int multidegree(const GradedSpace& space, const BasisWord& word);

// Exact rational combination of basis words; zero coefficients are never stored.
class TensorVector {
  public:
    using Terms = std::map<BasisWord, Rational>;

    TensorVector() = default;
    static TensorVector basis(const BasisWord& word);

    void add(const BasisWord& word, const Rational& coeff);
    Rational coefficient(const BasisWord& word) const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    TensorVector& operator+=(const TensorVector& other);
    friend TensorVector operator*(const Rational& s, const TensorVector& v);
    friend bool operator==(const TensorVector&, const TensorVector&) = default;

  private:
    Terms terms_;
};

// Words are orthonormal.
Rational inner(const TensorVector& a, const TensorVector& b);

// Product over inversions k < r, perm[k] > perm[r] of (-1)^{deg[perm[k]] deg[perm[r]]}.
// degrees[j] is the degree of the letter originally at position j.
int super_sign(std::span<const std::size_t> perm, std::span<const int> degrees);

// All length-m words of multidegree n in lexicographic order of letters.
std::vector<BasisWord> enumerate_words(const GradedSpace& space, std::size_t m, int n);

// Size of enumerate_words(space, m, n) without materializing it.
Integer count_words(const GradedSpace& space, std::size_t m, int n);

TensorVector project(const GradedSpace& space, const BasisWord& word);
TensorVector project(const GradedSpace& space, const TensorVector& v);

// Gram matrix <P w_a, w_b> over enumerate_words(space, m, n).
RationalMatrix gram_matrix_sym(const GradedSpace& space, std::size_t m, int n,
                               std::size_t word_cap = kDefaultWordCap);

// rank of P on A^n_m, computed from the Gram matrix. The matrix is
// block-diagonal over permutation orbits of words, so blocks are ranked
// independently.
Integer sym_component_dim_bruteforce(const GradedSpace& space, std::size_t m, int n,
                                     std::size_t word_cap = kDefaultWordCap);

// Sum over (s_1..s_l), sum s_i = m, sum p(i) s_i = n, of prod_i D(dim_i, s_i),
// D = C(dim, s) for odd p(i) and C(dim + s - 1, s) for even p(i).
Integer sym_component_dim_closed(const GradedSpace& space, std::size_t m, int n);

// ||P w||^2 for a block-sorted word via the factorial formula, with the
// convention ||e_1 ∧ ... ∧ e_r||^2 = 1/r! for orthonormal e_i. Zero for an
// odd block with a repeated letter. Throws InputError if not block-sorted.
Rational projected_norm_sq(const GradedSpace& space, const BasisWord& word);

// Norm^2 of the ⋄-power monomial of one block (sorted basis indices).
Rational diamond_norm_sq(int degree, std::span<const std::size_t> sorted_basis);

}  // namespace gammahodge
