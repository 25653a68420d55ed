#pragma once

// Finite simplicial complexes as stand-ins for the base manifold: oriented
// boundary matrices, Betti numbers, combinatorial Hodge Laplacians and the
// Hodge decomposition dimensions, all over exact arithmetic.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gammahodge/exact.hpp"

namespace gammahodge {

using Simplex = std::vector<std::size_t>;  // sorted vertex ids

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Face closure of the given maximal simplices. Throws InputError on
    // negative vertex ids, repeated vertices, or empty simplices.
    static SimplicialComplex from_maximal(const std::vector<std::vector<long long>>& maximal);

    // -1 for the empty complex.
    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    std::size_t count(int k) const;
    const std::vector<Simplex>& simplices(int k) const;
    std::size_t index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const;
    const std::vector<std::vector<long long>>& maximal() const { return maximal_; }

  private:
    std::vector<std::vector<Simplex>> by_dim_;  // each level sorted lexicographically
    std::vector<std::vector<long long>> maximal_;
};

// ∂_k : C_k -> C_{k-1}; rows index (k-1)-simplices, columns k-simplices.
// Deleting the vertex at position j carries sign (-1)^j.
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int k);

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex);

// Exact symmetric matrix over Q.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(RationalMatrix m);

    // GᵀG, positive semidefinite by construction.
    static SymMatrix gram(const IntegerMatrix& g);
    static SymMatrix diagonal(const std::vector<long>& entries);
    static SymMatrix zero(std::size_t n);

    std::size_t size() const { return m_.rows(); }
    const RationalMatrix& matrix() const { return m_; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  private:
    RationalMatrix m_;
};

// LDLᵀ without pivoting; a negative pivot, or a zero pivot with a nonzero
// remaining row, rules out semidefiniteness.
bool is_positive_semidefinite(const SymMatrix& a);

std::size_t nullity(const SymMatrix& a);

// L_k = ∂_{k+1} ∂_{k+1}ᵀ + ∂_kᵀ ∂_k.
SymMatrix hodge_laplacian(const SimplicialComplex& complex, int k);

struct HodgeDims {
    std::size_t chains = 0;     // dim C_k
    std::size_t harmonic = 0;   // dim ker L_k
    std::size_t exact = 0;      // rank ∂_k
    std::size_t coexact = 0;    // rank ∂_{k+1}
    friend bool operator==(const HodgeDims&, const HodgeDims&) = default;
};

// Throws InvariantViolation if harmonic + exact + coexact != chains or
// harmonic differs from the k-th Betti number.
HodgeDims hodge_decomposition_dims(const SimplicialComplex& complex, int k);

struct KernelDims {
    std::size_t computed = 0;   // nullity of A ⊗ I + I ⊗ B
    std::size_t predicted = 0;  // nullity(A) * nullity(B)
};

// Throws InputError when A or B is not positive semidefinite.
KernelDims kron_sum_kernel_dim(const SymMatrix& a, const SymMatrix& b);

namespace catalog {

SimplicialComplex hollow_triangle();
SimplicialComplex solid_triangle();
SimplicialComplex two_hollow_triangles();
SimplicialComplex hollow_tetrahedron();
SimplicialComplex minimal_torus();

std::vector<std::pair<std::string, SimplicialComplex>> all();

}  // namespace catalog

}  // namespace gammahodge
