#include "gammahodge/hodge_discrete.hpp"

#include <algorithm>
#include <set>

#include "gammahodge/errors.hpp"

namespace gammahodge {

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<long long>>& maximal) {
    std::vector<std::set<Simplex>> levels;
    for (const auto& raw : maximal) {
        if (raw.empty()) throw InputError("empty simplex in complex description");
        Simplex s;
        s.reserve(raw.size());
        for (long long v : raw) {
            if (v < 0) throw InputError("negative vertex id " + std::to_string(v));
            s.push_back(static_cast<std::size_t>(v));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("duplicate vertex in simplex");
        if (levels.size() < s.size()) levels.resize(s.size());

        // all nonempty faces, by bitmask over the vertices
        const std::size_t n = s.size();
        if (n > 20) throw ResourceError("simplex with more than 20 vertices");
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            Simplex face;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1ul << j)) face.push_back(s[j]);
            levels[face.size() - 1].insert(std::move(face));
        }
    }
    SimplicialComplex out;
    out.maximal_ = maximal;
    out.by_dim_.reserve(levels.size());
    for (auto& level : levels) out.by_dim_.emplace_back(level.begin(), level.end());
    return out;
}

std::size_t SimplicialComplex::count(int k) const {
    if (k < 0 || k > max_dim()) return 0;
    return by_dim_[static_cast<std::size_t>(k)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > max_dim()) return none;
    return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) throw InputError("simplex not in complex");
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const {
    const auto& level = simplices(static_cast<int>(s.size()) - 1);
    return std::binary_search(level.begin(), level.end(), s);
}

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int k) {
    IntegerMatrix d(complex.count(k - 1), complex.count(k));
    if (k <= 0) return d;
    const auto& cols = complex.simplices(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Simplex& s = cols[c];
        for (std::size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
            d(complex.index_of(face), c) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& complex) {
    const int top = complex.max_dim();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[k] = rank ∂_k
    for (int k = 1; k <= top; ++k) ranks[static_cast<std::size_t>(k)] = rank(boundary_matrix(complex, k));
    std::vector<std::size_t> betti;
    for (int k = 0; k <= top; ++k)
        betti.push_back(complex.count(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)]);
    return betti;
}

SymMatrix::SymMatrix(RationalMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw InputError("symmetric matrix must be square");
    for (std::size_t r = 0; r < m_.rows(); ++r)
        for (std::size_t c = r + 1; c < m_.cols(); ++c)
            if (m_(r, c) != m_(c, r)) throw InputError("matrix is not symmetric");
}

SymMatrix SymMatrix::gram(const IntegerMatrix& g) { return SymMatrix(to_rational(g.transpose() * g)); }

SymMatrix SymMatrix::diagonal(const std::vector<long>& entries) {
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::zero(std::size_t n) { return SymMatrix(RationalMatrix(n, n)); }

bool is_positive_semidefinite(const SymMatrix& a) {
    RationalMatrix m = a.matrix();
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational pivot = m(i, i);
        if (pivot < 0) return false;
        if (pivot == 0) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (m(i, j) != 0) return false;
            continue;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m(r, i) == 0) continue;
            const Rational factor = m(r, i) / pivot;
            for (std::size_t c = i; c < n; ++c) m(r, c) -= factor * m(i, c);
        }
    }
    return true;
}

std::size_t nullity(const SymMatrix& a) { return a.size() - rank(a.matrix()); }

SymMatrix hodge_laplacian(const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.max_dim()) throw InputError("hodge_laplacian: degree out of range");
    const IntegerMatrix up = boundary_matrix(complex, k + 1);
    const IntegerMatrix down = boundary_matrix(complex, k);
    return SymMatrix(to_rational(up * up.transpose() + down.transpose() * down));
}

HodgeDims hodge_decomposition_dims(const SimplicialComplex& complex, int k) {
    HodgeDims out;
    out.chains = complex.count(k);
    out.harmonic = nullity(hodge_laplacian(complex, k));
    out.exact = rank(boundary_matrix(complex, k));
    out.coexact = rank(boundary_matrix(complex, k + 1));
    if (out.harmonic + out.exact + out.coexact != out.chains)
        throw InvariantViolation("Hodge decomposition dimensions do not add up in degree " + std::to_string(k));
    if (out.harmonic != betti_numbers(complex)[static_cast<std::size_t>(k)])
        throw InvariantViolation("harmonic dimension differs from Betti number in degree " + std::to_string(k));
    return out;
}

KernelDims kron_sum_kernel_dim(const SymMatrix& a, const SymMatrix& b) {
    if (!is_positive_semidefinite(a) || !is_positive_semidefinite(b))
        throw InputError("kron_sum_kernel_dim: operands must be positive semidefinite");
    const RationalMatrix sum = kron(a.matrix(), RationalMatrix::identity(b.size())) +
                               kron(RationalMatrix::identity(a.size()), b.matrix());
    KernelDims out;
    out.computed = sum.rows() - rank(sum);
    out.predicted = nullity(a) * nullity(b);
    return out;
}

namespace catalog {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}); }

SimplicialComplex solid_triangle() { return SimplicialComplex::from_maximal({{0, 1, 2}}); }

SimplicialComplex two_hollow_triangles() {
    return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

SimplicialComplex hollow_tetrahedron() {
    return SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Möbius–Kantor / Császár 7-vertex triangulation: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex minimal_torus() {
    std::vector<std::vector<long long>> tris;
    for (long long i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_maximal(tris);
}

std::vector<std::pair<std::string, SimplicialComplex>> all() {
    return {{"hollow_triangle", hollow_triangle()},
            {"solid_triangle", solid_triangle()},
            {"two_hollow_triangles", two_hollow_triangles()},
            {"hollow_tetrahedron", hollow_tetrahedron()},
            {"minimal_torus", minimal_torus()}};
}

}  // namespace catalog

}  // namespace gammahodge
