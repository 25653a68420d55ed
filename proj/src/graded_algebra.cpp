#include "gammahodge/graded_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gammahodge/errors.hpp"

namespace gammahodge {

GradedSpace::GradedSpace(std::vector<Component> components) : components_(std::move(components)) {
    if (components_.empty()) throw InputError("graded space needs at least one component");
    for (const auto& c : components_)
        if (c.degree < 1) throw InputError("component degree must be >= 1, got " + std::to_string(c.degree));
}

GradedSpace GradedSpace::with_index_degrees(const std::vector<std::size_t>& dims) {
    std::vector<Component> comps;
    comps.reserve(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) comps.push_back({static_cast<int>(i + 1), dims[i]});
    return GradedSpace(std::move(comps));
}

std::size_t GradedSpace::alphabet_size() const {
    std::size_t total = 0;
    for (const auto& c : components_) total += c.dim;
    return total;
}

int multidegree(const GradedSpace& space, const BasisWord& word) {
    int n = 0;
    for (const auto& letter : word) n += space.degree(letter.component);
    return n;
}

TensorVector TensorVector::basis(const BasisWord& word) {
    TensorVector v;
    v.terms_.emplace(word, Rational(1));
    return v;
}

void TensorVector::add(const BasisWord& word, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(word, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Rational TensorVector::coefficient(const BasisWord& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
    for (const auto& [word, coeff] : other.terms_) add(word, coeff);
    return *this;
}

TensorVector operator*(const Rational& s, const TensorVector& v) {
    TensorVector out;
    if (s == 0) return out;
    for (const auto& [word, coeff] : v.terms_) out.terms_.emplace(word, s * coeff);
    return out;
}

Rational inner(const TensorVector& a, const TensorVector& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    Rational sum = 0;
    for (const auto& [word, coeff] : small.terms()) {
        auto it = large.terms().find(word);
        if (it != large.terms().end()) sum += coeff * it->second;
    }
    return sum;
}

int super_sign(std::span<const std::size_t> perm, std::span<const int> degrees) {
    const std::size_t m = perm.size();
    if (degrees.size() != m)
        throw InputError("super_sign: permutation has length " + std::to_string(m) + " but " +
                         std::to_string(degrees.size()) + " degrees given");
    std::vector<bool> seen(m, false);
    for (auto p : perm) {
        if (p >= m || seen[p]) throw InputError("super_sign: not a permutation");
        seen[p] = true;
    }
    int sign = 1;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = k + 1; r < m; ++r)
            if (perm[k] > perm[r] && (degrees[perm[k]] * degrees[perm[r]]) % 2 != 0) sign = -sign;
    return sign;
}

namespace {

void enumerate_rec(const GradedSpace& space, std::size_t m, int remaining, BasisWord& prefix,
                   std::vector<BasisWord>& out) {
    if (prefix.size() == m) {
        if (remaining == 0) out.push_back(prefix);
        return;
    }
    const std::size_t slots_left = m - prefix.size();
    for (std::size_t i = 0; i < space.size(); ++i) {
        const int p = space.degree(i);
        // every later letter has degree >= 1
        if (p + static_cast<int>(slots_left) - 1 > remaining) continue;
        for (std::size_t b = 0; b < space[i].dim; ++b) {
            prefix.push_back({i, b});
            enumerate_rec(space, m, remaining - p, prefix, out);
            prefix.pop_back();
        }
    }
}

// Coefficients of m! * P(word), each a signed count of permutations.
std::map<BasisWord, long> scaled_projection(const GradedSpace& space, const BasisWord& word) {
    const std::size_t m = word.size();
    std::vector<int> degrees(m);
    for (std::size_t j = 0; j < m; ++j) degrees[j] = space.degree(word[j].component);
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    std::map<BasisWord, long> out;
    BasisWord image(m);
    do {
        for (std::size_t k = 0; k < m; ++k) image[k] = word[perm[k]];
        out[image] += super_sign(perm, degrees);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void check_cap(const GradedSpace& space, std::size_t m, int n, std::size_t word_cap) {
    const Integer count = count_words(space, m, n);
    if (count > word_cap)
        throw ResourceError("word enumeration cap " + std::to_string(word_cap) + " exceeded: component (m=" +
                            std::to_string(m) + ", n=" + std::to_string(n) + ") has " + to_decimal(count) +
                            " words");
}

}  // namespace

std::vector<BasisWord> enumerate_words(const GradedSpace& space, std::size_t m, int n) {
    std::vector<BasisWord> out;
    if (n < 0) return out;
    BasisWord prefix;
    prefix.reserve(m);
    enumerate_rec(space, m, n, prefix, out);
    return out;
}

Integer count_words(const GradedSpace& space, std::size_t m, int n) {
    if (n < 0) return 0;
    // ways[j][t]: words of length j with multidegree t
    std::vector<std::vector<Integer>> ways(m + 1, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
    ways[0][0] = 1;
    for (std::size_t j = 1; j <= m; ++j)
        for (int t = 0; t <= n; ++t)
            for (const auto& c : space.components())
                if (c.degree <= t && c.dim > 0)
                    ways[j][t] += ways[j - 1][t - c.degree] * static_cast<unsigned long>(c.dim);
    return ways[m][n];
}

TensorVector project(const GradedSpace& space, const BasisWord& word) {
    const Rational scale(Integer(1), factorial(word.size()));
    TensorVector out;
    for (const auto& [image, count] : scaled_projection(space, word)) out.add(image, scale * Rational(count));
    return out;
}

TensorVector project(const GradedSpace& space, const TensorVector& v) {
    TensorVector out;
    for (const auto& [word, coeff] : v.terms()) out += coeff * project(space, word);
    return out;
}

RationalMatrix gram_matrix_sym(const GradedSpace& space, std::size_t m, int n, std::size_t word_cap) {
    check_cap(space, m, n, word_cap);
    const auto words = enumerate_words(space, m, n);
    std::map<BasisWord, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);

    RationalMatrix gram(words.size(), words.size());
    for (std::size_t a = 0; a < words.size(); ++a) {
        const TensorVector projected = project(space, words[a]);
        for (const auto& [image, coeff] : projected.terms()) gram(a, index.at(image)) = coeff;
    }
    return gram;
}

Integer sym_component_dim_bruteforce(const GradedSpace& space, std::size_t m, int n, std::size_t word_cap) {
    check_cap(space, m, n, word_cap);
    const auto words = enumerate_words(space, m, n);

    // P maps a word only to rearrangements of itself.
    std::map<BasisWord, std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < words.size(); ++i) {
        BasisWord key = words[i];
        std::sort(key.begin(), key.end());
        orbits[key].push_back(i);
    }

    Integer total = 0;
    for (const auto& [key, members] : orbits) {
        std::map<BasisWord, std::size_t> local;
        for (std::size_t a = 0; a < members.size(); ++a) local.emplace(words[members[a]], a);
        IntegerMatrix block(members.size(), members.size());
        for (std::size_t a = 0; a < members.size(); ++a)
            for (const auto& [image, count] : scaled_projection(space, words[members[a]]))
                block(a, local.at(image)) = count;
        total += static_cast<unsigned long>(rank(std::move(block)));
    }
    return total;
}

namespace {

Integer diamond_power_dim(const Component& c, std::size_t s) {
    if (c.degree % 2 != 0) return binomial(static_cast<unsigned long>(c.dim), s);
    if (c.dim == 0) return s == 0 ? 1 : 0;
    return binomial(static_cast<unsigned long>(c.dim + s - 1), s);
}

void closed_rec(const GradedSpace& space, std::size_t i, std::size_t m_left, int n_left, const Integer& acc,
                Integer& total) {
    if (i == space.size()) {
        if (m_left == 0 && n_left == 0) total += acc;
        return;
    }
    const int p = space.degree(i);
    for (std::size_t s = 0; s <= m_left && static_cast<int>(s) * p <= n_left; ++s) {
        Integer factor = diamond_power_dim(space[i], s);
        if (factor == 0) continue;
        closed_rec(space, i + 1, m_left - s, n_left - static_cast<int>(s) * p, acc * factor, total);
    }
}

}  // namespace

Integer sym_component_dim_closed(const GradedSpace& space, std::size_t m, int n) {
    Integer total = 0;
    if (n < 0) return total;
    closed_rec(space, 0, m, n, Integer(1), total);
    return total;
}

Rational diamond_norm_sq(int degree, std::span<const std::size_t> sorted_basis) {
    const std::size_t r = sorted_basis.size();
    const Rational inv_r_fact(Integer(1), factorial(r));
    if (degree % 2 != 0) {
        for (std::size_t j = 1; j < r; ++j)
            if (sorted_basis[j] == sorted_basis[j - 1]) return 0;
        return inv_r_fact;
    }
    Integer multiplicities = 1;
    for (std::size_t j = 0; j < r;) {
        std::size_t k = j;
        while (k < r && sorted_basis[k] == sorted_basis[j]) ++k;
        multiplicities *= factorial(k - j);
        j = k;
    }
    return Rational(multiplicities) * inv_r_fact;
}

Rational projected_norm_sq(const GradedSpace& space, const BasisWord& word) {
    for (std::size_t j = 1; j < word.size(); ++j)
        if (word[j] < word[j - 1]) throw InputError("projected_norm_sq: word is not block-sorted");

    Rational result(Integer(1), factorial(word.size()));
    for (std::size_t j = 0; j < word.size();) {
        std::size_t k = j;
        std::vector<std::size_t> block;
        while (k < word.size() && word[k].component == word[j].component) block.push_back(word[k++].basis);
        result *= Rational(factorial(block.size())) * diamond_norm_sq(space.degree(word[j].component), block);
        j = k;
    }
    return result;
}

}  // namespace gammahodge
