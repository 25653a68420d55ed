#include "gammahodge/exact.hpp"

#include <utility>

#include "gammahodge/errors.hpp"

namespace gammahodge {

std::size_t rank(IntegerMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

std::size_t rank(const RationalMatrix& m) {
    IntegerMatrix scaled(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) scaled(r, c) = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
    return rank(std::move(scaled));
}

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
    return q;
}

Integer binomial(const Integer& n, unsigned long k) {
    if (n < 0) throw InputError("binomial: negative upper index");
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

std::string to_decimal(const Integer& v) { return v.get_str(10); }

Integer from_decimal(const std::string& s) {
    if (s.empty()) throw InputError("empty integer literal");
    Integer v;
    if (v.set_str(s, 10) != 0) throw InputError("not a decimal integer: '" + s + "'");
    return v;
}

}  // namespace gammahodge
