#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ohasse/algebra/poly.hpp"

namespace ohasse {

template <Field F>
using Matrix = std::vector<std::vector<typename F::Element>>;

// Determinant by Gaussian elimination over the field.
template <Field F>
typename F::Element determinant(const F& f, Matrix<F> m) {
    const std::size_t n = m.size();
    auto det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && f.is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = f.neg(det);
        }
        det = f.mul(det, m[col][col]);
        auto inv = f.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (f.is_zero(m[r][col])) continue;
            auto factor = f.mul(m[r][col], inv);
            for (std::size_t c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
        }
    }
    return det;
}

// Solves m * x = rhs for square nonsingular m; nullopt when singular.
template <Field F>
std::optional<std::vector<typename F::Element>> solve_linear(const F& f, Matrix<F> m,
                                                             std::vector<typename F::Element> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && f.is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        auto inv = f.inv(m[col][col]);
        for (std::size_t c = col; c < n; ++c) m[col][c] = f.mul(m[col][c], inv);
        rhs[col] = f.mul(rhs[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || f.is_zero(m[r][col])) continue;
            auto factor = m[r][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
            rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
        }
    }
    return rhs;
}

// Sylvester matrix of two coefficient lists given highest degree first, of
// formal degrees m = a.size()-1 and n = b.size()-1. Rows of a come first.
template <Field F>
Matrix<F> sylvester_matrix(const F& f, const std::vector<typename F::Element>& a_high,
                           const std::vector<typename F::Element>& b_high) {
    const std::size_t m = a_high.size() - 1;
    const std::size_t n = b_high.size() - 1;
    const std::size_t size = m + n;
    Matrix<F> s(size, std::vector<typename F::Element>(size, f.zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = a_high[j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = b_high[j];
    return s;
}

// Resultant of the formal-degree coefficient lists (highest first).
template <Field F>
typename F::Element sylvester_resultant(const F& f, const std::vector<typename F::Element>& a_high,
                                        const std::vector<typename F::Element>& b_high) {
    return determinant(f, sylvester_matrix(f, a_high, b_high));
}

// Res(a, b) as the Sylvester determinant with the rows of a first. The zero
// polynomial is treated as the constant 0, so Res(a, 0) = 0 for deg a >= 1
// and Res(c, 0) = 1 for a nonzero constant c.
template <Field F>
typename F::Element poly_resultant(const Poly<F>& a, const Poly<F>& b) {
    a.check_same(b);
    if (a.is_zero() && b.is_zero()) throw UndefinedResultant("Res(0, 0) is undefined");
    const F& f = a.field();
    auto high = [&](const Poly<F>& p) {
        if (p.is_zero()) return std::vector<typename F::Element>{f.zero()};
        return std::vector<typename F::Element>(p.coeffs().rbegin(), p.coeffs().rend());
    };
    return sylvester_resultant(f, high(a), high(b));
}

}  // namespace ohasse
