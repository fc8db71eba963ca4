#include "irrcent/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace irrcent {

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

RatMatrix invert(const std::vector<std::vector<int>>& m)
{
    const std::size_t n = m.size();
    RatMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("invert: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].numerator() == 0) ++p;
        if (p == n) throw std::domain_error("invert: singular matrix");
        std::swap(a[p], a[c]);
        const Rational piv = a[c][c];
        for (auto& x : a[c]) x /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].numerator() == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    RatMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

long long lcm_of_denominators(const RatMatrix& m)
{
    long long l = 1;
    for (const auto& row : m)
        for (const auto& x : row) l = std::lcm(l, x.denominator());
    return l;
}

}  // namespace irrcent
