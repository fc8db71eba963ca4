#include "irrcent/cyclotomic.hpp"

#include <stdexcept>

namespace irrcent {

namespace {

// exact division of monic integer polynomials
std::vector<long long> divide(std::vector<long long> num, const std::vector<long long>& den)
{
    const std::size_t dn = den.size() - 1;
    if (den.back() != 1) throw std::logic_error("divide: non-monic divisor");
    if (num.size() < den.size()) return {0};
    std::vector<long long> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const long long c = num[k];
        q[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("divide: nonzero remainder");
    return q;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m)
{
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    std::vector<long long> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divide(p, cyclotomic_polynomial(d));
    return p;
}

CyclotomicInteger::CyclotomicInteger(int order) : order_(order)
{
    if (order < 1) throw std::invalid_argument("CyclotomicInteger: order must be positive");
    coeffs_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

void CyclotomicInteger::reduce(std::vector<long long> poly)
{
    const auto phi = cyclotomic_polynomial(order_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > d;) {
        const long long c = poly[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) poly[k - d + i] -= c * phi[i];
    }
    for (std::size_t i = 0; i < d; ++i) coeffs_[i] = i < poly.size() ? poly[i] : 0;
}

void CyclotomicInteger::add_power(long long exponent, long long coeff)
{
    const long long e = ((exponent % order_) + order_) % order_;
    std::vector<long long> poly(static_cast<std::size_t>(order_), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i] = coeffs_[i];
    poly[static_cast<std::size_t>(e)] += coeff;
    reduce(poly);
}

CyclotomicInteger CyclotomicInteger::from_profile(const std::vector<long long>& counts, int power)
{
    CyclotomicInteger z(static_cast<int>(counts.size()));
    const long long m = static_cast<long long>(counts.size());
    std::vector<long long> poly(counts.size(), 0);
    for (long long j = 0; j < m; ++j) {
        const long long e = (((j * power) % m) + m) % m;
        poly[static_cast<std::size_t>(e)] += counts[static_cast<std::size_t>(j)];
    }
    z.reduce(poly);
    return z;
}

bool CyclotomicInteger::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<long long> CyclotomicInteger::rational_value() const
{
    if (!is_rational()) return std::nullopt;
    return coeffs_.empty() ? 0 : coeffs_[0];
}

std::string CyclotomicInteger::to_string() const
{
    if (auto v = rational_value()) return std::to_string(*v);
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long long c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const long long a = c < 0 ? -c : c;
        if (i == 0) out += std::to_string(a);
        else {
            if (a != 1) out += std::to_string(a) + "*";
            out += "z" + std::to_string(order_) + (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return out;
}

}  // namespace irrcent
