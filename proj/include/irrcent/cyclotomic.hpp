#pragma once

#include <optional>
#include <string>
#include <vector>

namespace irrcent {

// Coefficients (constant term first) of the m-th cyclotomic polynomial.
std::vector<long long> cyclotomic_polynomial(int m);

// Element of Z[zeta_m], stored reduced modulo the m-th cyclotomic
// polynomial: sum c_k zeta^k, 0 <= k < phi(m).
class CyclotomicInteger {
public:
    explicit CyclotomicInteger(int order);

    // sum_j counts[j] * zeta^(j*power), indices j mod order
    static CyclotomicInteger from_profile(const std::vector<long long>& counts, int power);

    int order() const { return order_; }
    const std::vector<long long>& coefficients() const { return coeffs_; }
    void add_power(long long exponent, long long coeff);

    bool is_rational() const;
    std::optional<long long> rational_value() const;
    std::string to_string() const;

private:
    void reduce(std::vector<long long> poly);
    int order_;
    std::vector<long long> coeffs_;
};

}  // namespace irrcent
