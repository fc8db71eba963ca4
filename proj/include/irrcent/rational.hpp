#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace irrcent {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// Dense matrix over Q, row-major.
using RatMatrix = std::vector<std::vector<Rational>>;

// Inverse of a square integer matrix; throws std::domain_error if singular.
RatMatrix invert(const std::vector<std::vector<int>>& m);

long long lcm_of_denominators(const RatMatrix& m);

}  // namespace irrcent
