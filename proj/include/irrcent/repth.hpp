#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include "irrcent/rootsys.hpp"

namespace irrcent {

using BigInt = boost::multiprecision::cpp_int;

// Weight multiset on a (possibly product) root system. Only nonzero
// multiplicities are stored.
class Character {
public:
    explicit Character(RootSystemPtr rs);

    const RootSystem& root_system() const { return *rs_; }
    const RootSystemPtr& root_system_ptr() const { return rs_; }
    const std::map<Weight, long long>& entries() const { return entries_; }

    void add(const Weight& w, long long mult);
    long long multiplicity(const Weight& w) const;
    long long dimension() const;
    bool empty() const { return entries_.empty(); }
    bool weyl_stable() const;
    std::map<Weight, long long> dominant_part() const;

    Character& operator+=(const Character& other);
    bool operator==(const Character& other) const { return entries_ == other.entries_; }

private:
    RootSystemPtr rs_;
    std::map<Weight, long long> entries_;
};

Character trivial_character(RootSystemPtr rs, long long mult = 1);

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Multiplicities of the dominant weights of the irreducible module with
// highest weight lambda (Freudenthal).
std::map<Weight, long long> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

// Full weight multiset of the irreducible module.
Character dominant_character(RootSystemPtr rs, const Weight& lambda);

Character adjoint_character(RootSystemPtr rs);

struct CompositionFactor {
    Weight highest_weight;
    long long multiplicity = 0;
    long long dimension = 0;
    bool operator==(const CompositionFactor&) const = default;
};

// Greedy extraction of irreducible characters, highest (by height, then
// lexicographically largest) first.
std::vector<CompositionFactor> semisimplify(const Character& ch);

bool has_trivial_factor(const Character& ch);

// "2;0|0;l1+l7" style rendering of a product weight, one group per
// simple component.
std::string weight_label(const RootSystem& rs, const Weight& w);

nlohmann::json factors_to_json(const RootSystem& rs, const std::vector<CompositionFactor>& factors);
nlohmann::json character_to_json(const Character& ch);

}  // namespace irrcent
