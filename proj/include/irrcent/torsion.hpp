#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "irrcent/cyclotomic.hpp"
#include "irrcent/rootsys.hpp"

namespace irrcent {

// Finite-order inner element given by labels s_0..s_l on the extended
// diagram of a simple root system. Order m = sum a_i s_i (a_0 = 1).
class KacCoordinates {
public:
    KacCoordinates(RootSystemPtr rs, std::vector<int> labels);

    // Label 1 on one extended node, zeros elsewhere.
    static KacCoordinates single(RootSystemPtr rs, int node);

    const RootSystemPtr& root_system() const { return rs_; }
    const std::vector<int>& labels() const { return labels_; }
    int order() const { return order_; }

    // Degree sum_{i>=1} s_i n_i(alpha) mod m of a root (simple-root basis).
    int degree(const Weight& root) const;

private:
    RootSystemPtr rs_;
    std::vector<int> labels_;
    int order_ = 1;
};

struct TorsionCentralizer {
    SemisimpleTypeLabel type;
    int rank_deficit = 0;        // rank of the central torus
    std::vector<int> zero_nodes;  // extended nodes with label 0
};

TorsionCentralizer torsion_centralizer(const KacCoordinates& kac);

// c_j = multiplicity of the eigenvalue zeta^j on the adjoint module.
struct EigenvalueProfile {
    int order = 1;
    std::vector<long long> counts;

    long long total() const;
    bool is_real() const;  // c_j == c_{m-j}
    bool operator==(const EigenvalueProfile&) const = default;
};

EigenvalueProfile eigenvalue_profile(const KacCoordinates& kac);

// Profile of x^k, of order m / gcd(m, k).
EigenvalueProfile power_profile(const EigenvalueProfile& p, int k);

// sum_j c_j zeta^(j*power), exact in Z[zeta_m].
CyclotomicInteger adjoint_trace(const KacCoordinates& kac, int power = 1);
CyclotomicInteger profile_trace(const EigenvalueProfile& p, int power = 1);

// Value of a real trace; throws std::domain_error if it is not rational.
long long rational_trace(const CyclotomicInteger& t);

struct TorsionClass {
    std::string name;  // filled by name_classes
    int order = 1;
    KacCoordinates kac;
    TorsionCentralizer centralizer;
    EigenvalueProfile profile;
};

// Elements with a single label 1 at an extended node of mark >= 2, one per
// orbit of the extended-diagram automorphism group. Sorted by order, then
// centralizer dimension (descending), then label vector.
std::vector<TorsionClass> enumerate_irreducible_elements(RootSystemPtr rs);

struct ClassName {
    std::string name;
    SemisimpleTypeLabel centralizer;
};

// Names from a (group-specific) list matched by centralizer type. Throws
// if some class has no unique match.
void name_classes(std::vector<TorsionClass>& classes, const std::vector<ClassName>& names);

nlohmann::json torsion_class_to_json(const TorsionClass& c);

}  // namespace irrcent
