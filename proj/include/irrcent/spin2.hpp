#pragma once

#include <string>
#include <vector>

#include "irrcent/semisimple_type.hpp"

namespace irrcent {

// Diagonal element of SO_n, entries +-1 with an even number of -1.
class SignVector {
public:
    explicit SignVector(std::vector<int> signs);

    // Run-length notation "(-1^6,1^10)"; a bare entry counts once.
    static SignVector parse(const std::string& text);

    int n() const { return static_cast<int>(signs_.size()); }
    const std::vector<int>& signs() const { return signs_; }
    int weight() const;  // number of -1 entries
    std::vector<int> support() const;
    std::string to_string() const;
    bool operator==(const SignVector&) const = default;

private:
    std::vector<int> signs_;
};

struct EigenPartition {
    std::vector<std::vector<int>> blocks;  // 0-based coordinates, ordered by first element
    std::vector<int> sizes() const;
};

// Coordinates grouped by joint sign pattern. n is needed for an empty list.
EigenPartition eigen_partition(const std::vector<SignVector>& vectors, int n);

struct SoCentralizer {
    SemisimpleTypeLabel type;  // SO3 = B1, SO4 = A1^2, SO6 = A3, SO_{2k+1} = Bk, SO_{2k} = Dk
    std::vector<int> block_sizes;
    int rank_deficit = 0;  // one per block of size 2
    bool has_torus_block = false;
};

SoCentralizer so_centralizer_type(const std::vector<SignVector>& vectors, int n);

struct LiftOrder {
    int order = 2;
    bool trivial = false;  // the identity; reported with order 2
};

// Order of a lift to the spin group: 2 iff 4 divides the number of -1.
LiftOrder spin_lift_order(const SignVector& v);

// Lifts commute iff the supports meet in an even number of coordinates.
bool lift_commute(const SignVector& u, const SignVector& v);

struct TwoGroupType {
    std::string name;  // "2^k", "4", "4x2", "Dih8", "Q8", "Dih8x2", "Q8x2", "4oDih8", "2^{1+4}_-", or "unrecognized"
    int order = 1;
    int exponent = 1;
    bool recognized = false;
};

// Catalogue names, in lookup order.
const std::vector<std::string>& two_group_catalogue();

// Group generated by spin lifts of the vectors (and the central element
// when include_center is set), built explicitly and matched against the
// catalogue.
TwoGroupType identify_2group(const std::vector<SignVector>& vectors, bool include_center = false);

enum class ClassicalKind { Symplectic, Orthogonal };

struct ClassicalAmbient {
    ClassicalKind kind;
    int dimension;  // of the natural module

    static ClassicalAmbient parse(const std::string& text);  // "Sp8", "SO16"
};

struct ClassicalCentralizer {
    SemisimpleTypeLabel type;
    int discarded = 0;  // natural-module dimensions not covered by blocks
    bool has_torus_block = false;
};

ClassicalCentralizer classical_centralizer(const std::vector<int>& weight_space_dims, ClassicalAmbient ambient);

struct Summand {
    int dimension = 0;
    bool nondegenerate = true;
    std::string key;  // highest-weight tuple or other equivalence key
};

bool classically_irreducible(const std::vector<Summand>& summands);

}  // namespace irrcent
