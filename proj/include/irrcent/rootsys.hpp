#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "irrcent/semisimple_type.hpp"

namespace irrcent {

// Integer vector. Roots are stored in the simple-root basis, weights in the
// fundamental-weight basis.
using Weight = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// Symmetric Gram matrix (alpha_i, alpha_j) of the simple roots of one simple
// type, Bourbaki labelling, short roots of squared length 2.
IntMatrix standard_gram(SimpleType t);

// C[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
IntMatrix cartan_from_gram(const IntMatrix& gram);

// Semisimple root system, stored as an ordered product of simple components
// with block-diagonal data. Rank 0 is allowed (the trivial group).
class RootSystem {
public:
    RootSystem() = default;
    explicit RootSystem(SimpleType t);
    explicit RootSystem(std::vector<SimpleType> components);

    const std::vector<SimpleType>& components() const { return comps_; }
    int component_offset(std::size_t c) const { return offsets_.at(c); }
    int component_of_node(int node) const;
    int rank() const { return static_cast<int>(cartan_.size()); }
    bool is_simple() const { return comps_.size() == 1; }
    SimpleType type() const;
    std::string name() const;

    const IntMatrix& cartan() const { return cartan_; }
    const IntMatrix& gram() const { return gram_; }

    // All roots in the simple-root basis, positive ones first ordered by
    // height then lexicographically, followed by their negatives.
    const std::vector<Weight>& roots() const { return roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    bool is_root(const Weight& r) const { return root_set_.count(r) > 0; }

    Weight root_to_weight(const Weight& r) const;
    long long root_inner(const Weight& x, const Weight& y) const;  // in gram units

    Weight highest_root(std::size_t comp = 0) const;  // simple-root basis, full length
    std::vector<int> marks(std::size_t comp = 0) const;

    int adjoint_dimension() const { return rank() + static_cast<int>(roots_.size()); }
    unsigned long long weyl_order() const;

    // Inner product of weights, multiplied by weight_scale() to stay integral.
    long long inner(const Weight& a, const Weight& b) const;
    long long weight_scale() const { return wscale_; }

    // Linear functional taking the value height_scale() on every simple root.
    long long height(const Weight& mu) const;
    long long height_scale() const { return hscale_; }

    Weight reflect(const Weight& mu, int i) const;
    bool is_dominant(const Weight& mu) const;
    Weight dominant_representative(const Weight& mu) const;
    Weight zero_weight() const { return Weight(static_cast<std::size_t>(rank()), 0); }

    // Weights in the root lattice? (coordinates of mu in the simple-root basis integral)
    bool in_root_lattice(const Weight& mu) const;

private:
    void build();

    std::vector<SimpleType> comps_;
    std::vector<int> offsets_;
    IntMatrix gram_;
    IntMatrix cartan_;
    IntMatrix wgram_;  // scaled (omega_i, omega_j)
    long long wscale_ = 1;
    std::vector<long long> hcoef_;
    long long hscale_ = 1;
    IntMatrix inv_cartan_num_;  // scaled inverse of the Cartan matrix
    long long inv_cartan_den_ = 1;
    std::vector<Weight> roots_;
    std::vector<Weight> positive_;
    std::set<Weight> root_set_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(SimpleType t);
RootSystemPtr build_root_system(const std::vector<SimpleType>& comps);
RootSystemPtr build_root_system(const SemisimpleTypeLabel& label);

std::vector<int> highest_root_marks(const RootSystem& rs);

// Orbit of a weight under the Weyl group, by closure under simple
// reflections. Sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu);

// |W . mu| computed as |W| / |W_mu| from the stabilizer's diagram.
unsigned long long orbit_size(const RootSystem& rs, const Weight& mu);

// Type of the fixed points of a diagram automorphism of the given order
// (generic characteristic).
SemisimpleTypeLabel fold(const RootSystem& rs, int automorphism_order);

// Components of a Cartan-type matrix identified with standard types;
// nodes[c][k] is the input index playing the role of Bourbaki node k+1
// of component c.
struct DiagramIdentification {
    std::vector<SimpleType> types;
    std::vector<std::vector<int>> nodes;
};
DiagramIdentification identify_diagram(const IntMatrix& cartan);

// All permutations p with cartan[p[a]][p[b]] == cartan[a][b].
std::vector<std::vector<int>> diagram_automorphisms(const IntMatrix& cartan);

// Extended diagram: node 0 is the lowest root -theta, nodes 1..l the simple
// roots. Returned as roots in the simple-root basis.
std::vector<Weight> extended_nodes(const RootSystem& simple_rs);
IntMatrix extended_cartan(const RootSystem& simple_rs);
std::vector<int> extended_marks(const RootSystem& simple_rs);  // a_0 = 1 first

// Cartan matrix of an arbitrary list of roots of rs.
IntMatrix cartan_of_roots(const RootSystem& rs, const std::vector<Weight>& roots);

// Maximal rank semisimple subsystems reachable by iterated deletion of one
// node from an extended diagram (Borel-de Siebenthal), as sorted
// normalized type lists. Includes the type itself.
std::set<std::vector<SimpleType>> maximal_rank_subsystems(SimpleType t);

}  // namespace irrcent
