#pragma once

#include <string>
#include <vector>

#include "irrcent/repth.hpp"

namespace irrcent {

// Inclusion of a subgroup H (source) in G (target). weight_map has
// rank(H) rows and rank(G) columns; the restriction of a G-weight mu is
// weight_map * mu.
struct Embedding {
    RootSystemPtr source;
    RootSystemPtr target;
    IntMatrix weight_map;
    std::string name;
};

Character restrict(const Character& ch, const Embedding& emb);

// K < H < G from K < H (inner) and H < G (outer).
Embedding compose(const Embedding& inner, const Embedding& outer);

Embedding identity_embedding(RootSystemPtr rs);

// Subsystem spanned by the given roots of G (simple-root basis), taken in
// the Bourbaki order of `types`. Throws if the roots do not form a simple
// system of that type.
Embedding subsystem_embedding(RootSystemPtr g, const std::vector<Weight>& roots, const std::vector<SimpleType>& types);

// Same, with the type and node order found automatically.
Embedding subsystem_embedding(RootSystemPtr g, const std::vector<Weight>& roots);

// Maximal rank subsystem of a simple G obtained by deleting one node of the
// extended diagram (node 0 is -theta).
Embedding node_deletion(RootSystemPtr g, int node);

// Levi subsystem on a set of simple nodes.
Embedding levi_embedding(RootSystemPtr g, const std::vector<int>& nodes);

// H < SL(V), H < SO(V), H < Sp(V) for a module V of H given by its character.
Embedding sl_embedding(const Character& v);
Embedding orthogonal_embedding(const Character& v);
Embedding symplectic_embedding(const Character& v);

// H1 x H2 x ... < G1 x G2 x ... componentwise.
Embedding product_embedding(const std::vector<Embedding>& parts);

// H < G1 x G2 x ... from maps H < Gi with a common source.
Embedding fiber_embedding(RootSystemPtr h, const std::vector<Embedding>& parts);

// Component c of H mapped identically onto a simple group of the same type.
Embedding component_identity(RootSystemPtr h, std::size_t comp);

// Highest weights given per component, e.g. {{2},{0,1,0}}.
Weight product_weight(const RootSystem& rs, const std::vector<std::vector<int>>& per_component);

// Character of H that is a sum of irreducibles (highest weights given in
// the concatenated basis).
Character module_of(RootSystemPtr h, const std::vector<Weight>& highest_weights);

// Maximal rank subsystem of a simple G whose type matches `wanted` (up to
// normalization), found by breadth-first iterated extended-diagram node
// deletion. The source components come in the order of `wanted`. Throws if
// no such subsystem is reached.
Embedding find_maximal_rank_subsystem(RootSystemPtr g, const SemisimpleTypeLabel& wanted);

}  // namespace irrcent
