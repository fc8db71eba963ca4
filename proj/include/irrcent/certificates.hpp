#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irrcent/embeddings.hpp"
#include "irrcent/tables.hpp"
#include "irrcent/tabver.hpp"

namespace irrcent {

// Named inclusion X < ... < G, built on demand.
struct NamedChain {
    std::string group;        // ambient simple group, e.g. "E8"
    std::string name;         // e.g. "B2^3"
    std::string f_name;       // table row it certifies, empty if none
    std::string centralizer;  // type of X as printed in the tables
    std::string description;
    std::function<Embedding()> build;
};

const std::vector<NamedChain>& named_chains();

// Chain by name; maximal rank subsystem labels ("A2*E6") are accepted too.
// Throws std::invalid_argument if nothing matches.
Embedding find_chain(const std::string& group, const std::string& name);

struct BranchResult {
    Embedding embedding;
    Character restricted;
    std::vector<CompositionFactor> factors;
};

// V_G(highest_weight) restricted along the chain; the adjoint module when
// no weight is given.
BranchResult branch(const std::string& group, const std::string& chain, const std::optional<Weight>& highest_weight = {});

AuditReport audit_irreducibility_certificates(const std::vector<TableRow>& rows);

}  // namespace irrcent
