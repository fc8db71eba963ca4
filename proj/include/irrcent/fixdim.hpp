#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "irrcent/rational.hpp"

namespace irrcent {

enum class TraceProvenance { KacComputed, Quoted, SolvedFromRow };

std::string to_string(TraceProvenance p);
TraceProvenance parse_provenance(const std::string& text);

struct TraceEntry {
    Rational value;
    TraceProvenance provenance = TraceProvenance::KacComputed;
    std::string note;  // e.g. the row a solved value came from
};

// Traces on the adjoint module of one ambient group, keyed by class label.
class TraceTable {
public:
    TraceTable() = default;
    explicit TraceTable(std::string group) : group_(std::move(group)) {}

    const std::string& group() const { return group_; }
    const std::map<std::string, TraceEntry>& entries() const { return entries_; }

    void set(const std::string& label, Rational value, TraceProvenance p, std::string note = {});
    bool has(const std::string& label) const { return entries_.count(label) > 0; }
    const TraceEntry& at(const std::string& label) const;
    void erase(const std::string& label) { entries_.erase(label); }

    nlohmann::json to_json() const;
    static TraceTable from_json(const nlohmann::json& j);

private:
    std::string group_;
    std::map<std::string, TraceEntry> entries_;
};

struct FusionEntry {
    std::string label;
    long long count = 0;
};

// Non-identity elements of F by class: "2A^10,2B^15,5A^24".
struct ClassFusion {
    long long group_order = 1;
    std::vector<FusionEntry> entries;

    // group_order 0 means |F| = 1 + sum of counts.
    static ClassFusion parse(const std::string& text, long long group_order = 0);
    long long count_sum() const;
    bool counts_consistent() const { return count_sum() == group_order - 1; }
    std::string to_string() const;
};

class UnresolvedLabel : public std::runtime_error {
public:
    explicit UnresolvedLabel(const std::string& label)
        : std::runtime_error("no trace for class " + label), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// (adjoint_dim + sum count * trace) / |F|. Throws UnresolvedLabel.
Rational fixed_point_dimension(long long adjoint_dim, const ClassFusion& fusion, const TraceTable& traces);

struct TraceEquation {
    ClassFusion fusion;
    long long expected = 0;  // dimension of the listed centralizer
    bool cyclic = false;
    std::string source;
};

struct SolveResult {
    TraceTable table;
    std::vector<std::string> unsolved;
    std::vector<std::string> findings;  // inconsistent rows, conflicting solutions
};

// Unknown traces from the rows: first an exact solve of the cyclic rows,
// then non-cyclic rows with a single remaining unknown (all such rows must
// agree), then every row is checked against the result.
SolveResult solve_traces(long long adjoint_dim, const std::vector<TraceEquation>& rows, const TraceTable& known);

}  // namespace irrcent
