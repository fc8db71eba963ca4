#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "irrcent/fixdim.hpp"
#include "irrcent/tables.hpp"
#include "irrcent/torsion.hpp"

namespace irrcent {

enum class AuditStatus { Pass, Fail, Flagged, NotChecked };
std::string to_string(AuditStatus s);

struct AuditEntry {
    std::string table_id;
    int line = 0;
    std::string row;
    std::string check;
    AuditStatus status = AuditStatus::Pass;
    std::string computed;
    std::string expected;
    std::vector<std::string> provenance;
    std::vector<std::string> notes;
};

struct AuditReport {
    std::vector<AuditEntry> entries;

    void append(const AuditReport& other);
    std::size_t count(AuditStatus s) const;
    bool has_unflagged_failure() const { return count(AuditStatus::Fail) > 0; }
    std::string to_markdown(const std::string& title = "Audit report") const;
    nlohmann::json to_json() const;
};

struct AuditOptions {
    bool strip_flags = false;  // treat expect-fail rows as ordinary rows
};

// Adjoint dimension of the ambient group of a table ("AutE6" -> 78).
long long ambient_adjoint_dimension(const std::string& group);

// Simple group whose Kac classes are the inner classes ("AutE6" -> E6).
std::string inner_group(const std::string& group);

// Named Kac classes of a group (E8, ..., G2, E6 for AutE6, D4 for AutD4).
std::vector<TorsionClass> named_torsion_classes(const TableSet& ts, const std::string& group);

// The cyclic group <x> of a class as a fusion: powers from the class table
// where printed, otherwise matched on Kac eigenvalue profiles.
ClassFusion class_fusion(const TableSet& ts, const std::string& group, const std::string& cls);

enum class TraceSource {
    Kac,          // inner traces from Kac coordinates, the rest solved
    QuotedOnly,   // only quoted traces (and Kac traces of the inner group of AutE6/AutD4) are known
};

struct TraceContext {
    std::map<std::string, TraceTable> tables;
    std::map<std::string, SolveResult> solves;
    std::map<std::string, std::vector<TraceEquation>> equations;
};

std::vector<TraceEquation> trace_equations(const TableSet& ts, const std::string& group, const AuditOptions& opt = {});

// Traces for every group with a table. `drop` removes (group, class)
// pairs from the known values before solving.
TraceContext build_trace_context(const TableSet& ts, TraceSource source = TraceSource::Kac, const AuditOptions& opt = {},
                                 const std::set<std::pair<std::string, std::string>>& drop = {});

AuditReport audit_dimension_identity(const std::vector<TableRow>& rows, const TraceContext& ctx, const AuditOptions& opt = {});
AuditReport audit_class_rows(const TableSet& ts, const TraceContext& ctx);
AuditReport audit_structure(const std::vector<TableRow>& rows, const TableSet& ts, const AuditOptions& opt = {});
AuditReport audit_torsion_table(const TableSet& ts);
AuditReport audit_quoted_traces(const TableSet& ts, const TraceContext& ctx);
AuditReport audit_graph_centralizers(const TableSet& ts);
AuditReport audit_normalizers(const TableSet& ts);
AuditReport audit_trace_solve(const TraceContext& ctx);

// Everything, in canonical order.
AuditReport verify_all(const TableSet& ts, const AuditOptions& opt = {});
// One table id from all_table_ids().
AuditReport verify_table(const TableSet& ts, const std::string& id, const AuditOptions& opt = {});

}  // namespace irrcent
