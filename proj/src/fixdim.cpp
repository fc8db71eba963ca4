#include "irrcent/fixdim.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace irrcent {

std::string to_string(TraceProvenance p)
{
    switch (p) {
    case TraceProvenance::KacComputed: return "kac-computed";
    case TraceProvenance::Quoted: return "quoted";
    case TraceProvenance::SolvedFromRow: return "solved-from-row";
    }
    return "?";
}

TraceProvenance parse_provenance(const std::string& text)
{
    if (text == "kac-computed") return TraceProvenance::KacComputed;
    if (text == "quoted") return TraceProvenance::Quoted;
    if (text == "solved-from-row") return TraceProvenance::SolvedFromRow;
    throw std::invalid_argument("unknown trace provenance: " + text);
}

void TraceTable::set(const std::string& label, Rational value, TraceProvenance p, std::string note)
{
    entries_[label] = {value, p, std::move(note)};
}

const TraceEntry& TraceTable::at(const std::string& label) const
{
    auto it = entries_.find(label);
    if (it == entries_.end()) throw UnresolvedLabel(label);
    return it->second;
}

nlohmann::json TraceTable::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [label, e] : entries_)
        arr.push_back({{"group", group_}, {"class", label}, {"trace", irrcent::to_string(e.value)},
                       {"provenance", irrcent::to_string(e.provenance)}, {"note", e.note}});
    return {{"schema_version", 1}, {"group", group_}, {"traces", arr}};
}

namespace {

Rational parse_rational(const std::string& s)
{
    static const std::regex re(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad rational: " + s);
    return Rational(std::stoll(m[1].str()), m[2].matched ? std::stoll(m[2].str()) : 1);
}

}  // namespace

TraceTable TraceTable::from_json(const nlohmann::json& j)
{
    TraceTable t(j.at("group").get<std::string>());
    for (const auto& e : j.at("traces")) {
        const auto& v = e.at("trace");
        const Rational q = v.is_number_integer() ? Rational(v.get<long long>()) : parse_rational(v.get<std::string>());
        t.set(e.at("class").get<std::string>(), q, parse_provenance(e.at("provenance").get<std::string>()),
              e.value("note", std::string{}));
    }
    return t;
}

ClassFusion ClassFusion::parse(const std::string& text, long long group_order)
{
    static const std::regex item(R"(\s*(\d+[A-Za-z]+)\s*(?:\^\s*\{?\s*(\d+)\s*\}?)?\s*)");
    ClassFusion f;
    std::size_t pos = 0;
    const bool blank = text.find_first_not_of(" \t") == std::string::npos;
    while (!blank) {
        const auto comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::smatch m;
        if (!std::regex_match(tok, m, item)) throw std::invalid_argument("bad fusion entry '" + tok + "' in " + text);
        const long long c = m[2].matched ? std::stoll(m[2].str()) : 1;
        if (c <= 0) throw std::invalid_argument("fusion counts must be positive: " + text);
        f.entries.push_back({m[1].str(), c});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    f.group_order = group_order > 0 ? group_order : f.count_sum() + 1;
    return f;
}

long long ClassFusion::count_sum() const
{
    long long s = 0;
    for (const auto& e : entries) s += e.count;
    return s;
}

std::string ClassFusion::to_string() const
{
    std::string out;
    for (const auto& e : entries) {
        if (!out.empty()) out += ',';
        out += e.label;
        if (e.count != 1) out += "^" + std::to_string(e.count);
    }
    return out;
}

Rational fixed_point_dimension(long long adjoint_dim, const ClassFusion& fusion, const TraceTable& traces)
{
    if (fusion.group_order < 1) throw std::invalid_argument("fixed_point_dimension: group order must be positive");
    Rational sum(adjoint_dim);
    for (const auto& e : fusion.entries) sum += Rational(e.count) * traces.at(e.label).value;
    return sum / Rational(fusion.group_order);
}

namespace {

// Row: sum_k coef[k] x_k = rhs, with x the unknowns.
struct LinearRow {
    std::vector<Rational> coef;
    Rational rhs;
    std::string source;
};

bool is_zero(const Rational& q) { return q.numerator() == 0; }

LinearRow linearize(long long adjoint_dim, const TraceEquation& eq, const TraceTable& known,
                    const std::vector<std::string>& unknowns)
{
    LinearRow r{std::vector<Rational>(unknowns.size()), Rational(eq.expected * eq.fusion.group_order - adjoint_dim),
                eq.source};
    for (const auto& e : eq.fusion.entries) {
        auto it = std::find(unknowns.begin(), unknowns.end(), e.label);
        if (it != unknowns.end()) r.coef[static_cast<std::size_t>(it - unknowns.begin())] += Rational(e.count);
        else r.rhs -= Rational(e.count) * known.at(e.label).value;
    }
    return r;
}

}  // namespace

SolveResult solve_traces(long long adjoint_dim, const std::vector<TraceEquation>& rows, const TraceTable& known)
{
    SolveResult res;
    res.table = known;

    std::set<std::string> unknown_set;
    for (const auto& r : rows)
        for (const auto& e : r.fusion.entries)
            if (!known.has(e.label)) unknown_set.insert(e.label);
    const std::vector<std::string> unknowns(unknown_set.begin(), unknown_set.end());
    const std::size_t n = unknowns.size();

    // phase 1: reduced row echelon form of the cyclic rows
    std::vector<LinearRow> sys;
    for (const auto& r : rows)
        if (r.cyclic) sys.push_back(linearize(adjoint_dim, r, known, unknowns));
    std::vector<int> pivot_of(n, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < sys.size(); ++c) {
        std::size_t p = rank;
        while (p < sys.size() && is_zero(sys[p].coef[c])) ++p;
        if (p == sys.size()) continue;
        std::swap(sys[p], sys[rank]);
        const Rational piv = sys[rank].coef[c];
        for (auto& x : sys[rank].coef) x /= piv;
        sys[rank].rhs /= piv;
        for (std::size_t r = 0; r < sys.size(); ++r) {
            if (r == rank || is_zero(sys[r].coef[c])) continue;
            const Rational f = sys[r].coef[c];
            for (std::size_t k = 0; k < n; ++k) sys[r].coef[k] -= f * sys[rank].coef[k];
            sys[r].rhs -= f * sys[rank].rhs;
        }
        pivot_of[c] = static_cast<int>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < sys.size(); ++r)
        if (!is_zero(sys[r].rhs)) res.findings.push_back("cyclic rows are inconsistent");
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_of[c] < 0) continue;
        const auto& row = sys[static_cast<std::size_t>(pivot_of[c])];
        bool alone = true;
        for (std::size_t k = 0; k < n; ++k)
            if (k != c && !is_zero(row.coef[k])) alone = false;
        if (alone) res.table.set(unknowns[c], row.rhs, TraceProvenance::SolvedFromRow, "cyclic rows");
    }

    // phase 2: non-cyclic rows with a single unknown left, until nothing changes
    for (bool progress = true; progress;) {
        progress = false;
        std::map<std::string, std::vector<std::pair<Rational, std::string>>> candidates;
        for (const auto& r : rows) {
            if (r.cyclic) continue;
            std::set<std::string> left;
            for (const auto& e : r.fusion.entries)
                if (!res.table.has(e.label)) left.insert(e.label);
            if (left.size() != 1) continue;
            const std::string u = *left.begin();
            const auto lr = linearize(adjoint_dim, r, res.table, {u});
            candidates[u].push_back({lr.rhs / lr.coef[0], r.source});
        }
        for (const auto& [u, vals] : candidates) {
            const bool agree = std::all_of(vals.begin(), vals.end(), [&](const auto& v) { return v.first == vals.front().first; });
            if (!agree) {
                std::string msg = "rows disagree on " + u + ":";
                for (const auto& [v, src] : vals) msg += " " + src + " gives " + to_string(v) + ";";
                res.findings.push_back(msg);
                continue;
            }
            std::string note = "single-unknown rows:";
            for (const auto& v : vals) note += " " + v.second;
            res.table.set(u, vals.front().first, TraceProvenance::SolvedFromRow, note);
            progress = true;
        }
    }

    // phase 3: residuals on every row
    for (const auto& u : unknowns)
        if (!res.table.has(u)) res.unsolved.push_back(u);
    for (const auto& r : rows) {
        bool resolvable = true;
        for (const auto& e : r.fusion.entries) resolvable = resolvable && res.table.has(e.label);
        if (!resolvable) continue;
        const Rational d = fixed_point_dimension(adjoint_dim, r.fusion, res.table);
        if (d != Rational(r.expected))
            res.findings.push_back("row " + r.source + ": fixed-point dimension " + to_string(d) + " differs from " +
                                   std::to_string(r.expected));
    }
    std::sort(res.findings.begin(), res.findings.end());
    res.findings.erase(std::unique(res.findings.begin(), res.findings.end()), res.findings.end());
    return res;
}

}  // namespace irrcent
