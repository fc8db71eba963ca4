#include "irrcent/tables.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#ifndef IRRCENT_DEFAULT_DATA_DIR
#define IRRCENT_DEFAULT_DATA_DIR "data/tables"
#endif

namespace irrcent {

namespace {

std::string trim(const std::string& s)
{
    const auto l = s.find_first_not_of(" \t\r");
    if (l == std::string::npos) return {};
    return s.substr(l, s.find_last_not_of(" \t\r") - l + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        const auto k = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, k == std::string::npos ? std::string::npos : k - pos)));
        if (k == std::string::npos) break;
        pos = k + 1;
    }
    return out;
}

struct Record {
    int line;
    std::vector<std::string> fields;
};

// Non-comment lines of a '|' separated file with exactly `arity` fields.
std::vector<Record> records(const std::string& text, std::size_t arity, const std::string& id)
{
    std::vector<Record> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto f = split(t, '|');
        if (f.size() != arity)
            throw TableError(id + ":" + std::to_string(no) + ": expected " + std::to_string(arity) + " fields, found " +
                             std::to_string(f.size()));
        out.push_back({no, std::move(f)});
    }
    if (out.empty()) throw TableError(id + ": no records");
    return out;
}

std::string read_file(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw TableError("cannot open " + file.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

[[noreturn]] void field_error(const std::string& id, int line, const std::string& field, const std::string& what)
{
    throw TableError(id + ":" + std::to_string(line) + ": field " + field + ": " + what);
}

bool known_group(const std::string& g)
{
    if (g == "AutE6" || g == "AutD4") return true;
    try {
        SimpleType::parse(g);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

long long factorial(long long n)
{
    long long f = 1;
    for (long long k = 2; k <= n; ++k) f *= k;
    return f;
}

long long ipow(long long b, long long e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::optional<long long> atom_order(const std::string& a)
{
    static const std::regex num(R"((\d+))"), power(R"((\d+)\^\{?(\d+)\}?)"),
        extraspecial(R"((\d+)\^\{(\d+)\+(\d+)\}_[+-])"), named(R"((Dih|Q|Sym|Alt|Frob|G)(\d+))"),
        linear(R"((SL|GL|PSL)2\((\d+)\))");
    std::smatch m;
    if (std::regex_match(a, m, num)) return std::stoll(m[1].str());
    if (std::regex_match(a, m, power)) return ipow(std::stoll(m[1].str()), std::stoll(m[2].str()));
    if (std::regex_match(a, m, extraspecial))
        return ipow(std::stoll(m[1].str()), std::stoll(m[2].str()) + std::stoll(m[3].str()));
    if (std::regex_match(a, m, named)) {
        const std::string k = m[1].str();
        const long long n = std::stoll(m[2].str());
        if (k == "Sym") return factorial(n);
        if (k == "Alt") return factorial(n) / 2;
        return n;
    }
    if (std::regex_match(a, m, linear)) {
        const long long q = std::stoll(m[2].str());
        const long long sl = q * (q * q - 1);
        if (m[1].str() == "SL") return sl;
        if (m[1].str() == "GL") return sl * (q - 1);
        return q % 2 ? sl / 2 : sl;
    }
    return std::nullopt;
}

}  // namespace

PConstraint PConstraint::parse(const std::string& text)
{
    static const std::regex re(R"(p\s*(!=|=)\s*(\d+(?:\s*,\s*\d+)*))");
    const std::string t = trim(text);
    PConstraint c;
    if (t.empty() || t == "-") return c;
    std::smatch m;
    if (!std::regex_match(t, m, re)) throw std::invalid_argument("bad characteristic constraint: " + text);
    c.kind = m[1].str() == "=" ? Kind::Equal : Kind::NotIn;
    for (const auto& s : split(m[2].str(), ',')) c.primes.push_back(std::stoi(s));
    if (c.kind == Kind::Equal && c.primes.size() != 1) throw std::invalid_argument("p= takes one prime: " + text);
    return c;
}

std::string PConstraint::to_string() const
{
    if (kind == Kind::Any) return "-";
    std::string out = kind == Kind::Equal ? "p=" : "p!=";
    for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + std::to_string(primes[i]);
    return out;
}

bool PConstraint::admits(int p) const
{
    switch (kind) {
    case Kind::Any: return true;
    case Kind::Equal: return p == primes.front();
    case Kind::NotIn: return std::find(primes.begin(), primes.end(), p) == primes.end();
    }
    return false;
}

bool PConstraint::compatible(const PConstraint& other) const
{
    for (int p : {0, 2, 3, 5, 7, 11, 13})
        if (admits(p) && other.admits(p)) return true;
    return false;
}

bool TableRow::cyclic() const
{
    return !f_name.empty() && std::all_of(f_name.begin(), f_name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string TableRow::summary() const { return group + " " + f_name + " -> " + centralizer_text; }

std::vector<ClassRecord> TableSet::classes_of(const std::string& group) const
{
    std::vector<ClassRecord> out;
    for (const auto& c : classes)
        if (c.group == group) out.push_back(c);
    return out;
}

const std::vector<std::string>& group_table_ids()
{
    static const std::vector<std::string> ids{"e8", "e7", "e6", "aute6", "f4", "g2", "d4"};
    return ids;
}

const std::vector<std::string>& all_table_ids()
{
    static const std::vector<std::string> ids{"e8", "e7", "e6", "aute6", "f4", "g2", "d4", "max",
                                              "irrcents", "ae6", "d4classes", "graphcent", "norms", "traces"};
    return ids;
}

std::filesystem::path default_data_dir()
{
    if (const char* env = std::getenv("LCA_DATA_DIR"); env && *env) return env;
    return IRRCENT_DEFAULT_DATA_DIR;
}

std::optional<long long> abstract_group_order(const std::string& name)
{
    const std::string n = trim(name);
    if (n.empty()) return std::nullopt;
    long long total = 1;
    for (const auto& ext : split(n, '.')) {
        for (const auto& factor : split(ext, 'x')) {
            // central product "4oDih8": 'o' right after a digit
            std::vector<std::string> parts;
            std::size_t start = 0;
            for (std::size_t i = 1; i + 1 < factor.size(); ++i)
                if (factor[i] == 'o' && std::isdigit(static_cast<unsigned char>(factor[i - 1]))) {
                    parts.push_back(factor.substr(start, i - start));
                    start = i + 1;
                }
            parts.push_back(factor.substr(start));
            long long f = 1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                auto o = atom_order(parts[i]);
                if (!o) return std::nullopt;
                f *= *o;
                if (i) f /= 2;
            }
            total *= f;
        }
    }
    return total;
}

std::optional<std::string> expand_prime_shorthand(TableRow& row)
{
    if (!row.cyclic() || row.fusion.entries.size() != 1 || row.fusion.entries[0].count != 1) return std::nullopt;
    const long long p = row.f_order;
    if (p <= 2) return std::nullopt;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return std::nullopt;
    auto& e = row.fusion.entries[0];
    e.count = p - 1;
    const std::string note = "fusion '" + row.fusion_text + "' read as " + e.label + "^" + std::to_string(p - 1) +
                             " (all generators of a cyclic group of prime order are powers of one another)";
    row.notes.push_back(note);
    return note;
}

std::vector<TableRow> parse_group_table(const std::string& text, const std::string& id)
{
    std::vector<TableRow> rows;
    for (const auto& rec : records(text, 8, id)) {
        const auto& f = rec.fields;
        TableRow r;
        r.table_id = id;
        r.line = rec.line;
        r.group = f[0];
        if (!known_group(r.group)) field_error(id, rec.line, "group", "unknown group '" + f[0] + "'");
        r.f_name = f[1];
        const auto abstract = abstract_group_order(f[1]);
        if (!abstract) field_error(id, rec.line, "F_name", "unknown abstract group '" + f[1] + "'");
        try {
            r.f_order = std::stoll(f[2]);
        } catch (const std::exception&) {
            field_error(id, rec.line, "F_order", "not an integer: '" + f[2] + "'");
        }
        if (r.f_order != *abstract)
            field_error(id, rec.line, "F_order", f[2] + " does not match |" + f[1] + "| = " + std::to_string(*abstract));
        try {
            r.centralizer = SemisimpleTypeLabel::parse(f[3]);
        } catch (const std::exception& e) {
            field_error(id, rec.line, "centralizer", e.what());
        }
        r.centralizer_text = f[3];
        r.fusion_text = f[4];
        try {
            r.fusion = ClassFusion::parse(f[4], r.f_order);
        } catch (const std::exception& e) {
            field_error(id, rec.line, "fusion", e.what());
        }
        try {
            r.p = PConstraint::parse(f[5]);
        } catch (const std::exception& e) {
            field_error(id, rec.line, "p_constraint", e.what());
        }
        if (!f[6].empty()) {
            try {
                r.overgroup = SemisimpleTypeLabel::parse(f[6]);
            } catch (const std::exception& e) {
                field_error(id, rec.line, "overgroup", e.what());
            }
        }
        for (const auto& flag : split(f[7], ';')) {
            if (flag.empty()) continue;
            if (flag == "expect-fail") r.expect_fail = true;
            else if (flag.rfind("inner=", 0) == 0) r.inner = flag.substr(6);
            else field_error(id, rec.line, "flags", "unknown flag '" + flag + "'");
        }
        expand_prime_shorthand(r);
        if (!r.fusion.entries.empty() && !r.fusion.counts_consistent())
            field_error(id, rec.line, "fusion", "counts sum to " + std::to_string(r.fusion.count_sum()) + ", expected " +
                                                    std::to_string(r.f_order - 1));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<TableRow> load_table_file(const std::filesystem::path& file, const std::string& id)
{
    return parse_group_table(read_file(file), id);
}

TableSet load_tables(const std::filesystem::path& dir)
{
    TableSet ts;
    ts.dir = dir;
    for (const auto& id : group_table_ids()) ts.tables[id] = load_table_file(dir / (id + ".tbl"), id);
    ts.tables["max"] = load_table_file(dir / "max.tbl", "max");

    for (const auto& rec : records(read_file(dir / "irrcents.tbl"), 3, "irrcents")) {
        ClassRecord c{"irrcents", rec.line, rec.fields[0], rec.fields[1], {}, {}, {}};
        if (!known_group(c.group)) field_error("irrcents", rec.line, "group", "unknown group");
        c.centralizer = SemisimpleTypeLabel::parse(rec.fields[2]);
        ts.classes.push_back(std::move(c));
    }
    for (const std::string id : {"ae6", "d4classes"})
        for (const auto& rec : records(read_file(dir / (id + ".tbl")), 5, id)) {
            ClassRecord c{id, rec.line, rec.fields[0], rec.fields[1], {}, {}, {}};
            if (!known_group(c.group)) field_error(id, rec.line, "group", "unknown group");
            try {
                c.centralizer = SemisimpleTypeLabel::parse(rec.fields[2]);
                c.p = PConstraint::parse(rec.fields[3]);
            } catch (const std::exception& e) {
                field_error(id, rec.line, "centralizer/p_constraint", e.what());
            }
            for (const auto& pw : split(rec.fields[4], ','))
                if (!pw.empty()) c.powers.push_back(pw);
            ts.classes.push_back(std::move(c));
        }
    for (const auto& rec : records(read_file(dir / "graphcent.tbl"), 4, "graphcent")) {
        GraphCentralizerRow g{rec.line, rec.fields[0], 0, rec.fields[2], {}};
        try {
            g.order = std::stoi(rec.fields[1]);
            g.p = PConstraint::parse(rec.fields[3]);
        } catch (const std::exception& e) {
            field_error("graphcent", rec.line, "order/p_constraint", e.what());
        }
        ts.graph_centralizers.push_back(std::move(g));
    }
    for (const auto& rec : records(read_file(dir / "norms.tbl"), 3, "norms")) {
        NormalizerRow n{rec.line, rec.fields[0], {}, rec.fields[2]};
        if (!known_group(n.group)) field_error("norms", rec.line, "group", "unknown group");
        n.m = SemisimpleTypeLabel::parse(rec.fields[1]);
        ts.normalizers.push_back(std::move(n));
    }
    for (const auto& rec : records(read_file(dir / "traces.tbl"), 3, "traces")) {
        QuotedTrace q{rec.fields[0], rec.fields[1], 0};
        try {
            q.trace = std::stoll(rec.fields[2]);
        } catch (const std::exception&) {
            field_error("traces", rec.line, "trace", "not an integer");
        }
        ts.quoted_traces.push_back(std::move(q));
    }
    return ts;
}

}  // namespace irrcent
