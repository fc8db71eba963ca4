#include "irrcent/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "irrcent/certificates.hpp"
#include "irrcent/spin2.hpp"
#include "irrcent/tabver.hpp"
#include "irrcent/torsion.hpp"

namespace irrcent {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    std::string data_dir;

    std::string type;
    std::string cls;
    std::string chain;
    std::string labels;
    std::string weight;
    bool list = false;

    std::string group;
    std::string fusion;
    long long order = 0;
    std::vector<std::string> trace_overrides;
    bool quoted_only = false;
    std::vector<std::string> drop;

    int n = 0;
    bool center = false;
    std::vector<std::string> vectors;

    std::string ambient;
    std::vector<std::string> blocks;

    std::string table;
    bool all = false;
    bool strip_flags = false;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (t.empty() || pos != t.size()) throw std::invalid_argument("not an integer list: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

TableSet load(const Options& o)
{
    return load_tables(o.data_dir.empty() ? default_data_dir() : std::filesystem::path(o.data_dir));
}

bool has_named_classes(const std::string& t)
{
    return t == "E8" || t == "E7" || t == "E6" || t == "F4" || t == "G2";
}

int cmd_roots(const Options& o, std::ostream& out)
{
    const auto t = SimpleType::parse(o.type);
    const auto rs = build_root_system(t);
    const auto ext = extended_marks(*rs);
    if (o.json) {
        json j{{"schema_version", 1},
               {"type", t.to_string()},
               {"rank", rs->rank()},
               {"root_count", rs->roots().size()},
               {"positive_root_count", rs->positive_roots().size()},
               {"adjoint_dimension", rs->adjoint_dimension()},
               {"weyl_order", rs->weyl_order()},
               {"marks", highest_root_marks(*rs)},
               {"extended_marks", ext},
               {"highest_root", rs->highest_root()},
               {"cartan", rs->cartan()}};
        if (o.list) j["positive_roots"] = rs->positive_roots();
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "# " << t.to_string() << "\n\n";
    out << "rank " << rs->rank() << ", " << rs->roots().size() << " roots, adjoint dimension " << rs->adjoint_dimension()
        << ", |W| = " << rs->weyl_order() << "\n";
    out << "marks a0; a1..al: 1; " << join_ints(highest_root_marks(*rs)) << "\n";
    out << "highest root: " << join_ints(rs->highest_root()) << "\n\n";
    out << "Cartan matrix:\n\n";
    for (const auto& row : rs->cartan()) {
        out << "   ";
        for (int x : row) out << (x < 0 ? " " : "  ") << x;
        out << "\n";
    }
    if (o.list) {
        out << "\npositive roots:\n\n";
        for (const auto& r : rs->positive_roots()) out << "    " << join_ints(r) << "\n";
    }
    return 0;
}

std::vector<TorsionClass> torsion_classes(const Options& o, const SimpleType& t)
{
    if (has_named_classes(t.to_string())) return named_torsion_classes(load(o), t.to_string());
    return enumerate_irreducible_elements(build_root_system(t));
}

int cmd_torsion_enum(const Options& o, std::ostream& out)
{
    const auto t = SimpleType::parse(o.type);
    const auto classes = torsion_classes(o, t);
    if (o.json) {
        json arr = json::array();
        for (const auto& c : classes) arr.push_back(torsion_class_to_json(c));
        out << json{{"schema_version", 1}, {"type", t.to_string()}, {"classes", arr}}.dump(2) << "\n";
        return 0;
    }
    out << "# " << t.to_string() << ": elements with semisimple centralizer\n\n";
    out << "| class | order | Kac labels | centralizer | dimension | trace |\n|---|---|---|---|---|---|\n";
    for (const auto& c : classes)
        out << "| " << (c.name.empty() ? "-" : c.name) << " | " << c.order << " | " << join_ints(c.kac.labels()) << " | "
            << c.centralizer.type.to_string() << " | " << c.centralizer.type.dimension() << " | "
            << adjoint_trace(c.kac).to_string() << " |\n";
    out << "\n" << classes.size() << " classes\n";
    return 0;
}

int cmd_trace(const Options& o, std::ostream& out)
{
    std::optional<KacCoordinates> kac;
    std::string name = o.cls;
    std::string group = o.type;
    if (!o.labels.empty()) {
        kac.emplace(build_root_system(SimpleType::parse(o.type)), parse_ints(o.labels));
        group = SimpleType::parse(o.type).to_string();
    } else {
        if (o.cls.empty()) throw std::invalid_argument("trace: give a class label or --labels");
        if (o.type != "AutE6" && o.type != "AutD4") {
            group = SimpleType::parse(o.type).to_string();
            if (has_named_classes(group))
                for (const auto& c : named_torsion_classes(load(o), group))
                    if (c.name == o.cls) kac.emplace(c.kac);
        }
    }

    if (kac) {
        const int m = kac->order();
        json powers = json::array();
        for (int k = 0; k < m; ++k) powers.push_back(adjoint_trace(*kac, k).to_string());
        const auto t = adjoint_trace(*kac);
        if (o.json) {
            out << json{{"schema_version", 1}, {"group", group}, {"class", name}, {"order", m}, {"labels", kac->labels()},
                        {"trace", t.to_string()}, {"provenance", to_string(TraceProvenance::KacComputed)},
                        {"power_traces", powers}}
                       .dump(2)
                << "\n";
            return 0;
        }
        out << group << " " << (name.empty() ? "x" : name) << ": order " << m << ", Kac labels (" << join_ints(kac->labels())
            << ")\n";
        out << "trace on L(G): " << t.to_string() << " (" << to_string(TraceProvenance::KacComputed) << ")\n";
        out << "traces of x^k, k = 0.." << m - 1 << ": ";
        for (std::size_t k = 0; k < powers.size(); ++k) out << (k ? ", " : "") << powers[k].get<std::string>();
        out << "\n";
        return 0;
    }

    const auto ts = load(o);
    const auto ctx = build_trace_context(ts, TraceSource::Kac);
    auto it = ctx.tables.find(group);
    if (it == ctx.tables.end() || !it->second.has(o.cls))
        throw std::invalid_argument("no class " + o.cls + " for " + o.type);
    const auto& e = it->second.at(o.cls);
    if (o.json) {
        out << json{{"schema_version", 1}, {"group", group}, {"class", o.cls}, {"trace", to_string(e.value)},
                    {"provenance", to_string(e.provenance)}, {"note", e.note}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << group << " " << o.cls << ": trace on L(G): " << to_string(e.value) << " (" << to_string(e.provenance) << ")\n";
    if (!e.note.empty()) out << "from " << e.note << "\n";
    return 0;
}

int cmd_branch(const Options& o, std::ostream& out)
{
    std::optional<Weight> hw;
    if (!o.weight.empty()) hw = parse_ints(o.weight);
    const auto r = branch(o.type, o.chain, hw);
    const auto& h = *r.embedding.source;
    long long trivial = 0;
    for (const auto& f : r.factors)
        if (f.dimension == 1) trivial += f.multiplicity;
    const std::string module = hw ? "V(" + join_ints(*hw) + ")" : "L(" + r.embedding.target->name() + ")";
    if (o.json) {
        json j = factors_to_json(h, r.factors);
        j["group"] = r.embedding.target->name();
        j["chain"] = o.chain;
        j["subgroup"] = h.name();
        j["module"] = module;
        j["trivial_factors"] = trivial;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "# " << module << " restricted to " << h.name() << " (" << o.chain << ")\n\n";
    out << "| highest weight | label | dimension | multiplicity |\n|---|---|---|---|\n";
    long long total = 0;
    for (const auto& f : r.factors) {
        out << "| " << join_ints(f.highest_weight) << " | " << weight_label(h, f.highest_weight) << " | " << f.dimension
            << " | " << f.multiplicity << " |\n";
        total += f.dimension * f.multiplicity;
    }
    out << "\ndimension " << total << ", trivial composition factors: " << trivial << "\n";
    return 0;
}

int cmd_fixdim(const Options& o, std::ostream& out)
{
    const auto ts = load(o);
    const auto ctx = build_trace_context(ts, o.quoted_only ? TraceSource::QuotedOnly : TraceSource::Kac);
    const std::string group = (o.group == "AutE6" || o.group == "AutD4") ? o.group : SimpleType::parse(o.group).to_string();
    TraceTable traces(group);
    if (auto it = ctx.tables.find(group); it != ctx.tables.end()) traces = it->second;
    for (const auto& s : o.trace_overrides) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--trace expects LABEL=VALUE, got '" + s + "'");
        traces.set(s.substr(0, eq), Rational(parse_ints(s.substr(eq + 1)).at(0)), TraceProvenance::Quoted, "command line");
    }
    const auto fusion = ClassFusion::parse(o.fusion, o.order);
    if (!fusion.counts_consistent())
        throw std::invalid_argument("fusion counts sum to " + std::to_string(fusion.count_sum()) + ", not |F| - 1");
    const long long adim = ambient_adjoint_dimension(group);
    const Rational d = fixed_point_dimension(adim, fusion, traces);
    json used = json::array();
    for (const auto& e : fusion.entries) {
        const auto& te = traces.at(e.label);
        used.push_back({{"class", e.label}, {"count", e.count}, {"trace", to_string(te.value)}, {"provenance", to_string(te.provenance)}});
    }
    if (o.json) {
        out << json{{"schema_version", 1}, {"group", group}, {"order", fusion.group_order}, {"fusion", fusion.to_string()},
                    {"adjoint_dimension", adim}, {"dimension", to_string(d)}, {"integral", is_integer(d)}, {"traces", used}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << group << ", |F| = " << fusion.group_order << ", " << fusion.to_string() << "\n";
    out << "(" << adim;
    for (const auto& u : used) out << " + " << u["count"].get<long long>() << "*(" << u["trace"].get<std::string>() << ")";
    out << ") / " << fusion.group_order << " = " << to_string(d) << (is_integer(d) ? "" : "  (not an integer)") << "\n";
    for (const auto& u : used)
        out << "  " << u["class"].get<std::string>() << ": " << u["trace"].get<std::string>() << " ("
            << u["provenance"].get<std::string>() << ")\n";
    return 0;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    std::vector<SignVector> vs;
    for (const auto& s : o.vectors) {
        vs.push_back(SignVector::parse(s));
        if (vs.back().n() != o.n)
            throw std::invalid_argument("vector " + s + " has length " + std::to_string(vs.back().n()) + ", not " + std::to_string(o.n));
    }
    const auto g = identify_2group(vs, o.center);
    const auto cent = so_centralizer_type(vs, o.n);
    json lifts = json::array();
    for (const auto& v : vs) lifts.push_back({{"vector", v.to_string()}, {"weight", v.weight()}, {"lift_order", spin_lift_order(v).order}});
    json commute = json::array();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            commute.push_back({{"pair", {i, j}}, {"commute", lift_commute(vs[i], vs[j])}});
    if (o.json) {
        out << json{{"schema_version", 1}, {"n", o.n}, {"center", o.center}, {"group", g.name}, {"order", g.order},
                    {"exponent", g.exponent}, {"recognized", g.recognized}, {"centralizer", cent.type.to_string()},
                    {"blocks", cent.block_sizes}, {"rank_deficit", cent.rank_deficit},
                    {"has_torus_block", cent.has_torus_block}, {"lifts", lifts}, {"commute", commute}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "group " << g.name << ", order " << g.order << ", exponent " << g.exponent << "\n";
    out << "centralizer in SO" << o.n << ": " << cent.type.to_string() << ", blocks " << join_ints(cent.block_sizes);
    if (cent.has_torus_block) out << ", has a torus block (rank deficit " << cent.rank_deficit << ")";
    out << "\n";
    for (const auto& l : lifts)
        out << "  " << l["vector"].get<std::string>() << ": lift of order " << l["lift_order"].get<int>() << "\n";
    for (const auto& c : commute)
        out << "  lifts " << c["pair"][0].get<int>() + 1 << "," << c["pair"][1].get<int>() + 1
            << (c["commute"].get<bool>() ? " commute" : " anticommute") << "\n";
    out << "note: the rule is stated for Spin_n; the two half-spin quotients are not distinguished\n";
    return 0;
}

int cmd_classical(const Options& o, std::ostream& out)
{
    std::vector<int> dims;
    for (const auto& b : o.blocks)
        for (int d : parse_ints(b)) dims.push_back(d);
    const auto amb = ClassicalAmbient::parse(o.ambient);
    const auto c = classical_centralizer(dims, amb);
    if (o.json) {
        out << json{{"schema_version", 1}, {"ambient", o.ambient}, {"blocks", dims}, {"centralizer", c.type.to_string()},
                    {"discarded", c.discarded}, {"has_torus_block", c.has_torus_block}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << o.ambient << ", blocks " << join_ints(dims) << ": " << c.type.to_string();
    if (c.discarded) out << " (" << c.discarded << " dimension not covered)";
    if (c.has_torus_block) out << " (has a torus block)";
    out << "\n";
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto ts = load(o);
    AuditOptions opt;
    opt.strip_flags = o.strip_flags;
    if (!o.table.empty() && o.all) throw std::invalid_argument("verify: --table and --all are exclusive");
    const auto rep = o.table.empty() ? verify_all(ts, opt) : verify_table(ts, o.table, opt);
    if (o.json) out << rep.to_json().dump(2) << "\n";
    else out << rep.to_markdown(o.table.empty() ? "Audit of all tables" : "Audit of table " + o.table);
    return rep.has_unflagged_failure() ? 1 : 0;
}

int cmd_solve(const Options& o, std::ostream& out)
{
    const auto ts = load(o);
    const std::string group = (o.group == "AutE6" || o.group == "AutD4") ? o.group : SimpleType::parse(o.group).to_string();
    std::set<std::pair<std::string, std::string>> drop;
    for (const auto& d : o.drop) drop.insert({group, d});
    const auto ctx = build_trace_context(ts, o.quoted_only ? TraceSource::QuotedOnly : TraceSource::Kac, {}, drop);
    auto it = ctx.solves.find(group);
    if (it == ctx.solves.end()) throw std::invalid_argument("no table rows for " + o.group);
    const auto& res = it->second;
    if (o.json) {
        json j = res.table.to_json();
        j["unsolved"] = res.unsolved;
        j["findings"] = res.findings;
        j["equations"] = ctx.equations.at(group).size();
        out << j.dump(2) << "\n";
    } else {
        out << "# Traces on L(" << group << ")\n\n| class | trace | provenance | source |\n|---|---|---|---|\n";
        for (const auto& [label, e] : res.table.entries())
            out << "| " << label << " | " << to_string(e.value) << " | " << to_string(e.provenance) << " | " << e.note << " |\n";
        out << "\n" << ctx.equations.at(group).size() << " equations";
        if (res.unsolved.empty() && res.findings.empty()) out << ", all consistent";
        out << "\n";
        for (const auto& u : res.unsolved) out << "unsolved: " << u << "\n";
        for (const auto& f : res.findings) out << "finding: " << f << "\n";
    }
    return res.findings.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Root systems, torsion elements, spin 2-groups and audits of the irreducible-centralizer tables."};
    app.name("irrcent");
    app.require_subcommand(1, 1);
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--data-dir", o.data_dir, "table directory (default $LCA_DATA_DIR or the build-time path)");

    auto* roots = app.add_subcommand("roots", "root system data");
    roots->add_option("type", o.type, "simple type, e.g. E8")->required();
    roots->add_flag("--list", o.list, "list the positive roots");

    auto* tenum = app.add_subcommand("torsion-enum", "elements with semisimple centralizer");
    tenum->add_option("type", o.type)->required();

    auto* trace = app.add_subcommand("trace", "trace of a class on the adjoint module");
    trace->add_option("type", o.type, "E8, ..., or AutE6/AutD4")->required();
    trace->add_option("class", o.cls, "class label, e.g. 4B");
    trace->add_option("--labels", o.labels, "Kac labels s0,...,sl instead of a class label");

    auto* br = app.add_subcommand("branch", "restriction along a named chain");
    br->add_option("group", o.type)->required();
    br->add_option("chain", o.chain, "chain name or maximal rank subsystem label")->required();
    br->add_option("--weight", o.weight, "highest weight of G (default: adjoint module)");

    auto* fd = app.add_subcommand("fixdim", "fixed-point dimension on L(G)");
    fd->add_option("--group", o.group)->required();
    fd->add_option("--fusion", o.fusion, "e.g. 2B^15,3B^20,5A^24")->required();
    fd->add_option("--order", o.order, "|F| (default: 1 + sum of counts)");
    fd->add_option("--trace", o.trace_overrides, "LABEL=VALUE override");
    fd->add_flag("--quoted-only", o.quoted_only, "use only quoted traces and solved values");

    auto* c2 = app.add_subcommand("classify-2group", "2-group generated by spin lifts of sign vectors");
    c2->add_option("--n", o.n, "dimension of the orthogonal module")->required();
    c2->add_option("vectors", o.vectors, "sign vectors such as (-1^6,1^10)")->required();
    c2->add_flag("--center", o.center, "include the central element of the spin group");

    auto* cc = app.add_subcommand("classical-centralizer", "centralizer from weight space dimensions");
    cc->add_option("--ambient", o.ambient, "Sp2n or SOn")->required();
    cc->add_option("blocks", o.blocks, "weight space dimensions")->required();

    auto* ver = app.add_subcommand("verify", "audit the tables");
    ver->add_option("--table", o.table, "table id");
    ver->add_flag("--all", o.all, "all tables (default)");
    ver->add_flag("--strip-flags", o.strip_flags, "treat flagged rows as ordinary rows");

    auto* solve = app.add_subcommand("solve-traces", "traces of a group solved from the table rows");
    solve->add_option("group", o.group)->required();
    solve->add_flag("--quoted-only", o.quoted_only, "start from the quoted traces only");
    solve->add_option("--drop", o.drop, "remove a known trace before solving");

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*roots) return cmd_roots(o, out);
        if (*tenum) return cmd_torsion_enum(o, out);
        if (*trace) return cmd_trace(o, out);
        if (*br) return cmd_branch(o, out);
        if (*fd) return cmd_fixdim(o, out);
        if (*c2) return cmd_classify(o, out);
        if (*cc) return cmd_classical(o, out);
        if (*ver) return cmd_verify(o, out);
        if (*solve) return cmd_solve(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnresolvedLabel& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace irrcent
