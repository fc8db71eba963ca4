#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "irrcent/certificates.hpp"
#include "irrcent/tables.hpp"
#include "irrcent/tabver.hpp"

using namespace irrcent;

namespace {

const TableSet& tables()
{
    static const TableSet ts = load_tables(IRRCENT_DATA_DIR);
    return ts;
}

const std::string header = "# group|F_name|F_order|centralizer|fusion|p_constraint|overgroup|flags\n";

std::set<std::string> failing(const AuditReport& r, AuditStatus s)
{
    std::set<std::string> out;
    for (const auto& e : r.entries)
        if (e.status == s) out.insert(e.table_id + ":" + std::to_string(e.line) + " " + e.check);
    return out;
}

}  // namespace

TEST_CASE("row counts")
{
    const auto& ts = tables();
    CHECK(ts.tables.at("g2").size() == 3);
    CHECK(ts.tables.at("e6").size() == 3);
    CHECK(ts.tables.at("f4").size() == 12);
    CHECK(ts.tables.at("e7").size() == 14);
    CHECK(ts.tables.at("e8").size() == 46);
    CHECK(ts.tables.at("aute6").size() == 8);
    CHECK(ts.tables.at("d4").size() == 9);
    CHECK(ts.tables.at("max").size() == 34);
    CHECK(ts.classes_of("E8").size() == 8);
    CHECK(ts.graph_centralizers.size() == 9);
    CHECK(ts.normalizers.size() == 14);
    CHECK(ts.quoted_traces.size() == 5);
}

TEST_CASE("row fields")
{
    const auto& e8 = tables().tables.at("e8");
    const auto alt5 = std::find_if(e8.begin(), e8.end(), [](const TableRow& r) { return r.f_name == "Alt5"; });
    REQUIRE(alt5 != e8.end());
    CHECK(alt5->f_order == 60);
    CHECK(alt5->fusion.count_sum() == 59);
    CHECK(alt5->p.to_string() == "p!=2,3,5");
    CHECK(alt5->overgroup->isomorphic(SemisimpleTypeLabel::parse("A4^2")));
    const auto five = std::find_if(e8.begin(), e8.end(), [](const TableRow& r) { return r.f_name == "5"; });
    REQUIRE(five != e8.end());
    CHECK(five->fusion.to_string() == "5A^4");
    CHECK_FALSE(five->notes.empty());
}

TEST_CASE("abstract group orders")
{
    CHECK(abstract_group_order("3^2.Dih8") == 72);
    CHECK(abstract_group_order("2^{1+4}_-") == 32);
    CHECK(abstract_group_order("4oDih8") == 16);
    CHECK(abstract_group_order("Sym4x2") == 48);
    CHECK(abstract_group_order("SL2(3)") == 24);
    CHECK(abstract_group_order("Frob20") == 20);
    CHECK(abstract_group_order("GL2(3)") == 48);
    CHECK_FALSE(abstract_group_order("Monster").has_value());
}

TEST_CASE("characteristic constraints")
{
    const auto a = PConstraint::parse("p!=2,3");
    CHECK(a.admits(0));
    CHECK(a.admits(5));
    CHECK_FALSE(a.admits(3));
    CHECK(PConstraint::parse("p=3").compatible(a) == false);
    CHECK(PConstraint::parse("p=3").compatible(PConstraint::parse("p!=2")));
    CHECK(PConstraint::parse("-").kind == PConstraint::Kind::Any);
    CHECK_THROWS(PConstraint::parse("p<5"));
}

TEST_CASE("schema errors name row and field")
{
    CHECK_THROWS_WITH_AS(parse_group_table("", "x"), doctest::Contains("no records"), TableError);
    CHECK_THROWS_WITH_AS(parse_group_table(header + "E8|Alt5|60|A1|2B^15,3B^20,5A^23|p!=2||\n", "x"),
                         doctest::Contains("x:2"), TableError);
    CHECK_THROWS_WITH_AS(parse_group_table(header + "E8|Alt5|61|A1|2B^15,3B^20,5A^24|p!=2||\n", "x"),
                         doctest::Contains("F_order"), TableError);
    CHECK_THROWS_WITH_AS(parse_group_table(header + "E9|2|2|A1|2A|p!=2||\n", "x"), doctest::Contains("group"), TableError);
    CHECK_THROWS_WITH_AS(parse_group_table(header + "E8|2|2|A1|2A|p!=2|\n", "x"), doctest::Contains("fields"), TableError);
    CHECK_THROWS_WITH_AS(parse_group_table(header + "E8|2|2|Q7|2A|p!=2||\n", "x"), doctest::Contains("centralizer"), TableError);
    CHECK_THROWS_WITH_AS(parse_group_table(header + "E8|2|2|A1|2A|p!=2||bogus\n", "x"), doctest::Contains("flags"), TableError);
}

TEST_CASE("dimension identity audit")
{
    const auto& ts = tables();
    const auto ctx = build_trace_context(ts);
    const auto rep = audit_dimension_identity(ts.tables.at("e8"), ctx);
    CHECK(rep.entries.size() == ts.tables.at("e8").size());
    const auto extra = std::find_if(rep.entries.begin(), rep.entries.end(), [](const AuditEntry& e) { return e.row.find("2^{1+4}_-") != std::string::npos; });
    REQUIRE(extra != rep.entries.end());
    CHECK(extra->computed == "15");
    CHECK(extra->status == AuditStatus::Pass);
    const auto sym = std::find_if(rep.entries.begin(), rep.entries.end(), [](const AuditEntry& e) { return e.row.find("Sym4x2") != std::string::npos; });
    REQUIRE(sym != rep.entries.end());
    CHECK(sym->status == AuditStatus::Flagged);
    CHECK(sym->computed == "31/3");
}

TEST_CASE("full audit: exactly the three flagged rows")
{
    const auto& ts = tables();
    const auto rep = verify_all(ts);
    CHECK_FALSE(rep.has_unflagged_failure());
    CHECK(failing(rep, AuditStatus::Flagged) ==
          std::set<std::string>{"e8:39 dimension identity", "e6:6 dimension identity", "aute6:11 dimension identity"});

    AuditOptions strip;
    strip.strip_flags = true;
    const auto raw = verify_all(ts, strip);
    CHECK(raw.has_unflagged_failure());
    CHECK(raw.count(AuditStatus::Flagged) == 0);
    const auto fails = failing(raw, AuditStatus::Fail);
    CHECK(fails.count("e8:39 dimension identity") == 1);
    CHECK(fails.count("e6:6 dimension identity") == 1);
    CHECK(fails.count("aute6:11 dimension identity") == 1);
}

TEST_CASE("a flagged row that passes is an error")
{
    auto rows = parse_group_table(header + "G2|3|3|A2|3A^2|p!=3||expect-fail\n", "t");
    const auto rep = audit_dimension_identity(rows, build_trace_context(tables()));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].status == AuditStatus::Fail);
}

TEST_CASE("structure audit")
{
    const auto& ts = tables();
    const auto rep = audit_structure(ts.tables.at("e8"), ts);
    CHECK(rep.count(AuditStatus::Fail) == 0);

    // counts summing to |F| instead of |F| - 1
    TableRow bad = ts.tables.at("e8").front();
    bad.fusion = ClassFusion::parse("2A^2", 2);
    const auto r1 = audit_structure({bad}, ts);
    CHECK(r1.entries[0].status == AuditStatus::Fail);

    // an overgroup outside the Borel-de Siebenthal closure
    TableRow og = ts.tables.at("e8").front();
    og.overgroup = SemisimpleTypeLabel::parse("B8");
    CHECK(audit_structure({og}, ts).entries[0].status == AuditStatus::Fail);

    // a class label not in the class tables
    TableRow lbl = ts.tables.at("e8").front();
    lbl.fusion = ClassFusion::parse("2Z", 2);
    CHECK(audit_structure({lbl}, ts).entries[0].status == AuditStatus::Fail);

    // Q8 rows are dominated by maximal rows
    for (const auto& e : rep.entries)
        if (e.row.find(" Q8 ") != std::string::npos) CHECK(e.status == AuditStatus::Pass);
}

TEST_CASE("certificates")
{
    const auto& ts = tables();
    const auto rep = audit_irreducibility_certificates(ts.tables.at("max"));
    CHECK(rep.count(AuditStatus::Fail) == 0);
    std::set<std::string> not_checked;
    for (const auto& e : rep.entries)
        if (e.status == AuditStatus::NotChecked) not_checked.insert(e.row);
    CHECK(not_checked == std::set<std::string>{"E6 Dih6 -> A1*A1"});
    const auto e6 = std::find_if(rep.entries.begin(), rep.entries.end(), [](const AuditEntry& e) { return e.row == "E6 2 -> A1*A5"; });
    REQUIRE(e6 != rep.entries.end());
    CHECK(e6->notes.size() >= 2);  // maximal rank, plus the characteristic 3 note
}

TEST_CASE("traces are overdetermined")
{
    const auto& ts = tables();
    const auto full = build_trace_context(ts);
    for (const std::string g : {"E8", "E7", "F4", "G2"})
        for (const auto& [label, entry] : full.tables.at(g).entries()) {
            CAPTURE(g);
            CAPTURE(label);
            const auto dropped = build_trace_context(ts, TraceSource::Kac, {}, {{g, label}});
            const auto& t = dropped.tables.at(g);
            REQUIRE(t.has(label));
            CHECK(t.at(label).value == entry.value);
            CHECK(t.at(label).provenance == TraceProvenance::SolvedFromRow);
            CHECK(dropped.solves.at(g).findings.empty());
        }
}

TEST_CASE("reports are deterministic")
{
    const auto& ts = tables();
    const auto a = verify_all(ts);
    const auto b = verify_all(ts);
    CHECK(a.to_markdown() == b.to_markdown());
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.to_json().at("schema_version") == 1);
}

TEST_CASE("single tables")
{
    const auto& ts = tables();
    for (const auto& id : all_table_ids()) {
        CAPTURE(id);
        CHECK_NOTHROW(verify_table(ts, id));
    }
    CHECK_THROWS_AS(verify_table(ts, "e9"), std::invalid_argument);
    CHECK(verify_table(ts, "g2").count(AuditStatus::Fail) == 0);
}
