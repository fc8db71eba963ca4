#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "irrcent/fixdim.hpp"

using namespace irrcent;

namespace {

TraceTable e8_inner()
{
    TraceTable t("E8");
    t.set("2A", Rational(24), TraceProvenance::KacComputed);
    t.set("2B", Rational(-8), TraceProvenance::Quoted);
    t.set("3A", Rational(-4), TraceProvenance::Quoted);
    t.set("3B", Rational(5), TraceProvenance::Quoted);
    t.set("4A", Rational(-4), TraceProvenance::KacComputed);
    t.set("4B", Rational(0), TraceProvenance::KacComputed);
    t.set("5A", Rational(-2), TraceProvenance::Quoted);
    t.set("6A", Rational(-3), TraceProvenance::KacComputed);
    return t;
}

TraceEquation eq(const std::string& fusion, long long order, long long expected, bool cyclic, const std::string& src)
{
    return {ClassFusion::parse(fusion, order), expected, cyclic, src};
}

}  // namespace

TEST_CASE("fusion notation")
{
    const auto f = ClassFusion::parse("2A^10,2B^15,5A^24");
    CHECK(f.group_order == 50);
    CHECK(f.entries.size() == 3);
    CHECK(f.entries[1].label == "2B");
    CHECK(f.entries[1].count == 15);
    CHECK(ClassFusion::parse("2A^{10},2B", 12).count_sum() == 11);
    CHECK(ClassFusion::parse("2A^{10},2B", 12).counts_consistent());
    CHECK_FALSE(ClassFusion::parse("2A^3", 3).counts_consistent());
    CHECK(ClassFusion::parse("").entries.empty());
    CHECK(ClassFusion::parse("2A^10,2B^15").to_string() == "2A^10,2B^15");
    CHECK_THROWS(ClassFusion::parse("2A^0"));
    CHECK_THROWS(ClassFusion::parse("2A^x"));
}

TEST_CASE("quoted fixed-point dimensions")
{
    const auto t = e8_inner();
    CHECK(fixed_point_dimension(248, ClassFusion::parse("2B^15,3A^20,5A^24"), t) == Rational(0));
    CHECK(fixed_point_dimension(248, ClassFusion::parse("2B^15,3B^20,5A^24"), t) == Rational(3));
    CHECK(fixed_point_dimension(248, ClassFusion::parse("3B^26"), t) == Rational(14));
    TraceTable e6("E6");
    e6.set("3A", Rational(-3), TraceProvenance::Quoted);
    CHECK(fixed_point_dimension(78, ClassFusion::parse("3A^8"), e6) == Rational(6));
    CHECK(fixed_point_dimension(248, ClassFusion::parse(""), t) == Rational(248));
}

TEST_CASE("unresolved labels")
{
    TraceTable t("E8");
    t.set("2A", Rational(24), TraceProvenance::KacComputed);
    try {
        fixed_point_dimension(248, ClassFusion::parse("2A,4Z^2"), t);
        FAIL("expected UnresolvedLabel");
    } catch (const UnresolvedLabel& e) {
        CHECK(e.label() == "4Z");
    }
}

TEST_CASE("non-integral averages are exact")
{
    const auto t = e8_inner();
    const auto d = fixed_point_dimension(248, ClassFusion::parse("2A^12,2B^7,3B^8,4B^12,6A^8"), t);
    CHECK(d == Rational(496, 48));
    CHECK_FALSE(is_integer(d));
}

TEST_CASE("solving E8 traces from cyclic rows")
{
    TraceTable known("E8");
    known.set("2B", Rational(-8), TraceProvenance::Quoted);
    known.set("3B", Rational(5), TraceProvenance::Quoted);
    known.set("5A", Rational(-2), TraceProvenance::Quoted);
    const std::vector<TraceEquation> rows{
        eq("2A", 2, 136, true, "2"),
        eq("2A,4A^2", 4, 66, true, "4"),
        eq("2B^5,4B^10,5A^4", 20, 10, false, "Frob20"),
        eq("2A,3B^2,6A^2", 6, 46, true, "6"),
        eq("2A^4,2B,4B^2", 8, 42, false, "Dih8"),
        eq("2A,3B^8,4A^6,6A^8", 24, 11, false, "SL2(3)"),
        eq("2A^4,2B^3,3B^2,6A^2", 12, 27, false, "Dih12"),
    };
    // by hand: (248 + 24 + 2t)/4 = 66, (248 - 40 - 8 + 10t)/20 = 10, (248 + 24 + 10 + 2t)/6 = 46
    const auto res = solve_traces(248, rows, known);
    CHECK(res.unsolved.empty());
    CHECK(res.findings.empty());
    CHECK(res.table.at("2A").value == Rational(24));
    CHECK(res.table.at("4A").value == Rational(-4));
    CHECK(res.table.at("6A").value == Rational(-3));
    CHECK(res.table.at("4B").value == Rational(0));
    CHECK(res.table.at("4A").provenance == TraceProvenance::SolvedFromRow);
    CHECK(res.table.at("2B").provenance == TraceProvenance::Quoted);
}

TEST_CASE("inconsistent and underdetermined systems are reported")
{
    TraceTable known("G2");
    const std::vector<TraceEquation> rows{
        eq("2A", 2, 6, true, "2"),
        eq("3A^2", 3, 8, true, "3"),
        eq("2A^3,3A^2", 6, 5, false, "bad"),
    };
    const auto res = solve_traces(14, rows, known);
    CHECK(res.table.at("2A").value == Rational(-2));
    CHECK(res.table.at("3A").value == Rational(5));
    REQUIRE(res.findings.size() == 1);
    CHECK(res.findings[0].find("bad") != std::string::npos);

    const auto under = solve_traces(14, {eq("2A,2B^2", 4, 4, false, "x")}, known);
    CHECK(under.unsolved.size() == 2);
}

TEST_CASE("row order does not matter")
{
    TraceTable known("E8");
    known.set("2B", Rational(-8), TraceProvenance::Quoted);
    std::vector<TraceEquation> rows{
        eq("2A", 2, 136, true, "a"), eq("2A,4A^2", 4, 66, true, "b"), eq("2B,4B^2", 4, 60, true, "c"),
        eq("2A^4,2B,4B^2", 8, 42, false, "d"), eq("2A,4A^6", 8, 31, false, "e"),
    };
    const auto first = solve_traces(248, rows, known);
    std::reverse(rows.begin(), rows.end());
    const auto second = solve_traces(248, rows, known);
    CHECK(first.table.to_json() == second.table.to_json());
    CHECK(first.findings == second.findings);
}

TEST_CASE("JSON round trip")
{
    auto t = e8_inner();
    t.set("4B", Rational(0), TraceProvenance::SolvedFromRow, "Frob20");
    const auto j = t.to_json();
    CHECK(j.at("schema_version") == 1);
    const auto back = TraceTable::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.at("4B").provenance == TraceProvenance::SolvedFromRow);
    CHECK(parse_provenance("quoted") == TraceProvenance::Quoted);
    CHECK_THROWS(parse_provenance("guessed"));
}
