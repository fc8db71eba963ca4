#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>

#include "irrcent/finite_group.hpp"
#include "irrcent/spin2.hpp"

using namespace irrcent;

namespace {

struct Case {
    std::vector<std::string> vectors;
    bool center;
    std::string group;
    std::string centralizer;
};

std::vector<SignVector> parse_all(const std::vector<std::string>& vs)
{
    std::vector<SignVector> out;
    for (const auto& s : vs) out.push_back(SignVector::parse(s));
    return out;
}

void check_case(const Case& c)
{
    CAPTURE(c.group);
    CAPTURE(c.centralizer);
    const auto vs = parse_all(c.vectors);
    const auto g = identify_2group(vs, c.center);
    CHECK(g.recognized);
    CHECK(g.name == c.group);
    const auto cent = so_centralizer_type(vs, vs.front().n());
    CHECK(cent.type.isomorphic(SemisimpleTypeLabel::parse(c.centralizer)));
    CHECK_FALSE(cent.has_torus_block);
}

// Quaternion algebra over Z: (a, b, c, d) = a + bi + cj + dk.
using Quat = std::array<int, 4>;
Quat qmul(const Quat& x, const Quat& y)
{
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3], x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1], x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

// GF(2)-rank of the sign vectors as bit masks.
int f2_rank(const std::vector<SignVector>& vs)
{
    std::vector<unsigned long long> rows;
    for (const auto& v : vs) {
        unsigned long long m = 0;
        for (int i : v.support()) m |= 1ULL << i;
        rows.push_back(m);
    }
    int r = 0;
    for (int bit = 63; bit >= 0; --bit) {
        auto it = std::find_if(rows.begin() + r, rows.end(), [&](unsigned long long x) { return (x >> bit) & 1ULL; });
        if (it == rows.end()) continue;
        std::swap(*it, rows[static_cast<std::size_t>(r)]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != static_cast<std::size_t>(r) && ((rows[k] >> bit) & 1ULL)) rows[k] ^= rows[static_cast<std::size_t>(r)];
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("sign vector notation")
{
    const auto v = SignVector::parse("(-1^6,1^10)");
    CHECK(v.n() == 16);
    CHECK(v.weight() == 6);
    CHECK(v.to_string() == "(-1^6,1^10)");
    CHECK(SignVector::parse("(-1^{3},1^{3},-1,1^9)").weight() == 4);
    CHECK(SignVector::parse("(1^3,-1^6)").support() == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK_THROWS(SignVector::parse("(-1^3,1^5)"));  // odd number of -1
    CHECK_THROWS(SignVector::parse("(-2,1)"));
}

TEST_CASE("lift orders and commutation")
{
    CHECK(spin_lift_order(SignVector::parse("(-1^4,1^12)")).order == 2);
    CHECK(spin_lift_order(SignVector::parse("(-1^6,1^10)")).order == 4);
    CHECK(spin_lift_order(SignVector::parse("(-1^8,1^8)")).order == 2);
    CHECK(spin_lift_order(SignVector::parse("(1^16)")).trivial);
    CHECK(lift_commute(SignVector::parse("(-1^4,1^4)"), SignVector::parse("(-1^2,1^2,-1^2,1^2)")));
    CHECK_FALSE(lift_commute(SignVector::parse("(-1^6,1^10)"), SignVector::parse("(-1^3,1^3,-1,1^9)")));
}

TEST_CASE("the five Dih8 / Q8 cases in SO16")
{
    const std::string e = "(-1^6,1^10)";
    for (const auto& c : std::vector<Case>{
             {{e, "(-1^3,1^3,-1,1^9)"}, false, "Dih8", "B1^2*B4"},
             {{e, "(-1^3,1^3,-1^3,1^7)"}, false, "Q8", "B1^3*B3"},
             {{e, "(-1^3,1^3,-1^5,1^5)"}, false, "Dih8", "B1^2*B2^2"},
             {{e, "(-1,1^5,-1^3,1^7)"}, false, "Dih8", "B1*B2*B3"},
             {{e, "(-1,1^5,-1^5,1^5)"}, false, "Q8", "B2^3"},
         })
        check_case(c);
}

TEST_CASE("extensions of 4x2")
{
    const std::string e = "(-1^6,1^10)", e1 = "(1^6,-1^4,1^6)", e2 = "(1^6,-1,1^3,-1^3,1^3)", e3 = "(-1^3,1^3,-1,1^9)";
    CHECK(identify_2group(parse_all({e, e1})).name == "4x2");
    check_case({{e, e1, e2}, false, "4oDih8", "A3*B1^3"});
    check_case({{e, e1, e2, e3}, false, "2^{1+4}_-", "B1^5"});
    check_case({{e, e1, "(-1^3,1^3,1^4,-1,1^5)"}, false, "Dih8x2", "A1^2*B1^2*B2"});
    check_case({{e, e1, "(-1^3,1^3,1^4,-1^3,1^3)"}, false, "Q8x2", "A1^2*B1^4"});
}

TEST_CASE("elementary abelian cases")
{
    check_case({{"(-1^8,1^8)", "(-1^4,1^4,1^8)"}, true, "2^3", "A1^4*D4"});
    check_case({{"(-1^8,1^8)", "(-1^4,1^4,1^8)", "(1^8,-1^4,1^4)"}, true, "2^4", "A1^8"});
    CHECK(identify_2group(parse_all({"(-1^4,1^12)"})).name == "2");
}

TEST_CASE("E7 cases in SO12")
{
    check_case({{"(-1^6,1^6)", "(-1,1^5,-1^3,1^3)"}, false, "Dih8", "B1^2*B2"});
    check_case({{"(-1^6,1^6)", "(-1^3,1^3,-1^3,1^3)"}, false, "Q8", "B1^4"});
}

TEST_CASE("F4 cases in SO9")
{
    check_case({{"(1^3,-1^6)", "(-1^6,1^3)"}, false, "Q8", "B1^3"});
    check_case({{"(1^3,-1^6)", "(-1^4,1^5)"}, false, "Dih8", "B1*B2"});
    check_case({{"(-1^8,1)", "(-1^4,1^5)"}, true, "2^3", "A1^4"});
    // The second generator as printed leaves an SO2 block: a normal torus.
    const auto printed = parse_all({"(1^3,-1^6)", "(1^5,-1^4)"});
    CHECK(identify_2group(printed).name == "4x2");
    CHECK(so_centralizer_type(printed, 9).has_torus_block);
}

TEST_CASE("group order from the span of the sign vectors")
{
    const std::vector<std::vector<std::string>> sets{
        {"(-1^6,1^10)", "(-1^3,1^3,-1,1^9)"},
        {"(-1^8,1^8)", "(-1^4,1^4,1^8)"},
        {"(-1^6,1^10)", "(1^6,-1^4,1^6)", "(1^6,-1,1^3,-1^3,1^3)", "(-1^3,1^3,-1,1^9)"},
        {"(-1^4,1^12)", "(1^4,-1^4,1^8)"},
    };
    for (const auto& s : sets) {
        const auto vs = parse_all(s);
        const auto g = identify_2group(vs);
        const int span = 1 << f2_rank(vs);
        // either the central sign is generated (order doubles) or not
        CHECK((g.order == span || g.order == 2 * span));
        CHECK(identify_2group(vs, true).order == 2 * span);
    }
}

TEST_CASE("catalogue against explicit constructions")
{
    // Q8 from quaternion units
    std::vector<Quat> units;
    for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) {
            Quat q{0, 0, 0, 0};
            q[static_cast<std::size_t>(i)] = s;
            units.push_back(q);
        }
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto p = qmul(units[static_cast<std::size_t>(a)], units[static_cast<std::size_t>(b)]);
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                static_cast<int>(std::find(units.begin(), units.end(), p) - units.begin());
        }
    const FiniteGroup q8(table);
    CHECK(q8.order() == 8);
    CHECK(q8.exponent() == 4);
    CHECK(q8.center().size() == 2);
    CHECK_FALSE(q8.is_abelian());
    CHECK(isomorphic(q8, FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2))) == false);
    const auto names = two_group_catalogue();
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
}

TEST_CASE("eigen partition refines")
{
    const auto a = SignVector::parse("(-1^8,1^8)");
    const auto b = SignVector::parse("(-1^4,1^4,-1^4,1^4)");
    const auto p1 = eigen_partition({a}, 16);
    const auto p2 = eigen_partition({a, b}, 16);
    CHECK(p1.sizes() == std::vector<int>{8, 8});
    CHECK(p2.sizes() == std::vector<int>{4, 4, 4, 4});
    CHECK(eigen_partition({}, 5).sizes() == std::vector<int>{5});
}

TEST_CASE("classical centralizers")
{
    CHECK(classical_centralizer({4, 6}, ClassicalAmbient::parse("Sp10")).type.isomorphic(SemisimpleTypeLabel::parse("C2*C3")));
    CHECK(classical_centralizer({3, 3, 9}, ClassicalAmbient::parse("SO16")).type.isomorphic(SemisimpleTypeLabel::parse("B1^2*B4")));
    const auto b = classical_centralizer({5, 5, 5}, ClassicalAmbient::parse("SO16"));
    CHECK(b.type.isomorphic(SemisimpleTypeLabel::parse("B2^3")));
    CHECK(b.discarded == 1);
    CHECK_THROWS(classical_centralizer({3, 4}, ClassicalAmbient::parse("Sp7")));
    CHECK_THROWS(classical_centralizer({3, 5}, ClassicalAmbient::parse("Sp8")));
    CHECK(classical_centralizer({2, 6}, ClassicalAmbient::parse("SO8")).has_torus_block);
}

TEST_CASE("classical irreducibility")
{
    CHECK_FALSE(classically_irreducible({{4, true, "1,1"}, {4, true, "1,1"}, {4, true, "1,1"}}));
    CHECK_FALSE(classically_irreducible({{5, true, "4"}, {3, true, "2"}, {3, true, "2"}, {3, true, "2"}, {1, true, "0"}, {1, true, "0"}}));
    CHECK(classically_irreducible({{5, true, "10;00;00"}, {5, true, "00;10;00"}, {5, true, "00;00;10"}, {1, true, "0"}}));
    CHECK_FALSE(classically_irreducible({{2, false, "a"}, {2, true, "b"}}));
}
