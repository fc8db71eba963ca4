#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>

#include "irrcent/cyclotomic.hpp"
#include "irrcent/tables.hpp"
#include "irrcent/tabver.hpp"
#include "irrcent/torsion.hpp"

using namespace irrcent;

namespace {

RootSystemPtr rs(const char* t) { return build_root_system(SimpleType::parse(t)); }

int node_with_mark(const RootSystem& r, int mark)
{
    const auto m = extended_marks(r);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] == mark) return static_cast<int>(i);
    return -1;
}

// c_j counted directly from the roots.
std::vector<long long> oracle_profile(const RootSystem& r, const std::vector<int>& labels, int m)
{
    std::vector<long long> c(static_cast<std::size_t>(m), 0);
    c[0] += r.rank();
    for (const auto& a : r.roots()) {
        long long d = 0;
        for (int i = 0; i < r.rank(); ++i) d += static_cast<long long>(labels[static_cast<std::size_t>(i) + 1]) * a[i];
        c[static_cast<std::size_t>(((d % m) + m) % m)] += 1;
    }
    return c;
}

// Floating-point oracle for sum c_j cos(2 pi j / m); only used to compare
// against the exact value after rounding.
double float_trace(const std::vector<long long>& c)
{
    const double pi = std::acos(-1.0);
    double t = 0;
    for (std::size_t j = 0; j < c.size(); ++j) t += static_cast<double>(c[j]) * std::cos(2 * pi * static_cast<double>(j) / static_cast<double>(c.size()));
    return t;
}

}  // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<long long>{1, 1, 1, 1, 1});

    CyclotomicInteger z(5);
    for (int k = 0; k < 5; ++k) z.add_power(k, 1);
    CHECK(z.rational_value() == 0LL);
    CyclotomicInteger w(5);
    w.add_power(1, 1);
    CHECK_FALSE(w.is_rational());
}

TEST_CASE("Kac coordinates validation")
{
    const auto e8 = rs("E8");
    CHECK_THROWS(KacCoordinates(e8, {2, 0, 0, 0, 0, 0, 0, 0, 2}));
    CHECK_THROWS(KacCoordinates(e8, {1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS(KacCoordinates(e8, {-1, 1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(KacCoordinates(e8, {1, 0, 0, 0, 0, 0, 0, 0, 0}).order() == 1);
    CHECK(KacCoordinates(e8, {1, 1, 0, 0, 0, 0, 0, 0, 0}).order() == 3);
}

TEST_CASE("torsion centralizers")
{
    const auto e8 = rs("E8");
    const auto c5 = torsion_centralizer(KacCoordinates::single(e8, node_with_mark(*e8, 5)));
    CHECK(c5.type.isomorphic(SemisimpleTypeLabel::parse("A4^2")));
    CHECK(c5.rank_deficit == 0);
    const auto c1 = torsion_centralizer(KacCoordinates::single(e8, 0));
    CHECK(c1.type.isomorphic(SemisimpleTypeLabel::parse("E8")));
    const auto c6 = torsion_centralizer(KacCoordinates::single(e8, node_with_mark(*e8, 6)));
    CHECK(c6.type.isomorphic(SemisimpleTypeLabel::parse("A1*A2*A5")));
    // two positive labels leave a one-dimensional central torus
    const auto levi = torsion_centralizer(KacCoordinates(e8, {1, 1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(levi.rank_deficit == 1);
    CHECK(levi.type.isomorphic(SemisimpleTypeLabel::parse("D7")));
}

TEST_CASE("enumeration matches the class table")
{
    const std::map<std::string, std::vector<std::pair<int, std::string>>> expected{
        {"E8", {{2, "A1*E7"}, {2, "D8"}, {3, "A8"}, {3, "A2*E6"}, {4, "A1*A7"}, {4, "A3*D5"}, {5, "A4^2"}, {6, "A1*A2*A5"}}},
        {"E7", {{2, "A1*D6"}, {2, "A7"}, {3, "A2*A5"}, {4, "A1*A3^2"}}},
        {"E6", {{2, "A1*A5"}, {3, "A2^3"}}},
        {"F4", {{2, "B4"}, {2, "A1*C3"}, {3, "A2*A2"}, {4, "A1*A3"}}},
        {"G2", {{2, "A1*A1"}, {3, "A2"}}},
    };
    std::size_t total = 0;
    for (const auto& [g, rows] : expected) {
        CAPTURE(g);
        const auto classes = enumerate_irreducible_elements(rs(g.c_str()));
        REQUIRE(classes.size() == rows.size());
        total += classes.size();
        for (const auto& [order, cent] : rows) {
            const auto want = SemisimpleTypeLabel::parse(cent);
            int hits = 0;
            for (const auto& c : classes) hits += c.order == order && c.centralizer.type.isomorphic(want);
            CHECK(hits == 1);
        }
        for (const auto& c : classes) CHECK(c.centralizer.rank_deficit == 0);
    }
    CHECK(total == 20);
}

TEST_CASE("eigenvalue profiles and traces against direct counts")
{
    for (const char* g : {"E8", "E7", "E6", "F4", "G2", "D4"}) {
        const auto r = rs(g);
        for (const auto& c : enumerate_irreducible_elements(r)) {
            CAPTURE(g);
            CAPTURE(c.order);
            const auto oracle = oracle_profile(*r, c.kac.labels(), c.order);
            CHECK(c.profile.counts == oracle);
            CHECK(c.profile.total() == r->adjoint_dimension());
            CHECK(c.profile.is_real());
            CHECK(c.profile.counts[0] == c.centralizer.type.dimension());
            const long long t = rational_trace(adjoint_trace(c.kac));
            CHECK(std::abs(float_trace(oracle) - static_cast<double>(t)) < 1e-9);
            CHECK(rational_trace(adjoint_trace(c.kac, 0)) == r->adjoint_dimension());
        }
    }
}

TEST_CASE("quoted traces")
{
    const auto ts = load_tables(IRRCENT_DATA_DIR);
    std::map<std::string, long long> e8, e6;
    for (const auto& c : named_torsion_classes(ts, "E8")) e8[c.name] = rational_trace(adjoint_trace(c.kac));
    for (const auto& c : named_torsion_classes(ts, "E6")) e6[c.name] = rational_trace(adjoint_trace(c.kac));
    CHECK(e8.at("2B") == -8);
    CHECK(e8.at("3A") == -4);
    CHECK(e8.at("5A") == -2);
    CHECK(e8.at("3B") == 5);
    CHECK(e6.at("3A") == -3);
    CHECK(e8.at("2A") == 24);
    CHECK(e8.at("4A") == -4);
    CHECK(e8.at("4B") == 0);
    CHECK(e8.at("6A") == -3);
}

TEST_CASE("powers")
{
    const auto ts = load_tables(IRRCENT_DATA_DIR);
    const auto classes = named_torsion_classes(ts, "E8");
    std::map<std::string, EigenvalueProfile> p;
    for (const auto& c : classes) p[c.name] = c.profile;
    CHECK(power_profile(p.at("4A"), 2) == p.at("2A"));
    CHECK(power_profile(p.at("4B"), 2) == p.at("2B"));
    CHECK(power_profile(p.at("6A"), 1) == p.at("6A"));
    CHECK(power_profile(p.at("6A"), 3).counts[0] == 136);  // x^3 in 2A
    CHECK(power_profile(p.at("6A"), 2).counts[0] == 86);   // x^2 in 3B

    const auto f = class_fusion(ts, "E8", "6A");
    CHECK(f.to_string() == "2A,3B^2,6A^2");
    CHECK(class_fusion(ts, "E7", "4A").to_string() == "2A,4A^2");
    CHECK(class_fusion(ts, "AutE6", "6A").to_string() == "2B,3A^2,6A^2");
}

TEST_CASE("JSON form")
{
    const auto ts = load_tables(IRRCENT_DATA_DIR);
    const auto classes = named_torsion_classes(ts, "G2");
    const auto j = torsion_class_to_json(classes.back());
    CHECK(j.at("class") == "3A");
    CHECK(j.at("traces").at(1) == 5);
}
