#include "irrcent/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace irrcent {

KacCoordinates::KacCoordinates(RootSystemPtr rs, std::vector<int> labels)
    : rs_(std::move(rs)), labels_(std::move(labels))
{
    if (!rs_ || !rs_->is_simple()) throw std::invalid_argument("KacCoordinates: simple root system required");
    const auto marks = extended_marks(*rs_);
    if (labels_.size() != marks.size())
        throw std::invalid_argument("KacCoordinates: expected " + std::to_string(marks.size()) + " labels");
    int g = 0;
    order_ = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0) throw std::invalid_argument("KacCoordinates: negative label");
        g = std::gcd(g, labels_[i]);
        order_ += marks[i] * labels_[i];
    }
    if (g != 1) throw std::invalid_argument("KacCoordinates: labels must have gcd 1");
}

KacCoordinates KacCoordinates::single(RootSystemPtr rs, int node)
{
    std::vector<int> labels(static_cast<std::size_t>(rs->rank()) + 1, 0);
    labels.at(static_cast<std::size_t>(node)) = 1;
    return KacCoordinates(std::move(rs), std::move(labels));
}

int KacCoordinates::degree(const Weight& root) const
{
    long long d = 0;
    for (std::size_t i = 0; i < root.size(); ++i) d += static_cast<long long>(labels_[i + 1]) * root[i];
    d %= order_;
    return static_cast<int>(d < 0 ? d + order_ : d);
}

TorsionCentralizer torsion_centralizer(const KacCoordinates& kac)
{
    TorsionCentralizer out;
    const auto nodes = extended_nodes(*kac.root_system());
    std::vector<Weight> zero;
    int positive = 0;
    for (std::size_t i = 0; i < kac.labels().size(); ++i) {
        if (kac.labels()[i] == 0) {
            out.zero_nodes.push_back(static_cast<int>(i));
            zero.push_back(nodes[i]);
        } else {
            ++positive;
        }
    }
    out.rank_deficit = positive - 1;
    if (!zero.empty()) {
        const auto id = identify_diagram(cartan_of_roots(*kac.root_system(), zero));
        out.type = SemisimpleTypeLabel::of(id.types);
    }
    return out;
}

long long EigenvalueProfile::total() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }

bool EigenvalueProfile::is_real() const
{
    for (int j = 1; j < order; ++j)
        if (counts[static_cast<std::size_t>(j)] != counts[static_cast<std::size_t>(order - j)]) return false;
    return true;
}

EigenvalueProfile eigenvalue_profile(const KacCoordinates& kac)
{
    EigenvalueProfile p;
    p.order = kac.order();
    p.counts.assign(static_cast<std::size_t>(p.order), 0);
    p.counts[0] = kac.root_system()->rank();
    for (const auto& r : kac.root_system()->roots()) ++p.counts[static_cast<std::size_t>(kac.degree(r))];
    return p;
}

EigenvalueProfile power_profile(const EigenvalueProfile& p, int k)
{
    const int m = p.order;
    const int kk = ((k % m) + m) % m;
    EigenvalueProfile q;
    q.order = m / std::gcd(m, kk);
    q.counts.assign(static_cast<std::size_t>(q.order), 0);
    const int step = m / q.order;  // zeta_m^(j k) = zeta_q^(j k / step)
    for (int j = 0; j < m; ++j) {
        const long long e = (static_cast<long long>(j) * kk) % m;
        q.counts[static_cast<std::size_t>(e / step)] += p.counts[static_cast<std::size_t>(j)];
    }
    return q;
}

CyclotomicInteger profile_trace(const EigenvalueProfile& p, int power)
{
    return CyclotomicInteger::from_profile(p.counts, power);
}

CyclotomicInteger adjoint_trace(const KacCoordinates& kac, int power)
{
    return profile_trace(eigenvalue_profile(kac), power);
}

long long rational_trace(const CyclotomicInteger& t)
{
    auto v = t.rational_value();
    if (!v) throw std::domain_error("trace is not rational: " + t.to_string());
    return *v;
}

std::vector<TorsionClass> enumerate_irreducible_elements(RootSystemPtr rs)
{
    if (!rs || !rs->is_simple()) throw std::invalid_argument("enumerate_irreducible_elements: simple root system required");
    const auto marks = extended_marks(*rs);
    const auto autos = diagram_automorphisms(extended_cartan(*rs));
    std::set<int> seen;
    std::vector<TorsionClass> out;
    for (int i = 0; i < static_cast<int>(marks.size()); ++i) {
        if (marks[static_cast<std::size_t>(i)] < 2 || seen.count(i)) continue;
        for (const auto& a : autos) seen.insert(a[static_cast<std::size_t>(i)]);
        auto kac = KacCoordinates::single(rs, i);
        auto cent = torsion_centralizer(kac);
        auto prof = eigenvalue_profile(kac);
        out.push_back({"", kac.order(), kac, std::move(cent), std::move(prof)});
    }
    std::sort(out.begin(), out.end(), [](const TorsionClass& a, const TorsionClass& b) {
        if (a.order != b.order) return a.order < b.order;
        const auto da = a.centralizer.type.dimension(), db = b.centralizer.type.dimension();
        if (da != db) return da > db;
        return a.kac.labels() < b.kac.labels();
    });
    return out;
}

void name_classes(std::vector<TorsionClass>& classes, const std::vector<ClassName>& names)
{
    for (auto& c : classes) {
        const ClassName* hit = nullptr;
        for (const auto& n : names) {
            if (!n.centralizer.isomorphic(c.centralizer.type)) continue;
            if (n.name.empty() || std::stoi(n.name) != c.order) continue;
            if (hit) throw std::runtime_error("name_classes: ambiguous name for centralizer " + c.centralizer.type.to_string());
            hit = &n;
        }
        if (!hit) throw std::runtime_error("name_classes: no name for centralizer " + c.centralizer.type.to_string());
        c.name = hit->name;
    }
}

nlohmann::json torsion_class_to_json(const TorsionClass& c)
{
    nlohmann::json traces = nlohmann::json::array();
    for (int k = 0; k < c.order; ++k) {
        const auto t = profile_trace(c.profile, k);
        if (auto v = t.rational_value()) traces.push_back(*v);
        else traces.push_back(t.to_string());
    }
    return {{"type", c.kac.root_system()->name()},
            {"class", c.name},
            {"order", c.order},
            {"labels", c.kac.labels()},
            {"centralizer", c.centralizer.type.to_string()},
            {"rank_deficit", c.centralizer.rank_deficit},
            {"eigenvalue_counts", c.profile.counts},
            {"traces", traces}};
}

}  // namespace irrcent
