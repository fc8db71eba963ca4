#include "irrcent/spin2.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>
#include <utility>

#include "irrcent/finite_group.hpp"

namespace irrcent {

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs))
{
    if (signs_.empty()) throw std::invalid_argument("SignVector: empty");
    if (signs_.size() > 64) throw std::invalid_argument("SignVector: length above 64 is not supported");
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("SignVector: entries must be +1 or -1");
    if (weight() % 2) throw std::invalid_argument("SignVector: odd number of -1 entries");
}

SignVector SignVector::parse(const std::string& text)
{
    static const std::regex item(R"(\s*([+-]?1)\s*(?:\^\s*\{?\s*(\d+)\s*\}?)?\s*)");
    std::string body = text;
    auto l = body.find_first_not_of(" \t"), r = body.find_last_not_of(" \t");
    if (l == std::string::npos) throw std::invalid_argument("SignVector: empty text");
    body = body.substr(l, r - l + 1);
    if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::vector<int> signs;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const auto comma = body.find(',', pos);
        const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::smatch m;
        if (!std::regex_match(tok, m, item)) throw std::invalid_argument("SignVector: bad entry '" + tok + "' in " + text);
        const int s = m[1].str().find('-') != std::string::npos ? -1 : 1;
        const int k = m[2].matched ? std::stoi(m[2].str()) : 1;
        if (k <= 0 || k > 64) throw std::invalid_argument("SignVector: bad exponent in " + text);
        signs.insert(signs.end(), static_cast<std::size_t>(k), s);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return SignVector(std::move(signs));
}

int SignVector::weight() const { return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1)); }

std::vector<int> SignVector::support() const
{
    std::vector<int> s;
    for (int i = 0; i < n(); ++i)
        if (signs_[i] < 0) s.push_back(i);
    return s;
}

std::string SignVector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < signs_.size();) {
        std::size_t j = i;
        while (j < signs_.size() && signs_[j] == signs_[i]) ++j;
        if (i) out += ',';
        out += signs_[i] < 0 ? "-1" : "1";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

std::vector<int> EigenPartition::sizes() const
{
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    return s;
}

EigenPartition eigen_partition(const std::vector<SignVector>& vectors, int n)
{
    for (const auto& v : vectors)
        if (v.n() != n) throw std::invalid_argument("eigen_partition: vectors of different lengths");
    if (n <= 0) throw std::invalid_argument("eigen_partition: nonpositive dimension");
    std::map<std::vector<int>, std::size_t> where;
    EigenPartition p;
    for (int i = 0; i < n; ++i) {
        std::vector<int> pattern;
        for (const auto& v : vectors) pattern.push_back(v.signs()[i]);
        auto [it, fresh] = where.emplace(pattern, p.blocks.size());
        if (fresh) p.blocks.emplace_back();
        p.blocks[it->second].push_back(i);
    }
    return p;
}

namespace {

// SO_k as type factors; sizes 1 and 2 give nothing.
void so_factors(int k, std::vector<TypeFactor>& out)
{
    if (k == 3) out.push_back({make_type(Family::B, 1), false});
    else if (k == 4) {
        out.push_back({make_type(Family::A, 1), false});
        out.push_back({make_type(Family::A, 1), false});
    } else if (k >= 5 && k % 2) out.push_back({make_type(Family::B, (k - 1) / 2), false});
    else if (k == 6) out.push_back({make_type(Family::A, 3), false});
    else if (k >= 8) out.push_back({make_type(Family::D, k / 2), false});
}

SemisimpleTypeLabel sorted_label(std::vector<TypeFactor> f)
{
    std::stable_sort(f.begin(), f.end(), [](const TypeFactor& a, const TypeFactor& b) {
        if (a.type.family != b.type.family) return a.type.family < b.type.family;
        return a.type.rank < b.type.rank;
    });
    return SemisimpleTypeLabel(std::move(f));
}

// Spin lift e_S with sign; e_i^2 = -1.
struct Lift {
    int sign = 1;
    std::uint64_t mask = 0;
    auto operator<=>(const Lift&) const = default;
};

Lift lift_mul(const Lift& a, const Lift& b)
{
    int sign = a.sign * b.sign;
    // move each e_j of b past the e_i of a with i > j
    int swaps = 0;
    for (std::uint64_t t = b.mask; t; t &= t - 1) {
        const int j = __builtin_ctzll(t);
        const std::uint64_t above = j >= 63 ? 0 : (a.mask >> (j + 1));
        swaps += __builtin_popcountll(above);
    }
    swaps += __builtin_popcountll(a.mask & b.mask);  // e_j e_j = -1
    if (swaps % 2) sign = -sign;
    return {sign, a.mask ^ b.mask};
}

struct CatalogueEntry {
    std::string name;
    FiniteGroup group;
};

FiniteGroup dihedral8()
{
    using P = std::vector<int>;
    auto mul = [](const P& a, const P& b) {
        P c(4);
        for (int i = 0; i < 4; ++i) c[i] = b[a[i]];
        return c;
    };
    return FiniteGroup::generate(P{0, 1, 2, 3}, {P{1, 2, 3, 0}, P{0, 3, 2, 1}}, mul);
}

FiniteGroup quaternion8()
{
    // units of the Lipschitz quaternions, as (a,b,c,d)
    using Q = std::vector<int>;
    auto mul = [](const Q& x, const Q& y) {
        return Q{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                 x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                 x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                 x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
    };
    return FiniteGroup::generate(Q{1, 0, 0, 0}, {Q{0, 1, 0, 0}, Q{0, 0, 1, 0}}, mul);
}

// (A x B) / <(z_a, z_b)> for central involutions z_a, z_b.
FiniteGroup central_product(const FiniteGroup& a, const FiniteGroup& b)
{
    auto central_involution = [](const FiniteGroup& g) {
        for (int z : g.center())
            if (g.element_order(z) == 2) return z;
        throw std::logic_error("central_product: no central involution");
    };
    // cyclic(4): the involution is 2; Dih8/Q8 have a unique one
    const int za = central_involution(a), zb = central_involution(b);
    const FiniteGroup p = FiniteGroup::direct_product(a, b);
    const int z = za * b.order() + zb;
    return p.quotient({p.identity(), z});
}

const std::vector<CatalogueEntry>& catalogue()
{
    static const std::vector<CatalogueEntry> cat = [] {
        const auto z2 = FiniteGroup::cyclic(2), z4 = FiniteGroup::cyclic(4);
        const auto d8 = dihedral8(), q8 = quaternion8();
        return std::vector<CatalogueEntry>{
            {"4", z4},
            {"4x2", FiniteGroup::direct_product(z4, z2)},
            {"Dih8", d8},
            {"Q8", q8},
            {"Dih8x2", FiniteGroup::direct_product(d8, z2)},
            {"Q8x2", FiniteGroup::direct_product(q8, z2)},
            {"4oDih8", central_product(z4, d8)},
            {"2^{1+4}_-", central_product(q8, d8)},
        };
    }();
    return cat;
}

}  // namespace

SoCentralizer so_centralizer_type(const std::vector<SignVector>& vectors, int n)
{
    SoCentralizer out;
    std::vector<TypeFactor> f;
    for (int k : eigen_partition(vectors, n).sizes()) {
        out.block_sizes.push_back(k);
        if (k == 2) {
            out.has_torus_block = true;
            ++out.rank_deficit;
        }
        so_factors(k, f);
    }
    out.type = sorted_label(std::move(f));
    return out;
}

LiftOrder spin_lift_order(const SignVector& v)
{
    const int w = v.weight();
    if (w == 0) return {2, true};
    return {w % 4 == 0 ? 2 : 4, false};
}

bool lift_commute(const SignVector& u, const SignVector& v)
{
    if (u.n() != v.n()) throw std::invalid_argument("lift_commute: vectors of different lengths");
    int overlap = 0;
    for (int i = 0; i < u.n(); ++i) overlap += u.signs()[i] < 0 && v.signs()[i] < 0;
    return overlap % 2 == 0;
}

const std::vector<std::string>& two_group_catalogue()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v{"2^k"};
        for (const auto& e : catalogue()) v.push_back(e.name);
        return v;
    }();
    return names;
}

TwoGroupType identify_2group(const std::vector<SignVector>& vectors, bool include_center)
{
    if (vectors.size() > 6) throw std::invalid_argument("identify_2group: at most 6 generators");
    std::vector<Lift> gens;
    for (const auto& v : vectors) {
        if (v.n() != vectors.front().n()) throw std::invalid_argument("identify_2group: vectors of different lengths");
        Lift l;
        for (int i : v.support()) l.mask |= std::uint64_t{1} << i;
        gens.push_back(l);
    }
    if (include_center) gens.push_back({-1, 0});
    const auto g = FiniteGroup::generate(Lift{}, gens, lift_mul, 256);

    TwoGroupType t;
    t.order = g.order();
    t.exponent = g.exponent();
    if (g.is_abelian() && t.exponent <= 2) {
        int k = 0;
        while ((1 << k) < t.order) ++k;
        t.name = k == 0 ? "1" : k == 1 ? "2" : "2^" + std::to_string(k);
        t.recognized = true;
        return t;
    }
    for (const auto& e : catalogue())
        if (isomorphic(g, e.group)) {
            t.name = e.name;
            t.recognized = true;
            return t;
        }
    t.name = "unrecognized";
    return t;
}

ClassicalAmbient ClassicalAmbient::parse(const std::string& text)
{
    static const std::regex re(R"(\s*(Sp|SO)_?\{?(\d+)\}?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw std::invalid_argument("ClassicalAmbient: expected Sp<2n> or SO<n>, got " + text);
    ClassicalAmbient a{m[1].str() == "Sp" ? ClassicalKind::Symplectic : ClassicalKind::Orthogonal, std::stoi(m[2].str())};
    if (a.dimension < 1) throw std::invalid_argument("ClassicalAmbient: dimension must be positive");
    if (a.kind == ClassicalKind::Symplectic && a.dimension % 2)
        throw std::invalid_argument("ClassicalAmbient: symplectic dimension must be even");
    return a;
}

ClassicalCentralizer classical_centralizer(const std::vector<int>& dims, ClassicalAmbient ambient)
{
    ClassicalCentralizer out;
    int sum = 0;
    std::vector<TypeFactor> f;
    for (int d : dims) {
        if (d <= 0) throw std::invalid_argument("classical_centralizer: block dimensions must be positive");
        sum += d;
        if (ambient.kind == ClassicalKind::Symplectic) {
            if (d % 2) throw std::invalid_argument("classical_centralizer: odd symplectic block " + std::to_string(d));
            f.push_back({make_type(Family::C, d / 2), false});
        } else {
            if (d == 2) out.has_torus_block = true;
            so_factors(d, f);
        }
    }
    out.discarded = ambient.dimension - sum;
    const int slack = ambient.kind == ClassicalKind::Orthogonal ? 1 : 0;
    if (out.discarded < 0 || out.discarded > slack)
        throw std::invalid_argument("classical_centralizer: blocks sum to " + std::to_string(sum) + " in dimension " +
                                    std::to_string(ambient.dimension));
    out.type = sorted_label(std::move(f));
    return out;
}

bool classically_irreducible(const std::vector<Summand>& summands)
{
    std::set<std::string> keys;
    for (const auto& s : summands) {
        if (!s.nondegenerate) return false;
        if (!keys.insert(s.key).second) return false;
    }
    return true;
}

}  // namespace irrcent
