#include "irrcent/repth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace irrcent {

Character::Character(RootSystemPtr rs) : rs_(std::move(rs))
{
    if (!rs_) throw std::invalid_argument("Character: null root system");
}

void Character::add(const Weight& w, long long mult)
{
    if (static_cast<int>(w.size()) != rs_->rank()) throw std::invalid_argument("Character: weight of wrong rank");
    if (mult == 0) return;
    auto& m = entries_[w];
    m += mult;
    if (m == 0) entries_.erase(w);
}

long long Character::multiplicity(const Weight& w) const
{
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

long long Character::dimension() const
{
    long long d = 0;
    for (const auto& [w, m] : entries_) d += m;
    return d;
}

bool Character::weyl_stable() const
{
    for (const auto& [w, m] : entries_) {
        if (m <= 0) return false;
        if (multiplicity(rs_->dominant_representative(w)) != m) return false;
    }
    return true;
}

std::map<Weight, long long> Character::dominant_part() const
{
    std::map<Weight, long long> out;
    for (const auto& [w, m] : entries_)
        if (rs_->is_dominant(w)) out.emplace(w, m);
    return out;
}

Character& Character::operator+=(const Character& other)
{
    if (other.rs_->components() != rs_->components()) throw std::invalid_argument("Character: ambient mismatch");
    for (const auto& [w, m] : other.entries_) add(w, m);
    return *this;
}

Character trivial_character(RootSystemPtr rs, long long mult)
{
    Character c(rs);
    c.add(rs->zero_weight(), mult);
    return c;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda)
{
    if (static_cast<int>(lambda.size()) != rs.rank()) throw std::invalid_argument("weyl_dimension: wrong rank");
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: weight is not dominant");
    BigInt num = 1, den = 1;
    const auto& g = rs.gram();
    for (const auto& a : rs.positive_roots()) {
        long long p = 0, q = 0;
        for (int i = 0; i < rs.rank(); ++i) {
            if (a[i] == 0) continue;
            p += static_cast<long long>(a[i]) * g[i][i] * (lambda[i] + 1);
            q += static_cast<long long>(a[i]) * g[i][i];
        }
        num *= p;
        den *= q;
    }
    if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral result");
    return num / den;
}

namespace {

std::vector<Weight> positive_root_weights(const RootSystem& rs)
{
    std::vector<Weight> out;
    for (const auto& a : rs.positive_roots()) out.push_back(rs.root_to_weight(a));
    return out;
}

}  // namespace

std::map<Weight, long long> dominant_multiplicities(const RootSystem& rs, const Weight& lambda)
{
    if (static_cast<int>(lambda.size()) != rs.rank() || !rs.is_dominant(lambda))
        throw std::invalid_argument("dominant_multiplicities: weight is not dominant");
    const auto pos = positive_root_weights(rs);

    std::set<Weight> dom{lambda};
    std::vector<Weight> frontier{lambda};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& mu : frontier)
            for (const auto& a : pos) {
                Weight nu = mu;
                bool ok = true;
                for (std::size_t i = 0; i < nu.size(); ++i) {
                    nu[i] -= a[i];
                    if (nu[i] < 0) ok = false;
                }
                if (ok && dom.insert(nu).second) next.push_back(nu);
            }
        frontier = std::move(next);
    }
    std::vector<Weight> order(dom.begin(), dom.end());
    std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
        const auto ha = rs.height(a), hb = rs.height(b);
        return ha != hb ? ha > hb : a > b;
    });

    Weight rho(lambda.size(), 1);
    auto shifted_norm = [&](const Weight& mu) {
        Weight s = mu;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
        return rs.inner(s, s);
    };
    const long long top = shifted_norm(lambda);

    std::map<Weight, long long> mult;
    mult[lambda] = 1;
    // string[r][nu] = sum over k >= 1 of 2(nu + k a_r, a_r) m(nu + k a_r); every
    // weight above nu is settled before nu is reached, so entries never change
    std::vector<std::map<Weight, long long>> string(pos.size());
    auto string_sum = [&](std::size_t r, const Weight& from) {
        const auto& a = pos[r];
        auto& memo = string[r];
        std::vector<std::pair<Weight, long long>> chain;  // (nu + a, term)
        Weight nu = from;
        long long tail = 0;
        for (;;) {
            auto hit = memo.find(nu);
            if (hit != memo.end()) {
                tail = hit->second;
                break;
            }
            Weight up = nu;
            for (std::size_t i = 0; i < up.size(); ++i) up[i] += a[i];
            auto it = mult.find(rs.dominant_representative(up));
            chain.emplace_back(nu, it == mult.end() ? 0 : 2 * rs.inner(up, a) * it->second);
            if (it == mult.end()) break;
            nu = std::move(up);
        }
        for (auto c = chain.rbegin(); c != chain.rend(); ++c) {
            tail += c->second;
            memo.emplace(c->first, tail);
        }
        return memo.at(from);
    };
    for (const auto& mu : order) {
        if (mu == lambda) continue;
        long long sum = 0;
        for (std::size_t r = 0; r < pos.size(); ++r) sum += string_sum(r, mu);
        const long long den = top - shifted_norm(mu);
        if (den <= 0 || sum % den != 0) throw std::logic_error("Freudenthal recursion failed");
        mult[mu] = sum / den;
    }
    return mult;
}

Character dominant_character(RootSystemPtr rs, const Weight& lambda)
{
    Character ch(rs);
    for (const auto& [mu, m] : dominant_multiplicities(*rs, lambda))
        for (const auto& w : weyl_orbit(*rs, mu)) ch.add(w, m);
    return ch;
}

Character adjoint_character(RootSystemPtr rs)
{
    Character ch(rs);
    for (const auto& r : rs->roots()) ch.add(rs->root_to_weight(r), 1);
    if (rs->rank() > 0) ch.add(rs->zero_weight(), rs->rank());
    return ch;
}

std::vector<CompositionFactor> semisimplify(const Character& ch)
{
    const RootSystem& rs = ch.root_system();
    if (!ch.weyl_stable()) throw std::invalid_argument("semisimplify: character is not Weyl-stable");
    auto rest = ch.dominant_part();
    std::vector<CompositionFactor> out;
    while (!rest.empty()) {
        auto best = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            const auto h1 = rs.height(it->first), h0 = rs.height(best->first);
            if (h1 > h0 || (h1 == h0 && it->first > best->first)) best = it;
        }
        const Weight lambda = best->first;
        const long long c = best->second;
        for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) {
            auto& r = rest[mu];
            r -= c * m;
            if (r < 0) throw std::invalid_argument("semisimplify: negative multiplicity; input is not a character");
            if (r == 0) rest.erase(mu);
        }
        out.push_back({lambda, c, static_cast<long long>(weyl_dimension(rs, lambda))});
    }
    return out;
}

bool has_trivial_factor(const Character& ch)
{
    for (const auto& f : semisimplify(ch))
        if (std::all_of(f.highest_weight.begin(), f.highest_weight.end(), [](int x) { return x == 0; })) return true;
    return false;
}

std::string weight_label(const RootSystem& rs, const Weight& w)
{
    std::string out;
    for (std::size_t c = 0; c < rs.components().size(); ++c) {
        if (c) out += ';';
        const int off = rs.component_offset(c);
        std::string part;
        for (int i = 0; i < rs.components()[c].rank; ++i) {
            const int x = w[off + i];
            if (x == 0) continue;
            if (!part.empty()) part += '+';
            if (x != 1) part += std::to_string(x);
            part += "l" + std::to_string(i + 1);
        }
        out += part.empty() ? "0" : part;
    }
    return out;
}

nlohmann::json factors_to_json(const RootSystem& rs, const std::vector<CompositionFactor>& factors)
{
    nlohmann::json arr = nlohmann::json::array();
    long long total = 0;
    for (const auto& f : factors) {
        arr.push_back({{"weight", f.highest_weight},
                       {"label", weight_label(rs, f.highest_weight)},
                       {"multiplicity", f.multiplicity},
                       {"dimension", f.dimension}});
        total += f.multiplicity * f.dimension;
    }
    return {{"schema_version", 1}, {"ambient", rs.name()}, {"factors", arr}, {"dimension", total}};
}

nlohmann::json character_to_json(const Character& ch)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, m] : ch.entries()) arr.push_back({{"weight", w}, {"multiplicity", m}});
    return {{"schema_version", 1}, {"ambient", ch.root_system().name()}, {"weights", arr}, {"dimension", ch.dimension()}};
}

}  // namespace irrcent
