#include "irrcent/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "irrcent/rational.hpp"

namespace irrcent {

IntMatrix standard_gram(SimpleType t)
{
    if (!t.admissible()) throw std::invalid_argument("inadmissible type " + t.to_string());
    const int n = t.rank;
    IntMatrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            // alpha_n short
            for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 2 : 4;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
            break;
        case Family::C:
            // alpha_n long
            for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 4 : 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, (i + 1 == n - 1) ? -2 : -1);
            if (n == 1) g[0][0] = 2;
            break;
        case Family::D:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Family::E:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            link(0, 2, -1);
            link(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::F:
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case Family::G:
            g[0][0] = 2;
            g[1][1] = 6;
            link(0, 1, -3);
            break;
    }
    return g;
}

IntMatrix cartan_from_gram(const IntMatrix& gram)
{
    const std::size_t n = gram.size();
    IntMatrix c(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if ((2 * gram[i][j]) % gram[j][j] != 0) throw std::logic_error("non-crystallographic gram");
            c[i][j] = 2 * gram[i][j] / gram[j][j];
        }
    return c;
}

RootSystem::RootSystem(SimpleType t) : comps_{t} { build(); }

RootSystem::RootSystem(std::vector<SimpleType> components) : comps_(std::move(components)) { build(); }

void RootSystem::build()
{
    int n = 0;
    for (const auto& t : comps_) {
        if (!t.admissible()) throw std::invalid_argument("inadmissible type " + t.to_string());
        offsets_.push_back(n);
        n += t.rank;
    }
    const auto N = static_cast<std::size_t>(n);
    gram_.assign(N, std::vector<int>(N, 0));
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        const auto g = standard_gram(comps_[c]);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) gram_[offsets_[c] + i][offsets_[c] + j] = g[i][j];
    }
    cartan_ = cartan_from_gram(gram_);
    if (n == 0) return;

    const RatMatrix inv = invert(cartan_);
    inv_cartan_den_ = lcm_of_denominators(inv);
    inv_cartan_num_.assign(N, std::vector<int>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            inv_cartan_num_[i][j] = static_cast<int>((inv[i][j] * inv_cartan_den_).numerator());

    // (omega_i, omega_j) = (C^-1)_ij * (alpha_j, alpha_j) / 2
    RatMatrix wg(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) wg[i][j] = inv[i][j] * Rational(gram_[j][j], 2);
    wscale_ = lcm_of_denominators(wg);
    wgram_.assign(N, std::vector<int>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) wgram_[i][j] = static_cast<int>((wg[i][j] * wscale_).numerator());

    std::vector<Rational> h(N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) h[i] += inv[i][j];
    hscale_ = 1;
    for (const auto& x : h) hscale_ = std::lcm(hscale_, x.denominator());
    hcoef_.resize(N);
    for (std::size_t i = 0; i < N; ++i) hcoef_[i] = (h[i] * hscale_).numerator();

    // reflection closure from the simple roots
    std::deque<Weight> queue;
    for (std::size_t i = 0; i < N; ++i) {
        Weight e(N, 0);
        e[i] = 1;
        if (root_set_.insert(e).second) queue.push_back(e);
    }
    while (!queue.empty()) {
        Weight r = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < N; ++i) {
            int pairing = 0;
            for (std::size_t j = 0; j < N; ++j) pairing += r[j] * cartan_[j][i];
            if (pairing == 0) continue;
            Weight s = r;
            s[i] -= pairing;
            if (root_set_.insert(s).second) queue.push_back(s);
        }
    }
    for (const auto& r : root_set_)
        if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) positive_.push_back(r);
    std::sort(positive_.begin(), positive_.end(), [](const Weight& a, const Weight& b) {
        const int ha = std::accumulate(a.begin(), a.end(), 0);
        const int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    if (positive_.size() * 2 != root_set_.size()) throw std::logic_error("root closure is not symmetric");
    roots_ = positive_;
    for (const auto& r : positive_) {
        Weight m = r;
        for (auto& x : m) x = -x;
        roots_.push_back(m);
    }
}

int RootSystem::component_of_node(int node) const
{
    for (std::size_t c = comps_.size(); c-- > 0;)
        if (node >= offsets_[c]) return static_cast<int>(c);
    throw std::out_of_range("node index");
}

SimpleType RootSystem::type() const
{
    if (!is_simple()) throw std::logic_error("root system " + name() + " is not simple");
    return comps_[0];
}

std::string RootSystem::name() const { return SemisimpleTypeLabel::of(comps_).to_string(); }

Weight RootSystem::root_to_weight(const Weight& r) const
{
    const std::size_t n = cartan_.size();
    Weight w(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        if (r[j] != 0)
            for (std::size_t i = 0; i < n; ++i) w[i] += r[j] * cartan_[j][i];
    return w;
}

long long RootSystem::root_inner(const Weight& x, const Weight& y) const
{
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            for (std::size_t j = 0; j < y.size(); ++j) s += static_cast<long long>(x[i]) * gram_[i][j] * y[j];
    return s;
}

Weight RootSystem::highest_root(std::size_t comp) const
{
    const int lo = offsets_.at(comp);
    const int hi = lo + comps_[comp].rank;
    const Weight* best = nullptr;
    int best_h = -1;
    for (const auto& r : positive_) {
        bool inside = true;
        for (int i = 0; i < rank(); ++i)
            if ((i < lo || i >= hi) && r[i] != 0) inside = false;
        if (!inside) continue;
        const int h = std::accumulate(r.begin(), r.end(), 0);
        if (h > best_h) {
            best_h = h;
            best = &r;
        }
    }
    return *best;
}

std::vector<int> RootSystem::marks(std::size_t comp) const
{
    const Weight h = highest_root(comp);
    return {h.begin() + offsets_[comp], h.begin() + offsets_[comp] + comps_[comp].rank};
}

unsigned long long RootSystem::weyl_order() const
{
    unsigned long long w = 1;
    for (const auto& t : comps_) w *= t.weyl_order();
    return w;
}

long long RootSystem::inner(const Weight& a, const Weight& b) const
{
    long long s = 0;
    const std::size_t n = wgram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        long long t = 0;
        for (std::size_t j = 0; j < n; ++j) t += static_cast<long long>(wgram_[i][j]) * b[j];
        s += a[i] * t;
    }
    return s;
}

long long RootSystem::height(const Weight& mu) const
{
    long long s = 0;
    for (std::size_t i = 0; i < hcoef_.size(); ++i) s += hcoef_[i] * mu[i];
    return s;
}

Weight RootSystem::reflect(const Weight& mu, int i) const
{
    Weight r = mu;
    const int k = mu[i];
    if (k != 0)
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= k * cartan_[i][j];
    return r;
}

bool RootSystem::is_dominant(const Weight& mu) const
{
    return std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; });
}

Weight RootSystem::dominant_representative(const Weight& mu) const
{
    Weight w = mu;
    for (;;) {
        int i = 0;
        while (i < rank() && w[i] >= 0) ++i;
        if (i == rank()) return w;
        w = reflect(w, i);
    }
}

bool RootSystem::in_root_lattice(const Weight& mu) const
{
    const std::size_t n = cartan_.size();
    for (std::size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<long long>(mu[i]) * inv_cartan_num_[i][j];
        if (s % inv_cartan_den_ != 0) return false;
    }
    return true;
}

RootSystemPtr build_root_system(SimpleType t) { return std::make_shared<const RootSystem>(t); }

RootSystemPtr build_root_system(const std::vector<SimpleType>& comps)
{
    return std::make_shared<const RootSystem>(comps);
}

RootSystemPtr build_root_system(const SemisimpleTypeLabel& label) { return build_root_system(label.types()); }

std::vector<int> highest_root_marks(const RootSystem& rs) { return rs.marks(0); }

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu)
{
    std::set<Weight> seen{mu};
    std::deque<Weight> queue{mu};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < rs.rank(); ++i) {
            if (w[i] == 0) continue;
            Weight s = rs.reflect(w, i);
            if (seen.insert(s).second) queue.push_back(s);
        }
    }
    return {seen.begin(), seen.end()};
}

unsigned long long orbit_size(const RootSystem& rs, const Weight& mu)
{
    const Weight d = rs.dominant_representative(mu);
    std::vector<int> zero_nodes;
    for (int i = 0; i < rs.rank(); ++i)
        if (d[i] == 0) zero_nodes.push_back(i);
    IntMatrix sub(zero_nodes.size(), std::vector<int>(zero_nodes.size()));
    for (std::size_t a = 0; a < zero_nodes.size(); ++a)
        for (std::size_t b = 0; b < zero_nodes.size(); ++b) sub[a][b] = rs.cartan()[zero_nodes[a]][zero_nodes[b]];
    unsigned long long stab = 1;
    for (const auto& t : identify_diagram(sub).types) stab *= t.weyl_order();
    return rs.weyl_order() / stab;
}

namespace {

// Backtracking search for a bijection k -> nodes[p[k]] matching the
// standard Cartan matrix s against the submatrix of c on nodes.
bool match_diagram(const IntMatrix& c, const std::vector<int>& nodes, const IntMatrix& s, std::vector<int>& perm)
{
    const std::size_t r = nodes.size();
    std::vector<bool> used(r, false);
    perm.assign(r, -1);
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == r) return true;
        for (std::size_t cand = 0; cand < r; ++cand) {
            if (used[cand]) continue;
            const int node = nodes[cand];
            if (c[node][node] != s[k][k]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const int other = perm[j];
                ok = c[node][other] == s[k][j] && c[other][node] == s[j][k];
            }
            if (!ok) continue;
            used[cand] = true;
            perm[k] = node;
            if (place(k + 1)) return true;
            used[cand] = false;
        }
        return false;
    };
    return place(0);
}

std::vector<SimpleType> candidate_types(int r)
{
    std::vector<SimpleType> out{{Family::A, r}};
    if (r >= 2) out.push_back({Family::B, r});
    if (r >= 3) out.push_back({Family::C, r});
    if (r >= 4) out.push_back({Family::D, r});
    if (r >= 6 && r <= 8) out.push_back({Family::E, r});
    if (r == 4) out.push_back({Family::F, 4});
    if (r == 2) out.push_back({Family::G, 2});
    return out;
}

}  // namespace

DiagramIdentification identify_diagram(const IntMatrix& cartan)
{
    const int n = static_cast<int>(cartan.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> members;
        std::deque<int> q{start};
        comp[start] = static_cast<int>(groups.size());
        while (!q.empty()) {
            const int v = q.front();
            q.pop_front();
            members.push_back(v);
            for (int w = 0; w < n; ++w)
                if (w != v && comp[w] < 0 && (cartan[v][w] != 0 || cartan[w][v] != 0)) {
                    comp[w] = comp[start];
                    q.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        groups.push_back(members);
    }
    DiagramIdentification out;
    for (const auto& members : groups) {
        const int r = static_cast<int>(members.size());
        bool found = false;
        for (const auto& t : candidate_types(r)) {
            const IntMatrix s = cartan_from_gram(standard_gram(t));
            std::vector<int> perm;
            if (match_diagram(cartan, members, s, perm)) {
                out.types.push_back(t);
                out.nodes.push_back(perm);
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("matrix is not a Cartan matrix of finite type");
    }
    return out;
}

std::vector<std::vector<int>> diagram_automorphisms(const IntMatrix& cartan)
{
    const std::size_t n = cartan.size();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == n) {
            out.push_back(perm);
            return;
        }
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (used[cand] || cartan[cand][cand] != cartan[k][k]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                ok = cartan[cand][perm[j]] == cartan[k][j] && cartan[perm[j]][cand] == cartan[j][k];
            if (!ok) continue;
            used[cand] = true;
            perm[k] = static_cast<int>(cand);
            place(k + 1);
            used[cand] = false;
        }
    };
    place(0);
    return out;
}

std::vector<Weight> extended_nodes(const RootSystem& rs)
{
    Weight low = rs.highest_root(0);
    for (auto& x : low) x = -x;
    std::vector<Weight> out{low};
    for (int i = 0; i < rs.rank(); ++i) {
        Weight e(static_cast<std::size_t>(rs.rank()), 0);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

IntMatrix cartan_of_roots(const RootSystem& rs, const std::vector<Weight>& roots)
{
    const std::size_t n = roots.size();
    IntMatrix c(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c[i][j] = static_cast<int>(2 * rs.root_inner(roots[i], roots[j]) / rs.root_inner(roots[j], roots[j]));
    return c;
}

IntMatrix extended_cartan(const RootSystem& rs) { return cartan_of_roots(rs, extended_nodes(rs)); }

std::vector<int> extended_marks(const RootSystem& rs)
{
    std::vector<int> m{1};
    for (int a : rs.marks(0)) m.push_back(a);
    return m;
}

SemisimpleTypeLabel fold(const RootSystem& rs, int order)
{
    const SimpleType t = rs.type();
    if (order != 2 && order != 3) throw std::invalid_argument("fold: automorphism order must be 2 or 3");
    const auto autos = diagram_automorphisms(rs.cartan());
    const std::vector<int>* sigma = nullptr;
    for (const auto& p : autos) {
        std::vector<int> q = p;
        int k = 1;
        auto is_identity = [](const std::vector<int>& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != static_cast<int>(i)) return false;
            return true;
        };
        while (!is_identity(q)) {
            std::vector<int> next(q.size());
            for (std::size_t i = 0; i < q.size(); ++i) next[i] = p[q[i]];
            q = next;
            ++k;
        }
        if (k == order) {
            sigma = &p;
            break;
        }
    }
    if (!sigma) throw std::invalid_argument("fold: " + t.to_string() + " has no diagram automorphism of order " + std::to_string(order));

    std::vector<bool> seen(sigma->size(), false);
    int orbits = 0;
    for (std::size_t i = 0; i < sigma->size(); ++i) {
        if (seen[i]) continue;
        ++orbits;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>((*sigma)[j])) seen[j] = true;
    }

    SimpleType out;
    if (t.family == Family::A && t.rank % 2 == 1) out = {Family::C, (t.rank + 1) / 2};
    else if (t.family == Family::A) out = {Family::B, t.rank / 2};
    else if (t.family == Family::D && order == 3) out = {Family::G, 2};
    else if (t.family == Family::D) out = {Family::B, t.rank - 1};
    else if (t.family == Family::E) out = {Family::F, 4};
    else throw std::logic_error("fold: unexpected automorphism");
    if (out.rank != orbits) throw std::logic_error("fold: rank does not match orbit count");
    return SemisimpleTypeLabel({{out, false}});
}

std::set<std::vector<SimpleType>> maximal_rank_subsystems(SimpleType t)
{
    std::map<SimpleType, std::vector<std::vector<SimpleType>>> deletions;
    auto deletions_of = [&](SimpleType s) -> const std::vector<std::vector<SimpleType>>& {
        auto it = deletions.find(s);
        if (it != deletions.end()) return it->second;
        const RootSystem rs(s);
        const IntMatrix ext = extended_cartan(rs);
        std::vector<std::vector<SimpleType>> res;
        for (std::size_t del = 1; del < ext.size(); ++del) {
            std::vector<int> keep;
            for (std::size_t i = 0; i < ext.size(); ++i)
                if (i != del) keep.push_back(static_cast<int>(i));
            IntMatrix sub(keep.size(), std::vector<int>(keep.size()));
            for (std::size_t a = 0; a < keep.size(); ++a)
                for (std::size_t b = 0; b < keep.size(); ++b) sub[a][b] = ext[keep[a]][keep[b]];
            std::vector<SimpleType> types;
            for (const auto& x : identify_diagram(sub).types) types.push_back(x.normalized());
            res.push_back(types);
        }
        return deletions.emplace(s, std::move(res)).first->second;
    };

    std::set<std::vector<SimpleType>> seen;
    std::deque<std::vector<SimpleType>> queue;
    std::vector<SimpleType> start{t.normalized()};
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        for (std::size_t c = 0; c < cur.size(); ++c) {
            if (c > 0 && cur[c] == cur[c - 1]) continue;
            for (const auto& repl : deletions_of(cur[c])) {
                std::vector<SimpleType> next;
                for (std::size_t k = 0; k < cur.size(); ++k)
                    if (k != c) next.push_back(cur[k]);
                next.insert(next.end(), repl.begin(), repl.end());
                std::sort(next.begin(), next.end());
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
    }
    return seen;
}

}  // namespace irrcent
