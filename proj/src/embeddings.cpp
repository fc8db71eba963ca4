#include "irrcent/embeddings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace irrcent {

namespace {

IntMatrix zeros(std::size_t r, std::size_t c) { return IntMatrix(r, std::vector<int>(c, 0)); }

bool positive_lex(const Weight& w)
{
    for (int x : w)
        if (x != 0) return x > 0;
    return false;
}

Weight negate(Weight w)
{
    for (auto& x : w) x = -x;
    return w;
}

// Weights of a character listed with multiplicity, highest first.
std::vector<Weight> weight_list(const Character& v)
{
    std::vector<Weight> out;
    for (const auto& [w, m] : v.entries())
        for (long long k = 0; k < m; ++k) out.push_back(w);
    const RootSystem& rs = v.root_system();
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const auto ha = rs.height(a), hb = rs.height(b);
        return ha != hb ? ha > hb : a > b;
    });
    return out;
}

// n weights w_i with V = {+-w_i} (+ one zero weight when `odd`).
std::vector<Weight> half_weights(const Character& v, bool odd)
{
    std::vector<Weight> out;
    long long zeros_count = 0;
    for (const auto& [w, m] : v.entries()) {
        if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) {
            zeros_count = m;
            continue;
        }
        if (!positive_lex(w)) continue;
        if (v.multiplicity(negate(w)) != m) throw std::invalid_argument("module is not self-dual");
        for (long long k = 0; k < m; ++k) out.push_back(w);
    }
    if (odd) --zeros_count;
    if (zeros_count < 0 || zeros_count % 2 != 0) throw std::invalid_argument("zero weight space has the wrong parity");
    const Weight z = v.root_system().zero_weight();
    for (long long k = 0; k < zeros_count / 2; ++k) out.push_back(z);
    const RootSystem& rs = v.root_system();
    std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        const auto ha = rs.height(a), hb = rs.height(b);
        return ha != hb ? ha > hb : a > b;
    });
    return out;
}

Embedding from_epsilon(const Character& v, SimpleType target, const std::vector<Weight>& eps, const std::string& name)
{
    const RootSystemPtr h = v.root_system_ptr();
    const int n = target.rank;
    const auto hr = static_cast<std::size_t>(h->rank());
    IntMatrix m = zeros(hr, static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        // twice the epsilon coefficients of omega_{j+1}
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        const bool half_spin_d = target.family == Family::D && j >= n - 2;
        const bool half_spin_b = target.family == Family::B && j == n - 1;
        if (half_spin_d) {
            for (int i = 0; i < n; ++i) c[i] = 1;
            if (j == n - 2) c[n - 1] = -1;
        } else if (half_spin_b) {
            for (int i = 0; i < n; ++i) c[i] = 1;
        } else {
            for (int i = 0; i <= j; ++i) c[i] = 2;
        }
        for (std::size_t r = 0; r < hr; ++r) {
            int s = 0;
            for (int i = 0; i < n; ++i) s += c[i] * eps[i][r];
            if (s % 2 != 0)
                throw std::domain_error("lattice error: fundamental weight " + std::to_string(j + 1) + " of " + target.to_string() +
                                        " does not restrict to an integral weight");
            m[r][j] = s / 2;
        }
    }
    return {h, build_root_system(target), m, name};
}

}  // namespace

Character restrict(const Character& ch, const Embedding& emb)
{
    if (ch.root_system().components() != emb.target->components())
        throw std::invalid_argument("restrict: character lives on " + ch.root_system().name() + ", embedding target is " +
                                    emb.target->name());
    Character out(emb.source);
    const auto& m = emb.weight_map;
    for (const auto& [w, mult] : ch.entries()) {
        Weight r(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) r[i] += m[i][j] * w[j];
        out.add(r, mult);
    }
    return out;
}

Embedding compose(const Embedding& inner, const Embedding& outer)
{
    if (inner.target->components() != outer.source->components())
        throw std::invalid_argument("compose: " + inner.target->name() + " != " + outer.source->name());
    const std::size_t k = inner.weight_map.size();
    const std::size_t g = static_cast<std::size_t>(outer.target->rank());
    IntMatrix m = zeros(k, g);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < outer.weight_map.size(); ++j)
            if (inner.weight_map[i][j] != 0)
                for (std::size_t c = 0; c < g; ++c) m[i][c] += inner.weight_map[i][j] * outer.weight_map[j][c];
    std::string name = outer.name.empty() ? inner.name : inner.name.empty() ? outer.name : outer.name + " > " + inner.name;
    return {inner.source, outer.target, m, name};
}

Embedding identity_embedding(RootSystemPtr rs)
{
    const auto n = static_cast<std::size_t>(rs->rank());
    IntMatrix m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return {rs, rs, m, rs->name()};
}

Embedding subsystem_embedding(RootSystemPtr g, const std::vector<Weight>& roots, const std::vector<SimpleType>& types)
{
    auto h = build_root_system(types);
    if (static_cast<int>(roots.size()) != h->rank()) throw std::invalid_argument("subsystem_embedding: rank mismatch");
    for (const auto& r : roots)
        if (!g->is_root(r)) throw std::invalid_argument("subsystem_embedding: not a root of " + g->name());
    if (cartan_of_roots(*g, roots) != h->cartan())
        throw std::invalid_argument("subsystem_embedding: roots do not form a simple system of type " + h->name());
    IntMatrix m = zeros(roots.size(), static_cast<std::size_t>(g->rank()));
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const long long norm = g->root_inner(roots[j], roots[j]);
        for (int i = 0; i < g->rank(); ++i) {
            const long long num = static_cast<long long>(roots[j][i]) * g->gram()[i][i];
            if (num % norm != 0) throw std::logic_error("subsystem_embedding: non-integral coroot");
            m[j][i] = static_cast<int>(num / norm);
        }
    }
    return {h, g, m, h->name()};
}

Embedding subsystem_embedding(RootSystemPtr g, const std::vector<Weight>& roots)
{
    const auto id = identify_diagram(cartan_of_roots(*g, roots));
    std::vector<Weight> ordered;
    for (const auto& comp : id.nodes)
        for (int k : comp) ordered.push_back(roots[k]);
    return subsystem_embedding(g, ordered, id.types);
}

Embedding node_deletion(RootSystemPtr g, int node)
{
    auto nodes = extended_nodes(*g);
    if (node < 0 || node >= static_cast<int>(nodes.size())) throw std::out_of_range("node_deletion: node index");
    nodes.erase(nodes.begin() + node);
    return subsystem_embedding(g, nodes);
}

Embedding levi_embedding(RootSystemPtr g, const std::vector<int>& nodes)
{
    std::vector<Weight> roots;
    for (int i : nodes) {
        Weight e(static_cast<std::size_t>(g->rank()), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        roots.push_back(e);
    }
    if (roots.empty()) {
        IntMatrix m;
        return {build_root_system(std::vector<SimpleType>{}), g, m, "1"};
    }
    return subsystem_embedding(g, roots);
}

Embedding sl_embedding(const Character& v)
{
    const auto ws = weight_list(v);
    const int n = static_cast<int>(ws.size());
    if (n < 2) throw std::invalid_argument("sl_embedding: module of dimension < 2");
    const RootSystemPtr h = v.root_system_ptr();
    const auto hr = static_cast<std::size_t>(h->rank());
    Weight total(hr, 0);
    for (const auto& w : ws)
        for (std::size_t r = 0; r < hr; ++r) total[r] += w[r];
    if (std::any_of(total.begin(), total.end(), [](int x) { return x != 0; }))
        throw std::invalid_argument("sl_embedding: weights do not sum to zero");
    IntMatrix m = zeros(hr, static_cast<std::size_t>(n - 1));
    Weight acc(hr, 0);
    for (int j = 0; j + 1 < n; ++j) {
        for (std::size_t r = 0; r < hr; ++r) {
            acc[r] += ws[j][r];
            m[r][j] = acc[r];
        }
    }
    return {h, build_root_system(SimpleType{Family::A, n - 1}), m, h->name() + " < SL" + std::to_string(n)};
}

Embedding orthogonal_embedding(const Character& v)
{
    const long long dim = v.dimension();
    const bool odd = dim % 2 == 1;
    const int n = static_cast<int>(dim / 2);
    if (dim < 3 || dim == 4) throw std::invalid_argument("orthogonal_embedding: SO" + std::to_string(dim) + " is not simple");
    const auto eps = half_weights(v, odd);
    const SimpleType t{odd ? Family::B : Family::D, n};
    return from_epsilon(v, t, eps, v.root_system().name() + " < SO" + std::to_string(dim));
}

Embedding symplectic_embedding(const Character& v)
{
    const long long dim = v.dimension();
    if (dim % 2 != 0 || dim < 2) throw std::invalid_argument("symplectic_embedding: odd dimension");
    const auto eps = half_weights(v, false);
    const SimpleType t{Family::C, static_cast<int>(dim / 2)};
    return from_epsilon(v, t, eps, v.root_system().name() + " < Sp" + std::to_string(dim));
}

Embedding product_embedding(const std::vector<Embedding>& parts)
{
    std::vector<SimpleType> src, tgt;
    for (const auto& p : parts) {
        src.insert(src.end(), p.source->components().begin(), p.source->components().end());
        tgt.insert(tgt.end(), p.target->components().begin(), p.target->components().end());
    }
    auto s = build_root_system(src);
    auto t = build_root_system(tgt);
    IntMatrix m = zeros(static_cast<std::size_t>(s->rank()), static_cast<std::size_t>(t->rank()));
    std::size_t ro = 0, co = 0;
    std::string name;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.weight_map.size(); ++i)
            for (std::size_t j = 0; j < p.weight_map[i].size(); ++j) m[ro + i][co + j] = p.weight_map[i][j];
        ro += static_cast<std::size_t>(p.source->rank());
        co += static_cast<std::size_t>(p.target->rank());
        name += (name.empty() ? "" : " x ") + p.name;
    }
    return {s, t, m, name};
}

Embedding fiber_embedding(RootSystemPtr h, const std::vector<Embedding>& parts)
{
    std::vector<SimpleType> tgt;
    for (const auto& p : parts) {
        if (p.source->components() != h->components()) throw std::invalid_argument("fiber_embedding: source mismatch");
        tgt.insert(tgt.end(), p.target->components().begin(), p.target->components().end());
    }
    auto t = build_root_system(tgt);
    IntMatrix m = zeros(static_cast<std::size_t>(h->rank()), static_cast<std::size_t>(t->rank()));
    std::size_t co = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.weight_map.size(); ++i)
            for (std::size_t j = 0; j < p.weight_map[i].size(); ++j) m[i][co + j] = p.weight_map[i][j];
        co += static_cast<std::size_t>(p.target->rank());
    }
    return {h, t, m, h->name() + " < " + t->name()};
}

Embedding component_identity(RootSystemPtr h, std::size_t comp)
{
    const SimpleType t = h->components().at(comp);
    IntMatrix m = zeros(static_cast<std::size_t>(h->rank()), static_cast<std::size_t>(t.rank));
    const int off = h->component_offset(comp);
    for (int k = 0; k < t.rank; ++k) m[off + k][k] = 1;
    return {h, build_root_system(t), m, t.to_string()};
}

Weight product_weight(const RootSystem& rs, const std::vector<std::vector<int>>& per_component)
{
    if (per_component.size() != rs.components().size()) throw std::invalid_argument("product_weight: component count");
    Weight w;
    for (std::size_t c = 0; c < per_component.size(); ++c) {
        if (static_cast<int>(per_component[c].size()) != rs.components()[c].rank)
            throw std::invalid_argument("product_weight: rank of component " + std::to_string(c));
        w.insert(w.end(), per_component[c].begin(), per_component[c].end());
    }
    return w;
}

Character module_of(RootSystemPtr h, const std::vector<Weight>& highest_weights)
{
    Character v(h);
    for (const auto& w : highest_weights) v += dominant_character(h, w);
    return v;
}

namespace {

struct SubsystemState {
    // simple systems of the components, each in Bourbaki order of its type
    std::vector<SimpleType> types;
    std::vector<std::vector<Weight>> roots;
};

std::vector<SimpleType> canonical_types(const std::vector<SimpleType>& ts)
{
    std::vector<SimpleType> out;
    for (const auto& t : ts) out.push_back(t.normalized());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Embedding find_maximal_rank_subsystem(RootSystemPtr g, const SemisimpleTypeLabel& wanted)
{
    const auto goal = wanted.canonical();
    std::map<std::vector<SimpleType>, SubsystemState> seen;
    std::deque<std::vector<SimpleType>> queue;

    SubsystemState start;
    for (std::size_t c = 0; c < g->components().size(); ++c) {
        start.types.push_back(g->components()[c]);
        std::vector<Weight> simple;
        for (int k = 0; k < g->components()[c].rank; ++k) {
            Weight e(static_cast<std::size_t>(g->rank()), 0);
            e[g->component_offset(c) + k] = 1;
            simple.push_back(e);
        }
        start.roots.push_back(simple);
    }
    seen.emplace(canonical_types(start.types), start);
    queue.push_back(canonical_types(start.types));

    const SubsystemState* found = nullptr;
    while (!queue.empty() && !found) {
        const auto key = queue.front();
        queue.pop_front();
        const SubsystemState cur = seen.at(key);
        if (key == goal) {
            found = &seen.at(key);
            break;
        }
        for (std::size_t c = 0; c < cur.types.size(); ++c) {
            // extended nodes of component c, in G coordinates
            const RootSystem local(cur.types[c]);
            const auto marks = local.marks(0);
            Weight theta(static_cast<std::size_t>(g->rank()), 0);
            for (std::size_t k = 0; k < marks.size(); ++k)
                for (int i = 0; i < g->rank(); ++i) theta[i] += marks[k] * cur.roots[c][k][i];
            std::vector<Weight> ext{negate(theta)};
            ext.insert(ext.end(), cur.roots[c].begin(), cur.roots[c].end());
            for (std::size_t del = 1; del < ext.size(); ++del) {
                std::vector<Weight> rest;
                for (std::size_t i = 0; i < ext.size(); ++i)
                    if (i != del) rest.push_back(ext[i]);
                const auto id = identify_diagram(cartan_of_roots(*g, rest));
                SubsystemState next;
                for (std::size_t k = 0; k < cur.types.size(); ++k) {
                    if (k == c) continue;
                    next.types.push_back(cur.types[k]);
                    next.roots.push_back(cur.roots[k]);
                }
                for (std::size_t k = 0; k < id.types.size(); ++k) {
                    next.types.push_back(id.types[k]);
                    std::vector<Weight> rs;
                    for (int idx : id.nodes[k]) rs.push_back(rest[idx]);
                    next.roots.push_back(rs);
                }
                auto nk = canonical_types(next.types);
                if (seen.count(nk)) continue;
                seen.emplace(nk, next);
                queue.push_back(nk);
            }
        }
    }
    if (!found) throw std::invalid_argument("no maximal rank subsystem of type " + wanted.to_string() + " in " + g->name());

    // order components as in `wanted`
    std::vector<bool> used(found->types.size(), false);
    std::vector<SimpleType> types;
    std::vector<Weight> roots;
    for (const auto& f : wanted.factors()) {
        const SimpleType want = f.type.normalized();
        bool ok = false;
        for (std::size_t k = 0; k < found->types.size() && !ok; ++k) {
            if (used[k] || found->types[k].normalized() != want) continue;
            used[k] = true;
            types.push_back(found->types[k]);
            roots.insert(roots.end(), found->roots[k].begin(), found->roots[k].end());
            ok = true;
        }
        if (!ok) throw std::logic_error("find_maximal_rank_subsystem: component bookkeeping");
    }
    auto emb = subsystem_embedding(g, roots, types);
    emb.name = g->name() + " > " + wanted.to_string();
    return emb;
}

}  // namespace irrcent
