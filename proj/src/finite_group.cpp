#include "irrcent/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace irrcent {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table))
{
    const int n = order();
    if (n == 0) throw std::invalid_argument("FiniteGroup: empty table");
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
}

int FiniteGroup::inverse(int a) const
{
    for (int b = 0; b < order(); ++b)
        if (table_[a][b] == identity_) return b;
    throw std::logic_error("FiniteGroup: element without inverse");
}

int FiniteGroup::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != identity_; x = table_[x][a]) ++k;
    return k;
}

int FiniteGroup::exponent() const
{
    int e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
    return e;
}

bool FiniteGroup::is_abelian() const
{
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::vector<int> FiniteGroup::center() const
{
    std::vector<int> z;
    for (int a = 0; a < order(); ++a) {
        bool c = true;
        for (int b = 0; b < order() && c; ++b) c = table_[a][b] == table_[b][a];
        if (c) z.push_back(a);
    }
    return z;
}

std::map<int, int> FiniteGroup::order_statistics() const
{
    std::map<int, int> s;
    for (int a = 0; a < order(); ++a) ++s[element_order(a)];
    return s;
}

FiniteGroup FiniteGroup::quotient(const std::vector<int>& normal) const
{
    const int n = order();
    std::vector<int> coset(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (coset[a] >= 0) continue;
        const int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int h : normal) {
            const int x = table_[a][h];
            if (coset[x] >= 0 && coset[x] != c) throw std::invalid_argument("FiniteGroup::quotient: not a subgroup");
            coset[x] = c;
        }
    }
    const std::size_t m = reps.size();
    if (m * normal.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("FiniteGroup::quotient: not a subgroup");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            t[i][j] = coset[table_[reps[i]][reps[j]]];
            // well-definedness on a second representative
            const int alt = table_[table_[reps[i]][normal.back()]][reps[j]];
            if (coset[alt] != t[i][j]) throw std::invalid_argument("FiniteGroup::quotient: subgroup is not normal");
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const int na = a.order(), nb = b.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y)
            t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return FiniteGroup(std::move(t));
}

std::vector<int> generating_set(const FiniteGroup& g)
{
    std::vector<int> gens;
    std::set<int> span{g.identity()};
    auto close = [&] {
        std::vector<int> todo(span.begin(), span.end());
        while (!todo.empty()) {
            const int x = todo.back();
            todo.pop_back();
            for (int s : gens) {
                const int y = g.mul(x, s);
                if (span.insert(y).second) todo.push_back(y);
            }
        }
    };
    while (static_cast<int>(span.size()) < g.order()) {
        // prefer elements of large order outside the current span
        int best = -1;
        for (int a = 0; a < g.order(); ++a)
            if (!span.count(a) && (best < 0 || g.element_order(a) > g.element_order(best))) best = a;
        gens.push_back(best);
        close();
    }
    return gens;
}

namespace {

// Extend gens -> images to a homomorphism, if possible; words built by BFS.
bool extends(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens, const std::vector<int>& images)
{
    std::vector<int> phi(static_cast<std::size_t>(a.order()), -1);
    phi[a.identity()] = b.identity();
    std::vector<int> queue{a.identity()};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const int x = queue[k];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const int y = a.mul(x, gens[i]);
            const int fy = b.mul(phi[x], images[i]);
            if (phi[y] < 0) {
                phi[y] = fy;
                queue.push_back(y);
            } else if (phi[y] != fy) {
                return false;
            }
        }
    }
    std::set<int> img(phi.begin(), phi.end());
    return static_cast<int>(img.size()) == b.order();
}

bool search(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens, std::vector<int>& images)
{
    if (images.size() == gens.size()) return extends(a, b, gens, images);
    const int want = a.element_order(gens[images.size()]);
    for (int y = 0; y < b.order(); ++y) {
        if (b.element_order(y) != want) continue;
        images.push_back(y);
        if (search(a, b, gens, images)) return true;
        images.pop_back();
    }
    return false;
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b)
{
    if (a.order() != b.order()) return false;
    if (a.is_abelian() != b.is_abelian()) return false;
    if (a.order_statistics() != b.order_statistics()) return false;
    if (a.center().size() != b.center().size()) return false;
    const auto gens = generating_set(a);
    std::vector<int> images;
    return search(a, b, gens, images);
}

}  // namespace irrcent
