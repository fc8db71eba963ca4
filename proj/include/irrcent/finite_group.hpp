#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrcent {

// Finite group on elements 0..n-1 given by its multiplication table.
class FiniteGroup {
public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    // Closure of generators under a multiplication (T ordered, with ==).
    template <class T, class Mul>
    static FiniteGroup generate(const T& identity, const std::vector<T>& gens, Mul mul, std::size_t limit = 4096);

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const;
    int element_order(int a) const;
    int exponent() const;
    bool is_abelian() const;
    std::vector<int> center() const;
    std::map<int, int> order_statistics() const;  // element order -> count

    // Quotient by a normal subgroup given as a list of elements.
    FiniteGroup quotient(const std::vector<int>& normal) const;

    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

private:
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
};

// Brute-force isomorphism test.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Small set of elements generating g (greedy).
std::vector<int> generating_set(const FiniteGroup& g);

template <class T, class Mul>
FiniteGroup FiniteGroup::generate(const T& identity, const std::vector<T>& gens, Mul mul, std::size_t limit)
{
    std::vector<T> elems{identity};
    std::map<T, int> index{{identity, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : gens) {
            T x = mul(elems[k], g);
            if (index.emplace(x, static_cast<int>(elems.size())).second) {
                elems.push_back(x);
                if (elems.size() > limit) throw std::runtime_error("FiniteGroup::generate: group too large");
            }
        }
    std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(mul(elems[a], elems[b]));
    return FiniteGroup(std::move(table));
}

}  // namespace irrcent
