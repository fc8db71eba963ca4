#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrcent {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    // "A1", "e8", "D4" ... throws std::invalid_argument on bad text or
    // an inadmissible family/rank pair.
    static SimpleType parse(const std::string& text);

    bool admissible() const;
    std::string to_string() const;
    int adjoint_dimension() const;
    int root_count() const;
    // Order of the Weyl group. Fits in 64 bits for every admissible rank <= 20.
    unsigned long long weyl_order() const;

    // B1, C1 -> A1; C2 -> B2; D3 -> A3. D2 is not a SimpleType.
    SimpleType normalized() const;

    auto operator<=>(const SimpleType&) const = default;
};

SimpleType make_type(Family f, int rank);  // validates

struct TypeFactor {
    SimpleType type;
    bool bar = false;  // generated by long root subgroups; display only
    auto operator<=>(const TypeFactor&) const = default;
};

// A product of simple types as written in the tables, e.g. "A1bar^2*B1^2*B2"
// or "A1*A3^2.2". A trailing ".k" decoration (component group) is kept as
// text and never enters arithmetic.
class SemisimpleTypeLabel {
public:
    SemisimpleTypeLabel() = default;
    explicit SemisimpleTypeLabel(std::vector<TypeFactor> factors, std::string decoration = {});
    static SemisimpleTypeLabel parse(const std::string& text);
    static SemisimpleTypeLabel of(const std::vector<SimpleType>& types);

    const std::vector<TypeFactor>& factors() const { return factors_; }
    std::vector<SimpleType> types() const;
    const std::string& decoration() const { return decoration_; }

    int dimension() const;
    int rank() const;
    bool empty() const { return factors_.empty(); }
    std::string to_string() const;

    // Sorted multiset of normalized simple types; D2 expands to A1^2.
    std::vector<SimpleType> canonical() const;
    bool isomorphic(const SemisimpleTypeLabel& other) const;

    // Factor lists equal (bars and decoration ignored).
    bool operator==(const SemisimpleTypeLabel& other) const;

private:
    std::vector<TypeFactor> factors_;
    std::string decoration_;
};

}  // namespace irrcent
