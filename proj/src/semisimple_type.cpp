#include "irrcent/semisimple_type.hpp"

#include <algorithm>
#include <cctype>

namespace irrcent {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool SimpleType::admissible() const
{
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 1;
        case Family::C: return rank >= 1;
        case Family::D: return rank >= 3;
        case Family::E: return rank >= 6 && rank <= 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

SimpleType make_type(Family f, int rank)
{
    SimpleType t{f, rank};
    if (!t.admissible())
        throw std::invalid_argument("inadmissible simple type " + t.to_string());
    return t;
}

SimpleType SimpleType::parse(const std::string& text)
{
    if (text.size() < 2) throw std::invalid_argument("bad simple type '" + text + "'");
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c < 'A' || c > 'G') throw std::invalid_argument("bad simple type '" + text + "'");
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad simple type '" + text + "'");
    if (text.size() > 4) throw std::invalid_argument("rank too large in '" + text + "'");
    return make_type(static_cast<Family>(c - 'A'), std::stoi(text.substr(1)));
}

std::string SimpleType::to_string() const
{
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

int SimpleType::adjoint_dimension() const
{
    const int n = rank;
    switch (family) {
        case Family::A: return n * (n + 2);
        case Family::B:
        case Family::C: return n * (2 * n + 1);
        case Family::D: return n * (2 * n - 1);
        case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
        case Family::F: return 52;
        case Family::G: return 14;
    }
    return 0;
}

int SimpleType::root_count() const { return adjoint_dimension() - rank; }

unsigned long long SimpleType::weyl_order() const
{
    auto fact = [](int k) {
        unsigned long long r = 1;
        for (int i = 2; i <= k; ++i) r *= static_cast<unsigned long long>(i);
        return r;
    };
    const int n = rank;
    switch (family) {
        case Family::A: return fact(n + 1);
        case Family::B:
        case Family::C: return (1ULL << n) * fact(n);
        case Family::D: return (1ULL << (n - 1)) * fact(n);
        case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

SimpleType SimpleType::normalized() const
{
    if ((family == Family::B || family == Family::C) && rank == 1) return {Family::A, 1};
    if (family == Family::C && rank == 2) return {Family::B, 2};
    if (family == Family::D && rank == 3) return {Family::A, 3};
    return *this;
}

SemisimpleTypeLabel::SemisimpleTypeLabel(std::vector<TypeFactor> factors, std::string decoration)
    : factors_(std::move(factors)), decoration_(std::move(decoration))
{
}

SemisimpleTypeLabel SemisimpleTypeLabel::of(const std::vector<SimpleType>& types)
{
    std::vector<TypeFactor> f;
    for (const auto& t : types) f.push_back({t, false});
    return SemisimpleTypeLabel(std::move(f));
}

SemisimpleTypeLabel SemisimpleTypeLabel::parse(const std::string& raw)
{
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty() || text == "1" || text == "-") return {};

    std::string decoration;
    const auto star = text.rfind('*');
    const auto dot = text.rfind('.');
    if (dot != std::string::npos && (star == std::string::npos || dot > star)) {
        decoration = text.substr(dot + 1);
        text = text.substr(0, dot);
        if (decoration.empty()) throw std::invalid_argument("empty decoration in '" + raw + "'");
    }

    std::vector<TypeFactor> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto next = text.find('*', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty factor in '" + raw + "'");
        int power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            const std::string p = tok.substr(caret + 1);
            if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("bad exponent in '" + raw + "'");
            power = std::stoi(p);
            tok = tok.substr(0, caret);
        }
        bool bar = false;
        if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "bar") == 0) {
            bar = true;
            tok = tok.substr(0, tok.size() - 3);
        }
        const SimpleType t = SimpleType::parse(tok);
        for (int i = 0; i < power; ++i) factors.push_back({t, bar});
        pos = next + 1;
    }
    return SemisimpleTypeLabel(std::move(factors), decoration);
}

std::vector<SimpleType> SemisimpleTypeLabel::types() const
{
    std::vector<SimpleType> out;
    for (const auto& f : factors_) out.push_back(f.type);
    return out;
}

int SemisimpleTypeLabel::dimension() const
{
    int d = 0;
    for (const auto& f : factors_) d += f.type.adjoint_dimension();
    return d;
}

int SemisimpleTypeLabel::rank() const
{
    int r = 0;
    for (const auto& f : factors_) r += f.type.rank;
    return r;
}

std::string SemisimpleTypeLabel::to_string() const
{
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!out.empty()) out += '*';
        out += factors_[i].type.to_string();
        if (factors_[i].bar) out += "bar";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    if (!decoration_.empty()) out += "." + decoration_;
    return out;
}

std::vector<SimpleType> SemisimpleTypeLabel::canonical() const
{
    std::vector<SimpleType> out;
    for (const auto& f : factors_) out.push_back(f.type.normalized());
    std::sort(out.begin(), out.end());
    return out;
}

bool SemisimpleTypeLabel::isomorphic(const SemisimpleTypeLabel& other) const
{
    return canonical() == other.canonical();
}

bool SemisimpleTypeLabel::operator==(const SemisimpleTypeLabel& other) const
{
    return types() == other.types();
}

}  // namespace irrcent
