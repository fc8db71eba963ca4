#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "irrcent/fixdim.hpp"
#include "irrcent/semisimple_type.hpp"

namespace irrcent {

// Characteristic condition: any p, p not in a list, or p equal to a prime.
// p = 0 stands for characteristic zero.
struct PConstraint {
    enum class Kind { Any, NotIn, Equal };
    Kind kind = Kind::Any;
    std::vector<int> primes;

    static PConstraint parse(const std::string& text);  // "", "-", "p!=2,3", "p=3"
    std::string to_string() const;
    bool admits(int p) const;
    bool compatible(const PConstraint& other) const;
};

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TableRow {
    std::string table_id;
    int line = 0;
    std::string group;  // "E8", ..., "AutE6", "AutD4"
    std::string f_name;
    long long f_order = 1;
    SemisimpleTypeLabel centralizer;
    std::string centralizer_text;
    ClassFusion fusion;
    std::string fusion_text;  // as printed
    PConstraint p;
    std::optional<SemisimpleTypeLabel> overgroup;
    std::string inner;  // F meet G^0 column, where printed
    bool expect_fail = false;
    std::vector<std::string> notes;

    bool cyclic() const;
    std::string where() const { return table_id + ":" + std::to_string(line); }
    std::string summary() const;
};

struct ClassRecord {
    std::string table_id;
    int line = 0;
    std::string group;
    std::string name;
    SemisimpleTypeLabel centralizer;
    PConstraint p;
    std::vector<std::string> powers;  // classes of proper powers by increasing order
};

struct GraphCentralizerRow {
    int line = 0;
    std::string group;  // may be generic: "A2n", "A2n-1", "Dn"
    int order = 2;
    std::string centralizer;  // may be generic: "Bn", "Bk*Bn-k-1"
    PConstraint p;
};

struct NormalizerRow {
    int line = 0;
    std::string group;
    SemisimpleTypeLabel m;
    std::string quotient;
};

struct QuotedTrace {
    std::string group;
    std::string name;
    long long trace = 0;
};

struct TableSet {
    std::filesystem::path dir;
    std::map<std::string, std::vector<TableRow>> tables;  // e8 e7 e6 aute6 f4 g2 d4 max
    std::vector<ClassRecord> classes;                     // irrcents, ae6, d4classes
    std::vector<GraphCentralizerRow> graph_centralizers;
    std::vector<NormalizerRow> normalizers;
    std::vector<QuotedTrace> quoted_traces;

    std::vector<ClassRecord> classes_of(const std::string& group) const;
};

// Group-table ids in report order.
const std::vector<std::string>& group_table_ids();
const std::vector<std::string>& all_table_ids();

// $LCA_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path default_data_dir();

// Order of an abstract group written as in the tables ("Dih8", "3^2.Dih8",
// "2^{1+4}_-", "4oDih8", "Sym4x2"); std::nullopt if the name is not understood.
std::optional<long long> abstract_group_order(const std::string& name);

// A cyclic row of prime order p > 2 printed with one class and no exponent
// ("5A") lists the class of a generator; every generator lies in it, so the
// count is p - 1. Returns a note when the row was expanded.
std::optional<std::string> expand_prime_shorthand(TableRow& row);

std::vector<TableRow> parse_group_table(const std::string& text, const std::string& table_id);
std::vector<TableRow> load_table_file(const std::filesystem::path& file, const std::string& table_id);
TableSet load_tables(const std::filesystem::path& dir);

}  // namespace irrcent
