#pragma once

#include "wrat/linalg.hpp"
#include "wrat/rootsys.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wrat {

/// One nilpotent orbit with its sl2 diagram h, a representative
/// f = sum_k f_{beta_k}, and (for odd orbits) the semisimple element v.
struct OrbitRecord {
    SimpleType algebra;
    std::string label;
    std::vector<int> denominators;
    CartanElement h;
    std::vector<std::vector<int>> f_roots; // Bourbaki coefficient order
    std::optional<CartanElement> v;        // nullopt: even orbit, v = 0 suffices
};

/// Marker for (algebra, q) pairs whose orbit is even or only available from
/// external classification tables.
struct EvenOrExternal {
    SimpleType algebra;
    int q = 0;
};

/// The embedded exceptional records, ordered by algebra then q. Honours the
/// WRAT_DATA_DIR environment variable: when set, records are read from the
/// *.json files in that directory instead.
const std::vector<OrbitRecord> &exceptional_records();

/// Embedded records only, ignoring WRAT_DATA_DIR.
const std::vector<OrbitRecord> &embedded_records();

/// Records from every *.json file in `dir`, sorted by algebra then q.
std::vector<OrbitRecord> load_records(const std::filesystem::path &dir);

/// Parses one record in the orbit data file format. Throws InvalidRecord or
/// ParseError; `source` names the origin in diagnostics.
OrbitRecord parse_record(const std::string &text, const std::string &source = "<record>");

/// Serializes a record in the orbit data file format (single line).
std::string record_to_json(const OrbitRecord &rec);

/// Throws NotExceptionalType for classical algebras.
std::variant<OrbitRecord, EvenOrExternal> lookup_exceptional(SimpleType algebra, int q);

/// Lookup by Bala-Carter label; "~A1" and "Ã1" both name the short-root orbit.
std::optional<OrbitRecord> lookup_exceptional_label(SimpleType algebra, const std::string &label);

std::string normalize_label(const std::string &label);

struct RecordValidation {
    bool ok = true;
    std::vector<std::string> diagnostics;
};

/// Checks beta_k(h) = 2 for all k and that h has entries in {0, 1, 2}.
/// Throws InvalidRecord (empty f, wrong algebra, bad rank) or UnknownRoot.
RecordValidation validate_record(const RootSystem &rs, const OrbitRecord &rec);

enum class ClassicalFamily { B, C, D };

ClassicalFamily parse_classical_family(std::string_view name);
const char *family_name(ClassicalFamily family);

/// n = p_1 + ... + p_{2r} + q_1 + ... + q_s with p_{2i-1} = p_{2i}.
struct ClassicalPartition {
    ClassicalFamily family = ClassicalFamily::C;
    std::vector<int> paired; // p_1, p_3, ..., p_{2r-1}; each occurs twice
    std::vector<int> singles;

    /// Groups a flat list of parts: for so_n even parts pair up and odd parts
    /// are singles; for sp_n the reverse. Throws InvalidPartition naming the
    /// violated parity rule.
    static ClassicalPartition from_parts(ClassicalFamily family, std::vector<int> parts);

    int size() const;
    int r() const { return static_cast<int>(paired.size()); }
    int s() const { return static_cast<int>(singles.size()); }
    std::vector<int> parts() const;
    std::string to_string() const;
};

/// All legal partitions of n for the family (B: n odd >= 3; C: n even >= 2;
/// D: n even >= 4).
std::vector<ClassicalPartition> classical_partitions(ClassicalFamily family, int n);

/// Matrix realization in the defining representation.
struct ClassicalRealization {
    ClassicalPartition partition;
    int n = 0;
    Matrix gram; // S, with g = {X : S X = -X^T S}
    Matrix f;
    Matrix h;
    Matrix v;
    std::vector<int> block_sizes; // Jordan block sizes in basis order
};

ClassicalRealization build_classical(const ClassicalPartition &partition);

struct RealizationCheck {
    bool f_in_g = false;
    bool h_in_g = false;
    bool v_in_g = false;
    bool f_v_commute = false;
    bool gram_symmetry = false;
    bool sl2_relation = false; // [h, f] = -2 f
    bool jordan_type = false;  // f's Jordan type equals the partition
    bool ok() const {
        return f_in_g && h_in_g && v_in_g && f_v_commute && gram_symmetry && sl2_relation && jordan_type;
    }
};

RealizationCheck check_realization(const ClassicalRealization &real);

/// Matrix commutator XY - YX.
Matrix commutator(const Matrix &x, const Matrix &y);

/// S X + X^T S == 0.
bool preserves_form(const Matrix &gram, const Matrix &x);

} // namespace wrat
