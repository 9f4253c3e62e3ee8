#include "wrat/orbits.hpp"

#include "wrat/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace wrat {

namespace detail {
// Generated at configure time from core/data/exceptional/*.json.
const std::vector<std::pair<const char *, const char *>> &embedded_record_sources();
} // namespace detail

namespace {

using json = nlohmann::json;

Rational json_rational(const json &j, const std::string &where) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw Error(ErrorKind::InvalidRecord, where + ": expected an integer or a \"num/den\" string");
}

json rational_json(const Rational &x) {
    if (is_integer(x) && x.get_num().fits_slong_p())
        return x.get_num().get_si();
    return to_string(x);
}

// Diagram objects: {"top": t, "row": [...]} for E-types, {"row": [...]} otherwise.
CartanElement parse_diagram(const json &j, SimpleType type, const std::string &where) {
    if (!j.is_object() || !j.contains("row") || !j["row"].is_array())
        throw Error(ErrorKind::InvalidRecord, where + ": expected an object with a \"row\" array");
    std::vector<Rational> reading;
    const bool e_type = type.family == Family::E;
    if (e_type) {
        if (!j.contains("top"))
            throw Error(ErrorKind::InvalidRecord, where + ": E-type diagram needs \"top\"");
        reading.push_back(json_rational(j["top"], where));
    }
    for (const auto &x : j["row"])
        reading.push_back(json_rational(x, where));
    if (static_cast<int>(reading.size()) != type.rank)
        throw Error(ErrorKind::InvalidRecord, where + ": diagram has " + std::to_string(reading.size()) +
                                                  " entries, " + type.name() + " needs " + std::to_string(type.rank));
    return {from_reading_order<Rational>(type, reading)};
}

json diagram_json(const CartanElement &v, SimpleType type) {
    auto reading = to_reading_order<Rational>(type, v.pairings);
    json j = json::object();
    std::size_t start = 0;
    if (type.family == Family::E) {
        j["top"] = rational_json(reading[0]);
        start = 1;
    }
    json row = json::array();
    for (std::size_t i = start; i < reading.size(); ++i)
        row.push_back(rational_json(reading[i]));
    j["row"] = row;
    return j;
}

bool algebra_less(const OrbitRecord &a, const OrbitRecord &b) {
    auto ka = std::make_tuple(static_cast<int>(a.algebra.family), a.algebra.rank,
                              a.denominators.empty() ? 0 : a.denominators.front(), a.label);
    auto kb = std::make_tuple(static_cast<int>(b.algebra.family), b.algebra.rank,
                              b.denominators.empty() ? 0 : b.denominators.front(), b.label);
    return ka < kb;
}

} // namespace

OrbitRecord parse_record(const std::string &text, const std::string &source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, source + ": " + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorKind::InvalidRecord, source + ": record must be a JSON object");
    for (const char *key : {"algebra", "label", "q", "h", "f_roots"})
        if (!j.contains(key))
            throw Error(ErrorKind::InvalidRecord, source + ": missing field \"" + key + "\"");

    OrbitRecord rec;
    try {
        rec.algebra = SimpleType::parse(j["algebra"].get<std::string>());
        rec.label = normalize_label(j["label"].get<std::string>());
        rec.denominators = j["q"].get<std::vector<int>>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidRecord, source + ": " + e.what());
    }
    rec.h = parse_diagram(j["h"], rec.algebra, source + " h");

    if (!j["f_roots"].is_array())
        throw Error(ErrorKind::InvalidRecord, source + ": f_roots must be an array");
    for (const auto &r : j["f_roots"]) {
        std::vector<int> reading;
        try {
            reading = r.get<std::vector<int>>();
        } catch (const json::exception &e) {
            throw Error(ErrorKind::InvalidRecord, source + ": bad f root: " + e.what());
        }
        if (static_cast<int>(reading.size()) != rec.algebra.rank)
            throw Error(ErrorKind::InvalidRecord, source + ": f root of wrong length");
        rec.f_roots.push_back(from_reading_order<int>(rec.algebra, reading));
    }

    if (j.contains("v")) {
        const auto &v = j["v"];
        if (!(v.is_string() && v.get<std::string>() == "even"))
            rec.v = parse_diagram(v, rec.algebra, source + " v");
    }
    return rec;
}

std::string record_to_json(const OrbitRecord &rec) {
    json j = json::object();
    j["algebra"] = rec.algebra.name();
    j["label"] = rec.label;
    j["q"] = rec.denominators;
    j["h"] = diagram_json(rec.h, rec.algebra);
    json roots = json::array();
    for (const auto &r : rec.f_roots)
        roots.push_back(to_reading_order<int>(rec.algebra, r));
    j["f_roots"] = roots;
    if (rec.v)
        j["v"] = diagram_json(*rec.v, rec.algebra);
    else
        j["v"] = "even";
    return j.dump();
}

const std::vector<OrbitRecord> &embedded_records() {
    static const std::vector<OrbitRecord> records = [] {
        std::vector<OrbitRecord> out;
        for (const auto &[name, text] : detail::embedded_record_sources())
            out.push_back(parse_record(text, name));
        std::sort(out.begin(), out.end(), algebra_less);
        return out;
    }();
    return records;
}

std::vector<OrbitRecord> load_records(const std::filesystem::path &dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        throw Error(ErrorKind::IoError, "data directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto &entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<OrbitRecord> out;
    for (const auto &file : files) {
        std::ifstream in(file);
        if (!in)
            throw Error(ErrorKind::IoError, "cannot read " + file.string());
        std::stringstream buf;
        buf << in.rdbuf();
        out.push_back(parse_record(buf.str(), file.string()));
    }
    std::sort(out.begin(), out.end(), algebra_less);
    return out;
}

const std::vector<OrbitRecord> &exceptional_records() {
    // Re-read whenever the override changes.
    static std::string cached_dir;
    static std::vector<OrbitRecord> cached;
    const char *dir = std::getenv("WRAT_DATA_DIR");
    if (dir == nullptr || *dir == '\0')
        return embedded_records();
    if (cached_dir != dir || cached.empty()) {
        cached = load_records(dir);
        cached_dir = dir;
    }
    return cached;
}

std::variant<OrbitRecord, EvenOrExternal> lookup_exceptional(SimpleType algebra, int q) {
    if (!algebra.is_exceptional())
        throw Error(ErrorKind::NotExceptionalType, algebra.name() + " is not an exceptional type");
    for (const auto &rec : exceptional_records())
        if (rec.algebra == algebra &&
            std::find(rec.denominators.begin(), rec.denominators.end(), q) != rec.denominators.end())
            return rec;
    return EvenOrExternal{algebra, q};
}

std::optional<OrbitRecord> lookup_exceptional_label(SimpleType algebra, const std::string &label) {
    if (!algebra.is_exceptional())
        throw Error(ErrorKind::NotExceptionalType, algebra.name() + " is not an exceptional type");
    const std::string wanted = normalize_label(label);
    for (const auto &rec : exceptional_records())
        if (rec.algebra == algebra && rec.label == wanted)
            return rec;
    return std::nullopt;
}

std::string normalize_label(const std::string &label) {
    std::string out;
    const std::string tilde = "\xC3\x83"; // U+00C3, A with tilde
    for (std::size_t i = 0; i < label.size();) {
        if (label.compare(i, tilde.size(), tilde) == 0) {
            out += "~A";
            i += tilde.size();
        } else if (label[i] == ' ') {
            ++i;
        } else {
            out += label[i++];
        }
    }
    return out;
}

RecordValidation validate_record(const RootSystem &rs, const OrbitRecord &rec) {
    if (rec.algebra != rs.type())
        throw Error(ErrorKind::InvalidRecord,
                    "record is for " + rec.algebra.name() + ", root system is " + rs.type().name());
    if (rec.f_roots.empty())
        throw Error(ErrorKind::InvalidRecord, rec.label + ": f_roots is empty");
    if (rec.h.rank() != rs.rank() || (rec.v && rec.v->rank() != rs.rank()))
        throw Error(ErrorKind::InvalidRecord, rec.label + ": diagram rank mismatch");

    RecordValidation out;
    for (std::size_t i = 0; i < rec.h.pairings.size(); ++i) {
        const Rational &c = rec.h.pairings[i];
        if (!(c == 0 || c == 1 || c == 2)) {
            out.ok = false;
            out.diagnostics.push_back("h entry " + std::to_string(i + 1) + " is " + to_string(c) +
                                      ", not in {0,1,2}");
        }
    }
    for (const auto &beta : rec.f_roots) {
        rs.index_of(beta);
        Rational b = pairing(beta, rec.h);
        if (b != 2) {
            out.ok = false;
            out.diagnostics.push_back(root_label(rs.type(), beta) + "(h) = " + to_string(b) + ", expected 2");
        }
        if (rec.v) {
            Rational bv = pairing(beta, *rec.v);
            if (sgn(bv) != 0) {
                out.ok = false;
                out.diagnostics.push_back(root_label(rs.type(), beta) + "(v) = " + to_string(bv) + ", expected 0");
            }
        }
    }
    return out;
}

ClassicalFamily parse_classical_family(std::string_view name) {
    if (name == "B" || name == "b")
        return ClassicalFamily::B;
    if (name == "C" || name == "c")
        return ClassicalFamily::C;
    if (name == "D" || name == "d")
        return ClassicalFamily::D;
    throw Error(ErrorKind::InvalidInput, "unknown classical family '" + std::string(name) + "'");
}

const char *family_name(ClassicalFamily family) {
    switch (family) {
    case ClassicalFamily::B: return "B";
    case ClassicalFamily::C: return "C";
    case ClassicalFamily::D: return "D";
    }
    return "?";
}

namespace {

bool orthogonal(ClassicalFamily f) { return f != ClassicalFamily::C; }

void check_size(ClassicalFamily family, int n) {
    switch (family) {
    case ClassicalFamily::B:
        if (n < 3 || n % 2 == 0)
            throw Error(ErrorKind::InvalidPartition, "type B needs an odd n >= 3, got " + std::to_string(n));
        break;
    case ClassicalFamily::C:
        if (n < 2 || n % 2 != 0)
            throw Error(ErrorKind::InvalidPartition, "type C needs an even n >= 2, got " + std::to_string(n));
        break;
    case ClassicalFamily::D:
        if (n < 4 || n % 2 != 0)
            throw Error(ErrorKind::InvalidPartition, "type D needs an even n >= 4, got " + std::to_string(n));
        break;
    }
}

} // namespace

ClassicalPartition ClassicalPartition::from_parts(ClassicalFamily family, std::vector<int> parts) {
    if (parts.empty())
        throw Error(ErrorKind::InvalidPartition, "empty partition");
    for (int p : parts)
        if (p <= 0)
            throw Error(ErrorKind::InvalidPartition, "parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());

    const bool so = orthogonal(family);
    // so_n pairs the even parts, sp_n the odd ones.
    const int paired_parity = so ? 0 : 1;
    std::map<int, int, std::greater<>> counts;
    for (int p : parts)
        ++counts[p];

    ClassicalPartition out;
    out.family = family;
    for (auto [p, m] : counts) {
        if (p % 2 == paired_parity) {
            if (m % 2 != 0)
                throw Error(ErrorKind::InvalidPartition,
                            so ? "so_n: even parts must have even multiplicity (part " + std::to_string(p) + ")"
                               : "sp_n: odd parts must have even multiplicity (part " + std::to_string(p) + ")");
            for (int k = 0; k < m / 2; ++k)
                out.paired.push_back(p);
        } else {
            for (int k = 0; k < m; ++k)
                out.singles.push_back(p);
        }
    }
    check_size(family, out.size());
    return out;
}

int ClassicalPartition::size() const {
    int n = 0;
    for (int p : paired)
        n += 2 * p;
    for (int q : singles)
        n += q;
    return n;
}

std::vector<int> ClassicalPartition::parts() const {
    std::vector<int> out;
    for (int p : paired) {
        out.push_back(p);
        out.push_back(p);
    }
    out.insert(out.end(), singles.begin(), singles.end());
    return out;
}

std::string ClassicalPartition::to_string() const {
    std::string out;
    for (int p : parts()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(p);
    }
    return out;
}

std::vector<ClassicalPartition> classical_partitions(ClassicalFamily family, int n) {
    std::vector<ClassicalPartition> out;
    try {
        check_size(family, n);
    } catch (const Error &) {
        return out;
    }
    std::vector<int> current;
    auto rec = [&](auto &&self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            try {
                out.push_back(ClassicalPartition::from_parts(family, current));
            } catch (const Error &) {
            }
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

void put_antidiagonal(Matrix &m, std::size_t row0, std::size_t col0, int size, int sign) {
    for (int i = 0; i < size; ++i) {
        int s = (i % 2 == 0 ? 1 : -1) * sign;
        m(row0 + static_cast<std::size_t>(i), col0 + static_cast<std::size_t>(size - 1 - i)) = s;
    }
}

void put_jordan(Matrix &m, std::size_t start, int size) {
    for (int k = 0; k + 1 < size; ++k)
        m(start + static_cast<std::size_t>(k) + 1, start + static_cast<std::size_t>(k)) = 1;
}

void put_weights(Matrix &m, std::size_t start, int size) {
    for (int k = 0; k < size; ++k)
        m(start + static_cast<std::size_t>(k), start + static_cast<std::size_t>(k)) = size - 1 - 2 * k;
}

} // namespace

ClassicalRealization build_classical(const ClassicalPartition &partition) {
    // Re-validate in case the caller assembled the struct by hand.
    ClassicalPartition checked = ClassicalPartition::from_parts(partition.family, partition.parts());
    (void)checked;

    ClassicalRealization real;
    real.partition = partition;
    real.n = partition.size();
    const auto n = static_cast<std::size_t>(real.n);
    real.gram = Matrix(n, n);
    real.f = Matrix(n, n);
    real.h = Matrix(n, n);
    real.v = Matrix(n, n);

    std::size_t pos = 0;
    for (int p : partition.paired) {
        const auto up = static_cast<std::size_t>(p);
        put_antidiagonal(real.gram, pos, pos + up, p, 1);
        put_antidiagonal(real.gram, pos + up, pos, p, -1);
        for (std::size_t b = 0; b < 2; ++b) {
            put_jordan(real.f, pos + b * up, p);
            put_weights(real.h, pos + b * up, p);
            real.block_sizes.push_back(p);
        }
        for (std::size_t k = 0; k < up; ++k) {
            real.v(pos + k, pos + k) = make_rational(1, 2);
            real.v(pos + up + k, pos + up + k) = make_rational(-1, 2);
        }
        pos += 2 * up;
    }
    for (int q : partition.singles) {
        put_antidiagonal(real.gram, pos, pos, q, 1);
        put_jordan(real.f, pos, q);
        put_weights(real.h, pos, q);
        real.block_sizes.push_back(q);
        pos += static_cast<std::size_t>(q);
    }
    return real;
}

Matrix commutator(const Matrix &x, const Matrix &y) { return x * y - y * x; }

bool preserves_form(const Matrix &gram, const Matrix &x) { return (gram * x + x.transpose() * gram).is_zero(); }

RealizationCheck check_realization(const ClassicalRealization &real) {
    RealizationCheck c;
    c.f_in_g = preserves_form(real.gram, real.f);
    c.h_in_g = preserves_form(real.gram, real.h);
    c.v_in_g = preserves_form(real.gram, real.v);
    c.f_v_commute = commutator(real.f, real.v).is_zero();
    const Matrix st = real.gram.transpose();
    c.gram_symmetry = orthogonal(real.partition.family) ? st == real.gram : st == -real.gram;
    c.sl2_relation = commutator(real.h, real.f) == real.f.scaled(-2);

    // Jordan type from rank f^k = sum_i max(p_i - k, 0).
    c.jordan_type = true;
    const auto parts = real.partition.parts();
    Matrix power = real.f;
    for (int k = 1; k <= real.n; ++k) {
        std::size_t expected = 0;
        for (int p : parts)
            expected += static_cast<std::size_t>(std::max(p - k, 0));
        if (rank(power) != expected) {
            c.jordan_type = false;
            break;
        }
        if (expected == 0)
            break;
        power = power * real.f;
    }
    return c;
}

} // namespace wrat
