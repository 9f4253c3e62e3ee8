#include "wrat/cli/serialize.hpp"

#include "wrat/errors.hpp"

#include <sstream>

namespace wrat::cli {

json rational_json(const Rational &x) { return to_string(x); }

Rational rational_from(const json &j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected a rational, got " + j.dump());
}

json diagram_json(SimpleType type, const CartanElement &v) {
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

json evidence_json(const EvidenceEntry &e) {
    json j = {{"j", rational_json(e.j)},
              {"lambda", rational_json(e.lambda)},
              {"mult", e.multiplicity},
              {"admissible", e.admissible}};
    if (e.cleared)
        j["cleared"] = true;
    return j;
}

json verdict_json(const ConditionVerdict &v) {
    json j = json::object();
    j["status"] = status_name(v.status);
    j["method"] = method_name(v.method);
    json ev = json::array();
    for (const auto &e : v.evidence)
        ev.push_back(evidence_json(e));
    j["evidence"] = ev;
    json fb = json::array();
    for (const auto &w : v.fallbacks) {
        json image = json::array();
        std::size_t k = 0;
        for (const auto &[idx, c] : w.image.coords()) {
            image.push_back({{"index", idx},
                             {"label", k < w.image_labels.size() ? w.image_labels[k] : ""},
                             {"coeff", rational_json(c)}});
            ++k;
        }
        fb.push_back({{"eigenvalue", rational_json(w.eigenvalue)},
                      {"piece", rational_json(w.piece)},
                      {"witness", w.witness_label},
                      {"witness_index", w.witness},
                      {"image", image}});
    }
    j["fallbacks"] = fb;
    return j;
}

ConditionVerdict verdict_from_json(const json &j) {
    ConditionVerdict v;
    const std::string status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
        throw Error(ErrorKind::ParseError, "unknown status '" + status + "'");
    v.status = status == "pass" ? Status::Pass : Status::Fail;
    const std::string method = j.value("method", std::string("exact"));
    if (method == "exact")
        v.method = CheckMethod::Exact;
    else if (method == "fast")
        v.method = CheckMethod::Fast;
    else if (method == "fast-delegated")
        v.method = CheckMethod::FastDelegated;
    else
        throw Error(ErrorKind::ParseError, "unknown method '" + method + "'");
    for (const auto &e : j.at("evidence"))
        v.evidence.push_back({rational_from(e.at("j")), rational_from(e.at("lambda")), e.at("mult").get<int>(),
                              e.at("admissible").get<bool>(), e.value("cleared", false)});
    for (const auto &w : j.value("fallbacks", json::array())) {
        FallbackWitness fw;
        fw.eigenvalue = rational_from(w.at("eigenvalue"));
        fw.piece = rational_from(w.at("piece"));
        fw.witness = w.at("witness_index").get<int>();
        fw.witness_label = w.at("witness").get<std::string>();
        for (const auto &t : w.at("image")) {
            fw.image.add(t.at("index").get<int>(), rational_from(t.at("coeff")));
            fw.image_labels.push_back(t.at("label").get<std::string>());
        }
        v.fallbacks.push_back(std::move(fw));
    }
    return v;
}

json contragredient_json(const ContragredientReport &r, const ChevalleyTable *table) {
    json entries = json::array();
    for (const auto &e : r.entries) {
        json support = json::array();
        if (table)
            for (const auto &[idx, c] : e.v.coords())
                support.push_back({{"label", table->label(idx)}, {"coeff", rational_json(c)}});
        json item = {{"form", rational_json(e.form_value)},
                     {"trace_plus", rational_json(e.trace_plus)},
                     {"trace_minus", rational_json(e.trace_minus)},
                     {"ok", e.ok()}};
        if (table)
            item["v"] = support;
        entries.push_back(item);
    }
    return {{"ok", r.ok}, {"dim_g0f", r.dim_g0f}, {"entries", entries}};
}

json qi_json(const frob::QI &x) {
    if (x.is_real())
        return rational_json(x.re);
    return {{"re", rational_json(x.re)}, {"im", rational_json(x.im)}};
}

frob::QI qi_from(const json &j) {
    if (j.is_object())
        return {rational_from(j.value("re", json("0"))), rational_from(j.value("im", json("0")))};
    return {rational_from(j)};
}

json poly_json(const frob::Poly &p) {
    json out = json::array();
    for (const auto &c : p.coeffs())
        out.push_back(qi_json(c));
    return out;
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

namespace {

frob::Poly poly_from(const json &j) {
    if (!j.is_array())
        return frob::Poly::constant(qi_from(j));
    std::vector<frob::QI> c;
    for (const auto &x : j)
        c.push_back(qi_from(x));
    return frob::Poly(std::move(c));
}

frob::PolyVector vector_from(const json &j, int ell, const std::string &what) {
    if (!j.is_array() || static_cast<int>(j.size()) != ell)
        throw Error(ErrorKind::DimensionMismatch, what + ": expected a vector of length " + std::to_string(ell));
    frob::PolyVector v;
    for (const auto &p : j)
        v.push_back(poly_from(p));
    return v;
}

frob::PolyMatrix matrix_from(const json &j, int ell, const std::string &what) {
    if (!j.is_array() || static_cast<int>(j.size()) != ell)
        throw Error(ErrorKind::DimensionMismatch, what + ": expected " + std::to_string(ell) + " rows");
    frob::PolyMatrix m;
    for (const auto &row : j)
        m.push_back(vector_from(row, ell, what));
    return m;
}

// [[n, payload], ...] sparse lists.
template <typename T, typename F> std::vector<T> indexed(const json &j, T zero, F &&parse, const std::string &what) {
    std::vector<T> out;
    if (j.is_null())
        return out;
    if (!j.is_array())
        throw Error(ErrorKind::ParseError, what + " must be a list of [n, value] pairs");
    for (const auto &entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || entry[0].get<int>() < 0)
            throw Error(ErrorKind::ParseError, what + " entries must be [n, value] with n >= 0");
        auto n = static_cast<std::size_t>(entry[0].get<int>());
        if (out.size() <= n)
            out.resize(n + 1, zero);
        out[n] = parse(entry[1], what + "[" + std::to_string(n) + "]");
    }
    return out;
}

frob::LayerKey layer_key(const std::string &text) {
    frob::LayerKey key;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> key.j >> comma >> key.k) || comma != ',')
        throw Error(ErrorKind::ParseError, "layer keys are written \"j,k\", got '" + text + "'");
    return key;
}

} // namespace

FrobeniusSystem parse_frobenius_system(const json &j) {
    if (!j.is_object())
        throw Error(ErrorKind::ParseError, "system must be a JSON object");
    FrobeniusSystem sys;
    const int ell = j.value("ell", 0);
    if (ell < 1)
        throw Error(ErrorKind::InvalidInput, "\"ell\" must be a positive integer");
    sys.a.ell = ell;
    sys.f.ell = ell;
    sys.a.radius = rational_from(j.value("radius", json("1")));

    auto zero_m = frob::PolyMatrix(static_cast<std::size_t>(ell), frob::PolyVector(static_cast<std::size_t>(ell)));
    auto zero_v = frob::PolyVector(static_cast<std::size_t>(ell));
    auto as_matrix = [ell](const json &x, const std::string &w) { return matrix_from(x, ell, w); };
    auto as_vector = [ell](const json &x, const std::string &w) { return vector_from(x, ell, w); };

    sys.a.coeffs = indexed(j.value("A", json()), zero_m, as_matrix, "A");
    sys.f.coeffs = indexed(j.value("f", json()), zero_v, as_vector, "f");

    if (j.contains("exponents")) {
        sys.exponents.clear();
        for (const auto &e : j["exponents"])
            sys.exponents.push_back(qi_from(e));
    }
    sys.max_log_power = j.value("K", 0);

    for (const auto &[key, body] : j.value("seeds", json::object()).items()) {
        frob::Seeds s;
        for (const auto &[n, vec] : body.items())
            s[std::stoi(n)] = vector_from(vec, ell, "seed " + key + "/" + n);
        sys.seeds[layer_key(key)] = std::move(s);
    }
    for (const auto &[key, body] : j.value("f_layers", json::object()).items()) {
        frob::VectorSeries s;
        s.ell = ell;
        s.coeffs = indexed(body, zero_v, as_vector, "f_layers " + key);
        sys.forcing[layer_key(key)] = std::move(s);
    }
    // A plain "f" forces the layer whose exponent is zero at k = 0.
    if (!sys.f.coeffs.empty()) {
        bool placed = false;
        for (std::size_t i = 0; i < sys.exponents.size(); ++i)
            if (sys.exponents[i].is_zero()) {
                frob::LayerKey key{static_cast<int>(i), 0};
                if (sys.forcing.count(key))
                    throw Error(ErrorKind::InvalidInput, "\"f\" and f_layers both force layer " +
                                                             std::to_string(i) + ",0");
                sys.forcing[key] = sys.f;
                placed = true;
            }
        if (!placed)
            throw Error(ErrorKind::InvalidInput, "\"f\" needs an exponent equal to 0; use f_layers otherwise");
    }

    if (j.contains("domain")) {
        const auto &d = j["domain"];
        if (d.contains("z0")) {
            frob::QI z0 = qi_from(d["z0"]);
            sys.domain.z0 = z0.to_complex();
        }
        if (d.contains("epsilon"))
            sys.domain.epsilon = rational_from(d["epsilon"]).get_d();
        if (d.contains("delta"))
            sys.domain.delta = rational_from(d["delta"]).get_d();
    }
    sys.a.validate();
    return sys;
}

json series_json(const frob::VectorSeries &s) {
    json out = json::array();
    for (const auto &v : s.coeffs) {
        json vec = json::array();
        for (const auto &p : v)
            vec.push_back(poly_json(p));
        out.push_back(vec);
    }
    return out;
}

json solution_json(const frob::LogSeriesSolution &sol) {
    json exps = json::array();
    for (const auto &e : sol.exponents)
        exps.push_back(qi_json(e));
    json layers = json::array();
    for (std::size_t j = 0; j < sol.layers.size(); ++j)
        for (std::size_t k = 0; k < sol.layers[j].size(); ++k)
            layers.push_back({{"j", j}, {"k", k}, {"coeffs", series_json(sol.layers[j][k])}});
    return {{"ell", sol.ell},
            {"radius", rational_json(sol.radius)},
            {"exponents", exps},
            {"K", sol.max_log_power},
            {"layers", layers}};
}

} // namespace wrat::cli
