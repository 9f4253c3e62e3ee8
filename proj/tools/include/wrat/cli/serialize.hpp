#pragma once

#include "wrat/frobenius.hpp"
#include "wrat/ratcheck.hpp"

#include <json.hpp>

#include <string>

namespace wrat::cli {

using json = nlohmann::json;

/// Integers as JSON numbers would lose the "num/den" contract for mixed
/// lists, so every rational is written as a string.
json rational_json(const Rational &x);
Rational rational_from(const json &j);

json diagram_json(SimpleType type, const CartanElement &v);

json evidence_json(const EvidenceEntry &e);
json verdict_json(const ConditionVerdict &v);
/// Inverse of verdict_json; witness images are rebuilt from their indices.
ConditionVerdict verdict_from_json(const json &j);

json contragredient_json(const ContragredientReport &r, const ChevalleyTable *table);

/// Frobenius system file: {"ell", "radius", "A": [[n, matrix]], "f": [[n, vector]],
/// "exponents", "K", "seeds": {"j,k": {"n": vector}}, "f_layers": {"j,k": [[n, vector]]},
/// "domain": {"z0", "epsilon", "delta"}}. Polynomials are coefficient lists whose
/// entries are rationals or {"re", "im"} objects.
struct FrobeniusSystem {
    frob::AnalyticMatrixSeries a;
    frob::VectorSeries f;
    std::vector<frob::QI> exponents{frob::QI(0)};
    int max_log_power = 0;
    std::map<frob::LayerKey, frob::Seeds> seeds;
    std::map<frob::LayerKey, frob::VectorSeries> forcing;
    frob::DomainParams domain;
};

FrobeniusSystem parse_frobenius_system(const json &j);

json qi_json(const frob::QI &x);
frob::QI qi_from(const json &j);
json poly_json(const frob::Poly &p);
json series_json(const frob::VectorSeries &s);
json solution_json(const frob::LogSeriesSolution &sol);
json complex_json(std::complex<double> z);

} // namespace wrat::cli
