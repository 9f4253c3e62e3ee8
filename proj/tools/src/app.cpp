#include "wrat/cli/app.hpp"

#include "wrat/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace wrat::cli {

namespace {

struct Algebra {
    RootSystem rs;
    ChevalleyTable table;
};

const Algebra &algebra_for(SimpleType type) {
    static std::map<SimpleType, std::unique_ptr<Algebra>> cache;
    auto &slot = cache[type];
    if (!slot) {
        auto rs = RootSystem::build(type);
        auto table = ChevalleyTable::build(rs);
        slot = std::make_unique<Algebra>(Algebra{std::move(rs), std::move(table)});
    }
    return *slot;
}

json q_json(const OrbitRecord &rec) { return rec.denominators; }

void print(std::ostream &out, const json &j) { out << j.dump(2) << "\n"; }

int diagnose(std::ostream &out, ErrorKind kind, const std::string &message) {
    print(out, {{"error", kind_name(kind)}, {"message", message}});
    return kind == ErrorKind::IoError ? kIoError : kDataError;
}

// Even or externally classified orbits carry their own error name.
struct ExternalOrbit : Error {
    using Error::Error;
};

struct RecordSelector {
    std::string algebra;
    int q = 0;
    std::string label;
};

OrbitRecord select_record(const RecordSelector &sel) {
    SimpleType type = SimpleType::parse(sel.algebra);
    if (!sel.label.empty()) {
        auto rec = lookup_exceptional_label(type, sel.label);
        if (!rec)
            throw Error(ErrorKind::InvalidRecord, type.name() + " has no embedded record labelled '" + sel.label + "'");
        return *rec;
    }
    auto found = lookup_exceptional(type, sel.q);
    if (auto *ext = std::get_if<EvenOrExternal>(&found))
        throw ExternalOrbit(ErrorKind::InvalidRecord, type.name() + " q=" + std::to_string(ext->q) +
                                                          ": even or external orbit, no embedded record");
    return std::get<OrbitRecord>(found);
}

void add_selector(CLI::App *cmd, RecordSelector &sel) {
    cmd->add_option("--algebra", sel.algebra, "Exceptional type: G2, F4, E6, E7 or E8")->required();
    auto *q = cmd->add_option("--q", sel.q, "Denominator q of the admissible level");
    auto *label = cmd->add_option("--label", sel.label, "Bala-Carter label, e.g. A4+A3");
    q->excludes(label);
    label->excludes(q);
}

struct RecordChecks {
    ConditionVerdict exact;
    ConditionVerdict fast;
    DynkinGrading grading;
    LieElement f;
    CartanElement v;
};

void validate_or_throw(const Algebra &alg, const OrbitRecord &rec) {
    auto val = validate_record(alg.rs, rec);
    if (!val.ok) {
        std::string msg = rec.label + ": invalid record";
        for (const auto &d : val.diagnostics)
            msg += "; " + d;
        throw Error(ErrorKind::InvalidRecord, msg);
    }
}

json record_header(const OrbitRecord &rec) {
    return {{"algebra", rec.algebra.name()}, {"label", rec.label}, {"q", q_json(rec)}};
}

int cmd_check_exceptional(const RecordSelector &sel, bool exact, bool fast, std::ostream &out) {
    OrbitRecord rec = select_record(sel);
    const Algebra &alg = algebra_for(rec.algebra);
    validate_or_throw(alg, rec);
    DynkinGrading g = grade(alg.table, rec.h);
    LieElement f = alg.table.sum_of_negative_root_vectors(rec.f_roots);
    CartanElement v = rec.v.value_or(CartanElement::zero(rec.algebra.rank));

    json j = record_header(rec);
    j["v"] = diagram_json(rec.algebra, v);
    bool pass = true;
    if (exact && fast) {
        auto ve = exact_condition(alg.table, g, f, v);
        auto vf = fast_condition(alg.table, g, f, v);
        bool agree = ve.status == vf.status;
        pass = ve.passed() && vf.passed() && agree;
        j["status"] = pass ? "pass" : "fail";
        j["exact"] = verdict_json(ve);
        j["fast"] = verdict_json(vf);
        j["agree"] = agree;
    } else {
        auto verdict = exact ? exact_condition(alg.table, g, f, v) : fast_condition(alg.table, g, f, v);
        pass = verdict.passed();
        j.update(verdict_json(verdict));
    }
    print(out, j);
    return pass ? kPass : kMathFail;
}

std::vector<int> parse_parts(const std::string &text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int p = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            parts.push_back(p);
        } catch (const std::exception &) {
            throw Error(ErrorKind::InvalidPartition, "partition entries must be integers, got '" + item + "'");
        }
    }
    return parts;
}

json realization_json(const RealizationCheck &c) {
    return {{"f_in_g", c.f_in_g},         {"h_in_g", c.h_in_g},       {"v_in_g", c.v_in_g},
            {"f_v_commute", c.f_v_commute}, {"gram_symmetry", c.gram_symmetry}, {"sl2_relation", c.sl2_relation},
            {"jordan_type", c.jordan_type}, {"ok", c.ok()}};
}

int cmd_check_classical(const std::string &family, const std::string &partition, bool v_zero, std::ostream &out) {
    auto part = ClassicalPartition::from_parts(parse_classical_family(family), parse_parts(partition));
    auto real = build_classical(part);
    auto checks = check_realization(real);
    auto verdict = check_classical(real, v_zero);
    json j = {{"family", family_name(part.family)},
              {"partition", part.to_string()},
              {"n", real.n},
              {"r", part.r()},
              {"s", part.s()},
              {"v", v_zero ? "zero" : "block"},
              {"realization", realization_json(checks)}};
    j.update(verdict_json(verdict));
    print(out, j);
    return checks.ok() && verdict.passed() ? kPass : kMathFail;
}

int cmd_search_v(const RecordSelector &sel, const SearchConfig &config, std::ostream &out) {
    OrbitRecord rec = select_record(sel);
    const Algebra &alg = algebra_for(rec.algebra);
    validate_or_throw(alg, rec);
    DynkinGrading g = grade(alg.table, rec.h);
    auto found = search_v(alg.rs, alg.table, g, rec.f_roots, config);
    json j = record_header(rec);
    j["denominator_bound"] = config.denominator_bound;
    j["coefficient_bound"] = rational_json(config.coefficient_bound);
    j["found"] = found.has_value();
    j["v"] = found ? diagram_json(rec.algebra, *found) : json(nullptr);
    print(out, j);
    return found ? kPass : kMathFail;
}

json contragredient_record(const OrbitRecord &rec) {
    const Algebra &alg = algebra_for(rec.algebra);
    DynkinGrading g = grade(alg.table, rec.h);
    LieElement f = alg.table.sum_of_negative_root_vectors(rec.f_roots);
    json j = record_header(rec);
    j.update(contragredient_json(verify_self_contragredient(alg.table, g, f), &alg.table));
    return j;
}

int cmd_verify_contragredient(const RecordSelector &sel, const std::string &family, const std::string &partition,
                              bool all, int max_n, std::ostream &out) {
    json rows = json::array();
    bool ok = true;
    auto add = [&](json row) {
        ok = ok && row["ok"].get<bool>();
        rows.push_back(std::move(row));
    };
    auto classical = [&](const ClassicalPartition &p) {
        auto report = verify_self_contragredient(build_classical(p));
        json row = {{"family", family_name(p.family)}, {"partition", p.to_string()}};
        row.update(contragredient_json(report, nullptr));
        add(std::move(row));
    };
    if (all) {
        for (const auto &rec : exceptional_records())
            add(contragredient_record(rec));
        for (auto fam : {ClassicalFamily::B, ClassicalFamily::C, ClassicalFamily::D})
            for (int n = 2; n <= max_n; ++n)
                for (const auto &p : classical_partitions(fam, n))
                    classical(p);
    } else if (!family.empty()) {
        classical(ClassicalPartition::from_parts(parse_classical_family(family), parse_parts(partition)));
    } else {
        if (sel.algebra.empty())
            throw Error(ErrorKind::InvalidInput, "give --algebra with --q/--label, --family with --partition, or --all");
        add(contragredient_record(select_record(sel)));
    }
    print(out, {{"ok", ok}, {"rows", rows}});
    return ok ? kPass : kMathFail;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

int cmd_frobenius_solve(const std::string &input, int order, int iterate, std::ostream &out) {
    if (order < 0)
        throw Error(ErrorKind::InvalidInput, "--order must be non-negative");
    FrobeniusSystem sys = parse_frobenius_system(read_json_file(input));
    auto sol = frob::log_system_solve(sys.a, sys.exponents, sys.max_log_power, sys.seeds, order, sys.forcing);
    int residual = frob::log_residual_nonzero_terms(sys.a, sol, order, sys.forcing);
    json j = {{"solution", solution_json(sol)},
              {"order", order},
              {"residual", {{"max_nonzero_entries", residual}, {"zero", residual == 0}}}};

    if (iterate >= 0) {
        if (sys.max_log_power != 0)
            throw Error(ErrorKind::InvalidInput, "--iterate needs a system without log layers (K = 0)");
        json runs = json::array();
        for (std::size_t jx = 0; jx < sys.exponents.size(); ++jx) {
            frob::AnalyticMatrixSeries shifted = sys.a;
            if (shifted.coeffs.empty())
                shifted.coeffs.push_back(
                    frob::PolyMatrix(static_cast<std::size_t>(sys.a.ell),
                                     frob::PolyVector(static_cast<std::size_t>(sys.a.ell))));
            for (std::size_t i = 0; i < static_cast<std::size_t>(sys.a.ell); ++i)
                shifted.coeffs[0][i][i] -= frob::Poly::constant(sys.exponents[jx]);
            frob::LayerKey key{static_cast<int>(jx), 0};
            frob::VectorSeries f;
            f.ell = sys.a.ell;
            if (auto it = sys.forcing.find(key); it != sys.forcing.end())
                f = it->second;
            frob::Seeds seeds;
            if (auto it = sys.seeds.find(key); it != sys.seeds.end())
                seeds = it->second;
            auto res = frob::contraction_solve(shifted, f, seeds, sys.domain, iterate, order);
            json iterate_json = json::array();
            for (const auto &v : res.iterate) {
                json vec = json::array();
                for (const auto &x : v)
                    vec.push_back(complex_json(x));
                iterate_json.push_back(vec);
            }
            runs.push_back({{"j", jx},
                            {"truncation", res.truncation},
                            {"norm_c", res.norm_c},
                            {"ratio", res.ratio},
                            {"norm_forcing", res.norm_forcing},
                            {"iterations", iterate},
                            {"rate_bound", res.rate_bound},
                            {"step_norms", res.step_norms},
                            {"z", complex_json(sys.domain.z0)},
                            {"iterate", iterate_json}});
        }
        j["contraction"] = runs;
    }
    print(out, j);
    return residual == 0 ? kPass : kMathFail;
}

} // namespace

json report_all(bool timings) {
    json rows = json::array();
    for (const auto &rec : exceptional_records()) {
        auto start = std::chrono::steady_clock::now();
        const Algebra &alg = algebra_for(rec.algebra);
        validate_or_throw(alg, rec);
        DynkinGrading g = grade(alg.table, rec.h);
        LieElement f = alg.table.sum_of_negative_root_vectors(rec.f_roots);
        CartanElement v = rec.v.value_or(CartanElement::zero(rec.algebra.rank));
        auto ve = exact_condition(alg.table, g, f, v);
        auto vf = fast_condition(alg.table, g, f, v);
        auto good = check_good_grading(alg.table, g, f);
        auto contra = verify_self_contragredient(alg.table, g, f);
        bool agree = ve.status == vf.status;
        bool pass = ve.passed() && vf.passed() && agree && good.good && contra.ok;

        json row = record_header(rec);
        row["status"] = pass ? "pass" : "fail";
        row["v"] = diagram_json(rec.algebra, v);
        row["dim_g_minus_half"] = g.dim(make_rational(-1, 2));
        row["good_grading"] = good.good;
        row["exact"] = verdict_json(ve);
        row["fast"] = verdict_json(vf);
        row["agree"] = agree;
        row["contragredient"] = contragredient_json(contra, nullptr);
        if (timings)
            row["timing_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    int passed = 0;
    for (const auto &r : rows)
        passed += r["status"] == "pass" ? 1 : 0;
    return {{"rows", rows},
            {"summary", {{"rows", rows.size()}, {"pass", passed}, {"fail", static_cast<int>(rows.size()) - passed}}}};
}

std::string report_tsv(const json &report) {
    std::string out = "algebra\tlabel\tq\tstatus\tfallbacks\n";
    for (const auto &row : report["rows"]) {
        std::string q;
        for (const auto &x : row["q"]) {
            if (!q.empty())
                q += ',';
            q += std::to_string(x.get<int>());
        }
        out += row["algebra"].get<std::string>() + "\t" + row["label"].get<std::string>() + "\t" + q + "\t" +
               row["status"].get<std::string>() + "\t" + std::to_string(row["fast"]["fallbacks"].size()) + "\n";
    }
    return out;
}

bool report_passed(const json &report) { return report["summary"]["fail"].get<int>() == 0; }

namespace {

int cmd_report(const std::string &output, const std::string &format, bool timings, std::ostream &out) {
    json report = report_all(timings);
    std::string text = format == "tsv" ? report_tsv(report) : report.dump(2) + "\n";
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary | std::ios::trunc);
        if (!file)
            throw Error(ErrorKind::IoError, "cannot write " + output);
        file << text;
        file.flush();
        if (!file)
            throw Error(ErrorKind::IoError, "write to " + output + " failed");
    }
    return report_passed(report) ? kPass : kMathFail;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact checks of the W-algebra rationality condition and a Frobenius series solver", "wrat"};
    app.require_subcommand(1);

    RecordSelector sel;
    bool exact = false, fast = false, both = false;
    auto *check_exc = app.add_subcommand("check-exceptional", "Check an embedded exceptional orbit record");
    add_selector(check_exc, sel);
    auto *f_exact = check_exc->add_flag("--exact", exact, "Full kernel of ad(f) (default)");
    auto *f_fast = check_exc->add_flag("--fast", fast, "Spectrum on g_0 and g_-1/2 with injectivity fallbacks");
    auto *f_both = check_exc->add_flag("--both", both, "Run both and require agreement");
    f_exact->excludes(f_fast)->excludes(f_both);
    f_fast->excludes(f_both);

    std::string family, partition;
    bool v_zero = false;
    auto *check_cls = app.add_subcommand("check-classical", "Check a classical nilpotent given by a partition");
    check_cls->add_option("--family", family, "B, C or D")->required();
    check_cls->add_option("--partition", partition, "Comma-separated parts, e.g. 2,2,1")->required();
    check_cls->add_flag("--v-zero", v_zero, "Use v = 0 instead of the block element");

    SearchConfig config;
    std::string coefficient_bound = "4";
    auto *search = app.add_subcommand("search-v", "Search h_0^f for a v passing the exact check");
    add_selector(search, sel);
    search->add_option("--denominator-bound", config.denominator_bound, "Largest common denominator tried");
    search->add_option("--coefficient-bound", coefficient_bound, "Bound on the free coordinates");

    RecordSelector csel;
    std::string cfamily, cpartition;
    bool call = false;
    int max_n = 10;
    auto *contra = app.add_subcommand("verify-contragredient", "Check the self-contragredience identities");
    contra->add_option("--algebra", csel.algebra, "Exceptional type");
    contra->add_option("--q", csel.q, "Denominator q");
    contra->add_option("--label", csel.label, "Bala-Carter label");
    contra->add_option("--family", cfamily, "Classical family B, C or D");
    contra->add_option("--partition", cpartition, "Comma-separated parts");
    contra->add_flag("--all", call, "All records and all classical partitions up to --max-n");
    contra->add_option("--max-n", max_n, "Largest classical matrix size with --all");

    std::string input;
    int order = 50, iterate = -1;
    auto *frobenius = app.add_subcommand("frobenius", "Series solutions at a regular singular point");
    frobenius->require_subcommand(1);
    auto *solve = frobenius->add_subcommand("solve", "Solve a system file");
    solve->add_option("--input", input, "System JSON file")->required();
    solve->add_option("--order", order, "Truncation order M in q");
    solve->add_option("--iterate", iterate, "Also run m contraction iterations");

    std::string output, format = "json";
    bool all = false, timings = false;
    auto *report = app.add_subcommand("report", "Check every embedded record");
    report->add_flag("--all", all, "All embedded records (the only mode)");
    report->add_option("--output", output, "Output file (default stdout)");
    report->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    report->add_flag("--timings", timings, "Include per-row timings (output no longer reproducible)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kPass : kDataError;
    }

    try {
        if (*check_exc) {
            if (sel.label.empty() && check_exc->count("--q") == 0)
                throw Error(ErrorKind::InvalidInput, "give --q or --label");
            bool run_exact = exact || both || !fast;
            bool run_fast = fast || both;
            return cmd_check_exceptional(sel, run_exact, run_fast, out);
        }
        if (*check_cls)
            return cmd_check_classical(family, partition, v_zero, out);
        if (*search) {
            if (sel.label.empty() && search->count("--q") == 0)
                throw Error(ErrorKind::InvalidInput, "give --q or --label");
            config.coefficient_bound = parse_rational(coefficient_bound);
            return cmd_search_v(sel, config, out);
        }
        if (*contra)
            return cmd_verify_contragredient(csel, cfamily, cpartition, call, max_n, out);
        if (*solve)
            return cmd_frobenius_solve(input, order, iterate, out);
        if (*report)
            return cmd_report(output, format, timings, out);
    } catch (const ExternalOrbit &e) {
        print(err, {{"error", "EvenOrExternal"}, {"message", e.what()}});
        return kDataError;
    } catch (const Error &e) {
        return diagnose(err, e.kind(), e.what());
    } catch (const json::exception &e) {
        return diagnose(err, ErrorKind::ParseError, e.what());
    }
    return kDataError;
}

} // namespace wrat::cli
