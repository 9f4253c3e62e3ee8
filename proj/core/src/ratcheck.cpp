#include "wrat/ratcheck.hpp"

#include "wrat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wrat {

const char *status_name(Status s) { return s == Status::Pass ? "pass" : "fail"; }

const char *method_name(CheckMethod m) {
    switch (m) {
    case CheckMethod::Exact: return "exact";
    case CheckMethod::Fast: return "fast";
    case CheckMethod::FastDelegated: return "fast-delegated";
    }
    return "?";
}

int ConditionVerdict::total_multiplicity() const {
    int n = 0;
    for (const auto &e : evidence)
        n += e.multiplicity;
    return n;
}

bool admissible(const Rational &j, const Rational &lambda) { return is_natural(lambda + j + 1); }

std::vector<CartanElement> h0f_space(const RootSystem &rs, const std::vector<std::vector<int>> &f_roots) {
    Matrix constraints(f_roots.size(), static_cast<std::size_t>(rs.rank()));
    for (std::size_t k = 0; k < f_roots.size(); ++k) {
        rs.index_of(f_roots[k]);
        for (std::size_t i = 0; i < f_roots[k].size(); ++i)
            constraints(k, i) = f_roots[k][i];
    }
    std::vector<CartanElement> out;
    for (auto &v : nullspace(constraints))
        out.push_back({std::move(v)});
    return out;
}

namespace {

// ad(v)-eigenvalue of each basis element; v in h acts diagonally.
std::vector<Rational> eigenvalues(const ChevalleyTable &table, const CartanElement &v) {
    const RootSystem &rs = table.roots();
    std::vector<Rational> out(static_cast<std::size_t>(table.dimension()));
    for (int a = 0; a < rs.num_positive(); ++a) {
        Rational l = pairing(rs.root(a), v);
        out[static_cast<std::size_t>(table.e_index(a))] = l;
        out[static_cast<std::size_t>(table.f_index(a))] = -l;
    }
    return out;
}

void require_preconditions(const ChevalleyTable &table, const DynkinGrading &grading, const LieElement &f,
                           const CartanElement &v) {
    auto d = homogeneous_degree(grading, f);
    if (f.is_zero() || !d || *d != -1)
        throw Error(ErrorKind::NotDegreeMinusOne, "f is not homogeneous of degree -1");
    if (v.rank() != table.rank())
        throw Error(ErrorKind::DimensionMismatch, "v has the wrong rank");
    const RootSystem &rs = table.roots();
    for (const auto &[idx, c] : f.coords()) {
        BasisElement b = table.element(idx);
        if (b.kind == BasisKind::H || sgn(pairing(rs.root(b.index), v)) != 0)
            throw Error(ErrorKind::VNotInCentralizer, "[v, f] != 0 at " + table.label(idx));
    }
}

using Key = std::pair<Rational, Rational>; // (degree, eigenvalue)

std::map<Key, std::vector<int>> split(const DynkinGrading &grading, const std::vector<Rational> &eig) {
    std::map<Key, std::vector<int>> out;
    for (std::size_t i = 0; i < eig.size(); ++i)
        out[{grading.degree[i], eig[i]}].push_back(static_cast<int>(i));
    return out;
}

Status status_of(const std::vector<EvidenceEntry> &evidence) {
    for (const auto &e : evidence)
        if (!e.accepted())
            return Status::Fail;
    return Status::Pass;
}

} // namespace

ConditionVerdict exact_condition(const ChevalleyTable &table, const DynkinGrading &grading, const LieElement &f,
                                 const CartanElement &v) {
    require_preconditions(table, grading, f, v);
    const auto eig = eigenvalues(table, v);
    const auto blocks = split(grading, eig);

    // ad(f) maps the (d, lambda) block into (d - 1, lambda).
    ConditionVerdict verdict;
    verdict.method = CheckMethod::Exact;
    std::map<Key, int> kernel;
    for (const auto &[key, src] : blocks) {
        auto it = blocks.find({key.first - 1, key.second});
        int nullity = static_cast<int>(src.size());
        if (it != blocks.end())
            nullity -= static_cast<int>(rank(ad_block(table, f, src, it->second)));
        if (nullity > 0)
            kernel[{-key.first, key.second}] = nullity;
    }
    for (const auto &[key, mult] : kernel)
        verdict.evidence.push_back({key.first, key.second, mult, admissible(key.first, key.second)});
    verdict.status = status_of(verdict.evidence);
    return verdict;
}

ConditionVerdict fast_condition(const ChevalleyTable &table, const DynkinGrading &grading, const LieElement &f,
                                const CartanElement &v) {
    require_preconditions(table, grading, f, v);
    const auto eig = eigenvalues(table, v);
    const Rational half = make_rational(1, 2);
    const std::set<Rational> allowed0 = {Rational(-1), Rational(0), Rational(1)};
    const std::set<Rational> allowed_half = {make_rational(-3, 2), -half, half, make_rational(3, 2)};

    ConditionVerdict verdict;
    verdict.method = CheckMethod::Fast;
    for (const Rational &piece : {Rational(0), Rational(-half)}) {
        const auto &allowed = piece == 0 ? allowed0 : allowed_half;
        std::map<Rational, std::vector<int>> spaces;
        for (int idx : grading.piece(piece))
            spaces[eig[static_cast<std::size_t>(idx)]].push_back(idx);
        for (const auto &[lambda, basis] : spaces) {
            EvidenceEntry entry{-piece, lambda, static_cast<int>(basis.size()), admissible(-piece, lambda)};
            if (!allowed.count(lambda)) {
                // Outlier: the eigenspace must meet ker ad(f) trivially.
                const auto &target = grading.piece(piece - 1);
                std::vector<int> same;
                for (int idx : target)
                    if (eig[static_cast<std::size_t>(idx)] == lambda)
                        same.push_back(idx);
                std::size_t r = same.empty() ? 0 : rank(ad_block(table, f, basis, same));
                if (r != basis.size()) {
                    ConditionVerdict exact = exact_condition(table, grading, f, v);
                    exact.method = CheckMethod::FastDelegated;
                    return exact;
                }
                entry.cleared = true;
                for (int idx : basis) {
                    FallbackWitness w;
                    w.eigenvalue = lambda;
                    w.piece = piece;
                    w.witness = idx;
                    w.witness_label = table.label(idx);
                    w.image = bracket(table, f, LieElement::basis(idx));
                    for (const auto &[i, c] : w.image.coords())
                        w.image_labels.push_back(table.label(i));
                    verdict.fallbacks.push_back(std::move(w));
                }
            }
            verdict.evidence.push_back(entry);
        }
    }
    verdict.status = status_of(verdict.evidence);
    return verdict;
}

namespace {

// Kernel blocks of ad(f) grouped by degree and by the restriction of the
// weight to h_0^f, so that eigenvalues for any v in h_0^f are linear in v's
// coordinates.
struct KernelPiece {
    Rational j;
    std::vector<Rational> weights; // alpha(b_k) over the h_0^f basis
    int multiplicity = 0;
};

std::vector<KernelPiece> kernel_pieces(const ChevalleyTable &table, const DynkinGrading &grading,
                                       const LieElement &f, const std::vector<CartanElement> &basis) {
    const RootSystem &rs = table.roots();
    const int dim = table.dimension();
    std::vector<std::vector<Rational>> weight(static_cast<std::size_t>(dim),
                                              std::vector<Rational>(basis.size()));
    for (int a = 0; a < rs.num_positive(); ++a)
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Rational w = pairing(rs.root(a), basis[k]);
            weight[static_cast<std::size_t>(table.e_index(a))][k] = w;
            weight[static_cast<std::size_t>(table.f_index(a))][k] = -w;
        }
    std::map<std::pair<Rational, std::vector<Rational>>, std::vector<int>> blocks;
    for (int i = 0; i < dim; ++i)
        blocks[{grading.degree[static_cast<std::size_t>(i)], weight[static_cast<std::size_t>(i)]}].push_back(i);

    std::vector<KernelPiece> out;
    for (const auto &[key, src] : blocks) {
        auto it = blocks.find({key.first - 1, key.second});
        int nullity = static_cast<int>(src.size());
        if (it != blocks.end())
            nullity -= static_cast<int>(rank(ad_block(table, f, src, it->second)));
        if (nullity > 0)
            out.push_back({-key.first, key.second, nullity});
    }
    return out;
}

mpz_class common_denominator(const std::vector<Rational> &xs) {
    mpz_class d = 1;
    for (const auto &x : xs)
        d = lcm(d, mpz_class(x.get_den()));
    return d;
}

} // namespace

std::optional<CartanElement> search_v(const RootSystem &rs, const ChevalleyTable &table, const DynkinGrading &grading,
                                      const std::vector<std::vector<int>> &f_roots, const SearchConfig &config) {
    if (is_even_grading(grading))
        return CartanElement::zero(rs.rank());
    if (config.denominator_bound < 1 || sgn(config.coefficient_bound) <= 0)
        throw Error(ErrorKind::InvalidInput, "search bounds must be positive");

    const auto basis = h0f_space(rs, f_roots);
    const LieElement f = table.sum_of_negative_root_vectors(f_roots);
    const auto pieces = kernel_pieces(table, grading, f, basis);
    const std::size_t dim = basis.size();

    for (int den = 1; den <= config.denominator_bound; ++den) {
        mpz_class steps_z = config.coefficient_bound.get_num() * den / config.coefficient_bound.get_den();
        const long steps = steps_z.get_si();
        std::vector<long> numer(dim, -steps);
        for (;;) {
            std::vector<Rational> c(dim);
            for (std::size_t k = 0; k < dim; ++k)
                c[k] = make_rational(numer[k], den);
            CartanElement v = CartanElement::zero(rs.rank());
            for (std::size_t k = 0; k < dim; ++k)
                v = v + basis[k].scaled(c[k]);

            if (common_denominator(v.pairings) == den) {
                bool ok = true;
                for (const auto &p : pieces) {
                    Rational lambda;
                    for (std::size_t k = 0; k < dim; ++k)
                        lambda += c[k] * p.weights[k];
                    if (!admissible(p.j, lambda)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && exact_condition(table, grading, f, v).passed())
                    return v;
            }

            std::size_t k = dim;
            while (k > 0 && numer[k - 1] == steps) {
                numer[k - 1] = -steps;
                --k;
            }
            if (k == 0)
                break;
            ++numer[k - 1];
        }
    }
    return std::nullopt;
}

ConditionVerdict verify_good_even_shortcut(const ChevalleyTable &table, const CartanElement &h,
                                           const std::vector<std::vector<int>> &f_roots, const CartanElement &x0) {
    const LieElement f = table.sum_of_negative_root_vectors(f_roots);
    const DynkinGrading x0_grading = grade(table, x0.scaled(2));
    auto d = homogeneous_degree(x0_grading, f);
    if (!d || *d != -1)
        throw Error(ErrorKind::GradingNotGood, "f is not in degree -1 of the x0-grading");
    if (!is_even_grading(x0_grading))
        throw Error(ErrorKind::GradingNotEven, "the x0-grading has non-integral degrees");
    if (!check_good_grading(table, x0_grading, f).good)
        throw Error(ErrorKind::GradingNotGood, "ad(f) fails the injectivity/surjectivity test");

    CartanElement v = h.scaled(make_rational(1, 2)) - x0;
    const RootSystem &rs = table.roots();
    for (const auto &beta : f_roots)
        if (sgn(pairing(beta, v)) != 0)
            throw Error(ErrorKind::VNotInCentralizer,
                        "v = h/2 - x0 does not vanish on " + root_label(rs.type(), beta));
    return exact_condition(table, grade(table, h), f, v);
}

ContragredientReport verify_self_contragredient(const ChevalleyTable &table, const DynkinGrading &grading,
                                                const LieElement &f) {
    ContragredientReport report;
    const auto &g0 = grading.piece(0);
    const auto &gm1 = grading.piece(-1);
    std::vector<Vector> kernel;
    if (gm1.empty()) {
        for (std::size_t c = 0; c < g0.size(); ++c) {
            Vector e(g0.size());
            e[c] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        kernel = nullspace(ad_block(table, f, g0, gm1));
    }
    report.dim_g0f = static_cast<int>(kernel.size());

    const LieElement half_h = table.cartan_to_element(grading.h).scaled(make_rational(1, 2));
    std::vector<int> plus, minus;
    for (const auto &[j, basis] : grading.pieces) {
        if (sgn(j) > 0)
            plus.insert(plus.end(), basis.begin(), basis.end());
        else if (sgn(j) < 0)
            minus.insert(minus.end(), basis.begin(), basis.end());
    }
    auto trace_on = [&](const LieElement &v, const std::vector<int> &span) {
        Rational tr;
        for (const auto &[a, ca] : v.coords())
            for (int b : span)
                for (const Term &t : table.bracket_basis(a, b))
                    if (t.index == b)
                        tr += ca * t.coeff;
        return tr;
    };

    for (const auto &coords : kernel) {
        ContragredientEntry entry;
        for (std::size_t c = 0; c < g0.size(); ++c)
            entry.v.add(g0[c], coords[c]);
        entry.form_value = table.cartan_form(half_h, entry.v);
        entry.trace_plus = trace_on(entry.v, plus);
        entry.trace_minus = trace_on(entry.v, minus);
        report.ok = report.ok && entry.ok();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

// Matrix units E_ab of gl_n grouped by (degree, ad(v)-eigenvalue).
struct UnitSpace {
    std::vector<std::pair<std::size_t, std::size_t>> units;
};

using UnitKey = std::pair<Rational, Rational>;

std::map<UnitKey, UnitSpace> unit_spaces(const ClassicalRealization &real, bool use_zero_v) {
    std::map<UnitKey, UnitSpace> out;
    const auto n = static_cast<std::size_t>(real.n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational d = (real.h(a, a) - real.h(b, b)) / 2;
            Rational l = use_zero_v ? Rational(0) : real.v(a, a) - real.v(b, b);
            out[{d, l}].units.push_back({a, b});
        }
    return out;
}

Matrix unit_matrix(std::size_t n, std::pair<std::size_t, std::size_t> u) {
    Matrix m(n, n);
    m(u.first, u.second) = 1;
    return m;
}

void append_flat(Matrix &system, std::size_t col, std::size_t offset, const Matrix &m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            system(offset + r * m.cols() + c, col) = m(r, c);
}

// Basis of {X in span(units) : S X + X^T S = 0} (and [f, X] = 0 when
// with_f), in coordinates over the units.
std::vector<Vector> constrained_basis(const ClassicalRealization &real, const UnitSpace &space, bool with_f) {
    const auto n = static_cast<std::size_t>(real.n);
    const std::size_t blocks = with_f ? 2 : 1;
    Matrix system(blocks * n * n, space.units.size());
    for (std::size_t c = 0; c < space.units.size(); ++c) {
        Matrix e = unit_matrix(n, space.units[c]);
        append_flat(system, c, 0, real.gram * e + e.transpose() * real.gram);
        if (with_f)
            append_flat(system, c, n * n, commutator(real.f, e));
    }
    return nullspace(system);
}

Matrix assemble(std::size_t n, const UnitSpace &space, const Vector &coords) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < space.units.size(); ++k)
        m(space.units[k].first, space.units[k].second) = coords[k];
    return m;
}

} // namespace

ConditionVerdict check_classical(const ClassicalRealization &real, bool use_zero_v) {
    ConditionVerdict verdict;
    verdict.method = CheckMethod::Exact;
    for (const auto &[key, space] : unit_spaces(real, use_zero_v)) {
        int mult = static_cast<int>(constrained_basis(real, space, true).size());
        if (mult == 0)
            continue;
        Rational j = -key.first;
        verdict.evidence.push_back({j, key.second, mult, admissible(j, key.second)});
    }
    std::sort(verdict.evidence.begin(), verdict.evidence.end(), [](const auto &a, const auto &b) {
        return std::tie(a.j, a.lambda) < std::tie(b.j, b.lambda);
    });
    verdict.status = status_of(verdict.evidence);
    return verdict;
}

ContragredientReport verify_self_contragredient(const ClassicalRealization &real) {
    ContragredientReport report;
    const auto n = static_cast<std::size_t>(real.n);
    // Group matrix units by degree only.
    std::map<Rational, UnitSpace> by_degree;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            by_degree[(real.h(a, a) - real.h(b, b)) / 2].units.push_back({a, b});

    std::vector<Matrix> g0f;
    if (auto it = by_degree.find(0); it != by_degree.end())
        for (const auto &coords : constrained_basis(real, it->second, true))
            g0f.push_back(assemble(n, it->second, coords));
    report.dim_g0f = static_cast<int>(g0f.size());

    // Trace of ad(X) on g_d via the RREF basis, whose coordinates sit at the
    // free columns of the membership system.
    auto trace_on_degree = [&](const Matrix &x, const UnitSpace &space) {
        const auto basis = constrained_basis(real, space, false);
        Matrix system(n * n, space.units.size());
        for (std::size_t c = 0; c < space.units.size(); ++c) {
            Matrix e = unit_matrix(n, space.units[c]);
            append_flat(system, c, 0, real.gram * e + e.transpose() * real.gram);
        }
        const auto free = free_columns(system);
        Rational tr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Matrix image = commutator(x, assemble(n, space, basis[k]));
            const auto [a, b] = space.units[free[k]];
            tr += image(a, b);
        }
        return tr;
    };

    const Matrix half_h = real.h.scaled(make_rational(1, 2));
    for (const auto &x : g0f) {
        ContragredientEntry entry;
        Rational form;
        Matrix prod = half_h * x;
        for (std::size_t i = 0; i < n; ++i)
            form += prod(i, i);
        entry.form_value = form;
        for (const auto &[d, space] : by_degree) {
            if (sgn(d) > 0)
                entry.trace_plus += trace_on_degree(x, space);
            else if (sgn(d) < 0)
                entry.trace_minus += trace_on_degree(x, space);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                entry.v.add(static_cast<int>(a * n + b), x(a, b));
        report.ok = report.ok && entry.ok();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace wrat
