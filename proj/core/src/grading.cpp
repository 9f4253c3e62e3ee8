#include "wrat/grading.hpp"

#include "wrat/errors.hpp"

#include <set>
#include <unordered_map>

namespace wrat {

const std::vector<int> &DynkinGrading::piece(const Rational &j) const {
    static const std::vector<int> empty;
    auto it = pieces.find(j);
    return it == pieces.end() ? empty : it->second;
}

int DynkinGrading::total_dimension() const {
    int n = 0;
    for (const auto &[j, basis] : pieces)
        n += static_cast<int>(basis.size());
    return n;
}

DynkinGrading grade(const ChevalleyTable &table, const CartanElement &h) {
    const RootSystem &rs = table.roots();
    if (h.rank() != rs.rank())
        throw Error(ErrorKind::DimensionMismatch, "grading element has the wrong rank");
    DynkinGrading g;
    g.h = h;
    g.degree.resize(static_cast<std::size_t>(table.dimension()));
    for (int a = 0; a < rs.num_positive(); ++a) {
        Rational d = pairing(rs.root(a), h) / 2;
        g.degree[static_cast<std::size_t>(table.e_index(a))] = d;
        g.degree[static_cast<std::size_t>(table.f_index(a))] = -d;
    }
    for (int idx = 0; idx < table.dimension(); ++idx)
        g.pieces[g.degree[static_cast<std::size_t>(idx)]].push_back(idx);
    return g;
}

namespace {

std::unordered_map<int, std::size_t> positions(const std::vector<int> &indices) {
    std::unordered_map<int, std::size_t> pos;
    for (std::size_t k = 0; k < indices.size(); ++k)
        pos.emplace(indices[k], k);
    return pos;
}

} // namespace

Matrix ad_block(const ChevalleyTable &table, const LieElement &x, const std::vector<int> &from,
                const std::vector<int> &to) {
    Matrix m(to.size(), from.size());
    auto pos = positions(to);
    for (std::size_t c = 0; c < from.size(); ++c)
        for (const auto &[a, ca] : x.coords())
            for (const Term &t : table.bracket_basis(a, from[c])) {
                auto it = pos.find(t.index);
                if (it == pos.end())
                    throw Error(ErrorKind::DimensionMismatch, "ad_block: image leaves the target span");
                m(it->second, c) += ca * t.coeff;
            }
    return m;
}

Sl2Triple complete_sl2(const ChevalleyTable &table, const CartanElement &h,
                       const std::vector<std::vector<int>> &f_roots) {
    const RootSystem &rs = table.roots();
    if (f_roots.empty())
        throw Error(ErrorKind::NoSl2Completion, "f is zero");
    for (const auto &beta : f_roots) {
        Rational b = pairing(beta, h);
        if (b != 2)
            throw Error(ErrorKind::NoSl2Completion,
                        root_label(rs.type(), beta) + "(h) = " + to_string(b) + ", expected 2");
    }
    LieElement f = table.sum_of_negative_root_vectors(f_roots);
    LieElement h_elem = table.cartan_to_element(h);

    DynkinGrading g = grade(table, h);
    const auto &g1 = g.piece(1);
    std::vector<int> cartan;
    for (int i = 0; i < rs.rank(); ++i)
        cartan.push_back(table.h_index(i));

    // [b, f] for b in g_1 lands in g_0; only the Cartan rows carry h, the rest must vanish.
    const auto &g0 = g.piece(0);
    Matrix system(g0.size(), g1.size());
    auto pos = positions(g0);
    for (std::size_t c = 0; c < g1.size(); ++c)
        for (const auto &[a, ca] : f.coords())
            for (const Term &t : table.bracket_basis(g1[c], a))
                system(pos.at(t.index), c) += ca * t.coeff;
    Vector rhs(g0.size());
    for (const auto &[idx, c] : h_elem.coords())
        rhs[pos.at(idx)] = c;

    auto sol = solve(system, rhs);
    if (!sol)
        throw Error(ErrorKind::NoSl2Completion, "[e, f] = h has no solution with e in g_1");
    Sl2Triple triple;
    for (std::size_t c = 0; c < g1.size(); ++c)
        triple.e.add(g1[c], (*sol)[c]);
    triple.h = h_elem;
    triple.f = f;
    return triple;
}

bool verify_sl2(const ChevalleyTable &table, const Sl2Triple &t) {
    return bracket(table, t.h, t.e) == t.e.scaled(2) && bracket(table, t.h, t.f) == t.f.scaled(-2) &&
           bracket(table, t.e, t.f) == t.h;
}

bool is_even_grading(const DynkinGrading &grading) {
    for (const auto &[j, basis] : grading.pieces)
        if (!basis.empty() && !is_integer(j))
            return false;
    return true;
}

std::optional<Rational> homogeneous_degree(const DynkinGrading &grading, const LieElement &x) {
    std::optional<Rational> d;
    for (const auto &[idx, c] : x.coords()) {
        const Rational &di = grading.degree.at(static_cast<std::size_t>(idx));
        if (d && *d != di)
            return std::nullopt;
        d = di;
    }
    return d;
}

GoodGradingReport check_good_grading(const ChevalleyTable &table, const DynkinGrading &grading,
                                     const LieElement &f) {
    auto d = homogeneous_degree(grading, f);
    if (f.is_zero() || !d || *d != -1)
        throw Error(ErrorKind::NotDegreeMinusOne, "f is not homogeneous of degree -1");

    GoodGradingReport report;
    std::set<Rational> degrees;
    for (const auto &[j, basis] : grading.pieces) {
        degrees.insert(j);
        degrees.insert(j + 1);
    }
    const Rational half = make_rational(1, 2);
    for (const Rational &j : degrees) {
        GoodGradingReport::Piece p;
        p.j = j;
        const auto &src = grading.piece(j);
        const auto &dst = grading.piece(j - 1);
        p.dim_source = static_cast<int>(src.size());
        p.dim_target = static_cast<int>(dst.size());
        p.rank = src.empty() || dst.empty() ? 0 : static_cast<int>(rank(ad_block(table, f, src, dst)));
        p.injective = p.rank == p.dim_source;
        p.surjective = p.rank == p.dim_target;
        if ((j >= half && !p.injective) || (j <= half && !p.surjective))
            report.good = false;
        report.pieces.push_back(p);
    }
    return report;
}

} // namespace wrat
