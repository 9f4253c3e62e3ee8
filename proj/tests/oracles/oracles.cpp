#include "oracles.hpp"

#include <random>

namespace wrat::oracle {

std::vector<std::vector<int>> cartan_matrix(SimpleType type) {
    const int r = type.rank;
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        a[i][i] = 2;
    auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
    switch (type.family) {
    case Family::A:
        for (int i = 1; i < r; ++i)
            link(i, i + 1);
        break;
    case Family::B:
        for (int i = 1; i < r; ++i)
            link(i, i + 1);
        a[r - 2][r - 1] = -2; // alpha_r short
        break;
    case Family::C:
        for (int i = 1; i < r; ++i)
            link(i, i + 1);
        a[r - 1][r - 2] = -2; // alpha_r long
        break;
    case Family::D:
        for (int i = 1; i < r - 1; ++i)
            link(i, i + 1);
        link(r - 2, r);
        break;
    case Family::E:
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int i = 4; i < r; ++i)
            link(i, i + 1);
        break;
    case Family::F:
        link(1, 2);
        link(2, 3);
        link(3, 4);
        a[1][2] = -2;
        break;
    case Family::G:
        a[0][1] = -3; // alpha_1 long
        a[1][0] = -1;
        break;
    }
    return a;
}

std::set<std::vector<int>> weyl_positive_roots(SimpleType type) {
    const auto a = cartan_matrix(type);
    const int r = type.rank;
    std::set<std::vector<int>> all, frontier;
    for (int i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        frontier.insert(e);
    }
    while (!frontier.empty()) {
        std::set<std::vector<int>> next;
        for (const auto &b : frontier) {
            if (!all.insert(b).second)
                continue;
            for (int i = 0; i < r; ++i) {
                int pair = 0;
                for (int j = 0; j < r; ++j)
                    pair += b[j] * a[j][i];
                auto c = b;
                c[i] -= pair;
                if (!all.count(c))
                    next.insert(c);
            }
        }
        frontier = std::move(next);
    }
    std::set<std::vector<int>> positive;
    for (const auto &b : all) {
        bool pos = true;
        for (int x : b)
            pos = pos && x >= 0;
        if (pos)
            positive.insert(b);
    }
    return positive;
}

int coxeter_number(SimpleType type) {
    return 2 * static_cast<int>(weyl_positive_roots(type).size()) / type.rank;
}

Rational dual_coxeter_number(SimpleType type) {
    const auto a = cartan_matrix(type);
    const int r = type.rank;
    // Squared lengths d with a_ij d_j = a_ji d_i, propagated along the diagram.
    std::vector<Rational> d(r, 0);
    d[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (i != j && a[i][j] != 0 && sgn(d[i]) != 0 && sgn(d[j]) == 0) {
                    d[j] = d[i] * a[j][i] / a[i][j];
                    changed = true;
                }
    }
    Rational longest = 0;
    for (const auto &x : d)
        longest = std::max(longest, x);
    for (auto &x : d)
        x = x * 2 / longest;
    auto inner = [&](const std::vector<int> &x, const std::vector<int> &y) {
        Rational s = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                s += Rational(x[i] * y[j]) * a[i][j] * d[j] / 2;
        return s;
    };
    const auto roots = weyl_positive_roots(type);
    std::vector<int> theta;
    int best = -1;
    for (const auto &b : roots) {
        int ht = 0;
        for (int x : b)
            ht += x;
        if (ht > best) {
            best = ht;
            theta = b;
        }
    }
    Rational rho_theta = 0;
    for (const auto &b : roots)
        rho_theta += inner(b, theta) / 2;
    return 1 + rho_theta;
}

namespace {

Matrix gl_commutator_system(const Matrix &x, std::size_t n) {
    // Rows: entries of [x, X] for X given by n^2 unknowns X(a, b) at a * n + b.
    Matrix m(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                m(a * n + b, c * n + b) += x(a, c);
                m(a * n + b, a * n + c) -= x(c, b);
            }
    return m;
}

} // namespace

std::map<std::pair<Rational, Rational>, int> dense_classical_spectrum(const ClassicalRealization &real,
                                                                      bool use_zero_v) {
    const auto n = static_cast<std::size_t>(real.n);
    const std::size_t N = n * n;
    Matrix sys(0, N);
    // S X + X^T S = 0.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector row(N);
            for (std::size_t c = 0; c < n; ++c) {
                row[c * n + b] += real.gram(a, c);
                row[c * n + a] += real.gram(c, b);
            }
            sys.append_row(row);
        }
    const Matrix comm = gl_commutator_system(real.f, n);
    for (std::size_t i = 0; i < N; ++i)
        sys.append_row(comm.row(i));
    const auto basis = nullspace(sys);
    const std::size_t k = basis.size();

    Matrix cols(N, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < N; ++i)
            cols(i, c) = basis[c][i];
    Matrix zero_v(n, n);
    const Matrix &vm = use_zero_v ? zero_v : real.v;
    auto restricted = [&](const Matrix &x, const Rational &scale) {
        const Matrix op = gl_commutator_system(x, n);
        Matrix out(k, k);
        for (std::size_t c = 0; c < k; ++c) {
            Vector img = op.apply(basis[c]);
            for (auto &y : img)
                y *= scale;
            auto coords = solve(cols, img);
            if (!coords)
                throw std::logic_error("g^f is not stable");
            for (std::size_t i = 0; i < k; ++i)
                out(i, c) = (*coords)[i];
        }
        return out;
    };
    const Matrix mh = restricted(real.h, make_rational(1, 2));
    const Matrix mv = restricted(vm, 1);

    std::set<Rational> degrees, lambdas;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            degrees.insert((real.h(a, a) - real.h(b, b)) / 2);
            lambdas.insert(vm(a, a) - vm(b, b));
        }
    std::map<std::pair<Rational, Rational>, int> out;
    int total = 0;
    for (const auto &d : degrees)
        for (const auto &l : lambdas) {
            Matrix stacked(0, k);
            for (std::size_t i = 0; i < k; ++i) {
                Vector row(mh.row(i).begin(), mh.row(i).end());
                row[i] -= d;
                stacked.append_row(row);
            }
            for (std::size_t i = 0; i < k; ++i) {
                Vector row(mv.row(i).begin(), mv.row(i).end());
                row[i] -= l;
                stacked.append_row(row);
            }
            int dim = static_cast<int>(k - rank(stacked));
            if (dim > 0) {
                out[{-d, l}] = dim;
                total += dim;
            }
        }
    if (total != static_cast<int>(k))
        throw std::logic_error("ad(h) and ad(v) are not jointly diagonalizable on g^f");
    return out;
}

int centralizer_dimension(const ChevalleyTable &table, const LieElement &f) {
    return static_cast<int>(static_cast<std::size_t>(table.dimension()) - rank(ad_matrix(table, f)));
}

frob::Poly poly(std::initializer_list<Rational> coeffs) {
    std::vector<frob::QI> c;
    for (const auto &x : coeffs)
        c.emplace_back(x);
    return frob::Poly(c);
}

frob::VectorSeries forcing_for(const frob::AnalyticMatrixSeries &a, const frob::VectorSeries &phi, int shift_num,
                               int shift_den) {
    const frob::QI shift(make_rational(shift_num, shift_den));
    frob::VectorSeries f;
    f.ell = a.ell;
    for (int n = 0; n <= phi.order(); ++n) {
        frob::PolyVector t = phi.term(n);
        for (auto &p : t)
            p = p.scaled(frob::QI(n) + shift);
        for (int m = 0; m <= n; ++m) {
            const auto am = a.term(n - m);
            const auto pm = phi.term(m);
            for (int i = 0; i < a.ell; ++i)
                for (int j = 0; j < a.ell; ++j)
                    t[i] -= am[i][j] * pm[j];
        }
        f.coeffs.push_back(std::move(t));
    }
    return f;
}

Manufactured manufactured_system(std::uint64_t seed, int order) {
    std::mt19937_64 rng(seed);
    auto small = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto rat = [&] { return make_rational(small(-4, 4), small(1, 3)); };
    auto quad = [&] { return poly({rat(), rat(), rat()}); };

    static const Rational diagonals[] = {make_rational(1, 2), make_rational(-1, 3), make_rational(5, 2),
                                         make_rational(-7, 4), make_rational(2, 3)};
    Manufactured m;
    m.a.ell = 2;
    m.a.radius = 1;
    frob::PolyMatrix a0(2, frob::PolyVector(2));
    a0[0][0] = poly({diagonals[small(0, 4)]});
    a0[1][1] = poly({diagonals[small(0, 4)]});
    a0[0][1] = quad();
    m.a.coeffs.push_back(a0);
    for (int k = 1; k <= 2; ++k) {
        frob::PolyMatrix ak(2, frob::PolyVector(2));
        for (auto &row : ak)
            for (auto &p : row)
                p = quad();
        m.a.coeffs.push_back(ak);
    }
    m.phi.ell = 2;
    for (int n = 0; n <= order; ++n)
        m.phi.coeffs.push_back({poly({make_rational(small(-5, 5), n + 1), rat()}), poly({rat(), 0, rat()})});
    m.f = forcing_for(m.a, m.phi, 0, 1);
    return m;
}

} // namespace wrat::oracle

namespace wrat::oracle {

std::map<std::pair<Rational, Rational>, int> kernel_spectrum(const ChevalleyTable &table,
                                                             const DynkinGrading &grading, const LieElement &f,
                                                             const CartanElement &v) {
    const Matrix ad = ad_matrix(table, f);
    const int dim = table.dimension();
    const RootSystem &rs = table.roots();
    std::map<std::pair<Rational, Rational>, std::vector<int>> spaces;
    for (int i = 0; i < dim; ++i) {
        Rational lambda = 0;
        if (i < 2 * rs.num_positive()) {
            int root = i % rs.num_positive();
            lambda = pairing(rs.root(root), v);
            if (i >= rs.num_positive())
                lambda = -lambda;
        }
        spaces[{-grading.degree[static_cast<std::size_t>(i)], lambda}].push_back(i);
    }
    std::map<std::pair<Rational, Rational>, int> out;
    for (const auto &[key, cols] : spaces) {
        Matrix sub(static_cast<std::size_t>(dim), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < dim; ++r)
                sub(static_cast<std::size_t>(r), c) = ad(static_cast<std::size_t>(r), static_cast<std::size_t>(cols[c]));
        int k = static_cast<int>(cols.size() - rank(sub));
        if (k > 0)
            out[key] = k;
    }
    return out;
}

std::map<std::pair<Rational, Rational>, int> verdict_spectrum(const ConditionVerdict &verdict) {
    std::map<std::pair<Rational, Rational>, int> out;
    for (const auto &e : verdict.evidence)
        out[{e.j, e.lambda}] += e.multiplicity;
    return out;
}

} // namespace wrat::oracle
