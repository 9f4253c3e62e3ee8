#include "wrat/frobenius.hpp"

#include "wrat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wrat::frob {

QI QI::operator/(const QI &o) const {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0)
        throw Error(ErrorKind::InvalidInput, "division by zero in Q(i)");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string to_string(const QI &x) {
    if (x.is_real())
        return wrat::to_string(x.re);
    std::string im = wrat::to_string(x.im);
    if (sgn(x.re) == 0)
        return im + "i";
    return wrat::to_string(x.re) + (sgn(x.im) > 0 ? "+" : "") + im + "i";
}

Poly::Poly(std::vector<QI> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

QI Poly::coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(c_.size()))
        return {};
    return c_[static_cast<std::size_t>(m)];
}

Poly Poly::operator+(const Poly &o) const {
    std::vector<QI> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator-() const { return scaled(QI(-1)); }

Poly Poly::operator*(const Poly &o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<QI> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const QI &s) const {
    std::vector<QI> out = c_;
    for (auto &x : out)
        x = x * s;
    return Poly(std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly &d) const {
    if (d.is_zero())
        throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
    if (is_zero())
        return Poly{};
    if (degree() < d.degree())
        return std::nullopt;
    std::vector<QI> rem = c_;
    std::vector<QI> quot(static_cast<std::size_t>(degree() - d.degree() + 1));
    const QI lead = d.c_.back();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        QI q = rem[static_cast<std::size_t>(k + d.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q.is_zero())
            continue;
        for (int i = 0; i <= d.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= q * d.c_[static_cast<std::size_t>(i)];
    }
    for (const auto &r : rem)
        if (!r.is_zero())
            return std::nullopt;
    return Poly(std::move(quot));
}

std::complex<double> Poly::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + it->to_complex();
    return acc;
}

std::complex<double> Poly::eval_derivative(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t m = c_.size(); m-- > 1;)
        acc = acc * z + static_cast<double>(m) * c_[m].to_complex();
    return acc;
}

std::vector<std::complex<double>> Poly::taylor_at(std::complex<double> z0) const {
    // Repeated synthetic division by (z - z0).
    std::vector<std::complex<double>> work;
    for (const auto &c : c_)
        work.push_back(c.to_complex());
    std::vector<std::complex<double>> out;
    while (!work.empty()) {
        std::complex<double> acc = 0.0;
        std::vector<std::complex<double>> next(work.size() - 1);
        for (std::size_t i = work.size(); i-- > 0;) {
            acc = acc * z0 + work[i];
            if (i > 0)
                next[i - 1] = acc;
        }
        out.push_back(acc);
        work = std::move(next);
    }
    return out;
}

namespace {

PolyMatrix zero_matrix(int ell) {
    return PolyMatrix(static_cast<std::size_t>(ell), PolyVector(static_cast<std::size_t>(ell)));
}

PolyVector zero_vector(int ell) { return PolyVector(static_cast<std::size_t>(ell)); }

PolyVector mul(const PolyMatrix &m, const PolyVector &v) {
    PolyVector out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero())
                out[i] += m[i][j] * v[j];
    return out;
}

PolyVector add(PolyVector a, const PolyVector &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Poly determinant(const PolyMatrix &m) {
    const std::size_t n = m.size();
    if (n == 0)
        return Poly::constant(QI(1));
    if (n == 1)
        return m[0][0];
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            PolyVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * determinant(minor);
        det = c % 2 == 0 ? det + term : det - term;
    }
    return det;
}

PolyMatrix adjugate(const PolyMatrix &m) {
    const std::size_t n = m.size();
    PolyMatrix adj(n, PolyVector(n));
    if (n == 1) {
        adj[0][0] = Poly::constant(QI(1));
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            PolyMatrix minor;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r)
                    continue;
                PolyVector row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != c)
                        row.push_back(m[i][k]);
                minor.push_back(std::move(row));
            }
            Poly d = determinant(minor);
            adj[c][r] = (r + c) % 2 == 0 ? d : -d;
        }
    return adj;
}

// Rank over Q(i) of a matrix of exact scalars.
std::size_t scalar_rank(std::vector<std::vector<QI>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero())
                continue;
            QI factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

QI eval_exact(const Poly &p, const QI &z) {
    QI acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

// Consistency of M x = b over the field of rational functions in z, decided at
// several exact sample points (rank over Q(i)(z) is the maximal rank over points).
bool consistent(const PolyMatrix &m, const PolyVector &b) {
    const std::vector<QI> points = {QI(make_rational(17, 7), make_rational(3, 11)),
                                    QI(make_rational(-5, 13), make_rational(19, 23)), QI(make_rational(29, 3)),
                                    QI(make_rational(1, 37), make_rational(-41, 5))};
    std::size_t rank_m = 0, rank_aug = 0;
    for (const auto &z : points) {
        std::vector<std::vector<QI>> a, aug;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::vector<QI> row;
            for (const auto &p : m[i])
                row.push_back(eval_exact(p, z));
            a.push_back(row);
            row.push_back(eval_exact(b[i], z));
            aug.push_back(std::move(row));
        }
        rank_m = std::max(rank_m, scalar_rank(std::move(a)));
        rank_aug = std::max(rank_aug, scalar_rank(std::move(aug)));
    }
    return rank_m == rank_aug;
}

void check_vector(const PolyVector &v, int ell, const std::string &what) {
    if (static_cast<int>(v.size()) != ell)
        throw Error(ErrorKind::DimensionMismatch, what + " has length " + std::to_string(v.size()) +
                                                      ", expected " + std::to_string(ell));
}

double abs_sum(const std::vector<std::complex<double>> &xs, double eps) {
    double acc = 0.0, power = 1.0;
    for (const auto &x : xs) {
        acc += std::abs(x) * power;
        power *= eps;
    }
    return acc;
}

} // namespace

PolyMatrix AnalyticMatrixSeries::term(int n) const {
    if (n < 0 || n > order())
        return zero_matrix(ell);
    return coeffs[static_cast<std::size_t>(n)];
}

void AnalyticMatrixSeries::validate() const {
    if (ell < 1)
        throw Error(ErrorKind::InvalidInput, "system size must be positive");
    if (sgn(radius) <= 0)
        throw Error(ErrorKind::InvalidInput, "radius must be positive");
    for (const auto &m : coeffs) {
        if (static_cast<int>(m.size()) != ell)
            throw Error(ErrorKind::DimensionMismatch, "coefficient matrix has the wrong number of rows");
        for (const auto &row : m)
            if (static_cast<int>(row.size()) != ell)
                throw Error(ErrorKind::DimensionMismatch, "coefficient matrix has the wrong number of columns");
    }
}

PolyVector VectorSeries::term(int n) const {
    if (n < 0 || n > order())
        return zero_vector(ell);
    return coeffs[static_cast<std::size_t>(n)];
}

bool VectorSeries::is_zero() const {
    for (const auto &v : coeffs)
        for (const auto &p : v)
            if (!p.is_zero())
                return false;
    return true;
}

namespace {

void validate_params(const AnalyticMatrixSeries &a, const DomainParams &params) {
    if (!(params.epsilon > 0.0) || !(params.delta > 0.0))
        throw Error(ErrorKind::InvalidDomain, "epsilon and delta must be positive");
    if (!(params.delta < a.radius.get_d()))
        throw Error(ErrorKind::InvalidDomain, "delta must be smaller than the radius");
}

} // namespace

double norm_bound(const AnalyticMatrixSeries &a, const DomainParams &params) {
    validate_params(a, params);
    double total = 0.0, dn = 1.0;
    for (const auto &m : a.coeffs) {
        double term = 0.0;
        for (const auto &row : m)
            for (const auto &p : row)
                term += abs_sum(p.taylor_at(params.z0), params.epsilon);
        total += term * dn;
        dn *= params.delta;
    }
    return total;
}

double eigenvalue_bound(const AnalyticMatrixSeries &a, const DomainParams &params) {
    validate_params(a, params);
    const PolyMatrix a0 = a.term(0);
    double best = 0.0;
    for (int k = 0; k < 64; ++k) {
        double theta = 2.0 * std::numbers::pi * k / 64.0;
        std::complex<double> z = params.z0 + params.epsilon * std::polar(1.0, theta);
        double s = 0.0;
        for (const auto &row : a0)
            for (const auto &p : row)
                s += std::abs(p.eval(z));
        best = std::max(best, s);
    }
    return 2.0 * best;
}

int choose_truncation(const AnalyticMatrixSeries &a, const DomainParams &params) {
    double bound = std::max(eigenvalue_bound(a, params), norm_bound(a, params));
    return 1 + static_cast<int>(std::floor(bound));
}

VectorSeries recursion_solve(const AnalyticMatrixSeries &a, const VectorSeries &f, const Seeds &seeds, int order) {
    a.validate();
    if (f.ell != a.ell)
        throw Error(ErrorKind::DimensionMismatch, "forcing and matrix sizes differ");
    if (order < 0)
        throw Error(ErrorKind::InvalidInput, "order must be non-negative");
    for (const auto &[n, seed] : seeds) {
        if (n < 0)
            throw Error(ErrorKind::InvalidInput, "seed index must be non-negative");
        check_vector(seed, a.ell, "seed " + std::to_string(n));
    }

    const auto ell = static_cast<std::size_t>(a.ell);
    const PolyMatrix a0 = a.term(0);
    VectorSeries phi;
    phi.ell = a.ell;
    for (int n = 0; n <= order; ++n) {
        PolyVector rhs = f.term(n);
        check_vector(rhs, a.ell, "forcing term " + std::to_string(n));
        for (int m = 0; m < n; ++m)
            if (n - m <= a.order())
                rhs = add(rhs, mul(a.term(n - m), phi.coeffs[static_cast<std::size_t>(m)]));

        PolyMatrix lhs = a0;
        for (std::size_t i = 0; i < ell; ++i) {
            for (auto &p : lhs[i])
                p = -p;
            lhs[i][i] += Poly::constant(QI(n));
        }

        auto seed = seeds.find(n);
        Poly det = determinant(lhs);
        const std::string at = "n = " + std::to_string(n);
        if (det.is_zero()) {
            if (seed == seeds.end()) {
                if (!consistent(lhs, rhs))
                    throw Error(ErrorKind::Resonance, "resonance at " + at + ": nI - A_0 is singular and the "
                                                      "right-hand side is not in its range");
                throw Error(ErrorKind::MissingSeed, "a seed is required at " + at + " (nI - A_0 is singular)");
            }
            if (mul(lhs, seed->second) != rhs)
                throw Error(ErrorKind::SeedInconsistent, "seed at " + at + " violates the recursion");
            phi.coeffs.push_back(seed->second);
            continue;
        }

        PolyVector num = mul(adjugate(lhs), rhs);
        PolyVector value(ell);
        for (std::size_t i = 0; i < ell; ++i) {
            auto q = num[i].divide_exact(det);
            if (!q)
                throw Error(ErrorKind::NonPolynomialCoefficient,
                            "coefficient at " + at + " is not polynomial in z (det(nI - A_0) has zeros)");
            value[i] = std::move(*q);
        }
        if (seed != seeds.end() && seed->second != value)
            throw Error(ErrorKind::SeedInconsistent, "seed at " + at + " differs from the forced value");
        phi.coeffs.push_back(std::move(value));
    }
    return phi;
}

int residual_nonzero_terms(const AnalyticMatrixSeries &a, const VectorSeries &f, const VectorSeries &phi,
                           int order) {
    int worst = 0;
    for (int n = 0; n <= order; ++n) {
        PolyVector r = phi.term(n);
        for (auto &p : r)
            p = p.scaled(QI(n));
        for (int m = 0; m <= n; ++m) {
            PolyVector t = mul(a.term(n - m), phi.term(m));
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= t[i];
        }
        PolyVector fn = f.term(n);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] -= fn[i];
        int nonzero = static_cast<int>(std::count_if(r.begin(), r.end(), [](const Poly &p) { return !p.is_zero(); }));
        worst = std::max(worst, nonzero);
    }
    return worst;
}

double h_delta_norm(const std::vector<std::vector<std::complex<double>>> &u, double delta) {
    double total = 0.0, dn = 1.0;
    for (const auto &v : u) {
        double s = 0.0;
        for (const auto &x : v)
            s += std::abs(x);
        total += s * dn;
        dn *= delta;
    }
    return total;
}

ContractionResult contraction_solve(const AnalyticMatrixSeries &a, const VectorSeries &f, const Seeds &seeds,
                                    const DomainParams &params, int iterations, int order,
                                    std::optional<std::complex<double>> z) {
    a.validate();
    if (iterations < 0)
        throw Error(ErrorKind::InvalidInput, "iteration count must be non-negative");
    const std::complex<double> at = z.value_or(params.z0);
    if (std::abs(at - params.z0) > params.epsilon)
        throw Error(ErrorKind::InvalidDomain, "z lies outside the disk |z - z0| <= epsilon");

    ContractionResult res;
    res.norm_c = norm_bound(a, params);
    res.truncation = choose_truncation(a, params);
    const int N = res.truncation;
    res.ratio = res.norm_c / N;
    if (res.ratio >= 1.0)
        throw Error(ErrorKind::ContractionFails, "C/N >= 1");
    order = std::max(order, N - 1);

    const auto ell = static_cast<std::size_t>(a.ell);
    using CVec = std::vector<std::complex<double>>;
    auto eval_vec = [&](const PolyVector &v) {
        CVec out(ell);
        for (std::size_t i = 0; i < ell; ++i)
            out[i] = v[i].eval(at);
        return out;
    };
    std::vector<std::vector<CVec>> a_at;
    for (int n = 0; n <= a.order(); ++n) {
        std::vector<CVec> m;
        for (const auto &row : a.term(n))
            m.push_back(eval_vec(row));
        a_at.push_back(std::move(m));
    }
    auto apply = [&](int k, const CVec &v, CVec &acc) {
        if (k > a.order())
            return;
        for (std::size_t i = 0; i < ell; ++i)
            for (std::size_t j = 0; j < ell; ++j)
                acc[i] += a_at[static_cast<std::size_t>(k)][i][j] * v[j];
    };

    const VectorSeries head_exact = recursion_solve(a, f, seeds, N - 1);
    std::vector<CVec> head;
    for (int n = 0; n < N; ++n)
        head.push_back(eval_vec(head_exact.term(n)));

    // Forcing seen by the tail: f_n + sum_{m<N} A_{n-m} phi_m for n >= N.
    std::vector<CVec> forcing(static_cast<std::size_t>(order + 1), CVec(ell));
    for (int n = N; n <= order; ++n) {
        CVec acc = eval_vec(f.term(n));
        for (int m = 0; m < N; ++m)
            apply(n - m, head[static_cast<std::size_t>(m)], acc);
        forcing[static_cast<std::size_t>(n)] = acc;
    }
    auto T = [&](const std::vector<CVec> &u) {
        std::vector<CVec> out(static_cast<std::size_t>(order + 1), CVec(ell));
        for (int n = N; n <= order; ++n) {
            CVec acc = forcing[static_cast<std::size_t>(n)];
            for (int m = N; m <= n; ++m)
                apply(n - m, u[static_cast<std::size_t>(m)], acc);
            for (auto &x : acc)
                x /= static_cast<double>(n);
            out[static_cast<std::size_t>(n)] = std::move(acc);
        }
        return out;
    };

    std::vector<CVec> u(static_cast<std::size_t>(order + 1), CVec(ell));
    const std::vector<CVec> f_n = T(u);
    res.norm_forcing = h_delta_norm(f_n, params.delta);
    for (int k = 0; k < iterations; ++k) {
        std::vector<CVec> next = T(u);
        std::vector<CVec> diff = next;
        for (std::size_t n = 0; n < diff.size(); ++n)
            for (std::size_t i = 0; i < ell; ++i)
                diff[n][i] -= u[n][i];
        res.step_norms.push_back(h_delta_norm(diff, params.delta));
        u = std::move(next);
    }
    res.rate_bound = std::pow(res.ratio, iterations) / (1.0 - res.ratio) * res.norm_forcing;
    for (int n = 0; n < N; ++n)
        u[static_cast<std::size_t>(n)] = head[static_cast<std::size_t>(n)];
    res.iterate = std::move(u);
    return res;
}

bool exponents_noncongruent(const std::vector<QI> &exponents) {
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t j = i + 1; j < exponents.size(); ++j) {
            QI d = exponents[i] - exponents[j];
            if (d.is_real() && is_integer(d.re))
                return false;
        }
    return true;
}

LogSeriesSolution log_system_solve(const AnalyticMatrixSeries &a, const std::vector<QI> &exponents, int max_log_power,
                                   const std::map<LayerKey, Seeds> &seeds, int order,
                                   const std::map<LayerKey, VectorSeries> &forcing) {
    a.validate();
    if (exponents.empty())
        throw Error(ErrorKind::InvalidInput, "at least one exponent is required");
    if (!exponents_noncongruent(exponents))
        throw Error(ErrorKind::InvalidInput, "exponents must be pairwise non-congruent modulo Z");
    if (max_log_power < 0)
        throw Error(ErrorKind::InvalidInput, "K must be non-negative");
    const int J = static_cast<int>(exponents.size());
    for (const auto &[key, s] : seeds)
        if (key.j < 0 || key.j >= J || key.k < 0 || key.k > max_log_power)
            throw Error(ErrorKind::InvalidInput, "seed layer out of range");
    for (const auto &[key, s] : forcing)
        if (key.j < 0 || key.j >= J || key.k < 0 || key.k > max_log_power)
            throw Error(ErrorKind::InvalidInput, "forcing layer out of range");

    LogSeriesSolution sol;
    sol.ell = a.ell;
    sol.exponents = exponents;
    sol.max_log_power = max_log_power;
    sol.radius = a.radius;
    const auto ell = static_cast<std::size_t>(a.ell);

    for (int j = 0; j < J; ++j) {
        AnalyticMatrixSeries shifted = a;
        if (shifted.coeffs.empty())
            shifted.coeffs.push_back(zero_matrix(a.ell));
        for (std::size_t i = 0; i < ell; ++i)
            shifted.coeffs[0][i][i] -= Poly::constant(exponents[static_cast<std::size_t>(j)]);

        std::vector<VectorSeries> layers(static_cast<std::size_t>(max_log_power + 1));
        for (int k = max_log_power; k >= 0; --k) {
            VectorSeries rhs;
            rhs.ell = a.ell;
            if (auto it = forcing.find({j, k}); it != forcing.end()) {
                if (it->second.ell != a.ell)
                    throw Error(ErrorKind::DimensionMismatch, "forcing layer has the wrong size");
                rhs = it->second;
            }
            if (k < max_log_power) {
                const VectorSeries &above = layers[static_cast<std::size_t>(k + 1)];
                int len = std::max(rhs.order(), above.order()) + 1;
                VectorSeries sum;
                sum.ell = a.ell;
                for (int n = 0; n < len; ++n) {
                    PolyVector t = rhs.term(n);
                    PolyVector up = above.term(n);
                    for (std::size_t i = 0; i < ell; ++i)
                        t[i] -= up[i].scaled(QI(k + 1));
                    sum.coeffs.push_back(std::move(t));
                }
                rhs = std::move(sum);
            }
            auto sit = seeds.find({j, k});
            const Seeds empty;
            try {
                layers[static_cast<std::size_t>(k)] =
                    recursion_solve(shifted, rhs, sit == seeds.end() ? empty : sit->second, order);
            } catch (const Error &e) {
                throw Error(e.kind(), "layer (j = " + std::to_string(j) + ", k = " + std::to_string(k) + "): " +
                                          e.what());
            }
        }
        sol.layers.push_back(std::move(layers));
    }
    return sol;
}

int log_residual_nonzero_terms(const AnalyticMatrixSeries &a, const LogSeriesSolution &sol, int order,
                               const std::map<LayerKey, VectorSeries> &forcing) {
    int worst = 0;
    const auto ell = static_cast<std::size_t>(a.ell);
    for (std::size_t j = 0; j < sol.layers.size(); ++j) {
        AnalyticMatrixSeries shifted = a;
        if (shifted.coeffs.empty())
            shifted.coeffs.push_back(zero_matrix(a.ell));
        for (std::size_t i = 0; i < ell; ++i)
            shifted.coeffs[0][i][i] -= Poly::constant(sol.exponents[j]);
        const auto &layers = sol.layers[j];
        for (std::size_t k = 0; k < layers.size(); ++k) {
            VectorSeries rhs;
            rhs.ell = a.ell;
            auto it = forcing.find({static_cast<int>(j), static_cast<int>(k)});
            for (int n = 0; n <= order; ++n) {
                PolyVector t = it == forcing.end() ? zero_vector(a.ell) : it->second.term(n);
                if (k + 1 < layers.size()) {
                    PolyVector up = layers[k + 1].term(n);
                    for (std::size_t i = 0; i < ell; ++i)
                        t[i] -= up[i].scaled(QI(static_cast<long>(k + 1)));
                }
                rhs.coeffs.push_back(std::move(t));
            }
            worst = std::max(worst, residual_nonzero_terms(shifted, rhs, layers[k], order));
        }
    }
    return worst;
}

namespace {

std::vector<std::complex<double>> evaluate_impl(const LogSeriesSolution &sol, std::complex<double> z,
                                                std::complex<double> q, std::complex<double> log_branch,
                                                bool derivative) {
    if (std::abs(q) == 0.0 || std::abs(q) >= sol.radius.get_d())
        throw Error(ErrorKind::OutOfRadius, "need 0 < |q| < radius");
    if (std::abs(std::exp(log_branch) - q) > 1e-12)
        throw Error(ErrorKind::BranchMismatch, "exp(log_branch) differs from q");
    const auto ell = static_cast<std::size_t>(sol.ell);
    std::vector<std::complex<double>> out(ell);
    for (std::size_t j = 0; j < sol.layers.size(); ++j) {
        const std::complex<double> qh = std::exp(sol.exponents[j].to_complex() * log_branch);
        for (std::size_t k = 0; k < sol.layers[j].size(); ++k) {
            const std::complex<double> logk = std::pow(log_branch, static_cast<double>(k));
            const VectorSeries &layer = sol.layers[j][k];
            std::complex<double> qn = 1.0;
            for (int n = 0; n <= layer.order(); ++n) {
                const auto &c = layer.coeffs[static_cast<std::size_t>(n)];
                for (std::size_t i = 0; i < ell; ++i) {
                    std::complex<double> val = derivative ? c[i].eval_derivative(z) : c[i].eval(z);
                    out[i] += val * qh * qn * (k == 0 ? 1.0 : logk);
                }
                qn *= q;
            }
        }
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> evaluate(const LogSeriesSolution &sol, std::complex<double> z,
                                           std::complex<double> q, std::complex<double> log_branch) {
    return evaluate_impl(sol, z, q, log_branch, false);
}

std::vector<std::complex<double>> evaluate_dz(const LogSeriesSolution &sol, std::complex<double> z,
                                              std::complex<double> q, std::complex<double> log_branch) {
    return evaluate_impl(sol, z, q, log_branch, true);
}

} // namespace wrat::frob
