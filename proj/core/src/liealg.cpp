#include "wrat/liealg.hpp"

#include "wrat/errors.hpp"

#include <functional>

namespace wrat {

LieElement LieElement::basis(int index, const Rational &coeff) {
    LieElement x;
    x.add(index, coeff);
    return x;
}

Rational LieElement::coeff(int index) const {
    auto it = coords_.find(index);
    return it == coords_.end() ? Rational(0) : it->second;
}

void LieElement::add(int index, const Rational &value) {
    if (sgn(value) == 0)
        return;
    auto [it, inserted] = coords_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (sgn(it->second) == 0)
            coords_.erase(it);
    }
}

LieElement &LieElement::operator+=(const LieElement &rhs) {
    for (const auto &[i, c] : rhs.coords_)
        add(i, c);
    return *this;
}

LieElement &LieElement::operator-=(const LieElement &rhs) {
    for (const auto &[i, c] : rhs.coords_)
        add(i, -c);
    return *this;
}

LieElement LieElement::operator+(const LieElement &rhs) const {
    LieElement out = *this;
    out += rhs;
    return out;
}

LieElement LieElement::operator-(const LieElement &rhs) const {
    LieElement out = *this;
    out -= rhs;
    return out;
}

LieElement LieElement::scaled(const Rational &s) const {
    LieElement out;
    if (sgn(s) == 0)
        return out;
    for (const auto &[i, c] : coords_)
        out.coords_.emplace(i, c * s);
    return out;
}

namespace {

// Signed roots are encoded as 0..P-1 (positive) and P..2P-1 (negative).
class ConstantSolver {
  public:
    explicit ConstantSolver(const RootSystem &rs) : rs_(rs), p_(rs.num_positive()) {
        memo_.assign(static_cast<std::size_t>(p_) * static_cast<std::size_t>(p_), std::nullopt);
        extraspecial_.assign(static_cast<std::size_t>(p_), {-1, -1});
        for (int xi = 0; xi < p_; ++xi) {
            for (int a = 0; a < p_; ++a) {
                auto rest = difference(xi, a);
                if (rest && *rest >= 0) {
                    extraspecial_[static_cast<std::size_t>(xi)] = {a, *rest};
                    break;
                }
            }
        }
    }

    // N(x, y) for signed roots, 0 when x + y is not a root.
    Rational signed_constant(int x, bool xpos, int y, bool ypos) {
        if (xpos && ypos)
            return positive(x, y);
        if (!xpos && !ypos)
            return -positive(x, y);
        if (!xpos)
            return -signed_constant(y, ypos, x, xpos);
        // x positive, y negative: s = x - y
        auto s = difference(x, y);
        if (!s)
            return 0;
        const Rational xx = length(x);
        const Rational yy = length(y);
        if (*s >= 0) {
            const Rational ss = length(*s);
            return -ss / xx * positive(y, *s);
        }
        int g = -*s - 1;
        return length(g) / yy * positive(g, x);
    }

  private:
    // Index of the positive root (a - b) if a - b is a positive root, -(index+1)
    // if b - a is, nullopt otherwise.
    std::optional<int> difference(int a, int b) const {
        const auto &ca = rs_.root(a).coeffs;
        const auto &cb = rs_.root(b).coeffs;
        std::vector<int> d(ca.size());
        bool pos = true, neg = true;
        for (std::size_t i = 0; i < ca.size(); ++i) {
            d[i] = ca[i] - cb[i];
            pos = pos && d[i] >= 0;
            neg = neg && d[i] <= 0;
        }
        if (pos == neg)
            return std::nullopt;
        if (neg)
            for (auto &c : d)
                c = -c;
        auto idx = rs_.find(d);
        if (!idx)
            return std::nullopt;
        return pos ? *idx : -*idx - 1;
    }

    std::optional<int> sum(int a, int b) const {
        const auto &ca = rs_.root(a).coeffs;
        const auto &cb = rs_.root(b).coeffs;
        std::vector<int> s(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i)
            s[i] = ca[i] + cb[i];
        return rs_.find(s);
    }

    Rational length(int a) const { return rs_.inner(rs_.root(a).coeffs, rs_.root(a).coeffs); }

    int string_below(int alpha, int beta) const {
        int p = 0;
        std::vector<int> c = rs_.root(beta).coeffs;
        const auto &a = rs_.root(alpha).coeffs;
        for (;;) {
            bool ok = true;
            for (std::size_t i = 0; i < c.size(); ++i) {
                c[i] -= a[i];
                ok = ok && c[i] >= 0;
            }
            if (!ok || !rs_.find(c))
                return p;
            ++p;
        }
    }

    Rational positive(int a, int b) {
        auto &slot = memo_[static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(b)];
        if (slot)
            return *slot;
        Rational value = compute_positive(a, b);
        slot = value;
        return value;
    }

    Rational compute_positive(int a, int b) {
        auto xi = sum(a, b);
        if (!xi)
            return 0;
        if (a > b)
            return -positive(b, a);
        auto [g, d] = extraspecial_[static_cast<std::size_t>(*xi)];
        if (g == a)
            return string_below(a, b) + 1;

        const Rational xixi = length(*xi);
        const Rational ngd = positive(g, d);
        Rational acc;
        if (auto bg = difference(b, g)) {
            Rational sq = length(*bg >= 0 ? *bg : -*bg - 1);
            acc += signed_constant(b, true, g, false) * signed_constant(a, true, d, false) / sq;
        }
        if (auto ag = difference(a, g)) {
            Rational sq = length(*ag >= 0 ? *ag : -*ag - 1);
            acc += signed_constant(g, false, a, true) * signed_constant(b, true, d, false) / sq;
        }
        Rational n = xixi / ngd * acc;
        if (!is_integer(n))
            throw Error(ErrorKind::InvalidInput, "non-integral structure constant");
        return n;
    }

    const RootSystem &rs_;
    int p_;
    std::vector<std::optional<Rational>> memo_;
    std::vector<std::pair<int, int>> extraspecial_;
};

} // namespace

ChevalleyTable ChevalleyTable::build(const RootSystem &rs) {
    ChevalleyTable t;
    t.rs_ = rs;
    const int P = rs.num_positive();
    const int r = rs.rank();
    t.dim_ = 2 * P + r;

    t.coroots_.resize(static_cast<std::size_t>(P));
    for (int a = 0; a < P; ++a) {
        const auto &c = rs.root(a).coeffs;
        Rational aa = rs.inner(c, c);
        for (int i = 0; i < r; ++i) {
            auto ui = static_cast<std::size_t>(i);
            t.coroots_[static_cast<std::size_t>(a)].push_back(to_long(c[ui] * rs.form()(ui, ui) / aa));
        }
    }

    ConstantSolver solver(rs);
    t.constants_.assign(static_cast<std::size_t>(2 * P), std::vector<long>(static_cast<std::size_t>(2 * P), 0));
    for (int x = 0; x < 2 * P; ++x)
        for (int y = 0; y < 2 * P; ++y) {
            bool xpos = x < P, ypos = y < P;
            int xi = xpos ? x : x - P, yi = ypos ? y : y - P;
            t.constants_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                to_long(solver.signed_constant(xi, xpos, yi, ypos));
        }

    auto signed_sum_index = [&](int x, int y) -> std::optional<int> {
        const auto &cx = rs.root(x < P ? x : x - P).coeffs;
        const auto &cy = rs.root(y < P ? y : y - P).coeffs;
        std::vector<int> s(cx.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] = (x < P ? cx[i] : -cx[i]) + (y < P ? cy[i] : -cy[i]);
        bool negative = false;
        for (int c : s)
            negative = negative || c < 0;
        if (negative)
            for (auto &c : s)
                c = -c;
        auto idx = rs.find(s);
        if (!idx)
            return std::nullopt;
        return negative ? P + *idx : *idx;
    };

    t.table_.assign(static_cast<std::size_t>(t.dim_) * static_cast<std::size_t>(t.dim_), {});
    auto cell = [&](int a, int b) -> std::vector<Term> & {
        return t.table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(t.dim_) + static_cast<std::size_t>(b)];
    };

    for (int x = 0; x < 2 * P; ++x) {
        for (int y = 0; y < 2 * P; ++y) {
            if (y == x + P || x == y + P) {
                int root = x < P ? x : y;
                long sign = x < P ? 1 : -1;
                for (int i = 0; i < r; ++i) {
                    long c = t.coroots_[static_cast<std::size_t>(root)][static_cast<std::size_t>(i)];
                    if (c != 0)
                        cell(x, y).push_back({t.h_index(i), sign * c});
                }
                continue;
            }
            long n = t.constants_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (n != 0)
                cell(x, y).push_back({*signed_sum_index(x, y), n});
        }
    }

    for (int i = 0; i < r; ++i) {
        for (int a = 0; a < P; ++a) {
            long w = rs.coroot_pairing(rs.root(a).coeffs, i);
            if (w == 0)
                continue;
            cell(t.h_index(i), a).push_back({a, w});
            cell(a, t.h_index(i)).push_back({a, -w});
            cell(t.h_index(i), P + a).push_back({P + a, -w});
            cell(P + a, t.h_index(i)).push_back({P + a, w});
        }
    }
    return t;
}

BasisElement ChevalleyTable::element(int index) const {
    const int P = num_positive();
    if (index < 0 || index >= dim_)
        throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
    if (index < P)
        return {BasisKind::E, index};
    if (index < 2 * P)
        return {BasisKind::F, index - P};
    return {BasisKind::H, index - 2 * P};
}

int ChevalleyTable::index(BasisElement b) const {
    switch (b.kind) {
    case BasisKind::E: return e_index(b.index);
    case BasisKind::F: return f_index(b.index);
    case BasisKind::H: return h_index(b.index);
    }
    return -1;
}

std::string ChevalleyTable::label(int index) const {
    BasisElement b = element(index);
    if (b.kind == BasisKind::H)
        return "h" + std::to_string(b.index + 1);
    std::string body = root_label(rs_.type(), rs_.root(b.index).coeffs);
    return std::string(b.kind == BasisKind::E ? "e(" : "f(") + body + ")";
}

long ChevalleyTable::structure_constant(int a, int sign_a, int b, int sign_b) const {
    const int P = num_positive();
    int x = sign_a > 0 ? a : a + P;
    int y = sign_b > 0 ? b : b + P;
    return constants_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

LieElement ChevalleyTable::cartan_to_element(const CartanElement &v) const {
    const int r = rank();
    if (v.rank() != r)
        throw Error(ErrorKind::DimensionMismatch, "Cartan element rank mismatch");
    // alpha_j(sum_i x_i h_i) = sum_i a_ji x_i
    Matrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i)
            a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = rs_.cartan(j, i);
    auto x = solve(a, v.pairings);
    LieElement out;
    for (int i = 0; i < r; ++i)
        out.add(h_index(i), (*x)[static_cast<std::size_t>(i)]);
    return out;
}

CartanElement ChevalleyTable::element_to_cartan(const LieElement &x) const {
    const int r = rank();
    CartanElement out = CartanElement::zero(r);
    for (int i = 0; i < r; ++i) {
        Rational xi = x.coeff(h_index(i));
        if (sgn(xi) == 0)
            continue;
        for (int j = 0; j < r; ++j)
            out.pairings[static_cast<std::size_t>(j)] += rs_.cartan(j, i) * xi;
    }
    return out;
}

LieElement ChevalleyTable::sum_of_negative_root_vectors(const std::vector<std::vector<int>> &betas) const {
    LieElement f;
    for (const auto &b : betas)
        f.add(f_index(rs_.index_of(b)), 1);
    return f;
}

Rational ChevalleyTable::cartan_form(const LieElement &x, const LieElement &y) const {
    const int r = rank();
    const Matrix &form = rs_.form();
    Rational out;
    for (int i = 0; i < r; ++i) {
        Rational xi = x.coeff(h_index(i));
        if (sgn(xi) == 0)
            continue;
        for (int j = 0; j < r; ++j) {
            Rational yj = y.coeff(h_index(j));
            if (sgn(yj) == 0)
                continue;
            auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            out += xi * yj * 4 * form(ui, uj) / (form(ui, ui) * form(uj, uj));
        }
    }
    return out;
}

LieElement bracket(const ChevalleyTable &table, const LieElement &x, const LieElement &y) {
    LieElement out;
    for (const auto &[a, ca] : x.coords())
        for (const auto &[b, cb] : y.coords())
            for (const Term &t : table.bracket_basis(a, b))
                out.add(t.index, ca * cb * t.coeff);
    return out;
}

Matrix ad_matrix(const ChevalleyTable &table, const LieElement &x) {
    const auto n = static_cast<std::size_t>(table.dimension());
    Matrix m(n, n);
    for (const auto &[a, ca] : x.coords())
        for (std::size_t b = 0; b < n; ++b)
            for (const Term &t : table.bracket_basis(a, static_cast<int>(b)))
                m(static_cast<std::size_t>(t.index), b) += ca * t.coeff;
    return m;
}

std::vector<LieElement> centralizer(const ChevalleyTable &table, const LieElement &x) {
    std::vector<LieElement> out;
    for (const auto &v : nullspace(ad_matrix(table, x)))
        out.push_back(from_coordinates(v));
    return out;
}

LieElement from_coordinates(std::span<const Rational> coords) {
    LieElement out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        out.add(static_cast<int>(i), coords[i]);
    return out;
}

Vector to_coordinates(const ChevalleyTable &table, const LieElement &x) {
    Vector v(static_cast<std::size_t>(table.dimension()));
    for (const auto &[i, c] : x.coords())
        v[static_cast<std::size_t>(i)] = c;
    return v;
}

} // namespace wrat
