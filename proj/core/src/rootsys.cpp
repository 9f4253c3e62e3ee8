#include "wrat/rootsys.hpp"

#include "wrat/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace wrat {

SimpleType SimpleType::parse(std::string_view name) {
    if (name.size() < 2)
        throw Error(ErrorKind::IllegalType, "bad type name '" + std::string(name) + "'");
    SimpleType t;
    switch (name.front()) {
    case 'A': case 'a': t.family = Family::A; break;
    case 'B': case 'b': t.family = Family::B; break;
    case 'C': case 'c': t.family = Family::C; break;
    case 'D': case 'd': t.family = Family::D; break;
    case 'E': case 'e': t.family = Family::E; break;
    case 'F': case 'f': t.family = Family::F; break;
    case 'G': case 'g': t.family = Family::G; break;
    default: throw Error(ErrorKind::IllegalType, "bad type name '" + std::string(name) + "'");
    }
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw Error(ErrorKind::IllegalType, "bad type name '" + std::string(name) + "'");
    if (!t.is_legal())
        throw Error(ErrorKind::IllegalType, "no simple Lie algebra of type " + std::string(name));
    return t;
}

std::string SimpleType::name() const {
    static constexpr char letters[] = "ABCDEFG";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

bool SimpleType::is_exceptional() const {
    return family == Family::E || family == Family::F || family == Family::G;
}

bool SimpleType::is_legal() const {
    switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
    }
    return false;
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool CartanElement::is_zero() const {
    return std::all_of(pairings.begin(), pairings.end(), [](const Rational &x) { return sgn(x) == 0; });
}

CartanElement CartanElement::operator+(const CartanElement &rhs) const {
    if (rank() != rhs.rank())
        throw Error(ErrorKind::DimensionMismatch, "CartanElement rank mismatch");
    CartanElement out = *this;
    for (std::size_t i = 0; i < pairings.size(); ++i)
        out.pairings[i] += rhs.pairings[i];
    return out;
}

CartanElement CartanElement::operator-(const CartanElement &rhs) const { return *this + rhs.scaled(-1); }

CartanElement CartanElement::scaled(const Rational &s) const {
    CartanElement out = *this;
    for (auto &x : out.pairings)
        x *= s;
    return out;
}

namespace {

struct Diagram {
    std::vector<Rational> lengths; // <alpha_i, alpha_i>
    std::vector<std::pair<int, int>> edges;
};

Diagram diagram(SimpleType t) {
    const int n = t.rank;
    Diagram d;
    d.lengths.assign(static_cast<std::size_t>(n), Rational(2));
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i)
            d.edges.emplace_back(i, i + 1);
    };
    switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B:
        chain(n);
        d.lengths[static_cast<std::size_t>(n - 1)] = 1;
        break;
    case Family::C:
        chain(n);
        for (int i = 0; i + 1 < n; ++i)
            d.lengths[static_cast<std::size_t>(i)] = 1;
        break;
    case Family::D:
        chain(n - 1);
        d.edges.emplace_back(n - 3, n - 1);
        break;
    case Family::E:
        d.edges.emplace_back(0, 2);
        d.edges.emplace_back(1, 3);
        for (int i = 2; i + 1 < n; ++i)
            d.edges.emplace_back(i, i + 1);
        break;
    case Family::F:
        chain(4);
        d.lengths[2] = d.lengths[3] = 1;
        break;
    case Family::G:
        chain(2);
        d.lengths[1] = make_rational(2, 3);
        break;
    }
    return d;
}

} // namespace

RootSystem RootSystem::build(SimpleType type) {
    if (!type.is_legal())
        throw Error(ErrorKind::IllegalType, "no simple Lie algebra of type " + type.name());

    RootSystem rs;
    rs.type_ = type;
    const int n = type.rank;
    const auto un = static_cast<std::size_t>(n);

    Diagram d = diagram(type);
    rs.form_ = Matrix(un, un);
    for (std::size_t i = 0; i < un; ++i)
        rs.form_(i, i) = d.lengths[i];
    for (auto [a, b] : d.edges) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        Rational v = -std::max(d.lengths[ua], d.lengths[ub]) / 2;
        rs.form_(ua, ub) = v;
        rs.form_(ub, ua) = v;
    }

    rs.cartan_.assign(un, std::vector<int>(un, 0));
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j)
            rs.cartan_[i][j] = static_cast<int>(to_long(2 * rs.form_(i, j) / rs.form_(j, j)));

    // Layered closure: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
    // with p the length of the alpha_i-string below beta.
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> c(un, 0);
        c[static_cast<std::size_t>(i)] = 1;
        known.insert(c);
        layer.push_back(c);
    }
    std::vector<std::vector<int>> all = layer;
    while (!layer.empty()) {
        std::set<std::vector<int>> next;
        for (const auto &beta : layer) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                std::vector<int> down = beta;
                for (;;) {
                    down[static_cast<std::size_t>(i)] -= 1;
                    if (!known.count(down))
                        break;
                    ++p;
                }
                int q = p - rs.coroot_pairing(beta, i);
                if (q > 0) {
                    std::vector<int> up = beta;
                    up[static_cast<std::size_t>(i)] += 1;
                    next.insert(up);
                }
            }
        }
        layer.assign(next.begin(), next.end());
        for (const auto &r : layer) {
            known.insert(r);
            all.push_back(r);
        }
    }

    std::sort(all.begin(), all.end(), [](const std::vector<int> &a, const std::vector<int> &b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb)
            return ha < hb;
        return a > b;
    });

    Rational long_length = *std::max_element(d.lengths.begin(), d.lengths.end());
    Rational short_length = *std::min_element(d.lengths.begin(), d.lengths.end());
    for (auto &c : all) {
        Root r;
        r.length = rs.inner(c, c) == long_length ? RootLength::Long : RootLength::Short;
        r.coeffs = std::move(c);
        rs.lookup_.emplace(r.coeffs, static_cast<int>(rs.positive_.size()));
        rs.positive_.push_back(std::move(r));
    }

    rs.coxeter_ = 1;
    for (int m : rs.marks())
        rs.coxeter_ += m;
    rs.dual_coxeter_ = 1;
    for (int m : rs.comarks())
        rs.dual_coxeter_ += m;
    rs.lacety_ = static_cast<int>(to_long(long_length / short_length));
    return rs;
}

std::optional<int> RootSystem::find(std::span<const int> coeffs) const {
    auto it = lookup_.find(std::vector<int>(coeffs.begin(), coeffs.end()));
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

int RootSystem::index_of(std::span<const int> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(rank()))
        throw Error(ErrorKind::UnknownRoot, "root of wrong length for " + type_.name());
    if (auto i = find(coeffs))
        return *i;
    throw Error(ErrorKind::UnknownRoot, root_label(type_, coeffs) + " is not a positive root of " + type_.name());
}

Rational RootSystem::inner(std::span<const int> a, std::span<const int> b) const {
    Rational out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                out += form_(i, j) * a[i] * b[j];
    }
    return out;
}

int RootSystem::coroot_pairing(std::span<const int> beta, int i) const {
    int out = 0;
    for (std::size_t j = 0; j < beta.size(); ++j)
        out += beta[j] * cartan_[j][static_cast<std::size_t>(i)];
    return out;
}

std::vector<int> RootSystem::marks() const { return highest_root().coeffs; }

std::vector<int> RootSystem::comarks() const {
    std::vector<int> out = marks();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<int>(to_long(out[i] * form_(i, i) / 2));
    return out;
}

Rational pairing(std::span<const int> root_coeffs, const CartanElement &v) {
    if (root_coeffs.size() != v.pairings.size())
        throw Error(ErrorKind::DimensionMismatch, "root and Cartan element have different ranks");
    Rational out;
    for (std::size_t i = 0; i < root_coeffs.size(); ++i)
        if (root_coeffs[i] != 0)
            out += root_coeffs[i] * v.pairings[i];
    return out;
}

bool is_admissible_level(const RootSystem &rs, long p, long q) {
    if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
        return false;
    if (std::gcd(q, static_cast<long>(rs.lacety())) == 1)
        return p >= rs.dual_coxeter_number();
    return p >= rs.coxeter_number();
}

std::string root_label(SimpleType type, std::span<const int> coeffs) {
    std::string out;
    auto digit = [](int c) { return std::to_string(c); };
    if (type.family == Family::E && coeffs.size() >= 2) {
        out += digit(coeffs[1]);
        out += ';';
        out += digit(coeffs[0]);
        for (std::size_t i = 2; i < coeffs.size(); ++i)
            out += digit(coeffs[i]);
        return out;
    }
    for (int c : coeffs)
        out += digit(c);
    return out;
}

} // namespace wrat
