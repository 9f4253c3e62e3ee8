#include "../oracles/oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace wrat;
using wrat::test::q;

namespace {

std::vector<SimpleType> all_types_up_to(int max_rank) {
    std::vector<SimpleType> out;
    for (auto fam : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
        for (int r = 1; r <= max_rank; ++r) {
            SimpleType t{fam, r};
            if (t.is_legal())
                out.push_back(t);
        }
    return out;
}

} // namespace

TEST_CASE("type names parse and reject illegal types") {
    CHECK(SimpleType::parse("E8") == SimpleType{Family::E, 8});
    CHECK(SimpleType::parse("G2").name() == "G2");
    CHECK(SimpleType::parse("F4").is_exceptional());
    CHECK_FALSE(SimpleType::parse("C5").is_exceptional());
    for (const char *bad : {"E9", "E5", "D3", "B1", "G3", "F2", "X4", "A0", "", "A"})
        CHECK(test::error_kind([&] { SimpleType::parse(bad); }) == ErrorKind::IllegalType);
    CHECK(test::error_kind([] { RootSystem::build(SimpleType{Family::D, 2}); }) == ErrorKind::IllegalType);
}

TEST_CASE("positive roots of the exceptional types") {
    CHECK(test::algebra("G2").rs.num_positive() == 6);
    CHECK(test::algebra("F4").rs.num_positive() == 24);
    CHECK(test::algebra("E6").rs.num_positive() == 36);
    CHECK(test::algebra("E7").rs.num_positive() == 63);
    CHECK(test::algebra("E8").rs.num_positive() == 120);
    CHECK(test::algebra("A1").rs.num_positive() == 1);
}

TEST_CASE("closure enumeration matches the Weyl orbit for every type of rank <= 8") {
    for (auto t : all_types_up_to(8)) {
        CAPTURE(t.name());
        auto rs = RootSystem::build(t);
        std::set<std::vector<int>> got;
        for (const auto &r : rs.positive_roots())
            got.insert(r.coeffs);
        CHECK(got.size() == static_cast<std::size_t>(rs.num_positive()));
        CHECK(got == oracle::weyl_positive_roots(t));
        CHECK(rs.cartan_matrix() == oracle::cartan_matrix(t));
    }
}

TEST_CASE("Coxeter numbers agree with |Phi|/rank and 1 + (rho, theta)") {
    for (auto t : all_types_up_to(8)) {
        CAPTURE(t.name());
        auto rs = RootSystem::build(t);
        CHECK(rs.coxeter_number() == oracle::coxeter_number(t));
        CHECK(Rational(rs.dual_coxeter_number()) == oracle::dual_coxeter_number(t));
    }
    auto g2 = RootSystem::build(SimpleType::parse("G2"));
    CHECK(g2.coxeter_number() == 6);
    CHECK(g2.dual_coxeter_number() == 4);
    CHECK(g2.lacety() == 3);
    auto f4 = RootSystem::build(SimpleType::parse("F4"));
    CHECK(f4.coxeter_number() == 12);
    CHECK(f4.dual_coxeter_number() == 9);
    CHECK(f4.lacety() == 2);
    auto a1 = RootSystem::build(SimpleType::parse("A1"));
    CHECK(a1.coxeter_number() == 2);
    CHECK(a1.dual_coxeter_number() == 2);
    CHECK(RootSystem::build(SimpleType::parse("B3")).dual_coxeter_number() == 5);
    CHECK(RootSystem::build(SimpleType::parse("C3")).dual_coxeter_number() == 4);
    CHECK(test::algebra("E8").rs.coxeter_number() == 30);
}

TEST_CASE("invariant form is symmetric, positive definite and normalized") {
    for (auto t : all_types_up_to(8)) {
        CAPTURE(t.name());
        auto rs = RootSystem::build(t);
        const Matrix &b = rs.form();
        CHECK(b == b.transpose());
        // Sylvester: leading principal minors by elimination without pivoting.
        Matrix m = b;
        const std::size_t r = m.rows();
        for (std::size_t k = 0; k < r; ++k) {
            REQUIRE(sgn(m(k, k)) > 0);
            for (std::size_t i = k + 1; i < r; ++i) {
                Rational c = m(i, k) / m(k, k);
                for (std::size_t j = k; j < r; ++j)
                    m(i, j) -= c * m(k, j);
            }
        }
        Rational longest = 0;
        for (const auto &root : rs.positive_roots()) {
            Rational len = rs.inner(root.coeffs, root.coeffs);
            longest = std::max(longest, len);
            CHECK((root.length == RootLength::Long) == (len == 2));
        }
        CHECK(longest == 2);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                CHECK(Rational(rs.cartan(i, j)) == 2 * b(i, j) / b(j, j));
    }
}

TEST_CASE("ordering: simple roots first, heights nondecreasing, highest root last") {
    for (auto t : all_types_up_to(8)) {
        auto rs = RootSystem::build(t);
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<int> e(static_cast<std::size_t>(rs.rank()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            CHECK(rs.root(i).coeffs == e);
        }
        for (int k = 1; k < rs.num_positive(); ++k)
            CHECK(rs.root(k - 1).height() <= rs.root(k).height());
        for (int k = 0; k < rs.num_positive(); ++k)
            CHECK(rs.index_of(rs.root(k).coeffs) == k);
    }
    auto &e8 = test::algebra("E8").rs;
    CHECK(e8.highest_root().coeffs == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(e8.marks() == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    auto &g2 = test::algebra("G2").rs;
    CHECK(g2.highest_root().coeffs == std::vector<int>{2, 3});
    CHECK(g2.comarks() == std::vector<int>{2, 1});
    CHECK(g2.root(0).length == RootLength::Long);
    CHECK(g2.root(1).length == RootLength::Short);
    CHECK(g2.inner(g2.root(1).coeffs, g2.root(1).coeffs) == q(2, 3));
    std::vector<int> bogus{2, 1};
    CHECK_FALSE(g2.find(bogus).has_value());
    CHECK(test::error_kind([&] { g2.index_of(bogus); }) == ErrorKind::UnknownRoot);
}

TEST_CASE("root pairings with weighted diagrams") {
    auto &e8 = test::algebra("E8").rs;
    // A4+A3 diagram v, read as (top; row).
    auto v = test::e_diagram(1, {1, 1, q(-5, 2), 1, 1, q(-3, 2), 1});
    std::vector<int> alpha7(8, 0);
    alpha7[6] = 1;
    CHECK(pairing(alpha7, v) == q(-3, 2));
    CHECK(pairing(e8.highest_root(), v) ==
          2 * 1 + 3 * 1 + 4 * 1 + 6 * q(-5, 2) + 5 * 1 + 4 * 1 + 3 * q(-3, 2) + 2 * 1);
    std::vector<int> short_one{1, 0};
    CHECK(test::error_kind([&] { pairing(short_one, v); }) == ErrorKind::DimensionMismatch);
    CHECK(root_label(e8.type(), e8.highest_root().coeffs) == "3;2465432");
    CHECK(root_label(SimpleType::parse("F4"), std::vector<int>{1, 2, 2, 2}) == "1222");
}

TEST_CASE("coroot pairings match the Cartan matrix") {
    for (auto name : {"G2", "F4", "B3", "C4", "E6"}) {
        auto &rs = test::algebra(name).rs;
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                CHECK(rs.coroot_pairing(rs.root(i).coeffs, j) == rs.cartan(i, j));
    }
}

TEST_CASE("admissible levels") {
    auto a1 = RootSystem::build(SimpleType::parse("A1"));
    auto &g2 = test::algebra("G2").rs;
    CHECK(is_admissible_level(a1, 3, 2));
    CHECK_FALSE(is_admissible_level(a1, 1, 2));
    CHECK(is_admissible_level(a1, 2, 1));
    CHECK_FALSE(is_admissible_level(a1, 4, 2)); // not coprime
    CHECK(is_admissible_level(g2, 7, 3));
    CHECK_FALSE(is_admissible_level(g2, 5, 3));
    CHECK(is_admissible_level(g2, 6, 3) == false); // gcd 3
    CHECK(is_admissible_level(g2, 4, 1));
    CHECK_FALSE(is_admissible_level(g2, 3, 1));
    CHECK(is_admissible_level(g2, 5, 2));
    auto &f4 = test::algebra("F4").rs;
    CHECK(is_admissible_level(f4, 9, 1));
    CHECK_FALSE(is_admissible_level(f4, 11, 2));
    CHECK(is_admissible_level(f4, 13, 2));
}

TEST_CASE("rationals parse and print") {
    CHECK(parse_rational("-5/2") == q(-5, 2));
    CHECK(parse_rational("4/2") == 2);
    CHECK(to_string(q(3, -6)) == "-1/2");
    CHECK(to_string(q(6, 3)) == "2");
    for (const char *bad : {"", "1/0", "a", "1/2/3", "--1"})
        CHECK(test::error_kind([&] { parse_rational(bad); }) == ErrorKind::ParseError);
}

TEST_CASE("linear algebra: rank-nullity and solve") {
    Matrix m(3, 4);
    int vals[3][4] = {{1, 2, 0, 1}, {2, 4, 1, 0}, {3, 6, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m(i, j) = vals[i][j];
    CHECK(rank(m) == 2);
    auto ker = nullspace(m);
    CHECK(ker.size() == 2);
    for (const auto &x : ker)
        for (const auto &y : m.apply(x))
            CHECK(sgn(y) == 0);
    Vector b{3, 7, 10};
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
    Vector bad{1, 0, 0};
    CHECK_FALSE(solve(m, bad).has_value());
}
