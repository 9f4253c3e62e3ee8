#pragma once

#include "wrat/errors.hpp"
#include "wrat/ratcheck.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>

namespace wrat::test {

/// Seed for randomized property tests, set with --seed (default 0).
std::uint64_t seed();

struct Algebra {
    RootSystem rs;
    ChevalleyTable table;
};

/// Built once per type for the whole test binary.
const Algebra &algebra(const std::string &name);

/// The embedded record for (algebra, label); fails the test when absent.
OrbitRecord record(const std::string &algebra, const std::string &label);

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline CartanElement diagram(std::initializer_list<Rational> xs) { return {std::vector<Rational>(xs)}; }

/// Bourbaki-order pairings from an E-type diagram written as (top; row...).
CartanElement e_diagram(const Rational &top, std::initializer_list<Rational> row);

/// Bourbaki coefficients from an E-type root label "t;r1r2...".
std::vector<int> e_root(const std::string &label);

template <typename F> ErrorKind error_kind(F &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return static_cast<ErrorKind>(-1);
}

} // namespace wrat::test
