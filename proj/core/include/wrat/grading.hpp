#pragma once

#include "wrat/liealg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace wrat {

/// Half-integer grading g = sum_j g_j induced by h: deg e_a = a(h)/2,
/// deg f_a = -a(h)/2, deg h_i = 0.
struct DynkinGrading {
    CartanElement h;
    std::vector<Rational> degree; // per basis index
    std::map<Rational, std::vector<int>> pieces;

    const std::vector<int> &piece(const Rational &j) const;
    int dim(const Rational &j) const { return static_cast<int>(piece(j).size()); }
    int total_dimension() const;
};

DynkinGrading grade(const ChevalleyTable &table, const CartanElement &h);

struct Sl2Triple {
    LieElement e;
    LieElement h;
    LieElement f;
};

/// Solves [e, f] = h for e in g_1 with f = sum_k f_{beta_k}. Throws
/// NoSl2Completion when some beta_k(h) != 2 or the system is inconsistent.
Sl2Triple complete_sl2(const ChevalleyTable &table, const CartanElement &h,
                       const std::vector<std::vector<int>> &f_roots);

bool verify_sl2(const ChevalleyTable &table, const Sl2Triple &triple);

bool is_even_grading(const DynkinGrading &grading);

/// Degree of a homogeneous element, or nullopt.
std::optional<Rational> homogeneous_degree(const DynkinGrading &grading, const LieElement &x);

/// Matrix of ad(x) restricted to span(from) -> span(to), basis-index lists.
Matrix ad_block(const ChevalleyTable &table, const LieElement &x, const std::vector<int> &from,
                const std::vector<int> &to);

struct GoodGradingReport {
    bool good = true;
    struct Piece {
        Rational j;
        int dim_source = 0;
        int dim_target = 0;
        int rank = 0;
        bool injective = false;
        bool surjective = false;
    };
    std::vector<Piece> pieces;
};

/// ad(f): g_j -> g_{j-1} injective for j >= 1/2 and surjective for j <= 1/2.
/// Throws NotDegreeMinusOne.
GoodGradingReport check_good_grading(const ChevalleyTable &table, const DynkinGrading &grading,
                                     const LieElement &f);

inline bool verify_good_grading(const ChevalleyTable &table, const DynkinGrading &grading,
                                const LieElement &f) {
    return check_good_grading(table, grading, f).good;
}

} // namespace wrat
