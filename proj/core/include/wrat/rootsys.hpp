#pragma once

#include "wrat/linalg.hpp"
#include "wrat/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wrat {

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    /// Parses names such as "A1", "G2", "E8". Throws IllegalType.
    static SimpleType parse(std::string_view name);

    std::string name() const;
    bool is_exceptional() const;
    bool is_legal() const;

    bool operator==(const SimpleType &) const = default;
    auto operator<=>(const SimpleType &) const = default;
};

enum class RootLength { Long, Short };

/// A positive root as coefficients over the simple roots (Bourbaki numbering).
struct Root {
    std::vector<int> coeffs;
    RootLength length = RootLength::Long;

    int height() const;
    bool operator==(const Root &rhs) const { return coeffs == rhs.coeffs; }
};

/// An element v of the Cartan subalgebra, identified with its weighted Dynkin
/// diagram: pairings[i] = alpha_{i+1}(v).
struct CartanElement {
    std::vector<Rational> pairings;

    static CartanElement zero(int rank) { return {Vector(static_cast<std::size_t>(rank))}; }
    int rank() const { return static_cast<int>(pairings.size()); }
    bool is_zero() const;

    CartanElement operator+(const CartanElement &rhs) const;
    CartanElement operator-(const CartanElement &rhs) const;
    CartanElement scaled(const Rational &s) const;
    bool operator==(const CartanElement &rhs) const = default;
};

class RootSystem {
  public:
    /// Throws Error(IllegalType) for an illegal (family, rank).
    static RootSystem build(SimpleType type);

    SimpleType type() const { return type_; }
    int rank() const { return type_.rank; }

    /// Sorted by height, then reverse-lexicographically; the first rank()
    /// entries are the simple roots alpha_1, ..., alpha_rank in order.
    const std::vector<Root> &positive_roots() const { return positive_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    const Root &root(int index) const { return positive_.at(static_cast<std::size_t>(index)); }
    const Root &highest_root() const { return positive_.back(); }

    std::optional<int> find(std::span<const int> coeffs) const;
    /// Throws Error(UnknownRoot).
    int index_of(std::span<const int> coeffs) const;

    /// a_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j> = alpha_i(h_j).
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const std::vector<std::vector<int>> &cartan_matrix() const { return cartan_; }

    /// Normalized invariant form on simple roots, <alpha, alpha> = 2 for long roots.
    const Matrix &form() const { return form_; }
    Rational inner(std::span<const int> a, std::span<const int> b) const;

    /// <beta, alpha_i^vee> = beta(h_i) for beta given by simple-root coefficients.
    int coroot_pairing(std::span<const int> beta, int i) const;

    std::vector<int> marks() const;
    std::vector<int> comarks() const;
    int coxeter_number() const { return coxeter_; }
    int dual_coxeter_number() const { return dual_coxeter_; }
    int lacety() const { return lacety_; }

  private:
    SimpleType type_;
    std::vector<std::vector<int>> cartan_;
    Matrix form_;
    std::vector<Root> positive_;
    std::map<std::vector<int>, int> lookup_;
    int coxeter_ = 0;
    int dual_coxeter_ = 0;
    int lacety_ = 1;
};

/// alpha(v) = sum_i n_i alpha_i(v). Throws DimensionMismatch.
Rational pairing(std::span<const int> root_coeffs, const CartanElement &v);
inline Rational pairing(const Root &root, const CartanElement &v) { return pairing(root.coeffs, v); }

/// k = -h^vee + p/q is admissible: gcd(p, q) = 1, p >= h^vee when q is prime
/// to the lacety, p >= h when the lacety divides q.
bool is_admissible_level(const RootSystem &rs, long p, long q);

// Diagram reading order. For E-types diagrams are written with alpha_2 above
// the row alpha_1 alpha_3 alpha_4 ...; "reading order" lists the top entry
// first, then the row. For all other families reading order is Bourbaki order.

template <typename T> std::vector<T> to_reading_order(SimpleType type, std::span<const T> bourbaki) {
    std::vector<T> out(bourbaki.begin(), bourbaki.end());
    if (type.family == Family::E && out.size() >= 2) {
        out[0] = bourbaki[1];
        out[1] = bourbaki[0];
    }
    return out;
}

template <typename T> std::vector<T> from_reading_order(SimpleType type, std::span<const T> reading) {
    // The permutation swapping the first two entries is an involution.
    return to_reading_order<T>(type, reading);
}

/// "1121" for non-E types, "1;0121110" (top; row) for E-types.
std::string root_label(SimpleType type, std::span<const int> coeffs);

} // namespace wrat
