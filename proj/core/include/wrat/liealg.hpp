#pragma once

#include "wrat/linalg.hpp"
#include "wrat/rootsys.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace wrat {

enum class BasisKind { E, F, H };

/// E(positive root), F(positive root) or H(simple index) in the Chevalley basis.
struct BasisElement {
    BasisKind kind = BasisKind::H;
    int index = 0;
    bool operator==(const BasisElement &) const = default;
};

/// Finitely supported vector over the Chevalley basis, keyed by basis index
/// (see ChevalleyTable for the index layout). Zero coefficients are never stored.
class LieElement {
  public:
    LieElement() = default;

    static LieElement basis(int index, const Rational &coeff = 1);

    const std::map<int, Rational> &coords() const { return coords_; }
    Rational coeff(int index) const;
    bool is_zero() const { return coords_.empty(); }
    std::size_t support_size() const { return coords_.size(); }

    void add(int index, const Rational &value);
    LieElement &operator+=(const LieElement &rhs);
    LieElement &operator-=(const LieElement &rhs);
    LieElement operator+(const LieElement &rhs) const;
    LieElement operator-(const LieElement &rhs) const;
    LieElement scaled(const Rational &s) const;

    bool operator==(const LieElement &) const = default;

  private:
    std::map<int, Rational> coords_;
};

/// A structure constant term: coefficient * (basis element `index`).
struct Term {
    int index;
    long coeff;
};

/// Bracket table of the simple Lie algebra on its Chevalley basis.
///
/// Basis layout: indices [0, P) are e_alpha for the positive roots in
/// RootSystem order, [P, 2P) the matching f_alpha = e_{-alpha}, and
/// [2P, 2P + rank) the simple coroots h_i. Signs follow the extraspecial-pair
/// convention with N_{-a,-b} = -N_{a,b} and [e_a, f_a] = h_a.
class ChevalleyTable {
  public:
    static ChevalleyTable build(const RootSystem &rs);

    const RootSystem &roots() const { return rs_; }
    int dimension() const { return dim_; }
    int num_positive() const { return rs_.num_positive(); }
    int rank() const { return rs_.rank(); }

    int e_index(int root) const { return root; }
    int f_index(int root) const { return num_positive() + root; }
    int h_index(int i) const { return 2 * num_positive() + i; }
    BasisElement element(int index) const;
    int index(BasisElement b) const;

    /// "e(1100)", "f(1;0121110)", "h3".
    std::string label(int index) const;

    /// [b_a, b_b] for basis indices a, b.
    std::span<const Term> bracket_basis(int a, int b) const {
        return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(b)];
    }

    /// N_{a,b} for signed positive-root indices: [e_{sa*a}, e_{sb*b}] = N e_{sa*a+sb*b}.
    /// Zero when the sum is not a root.
    long structure_constant(int a, int sign_a, int b, int sign_b) const;

    /// Coroot h_alpha expanded over the simple coroots.
    const std::vector<long> &coroot(int root) const { return coroots_[static_cast<std::size_t>(root)]; }

    /// The element of the Cartan subalgebra with the given simple-root pairings.
    LieElement cartan_to_element(const CartanElement &v) const;
    /// Pairings alpha_i(x) for x in the span of the H-basis. Ignores root-vector terms.
    CartanElement element_to_cartan(const LieElement &x) const;

    /// f = sum_k f_{beta_k}. Throws UnknownRoot.
    LieElement sum_of_negative_root_vectors(const std::vector<std::vector<int>> &betas) const;

    /// Invariant form on the H-basis: <h_i, h_j> = 4 <a_i,a_j> / (<a_i,a_i><a_j,a_j>).
    Rational cartan_form(const LieElement &x, const LieElement &y) const;

  private:
    RootSystem rs_;
    int dim_ = 0;
    std::vector<std::vector<Term>> table_;
    std::vector<std::vector<long>> constants_; // 2P x 2P over signed roots, 0 if no root
    std::vector<std::vector<long>> coroots_;
};

LieElement bracket(const ChevalleyTable &table, const LieElement &x, const LieElement &y);

/// Column b is the coordinate vector of [x, b].
Matrix ad_matrix(const ChevalleyTable &table, const LieElement &x);

/// Basis of ker ad(x).
std::vector<LieElement> centralizer(const ChevalleyTable &table, const LieElement &x);

LieElement from_coordinates(std::span<const Rational> coords);
Vector to_coordinates(const ChevalleyTable &table, const LieElement &x);

} // namespace wrat
