#pragma once

// Series solutions of q d/dq phi = A(z, q) phi + f(z, q) at the regular
// singular point q = 0, with entries polynomial in z over Q(i).

#include "wrat/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace wrat::frob {

/// Exact element of Q(i).
struct QI {
    Rational re;
    Rational im;

    QI() = default;
    QI(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    QI(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    QI operator+(const QI &o) const { return {re + o.re, im + o.im}; }
    QI operator-(const QI &o) const { return {re - o.re, im - o.im}; }
    QI operator-() const { return {-re, -im}; }
    QI operator*(const QI &o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    QI operator/(const QI &o) const;
    QI &operator+=(const QI &o) { return *this = *this + o; }
    QI &operator-=(const QI &o) { return *this = *this - o; }
    bool operator==(const QI &o) const { return re == o.re && im == o.im; }
};

std::string to_string(const QI &x);

/// Polynomial in z; coeffs[m] multiplies z^m. Trailing zeros are trimmed.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<QI> coeffs);
    static Poly constant(const QI &c) { return Poly({c}); }

    const std::vector<QI> &coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    QI coeff(int m) const;

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator-() const;
    Poly operator*(const Poly &o) const;
    Poly scaled(const QI &s) const;
    Poly &operator+=(const Poly &o) { return *this = *this + o; }
    Poly &operator-=(const Poly &o) { return *this = *this - o; }
    bool operator==(const Poly &o) const { return c_ == o.c_; }

    /// Exact division; nullopt when the remainder is nonzero.
    std::optional<Poly> divide_exact(const Poly &d) const;

    std::complex<double> eval(std::complex<double> z) const;
    std::complex<double> eval_derivative(std::complex<double> z) const;
    /// Coefficients of the expansion in powers of (z - z0).
    std::vector<std::complex<double>> taylor_at(std::complex<double> z0) const;

  private:
    void trim();
    std::vector<QI> c_;
};

using PolyVector = std::vector<Poly>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// A(z, q) = sum_n A_n(z) q^n, truncated.
struct AnalyticMatrixSeries {
    int ell = 1;
    std::vector<PolyMatrix> coeffs;
    Rational radius = 1;

    PolyMatrix term(int n) const; // zero matrix past the truncation
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    void validate() const;
};

/// sum_n phi_n(z) q^n, truncated.
struct VectorSeries {
    int ell = 1;
    std::vector<PolyVector> coeffs;

    PolyVector term(int n) const;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const;
    bool operator==(const VectorSeries &o) const { return ell == o.ell && coeffs == o.coeffs; }
};

struct DomainParams {
    std::complex<double> z0{0.0, 0.0};
    double epsilon = 0.5;
    double delta = 0.25;
};

/// Seeds phi_n for selected n.
using Seeds = std::map<int, PolyVector>;

/// C = sum_{i,j} sum_{m,n} |a_ij^{(m,n)}| eps^m delta^n with a^{(m,n)} the Taylor
/// coefficients of the entries about z0.
double norm_bound(const AnalyticMatrixSeries &a, const DomainParams &params);

/// Sampled max over |z - z0| = eps of sum_ij |a_ij^{(0)}(z)|, times 2.
double eigenvalue_bound(const AnalyticMatrixSeries &a, const DomainParams &params);

/// N = 1 + floor(max(eigenvalue_bound, norm_bound)).
int choose_truncation(const AnalyticMatrixSeries &a, const DomainParams &params);

/// Solves [n I - A_0] phi_n = f_n + sum_{m<n} A_{n-m} phi_m for n = 0..order.
/// Where n I - A_0 is singular a seed is required and verified; elsewhere
/// supplied seeds are checked against the forced value. Throws Resonance,
/// SeedInconsistent, MissingSeed or NonPolynomialCoefficient.
VectorSeries recursion_solve(const AnalyticMatrixSeries &a, const VectorSeries &f, const Seeds &seeds, int order);

/// Max over n <= order of the number of nonzero entries in the coefficient of
/// q^n of q phi' - A phi - f (0 means the residual vanishes identically).
int residual_nonzero_terms(const AnalyticMatrixSeries &a, const VectorSeries &f, const VectorSeries &phi,
                           int order);

struct ContractionResult {
    int truncation = 0;     // N
    double norm_c = 0.0;    // C
    double ratio = 0.0;     // C / N
    double norm_forcing = 0.0; // ||F_N|| in H_delta
    double rate_bound = 0.0;   // (1 - C/N)^{-1} (C/N)^m ||F_N||
    std::vector<std::vector<std::complex<double>>> iterate; // u^(m)_n, n = 0..order
    std::vector<double> step_norms; // ||u^(k+1) - u^(k)||, k = 0..m-1
};

/// m iterations of u -> T(z) u from u = 0 in H_delta, evaluated at z.
/// Throws ContractionFails if C/N >= 1.
ContractionResult contraction_solve(const AnalyticMatrixSeries &a, const VectorSeries &f, const Seeds &seeds,
                                    const DomainParams &params, int iterations, int order,
                                    std::optional<std::complex<double>> z = std::nullopt);

double h_delta_norm(const std::vector<std::vector<std::complex<double>>> &u, double delta);

/// phi = sum_{j,k} phi_{j,k}(z, q) q^{h_j} (log q)^k.
struct LogSeriesSolution {
    int ell = 1;
    std::vector<QI> exponents;
    int max_log_power = 0;
    std::vector<std::vector<VectorSeries>> layers; // [j][k]
    Rational radius = 1;
};

struct LayerKey {
    int j = 0;
    int k = 0;
    auto operator<=>(const LayerKey &) const = default;
};

/// Solves each layer top-down from k = K with A - h_j I, feeding -(k+1) phi_{j,k+1}
/// into layer k. `forcing` holds optional per-layer inhomogeneities. Resonance
/// errors name the failing (j, k, n).
LogSeriesSolution log_system_solve(const AnalyticMatrixSeries &a, const std::vector<QI> &exponents, int max_log_power,
                                   const std::map<LayerKey, Seeds> &seeds, int order,
                                   const std::map<LayerKey, VectorSeries> &forcing = {});

/// Max over layers (j, k) and n <= order of the nonzero entries in the q^n
/// coefficient of q phi_{j,k}' - (A - h_j) phi_{j,k} + (k+1) phi_{j,k+1} - f_{j,k}.
int log_residual_nonzero_terms(const AnalyticMatrixSeries &a, const LogSeriesSolution &sol, int order,
                               const std::map<LayerKey, VectorSeries> &forcing = {});

bool exponents_noncongruent(const std::vector<QI> &exponents);

/// Evaluates the solution at (z, q) using log_branch as log q. Throws
/// BranchMismatch when |exp(log_branch) - q| > 1e-12 and OutOfRadius unless
/// 0 < |q| < radius.
std::vector<std::complex<double>> evaluate(const LogSeriesSolution &sol, std::complex<double> z,
                                           std::complex<double> q, std::complex<double> log_branch);

/// d/dz of evaluate, from the differentiated coefficient polynomials.
std::vector<std::complex<double>> evaluate_dz(const LogSeriesSolution &sol, std::complex<double> z,
                                              std::complex<double> q, std::complex<double> log_branch);

} // namespace wrat::frob
