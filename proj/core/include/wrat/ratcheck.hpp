#pragma once

#include "wrat/grading.hpp"
#include "wrat/orbits.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wrat {

enum class Status { Pass, Fail };

enum class CheckMethod {
    Exact,        // full kernel of ad(f), split by degree and ad(v)-eigenvalue
    Fast,         // spectrum on g_0 + g_{-1/2} with injectivity fallbacks
    FastDelegated // fast path inconclusive, verdict taken from the exact check
};

const char *status_name(Status s);
const char *method_name(CheckMethod m);

/// One (j, lambda) piece: `multiplicity` independent vectors of ad(v)-eigenvalue
/// lambda in degree -j. For the exact method these live in g^f_{-j}; for the
/// fast method they are the eigenvalues on g_0 (j = 0) and g_{-1/2} (j = 1/2),
/// and `cleared` marks an outlier eigenspace on which ad(f) was shown injective.
struct EvidenceEntry {
    Rational j;
    Rational lambda;
    int multiplicity = 0;
    bool admissible = false;
    bool cleared = false;

    bool accepted() const { return admissible || cleared; }
};

/// ad(f) applied to an outlier eigenvector: `witness` maps to `image`.
struct FallbackWitness {
    Rational eigenvalue;
    Rational piece; // 0 for g_0, -1/2 for g_{-1/2}
    int witness = 0;
    std::string witness_label;
    LieElement image;
    std::vector<std::string> image_labels;
};

struct ConditionVerdict {
    Status status = Status::Fail;
    CheckMethod method = CheckMethod::Exact;
    std::vector<EvidenceEntry> evidence;
    std::vector<FallbackWitness> fallbacks;

    bool passed() const { return status == Status::Pass; }
    int total_multiplicity() const;
};

/// lambda + j + 1 in N.
bool admissible(const Rational &j, const Rational &lambda);

/// Basis of {v in h : beta_k(v) = 0 for all k}, as weighted Dynkin diagrams.
std::vector<CartanElement> h0f_space(const RootSystem &rs, const std::vector<std::vector<int>> &f_roots);

/// Throws VNotInCentralizer if [v, f] != 0 and NotDegreeMinusOne if f is not
/// homogeneous of degree -1.
ConditionVerdict exact_condition(const ChevalleyTable &table, const DynkinGrading &grading, const LieElement &f,
                                 const CartanElement &v);

ConditionVerdict fast_condition(const ChevalleyTable &table, const DynkinGrading &grading, const LieElement &f,
                                const CartanElement &v);

struct SearchConfig {
    int denominator_bound = 2;
    Rational coefficient_bound = 4;
};

/// First v (ordered by common denominator, then lexicographically on the free
/// coordinates of the h_0^f solution space) whose exact check passes. Zero for
/// even gradings; nullopt when nothing within the bounds passes.
std::optional<CartanElement> search_v(const RootSystem &rs, const ChevalleyTable &table, const DynkinGrading &grading,
                                      const std::vector<std::vector<int>> &f_roots, const SearchConfig &config = {});

/// Good even grading route: with x0 inducing a good even grading for f, takes
/// v = h/2 - x0 and runs the exact check. Throws GradingNotGood,
/// GradingNotEven or VNotInCentralizer.
ConditionVerdict verify_good_even_shortcut(const ChevalleyTable &table, const CartanElement &h,
                                           const std::vector<std::vector<int>> &f_roots, const CartanElement &x0);

struct ContragredientEntry {
    LieElement v; // matrix realizations store entry (a, b) at index a * n + b
    Rational form_value; // <h/2, v>
    Rational trace_plus; // tr_{g_+} ad(v)
    Rational trace_minus;
    bool ok() const { return sgn(form_value) == 0 && sgn(trace_plus) == 0 && sgn(trace_minus) == 0; }
};

struct ContragredientReport {
    bool ok = true;
    int dim_g0f = 0;
    std::vector<ContragredientEntry> entries;
};

/// For each basis vector v of g_0^f: <h/2, v> = 0, tr_{g_+} ad(v) = 0 and
/// tr_{g_-} ad(v) = 0, which makes (k + h^vee)<x0, v> - tr_{g_+} ad(v)/2
/// vanish at every level k.
ContragredientReport verify_self_contragredient(const ChevalleyTable &table, const DynkinGrading &grading,
                                                const LieElement &f);

/// Same identities in the defining matrix realization (trace form).
ContragredientReport verify_self_contragredient(const ClassicalRealization &real);

/// Builds g = {X : S X = -X^T S} and g^f inside gl_n, grades by ad(h)/2 and
/// splits by ad(v)-eigenvalue. With use_zero_v the check runs for v = 0.
ConditionVerdict check_classical(const ClassicalRealization &real, bool use_zero_v = false);

} // namespace wrat
