#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "arw/symfunc.hpp"

namespace arw {

/// One weighted component of a mixture state: the group-like series M_c,
/// plus a second coordinate family d for extended (polypodic) states.
struct Branch {
    Rational weight;
    CoordinateSequence coords;
    CoordinateSequence second;   // nonempty only in extended states
};

/// Convex mixture of coordinate-parametrized group-like series. States are
/// immutable; walk steps return new states. Branches with identical
/// coordinates are merged by exact equality, never by tolerance.
class MixtureState {
public:
    static MixtureState group_like(CoordinateSequence c, int cap = -1);
    static MixtureState extended(CoordinateSequence c, CoordinateSequence d, int cap = -1);
    /// Validates weights: nonnegative, summing exactly to 1.
    static MixtureState mixture(std::vector<Branch> branches, int cap = -1);

    const std::vector<Branch>& branches() const { return branches_; }
    int cap() const { return cap_; }
    bool is_extended() const { return extended_; }
    bool truncated() const { return truncated_; }
    /// Product of the plethysm factors applied so far; bounds measurable degree.
    int inflation() const { return inflation_; }

    Rational weight_sum() const;

private:
    friend MixtureState outer_step(const MixtureState&, const struct OuterStepSpec&, long long);
    friend MixtureState inner_step(const MixtureState&, const struct InnerStepSpec&, long long);
    friend MixtureState pleth_step_right(const MixtureState&, int);

    static MixtureState rebuild(const MixtureState& base,
                                std::map<std::pair<CoordinateSequence, CoordinateSequence>,
                                         Rational> merged,
                                bool truncated, int inflation);

    std::vector<Branch> branches_;
    int cap_ = 0;
    bool extended_ = false;
    bool truncated_ = false;
    int inflation_ = 1;
};

/// State of the pure inner walk: rho = sum r_la p_la.
struct PureInnerState {
    std::map<Partition, Rational> coeffs;
    int cap = -1;

    static PureInnerState make(std::map<Partition, Rational> coeffs, int cap = -1);
    Rational coefficient_sum() const;
    SymFunc as_symfunc() const;
};

/// Outer step: translations of the height coordinates, with probabilities.
struct OuterStepSpec {
    std::vector<std::pair<Rational, CoordinateSequence>> components;
    void validate() const;
};

/// Inner step: componentwise dilations of the height coordinates.
struct InnerStepSpec {
    std::vector<std::pair<Rational, CoordinateSequence>> components;
    void validate() const;
};

/// Right-plethystic step by a single power sum p_m: index inflation.
struct PlethStepSpec {
    int m = 1;
};

/// Step of the pure inner walk; psi holds the p-basis coefficients of the generator.
struct PureInnerStepSpec {
    std::map<Partition, Rational> psi;
};

using StepSpec = std::variant<OuterStepSpec, InnerStepSpec, PlethStepSpec, PureInnerStepSpec>;

/// M_c -> sum_i lambda_i M_{c + phi^i} per branch; weights multiply, identical
/// coordinate sets merge. Throws BranchCapExceeded past branch_cap (< 0 means
/// the configured default).
MixtureState outer_step(const MixtureState& state, const OuterStepSpec& step,
                        long long branch_cap = -1);

/// M_c -> sum_j mu_j M_{psi^j c} per branch (componentwise products).
MixtureState inner_step(const MixtureState& state, const InnerStepSpec& step,
                        long long branch_cap = -1);

/// M_c[p_m]: coordinates move to c'_{mn} = m c_n, other locations zero.
/// Entries pushed above the cap are dropped and the state is flagged truncated.
MixtureState pleth_step_right(const MixtureState& state, int m);

/// Weighted-generator step (product-alphabet reading): the result
/// exp(sum_n (w c_n) p_{n omega} / n), w = prod w_i, omega = sorted {m_i}, is
/// not representable by single-power-sum coordinates, so a full ring-level
/// series is returned instead of a MixtureState.
SymFunc pleth_step_right_weighted(const MixtureState& state,
                                  const std::vector<std::pair<Rational, int>>& parts);

struct PureInnerStepResult {
    PureInnerState state;
    Rational coefficient_sum;   // normalization audit; drifts in general
};

/// psi * rho = sum psi_la r_la z_la p_la. Never auto-normalizes.
PureInnerStepResult pure_inner_step(const PureInnerState& rho,
                                    const std::map<Partition, Rational>& psi);

/// S_alpha(c) = sum_beta z_beta^{-1} chi^alpha_beta c_beta.
Rational s_alpha_poly(const Partition& alpha, const CoordinateSequence& c);

/// M_c(f) = sum_alpha f_alpha S_alpha(c), weighted over branches. Extended
/// states are measured by Hall-pairing f against the expanded M_{d,c} series.
/// Enforces inflation * deg(f) <= cap.
Rational measure(const MixtureState& state, const SymFunc& f);

/// rho(f) = <rho | f> = sum r_la z_la f_la.
Rational measure(const PureInnerState& rho, const SymFunc& f);

/// Ring-level expansion of the state: sum of branch series, weighted.
SymFunc state_series(const MixtureState& state);

/// One GL-branching layer per outer step applied to s_la:
/// f -> sum_alpha (s_alpha^perp f) S_alpha(phi), with probabilities multiplying.
std::vector<std::pair<Rational, SymFunc>> evolve_schur(const Partition& la,
                                                       const std::vector<OuterStepSpec>& steps,
                                                       int cap = -1);

/// Deterministic seeded generator (splitmix64); used for audits and replay.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t next_below(std::uint64_t bound);
    /// Uniform-ish small rational: numerator in [-9, 9], denominator in [1, 4].
    Rational next_rational();

private:
    std::uint64_t state_;
};

/// Random real-coefficient element of degree <= max_degree in the Schur basis.
SymFunc random_symfunc(SplitMix64& rng, int max_degree, int cap);

struct AuditViolation {
    int trial;
    std::string witness;
    Rational value;
};

struct AuditReport {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<AuditViolation> violations;
};

/// Checks measure(state, f^2) >= 0 on seeded random f of degree <= cap/2
/// (outer square for mixture states, inner square f*f for pure inner states).
AuditReport positivity_audit(const MixtureState& state, int trials, std::uint64_t seed);
AuditReport positivity_audit(const PureInnerState& rho, int trials, std::uint64_t seed);

/// True iff the coordinate shortcut for the step agrees with the direct
/// ring-level computation on a fixed battery of Schur and power-sum elements.
bool fastpath_vs_ring_check(const MixtureState& state, const StepSpec& step);

}  // namespace arw
