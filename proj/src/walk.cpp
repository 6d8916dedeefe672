#include "arw/walk.hpp"

#include <algorithm>
#include <functional>

#include "arw/characters.hpp"
#include "arw/coalgebra.hpp"
#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/expr.hpp"

namespace arw {

namespace {

int state_cap(int cap) {
    if (cap < 0) cap = std::min(degree_cap(), kMaxDegreeCap);
    if (cap < 0 || cap > kMaxDegreeCap) throw DomainError("state cap out of range");
    return cap;
}

void check_coords(const CoordinateSequence& c, int cap) {
    if (!c.values.empty() && c.values.rbegin()->first > cap)
        throw DomainError("coordinate index exceeds the degree cap");
}

void validate_components(const std::vector<std::pair<Rational, CoordinateSequence>>& comps) {
    if (comps.empty()) throw DomainError("step needs at least one component");
    Rational total(0);
    for (const auto& [prob, coords] : comps) {
        if (prob.is_negative()) throw DomainError("step probabilities must be nonnegative");
        total += prob;
    }
    if (!total.is_one()) throw DomainError("step probabilities must sum to 1 exactly");
}

}  // namespace

MixtureState MixtureState::group_like(CoordinateSequence c, int cap) {
    MixtureState out;
    out.cap_ = state_cap(cap);
    check_coords(c, out.cap_);
    out.branches_.push_back({Rational(1), std::move(c), {}});
    return out;
}

MixtureState MixtureState::extended(CoordinateSequence c, CoordinateSequence d, int cap) {
    MixtureState out;
    out.cap_ = state_cap(cap);
    check_coords(c, out.cap_);
    if (!d.values.empty() && 2 * d.values.rbegin()->first > out.cap_)
        throw DomainError("extended coordinate k needs 2k within the degree cap");
    out.extended_ = true;
    out.branches_.push_back({Rational(1), std::move(c), std::move(d)});
    return out;
}

MixtureState MixtureState::mixture(std::vector<Branch> branches, int cap) {
    MixtureState out;
    out.cap_ = state_cap(cap);
    if (branches.empty()) throw DomainError("mixture state needs at least one branch");
    Rational total(0);
    for (const auto& b : branches) {
        if (b.weight.is_negative()) throw DomainError("branch weights must be nonnegative");
        check_coords(b.coords, out.cap_);
        if (!b.second.values.empty()) out.extended_ = true;
        total += b.weight;
    }
    if (!total.is_one()) throw DomainError("branch weights must sum to 1 exactly");
    out.branches_ = std::move(branches);
    return out;
}

Rational MixtureState::weight_sum() const {
    Rational total(0);
    for (const auto& b : branches_) total += b.weight;
    return total;
}

PureInnerState PureInnerState::make(std::map<Partition, Rational> coeffs, int cap) {
    PureInnerState out;
    out.cap = state_cap(cap);
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        if (it->first.weight() > out.cap)
            throw DomainError("pure-inner coefficient index exceeds the degree cap");
        if (it->second.is_zero()) it = coeffs.erase(it);
        else ++it;
    }
    out.coeffs = std::move(coeffs);
    return out;
}

Rational PureInnerState::coefficient_sum() const {
    Rational total(0);
    for (const auto& [la, r] : coeffs) total += r;
    return total;
}

SymFunc PureInnerState::as_symfunc() const {
    SymFunc out(Basis::Power, cap);
    for (const auto& [la, r] : coeffs) out.set_coeff(la, r);
    return out;
}

void OuterStepSpec::validate() const { validate_components(components); }
void InnerStepSpec::validate() const { validate_components(components); }

// merge key: both coordinate families, exact equality
using BranchKey = std::pair<CoordinateSequence, CoordinateSequence>;

MixtureState MixtureState::rebuild(const MixtureState& base,
                                   std::map<BranchKey, Rational> merged, bool truncated,
                                   int inflation) {
    std::vector<Branch> branches;
    branches.reserve(merged.size());
    for (auto& [key, weight] : merged) {
        if (weight.is_zero()) continue;
        branches.push_back({std::move(weight), key.first, key.second});
    }
    MixtureState out = MixtureState::mixture(std::move(branches), base.cap());
    if (truncated || base.truncated()) out.truncated_ = true;
    out.inflation_ = inflation;
    if (base.is_extended()) out.extended_ = true;
    return out;
}

namespace {

void check_branch_cap(size_t projected, long long branch_cap) {
    long long cap = branch_cap < 0 ? default_branch_cap() : branch_cap;
    if (static_cast<long long>(projected) > cap)
        throw BranchCapExceeded("walk step would create " + std::to_string(projected) +
                                " branches, above the cap of " + std::to_string(cap));
}

}  // namespace

MixtureState outer_step(const MixtureState& state, const OuterStepSpec& step,
                        long long branch_cap) {
    step.validate();
    if (state.is_extended())
        throw DomainError("walk steps are not defined on extended states");
    check_branch_cap(state.branches().size() * step.components.size(), branch_cap);
    std::map<BranchKey, Rational> merged;
    for (const auto& b : state.branches()) {
        for (const auto& [prob, phi] : step.components) {
            check_coords(phi, state.cap());
            BranchKey key{b.coords.plus(phi), b.second};
            Rational w = b.weight * prob;
            auto [it, fresh] = merged.emplace(std::move(key), w);
            if (!fresh) it->second += w;
        }
    }
    return MixtureState::rebuild(state, std::move(merged), false, state.inflation());
}

MixtureState inner_step(const MixtureState& state, const InnerStepSpec& step,
                        long long branch_cap) {
    step.validate();
    if (state.is_extended())
        throw DomainError("walk steps are not defined on extended states");
    check_branch_cap(state.branches().size() * step.components.size(), branch_cap);
    std::map<BranchKey, Rational> merged;
    for (const auto& b : state.branches()) {
        for (const auto& [prob, psi] : step.components) {
            BranchKey key{b.coords.times(psi), b.second};
            Rational w = b.weight * prob;
            auto [it, fresh] = merged.emplace(std::move(key), w);
            if (!fresh) it->second += w;
        }
    }
    return MixtureState::rebuild(state, std::move(merged), false, state.inflation());
}

MixtureState pleth_step_right(const MixtureState& state, int m) {
    if (m < 1) throw DomainError("plethysm step factor must be a positive integer");
    if (state.is_extended())
        throw DomainError("walk steps are not defined on extended states");
    bool truncated = false;
    std::map<BranchKey, Rational> merged;
    for (const auto& b : state.branches()) {
        BranchKey key{b.coords.inflated(m, state.cap(), &truncated), b.second};
        auto [it, fresh] = merged.emplace(std::move(key), b.weight);
        if (!fresh) it->second += b.weight;
    }
    return MixtureState::rebuild(state, std::move(merged), truncated, state.inflation() * m);
}

SymFunc pleth_step_right_weighted(const MixtureState& state,
                                  const std::vector<std::pair<Rational, int>>& parts) {
    if (parts.empty()) throw DomainError("weighted plethysm step needs at least one part");
    if (state.is_extended())
        throw DomainError("walk steps are not defined on extended states");
    Rational w(1);
    std::vector<int> omega_parts;
    for (const auto& [wi, mi] : parts) {
        if (mi < 1) throw DomainError("plethysm step factor must be a positive integer");
        w *= wi;
        omega_parts.push_back(mi);
    }
    std::sort(omega_parts.begin(), omega_parts.end(), std::greater<int>());
    Partition omega(std::move(omega_parts));

    SymFunc out(Basis::Power, state.cap());
    for (const auto& b : state.branches()) {
        SymFunc exponent(Basis::Power, state.cap());
        if (!w.is_zero()) {
            for (const auto& [n, c] : b.coords.values) {
                if (n * omega.weight() > state.cap()) continue;
                exponent.add_term(omega.scaled(n), w * c / Rational(n));
            }
        }
        out = out + b.weight * exp_power_series(exponent);
    }
    return out;
}

PureInnerStepResult pure_inner_step(const PureInnerState& rho,
                                    const std::map<Partition, Rational>& psi) {
    PureInnerState next;
    next.cap = rho.cap;
    for (const auto& [la, r] : rho.coeffs) {
        auto it = psi.find(la);
        if (it == psi.end() || it->second.is_zero()) continue;
        Rational v = it->second * r * Rational(la.centralizer_order());
        if (!v.is_zero()) next.coeffs[la] = v;
    }
    Rational sum = next.coefficient_sum();
    return {std::move(next), std::move(sum)};
}

Rational s_alpha_poly(const Partition& alpha, const CoordinateSequence& c) {
    const int n = alpha.weight();
    if (n == 0) return Rational(1);
    const CharacterTable& tab = character_table(n);
    const auto& idx = tab.index();
    Rational out(0);
    size_t ai = static_cast<size_t>(
        std::lower_bound(idx.begin(), idx.end(), alpha) - idx.begin());
    for (size_t bi = 0; bi < idx.size(); ++bi) {
        Rational cb = c.monomial(idx[bi]);
        if (cb.is_zero()) continue;
        out += Rational(tab.value_at(ai, bi), idx[bi].centralizer_order()) * cb;
    }
    return out;
}

SymFunc state_series(const MixtureState& state) {
    SymFunc out(Basis::Power, state.cap());
    for (const auto& b : state.branches()) {
        SeriesSpec spec = state.is_extended()
                              ? SeriesSpec::extended(b.coords, b.second, state.cap())
                              : SeriesSpec::group_like(b.coords, state.cap());
        out = out + b.weight * expand_series(spec);
    }
    return out;
}

Rational measure(const MixtureState& state, const SymFunc& f) {
    if (f.max_degree() > state.cap())
        throw DomainError("measure: observable degree exceeds the state cap");
    if (static_cast<long long>(state.inflation()) * f.max_degree() > state.cap())
        throw DomainError("measure: inflation * deg(f) exceeds the cap; the dropped "
                          "coordinates could matter");
    if (state.is_extended()) return hall_inner(state_series(state), f);
    SymFunc fs = f.to_basis(Basis::Schur);
    Rational out(0);
    for (const auto& b : state.branches()) {
        Rational branch_value(0);
        for (const auto& [alpha, fa] : fs.terms())
            branch_value += fa * s_alpha_poly(alpha, b.coords);
        out += b.weight * branch_value;
    }
    return out;
}

Rational measure(const PureInnerState& rho, const SymFunc& f) {
    return hall_inner(rho.as_symfunc(), f);
}

std::vector<std::pair<Rational, SymFunc>> evolve_schur(const Partition& la,
                                                       const std::vector<OuterStepSpec>& steps,
                                                       int cap) {
    const int n = state_cap(cap);
    if (la.weight() > n) throw DomainError("evolve_schur: |lambda| exceeds the degree cap");
    std::vector<std::pair<Rational, SymFunc>> branches{
        {Rational(1), SymFunc::basis_element(Basis::Schur, la, n)}};
    for (const auto& step : steps) {
        step.validate();
        std::vector<std::pair<Rational, SymFunc>> next;
        // expand each component's generator series once
        std::vector<SymFunc> phi_series;
        phi_series.reserve(step.components.size());
        for (const auto& [prob, phi] : step.components)
            phi_series.push_back(expand_series(SeriesSpec::group_like(phi, n)));
        for (const auto& [prob, f] : branches) {
            for (size_t i = 0; i < step.components.size(); ++i) {
                SymFunc evolved = pair_left(phi_series[i], outer_coproduct(f));
                next.push_back({prob * step.components[i].first, std::move(evolved)});
            }
        }
        branches = std::move(next);
    }
    return branches;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) { return next() % bound; }

Rational SplitMix64::next_rational() {
    long long num = static_cast<long long>(next_below(19)) - 9;
    long long den = static_cast<long long>(next_below(4)) + 1;
    return Rational(num, den);
}

SymFunc random_symfunc(SplitMix64& rng, int max_degree, int cap) {
    SymFunc out(Basis::Schur, cap);
    for (int d = 0; d <= std::min(max_degree, cap); ++d) {
        for (const auto& la : partitions_of(d)) {
            if (rng.next_below(2) == 0) continue;
            out.add_term(la, rng.next_rational());
        }
    }
    return out;
}

namespace {

AuditReport run_audit(int trials, std::uint64_t seed, int max_degree, int cap,
                      const std::function<Rational(const SymFunc&)>& square_measure) {
    AuditReport report;
    report.trials = trials;
    report.seed = seed;
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        SymFunc f = random_symfunc(rng, max_degree, cap);
        Rational value = square_measure(f);
        if (value.is_negative())
            report.violations.push_back({t, format_symfunc(f), std::move(value)});
    }
    return report;
}

}  // namespace

AuditReport positivity_audit(const MixtureState& state, int trials, std::uint64_t seed) {
    // ring-route measurement: exact and cheap to batch; squaring in the power
    // basis avoids converting the dense product back and forth
    SymFunc series = state_series(state);
    return run_audit(trials, seed, state.cap() / 2, state.cap(), [&](const SymFunc& f) {
        SymFunc fp = f.to_basis(Basis::Power);
        return hall_inner(series, outer_product(fp, fp));
    });
}

AuditReport positivity_audit(const PureInnerState& rho, int trials, std::uint64_t seed) {
    SymFunc series = rho.as_symfunc();
    return run_audit(trials, seed, rho.cap, rho.cap, [&](const SymFunc& f) {
        SymFunc fp = f.to_basis(Basis::Power);
        return hall_inner(series, inner_product(fp, fp));
    });
}

bool fastpath_vs_ring_check(const MixtureState& state, const StepSpec& step) {
    if (state.is_extended())
        throw DomainError("fastpath check applies to standard mixture states only");

    MixtureState after = std::visit(
        [&](const auto& s) -> MixtureState {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OuterStepSpec>) return outer_step(state, s);
            else if constexpr (std::is_same_v<T, InnerStepSpec>) return inner_step(state, s);
            else if constexpr (std::is_same_v<T, PlethStepSpec>)
                return pleth_step_right(state, s.m);
            else
                throw DomainError("fastpath check: unsupported step kind");
        },
        step);

    // the same evolution carried out on expanded series with ring operations
    SymFunc ring(Basis::Power, state.cap());
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OuterStepSpec>) {
                for (const auto& b : state.branches()) {
                    SymFunc mc = expand_series(SeriesSpec::group_like(b.coords, state.cap()));
                    for (const auto& [prob, phi] : s.components) {
                        SymFunc mphi = expand_series(SeriesSpec::group_like(phi, state.cap()));
                        ring = ring + (b.weight * prob) * outer_product(mc, mphi);
                    }
                }
            } else if constexpr (std::is_same_v<T, InnerStepSpec>) {
                for (const auto& b : state.branches()) {
                    SymFunc mc = expand_series(SeriesSpec::group_like(b.coords, state.cap()));
                    for (const auto& [prob, psi] : s.components) {
                        SymFunc mpsi = expand_series(SeriesSpec::group_like(psi, state.cap()));
                        ring = ring + (b.weight * prob) * inner_product(mpsi, mc);
                    }
                }
            } else if constexpr (std::is_same_v<T, PlethStepSpec>) {
                SymFunc pm = SymFunc::basis_element(Basis::Power, Partition({s.m}), state.cap());
                for (const auto& b : state.branches()) {
                    SymFunc mc = expand_series(SeriesSpec::group_like(b.coords, state.cap()));
                    ring = ring + b.weight * plethysm(mc, pm);
                }
            }
        },
        step);

    const int max_deg =
        std::min<long long>(4, after.inflation() > 0 ? state.cap() / after.inflation() : 0);
    for (int d = 0; d <= max_deg; ++d) {
        for (const auto& la : partitions_of(d)) {
            SymFunc fs = SymFunc::basis_element(Basis::Schur, la, state.cap());
            if (measure(after, fs) != hall_inner(ring, fs)) return false;
            SymFunc fp = SymFunc::basis_element(Basis::Power, la, state.cap());
            if (measure(after, fp) != hall_inner(ring, fp)) return false;
        }
    }
    return true;
}

}  // namespace arw
