// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit status is the number of failed criteria.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "arw/cache.hpp"
#include "arw/characters.hpp"
#include "arw/coalgebra.hpp"
#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/expr.hpp"
#include "arw/walk.hpp"
#include "arw/walk_config.hpp"
#include "oracles.hpp"

using namespace arw;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

double run_criterion(int id, const std::string& title,
                     const std::function<void(Outcome&)>& body, int& failures) {
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.pass = false;
        outcome.detail = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << id << "  " << title << "  ["
              << ms << " ms]";
    if (!outcome.pass) std::cout << "  -- " << outcome.detail;
    std::cout << "\n";
    if (!outcome.pass) ++failures;
    return ms;
}

CoordinateSequence seeded_coords(SplitMix64& rng, int max_index) {
    CoordinateSequence out;
    for (int n = 1; n <= max_index; ++n)
        if (rng.next_below(2)) out.set(n, rng.next_rational());
    return out;
}

// p_n(XV) -> d_n p_n(X) applied to a power-basis expansion
SymFunc specialize_product_alphabet(const SymFunc& f_p, const CoordinateSequence& d) {
    SymFunc out(Basis::Power, f_p.cap());
    for (const auto& [ga, c] : f_p.terms()) out.add_term(ga, c * d.monomial(ga));
    return out;
}

using Tensor3 = std::map<std::tuple<Partition, Partition, Partition>, Rational>;

void add3(Tensor3& t, const Partition& a, const Partition& b, const Partition& c,
          const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.emplace(std::make_tuple(a, b, c), v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

Tensor3 coproduct_on_leg(const Tensor2& t, Tensor2 (*co)(const SymFunc&), bool left) {
    Tensor3 out;
    Tensor2 ss = t.to_basis(Basis::Schur, Basis::Schur);
    for (const auto& [key, c] : ss.terms()) {
        const Partition& target = left ? key.first : key.second;
        Tensor2 inner = co(SymFunc::basis_element(Basis::Schur, target, t.cap()))
                            .to_basis(Basis::Schur, Basis::Schur);
        for (const auto& [ikey, ic] : inner.terms()) {
            if (left) add3(out, ikey.first, ikey.second, key.second, c * ic);
            else add3(out, key.first, ikey.first, ikey.second, c * ic);
        }
    }
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main() {
    int failures = 0;
    set_degree_cap(12);

    // 1. the worked example: lambda = (4,2,2,1)
    run_criterion(1, "partition worked example (4,2,2,1), exact, < 1 ms", [](Outcome& out) {
        Partition la({4, 2, 2, 1});
        auto start = std::chrono::steady_clock::now();
        out.require(la.weight() == 9, "weight");
        out.require(la.length() == 4, "length");
        out.require(la.conjugate() == Partition({4, 3, 1, 1}), "conjugate");
        out.require(la.n_stat() == 9, "n statistic");
        out.require(la.centralizer_order() == 32, "z order");
        const std::vector<std::vector<int>> contents{{0, 1, 2, 3}, {-1, 0}, {-2, -1}, {-3}};
        const std::vector<std::vector<int>> hooks{{7, 5, 2, 1}, {4, 2}, {3, 1}, {1}};
        for (int r = 1; r <= 4; ++r) {
            for (int c = 1; c <= la.parts()[r - 1]; ++c) {
                out.require(la.content(r, c) == contents[r - 1][c - 1], "content matrix");
                out.require(la.hook_length(r, c) == hooks[r - 1][c - 1], "hook matrix");
            }
        }
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        out.require(ms < 1.0, "took " + std::to_string(ms) + " ms, budget is 1 ms");
    }, failures);

    // 2. both character orthogonality identities, exactly, all n <= 8
    double ortho_ms = run_criterion(
        2, "character orthogonality (both identities), n <= 8, exact", [](Outcome& out) {
            for (int n = 0; n <= 8; ++n) {
                const auto& idx = partitions_of(n);
                const CharacterTable& tab = character_table(n);
                for (size_t a = 0; a < idx.size(); ++a) {
                    for (size_t b = 0; b < idx.size(); ++b) {
                        Rational row_sum(0), col_sum(0);
                        for (size_t m = 0; m < idx.size(); ++m) {
                            row_sum += Rational(tab.value_at(a, m) * tab.value_at(b, m),
                                                idx[m].centralizer_order());
                            col_sum += Rational(tab.value_at(m, a) * tab.value_at(m, b),
                                                idx[a].centralizer_order());
                        }
                        Rational expected(a == b ? 1 : 0);
                        out.require(row_sum == expected,
                                    "first identity fails at n=" + std::to_string(n));
                        out.require(col_sum == expected,
                                    "second identity fails at n=" + std::to_string(n));
                    }
                }
            }
        }, failures);
    if (ortho_ms >= 60000.0) {
        std::cout << "FAIL  2  runtime budget: took " << ortho_ms << " ms, budget 60 s\n";
        ++failures;
    }

    // 3. Frobenius round trip on every Schur element of degree <= 8
    run_criterion(3, "Frobenius round trip s -> p -> s, degree <= 8, exact", [](Outcome& out) {
        for (int n = 0; n <= 8; ++n) {
            for (const auto& la : partitions_of(n)) {
                SymFunc sf = SymFunc::basis_element(Basis::Schur, la, 8);
                SymFunc back = sf.to_basis(Basis::Power).to_basis(Basis::Schur);
                out.require(back.terms() == sf.terms(),
                            "round trip moved s" + la.to_string());
            }
        }
    }, failures);

    // 4. Hall pairing orthogonality in both bases, degree <= 8
    run_criterion(4, "Hall pairing: <s|s> = delta, <p|p> = z delta, degree <= 8",
                  [](Outcome& out) {
                      for (int n = 0; n <= 8; ++n) {
                          const auto& idx = partitions_of(n);
                          for (const auto& mu : idx) {
                              for (const auto& nu : idx) {
                                  SymFunc smu = SymFunc::basis_element(Basis::Schur, mu, 8);
                                  SymFunc snu = SymFunc::basis_element(Basis::Schur, nu, 8);
                                  Rational expected_s(mu == nu ? 1 : 0);
                                  out.require(hall_inner(smu, snu) == expected_s,
                                              "schur pairing at " + mu.to_string());
                                  SymFunc pmu = SymFunc::basis_element(Basis::Power, mu, 8);
                                  SymFunc pnu = SymFunc::basis_element(Basis::Power, nu, 8);
                                  Rational expected_p = mu == nu
                                                            ? Rational(mu.centralizer_order())
                                                            : Rational(0);
                                  out.require(hall_inner(pmu, pnu) == expected_p,
                                              "power pairing at " + mu.to_string());
                              }
                          }
                          if (n >= 1) {
                              SymFunc a = SymFunc::basis_element(Basis::Schur, idx[0], 8);
                              SymFunc b = SymFunc::unit(Basis::Schur, 8);
                              out.require(hall_inner(a, b) == Rational(0), "graded pairing");
                          }
                      }
                  }, failures);

    // 5. coefficient families: nonnegative integers, oracle agreement
    run_criterion(
        5, "c/g/p coefficients: nonnegative integers; LR oracle x50; s2[s2] table",
        [](Outcome& out) {
            for (int n = 0; n <= 6; ++n) {
                for (const auto& la : partitions_of(n)) {
                    for (int a = 0; a <= n; ++a) {
                        for (const auto& mu : partitions_of(a)) {
                            for (const auto& nu : partitions_of(n - a)) {
                                long long c = lr_coefficient(la, mu, nu);
                                out.require(c >= 0, "negative LR coefficient");
                            }
                        }
                    }
                    for (const auto& mu : partitions_of(n)) {
                        for (const auto& nu : partitions_of(n)) {
                            long long g = kronecker_coefficient(la, mu, nu);
                            out.require(g >= 0, "negative Kronecker coefficient");
                        }
                    }
                }
            }
            for (int a = 1; a <= 6; ++a) {
                for (int b = 1; a * b <= 6; ++b) {
                    for (const auto& mu : partitions_of(a)) {
                        for (const auto& nu : partitions_of(b)) {
                            for (const auto& la : partitions_of(a * b)) {
                                long long p = plethysm_coefficient(la, mu, nu);
                                out.require(p >= 0, "negative plethysm coefficient");
                            }
                        }
                    }
                }
            }
            // 50 seeded random triples against the tableau rule
            SplitMix64 rng(505);
            for (int compared = 0; compared < 50; ++compared) {
                int n = 1 + static_cast<int>(rng.next_below(6));
                int a = static_cast<int>(rng.next_below(n + 1));
                const auto& las = partitions_of(n);
                const auto& mus = partitions_of(a);
                const auto& nus = partitions_of(n - a);
                Partition la = las[rng.next_below(las.size())];
                Partition mu = mus[rng.next_below(mus.size())];
                Partition nu = nus[rng.next_below(nus.size())];
                out.require(lr_coefficient(la, mu, nu) ==
                                arw::oracle::lr_tableau_count(la, mu, nu),
                            "LR disagrees with the tableau rule at " + la.to_string());
            }
            // degree-4 plethysm table contains s2[s2] = s4 + s22 per the
            // monomial oracle
            SymFunc oracle_value = arw::oracle::identify_schur(
                arw::oracle::plethysm_monomials(Partition({2}), Partition({2}), 4), 8);
            out.require(oracle_value.coeff(Partition({4})) == Rational(1), "oracle s4");
            out.require(oracle_value.coeff(Partition({2, 2})) == Rational(1), "oracle s22");
            out.require(oracle_value.terms().size() == 2, "oracle extra terms");
            out.require(
                plethysm_coefficient(Partition({4}), Partition({2}), Partition({2})) == 1,
                "table s4");
            out.require(
                plethysm_coefficient(Partition({2, 2}), Partition({2}), Partition({2})) == 1,
                "table s22");
            out.require(
                plethysm_coefficient(Partition({3, 1}), Partition({2}), Partition({2})) == 0,
                "table s31");
        }, failures);

    // 6. Hopf axioms on basis elements of degree <= 6
    run_criterion(
        6, "Hopf axioms: counit law, coassociativity (3 coproducts), antipode, degree <= 6",
        [](Outcome& out) {
            for (int n = 0; n <= 6; ++n) {
                for (const auto& la : partitions_of(n)) {
                    SymFunc f = SymFunc::basis_element(Basis::Schur, la, 6);
                    Tensor2 d = outer_coproduct(f).to_basis(Basis::Schur, Basis::Schur);

                    SymFunc left_counit(Basis::Schur, 6), right_counit(Basis::Schur, 6);
                    for (const auto& [key, c] : d.terms()) {
                        if (key.first.empty()) left_counit.add_term(key.second, c);
                        if (key.second.empty()) right_counit.add_term(key.first, c);
                    }
                    out.require(left_counit.terms() == f.terms(),
                                "(eps x id) Delta != id at " + la.to_string());
                    out.require(right_counit.terms() == f.terms(),
                                "(id x eps) Delta != id at " + la.to_string());

                    out.require(coproduct_on_leg(d, &outer_coproduct, true) ==
                                    coproduct_on_leg(d, &outer_coproduct, false),
                                "outer coassociativity at " + la.to_string());
                    Tensor2 di = inner_coproduct(f);
                    out.require(coproduct_on_leg(di, &inner_coproduct, true) ==
                                    coproduct_on_leg(di, &inner_coproduct, false),
                                "inner coassociativity at " + la.to_string());
                    if (n >= 1) {
                        Tensor2 dp = plethysm_coproduct(f);
                        out.require(coproduct_on_leg(dp, &plethysm_coproduct, true) ==
                                        coproduct_on_leg(dp, &plethysm_coproduct, false),
                                    "plethysm coassociativity at " + la.to_string());
                    }

                    SymFunc total(Basis::Power, 6);
                    for (const auto& [key, c] : d.terms()) {
                        SymFunc left =
                            antipode(SymFunc::basis_element(Basis::Schur, key.first, 6));
                        SymFunc right = SymFunc::basis_element(Basis::Schur, key.second, 6);
                        total = total + c * outer_product(left, right).to_basis(Basis::Power);
                    }
                    SymFunc expect = counit(f) * SymFunc::unit(Basis::Power, 6);
                    out.require(total.same_element(expect),
                                "antipode axiom at " + la.to_string());
                }
            }
        }, failures);

    // 7. M and L invert each other through degree 12
    run_criterion(7, "series inverse M * L = 1 up to degree 12, exact", [](Outcome& out) {
        SymFunc m12 = expand_series(SeriesSpec::m_series(12));
        SymFunc l12 = expand_series(SeriesSpec::l_series(12));
        SymFunc prod = outer_product(m12, l12);
        out.require(prod.same_element(SymFunc::unit(Basis::Power, 12)),
                    "product has surviving terms");
    }, failures);

    // 8. outer shift lemma, 20 seeded random instances, two routes
    run_criterion(
        8, "outer ARW shift lemma: shortcut == ring route, 20 seeded instances",
        [](Outcome& out) {
            SplitMix64 rng(808);
            for (int trial = 0; trial < 20; ++trial) {
                CoordinateSequence c = seeded_coords(rng, 6);
                CoordinateSequence phi = seeded_coords(rng, 6);
                SymFunc f = random_symfunc(rng, 6, 6);

                MixtureState state = MixtureState::group_like(c, 6);
                OuterStepSpec step;
                step.components = {{Rational(1), phi}};
                MixtureState next = outer_step(state, step);

                Rational shortcut = measure(next, f);
                SymFunc mc = expand_series(SeriesSpec::group_like(c, 6));
                SymFunc mphi = expand_series(SeriesSpec::group_like(phi, 6));
                Rational ring = hall_inner(outer_product(mc, mphi), f);
                out.require(shortcut == ring,
                            "routes disagree on trial " + std::to_string(trial));
                out.require(measure(next, SymFunc::unit(Basis::Schur, 6)) == Rational(1),
                            "normalization lost on trial " + std::to_string(trial));

                OuterStepSpec mixed;
                mixed.components = {{Rational(1, 3), seeded_coords(rng, 6)},
                                    {Rational(2, 3), seeded_coords(rng, 6)}};
                MixtureState after = outer_step(next, mixed);
                out.require(measure(after, SymFunc::unit(Basis::Schur, 6)) == Rational(1),
                            "normalization lost after the mixed step");
            }
        }, failures);

    // 9. inner ARW lemmas: step formula, positivity identity, drift
    run_criterion(
        9, "pure inner ARW: step formula, positivity identity, reported drift",
        [](Outcome& out) {
            SplitMix64 rng(909);
            for (int trial = 0; trial < 20; ++trial) {
                std::map<Partition, Rational> r, psi;
                for (int n = 0; n <= 6; ++n) {
                    for (const auto& la : partitions_of(n)) {
                        if (rng.next_below(2)) r[la] = rng.next_rational();
                        if (rng.next_below(2)) psi[la] = rng.next_rational();
                    }
                }
                PureInnerState rho = PureInnerState::make(r, 6);

                auto stepped = pure_inner_step(rho, psi);
                for (const auto& [la, value] : stepped.state.coeffs) {
                    Rational expect = psi.at(la) * rho.coeffs.at(la) *
                                      Rational(la.centralizer_order());
                    out.require(value == expect, "step formula at " + la.to_string());
                }
                Rational sum(0);
                for (const auto& [la, value] : stepped.state.coeffs) sum += value;
                out.require(stepped.coefficient_sum == sum, "audit sum mismatch");

                SymFunc f = random_symfunc(rng, 6, 6).to_basis(Basis::Power);
                Rational lhs = measure(rho, inner_product(f, f));
                Rational rhs(0);
                for (const auto& [la, coeff] : rho.coeffs) {
                    Rational fz = f.coeff(la) * Rational(la.centralizer_order());
                    rhs += coeff * fz * fz;
                }
                out.require(lhs == rhs,
                            "positivity identity on trial " + std::to_string(trial));
            }

            PureInnerState rho = PureInnerState::make({{Partition({2}), Rational(1)}}, 6);
            auto result = pure_inner_step(rho, {{Partition({2}), Rational(1)}});
            out.require(result.coefficient_sum == Rational(2), "expected drift to 2");
            out.require(result.coefficient_sum != Rational(1), "drift should be nonzero");
        }, failures);

    // 10. plethystic inflation lemma at degree 12 for m = 1, 2, 3
    run_criterion(
        10, "plethystic inflation M_c[p_m]: ring == shortcut, m in {1,2,3}, degree 12",
        [](Outcome& out) {
            SplitMix64 rng(1010);
            for (int m : {1, 2, 3}) {
                for (int trial = 0; trial < 3; ++trial) {
                    CoordinateSequence c = seeded_coords(rng, 12);
                    MixtureState state = MixtureState::group_like(c, 12);
                    MixtureState inflated = pleth_step_right(state, m);
                    SymFunc ring = plethysm(
                        expand_series(SeriesSpec::group_like(c, 12)),
                        SymFunc::basis_element(Basis::Power, Partition({m}), 12));
                    out.require(state_series(inflated).same_element(ring),
                                "m=" + std::to_string(m) + " trial " + std::to_string(trial));
                }
            }
        }, failures);

    // 11. appendix positivity and the sum-of-squares identity
    run_criterion(
        11, "extended states: 10x200 audits clean; sum-of-squares identity on 5 instances",
        [](Outcome& out) {
            SplitMix64 rng(1111);
            for (int instance = 0; instance < 10; ++instance) {
                CoordinateSequence c = seeded_coords(rng, 12);
                CoordinateSequence d;
                for (int k = 1; k <= 6; ++k)
                    if (rng.next_below(2)) d.set(k, rng.next_rational());
                MixtureState state = MixtureState::extended(c, d, 12);
                AuditReport report = positivity_audit(state, 200, 1111 + instance);
                out.require(report.violations.empty(),
                            "audit violation on instance " + std::to_string(instance));
            }

            // direct two-sided identity at degree <= 4:
            // <M' | f^2> = sum over ordered pairs (alpha, beta) of
            // <M' (s_alpha s_beta)(XV) | f>^2
            for (int instance = 0; instance < 5; ++instance) {
                CoordinateSequence c = seeded_coords(rng, 8);
                CoordinateSequence d;
                for (int k = 1; k <= 4; ++k)
                    if (rng.next_below(2)) d.set(k, rng.next_rational());
                SymFunc mprime = expand_series(SeriesSpec::extended(c, d, 8));
                SymFunc f = random_symfunc(rng, 4, 8);
                Rational lhs = hall_inner(mprime, outer_product(f, f));
                Rational rhs(0);
                for (int a = 0; a <= 4; ++a) {
                    for (const auto& al : partitions_of(a)) {
                        SymFunc sa = SymFunc::basis_element(Basis::Schur, al, 8)
                                         .to_basis(Basis::Power);
                        for (int b = 0; a + b <= 4; ++b) {
                            for (const auto& be : partitions_of(b)) {
                                SymFunc sab = outer_product(
                                    sa, SymFunc::basis_element(Basis::Schur, be, 8)
                                            .to_basis(Basis::Power));
                                Rational v = hall_inner(
                                    outer_product(mprime,
                                                  specialize_product_alphabet(sab, d)),
                                    f);
                                rhs += v * v;
                            }
                        }
                    }
                }
                out.require(lhs == rhs,
                            "identity fails on instance " + std::to_string(instance));
                out.require(!lhs.is_negative(), "square measured negative");
            }
        }, failures);

    // 12. walk determinism: byte-identical traces on rerun
    run_criterion(
        12, "determinism: rerunning a seeded config yields byte-identical traces",
        [](Outcome& out) {
            const char* config_text = R"({
  "degree_cap": 8,
  "initial": {"kind": "group-like", "coords": {"1": "1", "2": "1/2"}},
  "steps": [
    {"kind": "outer", "components": [{"prob": "1/2", "phi": {"1": "1"}},
                                      {"prob": "1/2", "phi": {"1": "-1"}}]},
    {"kind": "inner", "components": [{"prob": "1", "psi": {"1": "2", "2": "1/3"}}]},
    {"kind": "pleth-right", "m": 2}
  ],
  "observables": ["s[1]", "p[2]", "1"],
  "audit": {"trials": 25, "seed": 20120731}
})";
            WalkConfig config = load_walk_config(config_text);
            auto base = std::filesystem::temp_directory_path() / "arw-acceptance";
            std::filesystem::remove_all(base);
            write_traces(run_walk(config), base / "first");
            write_traces(run_walk(config), base / "second");
            std::string csv1 = slurp(base / "first" / "trace.csv");
            out.require(!csv1.empty(), "empty trace");
            out.require(csv1 == slurp(base / "second" / "trace.csv"), "csv bytes differ");
            out.require(slurp(base / "first" / "trace.json") ==
                            slurp(base / "second" / "trace.json"),
                        "json bytes differ");
        }, failures);

    if (failures == 0) std::cout << "ALL CRITERIA PASSED\n";
    else std::cout << "FAILED CRITERIA: " << failures << "\n";
    return failures;
}
