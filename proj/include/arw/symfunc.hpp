#pragma once

#include <map>
#include <string>
#include <vector>

#include "arw/partition.hpp"
#include "arw/rational.hpp"

namespace arw {

/// The five classical bases of the ring of symmetric functions.
enum class Basis : char {
    Power = 'p',
    Schur = 's',
    Complete = 'h',
    Elementary = 'e',
    Monomial = 'm',
};

char basis_letter(Basis b);
Basis basis_from_letter(char c);

/// Sparse element of the ring truncated at a fixed total degree, tagged with
/// the basis its index partitions refer to. Coefficients are exact rationals;
/// zero coefficients are never stored. Values are immutable in spirit: every
/// operation returns a fresh object.
///
/// The internal canonical basis for arithmetic is the power-sum basis; the
/// other bases are views reached through exact per-degree transition matrices,
/// so converting to any basis and back is the identity.
class SymFunc {
public:
    SymFunc();
    SymFunc(Basis basis, int cap);

    static SymFunc zero(Basis basis, int cap) { return SymFunc(basis, cap); }
    static SymFunc unit(Basis basis, int cap);
    /// The single basis element with coefficient 1; cap < 0 means the global cap.
    static SymFunc basis_element(Basis basis, const Partition& index, int cap = -1);

    Basis basis() const { return basis_; }
    int cap() const { return cap_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& index) const;
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    /// True when every stored term has the same weight (the zero element is
    /// homogeneous of any degree).
    bool is_homogeneous() const;

    void set_coeff(const Partition& index, Rational value);
    void add_term(const Partition& index, const Rational& value);

    SymFunc to_basis(Basis target) const;
    SymFunc homogeneous_component(int degree) const;

    SymFunc operator-() const;
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const Rational& c, const SymFunc& f);

    bool same_element(const SymFunc& other) const;   // equality as ring elements

private:
    Basis basis_;
    std::map<Partition, Rational> terms_;
    int cap_;
    bool truncated_ = false;
};

/// Pointwise product of symmetric functions. Multiplicative on power-sum
/// indices; terms of degree above the cap are dropped and flagged.
SymFunc outer_product(const SymFunc& a, const SymFunc& b);

/// Kronecker product: diagonal in the power-sum basis with p_la * p_la = z_la p_la.
SymFunc inner_product(const SymFunc& a, const SymFunc& b);

/// Plethysm A[B], composition of symmetric functions. B must have zero
/// constant term. Rational coefficients of B pass through p_n unchanged:
/// p_n[c * B] = c * p_n[B] (the copied-alphabet convention; the rival
/// convention raises scalars to the n-th power and is NOT used here).
SymFunc plethysm(const SymFunc& a, const SymFunc& b);

/// Schur-Hall scalar product; <p_al | p_be> = z_al delta.
Rational hall_inner(const SymFunc& a, const SymFunc& b);

/// Littlewood-Richardson coefficient <s_mu s_nu | s_la>; 0 unless |la| = |mu| + |nu|.
long long lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

/// Kronecker coefficient <s_mu * s_nu | s_la>; 0 unless all three weights agree.
long long kronecker_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

/// Plethysm coefficient <s_mu[s_nu] | s_la>; 0 unless |la| = |mu| |nu|. |nu| >= 1.
long long plethysm_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

/// Skew Schur function s_{la/mu} = sum_nu c^la_{mu,nu} s_nu, in the Schur basis.
SymFunc skew_schur(const Partition& la, const Partition& mu, int cap = -1);

/// Hopf antipode: S(s_la) = (-1)^{|la|} s_{la'}, equivalently S(p_la) = (-1)^{l(la)} p_la.
SymFunc antipode(const SymFunc& f);

/// Outer counit: the constant term.
Rational counit(const SymFunc& f);

/// Inner counit <M | .>; equals the sum of power-sum coefficients.
Rational inner_counit(const SymFunc& f);

/// Height coordinates {c_n}: a finitely supported map from locations 1..N to
/// exact rationals; absent entries are zero.
struct CoordinateSequence {
    std::map<int, Rational> values;

    CoordinateSequence() = default;
    explicit CoordinateSequence(std::map<int, Rational> v);

    Rational at(int n) const;
    void set(int n, Rational v);

    /// c_beta = prod_i c_{beta_i}; the empty partition gives 1.
    Rational monomial(const Partition& beta) const;

    CoordinateSequence plus(const CoordinateSequence& other) const;
    /// Componentwise product; absent entries count as zero.
    CoordinateSequence times(const CoordinateSequence& other) const;
    /// The index-inflation map n -> m*n; entries landing above cap are dropped
    /// and *truncated is set.
    CoordinateSequence inflated(int m, int cap, bool* truncated) const;

    bool operator==(const CoordinateSequence&) const = default;
    auto operator<=>(const CoordinateSequence&) const = default;

    std::string to_string() const;   // "{1:1,2:1/2}"
};

/// Generating series of the ring, expanded on demand into the power-sum basis.
///   M    : sum h_n            = exp(sum p_n / n)
///   L    : sum (-1)^m e_m     = exp(-sum p_n / n), the inverse of M
///   Mc   : exp(sum c_n p_n / n), the group-like walk state
///   Mdc  : exp(sum c_n p_n / n + sum d_k^2 p_(k,k) / k), the extended state
struct SeriesSpec {
    enum class Kind { M, L, Mc, Mdc };

    Kind kind = Kind::M;
    CoordinateSequence coords;      // c_n, used by Mc and Mdc
    CoordinateSequence second;      // d_k, used by Mdc
    int cap = -1;                   // < 0 means the global cap

    static SeriesSpec m_series(int cap = -1);
    static SeriesSpec l_series(int cap = -1);
    static SeriesSpec group_like(CoordinateSequence c, int cap = -1);
    static SeriesSpec extended(CoordinateSequence c, CoordinateSequence d, int cap = -1);
};

/// Truncated exponential expansion; complete to the cap, so the result does
/// not carry a truncation flag. The constant term is always 1.
SymFunc expand_series(const SeriesSpec& spec);

/// exp of a power-basis element with zero constant term, truncated at its cap.
SymFunc exp_power_series(const SymFunc& exponent);

/// The L series stores literal (-1)^m e_m components; this accessor strips
/// the sign and returns e_m itself.
SymFunc elementary_from_l_series(const SymFunc& l_expansion, int m);

}  // namespace arw
