#pragma once

#include <iosfwd>
#include <vector>

#include "arw/symfunc.hpp"

namespace arw {

/// Sparse element of the tensor square of the ring, with independent basis
/// tags for the two legs. Coproducts are computed in p (x) p internally and
/// handed out in s (x) s.
class Tensor2 {
public:
    Tensor2(Basis left, Basis right, int cap);

    Basis left_basis() const { return left_; }
    Basis right_basis() const { return right_; }
    int cap() const { return cap_; }
    bool truncated() const { return truncated_; }
    void mark_truncated() { truncated_ = true; }

    const std::map<std::pair<Partition, Partition>, Rational>& terms() const { return terms_; }
    Rational coeff(const Partition& left, const Partition& right) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& left, const Partition& right, const Rational& value);

    Tensor2 to_basis(Basis left, Basis right) const;
    Tensor2 operator-() const;
    friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
    friend Tensor2 operator-(const Tensor2& a, const Tensor2& b);

    bool same_element(const Tensor2& other) const;

private:
    Basis left_;
    Basis right_;
    std::map<std::pair<Partition, Partition>, Rational> terms_;
    int cap_;
    bool truncated_ = false;
};

/// Outer coproduct, dual to the outer product: Delta(p_n) = p_n (x) 1 + 1 (x) p_n.
Tensor2 outer_coproduct(const SymFunc& f);

/// Inner coproduct: power sums are group-like, delta(p_la) = p_la (x) p_la.
Tensor2 inner_coproduct(const SymFunc& f);

/// Plethysm coproduct, dual to composition; defined on zero-constant-term
/// input only (throws DomainError otherwise).
Tensor2 plethysm_coproduct(const SymFunc& f);

/// Hall-pair phi against the left (resp. right) tensor leg and return the
/// weighted sum of the other leg. pair_left(phi, Delta f) is the convolution
/// endomorphism T_phi(f).
SymFunc pair_left(const SymFunc& phi, const Tensor2& t);
SymFunc pair_right(const SymFunc& phi, const Tensor2& t);

/// Componentwise outer product on both legs (the bialgebra right-hand side).
Tensor2 tensor_product(const Tensor2& a, const Tensor2& b);

/// Outer-multiply the two legs together: m(A_(1) (x) A_(2)).
SymFunc multiply_legs(const Tensor2& t);

/// One row of the degree-n plethysm coefficient table: <s_mu[s_nu] | s_la>.
struct PlethysmTableRow {
    Partition la, mu, nu;
    long long value;
};

struct PlethysmTable {
    int degree = 0;
    std::vector<PlethysmTableRow> rows;             // deterministic construction order
    std::map<Partition, std::vector<size_t>> by_la;

    static PlethysmTable compute(int degree);
    void reindex();
};

/// Memoized table of all plethysm coefficients with |mu||nu| = degree; loads
/// from the configured cache directory when a valid file exists.
const PlethysmTable& plethysm_table(int degree);

void write_plethysm_table(const PlethysmTable& table, std::ostream& out);
bool read_plethysm_table(std::istream& in, int expected_degree, PlethysmTable& out);

}  // namespace arw
