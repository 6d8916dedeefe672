#include "arw/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>

#include "arw/characters.hpp"
#include "arw/config.hpp"
#include "arw/errors.hpp"

namespace arw {

char basis_letter(Basis b) { return static_cast<char>(b); }

Basis basis_from_letter(char c) {
    switch (c) {
        case 'p': return Basis::Power;
        case 's': return Basis::Schur;
        case 'h': return Basis::Complete;
        case 'e': return Basis::Elementary;
        case 'm': return Basis::Monomial;
        default: throw DomainError(std::string("unknown basis letter '") + c + "'");
    }
}

namespace {

int effective_cap(int cap) {
    if (cap < 0) cap = std::min(degree_cap(), kMaxDegreeCap);
    if (cap > kMaxDegreeCap) throw DomainError("ring degree cap limited to 20");
    return cap;
}

size_t partition_index(const Partition& p, const std::vector<Partition>& idx) {
    auto it = std::lower_bound(idx.begin(), idx.end(), p);
    return static_cast<size_t>(it - idx.begin());
}

using Matrix = std::vector<std::vector<Rational>>;

enum class MatrixKind {
    SchurToP, PToSchur,
    CompleteToP, PToComplete,
    ElementaryToP, PToElementary,
    MonomialToP, PToMonomial,
};

// homogeneous degree-n expansion in the p basis, indexed by partition position
using PVector = std::map<Partition, Rational>;

PVector single_h_in_p(int k) {
    PVector out;
    for (const auto& la : partitions_of(k))
        out[la] = Rational(1, la.centralizer_order());
    return out;
}

PVector single_e_in_p(int k) {
    PVector out;
    for (const auto& la : partitions_of(k)) {
        long long sign = ((k - la.length()) % 2 == 0) ? 1 : -1;
        out[la] = Rational(sign, la.centralizer_order());
    }
    return out;
}

// product inside one graded piece: indices concatenate
PVector pvec_mul(const PVector& a, const PVector& b) {
    PVector out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            Rational prod = ca * cb;
            auto key = pa.union_parts(pb);
            auto [it, fresh] = out.emplace(std::move(key), prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

Matrix identity_matrix(size_t n) {
    Matrix out(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) out[i][i] = Rational(1);
    return out;
}

Matrix invert_matrix(Matrix a) {
    const size_t n = a.size();
    Matrix inv = identity_matrix(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw DomainError("transition matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational scale = a[col][col].reciprocal();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational factor = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

// Multiplicative expansions: row mu of the result holds b_mu in the p basis.
Matrix multiplicative_to_p(int degree, PVector (*single)(int)) {
    const auto& idx = partitions_of(degree);
    Matrix out(idx.size(), std::vector<Rational>(idx.size(), Rational(0)));
    for (size_t mi = 0; mi < idx.size(); ++mi) {
        PVector acc;
        acc[Partition()] = Rational(1);
        for (int part : idx[mi].parts()) acc = pvec_mul(acc, single(part));
        for (const auto& [la, c] : acc) out[mi][partition_index(la, idx)] = c;
    }
    return out;
}

std::mutex g_matrix_mutex;
std::map<std::pair<int, MatrixKind>, std::shared_ptr<const Matrix>> g_matrices;

std::shared_ptr<const Matrix> transition_matrix(int degree, MatrixKind kind);

Matrix build_matrix(int degree, MatrixKind kind) {
    const auto& idx = partitions_of(degree);
    const size_t n = idx.size();
    switch (kind) {
        case MatrixKind::SchurToP: {
            const CharacterTable& tab = character_table(degree);
            Matrix out(n, std::vector<Rational>(n, Rational(0)));
            for (size_t li = 0; li < n; ++li)
                for (size_t mi = 0; mi < n; ++mi)
                    out[li][mi] =
                        Rational(tab.value_at(li, mi), idx[mi].centralizer_order());
            return out;
        }
        case MatrixKind::PToSchur: {
            const CharacterTable& tab = character_table(degree);
            Matrix out(n, std::vector<Rational>(n, Rational(0)));
            for (size_t mi = 0; mi < n; ++mi)
                for (size_t li = 0; li < n; ++li)
                    out[mi][li] = Rational(tab.value_at(li, mi));
            return out;
        }
        case MatrixKind::CompleteToP:
            return multiplicative_to_p(degree, &single_h_in_p);
        case MatrixKind::ElementaryToP:
            return multiplicative_to_p(degree, &single_e_in_p);
        case MatrixKind::PToComplete:
            return invert_matrix(*transition_matrix(degree, MatrixKind::CompleteToP));
        case MatrixKind::PToElementary:
            return invert_matrix(*transition_matrix(degree, MatrixKind::ElementaryToP));
        case MatrixKind::PToMonomial: {
            // p_be = sum_la z_be H[la][be] m_la, dual to <h_la | m_mu> = delta
            const Matrix& h = *transition_matrix(degree, MatrixKind::CompleteToP);
            Matrix out(n, std::vector<Rational>(n, Rational(0)));
            for (size_t bi = 0; bi < n; ++bi) {
                Rational z(idx[bi].centralizer_order());
                for (size_t li = 0; li < n; ++li) out[bi][li] = z * h[li][bi];
            }
            return out;
        }
        case MatrixKind::MonomialToP:
            return invert_matrix(*transition_matrix(degree, MatrixKind::PToMonomial));
    }
    throw DomainError("unreachable");
}

std::shared_ptr<const Matrix> transition_matrix(int degree, MatrixKind kind) {
    {
        std::lock_guard<std::mutex> lock(g_matrix_mutex);
        auto it = g_matrices.find({degree, kind});
        if (it != g_matrices.end()) return it->second;
    }
    auto built = std::make_shared<const Matrix>(build_matrix(degree, kind));
    std::lock_guard<std::mutex> lock(g_matrix_mutex);
    auto [it, _] = g_matrices.emplace(std::make_pair(degree, kind), built);
    return it->second;
}

MatrixKind to_p_kind(Basis b) {
    switch (b) {
        case Basis::Schur: return MatrixKind::SchurToP;
        case Basis::Complete: return MatrixKind::CompleteToP;
        case Basis::Elementary: return MatrixKind::ElementaryToP;
        case Basis::Monomial: return MatrixKind::MonomialToP;
        default: throw DomainError("no transition needed for the power basis");
    }
}

MatrixKind from_p_kind(Basis b) {
    switch (b) {
        case Basis::Schur: return MatrixKind::PToSchur;
        case Basis::Complete: return MatrixKind::PToComplete;
        case Basis::Elementary: return MatrixKind::PToElementary;
        case Basis::Monomial: return MatrixKind::PToMonomial;
        default: throw DomainError("no transition needed for the power basis");
    }
}

// apply a row-expansion matrix to a sparse homogeneous slice
void apply_transition(const std::map<Partition, Rational>& in, int degree, MatrixKind kind,
                      std::map<Partition, Rational>& out) {
    const auto& idx = partitions_of(degree);
    auto mat = transition_matrix(degree, kind);
    for (const auto& [source, c] : in) {
        const auto& row = (*mat)[partition_index(source, idx)];
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            Rational add = c * row[j];
            auto [it, fresh] = out.emplace(idx[j], add);
            if (!fresh) {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
}

}  // namespace

SymFunc::SymFunc() : basis_(Basis::Power), cap_(effective_cap(-1)) {}

SymFunc::SymFunc(Basis basis, int cap) : basis_(basis), cap_(effective_cap(cap)) {}

SymFunc SymFunc::unit(Basis basis, int cap) {
    SymFunc out(basis, cap);
    out.terms_[Partition()] = Rational(1);
    return out;
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& index, int cap) {
    SymFunc out(basis, cap);
    if (index.weight() > out.cap_)
        throw DomainError("basis element of weight " + std::to_string(index.weight()) +
                          " exceeds the degree cap");
    out.terms_[index] = Rational(1);
    return out;
}

Rational SymFunc::coeff(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::max_degree() const {
    int d = 0;
    for (const auto& [la, c] : terms_) d = std::max(d, la.weight());
    return d;
}

bool SymFunc::is_homogeneous() const {
    int d = -1;
    for (const auto& [la, c] : terms_) {
        if (d < 0) d = la.weight();
        else if (la.weight() != d) return false;
    }
    return true;
}

void SymFunc::set_coeff(const Partition& index, Rational value) {
    if (index.weight() > cap_) throw DomainError("term weight exceeds the degree cap");
    if (value.is_zero()) terms_.erase(index);
    else terms_[index] = std::move(value);
}

void SymFunc::add_term(const Partition& index, const Rational& value) {
    if (value.is_zero()) return;
    if (index.weight() > cap_) throw DomainError("term weight exceeds the degree cap");
    auto [it, fresh] = terms_.emplace(index, value);
    if (!fresh) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::homogeneous_component(int degree) const {
    SymFunc out(basis_, cap_);
    for (const auto& [la, c] : terms_)
        if (la.weight() == degree) out.terms_[la] = c;
    return out;
}

SymFunc SymFunc::to_basis(Basis target) const {
    if (target == basis_) return *this;
    SymFunc out(target, cap_);
    out.truncated_ = truncated_;
    // slice per degree, route through p
    std::map<int, std::map<Partition, Rational>> slices;
    for (const auto& [la, c] : terms_) slices[la.weight()][la] = c;
    for (auto& [degree, slice] : slices) {
        if (degree == 0) {
            for (auto& [la, c] : slice) out.terms_[la] = c;
            continue;
        }
        std::map<Partition, Rational> in_p;
        if (basis_ == Basis::Power) {
            in_p = std::move(slice);
        } else {
            apply_transition(slice, degree, to_p_kind(basis_), in_p);
        }
        if (target == Basis::Power) {
            for (auto& [la, c] : in_p) out.terms_[la] = std::move(c);
        } else {
            std::map<Partition, Rational> converted;
            apply_transition(in_p, degree, from_p_kind(target), converted);
            for (auto& [la, c] : converted) out.terms_[la] = std::move(c);
        }
    }
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out = *this;
    for (auto& [la, c] : out.terms_) c = -c;
    return out;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    SymFunc rhs = b.basis() == a.basis() ? b : b.to_basis(a.basis());
    SymFunc out(a.basis(), std::min(a.cap(), rhs.cap()));
    out.truncated_ = a.truncated_ || rhs.truncated_;
    for (const auto& [la, c] : a.terms_) {
        if (la.weight() > out.cap_) {
            out.truncated_ = true;
            continue;
        }
        out.terms_.emplace(la, c);
    }
    for (const auto& [la, c] : rhs.terms_) {
        if (la.weight() > out.cap_) {
            out.truncated_ = true;
            continue;
        }
        auto [it, fresh] = out.terms_.emplace(la, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

SymFunc operator*(const Rational& c, const SymFunc& f) {
    SymFunc out(f.basis(), f.cap());
    out.truncated_ = f.truncated_;
    if (c.is_zero()) return out;
    for (const auto& [la, v] : f.terms_) out.terms_[la] = c * v;
    return out;
}

bool SymFunc::same_element(const SymFunc& other) const {
    return to_basis(Basis::Power).terms() == other.to_basis(Basis::Power).terms();
}

SymFunc outer_product(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = a.to_basis(Basis::Power);
    SymFunc pb = b.to_basis(Basis::Power);
    SymFunc out(Basis::Power, std::min(a.cap(), b.cap()));
    if (a.truncated() || b.truncated()) out.mark_truncated();
    for (const auto& [la, ca] : pa.terms()) {
        for (const auto& [mu, cb] : pb.terms()) {
            if (la.weight() + mu.weight() > out.cap()) {
                out.mark_truncated();
                continue;
            }
            out.add_term(la.union_parts(mu), ca * cb);
        }
    }
    return out.to_basis(a.basis());
}

SymFunc inner_product(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = a.to_basis(Basis::Power);
    SymFunc pb = b.to_basis(Basis::Power);
    SymFunc out(Basis::Power, std::min(a.cap(), b.cap()));
    if (a.truncated() || b.truncated()) out.mark_truncated();
    for (const auto& [la, ca] : pa.terms()) {
        Rational cb = pb.coeff(la);
        if (cb.is_zero()) continue;
        out.add_term(la, ca * cb * Rational(la.centralizer_order()));
    }
    return out.to_basis(a.basis());
}

namespace {

// p_mu -> p_{n * mu}, coefficients unchanged; drops above the cap
SymFunc scale_indices(const SymFunc& p_elem, int factor, int cap) {
    SymFunc out(Basis::Power, cap);
    for (const auto& [mu, c] : p_elem.terms()) {
        if (factor * mu.weight() > cap) {
            out.mark_truncated();
            continue;
        }
        out.add_term(mu.scaled(factor), c);
    }
    return out;
}

}  // namespace

SymFunc plethysm(const SymFunc& a, const SymFunc& b) {
    if (!counit(b).is_zero())
        throw DomainError("plethysm requires the inner function to have zero constant term");
    SymFunc pa = a.to_basis(Basis::Power);
    SymFunc pb = b.to_basis(Basis::Power);
    const int cap = std::min(a.cap(), b.cap());
    SymFunc out(Basis::Power, cap);
    if (a.truncated() || b.truncated()) out.mark_truncated();
    for (const auto& [la, ca] : pa.terms()) {
        SymFunc acc = SymFunc::unit(Basis::Power, cap);
        for (int part : la.parts()) {
            SymFunc scaled = scale_indices(pb, part, cap);
            if (scaled.truncated()) out.mark_truncated();
            acc = outer_product(acc, scaled);
        }
        if (acc.truncated()) out.mark_truncated();
        for (const auto& [mu, c] : acc.terms()) out.add_term(mu, ca * c);
    }
    return out.to_basis(a.basis());
}

Rational hall_inner(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = a.to_basis(Basis::Power);
    SymFunc pb = b.to_basis(Basis::Power);
    Rational out(0);
    const auto& small = pa.terms().size() <= pb.terms().size() ? pa : pb;
    const auto& large = pa.terms().size() <= pb.terms().size() ? pb : pa;
    for (const auto& [la, c] : small.terms()) {
        Rational d = large.coeff(la);
        if (d.is_zero()) continue;
        out += c * d * Rational(la.centralizer_order());
    }
    return out;
}

namespace {

long long integral_pairing(const Rational& value, const char* what) {
    if (!value.is_integer() || !value.num().fits_longlong())
        throw DomainError(std::string(what) + ": pairing did not produce a small integer");
    return value.num().to_longlong();
}

}  // namespace

long long lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
    if (la.weight() > std::min(degree_cap(), kMaxDegreeCap))
        throw DomainError("lr_coefficient: |lambda| exceeds the degree cap");
    if (la.weight() != mu.weight() + nu.weight()) return 0;
    const int cap = la.weight();
    SymFunc prod = outer_product(SymFunc::basis_element(Basis::Schur, mu, cap),
                                 SymFunc::basis_element(Basis::Schur, nu, cap));
    return integral_pairing(hall_inner(prod, SymFunc::basis_element(Basis::Schur, la, cap)),
                            "lr_coefficient");
}

long long kronecker_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
    if (la.weight() != mu.weight() || la.weight() != nu.weight()) return 0;
    const int cap = std::max(la.weight(), 1);
    SymFunc prod = inner_product(SymFunc::basis_element(Basis::Schur, mu, cap),
                                 SymFunc::basis_element(Basis::Schur, nu, cap));
    return integral_pairing(hall_inner(prod, SymFunc::basis_element(Basis::Schur, la, cap)),
                            "kronecker_coefficient");
}

long long plethysm_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
    if (nu.weight() < 1) throw DomainError("plethysm_coefficient: |nu| must be at least 1");
    if (mu.weight() * nu.weight() > std::min(degree_cap(), kMaxDegreeCap))
        throw DomainError("plethysm_coefficient: |mu||nu| exceeds the degree cap");
    if (la.weight() != mu.weight() * nu.weight()) return 0;
    const int cap = std::max(la.weight(), 1);
    SymFunc pl = plethysm(SymFunc::basis_element(Basis::Schur, mu, cap),
                          SymFunc::basis_element(Basis::Schur, nu, cap));
    return integral_pairing(hall_inner(pl, SymFunc::basis_element(Basis::Schur, la, cap)),
                            "plethysm_coefficient");
}

namespace {

std::optional<Partition> parts_minus(const Partition& whole, const Partition& sub) {
    auto mw = whole.multiplicities();
    for (const auto& [part, count] : sub.multiplicities()) {
        auto it = mw.find(part);
        if (it == mw.end() || it->second < count) return std::nullopt;
        it->second -= count;
    }
    std::vector<int> rest;
    for (auto it = mw.rbegin(); it != mw.rend(); ++it)
        for (int k = 0; k < it->second; ++k) rest.push_back(it->first);
    return Partition(std::move(rest));
}

// adjoint of multiplication by g, applied to f (both already in the p basis):
// p_be^perp p_al = (z_al / z_{al \ be}) p_{al \ be}
SymFunc skew_by_p(const SymFunc& f, const SymFunc& g) {
    SymFunc out(Basis::Power, f.cap());
    for (const auto& [al, fa] : f.terms()) {
        Rational z_al(al.centralizer_order());
        for (const auto& [be, gb] : g.terms()) {
            auto rest = parts_minus(al, be);
            if (!rest) continue;
            Rational scale = z_al / Rational(rest->centralizer_order());
            out.add_term(*rest, fa * gb * scale);
        }
    }
    return out;
}

}  // namespace

SymFunc skew_schur(const Partition& la, const Partition& mu, int cap) {
    const int n = effective_cap(cap);
    if (la.weight() > n) throw DomainError("skew_schur: |lambda| exceeds the degree cap");
    SymFunc f = SymFunc::basis_element(Basis::Schur, la, n).to_basis(Basis::Power);
    if (mu.weight() > la.weight()) return SymFunc::zero(Basis::Schur, n);
    SymFunc g = SymFunc::basis_element(Basis::Schur, mu, n).to_basis(Basis::Power);
    return skew_by_p(f, g).to_basis(Basis::Schur);
}

SymFunc antipode(const SymFunc& f) {
    SymFunc p = f.to_basis(Basis::Power);
    SymFunc out(Basis::Power, f.cap());
    if (f.truncated()) out.mark_truncated();
    for (const auto& [la, c] : p.terms())
        out.add_term(la, la.length() % 2 == 0 ? c : -c);
    return out.to_basis(f.basis());
}

Rational counit(const SymFunc& f) { return f.coeff(Partition()); }

Rational inner_counit(const SymFunc& f) {
    SymFunc p = f.to_basis(Basis::Power);
    Rational out(0);
    for (const auto& [la, c] : p.terms()) out += c;
    return out;
}

// ---------------------------------------------------------------------------

CoordinateSequence::CoordinateSequence(std::map<int, Rational> v) : values(std::move(v)) {
    for (auto it = values.begin(); it != values.end();) {
        if (it->first < 1) throw DomainError("coordinate indices start at 1");
        if (it->second.is_zero()) it = values.erase(it);
        else ++it;
    }
}

Rational CoordinateSequence::at(int n) const {
    auto it = values.find(n);
    return it == values.end() ? Rational(0) : it->second;
}

void CoordinateSequence::set(int n, Rational v) {
    if (n < 1) throw DomainError("coordinate indices start at 1");
    if (v.is_zero()) values.erase(n);
    else values[n] = std::move(v);
}

Rational CoordinateSequence::monomial(const Partition& beta) const {
    Rational out(1);
    for (int part : beta.parts()) {
        Rational c = at(part);
        if (c.is_zero()) return Rational(0);
        out *= c;
    }
    return out;
}

CoordinateSequence CoordinateSequence::plus(const CoordinateSequence& other) const {
    CoordinateSequence out = *this;
    for (const auto& [n, v] : other.values) {
        auto [it, fresh] = out.values.emplace(n, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) out.values.erase(it);
        }
    }
    return out;
}

CoordinateSequence CoordinateSequence::times(const CoordinateSequence& other) const {
    CoordinateSequence out;
    for (const auto& [n, v] : values) {
        Rational w = other.at(n);
        if (!w.is_zero()) out.values.emplace(n, v * w);
    }
    return out;
}

CoordinateSequence CoordinateSequence::inflated(int m, int cap, bool* truncated) const {
    if (m < 1) throw DomainError("inflation factor must be a positive integer");
    CoordinateSequence out;
    for (const auto& [n, v] : values) {
        if (m * n > cap) {
            if (truncated) *truncated = true;
            continue;
        }
        out.values.emplace(m * n, Rational(m) * v);
    }
    return out;
}

std::string CoordinateSequence::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [n, v] : values) {
        if (!first) out.push_back(',');
        first = false;
        out += std::to_string(n) + ":" + v.to_string();
    }
    out.push_back('}');
    return out;
}

// ---------------------------------------------------------------------------

SeriesSpec SeriesSpec::m_series(int cap) { return {Kind::M, {}, {}, cap}; }
SeriesSpec SeriesSpec::l_series(int cap) { return {Kind::L, {}, {}, cap}; }
SeriesSpec SeriesSpec::group_like(CoordinateSequence c, int cap) {
    return {Kind::Mc, std::move(c), {}, cap};
}
SeriesSpec SeriesSpec::extended(CoordinateSequence c, CoordinateSequence d, int cap) {
    return {Kind::Mdc, std::move(c), std::move(d), cap};
}

SymFunc exp_power_series(const SymFunc& exponent) {
    if (exponent.basis() != Basis::Power)
        throw DomainError("exp_power_series expects a power-basis exponent");
    if (!counit(exponent).is_zero())
        throw DomainError("exp_power_series expects a zero constant term");
    SymFunc out = SymFunc::unit(Basis::Power, exponent.cap());
    SymFunc term = out;
    for (int k = 1; k <= exponent.cap(); ++k) {
        term = Rational(1, k) * outer_product(term, exponent);
        if (term.is_zero()) break;
        out = out + term;
    }
    // complete to the cap by construction
    SymFunc clean(Basis::Power, exponent.cap());
    for (const auto& [la, c] : out.terms()) clean.set_coeff(la, c);
    return clean;
}

SymFunc expand_series(const SeriesSpec& spec) {
    const int cap = effective_cap(spec.cap);
    SymFunc exponent(Basis::Power, cap);
    auto add_power = [&](int n, const Rational& c) {
        if (c.is_zero()) return;
        exponent.add_term(Partition({n}), c / Rational(n));
    };
    switch (spec.kind) {
        case SeriesSpec::Kind::M:
            for (int n = 1; n <= cap; ++n) add_power(n, Rational(1));
            break;
        case SeriesSpec::Kind::L:
            for (int n = 1; n <= cap; ++n) add_power(n, Rational(-1));
            break;
        case SeriesSpec::Kind::Mc:
            for (const auto& [n, c] : spec.coords.values)
                if (n <= cap) add_power(n, c);
            break;
        case SeriesSpec::Kind::Mdc:
            for (const auto& [n, c] : spec.coords.values)
                if (n <= cap) add_power(n, c);
            for (const auto& [k, d] : spec.second.values)
                if (2 * k <= cap)
                    exponent.add_term(Partition({k, k}), d * d / Rational(k));
            break;
    }
    return exp_power_series(exponent);
}

SymFunc elementary_from_l_series(const SymFunc& l_expansion, int m) {
    SymFunc slice = l_expansion.homogeneous_component(m);
    return m % 2 == 0 ? slice : -slice;
}

}  // namespace arw
