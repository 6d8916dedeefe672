#include "arw/coalgebra.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/stats.hpp"

namespace arw {

Tensor2::Tensor2(Basis left, Basis right, int cap) : left_(left), right_(right), cap_(cap) {
    if (cap_ < 0 || cap_ > kMaxDegreeCap) throw DomainError("tensor cap out of range");
}

Rational Tensor2::coeff(const Partition& left, const Partition& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor2::add_term(const Partition& left, const Partition& right, const Rational& value) {
    if (value.is_zero()) return;
    if (left.weight() > cap_ || right.weight() > cap_)
        throw DomainError("tensor leg weight exceeds the degree cap");
    auto key = std::make_pair(left, right);
    auto [it, fresh] = terms_.emplace(std::move(key), value);
    if (!fresh) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor2 Tensor2::to_basis(Basis left, Basis right) const {
    if (left == left_ && right == right_) return *this;
    Tensor2 out(left, right, cap_);
    out.truncated_ = truncated_;
    for (const auto& [key, c] : terms_) {
        SymFunc lf = SymFunc::basis_element(left_, key.first, cap_).to_basis(left);
        SymFunc rf = SymFunc::basis_element(right_, key.second, cap_).to_basis(right);
        for (const auto& [lp, lc] : lf.terms())
            for (const auto& [rp, rc] : rf.terms()) out.add_term(lp, rp, c * lc * rc);
    }
    return out;
}

Tensor2 Tensor2::operator-() const {
    Tensor2 out = *this;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
    Tensor2 rhs = b.to_basis(a.left_, a.right_);
    Tensor2 out = a;
    out.truncated_ = a.truncated_ || rhs.truncated_;
    for (const auto& [key, c] : rhs.terms_) out.add_term(key.first, key.second, c);
    return out;
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return a + (-b); }

bool Tensor2::same_element(const Tensor2& other) const {
    return to_basis(Basis::Power, Basis::Power).terms() ==
           other.to_basis(Basis::Power, Basis::Power).terms();
}

namespace {

long long binomial_small(int n, int k) {
    long long out = 1;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// all splittings of the multiset of parts into (left, right) with multiplicity
void split_multiset(const std::vector<std::pair<int, int>>& mults, size_t pos,
                    std::vector<int>& left_counts, long long coeff,
                    const std::function<void(const std::vector<int>&, long long)>& emit) {
    if (pos == mults.size()) {
        emit(left_counts, coeff);
        return;
    }
    const auto [part, count] = mults[pos];
    for (int k = 0; k <= count; ++k) {
        left_counts[pos] = k;
        split_multiset(mults, pos + 1, left_counts, coeff * binomial_small(count, k), emit);
    }
}

Partition from_counts(const std::vector<std::pair<int, int>>& mults,
                      const std::vector<int>& counts, bool complement) {
    std::vector<int> parts;
    for (size_t i = mults.size(); i-- > 0;) {
        int c = complement ? mults[i].second - counts[i] : counts[i];
        for (int k = 0; k < c; ++k) parts.push_back(mults[i].first);
    }
    return Partition(std::move(parts));
}

}  // namespace

Tensor2 outer_coproduct(const SymFunc& f) {
    SymFunc p = f.to_basis(Basis::Power);
    Tensor2 out(Basis::Power, Basis::Power, f.cap());
    if (f.truncated()) out.mark_truncated();
    for (const auto& [la, c] : p.terms()) {
        std::vector<std::pair<int, int>> mults;
        for (const auto& [part, count] : la.multiplicities()) mults.push_back({part, count});
        std::vector<int> counts(mults.size(), 0);
        split_multiset(mults, 0, counts, 1,
                       [&](const std::vector<int>& left_counts, long long coeff) {
                           out.add_term(from_counts(mults, left_counts, false),
                                        from_counts(mults, left_counts, true),
                                        Rational(coeff) * c);
                       });
    }
    return out.to_basis(Basis::Schur, Basis::Schur);
}

Tensor2 inner_coproduct(const SymFunc& f) {
    SymFunc p = f.to_basis(Basis::Power);
    Tensor2 out(Basis::Power, Basis::Power, f.cap());
    if (f.truncated()) out.mark_truncated();
    for (const auto& [la, c] : p.terms()) out.add_term(la, la, c);
    return out.to_basis(Basis::Schur, Basis::Schur);
}

Tensor2 plethysm_coproduct(const SymFunc& f) {
    if (!counit(f).is_zero())
        throw DomainError("plethysm coproduct is defined on zero-constant-term input only");
    SymFunc s = f.to_basis(Basis::Schur);
    Tensor2 out(Basis::Schur, Basis::Schur, f.cap());
    if (f.truncated()) out.mark_truncated();
    for (const auto& [la, c] : s.terms()) {
        const PlethysmTable& table = plethysm_table(la.weight());
        auto it = table.by_la.find(la);
        if (it == table.by_la.end()) continue;
        for (size_t row_index : it->second) {
            const PlethysmTableRow& row = table.rows[row_index];
            out.add_term(row.mu, row.nu, Rational(row.value) * c);
        }
    }
    return out;
}

namespace {

SymFunc pair_leg(const SymFunc& phi, const Tensor2& t, bool left_leg) {
    Tensor2 pp = t.to_basis(Basis::Power, Basis::Power);
    SymFunc phi_p = phi.to_basis(Basis::Power);
    SymFunc out(Basis::Power, t.cap());
    for (const auto& [key, c] : pp.terms()) {
        const Partition& paired = left_leg ? key.first : key.second;
        const Partition& kept = left_leg ? key.second : key.first;
        Rational pc = phi_p.coeff(paired);
        if (pc.is_zero()) continue;
        out.add_term(kept, c * pc * Rational(paired.centralizer_order()));
    }
    return out.to_basis(left_leg ? t.right_basis() : t.left_basis());
}

}  // namespace

SymFunc pair_left(const SymFunc& phi, const Tensor2& t) { return pair_leg(phi, t, true); }

SymFunc pair_right(const SymFunc& phi, const Tensor2& t) { return pair_leg(phi, t, false); }

Tensor2 tensor_product(const Tensor2& a, const Tensor2& b) {
    Tensor2 pa = a.to_basis(Basis::Power, Basis::Power);
    Tensor2 pb = b.to_basis(Basis::Power, Basis::Power);
    const int cap = std::min(a.cap(), b.cap());
    Tensor2 out(Basis::Power, Basis::Power, cap);
    if (a.truncated() || b.truncated()) out.mark_truncated();
    for (const auto& [ka, ca] : pa.terms()) {
        for (const auto& [kb, cb] : pb.terms()) {
            if (ka.first.weight() + kb.first.weight() > cap ||
                ka.second.weight() + kb.second.weight() > cap) {
                out.mark_truncated();
                continue;
            }
            out.add_term(ka.first.union_parts(kb.first), ka.second.union_parts(kb.second),
                         ca * cb);
        }
    }
    return out.to_basis(a.left_basis(), a.right_basis());
}

SymFunc multiply_legs(const Tensor2& t) {
    Tensor2 pp = t.to_basis(Basis::Power, Basis::Power);
    SymFunc out(Basis::Power, t.cap());
    if (t.truncated()) out.mark_truncated();
    for (const auto& [key, c] : pp.terms()) {
        if (key.first.weight() + key.second.weight() > t.cap()) {
            out.mark_truncated();
            continue;
        }
        out.add_term(key.first.union_parts(key.second), c);
    }
    return out.to_basis(t.left_basis());
}

// ---------------------------------------------------------------------------

void PlethysmTable::reindex() {
    by_la.clear();
    for (size_t i = 0; i < rows.size(); ++i) by_la[rows[i].la].push_back(i);
}

PlethysmTable PlethysmTable::compute(int degree) {
    PlethysmTable out;
    out.degree = degree;
    if (degree >= 1) {
        for (int a = 1; a <= degree; ++a) {
            if (degree % a != 0) continue;
            const int b = degree / a;
            for (const auto& mu : partitions_of(a)) {
                for (const auto& nu : partitions_of(b)) {
                    SymFunc pl = plethysm(SymFunc::basis_element(Basis::Schur, mu, degree),
                                          SymFunc::basis_element(Basis::Schur, nu, degree))
                                     .to_basis(Basis::Schur);
                    for (const auto& [la, c] : pl.terms()) {
                        if (!c.is_integer() || !c.num().fits_longlong())
                            throw DomainError("plethysm table: non-integral coefficient");
                        out.rows.push_back({la, mu, nu, c.num().to_longlong()});
                    }
                }
            }
        }
    }
    out.reindex();
    stats().pleth_tables_built.fetch_add(1, std::memory_order_relaxed);
    return out;
}

namespace {

std::mutex g_pleth_mutex;
std::map<int, std::unique_ptr<const PlethysmTable>> g_pleth_tables;

std::filesystem::path plethysm_cache_path(const std::filesystem::path& dir, int degree) {
    return dir / ("plethco-" + std::to_string(degree) + ".txt");
}

}  // namespace

const PlethysmTable& plethysm_table(int degree) {
    if (degree < 0 || degree > std::min(degree_cap(), kMaxDegreeCap))
        throw DomainError("plethysm_table: degree outside the configured cap");
    std::lock_guard<std::mutex> lock(g_pleth_mutex);
    auto it = g_pleth_tables.find(degree);
    if (it != g_pleth_tables.end()) return *it->second;

    if (auto dir = cache_dir()) {
        std::ifstream in(plethysm_cache_path(*dir, degree));
        if (in) {
            PlethysmTable loaded;
            if (read_plethysm_table(in, degree, loaded)) {
                stats().pleth_tables_loaded.fetch_add(1, std::memory_order_relaxed);
                auto stored = std::make_unique<const PlethysmTable>(std::move(loaded));
                const PlethysmTable& ref = *stored;
                g_pleth_tables.emplace(degree, std::move(stored));
                return ref;
            }
        }
    }

    auto stored = std::make_unique<const PlethysmTable>(PlethysmTable::compute(degree));
    const PlethysmTable& ref = *stored;
    g_pleth_tables.emplace(degree, std::move(stored));
    return ref;
}

void write_plethysm_table(const PlethysmTable& table, std::ostream& out) {
    out << "arw-plethco 1\n";
    out << "degree " << table.degree << "\n";
    for (const auto& row : table.rows)
        out << row.la.to_string() << '|' << row.mu.to_string() << '|' << row.nu.to_string()
            << '|' << row.value << '\n';
}

bool read_plethysm_table(std::istream& in, int expected_degree, PlethysmTable& out) {
    std::string line;
    if (!std::getline(in, line) || line != "arw-plethco 1") return false;
    if (!std::getline(in, line)) return false;
    {
        std::istringstream hdr(line);
        std::string word;
        int degree = -1;
        hdr >> word >> degree;
        if (word != "degree" || degree != expected_degree) return false;
    }
    out = PlethysmTable();
    out.degree = expected_degree;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t p1 = line.find('|');
        size_t p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
        size_t p3 = p2 == std::string::npos ? std::string::npos : line.find('|', p2 + 1);
        if (p3 == std::string::npos) return false;
        try {
            PlethysmTableRow row{Partition::from_string(line.substr(0, p1)),
                                 Partition::from_string(line.substr(p1 + 1, p2 - p1 - 1)),
                                 Partition::from_string(line.substr(p2 + 1, p3 - p2 - 1)),
                                 std::stoll(line.substr(p3 + 1))};
            if (row.la.weight() != expected_degree) return false;
            if (row.mu.weight() * row.nu.weight() != expected_degree) return false;
            out.rows.push_back(std::move(row));
        } catch (const std::exception&) {
            return false;
        }
    }
    out.reindex();
    return true;
}

}  // namespace arw
