#include "arw/characters.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "arw/config.hpp"
#include "arw/errors.hpp"
#include "arw/stats.hpp"

namespace arw {

CharacterTable::CharacterTable(int degree, std::vector<std::vector<long long>> values)
    : degree_(degree), values_(std::move(values)) {
    const size_t count = partitions_of(degree_).size();
    if (values_.size() != count)
        throw DomainError("character table has the wrong number of rows");
    for (const auto& row : values_)
        if (row.size() != count) throw DomainError("character table has a ragged row");
}

const std::vector<Partition>& CharacterTable::index() const { return partitions_of(degree_); }

long long CharacterTable::value(const Partition& la, const Partition& mu) const {
    if (la.weight() != degree_ || mu.weight() != degree_)
        throw DomainError("character_value: partition weights must match the table degree");
    const auto& idx = index();
    auto find = [&](const Partition& p) {
        auto it = std::lower_bound(idx.begin(), idx.end(), p);
        return static_cast<size_t>(it - idx.begin());
    };
    return values_[find(la)][find(mu)];
}

namespace {

// Border strips via the abacus: beta numbers b_i = la_i + (L - i) are strictly
// decreasing; a removable strip of size r is a beta number b with b - r >= 0 and
// b - r not among the betas; its height is the number of betas strictly between.
struct StripRemoval {
    Partition rest;
    int height;
};

std::vector<StripRemoval> removable_strips(const Partition& la, int r) {
    std::vector<StripRemoval> out;
    const auto& parts = la.parts();
    const int len = la.length();
    std::vector<long long> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
    for (int i = 0; i < len; ++i) {
        long long target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<long long>());
        std::vector<int> rest(len);
        for (int k = 0; k < len; ++k) rest[k] = static_cast<int>(nb[k] - (len - 1 - k));
        out.push_back({Partition(std::move(rest)), between});
    }
    return out;
}

using Memo = std::map<std::pair<Partition, Partition>, long long>;

long long mn_recurse(const Partition& la, const Partition& mu, Memo& memo) {
    if (mu.empty()) return la.empty() ? 1 : 0;
    auto key = std::make_pair(la, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int r = mu.parts()[0];   // largest part first
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    Partition rest(std::move(rest_parts));

    long long total = 0;
    for (const auto& strip : removable_strips(la, r)) {
        long long sub = mn_recurse(strip.rest, rest, memo);
        total += (strip.height % 2 == 0) ? sub : -sub;
    }
    stats().char_cells_computed.fetch_add(1, std::memory_order_relaxed);
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex g_table_mutex;
std::map<int, std::unique_ptr<const CharacterTable>> g_tables;

std::filesystem::path character_cache_path(const std::filesystem::path& dir, int degree) {
    return dir / ("chartable-" + std::to_string(degree) + ".txt");
}

}  // namespace

CharacterTable compute_character_table(int n) {
    const auto& idx = partitions_of(n);
    Memo memo;
    std::vector<std::vector<long long>> values(idx.size(), std::vector<long long>(idx.size(), 0));
    for (size_t li = 0; li < idx.size(); ++li)
        for (size_t mi = 0; mi < idx.size(); ++mi)
            values[li][mi] = mn_recurse(idx[li], idx[mi], memo);
    stats().char_tables_built.fetch_add(1, std::memory_order_relaxed);
    return CharacterTable(n, std::move(values));
}

long long character_value(const Partition& la, const Partition& mu) {
    if (la.weight() != mu.weight())
        throw DomainError("character_value: |lambda| and |mu| must agree");
    return character_table(la.weight()).value(la, mu);
}

const CharacterTable& character_table(int n) {
    if (n < 0 || n > degree_cap())
        throw DomainError("character_table: degree outside the configured cap");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return *it->second;

    if (auto dir = cache_dir()) {
        std::ifstream in(character_cache_path(*dir, n));
        if (in) {
            CharacterTable loaded(0, {{1}});
            if (read_character_table(in, n, loaded)) {
                stats().char_tables_loaded.fetch_add(1, std::memory_order_relaxed);
                auto stored = std::make_unique<const CharacterTable>(std::move(loaded));
                const CharacterTable& ref = *stored;
                g_tables.emplace(n, std::move(stored));
                return ref;
            }
        }
    }

    auto stored = std::make_unique<const CharacterTable>(compute_character_table(n));
    const CharacterTable& ref = *stored;
    g_tables.emplace(n, std::move(stored));
    return ref;
}

void write_character_table(const CharacterTable& table, std::ostream& out) {
    out << "arw-chartable 1\n";
    out << "degree " << table.degree() << "\n";
    const auto& idx = table.index();
    for (size_t li = 0; li < idx.size(); ++li)
        for (size_t mi = 0; mi < idx.size(); ++mi)
            out << idx[li].to_string() << '|' << idx[mi].to_string() << '|'
                << table.value_at(li, mi) << '\n';
}

bool read_character_table(std::istream& in, int expected_degree, CharacterTable& out) {
    std::string line;
    if (!std::getline(in, line) || line != "arw-chartable 1") return false;
    if (!std::getline(in, line)) return false;
    {
        std::istringstream hdr(line);
        std::string word;
        int degree = -1;
        hdr >> word >> degree;
        if (word != "degree" || degree != expected_degree) return false;
    }
    const auto& idx = partitions_of(expected_degree);
    std::vector<std::vector<long long>> values(idx.size(), std::vector<long long>(idx.size(), 0));
    for (size_t li = 0; li < idx.size(); ++li) {
        for (size_t mi = 0; mi < idx.size(); ++mi) {
            if (!std::getline(in, line)) return false;
            size_t p1 = line.find('|');
            size_t p2 = p1 == std::string::npos ? std::string::npos : line.find('|', p1 + 1);
            if (p2 == std::string::npos) return false;
            try {
                if (Partition::from_string(line.substr(0, p1)) != idx[li]) return false;
                if (Partition::from_string(line.substr(p1 + 1, p2 - p1 - 1)) != idx[mi])
                    return false;
                values[li][mi] = std::stoll(line.substr(p2 + 1));
            } catch (const std::exception&) {
                return false;
            }
        }
    }
    out = CharacterTable(expected_degree, std::move(values));
    return true;
}

}  // namespace arw
