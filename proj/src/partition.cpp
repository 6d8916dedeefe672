#include "arw/partition.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>

#include "arw/config.hpp"
#include "arw/errors.hpp"

namespace arw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    // trailing zeros are tolerated on input and stripped
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_string(std::string_view text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos || text[a] != '[' || text[b] != ']')
        throw DomainError("partition text must look like [4,2,2,1]");
    std::string_view body = text.substr(a + 1, b - a - 1);
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
        if (pos >= body.size()) break;
        int value = 0;
        bool any = false;
        while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') {
            value = value * 10 + (body[pos] - '0');
            if (value > 1000000) throw DomainError("partition part out of range");
            ++pos;
            any = true;
        }
        if (!any) throw DomainError("partition text must list nonnegative integers");
        parts.push_back(value);
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
        if (pos < body.size()) {
            if (body[pos] != ',') throw DomainError("partition parts must be comma separated");
            ++pos;
        }
    }
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> cols(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

long long Partition::centralizer_order() const {
    if (weight() > kMaxDegreeCap)
        throw DomainError("centralizer order only supported up to weight 20");
    long long z = 1;
    int run = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        ++run;
        z *= parts_[i];
        if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
            for (int k = 2; k <= run; ++k) z *= k;
            run = 0;
        }
    }
    return z;
}

long long Partition::n_stat() const {
    long long total = 0;
    for (size_t i = 0; i < parts_.size(); ++i) total += static_cast<long long>(i) * parts_[i];
    return total;
}

int Partition::content(int row, int col) const {
    if (row < 1 || row > length() || col < 1 || col > parts_[row - 1])
        throw DomainError("box outside the Young diagram");
    return col - row;
}

int Partition::hook_length(int row, int col) const {
    if (row < 1 || row > length() || col < 1 || col > parts_[row - 1])
        throw DomainError("box outside the Young diagram");
    int col_len = 0;
    for (int p : parts_)
        if (p >= col) ++col_len;
    return parts_[row - 1] + col_len - row - col + 1;
}

int Partition::multiplicity(int i) const {
    int m = 0;
    for (int p : parts_)
        if (p == i) ++m;
    return m;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> out;
    for (int p : parts_) ++out[p];
    return out;
}

Partition Partition::union_parts(const Partition& other) const {
    std::vector<int> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged), std::greater<int>());
    return Partition(std::move(merged));
}

Partition Partition::scaled(int m) const {
    if (m < 1) throw DomainError("scaling factor must be positive");
    std::vector<int> out = parts_;
    for (int& p : out) p *= m;
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(parts_[i]);
    }
    out.push_back(']');
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& rhs) const {
    int wa = weight(), wb = rhs.weight();
    if (wa != wb) return wa <=> wb;
    // reverse lexicographic: larger leading parts come first
    size_t n = std::min(parts_.size(), rhs.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (parts_[i] != rhs.parts_[i]) return rhs.parts_[i] <=> parts_[i];
    return parts_.size() <=> rhs.parts_.size();
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

std::mutex g_enum_mutex;
std::vector<std::unique_ptr<const std::vector<Partition>>> g_enum_cache;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of: negative weight");
    if (n > degree_cap() || n > kMaxEnumerationDegree)
        throw DomainError("partitions_of: weight " + std::to_string(n) +
                          " exceeds the degree cap");
    std::lock_guard<std::mutex> lock(g_enum_mutex);
    if (static_cast<size_t>(n) >= g_enum_cache.size()) g_enum_cache.resize(n + 1);
    if (!g_enum_cache[n]) {
        auto list = std::make_unique<std::vector<Partition>>();
        std::vector<int> prefix;
        enumerate(n, n == 0 ? 1 : n, prefix, *list);
        g_enum_cache[n] = std::move(list);
    }
    return *g_enum_cache[n];
}

long long partition_count(int n) { return static_cast<long long>(partitions_of(n).size()); }

}  // namespace arw
