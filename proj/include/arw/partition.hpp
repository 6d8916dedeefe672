#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace arw {

/// Integer partition: weakly decreasing positive parts. The empty sequence is
/// the unique partition of 0. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses the bracket form used everywhere in text I/O: "[4,2,2,1]", "[]".
    static Partition from_string(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }

    /// Column lengths of the Young diagram, left to right. Involutive.
    Partition conjugate() const;

    /// z_lambda = prod i^{m_i} m_i!, the centralizer order of a permutation of
    /// this cycle type. Requires weight <= 20 so the result fits 64 bits.
    long long centralizer_order() const;

    /// n(lambda) = sum (i-1) * lambda_i.
    long long n_stat() const;

    /// Content j - i of box (row, col), 1-based. Throws DomainError outside the diagram.
    int content(int row, int col) const;

    /// Hook length lambda_i + lambda'_j - i - j + 1 of box (row, col), 1-based.
    int hook_length(int row, int col) const;

    /// Multiplicity of the part value i.
    int multiplicity(int i) const;
    std::map<int, int> multiplicities() const;

    /// Multiset union of parts (the index rule for products of power sums).
    Partition union_parts(const Partition& other) const;

    /// Every part multiplied by m (the plethysm index-inflation rule).
    Partition scaled(int m) const;

    /// "[4,2,2,1]", "[]" for the empty partition.
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    /// Canonical total order: by weight, then reverse lexicographic within a
    /// weight ((4) before (3,1) before ... before (1,1,1,1)).
    std::strong_ordering operator<=>(const Partition& rhs) const;

private:
    std::vector<int> parts_;
};

/// All partitions of n in the canonical (reverse lexicographic) order.
/// Memoized; the returned reference stays valid for the process lifetime.
/// Throws DomainError when n exceeds the configured degree cap.
const std::vector<Partition>& partitions_of(int n);

/// p(n), via the enumeration above.
long long partition_count(int n);

}  // namespace arw
