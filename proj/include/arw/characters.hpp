#pragma once

#include <iosfwd>
#include <vector>

#include "arw/partition.hpp"

namespace arw {

/// Complete table of irreducible symmetric-group character values chi^lambda_mu
/// for one degree n, indexed by the canonical partition order. Immutable.
class CharacterTable {
public:
    CharacterTable(int degree, std::vector<std::vector<long long>> values);

    int degree() const { return degree_; }
    const std::vector<Partition>& index() const;

    long long value(const Partition& la, const Partition& mu) const;
    long long value_at(size_t row, size_t col) const { return values_[row][col]; }

    bool operator==(const CharacterTable&) const = default;

private:
    int degree_;
    std::vector<std::vector<long long>> values_;   // [lambda index][mu index]
};

/// chi^lambda_mu by the Murnaghan-Nakayama border-strip recursion; strips are
/// removed for the largest remaining part of mu first. Requires |la| == |mu|.
long long character_value(const Partition& la, const Partition& mu);

/// Memoized table for degree n; loads from the configured cache directory when
/// a valid file is present, otherwise computes. Thread-safe, single writer.
const CharacterTable& character_table(int n);

/// Fresh computation, ignoring both memo and disk (cache-verification path).
CharacterTable compute_character_table(int n);

/// Cache file format: versioned two-line header, then one "la|mu|value" row per
/// ordered pair in canonical order.
void write_character_table(const CharacterTable& table, std::ostream& out);
bool read_character_table(std::istream& in, int expected_degree, CharacterTable& out);

}  // namespace arw
