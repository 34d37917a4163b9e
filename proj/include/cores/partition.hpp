#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cores {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is a first-class value. Immutable after construction, so
/// instances can be shared freely across threads.
class Partition {
public:
    Partition() = default;

    /// Validates that `parts` is weakly decreasing with every entry >= 1
    /// (the empty list is allowed). Throws std::invalid_argument otherwise.
    static Partition from_parts(std::vector<std::int64_t> parts);

    /// Parses the bracket form "[5,2,2]"; "[]" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t rows() const { return parts_.size(); }
    bool is_empty() const { return parts_.empty(); }

    /// Sum of parts.
    std::int64_t size() const;

    /// Transpose of the Young diagram (column lengths).
    Partition conjugate() const;

    /// Bracket form, e.g. "[5,2,2]"; the empty partition prints as "[]".
    std::string str() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Hook lengths, one row per part, jagged. Rows and columns are 0-indexed
/// internally (the usual textbook convention is 1-indexed).
using HookTable = std::vector<std::vector<std::int64_t>>;

/// Full hook-length table. Entry (i,j) = parts[i] - j + conj[j] - i - 1,
/// computed from the conjugate in O(rows + parts[0]) precomputation.
HookTable hook_table(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace cores
