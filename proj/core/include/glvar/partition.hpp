#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "glvar/error.hpp"

namespace glvar {

/// A partition: weakly decreasing sequence of positive integers.
/// The empty sequence is the empty partition. Immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Validates weak decrease and strips trailing zeros; throws
    /// std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based; 0 beyond the last row.
    int part(int i) const { return i < rows() ? parts_[static_cast<size_t>(i)] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    /// Young-diagram containment: this_i <= other_i for all rows.
    bool fits_inside(const Partition& other) const;

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    /// Canonical order: by size, then lexicographic on parts.
    std::strong_ordering operator<=>(const Partition& o) const;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Finite multiset of partitions. Canonical storage sorts entries
/// descending by (size, lexicographic parts), so equality is structural.
class PartitionTuple {
public:
    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> entries);

    int count() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Partition>& entries() const { return entries_; }
    const Partition& entry(int i) const { return entries_[static_cast<size_t>(i)]; }

    /// True iff the empty partition does not occur.
    bool is_pure() const;
    /// Maximal entry size; 0 for the empty tuple.
    int degree() const;
    /// Multiplicity of a given partition.
    int multiplicity(const Partition& p) const;

    bool operator==(const PartitionTuple&) const = default;
    std::strong_ordering operator<=>(const PartitionTuple&) const = default;

    std::string str() const;

private:
    std::vector<Partition> entries_; // sorted descending by (size, parts)
};

/// Per-size entry counts of a tuple, trailing zeros trimmed.
class Magnitude {
public:
    Magnitude() = default;
    explicit Magnitude(std::vector<long> counts);

    const std::vector<long>& counts() const { return counts_; }
    long at(int i) const {
        return i < static_cast<int>(counts_.size()) ? counts_[static_cast<size_t>(i)] : 0;
    }

    bool operator==(const Magnitude&) const = default;
    std::string str() const;

private:
    std::vector<long> counts_;
};

Magnitude magnitude(const PartitionTuple& t);

/// Lexicographic comparison from the largest index where the (zero-padded)
/// count sequences disagree. A total order.
std::strong_ordering compare_magnitude(const Magnitude& a, const Magnitude& b);

/// Componentwise sum.
Magnitude magnitude_sum(const Magnitude& a, const Magnitude& b);

/// Multiset inclusion: every partition occurs in `big` with multiplicity
/// at least its multiplicity in `small`.
bool contains(const PartitionTuple& big, const PartitionTuple& small);

/// Multiset union.
PartitionTuple tuple_union(const PartitionTuple& a, const PartitionTuple& b);

/// Multiset difference; throws std::invalid_argument unless contains(a, b).
PartitionTuple tuple_minus(const PartitionTuple& a, const PartitionTuple& b);

/// Text grammar: partition "[2,1]", empty partition "[]",
/// tuple "[[2],[1,1]]", empty tuple "[]". Whitespace-insensitive.
Partition parse_partition(std::string_view text);
PartitionTuple parse_tuple(std::string_view text);

/// All partitions of n, descending in the canonical order.
std::vector<Partition> partitions_of(int n);

/// All sub-multisets of t, the full tuple included.
std::vector<PartitionTuple> subtuples(const PartitionTuple& t);

} // namespace glvar
