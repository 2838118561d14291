#pragma once

// Split-graph recognition: the degree-sequence equality test and the
// forbidden-subgraph test, plus split partition checking and extraction.

#include "gkc/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace gkc {

struct SplitPartition {
    VertexList C;  // clique side
    VertexList I;  // independent side
    bool special = false;
};

struct SplitVerdict {
    bool split = false;
    std::size_t m_index = 0;
    std::optional<SplitPartition> partition;
    std::optional<ForbiddenWitness> forbidden;
};

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The two recognizers disagreed. Never expected; surfaced rather than repaired.
class SplitInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Vertex indices ordered by non-increasing degree, ties by label order.
std::vector<std::size_t> degree_order(const Graph& g);

/// max{i : d_i >= i - 1}; requires a nonempty graph.
std::size_t m_index(const Graph& g);

/// sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i
bool degree_criterion(const Graph& g);

SplitVerdict is_split_degree(const Graph& g);
SplitVerdict is_split_forbidden(const Graph& g);

struct PartitionCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

PartitionCheck validate_partition(const Graph& g, const SplitPartition& p);

/// Is every vertex of I missing some vertex of C?
bool is_special(const Graph& g, const SplitPartition& p);

/// Moves I-vertices adjacent to all of C into C until the partition is special.
SplitPartition specialize(const Graph& g, SplitPartition p);

}  // namespace gkc
