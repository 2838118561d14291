#pragma once

// Finite simple graphs over labeled vertices, with induced subgraphs,
// components, closed neighbourhoods and the compact-form quotient.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkc {

/// A vertex label: either a prime, or a named class of primes (an R_i set,
/// a union such as R1 u R2 u {p}, and so on).
struct Label {
    enum class Kind { Prime, Class };

    Kind kind = Kind::Prime;
    std::uint64_t prime = 0;
    std::string name;
    std::vector<std::uint64_t> members;  // sorted; classes only

    static Label of_prime(std::uint64_t p);
    static Label of_class(std::string name, std::vector<std::uint64_t> members = {});

    bool is_prime() const { return kind == Kind::Prime; }
    std::string str() const;

    // Identity is (kind, prime) or (kind, name); members are payload.
    bool operator==(const Label& o) const;
    bool operator<(const Label& o) const;
};

using VertexList = std::vector<Label>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class UnknownVertex : public GraphError {
public:
    using GraphError::GraphError;
};
class LoopEdge : public GraphError {
public:
    using GraphError::GraphError;
};

class Graph {
public:
    Graph() = default;

    /// Duplicate vertices and repeated edges are collapsed; vertices are
    /// stored sorted.
    static Graph from_edges(VertexList vertices, const std::vector<std::pair<Label, Label>>& edges);
    static Graph from_primes(const std::vector<std::uint64_t>& vertices,
                             const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    const VertexList& vertices() const { return vertices_; }
    const Label& vertex(std::size_t i) const { return vertices_[i]; }

    std::optional<std::size_t> find(const Label& v) const;
    std::size_t index_of(const Label& v) const;  // throws UnknownVertex

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i][j] != 0; }
    bool adjacent(const Label& a, const Label& b) const { return adjacent(index_of(a), index_of(b)); }
    std::size_t degree(std::size_t i) const;
    std::vector<std::size_t> neighbors(std::size_t i) const;
    std::size_t edge_count() const;
    /// Edges as index pairs (i < j), lexicographic.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::vector<std::pair<Label, Label>> edge_labels() const;

    Graph induced(const VertexList& subset) const;
    Graph induced_indices(const std::vector<std::size_t>& subset) const;
    Graph complement() const;

    bool operator==(const Graph& o) const;

private:
    void build_index();

    VertexList vertices_;
    std::vector<std::vector<char>> adj_;
    std::map<Label, std::size_t> index_;
};

/// {v} together with all neighbours of v, sorted.
VertexList closed_nbhd(const Graph& g, const Label& v);
std::vector<VertexList> components(const Graph& g);
bool is_clique(const Graph& g, const VertexList& subset);
bool is_independent(const Graph& g, const VertexList& subset);

struct CompactForm {
    Graph quotient;                               // one vertex per class, labelled by its smallest member
    std::map<Label, Label> class_map;             // source vertex -> class label
    std::map<Label, VertexList> class_contents;   // class label -> members (sorted, nonempty)

    bool trivial() const;  // every class is a singleton
};

CompactForm compact_form(const Graph& g);

enum class ForbiddenKind { TwoK2, C4, C5 };
std::string to_string(ForbiddenKind kind);
std::optional<ForbiddenKind> forbidden_kind_from_string(const std::string& s);

/// An induced 2K2 (edges v0v1, v2v3), C4 or C5 (cyclic order) in a graph.
struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::TwoK2;
    VertexList vertices;
};

/// Does the witness name an induced subgraph of the stated shape?
bool witness_holds(const Graph& g, const ForbiddenWitness& w);

/// Exhaustive search over 4- and 5-subsets in lexicographic index order;
/// 4-subsets (2K2, C4) are exhausted before any C5 is looked for.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g);

/// Are the two graphs isomorphic? Brute force with degree pruning; meant for
/// the small class graphs in this library.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace gkc
