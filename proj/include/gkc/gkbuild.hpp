#pragma once

// Prime graphs, compact forms and split partitions for every family of
// finite simple groups, and the non-splitness witnesses for linear groups.

#include "gkc/certificate.hpp"
#include "gkc/graph.hpp"
#include "gkc/groups.hpp"
#include "gkc/numtheory.hpp"
#include "gkc/splitcheck.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gkc {

// ---- alternating and symmetric groups

enum class AltSymKind { Alt, Sym };

/// Odd primes r, s are adjacent iff r + s <= n; 2 ~ r iff 2 + r <= n (Sym)
/// or 4 + r <= n (Alt).
Graph gk_altsym(AltSymKind kind, unsigned n);

/// C = primes <= floor(n/2), I = primes in (floor(n/2), n].
SplitPartition altsym_partition(unsigned n);

// ---- classical groups

class RankTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PhiContext {
    GroupDescriptor group;
    int epsilon = 1;
    unsigned n = 0;  // prk
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    nt::PrimeSet delta;

    bool linear_or_unitary() const;
};

PhiContext make_phi_context(const GroupDescriptor& g);

std::uint64_t nu(std::uint64_t n);
std::uint64_t eta(std::uint64_t n);
std::uint64_t nu_eps(int epsilon, std::uint64_t j);

/// phi(r, L); r must differ from the characteristic.
std::uint64_t phi(std::uint64_t r, const PhiContext& ctx);
/// The phi value attached to every prime of R_e(q).
std::uint64_t phi_of_e(std::uint64_t e, const PhiContext& ctx);

/// e-values e with R_e(q) contained in pi(|L|) (for q large enough).
std::set<std::uint64_t> present_e_values(const PhiContext& ctx);

std::set<std::uint64_t> j_set(const PhiContext& ctx);

struct ClassicalPartition {
    Graph graph;  // C a clique, I independent, no C-I edges asserted
    SplitPartition partition;
    Certificate certificate;
};

ClassicalPartition classical_compact_partition(const PhiContext& ctx);

// ---- diagrams for the remaining groups of Lie type

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kDiagramSchema = "gkc.diagrams/1";

const nlohmann::json& diagram_resource();

/// "A1", "A2", "B2", "B3", "G2", "F4", "E6", "E7", "E8", "2B2", "3D4",
/// "2G2", "2F4", "Tits"; empty when no diagram applies.
std::string diagram_family(const GroupDescriptor& g);

struct ExceptionalResult {
    std::string diagram_id;
    Graph graph;  // vertices are classes carrying their primes
    std::vector<SplitPartition> stated;  // every partition the text states for this case
    std::vector<PartitionCheck> stated_checks;
    SplitPartition partition;  // the first valid stated one, else from the degree test
    bool stated_partition_valid = false;
    Certificate certificate;
};

ExceptionalResult exceptional_compact(const GroupDescriptor& g);

/// Replaces each class by a clique on its primes; adjacent classes become
/// complete bipartite.
Graph expand_class_graph(const Graph& classes);

// ---- non-splitness (linear groups)

Certificate lemma52_check(std::uint64_t k, std::uint64_t p, unsigned a);

struct LinearWitness {
    std::uint64_t k1 = 0, k2 = 0;
    std::uint64_t r1 = 0, r2 = 0;  // in R_{k1}(q)
    std::uint64_t s1 = 0, s2 = 0;  // in R_{k2}(q)
    Graph model;                    // r1 - r2, s1 - s2
    ForbiddenWitness witness;
    Certificate certificate;
};

LinearWitness nonsplit_witness_linear(unsigned n, std::uint64_t p, unsigned a);

Certificate sc_nonsplit_certificate(std::uint64_t n, std::uint64_t p);

Certificate prop72_certificate(std::uint64_t u, std::uint64_t w, std::uint64_t p);

struct Psl11Result {
    Graph graph;
    ForbiddenWitness witness;
    Certificate certificate;
};

Psl11Result psl11_2_sc();

/// Primes n in [3, N] with p a primitive root modulo n.
std::vector<std::uint64_t> artin_pairs(std::uint64_t p, std::uint64_t N);

// ---- compact graphs of every simple group

struct TheoremDResult {
    GroupDescriptor group;
    std::string method;  // "cyclic", "altsym", "sporadic", "spectrum", "classical", "diagram"
    Graph graph;          // compact form or class graph
    SplitVerdict verdict;
    Certificate certificate;
    bool partition_valid = false;
    std::vector<std::string> notes;
};

TheoremDResult theorem_d_verify(const GroupDescriptor& g);

}  // namespace gkc
