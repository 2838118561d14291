#pragma once

// Finite simple group descriptors, their orders and prime spectra, element
// order spectra and the graphs they induce, and the embedded sporadic data.

#include "gkc/graph.hpp"
#include "gkc/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkc {

enum class LieFamily {
    A, A2,  // A_n, 2A_n
    B, C, D, D2,
    G2, F4, E6, E62, E7, E8,
    B22, G22, F42, D43,  // 2B2, 2G2, 2F4, 3D4
};

bool is_classical(LieFamily f);
std::string family_name(LieFamily f);  // "A", "2A", ..., "3D4"

class DescriptorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotSimple : public DescriptorError {
public:
    using DescriptorError::DescriptorError;
};
class InvalidField : public DescriptorError {
public:
    using DescriptorError::DescriptorError;
};

struct GroupDescriptor {
    enum class Kind { Cyclic, Alternating, Symmetric, Sporadic, Lie };

    Kind kind = Kind::Cyclic;
    unsigned n = 0;  // degree for Alt/Sym, Lie rank for Lie type
    LieFamily family = LieFamily::A;
    std::uint64_t p = 0;  // characteristic, or the order of a cyclic group
    unsigned a = 0;       // q = p^a
    std::string sporadic;  // canonical sporadic name; "2F4(2)'" for the Tits group

    static GroupDescriptor cyclic(std::uint64_t p);
    static GroupDescriptor alternating(unsigned n);
    static GroupDescriptor symmetric(unsigned n);
    /// Accepts canonical names and the usual aliases (F1, F2, O'N, Tits, ...).
    static GroupDescriptor sporadic_group(const std::string& name);
    /// Validates field size and simplicity; normalizes C2 -> B2, D3 -> A3,
    /// 2D3 -> 2A3, 2D2(q) -> A1(q^2).
    static GroupDescriptor lie(LieFamily family, unsigned rank, std::uint64_t q);

    bool is_tits() const { return kind == Kind::Sporadic && sporadic == "2F4(2)'"; }
    std::uint64_t q() const;
    int epsilon() const;  // -1 for 2A, 2D, 2E6; +1 otherwise
    /// Dimension for linear/unitary groups, Lie rank for the other classical ones.
    unsigned prk() const;
    std::string name() const;

    bool operator==(const GroupDescriptor&) const = default;
};

nt::Integer order(const GroupDescriptor& g);
nt::PrimeSet prime_spectrum(const GroupDescriptor& g);

struct SpectrumData {
    GroupDescriptor group;
    std::set<std::uint64_t> mu;
};

class UnsupportedFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Keeps only the elements not dividing another element.
std::set<std::uint64_t> maximal_elements(const std::set<std::uint64_t>& values);

/// Vertices: primes dividing some element of mu; r ~ s iff rs divides some element.
Graph gk_from_spectrum(const SpectrumData& s);

/// The maximal element orders for A1(q), B2(q), 2B2(q), 2G2(q), B3(3) = C3(3)
/// and the Tits group.
SpectrumData spectrum_formulas(const GroupDescriptor& g);

/// Antichain, nonempty, and pi(mu) == pi(|G|); returns a reason on failure.
std::optional<std::string> spectrum_problem(const SpectrumData& s);

struct PrimePartition {
    nt::PrimeSet C;
    nt::PrimeSet I;
};

struct SporadicRecord {
    std::string name;
    std::vector<std::string> aliases;
    nt::Integer order;
    PrimePartition prime_partition;
    std::optional<PrimePartition> solvable_partition;
    std::optional<nt::PrimeSet> solvable_witness_W;
    std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> known_solvable_edges;
    std::set<std::uint64_t> mu;  // only the Tits group carries one
};

inline constexpr const char* kSporadicSchema = "gkc.sporadic/1";

/// The 26 sporadic groups followed by the Tits group.
const std::vector<SporadicRecord>& sporadic_table();
const SporadicRecord& sporadic_record(const std::string& name);
std::vector<SporadicRecord> parse_sporadic_table(const std::string& json_text);

/// Problems with a record: C and I overlapping, C u I differing from pi(|G|),
/// W not inside pi(|G|). Empty when consistent.
std::vector<std::string> sporadic_problems(const SporadicRecord& r);

}  // namespace gkc
