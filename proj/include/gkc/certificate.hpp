#pragma once

// Machine-checkable certificates: a split partition, a forbidden induced
// subgraph, or a chain of claims. Each claim carries a justification tag and
// a list of arithmetic facts; claims resting on group theory are marked as
// assumptions.

#include "gkc/graph.hpp"
#include "gkc/numtheory.hpp"
#include "gkc/splitcheck.hpp"

#include <json.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace gkc {

enum class Tag {
    Zsigmondy,
    Lemma5_2,
    Lemma5_3_ii,
    Lemma5_3_iii,
    Lemma5_3_iv,
    Lemma5_4,
    Lemma5_5_AK,
    Lemma5_6_AK,
    Lemma5_7_tor,
    Fermat,
    Arithmetic,
    Diagram,
    Table,
};

std::string to_string(Tag t);
std::optional<Tag> tag_from_string(const std::string& s);

/// A relation between concrete integers. Operations:
///   prime [x]            composite [x]         order [r, n, k]    raw_order [r, n, k]
///   divides [a, b]       ndivides [a, b]       lt/le/eq/ne [a, b]
///   lin_lt [a, x, b, y, c]   a*x <  b*y + c     lin_le: same with <=
///   sum_lt [a, b, c]     a + b < c             sum_gt [a, b, c]   a + b > c
///   affine2 [n, c, x]    n = 2x + c            eta [e, v]         nu [j, v]
///   ppd_nonempty [i, n]  (i, n) off the exception list           ppd_empty [i, n]
///   zsig_exception [n, i]    pi_part [a, k, v]  v = (a)_{pi(k)}   not_subset_pi [a, k]
///   primitive_root [p, n]
struct Fact {
    std::string op;
    std::vector<nt::Integer> args;
    std::string note;
};

Fact fact(std::string op, std::initializer_list<nt::Integer> args, std::string note = {});

struct Claim {
    std::string statement;
    Tag tag = Tag::Arithmetic;
    bool assumption = false;
    std::vector<Fact> facts;
};

struct Certificate {
    enum class Kind { Split, NonSplit, LemmaChain };

    Kind kind = Kind::LemmaChain;
    std::string subject;
    std::optional<Graph> graph;
    std::optional<SplitPartition> partition;
    std::optional<ForbiddenWitness> witness;
    std::vector<Claim> claims;

    Claim& add(std::string statement, Tag tag, bool assumption = false);
    void append(const Certificate& other);
    std::size_t fact_count() const;
    std::size_t assumption_count() const;
};

std::string to_string(Certificate::Kind k);

inline constexpr const char* kCertificateSchema = "gkc.certificate/1";

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Checks the partition or witness against the embedded graph, if both exist.
PartitionCheck check_structure(const Certificate& c);

class CertificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace gkc
