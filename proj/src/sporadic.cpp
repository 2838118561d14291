#include "gkc/groups.hpp"

#include <json.hpp>

namespace gkc {

namespace resources {
extern const std::string_view sporadic_json;
}

namespace {

using nlohmann::json;

nt::PrimeSet primes_of(const json& j) {
    nt::PrimeSet out;
    for (const auto& v : j) out.insert(v.get<std::uint64_t>());
    return out;
}

PrimePartition partition_of(const json& j) { return {primes_of(j.at("C")), primes_of(j.at("I"))}; }

}  // namespace

std::vector<SporadicRecord> parse_sporadic_table(const std::string& text) {
    const json doc = json::parse(text);
    if (doc.value("schema", "") != kSporadicSchema)
        throw std::runtime_error("sporadic data: expected schema " + std::string(kSporadicSchema));
    std::vector<SporadicRecord> out;
    for (const auto& g : doc.at("groups")) {
        SporadicRecord r;
        r.name = g.at("name").get<std::string>();
        if (g.contains("aliases")) r.aliases = g.at("aliases").get<std::vector<std::string>>();
        r.order = nt::Integer(g.at("order").get<std::string>());
        r.prime_partition = partition_of(g.at("prime_partition"));
        if (g.contains("solvable_partition")) r.solvable_partition = partition_of(g.at("solvable_partition"));
        if (g.contains("solvable_witness_W")) r.solvable_witness_W = primes_of(g.at("solvable_witness_W"));
        if (g.contains("known_solvable_edges")) {
            std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
            for (const auto& e : g.at("known_solvable_edges"))
                edges.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>());
            r.known_solvable_edges = edges;
        }
        if (g.contains("mu")) {
            const auto mu = g.at("mu").get<std::vector<std::uint64_t>>();
            r.mu = std::set<std::uint64_t>(mu.begin(), mu.end());
        }
        out.push_back(std::move(r));
    }
    return out;
}

const std::vector<SporadicRecord>& sporadic_table() {
    static const std::vector<SporadicRecord> table = parse_sporadic_table(std::string(resources::sporadic_json));
    return table;
}

const SporadicRecord& sporadic_record(const std::string& name) {
    for (const auto& r : sporadic_table())
        if (r.name == name) return r;
    throw DescriptorError("unknown sporadic group " + name);
}

}  // namespace gkc
