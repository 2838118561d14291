#include "gkc/audit.hpp"
#include "gkc/descriptor_parse.hpp"
#include "gkc/gkbuild.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gkc;

namespace {
Label C(const std::string& name) { return Label::of_class(name); }

bool has(const VertexList& side, const std::string& name) {
    return std::find(side.begin(), side.end(), C(name)) != side.end();
}

const Label& find_class(const Graph& g, const std::string& name) { return g.vertex(g.index_of(C(name))); }
}  // namespace

TEST_CASE("nu, eta and phi") {
    CHECK(nu(4) == 4);
    CHECK(nu(6) == 3);
    CHECK(nu(3) == 6);
    for (std::uint64_t n = 1; n < 40; ++n) CHECK(nu(nu(n)) == n);
    CHECK(eta(5) == 5);
    CHECK(eta(8) == 4);
    CHECK(nu_eps(1, 6) == 6);
    CHECK(nu_eps(-1, 6) == 3);

    const auto ctx = make_phi_context(parse_descriptor("C4(3)"));
    CHECK(ctx.n == 4);
    CHECK(ctx.delta == nt::PrimeSet{2});
    CHECK(phi_of_e(8, ctx) == 4);
    CHECK(phi(41, ctx) == 4);  // 41 lies in R_8(3)
    CHECK(j_set(ctx) == std::set<std::uint64_t>{3, 6, 8});
}

TEST_CASE("PSL5(2)") {
    const auto ctx = make_phi_context(parse_descriptor("A4(2)"));
    CHECK(j_set(ctx) == std::set<std::uint64_t>{3, 4, 5});
    const auto cp = classical_compact_partition(ctx);
    CHECK(has(cp.partition.C, "{p}"));
    CHECK(has(cp.partition.C, "R2"));
    CHECK(find_class(cp.graph, "R2").members == std::vector<std::uint64_t>{3});
    CHECK(find_class(cp.graph, "R3").members == std::vector<std::uint64_t>{7});
    CHECK(find_class(cp.graph, "R4").members == std::vector<std::uint64_t>{5});
    CHECK(find_class(cp.graph, "R5").members == std::vector<std::uint64_t>{31});
    CHECK(cp.partition.I.size() == 3);
    CHECK_FALSE(cp.graph.find(C("R1")));  // R_1(2) is empty
    CHECK(validate_partition(cp.graph, cp.partition));
    CHECK(audit(cp.certificate).ok());
}

TEST_CASE("PSL13(4): I is R7 ... R13") {
    const auto cp = classical_compact_partition(make_phi_context(parse_descriptor("A12(4)")));
    CHECK(cp.partition.I.size() == 7);
    for (int e = 7; e <= 13; ++e) CHECK(has(cp.partition.I, "R" + std::to_string(e)));
    CHECK(find_class(cp.graph, "R7").members == std::vector<std::uint64_t>{43, 127});
    CHECK(audit(cp.certificate).ok());
}

TEST_CASE("unitary and delta primes") {
    const auto cp = classical_compact_partition(make_phi_context(parse_descriptor("2A5(3)")));
    CHECK(has(cp.partition.C, "{2}"));
    CHECK(has(cp.partition.C, "R6"));
    for (const char* n : {"R3", "R4", "R10"}) CHECK(has(cp.partition.I, n));
    CHECK(validate_partition(cp.graph, cp.partition));
    CHECK(audit(cp.certificate).ok());
}

TEST_CASE("small rank is rejected") {
    CHECK_THROWS_AS(classical_compact_partition(make_phi_context(parse_descriptor("B3(5)"))), RankTooSmall);
}

TEST_CASE("I-classes satisfy the non-adjacency arithmetic across a grid") {
    for (const char* g : {"A9(3)", "2A9(4)", "B6(3)", "C7(5)", "D8(2)", "2D5(3)", "A19(9)", "2D12(5)"}) {
        CAPTURE(g);
        const auto ctx = make_phi_context(parse_descriptor(g));
        const auto cp = classical_compact_partition(ctx);
        CHECK(validate_partition(cp.graph, cp.partition));
        CHECK(audit(cp.certificate).ok());
        for (const auto& i : cp.partition.I) {
            const auto e = std::stoull(i.name.substr(1));
            const auto f = phi_of_e(e, ctx);
            CHECK(2 * f > ctx.n);
            CHECK(f <= ctx.n);
        }
    }
}
