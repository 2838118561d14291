#include "gkc/audit.hpp"
#include "gkc/descriptor_parse.hpp"
#include "gkc/gkbuild.hpp"

#include <doctest.h>

using namespace gkc;

namespace {
Label C(const std::string& name) { return Label::of_class(name); }

ExceptionalResult ex(const char* g) { return exceptional_compact(parse_descriptor(g)); }

std::vector<std::string> names(const VertexList& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.name);
    return out;
}
}  // namespace

TEST_CASE("diagram resource") {
    const auto& j = diagram_resource();
    CHECK(j["schema"] == kDiagramSchema);
    CHECK(j["diagrams"].size() == 18);
    CHECK(diagram_family(parse_descriptor("C3(4)")) == "B3");
    CHECK(diagram_family(parse_descriptor("2E6(2)")) == "E6");
    CHECK(diagram_family(parse_descriptor("A3(2)")).empty());
}

TEST_CASE("2B2(8): four isolated classes") {
    const auto r = ex("2B2(8)");
    CHECK(r.graph.size() == 4);
    CHECK(r.graph.edge_count() == 0);
    CHECK(r.stated.size() == 4);
    for (const auto& c : r.stated_checks) CHECK(c.ok);
    CHECK(r.graph.vertex(r.graph.index_of(C("pi(q-sqrt(2q)+1)"))).members == std::vector<std::uint64_t>{5});
}

TEST_CASE("G2 cases") {
    const auto g13 = ex("G2(13)");
    CHECK(g13.diagram_id == "fig6");
    CHECK(g13.graph.edge_count() == 3);
    CHECK(g13.graph.adjacent(C("R1"), C("{3}")));
    CHECK(names(g13.partition.C) == std::vector<std::string>{"R1", "{3}"});
    // for q = 4, R1(4) = {3} is emptied by the special class {3}
    const auto g4 = ex("G2(4)");
    CHECK_FALSE(g4.graph.find(C("R1")));
    CHECK(g4.stated_partition_valid);
    CHECK(ex("G2(11)").diagram_id == "fig7");
    CHECK(ex("G2(9)").diagram_id == "fig5");
}

TEST_CASE("3D4: R6 empty only at q = 2") {
    const auto r = ex("3D4(2)");
    CHECK_FALSE(r.graph.find(C("R6")));
    CHECK(names(r.partition.C) == std::vector<std::string>{"R", "R3"});
    CHECK(names(r.partition.I) == std::vector<std::string>{"R12"});
    CHECK(ex("3D4(3)").graph.find(C("R6")));
}

TEST_CASE("2F4 has fourteen edges when every class survives") {
    const auto r = ex("2F4(32)");
    CHECK(r.graph.size() == 9);
    CHECK(r.graph.edge_count() == 14);
    CHECK(r.stated_partition_valid);
}

TEST_CASE("A2 dashed edges follow the 3-part of q - e") {
    const auto big = ex("A2(271)");
    CHECK(big.graph.adjacent(C("{p}"), C("{3}")));
    CHECK(big.graph.edge_count() == 9);
    const auto small = ex("A2(31)");
    CHECK_FALSE(small.graph.adjacent(C("{p}"), C("{3}")));
    CHECK(big.stated_partition_valid);
    CHECK(small.stated_partition_valid);
}

TEST_CASE("E8 leaves exactly R7 and R14 uncovered") {
    const auto g = parse_descriptor("E8(2)");
    const auto r = exceptional_compact(g);
    nt::PrimeSet covered;
    for (const auto& v : r.graph.vertices()) covered.insert(v.members.begin(), v.members.end());
    nt::PrimeSet missing;
    for (auto x : prime_spectrum(g))
        if (!covered.count(x)) missing.insert(x);
    auto expected = nt::ppd_set(7, 2);
    const auto r14 = nt::ppd_set(14, 2);
    expected.insert(r14.begin(), r14.end());
    CHECK(missing == expected);
}

TEST_CASE("2G2: the stated partitions fail, the degree partition is used") {
    const auto r = ex("2G2(27)");
    CHECK(r.stated.size() == 2);
    CHECK_FALSE(r.stated_partition_valid);
    CHECK(validate_partition(r.graph, r.partition));
}

TEST_CASE("certificates of every sampled family audit cleanly") {
    for (const char* g : {"A1(9)", "2A2(8)", "B2(7)", "B3(4)", "G2(8)", "F4(3)", "E6(4)", "2E6(2)", "E7(3)", "E8(3)",
                          "2B2(128)", "3D4(4)", "2F4(8)", "Tits"}) {
        CAPTURE(g);
        const auto r = ex(g);
        CHECK(r.stated_partition_valid);
        CHECK(audit(r.certificate).ok());
        CHECK(check_structure(r.certificate));
    }
}

TEST_CASE("expanding a class graph") {
    const auto cls = Graph::from_edges({Label::of_class("a", {2, 3}), Label::of_class("b", {5})},
                                       {{C("a"), C("b")}});
    CHECK(expand_class_graph(cls) == Graph::from_primes({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}}));
}
