#include "gkc/audit.hpp"
#include "gkc/descriptor_parse.hpp"
#include "gkc/gkbuild.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace gkc;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;

    void fail(const std::string& what) {
        pass = false;
        if (failures++ < 8) detail << (failures > 1 ? "; " : "") << what;
    }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// ---- independent helpers: plain 128-bit arithmetic, no library number theory

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t brute_order(std::int64_t base, std::uint64_t r) {
    const std::uint64_t b = static_cast<std::uint64_t>(((base % static_cast<std::int64_t>(r)) + r) % r);
    if (b == 0) return 0;
    std::uint64_t x = b, k = 1;
    while (x != 1) {
        x = mulmod(x, b, r);
        ++k;
    }
    return k;
}

std::vector<std::uint64_t> sieve(std::uint64_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

bool brute_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- criterion 1

Graph graph_from_mask(unsigned n, std::uint32_t mask) {
    std::vector<std::uint64_t> vs;
    const auto primes = sieve(20);
    for (unsigned i = 0; i < n; ++i) vs.push_back(primes[i]);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
    unsigned bit = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) es.emplace_back(vs[i], vs[j]);
    return Graph::from_primes(vs, es);
}

Outcome criterion1() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t total = 0, split = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        const std::uint32_t pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const auto d = is_split_degree(g);
            const auto f = is_split_forbidden(g);
            ++total;
            if (d.split != f.split) {
                o.fail("disagreement at n=" + std::to_string(n) + " mask=" + std::to_string(mask));
                continue;
            }
            if (d.split) {
                ++split;
                if (!d.partition || !validate_partition(g, *d.partition)) o.fail("bad partition at mask " + std::to_string(mask));
            } else if (!f.forbidden || !witness_holds(g, *f.forbidden)) {
                o.fail("bad witness at mask " + std::to_string(mask));
            }
        }
    }
    const double s = seconds_since(t0);
    if (total != 1 + 2 + 8 + 64 + 1024 + 32768) o.fail("wrong graph count " + std::to_string(total));
    if (s >= 30) o.fail("runtime " + std::to_string(s) + " s");
    o.detail << (o.failures ? "; " : "") << total << " graphs, " << split << " split, " << s << " s";
    return o;
}

// ---- criterion 2

Outcome criterion2() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t checked = 0;
    for (auto kind : {AltSymKind::Sym, AltSymKind::Alt}) {
        for (unsigned n = kind == AltSymKind::Sym ? 2 : 5; n <= 300; ++n) {
            const std::string name = (kind == AltSymKind::Sym ? "Sym(" : "Alt(") + std::to_string(n) + ")";
            const Graph g = gk_altsym(kind, n);
            ++checked;
            if (!is_split_degree(g).split) o.fail(name + " not split");
            const auto part = altsym_partition(n);
            const auto check = validate_partition(g, part);
            if (!check.ok) o.fail(name + ": " + check.reason);
            if (!is_clique(g, part.C)) o.fail(name + ": C is not a clique in GK, so not in S either");
        }
    }
    const double s = seconds_since(t0);
    if (s >= 10) o.fail("runtime " + std::to_string(s) + " s");
    o.detail << (o.failures ? "; " : "") << checked << " groups, " << s
             << " s; I-independence in S(G) is lemma-assumed";
    return o;
}

// ---- criterion 3

Outcome criterion3() {
    Outcome o;
    std::size_t t1 = 0, t2 = 0;
    for (const auto& r : sporadic_table()) {
        if (r.name == "2F4(2)'") continue;
        ++t1;
        const auto pi = prime_spectrum(GroupDescriptor::sporadic_group(r.name));
        auto check = [&](const PrimePartition& p, const std::string& table) {
            nt::PrimeSet all = p.C;
            all.insert(p.I.begin(), p.I.end());
            for (auto c : p.C)
                if (p.I.count(c)) o.fail(r.name + " " + table + ": C and I meet at " + std::to_string(c));
            if (all != pi) {
                std::string d = r.name + " " + table + ": C u I != pi(G) (";
                for (auto x : all)
                    if (!pi.count(x)) d += " extra " + std::to_string(x);
                for (auto x : pi)
                    if (!all.count(x)) d += " missing " + std::to_string(x);
                o.fail(d + " )");
            }
        };
        check(r.prime_partition, "prime partition");
        if (r.solvable_partition) {
            ++t2;
            check(*r.solvable_partition, "solvable partition");
        }
    }
    if (t1 != 26) o.fail("prime partition table has " + std::to_string(t1) + " rows");
    if (t2 != 16) o.fail("solvable partition table has " + std::to_string(t2) + " rows");

    const auto& m22 = sporadic_record("M22");
    const Graph s = Graph::from_primes({2, 3, 5, 7, 11}, {{11, 5}, {5, 2}, {2, 3}, {2, 7}, {3, 7}});
    if (!m22.known_solvable_edges ||
        Graph::from_primes({2, 3, 5, 7, 11}, *m22.known_solvable_edges) != s)
        o.fail("M22 solvable graph edges differ");
    if (prime_spectrum(GroupDescriptor::sporadic_group("M22")) != nt::PrimeSet{2, 3, 5, 7, 11})
        o.fail("M22 solvable graph vertices differ from pi(M22)");
    if (m22.prime_partition.C != nt::PrimeSet{2} || m22.prime_partition.I != nt::PrimeSet{3, 5, 7, 11})
        o.fail("M22 prime partition row");
    if (is_split_degree(s).split) o.fail("M22 solvable graph reported split");
    const ForbiddenWitness w{ForbiddenKind::TwoK2,
                             {Label::of_prime(3), Label::of_prime(7), Label::of_prime(5), Label::of_prime(11)}};
    if (!witness_holds(s, w)) o.fail("2K2 on {3,7,5,11} does not hold");
    const auto found = is_split_forbidden(s).forbidden;
    if (!found || !witness_holds(s, *found)) o.fail("no revalidating witness");
    const auto cf = compact_form(s);
    const Graph path = Graph::from_primes({2, 3, 5, 11}, {{11, 5}, {5, 2}, {2, 3}});
    if (cf.quotient != path) o.fail("M22 compact form is not 11-5-2-{3,7}");
    if (cf.class_contents.at(Label::of_prime(3)) != VertexList{Label::of_prime(3), Label::of_prime(7)})
        o.fail("M22 class {3,7}");
    o.detail << (o.failures ? "; " : "") << t1 << " prime partitions, " << t2 << " solvable partitions, M22 solvable graph checked";
    return o;
}

// ---- criterion 4

struct FigureOracle {
    std::string group;
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
};

std::vector<FigureOracle> figure_oracles() {
    const std::string U = "U", P = "pi(q+1)\\{3}", W = "pi(q+sqrt(2q)+1)", M = "pi(q-1)";
    std::vector<FigureOracle> f = {
        {"A1(7)", {"{p}", "pi((q-1)/(2,q-1))", "pi((q+1)/(2,q-1))"}, {}},
        {"A2(271)",
         {"{2}", "{3}", "{p}", "U1", "U2", "R_nu(3)"},
         {{"{2}", "{p}"}, {"{2}", "{3}"}, {"{2}", "U1"}, {"{2}", "U2"}, {"U1", "{p}"}, {"U1", "{3}"}, {"U1", "U2"},
          {"{p}", "{3}"}, {"U2", "{3}"}}},
        {"B2(5)", {"{p}", "R1", "R2", "R4"}, {{"{p}", "R1"}, {"{p}", "R2"}, {"R1", "R2"}}},
        {"B3(3)", {"{2}", "{3}", "{5}", "{7}", "{13}"}, {{"{2}", "{3}"}, {"{2}", "{5}"}, {"{2}", "{7}"}}},
        {"B3(5)",
         {"{p}", "R1", "R2", "R3", "R4", "R6"},
         {{"R2", "R1"}, {"R2", "R4"}, {"R2", "{p}"}, {"R1", "R4"}, {"R1", "{p}"}, {"R4", "{p}"}, {"R1", "R3"},
          {"R2", "R6"}}},
        {"G2(9)", {"R1uR2u{3}", "R3", "R6"}, {}},
        {"G2(13)", {"{3}", "R2u{p}", "R1", "R3", "R6"}, {{"R2u{p}", "R1"}, {"R1", "{3}"}, {"{3}", "R3"}}},
        {"G2(11)", {"{3}", "R1u{p}", "R2", "R3", "R6"}, {{"R1u{p}", "R2"}, {"R2", "{3}"}, {"{3}", "R6"}}},
        {"F4(4)", {"R", "R3", "R4", "R6", "R8", "R12"}, {{"R", "R4"}, {"R", "R3"}, {"R", "R6"}}},
        {"F4(3)",
         {"{2}", "R'", "R3", "R4", "R6", "R8", "R12"},
         {{"R'", "R4"}, {"R'", "R6"}, {"{2}", "R6"}, {"{2}", "R4"}, {"R3", "R'"}, {"{2}", "R'"}, {"{2}", "R3"}}},
        {"2B2(32)", {"{2}", "pi(q-1)", "pi(q-sqrt(2q)+1)", "pi(q+sqrt(2q)+1)"}, {}},
        {"3D4(3)", {"R", "R3", "R6", "R12"}, {{"R3", "R"}, {"R", "R6"}}},
        {"2G2(27)",
         {"{3}", "{2}", "pi((q-1)/2)", "pi((q+1)/4)", "pi(q-sqrt(3q)+1)", "pi(q+sqrt(3q)+1)"},
         {{"{3}", "{2}"}, {"pi((q-1)/2)", "{2}"}, {"pi((q+1)/4)", "{2}"}}},
        {"2F4(32)",
         {"{2}", "{3}", U, "V", W, P, M, "pi(q^2-sqrt(2q^3)+q-sqrt(2q)+1)", "pi(q^2+sqrt(2q^3)+q+sqrt(2q)+1)"},
         {{U, "{3}"}, {"{3}", P}, {"{3}", "V"}, {"{3}", "{2}"}, {"{3}", W}, {"{3}", M}, {"V", W}, {"V", P},
          {"V", "{2}"}, {"{2}", W}, {"{2}", P}, {"{2}", M}, {W, P}, {P, M}}},
        {"Tits", {"{2}", "{3}", "{5}", "{13}"}, {{"{2}", "{3}"}, {"{2}", "{5}"}}},
    };

    FigureOracle e6{"E6(11)", {"{3}", "{p}", "R1", "R2", "R_nu(3)", "R_nu(6)", "R4", "R8", "R12", "R_nu(5)", "R_nu(9)"}, {}};
    const std::vector<std::string> core = {"{3}", "{p}", "R1", "R2", "R_nu(3)", "R_nu(6)"};
    for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j) e6.edges.emplace_back(core[i], core[j]);
    for (const char* x : {"R1", "R2", "{3}", "{p}", "R_nu(6)"}) e6.edges.emplace_back("R4", x);
    for (const char* x : {"R1", "R2", "{3}", "{p}"}) e6.edges.emplace_back("R_nu(5)", x);
    e6.edges.insert(e6.edges.end(), {{"R_nu(3)", "R12"}, {"R8", "R1"}, {"R8", "R2"}, {"R8", "{3}"}});
    f.push_back(e6);

    FigureOracle e7{"E7(5)", {"{p}", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R12", "R14", "R18"}, {}};
    const std::vector<std::pair<std::string, std::vector<std::string>>> e7adj = {
        {"R1", {"R2", "R5", "R10", "R12", "R3", "R8", "R4", "{p}", "R6", "R7", "R9"}},
        {"R2", {"R8", "R3", "R4", "R6", "R12", "R10", "R5", "{p}", "R14", "R18"}},
        {"{p}", {"R3", "R6", "R12", "R5", "R10", "R4", "R8"}},
        {"R3", {"R4", "R12", "R6", "R5"}},
        {"R6", {"R4", "R12", "R10"}},
        {"R4", {"R8"}}};
    for (const auto& [a, bs] : e7adj)
        for (const auto& b : bs) e7.edges.emplace_back(a, b);
    f.push_back(e7);

    FigureOracle e8{"E8(4)",
                    {"R", "R3", "R4", "R5", "R6", "R8", "R9", "R10", "R12", "R15", "R18", "R20", "R24", "R30"},
                    {}};
    const std::vector<std::pair<std::string, std::vector<std::string>>> e8adj = {
        {"R", {"R4", "R10", "R6", "R18", "R8", "R12", "R9", "R3", "R5"}},
        {"R4", {"R10", "R5", "R6", "R3", "R8", "R12"}},
        {"R10", {"R6"}},
        {"R5", {"R3"}},
        {"R6", {"R18", "R8", "R12"}},
        {"R3", {"R9", "R12", "R8", "R6"}}};
    for (const auto& [a, bs] : e8adj)
        for (const auto& b : bs) e8.edges.emplace_back(a, b);
    f.push_back(e8);
    return f;
}

std::string compare_figure(const FigureOracle& fo, const Graph& g) {
    std::set<std::string> want_v(fo.vertices.begin(), fo.vertices.end()), got_v;
    for (const auto& v : g.vertices()) got_v.insert(v.name);
    if (want_v != got_v) {
        std::string d = fo.group + ": vertex classes differ:";
        for (const auto& x : want_v)
            if (!got_v.count(x)) d += " missing " + x;
        for (const auto& x : got_v)
            if (!want_v.count(x)) d += " extra " + x;
        return d;
    }
    auto key = [](std::string a, std::string b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
    std::set<std::pair<std::string, std::string>> want_e, got_e;
    for (const auto& [a, b] : fo.edges) want_e.insert(key(a, b));
    for (const auto& [a, b] : g.edge_labels()) got_e.insert(key(a.name, b.name));
    if (want_e != got_e) {
        std::string d = fo.group + ": edges differ:";
        for (const auto& [a, b] : want_e)
            if (!got_e.count({a, b})) d += " missing " + a + "-" + b;
        for (const auto& [a, b] : got_e)
            if (!want_e.count({a, b})) d += " extra " + a + "-" + b;
        return d;
    }
    return {};
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t classical = 0, exceptional = 0, figures = 0;

    std::vector<std::string> grid;
    for (unsigned d = 4; d <= 20; ++d)
        for (unsigned q : {2, 3, 4, 5, 7, 8, 9})
            for (const char* f : {"A", "2A"}) grid.push_back(f + std::to_string(d - 1) + "(" + std::to_string(q) + ")");
    for (unsigned n = 4; n <= 12; ++n)
        for (unsigned q : {2, 3, 5})
            for (const char* f : {"B", "C", "D", "2D"}) grid.push_back(f + std::to_string(n) + "(" + std::to_string(q) + ")");
    for (const auto& s : grid) {
        try {
            const auto cp = classical_compact_partition(make_phi_context(parse_descriptor(s)));
            ++classical;
            const auto check = validate_partition(cp.graph, cp.partition);
            if (!check.ok) o.fail(s + ": " + check.reason);
            const auto rep = audit(cp.certificate);
            if (!rep.ok()) o.fail(s + ": audit: " + rep.failures.front().message);
        } catch (const std::exception& e) {
            o.fail(s + ": " + e.what());
        }
    }

    for (const auto& fo : figure_oracles()) {
        try {
            const auto r = exceptional_compact(parse_descriptor(fo.group));
            ++figures;
            const auto d = compare_figure(fo, r.graph);
            if (!d.empty()) o.fail(d);
        } catch (const std::exception& e) {
            o.fail(fo.group + ": " + e.what());
        }
    }

    const std::vector<std::vector<std::string>> families = {
        {"A1(8)", "A1(13)", "A1(27)"},   {"A2(4)", "A2(7)", "A2(271)"}, {"2A2(3)", "2A2(5)", "2A2(8)"},
        {"B2(3)", "B2(4)", "B2(7)"},     {"B3(3)", "B3(4)", "B3(5)"},   {"G2(9)", "G2(13)", "G2(11)"},
        {"F4(2)", "F4(3)", "F4(4)"},     {"E6(2)", "E6(3)", "E6(11)"},  {"2E6(2)", "2E6(3)", "2E6(4)"},
        {"E7(2)", "E7(3)", "E7(5)"},     {"E8(2)", "E8(3)", "E8(4)"},   {"2B2(8)", "2B2(32)", "2B2(128)"},
        {"3D4(2)", "3D4(3)", "3D4(4)"},  {"2G2(27)", "2G2(243)", "2G2(2187)"},
        {"2F4(8)", "2F4(32)", "2F4(128)"}, {"Tits"}};
    for (const auto& fam : families)
        for (const auto& s : fam) {
            try {
                const auto r = exceptional_compact(parse_descriptor(s));
                ++exceptional;
                if (!r.stated_partition_valid) {
                    std::string d = s + ": stated partition invalid";
                    for (const auto& c : r.stated_checks)
                        if (!c.ok) {
                            d += " (" + c.reason + ")";
                            break;
                        }
                    o.fail(d);
                }
                if (!audit(r.certificate).ok()) o.fail(s + ": audit failed");
            } catch (const std::exception& e) {
                o.fail(s + ": " + e.what());
            }
        }
    const double secs = seconds_since(t0);
    if (secs >= 60) o.fail("runtime " + std::to_string(secs) + " s");
    o.detail << (o.failures ? "; " : "") << classical << " classical, " << figures << " figure graphs, " << exceptional
             << " exceptional cases, " << secs << " s";
    return o;
}

// ---- criterion 5

std::set<std::pair<std::set<std::uint64_t>, std::set<std::uint64_t>>> class_graph_signature(const Graph& prime_graph) {
    const auto cf = compact_form(prime_graph);
    std::map<Label, std::set<std::uint64_t>> members;
    for (const auto& [cls, vs] : cf.class_contents)
        for (const auto& v : vs) members[cls].insert(v.prime);
    std::set<std::pair<std::set<std::uint64_t>, std::set<std::uint64_t>>> sig;
    for (const auto& [cls, m] : members) sig.insert({m, {}});
    for (const auto& [a, b] : cf.quotient.edge_labels()) {
        auto x = members.at(a), y = members.at(b);
        if (y < x) std::swap(x, y);
        sig.insert({x, y});
    }
    return sig;
}

Outcome criterion5() {
    Outcome o;
    std::vector<std::string> groups;
    for (unsigned q : {4, 5, 7, 8, 9, 11, 13, 27}) groups.push_back("A1(" + std::to_string(q) + ")");
    for (unsigned q : {8, 32, 128}) groups.push_back("2B2(" + std::to_string(q) + ")");
    groups.insert(groups.end(), {"2G2(27)", "B2(3)", "B3(3)", "Tits"});
    for (const auto& s : groups) {
        try {
            const auto g = parse_descriptor(s);
            const auto spec = spectrum_formulas(g);
            if (auto p = spectrum_problem(spec)) o.fail(s + ": " + *p);
            const Graph from_spectrum = gk_from_spectrum(spec);
            const Graph from_figure = expand_class_graph(exceptional_compact(g).graph);
            if (class_graph_signature(from_spectrum) != class_graph_signature(from_figure))
                o.fail(s + ": compact forms differ");
            if (!isomorphic(compact_form(from_spectrum).quotient, compact_form(from_figure).quotient))
                o.fail(s + ": not isomorphic");
        } catch (const std::exception& e) {
            o.fail(s + ": " + e.what());
        }
    }
    o.detail << (o.failures ? "; " : "") << groups.size() << " groups compared";
    return o;
}

// ---- criterion 6

Outcome criterion6() {
    Outcome o;
    const auto w = nonsplit_witness_linear(13, 2, 2);
    const std::vector<std::uint64_t> got{w.r1, w.r2, w.s1, w.s2};
    if (got != std::vector<std::uint64_t>{43, 127, 19, 73}) o.fail("primes differ");
    const std::vector<std::uint64_t> want_e{7, 7, 9, 9};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!brute_prime(got[i])) o.fail(std::to_string(got[i]) + " is not prime");
        if (brute_order(4, got[i]) != want_e[i]) o.fail("e(" + std::to_string(got[i]) + ", 4) mismatch");
    }
    const Graph model = Graph::from_primes(got, {{got[0], got[1]}, {got[2], got[3]}});
    const ForbiddenWitness tk{ForbiddenKind::TwoK2, {Label::of_prime(43), Label::of_prime(127), Label::of_prime(19),
                                                     Label::of_prime(73)}};
    if (!witness_holds(model, tk)) o.fail("model is not 2K2");
    if (!(w.model == model)) o.fail("returned model differs");
    if (!audit(w.certificate).ok()) o.fail("certificate audit failed");
    o.detail << (o.failures ? "; " : "") << "{43,127} x {19,73}, orders 7,7,9,9";
    return o;
}

// ---- criterion 7

Outcome criterion7() {
    Outcome o;
    const auto r = psl11_2_sc();
    if (is_split_degree(r.graph).split || is_split_forbidden(r.graph).split) o.fail("graph reported split");
    std::vector<std::string> names;
    for (const auto& v : r.witness.vertices) names.push_back(v.name);
    if (names != std::vector<std::string>{"R3", "R7", "R10", "R11"}) o.fail("witness classes differ");
    if (!witness_holds(r.graph, r.witness)) o.fail("witness does not hold");
    const auto cf = compact_form(r.graph);
    if (!cf.trivial()) {
        std::string d = "compact form is not the graph itself:";
        for (const auto& [cls, vs] : cf.class_contents)
            if (vs.size() > 1) {
                d += " twins";
                for (const auto& v : vs) d += " " + v.name;
            }
        o.fail(d);
    }
    o.detail << (o.failures ? "; " : "") << "9 classes, " << r.graph.edge_count() << " edges";
    return o;
}

// ---- criterion 8

bool oracle_empty(std::int64_t n, unsigned i) {
    // primes dividing n^i - 1 that divide no n^k - 1 with k < i, plus the convention at 2
    auto power_minus_one = [](std::int64_t b, unsigned k) {
        __int128 v = 1;
        for (unsigned t = 0; t < k; ++t) v *= b;
        v -= 1;
        return static_cast<std::uint64_t>(v < 0 ? -v : v);
    };
    std::uint64_t x = power_minus_one(n, i);
    for (unsigned k = 1; k < i; ++k) {
        const std::uint64_t y = power_minus_one(n, k);
        for (std::uint64_t g; (g = std::gcd(x, y)) > 1;) x /= g;
    }
    while (x % 2 == 0) x /= 2;
    if (x > 1) return false;
    if (n % 2 != 0) {
        const std::int64_t m4 = ((n % 4) + 4) % 4;
        if (i == 1 && m4 == 1) return false;
        if (i == 2 && m4 == 3) return false;
    }
    return true;
}

Outcome criterion8() {
    Outcome o;
    const std::set<std::pair<std::int64_t, unsigned>> listed = {{2, 1}, {2, 6}, {-2, 2}, {-2, 3}, {3, 1}, {-3, 2}};
    std::size_t cases = 0;
    auto one = [&](std::int64_t n, unsigned i) {
        ++cases;
        const bool empty = nt::ppd_set(i, n).empty();
        const bool in_list = listed.count({n, i}) > 0;
        if (empty != in_list)
            o.fail("(" + std::to_string(n) + "," + std::to_string(i) + "): ppd_set " + (empty ? "empty" : "nonempty"));
        if (empty != oracle_empty(n, i))
            o.fail("(" + std::to_string(n) + "," + std::to_string(i) + "): disagrees with gcd oracle");
        if (nt::zsigmondy_exception(n, i) != in_list) o.fail("exception list lookup wrong");
    };
    for (std::int64_t n = 2; n <= 20; ++n)
        for (unsigned i = 1; i <= 12; ++i) one(n, i);
    one(-2, 2);
    one(-2, 3);
    one(-3, 2);
    o.detail << (o.failures ? "; " : "") << cases << " cases";
    return o;
}

// ---- criterion 9

Outcome criterion9() {
    Outcome o;
    std::vector<std::uint64_t> oracle;
    for (auto n : sieve(1000))
        if (n >= 3 && brute_order(2, n) == n - 1) oracle.push_back(n);
    const auto got = artin_pairs(2, 1000);
    if (got != oracle) o.fail("lists differ (" + std::to_string(got.size()) + " vs " + std::to_string(oracle.size()) + ")");
    for (std::uint64_t x : {11, 19})
        if (std::find(got.begin(), got.end(), x) == got.end()) o.fail("missing " + std::to_string(x));
    o.detail << (o.failures ? "; " : "") << got.size() << " primes";
    return o;
}

// ---- criterion 10

Graph random_graph(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> nv(1, 9);
    std::uniform_real_distribution<double> u(0, 1);
    const unsigned n = nv(rng);
    const double density = u(rng);
    const auto primes = sieve(30);
    std::vector<std::uint64_t> vs(primes.begin(), primes.begin() + n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> es;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (u(rng) < density) es.emplace_back(vs[i], vs[j]);
    return Graph::from_primes(vs, es);
}

Outcome criterion10() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::size_t split_seen = 0;
    for (int t = 0; t < 1000; ++t) {
        const Graph g = random_graph(rng);
        const auto cf = compact_form(g);
        const auto cf2 = compact_form(cf.quotient);
        if (!cf2.trivial() || !(cf2.quotient == cf.quotient)) o.fail("compact form not idempotent at trial " + std::to_string(t));

        const bool s = is_split_degree(g).split;
        if (s != is_split_degree(g.complement()).split) o.fail("complement closure fails at trial " + std::to_string(t));
        if (s) {
            ++split_seen;
            VertexList sub;
            for (const auto& v : g.vertices())
                if (rng() & 1) sub.push_back(v);
            if (!is_split_degree(g.induced(sub)).split) o.fail("heredity fails at trial " + std::to_string(t));
        }
    }

    std::vector<std::string> pool;
    for (auto p : sieve(200))
        for (std::uint64_t q = p; q <= 5000; q *= p) {
            if (q > 3) pool.push_back("A1(" + std::to_string(q) + ")");
            if (q > 2) pool.push_back("B2(" + std::to_string(q) + ")");
        }
    for (std::uint64_t q = 8; q <= (1ull << 21); q *= 4) pool.push_back("2B2(" + std::to_string(q) + ")");
    for (std::uint64_t q = 27; q <= 1594323; q *= 9) pool.push_back("2G2(" + std::to_string(q) + ")");
    pool.push_back("B3(3)");
    pool.push_back("Tits");
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 1000; ++t) {
        const std::string s = pool[pick(rng)];
        const Graph g = gk_from_spectrum(spectrum_formulas(parse_descriptor(s)));
        for (const auto& comp : components(g)) {
            const bool has2 = std::find(comp.begin(), comp.end(), Label::of_prime(2)) != comp.end();
            if (!has2 && !is_clique(g, comp)) o.fail(s + ": component without 2 is not a clique");
        }
    }
    o.detail << (o.failures ? "; " : "") << "1000 random graphs (" << split_seen << " split), 1000 spectra from "
             << pool.size() << " groups";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8,
                                                            criterion9, criterion10};
    std::vector<int> which;
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
    } else {
        for (int i = 1; i <= 10; ++i) which.push_back(i);
    }
    int failed = 0;
    for (int n : which) {
        if (n < 1 || n > 10) {
            std::cerr << "no criterion " << n << '\n';
            return 2;
        }
        Outcome o;
        try {
            o = criteria[n - 1]();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
