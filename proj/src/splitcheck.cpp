#include "gkc/splitcheck.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gkc {

std::vector<std::size_t> degree_order(const Graph& g) {
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> deg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) deg[i] = g.degree(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    return order;
}

std::size_t m_index(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("m_index: empty graph");
    const auto order = degree_order(g);
    std::size_t m = 1;
    for (std::size_t i = 1; i <= order.size(); ++i)
        if (g.degree(order[i - 1]) + 1 >= i) m = i;
    return m;
}

bool degree_criterion(const Graph& g) {
    if (g.empty()) return true;
    const auto order = degree_order(g);
    const std::size_t m = m_index(g);
    std::size_t head = 0, tail = 0;
    for (std::size_t i = 0; i < order.size(); ++i) (i < m ? head : tail) += g.degree(order[i]);
    return head == m * (m - 1) + tail;
}

namespace {

SplitPartition partition_from(const Graph& g, const std::vector<std::size_t>& clique) {
    SplitPartition p;
    std::vector<char> in(g.size(), 0);
    for (auto i : clique) in[i] = 1;
    for (std::size_t i = 0; i < g.size(); ++i) (in[i] ? p.C : p.I).push_back(g.vertex(i));
    return p;
}

SplitPartition extract_partition(const Graph& g, std::size_t m) {
    const auto order = degree_order(g);
    std::vector<std::size_t> top(order.begin(), order.begin() + m);
    SplitPartition p = partition_from(g, top);
    if (validate_partition(g, p)) return p;

    const std::size_t k = std::min(m + 1, g.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> clique;
        for (std::size_t b = 0; b < k; ++b)
            if (mask >> b & 1) clique.push_back(order[b]);
        p = partition_from(g, clique);
        if (validate_partition(g, p)) return p;
    }
    throw SplitInconsistency("degree criterion holds but no split partition among the top-(m+1) vertices");
}

}  // namespace

SplitVerdict is_split_degree(const Graph& g) {
    SplitVerdict v;
    if (g.empty()) {
        v.split = true;
        v.partition = SplitPartition{};
        return v;
    }
    v.m_index = m_index(g);
    v.split = degree_criterion(g);
    if (v.split) {
        v.partition = extract_partition(g, v.m_index);
        v.partition->special = is_special(g, *v.partition);
    } else {
        v.forbidden = find_forbidden(g);
        if (!v.forbidden) throw SplitInconsistency("degree criterion fails but no 2K2/C4/C5 found");
    }
    return v;
}

SplitVerdict is_split_forbidden(const Graph& g) {
    SplitVerdict v;
    v.forbidden = find_forbidden(g);
    v.split = !v.forbidden;
    if (g.empty()) {
        v.partition = SplitPartition{};
        return v;
    }
    v.m_index = m_index(g);
    if (v.split) {
        v.partition = extract_partition(g, v.m_index);
        v.partition->special = is_special(g, *v.partition);
    }
    return v;
}

bool is_special(const Graph& g, const SplitPartition& p) {
    for (const auto& v : p.I) {
        const bool misses = std::any_of(p.C.begin(), p.C.end(), [&](const Label& c) { return !g.adjacent(v, c); });
        if (!misses) return false;
    }
    return true;
}

PartitionCheck validate_partition(const Graph& g, const SplitPartition& p) {
    std::set<Label> c(p.C.begin(), p.C.end()), i(p.I.begin(), p.I.end());
    if (c.size() != p.C.size() || i.size() != p.I.size()) return {false, "repeated vertex in C or I"};
    for (const auto& v : c) {
        if (!g.find(v)) return {false, "unknown vertex " + v.str() + " in C"};
        if (i.count(v)) return {false, "vertex " + v.str() + " in both C and I"};
    }
    for (const auto& v : i)
        if (!g.find(v)) return {false, "unknown vertex " + v.str() + " in I"};
    if (c.size() + i.size() != g.size()) {
        for (const auto& v : g.vertices())
            if (!c.count(v) && !i.count(v)) return {false, "vertex " + v.str() + " in neither C nor I"};
    }
    for (std::size_t a = 0; a < p.C.size(); ++a)
        for (std::size_t b = a + 1; b < p.C.size(); ++b)
            if (!g.adjacent(p.C[a], p.C[b]))
                return {false, "C is not a clique: " + p.C[a].str() + " and " + p.C[b].str() + " are nonadjacent"};
    for (std::size_t a = 0; a < p.I.size(); ++a)
        for (std::size_t b = a + 1; b < p.I.size(); ++b)
            if (g.adjacent(p.I[a], p.I[b]))
                return {false, "I is not independent: " + p.I[a].str() + " and " + p.I[b].str() + " are adjacent"};
    if (p.special) {
        for (const auto& v : p.I) {
            const bool misses =
                std::any_of(p.C.begin(), p.C.end(), [&](const Label& x) { return !g.adjacent(v, x); });
            if (!misses) return {false, "not special: " + v.str() + " is adjacent to all of C"};
        }
    }
    return {};
}

SplitPartition specialize(const Graph& g, SplitPartition p) {
    p.special = false;
    if (auto check = validate_partition(g, p); !check) throw InvalidPartition(check.reason);
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = p.I.begin(); it != p.I.end(); ++it) {
            const bool full = std::all_of(p.C.begin(), p.C.end(), [&](const Label& c) { return g.adjacent(*it, c); });
            if (full) {
                p.C.push_back(*it);
                p.I.erase(it);
                moved = true;
                break;
            }
        }
    }
    std::sort(p.C.begin(), p.C.end());
    p.special = true;
    return p;
}

}  // namespace gkc
