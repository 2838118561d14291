#include "gkc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace gkc {

Label Label::of_prime(std::uint64_t p) {
    Label l;
    l.kind = Kind::Prime;
    l.prime = p;
    return l;
}

Label Label::of_class(std::string name, std::vector<std::uint64_t> members) {
    Label l;
    l.kind = Kind::Class;
    l.name = std::move(name);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    l.members = std::move(members);
    return l;
}

std::string Label::str() const { return is_prime() ? std::to_string(prime) : name; }

bool Label::operator==(const Label& o) const {
    if (kind != o.kind) return false;
    return is_prime() ? prime == o.prime : name == o.name;
}

namespace {

// Natural order: runs of digits compare by numeric value, so R3 < R10.
bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            std::string na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

}  // namespace

bool Label::operator<(const Label& o) const {
    if (kind != o.kind) return kind == Kind::Prime;
    return is_prime() ? prime < o.prime : natural_less(name, o.name);
}

Graph Graph::from_edges(VertexList vertices, const std::vector<std::pair<Label, Label>>& edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    g.vertices_ = std::move(vertices);
    g.build_index();
    for (const auto& [a, b] : edges) {
        const std::size_t i = g.index_of(a), j = g.index_of(b);
        if (i == j) throw LoopEdge("loop at vertex " + a.str());
        g.adj_[i][j] = g.adj_[j][i] = 1;
    }
    return g;
}

Graph Graph::from_primes(const std::vector<std::uint64_t>& vertices,
                         const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    VertexList vs;
    for (auto p : vertices) vs.push_back(Label::of_prime(p));
    std::vector<std::pair<Label, Label>> es;
    for (auto [a, b] : edges) es.emplace_back(Label::of_prime(a), Label::of_prime(b));
    return from_edges(std::move(vs), es);
}

void Graph::build_index() {
    index_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
    adj_.assign(vertices_.size(), std::vector<char>(vertices_.size(), 0));
}

std::optional<std::size_t> Graph::find(const Label& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::index_of(const Label& v) const {
    auto i = find(v);
    if (!i) throw UnknownVertex("unknown vertex " + v.str());
    return *i;
}

std::size_t Graph::degree(std::size_t i) const {
    return static_cast<std::size_t>(std::count(adj_[i].begin(), adj_[i].end(), 1));
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
        if (adj_[i][j]) out.push_back(j);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < size(); ++i) m += degree(i);
    return m / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adj_[i][j]) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<Label, Label>> Graph::edge_labels() const {
    std::vector<std::pair<Label, Label>> out;
    for (auto [i, j] : edges()) out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

Graph Graph::induced(const VertexList& subset) const {
    std::vector<std::size_t> idx;
    for (const auto& v : subset) idx.push_back(index_of(v));
    return induced_indices(idx);
}

Graph Graph::induced_indices(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> idx = subset;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Graph g;
    for (auto i : idx) g.vertices_.push_back(vertices_.at(i));
    g.build_index();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) g.adj_[a][b] = adj_[idx[a]][idx[b]];
    return g;
}

Graph Graph::complement() const {
    Graph g = *this;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) g.adj_[i][j] = (i != j && !adj_[i][j]) ? 1 : 0;
    return g;
}

bool Graph::operator==(const Graph& o) const {
    if (vertices_.size() != o.vertices_.size()) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!(vertices_[i] == o.vertices_[i])) return false;
    return adj_ == o.adj_;
}

VertexList closed_nbhd(const Graph& g, const Label& v) {
    const std::size_t i = g.index_of(v);
    VertexList out;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j == i || g.adjacent(i, j)) out.push_back(g.vertex(j));
    return out;
}

std::vector<VertexList> components(const Graph& g) {
    std::vector<VertexList> out;
    std::vector<char> seen(g.size(), 0);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> stack{s}, comp;
        seen[s] = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        VertexList labels;
        for (auto v : comp) labels.push_back(g.vertex(v));
        out.push_back(std::move(labels));
    }
    return out;
}

bool is_clique(const Graph& g, const VertexList& subset) {
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (!(subset[a] == subset[b]) && !g.adjacent(subset[a], subset[b])) return false;
    return true;
}

bool is_independent(const Graph& g, const VertexList& subset) {
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (g.adjacent(subset[a], subset[b])) return false;
    return true;
}

bool CompactForm::trivial() const {
    return std::all_of(class_contents.begin(), class_contents.end(),
                       [](const auto& kv) { return kv.second.size() == 1; });
}

CompactForm compact_form(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> rep(n);
    std::map<std::vector<char>, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> ball(n, 0);
        for (std::size_t j = 0; j < n; ++j) ball[j] = (i == j || g.adjacent(i, j)) ? 1 : 0;
        // vertices are sorted, so the first holder of a ball is the smallest member
        rep[i] = seen.emplace(std::move(ball), i).first->second;
    }

    CompactForm cf;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        if (rep[i] == i) reps.push_back(i);
        cf.class_map[g.vertex(i)] = g.vertex(rep[i]);
        cf.class_contents[g.vertex(rep[i])].push_back(g.vertex(i));
    }
    cf.quotient = g.induced_indices(reps);
    return cf;
}

std::string to_string(ForbiddenKind kind) {
    switch (kind) {
        case ForbiddenKind::TwoK2: return "2K2";
        case ForbiddenKind::C4: return "C4";
        case ForbiddenKind::C5: return "C5";
    }
    return "?";
}

std::optional<ForbiddenKind> forbidden_kind_from_string(const std::string& s) {
    if (s == "2K2") return ForbiddenKind::TwoK2;
    if (s == "C4") return ForbiddenKind::C4;
    if (s == "C5") return ForbiddenKind::C5;
    return std::nullopt;
}

bool witness_holds(const Graph& g, const ForbiddenWitness& w) {
    const std::size_t k = w.kind == ForbiddenKind::C5 ? 5 : 4;
    if (w.vertices.size() != k) return false;
    std::vector<std::size_t> idx;
    for (const auto& v : w.vertices) {
        auto i = g.find(v);
        if (!i) return false;
        idx.push_back(*i);
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            if (idx[a] == idx[b]) return false;
            bool want;
            if (w.kind == ForbiddenKind::TwoK2)
                want = (a == 0 && b == 1) || (a == 2 && b == 3);
            else
                want = (b == a + 1) || (a == 0 && b == k - 1);
            if (g.adjacent(idx[a], idx[b]) != want) return false;
        }
    return true;
}

namespace {

// Orders the vertices of an induced cycle starting from its smallest index,
// stepping first to the smaller neighbour.
std::vector<std::size_t> cycle_order(const Graph& g, const std::vector<std::size_t>& s) {
    std::vector<std::size_t> order{s[0]};
    std::size_t prev = s.size(), cur = s[0];
    while (order.size() < s.size()) {
        for (auto v : s) {
            if (v != cur && v != prev && g.adjacent(cur, v) &&
                std::find(order.begin(), order.end(), v) == order.end()) {
                prev = cur;
                cur = v;
                order.push_back(v);
                break;
            }
        }
    }
    return order;
}

std::optional<ForbiddenWitness> classify4(const Graph& g, const std::vector<std::size_t>& s) {
    int degs[4] = {0, 0, 0, 0};
    int m = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (g.adjacent(s[a], s[b])) {
                ++degs[a];
                ++degs[b];
                ++m;
            }
    const bool all1 = degs[0] == 1 && degs[1] == 1 && degs[2] == 1 && degs[3] == 1;
    const bool all2 = degs[0] == 2 && degs[1] == 2 && degs[2] == 2 && degs[3] == 2;
    auto labels = [&](const std::vector<std::size_t>& idx) {
        VertexList out;
        for (auto i : idx) out.push_back(g.vertex(i));
        return out;
    };
    if (m == 2 && all1) {
        std::size_t partner = 1;
        while (!g.adjacent(s[0], s[partner])) ++partner;
        std::vector<std::size_t> rest;
        for (std::size_t i = 1; i < 4; ++i)
            if (i != partner) rest.push_back(s[i]);
        return ForbiddenWitness{ForbiddenKind::TwoK2, labels({s[0], s[partner], rest[0], rest[1]})};
    }
    if (m == 4 && all2) return ForbiddenWitness{ForbiddenKind::C4, labels(cycle_order(g, s))};
    return std::nullopt;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        if (visit(s)) return;
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

std::optional<ForbiddenWitness> find_forbidden(const Graph& g) {
    std::optional<ForbiddenWitness> found;
    for_each_subset(g.size(), 4, [&](const std::vector<std::size_t>& s) {
        found = classify4(g, s);
        return found.has_value();
    });
    if (found) return found;
    for_each_subset(g.size(), 5, [&](const std::vector<std::size_t>& s) {
        for (std::size_t a = 0; a < 5; ++a) {
            int d = 0;
            for (std::size_t b = 0; b < 5; ++b)
                if (a != b && g.adjacent(s[a], s[b])) ++d;
            if (d != 2) return false;
        }
        // 2-regular on 5 vertices is connected, hence C5
        VertexList out;
        for (auto i : cycle_order(g, s)) out.push_back(g.vertex(i));
        found = ForbiddenWitness{ForbiddenKind::C5, out};
        return true;
    });
    return found;
}

bool isomorphic(const Graph& a, const Graph& b) {
    const std::size_t n = a.size();
    if (n != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::size_t> da(n), db(n);
    for (std::size_t i = 0; i < n; ++i) {
        da[i] = a.degree(i);
        db[i] = b.degree(i);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::size_t> map(n);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || da[i] != db[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = a.adjacent(i, k) == b.adjacent(j, map[k]);
            if (!ok) continue;
            used[j] = 1;
            map[i] = j;
            if (extend(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return extend(0);
}

}  // namespace gkc
