#include "gkc/expr.hpp"
#include "gkc/gkbuild.hpp"

#include <algorithm>

namespace gkc {

namespace resources {
extern const std::string_view diagrams_json;
}

using nlohmann::json;
using nt::Integer;

const json& diagram_resource() {
    static const json doc = [] {
        json d = json::parse(resources::diagrams_json);
        if (d.value("schema", "") != kDiagramSchema) throw DiagramError("diagram resource: unexpected schema");
        return d;
    }();
    return doc;
}

std::string diagram_family(const GroupDescriptor& g) {
    if (g.is_tits()) return "Tits";
    if (g.kind != GroupDescriptor::Kind::Lie) return {};
    switch (g.family) {
        case LieFamily::A: return g.n == 1 ? "A1" : g.n == 2 ? "A2" : "";
        case LieFamily::A2: return g.n == 2 ? "A2" : "";
        case LieFamily::B:
        case LieFamily::C: return g.n == 2 ? "B2" : g.n == 3 ? "B3" : "";
        case LieFamily::G2: return "G2";
        case LieFamily::F4: return "F4";
        case LieFamily::E6:
        case LieFamily::E62: return "E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
        case LieFamily::B22: return "2B2";
        case LieFamily::D43: return "3D4";
        case LieFamily::G22: return "2G2";
        case LieFamily::F42: return "2F4";
        default: return {};
    }
}

namespace {

struct Env {
    GroupDescriptor group;
    std::uint64_t p = 0;
    std::int64_t q = 0;
    int epsilon = 1;
    Integer order;
    ExprVars vars;
    std::optional<nt::PpdTable> table;

    const nt::PrimeSet& R(std::uint64_t k) { return table->get(k); }
};

Env make_env(const GroupDescriptor& g) {
    Env env;
    env.group = g;
    env.order = order(g);
    if (g.is_tits()) {
        env.p = 2;
        env.q = 2;
    } else {
        env.p = g.p;
        env.q = static_cast<std::int64_t>(g.q());
        env.epsilon = g.epsilon();
    }
    const Integer q = env.q;
    env.vars = {{"q", q}, {"p", Integer(env.p)}, {"e", Integer(env.epsilon)}, {"gcd2", Integer(env.q % 2 ? 2 : 1)}};
    auto try_sqrt = [&](const char* name, const Integer& v) {
        try {
            env.vars[name] = nt::exact_sqrt(v);
        } catch (const std::domain_error&) {
        }
    };
    try_sqrt("sqrt2q", 2 * q);
    try_sqrt("sqrt3q", 3 * q);
    try_sqrt("sqrt2q3", 2 * q * q * q);
    env.table.emplace(env.q);
    return env;
}

std::uint64_t as_u64(const json& j) { return j.get<std::uint64_t>(); }

// Evaluates a predicate and records the arithmetic behind each atom.
bool eval_pred(const json& pred, Env& env, std::vector<Fact>* facts) {
    if (!pred.is_object() || pred.size() != 1) throw DiagramError("malformed predicate " + pred.dump());
    const auto& [key, arg] = *pred.items().begin();
    if (key == "all") {
        for (const auto& p : arg)
            if (!eval_pred(p, env, facts)) return false;
        return true;
    }
    if (key == "any") {
        for (const auto& p : arg)
            if (eval_pred(p, env, facts)) return true;
        return false;
    }
    if (key == "not") return !eval_pred(arg, env, facts);
    if (key == "q_even" || key == "q_odd") {
        const bool even = env.q % 2 == 0;
        if (facts) facts->push_back(fact(even ? "divides" : "ndivides", {2, env.q}));
        return key == "q_even" ? even : !even;
    }
    if (key == "q_is") {
        const bool ok = Integer(env.q) == Integer(arg.get<std::int64_t>());
        if (facts) facts->push_back(fact(ok ? "eq" : "ne", {env.q, arg.get<std::int64_t>()}));
        return ok;
    }
    if (key == "char_is") {
        const bool ok = env.p == as_u64(arg);
        if (facts) facts->push_back(fact(ok ? "eq" : "ne", {env.p, as_u64(arg)}));
        return ok;
    }
    if (key == "three_part_eq") {
        const Integer x = eval_expr(arg.at(0).get<std::string>(), env.vars);
        const Integer v = nt::pi_part(x < 0 ? Integer(-x) : x, nt::PrimeSet{3});
        const Integer want = arg.at(1).get<std::int64_t>();
        if (facts) {
            facts->push_back(fact("pi_part", {x < 0 ? Integer(-x) : x, 3, v}));
            facts->push_back(fact(v == want ? "eq" : "ne", {v, want}));
        }
        return v == want;
    }
    if (key == "divides") {
        const Integer d = arg.at(0).get<std::int64_t>();
        const Integer x = eval_expr(arg.at(1).get<std::string>(), env.vars);
        const bool ok = x % d == 0;
        if (facts) facts->push_back(fact(ok ? "divides" : "ndivides", {d, x}));
        return ok;
    }
    if (key == "member") {
        const auto r = as_u64(arg.at(0));
        const auto k = as_u64(arg.at(1));
        const bool ok = env.R(k).count(r) > 0;
        if (facts && r != env.p && nt::is_prime(r)) {
            const auto e = nt::mult_order(r, env.q);
            facts->push_back(fact("order", {r, env.q, e}));
            facts->push_back(fact(ok ? "eq" : "ne", {e, k}));
        }
        return ok;
    }
    if (key == "nonempty") {
        const auto k = as_u64(arg);
        const bool ok = !env.R(k).empty();
        if (facts) facts->push_back(ok ? fact("ppd_nonempty", {k, env.q}) : fact("ppd_empty", {k, env.q}));
        return ok;
    }
    throw DiagramError("unknown predicate atom " + key);
}

bool holds(const json& entry, Env& env, std::vector<Fact>* facts = nullptr) {
    return !entry.contains("when") || eval_pred(entry.at("when"), env, facts);
}

struct ClassValue {
    nt::PrimeSet primes;
    std::vector<Fact> facts;
};

ClassValue eval_set(const json& s, Env& env) {
    ClassValue out;
    if (s.is_string()) {
        if (s.get<std::string>() != "p") throw DiagramError("unknown set " + s.dump());
        out.primes = {env.p};
        out.facts.push_back(fact("prime", {env.p}));
        return out;
    }
    if (s.contains("prime")) {
        const auto r = as_u64(s.at("prime"));
        if (env.order % r == 0) {
            out.primes = {r};
            out.facts.push_back(fact("divides", {r, env.order}));
        }
        return out;
    }
    if (s.contains("R")) {
        std::uint64_t k = as_u64(s.at("R"));
        if (s.value("nu", false)) k = nu_eps(env.epsilon, k);
        out.primes = env.R(k);
        if (out.primes.empty())
            out.facts.push_back(fact("ppd_empty", {k, env.q}));
        else
            for (auto r : out.primes) out.facts.push_back(fact("order", {r, env.q, k}));
        return out;
    }
    if (s.contains("pi")) {
        const Integer v = eval_expr(s.at("pi").get<std::string>(), env.vars);
        if (v <= 0) throw DiagramError("pi of a non-positive value in " + s.dump());
        out.primes = nt::prime_set(v);
        for (auto r : out.primes) out.facts.push_back(fact("divides", {r, v}));
        return out;
    }
    if (s.contains("union")) {
        for (const auto& part : s.at("union")) {
            auto v = eval_set(part, env);
            out.primes.insert(v.primes.begin(), v.primes.end());
            out.facts.insert(out.facts.end(), v.facts.begin(), v.facts.end());
        }
        return out;
    }
    if (s.contains("minus")) {
        out = eval_set(s.at("minus").at(0), env);
        for (auto r : eval_set(s.at("minus").at(1), env).primes) out.primes.erase(r);
        return out;
    }
    throw DiagramError("unknown set form " + s.dump());
}

const json& select_diagram(const std::string& family, Env& env) {
    for (const auto& d : diagram_resource().at("diagrams"))
        if (d.at("family") == family && holds(d, env)) return d;
    throw DiagramError("no diagram for " + env.group.name());
}

}  // namespace

ExceptionalResult exceptional_compact(const GroupDescriptor& g) {
    const auto family = diagram_family(g);
    if (family.empty()) throw DiagramError(g.name() + " is handled by the classical partition, not by a diagram");
    Env env = make_env(g);
    const json& d = select_diagram(family, env);

    ExceptionalResult out;
    out.diagram_id = d.at("id").get<std::string>();
    Certificate& cert = out.certificate;
    cert.kind = Certificate::Kind::Split;
    cert.subject = g.name();

    {
        std::vector<Fact> facts;
        holds(d, env, &facts);
        auto& cl = cert.add("diagram " + out.diagram_id + " applies to " + g.name(), Tag::Diagram);
        cl.facts = std::move(facts);
    }

    struct Cls {
        std::string tag;
        bool special = false;
        ClassValue value;
    };
    std::vector<Cls> classes;
    nt::PrimeSet special_primes;
    for (const auto& c : d.at("classes")) {
        Cls k{c.at("tag").get<std::string>(), c.value("special", false), {}};
        std::vector<Fact> cond;
        if (!holds(c, env, &cond)) {
            auto& cl = cert.add("class " + k.tag + " is absent: its condition fails", Tag::Arithmetic);
            cl.facts = std::move(cond);
            continue;
        }
        k.value = eval_set(c.at("set"), env);
        if (k.special) special_primes.insert(k.value.primes.begin(), k.value.primes.end());
        classes.push_back(std::move(k));
    }

    VertexList vertices;
    std::map<std::string, Label> by_tag;
    nt::PrimeSet seen;
    for (auto& k : classes) {
        if (!k.special)
            for (auto r : special_primes) k.value.primes.erase(r);
        if (k.value.primes.empty()) {
            auto& cl = cert.add("class " + k.tag + " is empty and dropped", Tag::Zsigmondy);
            for (const auto& f : k.value.facts)
                if (f.op == "ppd_empty") cl.facts.push_back(f);
            continue;
        }
        for (auto r : k.value.primes)
            if (!seen.insert(r).second) throw DiagramError(out.diagram_id + ": prime " + std::to_string(r) + " lies in two classes");
        Label l = Label::of_class(k.tag, std::vector<std::uint64_t>(k.value.primes.begin(), k.value.primes.end()));
        by_tag.emplace(k.tag, l);
        vertices.push_back(l);
        auto& cl = cert.add("class " + l.str() + " = " + [&] {
            std::string s = "{";
            for (auto r : l.members) s += (s.size() > 1 ? "," : "") + std::to_string(r);
            return s + "}";
        }(), Tag::Diagram);
        for (const auto& f : k.value.facts)
            if (f.op != "ppd_empty") cl.facts.push_back(f);
    }

    std::vector<std::pair<Label, Label>> edges;
    auto add_edge = [&](const json& e, std::vector<Fact> facts, bool conditional) {
        const auto a = e.at(0).get<std::string>(), b = e.at(1).get<std::string>();
        if (!by_tag.count(a) || !by_tag.count(b)) return;
        edges.emplace_back(by_tag.at(a), by_tag.at(b));
        auto& cl = cert.add(a + " ~ " + b + (conditional ? " (condition holds)" : ""), Tag::Diagram, true);
        cl.facts = std::move(facts);
    };
    for (const auto& e : d.value("edges", json::array())) add_edge(e, {}, false);
    for (const auto& ce : d.value("conditional_edges", json::array())) {
        std::vector<Fact> facts;
        if (holds(ce, env, &facts)) {
            add_edge(ce.at("edge"), std::move(facts), true);
        } else {
            const auto& e = ce.at("edge");
            auto& cl = cert.add(e.at(0).get<std::string>() + " and " + e.at(1).get<std::string>() +
                                    " are non-adjacent (condition fails)",
                                Tag::Diagram);
            cl.facts = std::move(facts);
        }
    }
    out.graph = Graph::from_edges(vertices, edges);

    auto side = [&](const json& tags) {
        VertexList v;
        for (const auto& t : tags)
            if (by_tag.count(t.get<std::string>())) v.push_back(by_tag.at(t.get<std::string>()));
        std::sort(v.begin(), v.end());
        return v;
    };
    for (const auto& p : d.at("partitions")) {
        if (!holds(p, env)) continue;
        SplitPartition sp{side(p.at("C")), side(p.at("I")), false};
        auto check = validate_partition(out.graph, sp);
        if (check) sp.special = is_special(out.graph, sp);
        out.stated.push_back(sp);
        out.stated_checks.push_back(check);
    }
    for (std::size_t i = 0; i < out.stated.size(); ++i)
        if (out.stated_checks[i]) {
            out.partition = out.stated[i];
            out.stated_partition_valid = true;
            break;
        }
    if (!out.stated_partition_valid) {
        for (std::size_t i = 0; i < out.stated.size(); ++i)
            cert.add("stated partition " + std::to_string(i + 1) + " rejected: " + out.stated_checks[i].reason,
                     Tag::Diagram);
        const auto verdict = is_split_degree(out.graph);
        if (!verdict.split || !verdict.partition) throw DiagramError(out.diagram_id + ": class graph is not split");
        out.partition = *verdict.partition;
        cert.add("partition taken from the degree-sequence test", Tag::Arithmetic);
    }
    cert.graph = out.graph;
    cert.partition = out.partition;
    return out;
}

Graph expand_class_graph(const Graph& classes) {
    auto primes_of = [](const Label& l) {
        return l.is_prime() ? std::vector<std::uint64_t>{l.prime} : l.members;
    };
    std::vector<std::uint64_t> vertices;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (const auto& v : classes.vertices()) {
        const auto ps = primes_of(v);
        vertices.insert(vertices.end(), ps.begin(), ps.end());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) edges.emplace_back(ps[i], ps[j]);
    }
    for (const auto& [i, j] : classes.edges())
        for (auto r : primes_of(classes.vertex(i)))
            for (auto s : primes_of(classes.vertex(j))) edges.emplace_back(r, s);
    return Graph::from_primes(vertices, edges);
}

}  // namespace gkc
