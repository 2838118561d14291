#include "gkc/gkbuild.hpp"

#include <algorithm>

namespace gkc {

namespace {

VertexList primes_as_labels(const nt::PrimeSet& s) {
    VertexList out;
    for (auto r : s) out.push_back(Label::of_prime(r));
    return out;
}

VertexList map_to_classes(const VertexList& side, const CompactForm& cf) {
    VertexList out;
    for (const auto& v : side) {
        const auto& cls = cf.class_map.at(v);
        if (std::find(out.begin(), out.end(), cls) == out.end()) out.push_back(cls);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void finish(TheoremDResult& r, const std::optional<SplitPartition>& stated) {
    r.verdict = is_split_degree(r.graph);
    if (stated) {
        const auto check = validate_partition(r.graph, *stated);
        r.partition_valid = check.ok;
        if (!check.ok) r.notes.push_back("stated partition rejected: " + check.reason);
        r.certificate.partition = *stated;
    } else if (r.verdict.partition) {
        r.certificate.partition = r.verdict.partition;
    }
    r.certificate.graph = r.graph;
    if (r.verdict.split) {
        r.certificate.kind = Certificate::Kind::Split;
        if (!r.partition_valid && r.verdict.partition) r.certificate.partition = r.verdict.partition;
    } else {
        r.certificate.kind = Certificate::Kind::NonSplit;
        r.certificate.partition.reset();
        r.certificate.witness = is_split_forbidden(r.graph).forbidden;
    }
}

}  // namespace

TheoremDResult theorem_d_verify(const GroupDescriptor& g) {
    TheoremDResult r;
    r.group = g;
    r.certificate.subject = "GK_c(" + g.name() + ")";

    switch (g.kind) {
        case GroupDescriptor::Kind::Cyclic: {
            r.method = "cyclic";
            r.graph = Graph::from_primes({g.p}, {});
            r.certificate.add("|pi(G)| = 1, so the graph is a single vertex", Tag::Arithmetic)
                .facts.push_back(fact("prime", {g.p}));
            finish(r, SplitPartition{{Label::of_prime(g.p)}, {}, true});
            return r;
        }
        case GroupDescriptor::Kind::Alternating:
        case GroupDescriptor::Kind::Symmetric: {
            r.method = "altsym";
            const auto kind = g.kind == GroupDescriptor::Kind::Alternating ? AltSymKind::Alt : AltSymKind::Sym;
            const Graph full = gk_altsym(kind, g.n);
            const auto cf = compact_form(full);
            r.graph = cf.quotient;
            const auto base = altsym_partition(g.n);
            SplitPartition mapped{map_to_classes(base.C, cf), map_to_classes(base.I, cf), false};
            std::erase_if(mapped.I, [&](const Label& v) {
                return std::find(mapped.C.begin(), mapped.C.end(), v) != mapped.C.end();
            });
            mapped.special = is_special(r.graph, mapped);
            const auto full_check = validate_partition(full, base);
            if (!full_check.ok) r.notes.push_back("partition on the full graph rejected: " + full_check.reason);
            auto& cl = r.certificate.add("odd r ~ s iff r + s <= n; C = primes <= n/2", Tag::Arithmetic);
            for (const auto& c : base.C) cl.facts.push_back(fact("le", {2 * c.prime, g.n}));
            for (const auto& i : base.I) cl.facts.push_back(fact("lt", {g.n, 2 * i.prime}));
            finish(r, mapped);
            return r;
        }
        case GroupDescriptor::Kind::Sporadic: {
            if (g.is_tits()) break;
            r.method = "sporadic";
            const auto& rec = sporadic_record(g.sporadic);
            for (const auto& p : sporadic_problems(rec)) r.notes.push_back(p);
            const auto C = primes_as_labels(rec.prime_partition.C);
            const auto I = primes_as_labels(rec.prime_partition.I);
            VertexList vs = C;
            vs.insert(vs.end(), I.begin(), I.end());
            std::vector<std::pair<Label, Label>> edges;
            for (std::size_t i = 0; i < C.size(); ++i)
                for (std::size_t j = i + 1; j < C.size(); ++j) edges.emplace_back(C[i], C[j]);
            r.graph = Graph::from_edges(vs, edges);
            r.certificate.add("tabulated partition: C a clique and I a coclique in GK(G)", Tag::Table, true);
            r.notes.push_back("model graph: C-I adjacencies are not tabulated and are omitted");
            finish(r, SplitPartition{C, I, false});
            return r;
        }
        case GroupDescriptor::Kind::Lie: break;
    }

    if (!diagram_family(g).empty()) {
        r.method = "diagram";
        auto ex = exceptional_compact(g);
        r.graph = ex.graph;
        r.certificate = ex.certificate;
        r.certificate.subject = "GK_c(" + g.name() + ")";
        if (!ex.stated_partition_valid) {
            r.notes.push_back("no stated partition validates on " + ex.diagram_id);
            for (const auto& c : ex.stated_checks)
                if (!c.ok) r.notes.push_back(c.reason);
        }
        finish(r, ex.stated_partition_valid ? std::optional<SplitPartition>(ex.partition) : std::nullopt);
        if (!ex.stated_partition_valid) r.partition_valid = false;
        return r;
    }

    r.method = "classical";
    auto cp = classical_compact_partition(make_phi_context(g));
    r.graph = cp.graph;
    r.certificate = cp.certificate;
    r.certificate.subject = "GK_c(" + g.name() + ")";
    finish(r, cp.partition);
    return r;
}

}  // namespace gkc
