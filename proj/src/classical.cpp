#include "gkc/gkbuild.hpp"

namespace gkc {

using nt::Integer;

bool PhiContext::linear_or_unitary() const {
    return group.family == LieFamily::A || group.family == LieFamily::A2;
}

PhiContext make_phi_context(const GroupDescriptor& g) {
    if (g.kind != GroupDescriptor::Kind::Lie || !is_classical(g.family))
        throw std::invalid_argument(g.name() + " is not a classical group");
    PhiContext ctx;
    ctx.group = g;
    ctx.epsilon = g.epsilon();
    ctx.n = g.prk();
    ctx.p = g.p;
    ctx.q = g.q();
    if (ctx.linear_or_unitary())
        ctx.delta = nt::prime_set(ctx.epsilon > 0 ? Integer(ctx.q - 1) : Integer(ctx.q + 1));
    else if (ctx.q % 2 == 1)
        ctx.delta = {2};
    return ctx;
}

std::uint64_t nu(std::uint64_t n) {
    if (n % 4 == 0) return n;
    if (n % 2 == 0) return n / 2;
    return 2 * n;
}

std::uint64_t eta(std::uint64_t n) { return n % 2 ? n : n / 2; }

std::uint64_t nu_eps(int epsilon, std::uint64_t j) { return epsilon > 0 ? j : nu(j); }

std::uint64_t phi_of_e(std::uint64_t e, const PhiContext& ctx) {
    if (ctx.linear_or_unitary()) return nu_eps(ctx.epsilon, e);
    return eta(e);
}

std::uint64_t phi(std::uint64_t r, const PhiContext& ctx) {
    if (r == ctx.p) throw std::invalid_argument("phi: r equals the characteristic");
    const auto q = static_cast<std::int64_t>(ctx.q);
    if (ctx.linear_or_unitary()) return nt::mult_order(r, ctx.epsilon * q);
    return eta(nt::mult_order(r, q));
}

std::set<std::uint64_t> present_e_values(const PhiContext& ctx) {
    std::set<std::uint64_t> out;
    const std::uint64_t n = ctx.n;
    switch (ctx.group.family) {
        case LieFamily::A:
            for (std::uint64_t j = 1; j <= n; ++j) out.insert(j);
            break;
        case LieFamily::A2:
            for (std::uint64_t j = 1; j <= n; ++j) out.insert(nu(j));
            break;
        case LieFamily::B:
        case LieFamily::C:
            for (std::uint64_t e = 1; e <= 2 * n; ++e)
                if (eta(e) <= n) out.insert(e);
            break;
        case LieFamily::D:
            for (std::uint64_t e = 1; e <= 2 * n; ++e)
                if (eta(e) <= n - 1 || n % e == 0) out.insert(e);
            break;
        case LieFamily::D2:
            for (std::uint64_t e = 1; e <= 2 * n; ++e)
                if (eta(e) <= n - 1 || ((2 * n) % e == 0 && n % e != 0)) out.insert(e);
            break;
        default: throw std::invalid_argument("present_e_values: not classical");
    }
    return out;
}

std::set<std::uint64_t> j_set(const PhiContext& ctx) {
    std::set<std::uint64_t> out;
    for (auto e : present_e_values(ctx)) {
        const auto f = phi_of_e(e, ctx);
        if (2 * f > ctx.n && f <= ctx.n) out.insert(e);
    }
    return out;
}

namespace {

std::string class_name(std::uint64_t e) { return "R" + std::to_string(e); }

Fact phi_relation(std::uint64_t e, std::uint64_t f, const PhiContext& ctx) {
    if (!ctx.linear_or_unitary()) return fact("eta", {e, f});
    if (ctx.epsilon < 0) return fact("nu", {e, f});
    return fact("eq", {e, f});
}

}  // namespace

ClassicalPartition classical_compact_partition(const PhiContext& ctx) {
    if (ctx.n < 4) throw RankTooSmall(ctx.group.name() + ": prk " + std::to_string(ctx.n) + " < 4");
    const std::uint64_t n = ctx.n;
    const auto q = static_cast<std::int64_t>(ctx.q);
    const Integer eps_q_minus_1 = ctx.linear_or_unitary() ? Integer(ctx.epsilon * q - 1) : Integer(ctx.q - 1);
    nt::PpdTable table(q);

    ClassicalPartition out;
    Certificate& cert = out.certificate;
    cert.kind = Certificate::Kind::Split;
    cert.subject = ctx.group.name();

    VertexList C, I;
    C.push_back(Label::of_class("{p}", {ctx.p}));
    cert.add("p = " + std::to_string(ctx.p) + " is adjacent to every prime r with phi(r) <= n/2", Tag::Lemma5_4, true)
        .facts.push_back(fact("prime", {ctx.p}));
    for (auto r : ctx.delta) {
        C.push_back(Label::of_class("{" + std::to_string(r) + "}", {r}));
        auto& cl = cert.add(std::to_string(r) + " in delta(L): placed by Lemma5.3 exclusion; clique membership assumed",
                            Tag::Lemma5_3_ii, true);
        cl.facts.push_back(fact("divides", {r, eps_q_minus_1}));
    }

    const auto J = j_set(ctx);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> i_classes;  // (e, phi)
    for (auto e : present_e_values(ctx)) {
        const auto f = phi_of_e(e, ctx);
        const auto& full = table.get(e);
        if (full.empty()) {
            auto& cl = cert.add(class_name(e) + "(" + std::to_string(q) + ") is empty", Tag::Zsigmondy);
            cl.facts.push_back(fact("zsig_exception", {q, e}));
            cl.facts.push_back(fact("ppd_empty", {e, q}));
            continue;
        }
        std::vector<std::uint64_t> members;
        for (auto r : full)
            if (!ctx.delta.count(r)) members.push_back(r);
        if (members.empty()) {
            auto& cl = cert.add(class_name(e) + " lies inside delta(L)", Tag::Arithmetic);
            for (auto r : full) cl.facts.push_back(fact("divides", {r, eps_q_minus_1}));
            continue;
        }
        cert.add(class_name(e) + "(" + std::to_string(q) + ") is nonempty", Tag::Zsigmondy)
            .facts.push_back(fact("ppd_nonempty", {e, q}));
        const Label label = Label::of_class(class_name(e), members);
        if (J.count(e)) {
            I.push_back(label);
            i_classes.emplace_back(e, f);
            auto& cl = cert.add(class_name(e) + " lies in I: n/2 < phi = " + std::to_string(f) + " <= n = " +
                                    std::to_string(n),
                                Tag::Arithmetic);
            cl.facts.push_back(fact("lin_lt", {1, n, 2, f, 0}));
            cl.facts.push_back(fact("le", {f, n}));
            cl.facts.push_back(phi_relation(e, f, ctx));
            for (auto r : members) {
                cl.facts.push_back(fact("order", {r, q, e}));
                if (ctx.linear_or_unitary()) cl.facts.push_back(fact("order", {r, ctx.epsilon * q, f}));
            }
            if (members.size() > 1)
                cert.add(class_name(e) + " is a clique (equal e-values)", Tag::Lemma5_3_iv, true)
                    .facts.push_back(fact("eq", {e, e}));
        } else {
            C.push_back(label);
            auto& cl = cert.add(class_name(e) + " joins the clique: phi = " + std::to_string(f) + " <= n/2",
                                Tag::Lemma5_3_ii, true);
            cl.facts.push_back(fact("lin_le", {2, f, 1, n, 0}));
            cl.facts.push_back(phi_relation(e, f, ctx));
            for (auto r : members) cl.facts.push_back(fact("order", {r, q, e}));
        }
    }

    for (std::size_t a = 0; a < i_classes.size(); ++a)
        for (std::size_t b = a + 1; b < i_classes.size(); ++b) {
            const auto [ea, fa] = i_classes[a];
            const auto [eb, fb] = i_classes[b];
            auto& cl = cert.add(class_name(ea) + " and " + class_name(eb) + " are non-adjacent", Tag::Lemma5_3_iii, true);
            cl.facts.push_back(fact("ne", {ea, eb}));
            cl.facts.push_back(fact("sum_gt", {fa, fb, n}));
            cl.facts.push_back(fact("lin_lt", {1, n, 2, fa, 0}));
            cl.facts.push_back(fact("lin_lt", {1, n, 2, fb, 0}));
            cl.facts.push_back(fact("le", {fa, n}));
            cl.facts.push_back(fact("le", {fb, n}));
        }

    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t a = 0; a < C.size(); ++a)
        for (std::size_t b = a + 1; b < C.size(); ++b) edges.emplace_back(C[a], C[b]);
    VertexList all = C;
    all.insert(all.end(), I.begin(), I.end());
    out.graph = Graph::from_edges(all, edges);
    std::sort(C.begin(), C.end());
    std::sort(I.begin(), I.end());
    out.partition = SplitPartition{C, I, false};
    out.partition.special = is_special(out.graph, out.partition);
    cert.graph = out.graph;
    cert.partition = out.partition;
    return out;
}

}  // namespace gkc
