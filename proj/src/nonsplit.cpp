#include "gkc/gkbuild.hpp"

#include <algorithm>

namespace gkc {

using nt::Integer;

namespace {

std::string set_str(const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

bool pi_subset(std::uint64_t a, std::uint64_t k) {
    const auto pa = nt::prime_set(a), pk = nt::prime_set(k);
    return std::includes(pk.begin(), pk.end(), pa.begin(), pa.end());
}

std::int64_t checked_power(std::uint64_t p, unsigned a) {
    const Integer q = nt::ipow(p, a);
    if (q > std::numeric_limits<std::int64_t>::max()) throw PreconditionViolated("q = p^a does not fit in 64 bits");
    return static_cast<std::int64_t>(q);
}

}  // namespace

Certificate lemma52_check(std::uint64_t k, std::uint64_t p, unsigned a) {
    if (a < 2) throw PreconditionViolated("lemma52_check: need a >= 2");
    if (k <= 1) throw PreconditionViolated("lemma52_check: need k > 1");
    if (!nt::is_prime(p)) throw PreconditionViolated("lemma52_check: p must be prime");
    if (pi_subset(a, k)) throw PreconditionViolated("lemma52_check: pi(a) is contained in pi(k)");
    const std::uint64_t a1 = nt::pi_part(a, nt::prime_set(k));
    const auto p64 = static_cast<std::int64_t>(p);
    if (nt::zsigmondy_exception(p64, k * a) || nt::zsigmondy_exception(p64, k * a1))
        throw CertificationFailed("lemma52_check: R_" + std::to_string(k * a) + "(p) or R_" + std::to_string(k * a1) +
                                  "(p) is a Zsigmondy exception");

    Certificate c;
    c.kind = Certificate::Kind::LemmaChain;
    c.subject = "|R_" + std::to_string(k) + "(" + std::to_string(p) + "^" + std::to_string(a) + ")| > 1";
    auto& pre = c.add("hypotheses: p prime, a >= 2, k > 1, pi(a) not inside pi(k)", Tag::Arithmetic);
    pre.facts = {fact("prime", {p}), fact("le", {2, a}), fact("lt", {1, k}), fact("not_subset_pi", {a, k})};
    c.add("a' = (a)_pi(k) = " + std::to_string(a1), Tag::Arithmetic).facts.push_back(fact("pi_part", {a, k, a1}));
    c.add("R_" + std::to_string(k * a) + "(" + std::to_string(p) + ") is nonempty", Tag::Zsigmondy)
        .facts.push_back(fact("ppd_nonempty", {k * a, p}));
    auto& second = c.add("R_" + std::to_string(k * a1) + "(" + std::to_string(p) + ") is nonempty", Tag::Zsigmondy);
    second.facts = {fact("ppd_nonempty", {k * a1, p}), fact("ne", {k * a, k * a1})};
    c.add(c.subject, Tag::Lemma5_2);
    return c;
}

LinearWitness nonsplit_witness_linear(unsigned n, std::uint64_t p, unsigned a) {
    if (n <= 11) throw PreconditionViolated("nonsplit_witness_linear: need n > 11");
    if (a < 2) throw PreconditionViolated("nonsplit_witness_linear: need a >= 2 (q > p)");
    if (!nt::is_prime(p)) throw PreconditionViolated("nonsplit_witness_linear: p must be prime");
    const std::int64_t q = checked_power(p, a);

    LinearWitness out;
    std::vector<Certificate> lemma;
    for (std::uint64_t k = n / 2 + 1; k < n && lemma.size() < 2; ++k) {
        if (2 * k <= n || pi_subset(a, k)) continue;
        try {
            lemma.push_back(lemma52_check(k, p, a));
        } catch (const CertificationFailed&) {
            continue;
        }
        (out.k1 ? out.k2 : out.k1) = k;
    }
    if (lemma.size() < 2) throw CertificationFailed("nonsplit_witness_linear: fewer than two admissible k");

    auto two_smallest = [&](std::uint64_t k) {
        const auto R = nt::ppd_set(k, q);
        if (R.size() < 2) throw CertificationFailed("|R_" + std::to_string(k) + "(q)| < 2 although both ppd sets are nonempty");
        return std::pair{*R.begin(), *std::next(R.begin())};
    };
    std::tie(out.r1, out.r2) = two_smallest(out.k1);
    std::tie(out.s1, out.s2) = two_smallest(out.k2);

    out.model = Graph::from_primes({out.r1, out.r2, out.s1, out.s2}, {{out.r1, out.r2}, {out.s1, out.s2}});
    out.witness = ForbiddenWitness{ForbiddenKind::TwoK2,
                                   {Label::of_prime(out.r1), Label::of_prime(out.r2), Label::of_prime(out.s1),
                                    Label::of_prime(out.s2)}};

    Certificate& c = out.certificate;
    c.kind = Certificate::Kind::NonSplit;
    c.subject = "GK(PSL_" + std::to_string(n) + "(" + std::to_string(q) + "))";
    c.graph = out.model;
    c.witness = out.witness;
    const std::uint64_t k1 = out.k1, k2 = out.k2;
    auto& iv = c.add("k1 = " + std::to_string(k1) + " < k2 = " + std::to_string(k2) + " lie in (n/2, n)",
                     Tag::Arithmetic);
    iv.facts = {fact("lin_lt", {1, n, 2, k1, 0}), fact("lt", {k1, k2}), fact("lt", {k2, n}),
                fact("not_subset_pi", {a, k1}), fact("not_subset_pi", {a, k2}), fact("ndivides", {k1, k2})};
    for (const auto& l : lemma) c.append(l);
    for (auto [k, r, s] : {std::tuple{k1, out.r1, out.r2}, std::tuple{k2, out.s1, out.s2}}) {
        auto& cl = c.add(std::to_string(r) + ", " + std::to_string(s) + " lie in R_" + std::to_string(k) + "(" +
                             std::to_string(q) + ")",
                         Tag::Arithmetic);
        cl.facts = {fact("prime", {r}), fact("order", {r, q, k}), fact("prime", {s}), fact("order", {s, q, k})};
        c.add("R_" + std::to_string(k) + "(q) is a clique", Tag::Lemma5_3_iv, true);
    }
    for (auto r : {out.r1, out.r2})
        for (auto s : {out.s1, out.s2}) {
            auto& cl = c.add(std::to_string(r) + " and " + std::to_string(s) + " are non-adjacent", Tag::Lemma5_3_iii,
                             true);
            cl.facts = {fact("ne", {k1, k2}), fact("sum_gt", {k1, k2, n}), fact("lin_lt", {1, n, 2, k1, 0}),
                        fact("le", {k2, n})};
        }
    c.add("{r1, r2, s1, s2} induces 2K2, so GK(L) is nonsplit", Tag::Arithmetic);
    return out;
}

Certificate sc_nonsplit_certificate(std::uint64_t n, std::uint64_t p) {
    if (!nt::is_prime(n) || n <= 13) throw PreconditionViolated("sc_nonsplit_certificate: need a prime n > 13");
    if (!nt::is_prime(p)) throw PreconditionViolated("sc_nonsplit_certificate: p must be prime");
    if (!nt::is_primitive_root(static_cast<std::int64_t>(p), n))
        throw PreconditionViolated("sc_nonsplit_certificate: p is not a primitive root modulo n");
    const std::uint64_t k = (n - 5) / 2, m = (n + 3) / 2, l = (n - 1) / 2;
    const auto pp = static_cast<std::int64_t>(p);

    Certificate c;
    c.kind = Certificate::Kind::NonSplit;
    c.subject = "S_c(PSL_" + std::to_string(n) + "(" + std::to_string(p) + "))";
    auto cls = [](std::uint64_t i) { return "R" + std::to_string(i); };

    c.add("n = r_{n-1}(p)", Tag::Arithmetic).facts = {fact("prime", {n}), fact("primitive_root", {p, n}),
                                                       fact("order", {n, p, n - 1})};
    c.add("r_n and r_{n-1} lie in a common solvable subgroup (normalizer of a Sylow r_n-subgroup)", Tag::Lemma5_5_AK,
          true)
        .facts.push_back(fact("order", {n, p, n - 1}));
    c.add("p is adjacent to r_{n-1} but not to r_n, so r_{n-1} and r_n are not twins", Tag::Lemma5_6_AK, true);
    c.add("k = (n-5)/2 = " + std::to_string(k) + ", m = (n+3)/2 = " + std::to_string(m) + ", l = (n-1)/2 = " +
              std::to_string(l),
          Tag::Arithmetic)
        .facts = {fact("affine2", {n, 5, k}), fact("affine2", {n, -3, m}), fact("affine2", {n, 1, l})};
    c.add("(n-1)/3 < k < (n-1)/2 < m < n-1", Tag::Arithmetic).facts = {
        fact("lt", {13, n}), fact("lin_lt", {1, n - 1, 3, k, 0}), fact("lin_lt", {2, k, 1, n - 1, 0}),
        fact("lin_lt", {1, n - 1, 2, m, 0}), fact("lt", {m, n - 1})};
    c.add("k and m divide neither n nor n-1", Tag::Arithmetic).facts = {
        fact("ndivides", {k, n}), fact("ndivides", {m, n}), fact("ndivides", {k, n - 1}), fact("ndivides", {m, n - 1})};
    c.add("r_m > m and 2m > n-1, so r_m | n-1 forces r_m = n-1, which is not prime", Tag::Arithmetic).facts = {
        fact("lin_lt", {1, n - 1, 2, m, 0}), fact("composite", {n - 1})};
    {
        const std::uint64_t x = (n - 3) / 2;
        auto& cl = c.add("r_k >= (n-3)/2; (n-3)/2 lies strictly between (n-1)/3 and (n-1)/2; r_k = (n-1)/2 would "
                         "need k | (n-3)/2; r_k = n-1 is not prime; so r_k does not divide n-1",
                         Tag::Fermat);
        cl.facts = {fact("affine2", {n, 3, x}), fact("lin_lt", {1, n - 1, 3, x, 0}), fact("lin_lt", {2, x, 1, n - 1, 0}),
                    fact("ndivides", {k, l - 1}), fact("composite", {n - 1})};
    }
    c.add(cls(k) + " ~ " + cls(m) + " since k + m < n", Tag::Lemma5_3_iii, true).facts.push_back(fact("sum_lt", {k, m, n}));
    c.add("r_l ~ r_k and r_l is not adjacent to r_m in GK(L)", Tag::Lemma5_3_iii, true).facts = {
        fact("sum_lt", {l, k, n}), fact("sum_gt", {l, m, n}), fact("ndivides", {l, m}), fact("ndivides", {m, l})};
    c.add("r_l in a solvable subgroup with r_m would force r_l | m", Tag::Lemma5_6_AK, true).facts.push_back(
        fact("lin_lt", {1, m, 2, l, 1}));
    c.add("then r_l = m divides p^(m-1) - 1, but l does not divide m - 1; so r_k and r_m are not twins", Tag::Fermat)
        .facts = {fact("ndivides", {l, m - 1})};
    c.add("r_m is adjacent to neither r_n nor r_{n-1} in S(L)", Tag::Lemma5_6_AK, true).facts = {
        fact("ndivides", {m, n}), fact("ndivides", {m, n - 1}), fact("ne", {m, n - 1})};
    c.add("a solvable subgroup with order divisible by r_n divides n(p^n - 1); r_k divides neither", Tag::Lemma5_5_AK,
          true)
        .facts = {fact("ndivides", {k, n})};
    c.add("a solvable {r_k, r_{n-1}}-subgroup is reducible; r_k divides neither p^(n-1) - 1 nor n - 1",
          Tag::Lemma5_7_tor, true)
        .facts = {fact("ndivides", {k, n - 1})};

    VertexList vs;
    std::vector<std::pair<Label, Label>> edges;
    bool numeric = true;
    std::map<std::uint64_t, std::vector<std::uint64_t>> members;
    try {
        for (auto i : {k, m, n - 1, n}) {
            const auto R = nt::ppd_set(i, pp);
            members[i] = std::vector<std::uint64_t>(R.begin(), R.end());
        }
    } catch (const nt::BudgetExceeded&) {
        numeric = false;
        members.clear();
    }
    for (auto i : {k, m, n - 1, n}) vs.push_back(Label::of_class(cls(i), members[i]));
    edges.emplace_back(vs[0], vs[1]);
    edges.emplace_back(vs[2], vs[3]);
    c.graph = Graph::from_edges(vs, edges);
    c.witness = ForbiddenWitness{ForbiddenKind::TwoK2, vs};
    if (numeric) {
        for (auto i : {k, m, n - 1, n}) {
            auto& cl = c.add(cls(i) + "(" + std::to_string(p) + ") = " + set_str(members[i]), Tag::Arithmetic);
            for (auto r : members[i]) cl.facts.push_back(fact("order", {r, p, i}));
            if (i == k || i == m)
                for (auto r : members[i]) {
                    cl.facts.push_back(fact("ndivides", {r, n}));
                    cl.facts.push_back(fact("ndivides", {r, n - 1}));
                }
        }
    } else {
        c.add("numeric instantiation skipped: factoring budget exceeded", Tag::Arithmetic);
    }
    c.add("the classes of r_k, r_m, r_{n-1}, r_n induce 2K2 in S_c(L)", Tag::Arithmetic);
    return c;
}

Certificate prop72_certificate(std::uint64_t u, std::uint64_t w, std::uint64_t p) {
    if (u == w || !nt::is_prime(u) || !nt::is_prime(w) || u == 2 || w == 2)
        throw PreconditionViolated("prop72_certificate: u and w must be distinct odd primes");
    if (!nt::is_prime(p)) throw PreconditionViolated("prop72_certificate: p must be prime");
    const std::uint64_t n = u * w;
    if (n % 3 != 2) throw PreconditionViolated("prop72_certificate: need uw = -1 (mod 3)");

    Certificate c;
    c.kind = Certificate::Kind::LemmaChain;
    const Integer q = nt::ipow(p, 3);
    c.subject = "S(PSL_" + std::to_string(n) + "(" + std::to_string(p) + "^3))";
    c.add("n = uw with u, w distinct odd primes and n = -1 (mod 3)", Tag::Arithmetic).facts = {
        fact("prime", {u}),       fact("prime", {w}),       fact("ne", {u, w}),           fact("ndivides", {2, u}),
        fact("ndivides", {2, w}), fact("divides", {3, n + 1}), fact("ndivides", {3, n}), fact("ndivides", {3, n - 1})};
    c.append(lemma52_check(n, p, 3));
    c.append(lemma52_check(n - 1, p, 3));
    c.add("R_n(q) and R_{n-1}(q) are cliques", Tag::Lemma5_3_iv, true);
    c.add("a solvable subgroup with order divisible by rs (r in R_n, s in R_{n-1}) forces s | n, so s in {u, w}",
          Tag::Lemma5_6_AK, true)
        .facts = {fact("lin_lt", {1, n, 2, n - 1, 0})};
    c.add("s divides q^(s-1) - 1, so n-1 divides s-1 and n <= s; but u, w < n", Tag::Fermat).facts = {
        fact("lt", {u, n}), fact("lt", {w, n})};

    if (q <= std::numeric_limits<std::int64_t>::max()) {
        const auto q64 = static_cast<std::int64_t>(q);
        try {
            const auto Rn = nt::ppd_set(n, q64);
            const auto Rn1 = nt::ppd_set(n - 1, q64);
            if (Rn.size() >= 2 && Rn1.size() >= 2) {
                const std::uint64_t r1 = *Rn.begin(), r2 = *std::next(Rn.begin());
                const std::uint64_t s1 = *Rn1.begin(), s2 = *std::next(Rn1.begin());
                auto& cl = c.add("instances r1, r2 in R_n(q), s1, s2 in R_{n-1}(q)", Tag::Arithmetic);
                cl.facts = {fact("order", {r1, q64, n}), fact("order", {r2, q64, n}), fact("order", {s1, q64, n - 1}),
                            fact("order", {s2, q64, n - 1})};
                c.graph = Graph::from_primes({r1, r2, s1, s2}, {{r1, r2}, {s1, s2}});
                c.witness = ForbiddenWitness{ForbiddenKind::TwoK2,
                                             {Label::of_prime(r1), Label::of_prime(r2), Label::of_prime(s1),
                                              Label::of_prime(s2)}};
            }
        } catch (const nt::BudgetExceeded&) {
            c.add("numeric instantiation skipped: factoring budget exceeded", Tag::Arithmetic);
        }
    } else {
        c.add("numeric instantiation skipped: q exceeds 64 bits", Tag::Arithmetic);
    }
    c.add("any r1, r2 in R_n(q) and s1, s2 in R_{n-1}(q) induce 2K2 in S(L)", Tag::Arithmetic);
    return c;
}

Psl11Result psl11_2_sc() {
    auto R = [](std::uint64_t i) {
        auto s = nt::ppd_set(i, 2);
        return std::vector<std::uint64_t>(s.begin(), s.end());
    };
    auto hub_members = R(2);
    hub_members.insert(hub_members.begin(), 2);
    std::map<std::string, Label> v;
    v.emplace("hub", Label::of_class("{2}uR2", hub_members));
    for (std::uint64_t i : {3, 4, 5, 7, 8, 9, 10, 11}) v.emplace("R" + std::to_string(i), Label::of_class("R" + std::to_string(i), R(i)));
    const std::vector<std::pair<std::string, std::string>> edge_names = {
        {"hub", "R3"}, {"hub", "R4"}, {"hub", "R5"}, {"hub", "R7"}, {"hub", "R8"}, {"hub", "R9"}, {"hub", "R10"},
        {"R3", "R4"},  {"R3", "R5"},  {"R3", "R7"},  {"R3", "R8"},  {"R3", "R9"},  {"R4", "R5"},  {"R4", "R7"},
        {"R4", "R8"},  {"R4", "R10"}, {"R5", "R10"}, {"R10", "R11"}};
    VertexList vs;
    for (const auto& [_, l] : v) vs.push_back(l);
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& [a, b] : edge_names) edges.emplace_back(v.at(a), v.at(b));

    Psl11Result out;
    out.graph = Graph::from_edges(vs, edges);
    out.witness = ForbiddenWitness{ForbiddenKind::TwoK2, {v.at("R3"), v.at("R7"), v.at("R10"), v.at("R11")}};
    Certificate& c = out.certificate;
    c.kind = Certificate::Kind::NonSplit;
    c.subject = "S_c(PSL_11(2))";
    c.graph = out.graph;
    c.witness = out.witness;
    for (const auto& l : vs) {
        auto& cl = c.add("class " + l.str() + " = " + set_str(l.members), Tag::Arithmetic);
        for (auto r : l.members)
            if (r != 2) {
                const auto i = l.name == "{2}uR2" ? 2 : std::stoull(l.name.substr(1));
                cl.facts.push_back(fact("order", {r, 2, i}));
            }
    }
    c.add("11 = r_10(2) since 2 is a primitive root modulo 11", Tag::Arithmetic).facts = {
        fact("primitive_root", {2, 11}), fact("order", {11, 2, 10})};
    c.add("R10 ~ R11 via the normalizer of an r_11-subgroup", Tag::Lemma5_5_AK, true);
    for (const auto& [a, b] : edge_names)
        if (!(a == "R10" && b == "R11")) c.add(v.at(a).str() + " ~ " + v.at(b).str(), Tag::Diagram, true);
    c.add("R3 ~ R7 and R10 ~ R11 with no edges between the pairs: an induced 2K2", Tag::Arithmetic);
    return out;
}

std::vector<std::uint64_t> artin_pairs(std::uint64_t p, std::uint64_t N) {
    std::vector<std::uint64_t> out;
    for (auto n : nt::primes_up_to(N)) {
        if (n < 3 || p % n == 0) continue;
        if (nt::is_primitive_root(static_cast<std::int64_t>(p), n)) out.push_back(n);
    }
    return out;
}

}  // namespace gkc
