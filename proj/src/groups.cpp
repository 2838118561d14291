#include "gkc/groups.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace gkc {

using nt::Integer;
using nt::ipow;

bool is_classical(LieFamily f) {
    switch (f) {
        case LieFamily::A:
        case LieFamily::A2:
        case LieFamily::B:
        case LieFamily::C:
        case LieFamily::D:
        case LieFamily::D2: return true;
        default: return false;
    }
}

std::string family_name(LieFamily f) {
    switch (f) {
        case LieFamily::A: return "A";
        case LieFamily::A2: return "2A";
        case LieFamily::B: return "B";
        case LieFamily::C: return "C";
        case LieFamily::D: return "D";
        case LieFamily::D2: return "2D";
        case LieFamily::G2: return "G2";
        case LieFamily::F4: return "F4";
        case LieFamily::E6: return "E6";
        case LieFamily::E62: return "2E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
        case LieFamily::B22: return "2B2";
        case LieFamily::G22: return "2G2";
        case LieFamily::F42: return "2F4";
        case LieFamily::D43: return "3D4";
    }
    return "?";
}

GroupDescriptor GroupDescriptor::cyclic(std::uint64_t p) {
    if (!nt::is_prime(p)) throw NotSimple("Z(" + std::to_string(p) + "): order must be prime");
    GroupDescriptor g;
    g.kind = Kind::Cyclic;
    g.p = p;
    return g;
}

GroupDescriptor GroupDescriptor::alternating(unsigned n) {
    if (n < 5) throw NotSimple("Alt(" + std::to_string(n) + ") is not a nonabelian simple group; need n >= 5");
    GroupDescriptor g;
    g.kind = Kind::Alternating;
    g.n = n;
    return g;
}

GroupDescriptor GroupDescriptor::symmetric(unsigned n) {
    if (n < 2) throw DescriptorError("Sym(" + std::to_string(n) + "): need n >= 2");
    GroupDescriptor g;
    g.kind = Kind::Symmetric;
    g.n = n;
    return g;
}

GroupDescriptor GroupDescriptor::sporadic_group(const std::string& name) {
    for (const auto& r : sporadic_table()) {
        bool hit = r.name == name || std::find(r.aliases.begin(), r.aliases.end(), name) != r.aliases.end();
        if (!hit) continue;
        GroupDescriptor g;
        g.kind = Kind::Sporadic;
        g.sporadic = r.name;
        return g;
    }
    throw DescriptorError("unknown sporadic group " + name);
}

namespace {

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) throw InvalidField("field size " + std::to_string(q) + " is not a prime power");
    const auto f = nt::factor(q);
    if (f.factors.size() != 1) throw InvalidField("field size " + std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint64_t>(f.factors[0].prime), f.factors[0].exponent};
}

}  // namespace

GroupDescriptor GroupDescriptor::lie(LieFamily family, unsigned rank, std::uint64_t q) {
    auto [p, a] = prime_power(q);
    const std::string text = family_name(family) + (is_classical(family) ? std::to_string(rank) : "") + "(" +
                             std::to_string(q) + ")";

    unsigned natural = rank;
    switch (family) {
        case LieFamily::A:
            if (rank < 1) throw DescriptorError(text + ": rank must be >= 1");
            break;
        case LieFamily::A2:
            if (rank < 2) throw DescriptorError(text + ": rank must be >= 2");
            break;
        case LieFamily::B:
            if (rank < 2) throw DescriptorError(text + ": rank must be >= 2");
            break;
        case LieFamily::C:
            if (rank < 2) throw DescriptorError(text + ": rank must be >= 2");
            if (rank == 2) return lie(LieFamily::B, 2, q);
            break;
        case LieFamily::D:
            if (rank < 3) throw DescriptorError(text + ": rank must be >= 3");
            if (rank == 3) return lie(LieFamily::A, 3, q);
            break;
        case LieFamily::D2:
            if (rank < 2) throw DescriptorError(text + ": rank must be >= 2");
            if (rank == 2) {
                const Integer q2 = Integer(q) * q;
                if (q2 > std::numeric_limits<std::uint32_t>::max()) throw InvalidField(text + ": field too large");
                return lie(LieFamily::A, 1, static_cast<std::uint64_t>(q2));
            }
            if (rank == 3) return lie(LieFamily::A2, 3, q);
            break;
        case LieFamily::G2: natural = 2; break;
        case LieFamily::F4: natural = 4; break;
        case LieFamily::E6:
        case LieFamily::E62: natural = 6; break;
        case LieFamily::E7: natural = 7; break;
        case LieFamily::E8: natural = 8; break;
        case LieFamily::B22:
            natural = 2;
            if (p != 2 || a % 2 == 0) throw InvalidField(text + ": q must be 2^(2m+1)");
            break;
        case LieFamily::G22:
            natural = 2;
            if (p != 3 || a % 2 == 0) throw InvalidField(text + ": q must be 3^(2m+1)");
            break;
        case LieFamily::F42:
            natural = 4;
            if (p != 2 || a % 2 == 0) throw InvalidField(text + ": q must be 2^(2m+1)");
            break;
        case LieFamily::D43: natural = 4; break;
    }
    if (!is_classical(family) && rank != 0 && rank != natural)
        throw DescriptorError(text + ": rank does not match the family");

    const bool not_simple = (family == LieFamily::A && rank == 1 && (q == 2 || q == 3)) ||
                            (family == LieFamily::A2 && rank == 2 && q == 2) ||
                            (family == LieFamily::B && rank == 2 && q == 2) ||
                            (family == LieFamily::G2 && q == 2) || (family == LieFamily::B22 && q == 2) ||
                            (family == LieFamily::G22 && q == 3);
    if (not_simple) throw NotSimple(text + " is not simple");
    if (family == LieFamily::F42 && q == 2) throw NotSimple(text + " is not simple; its derived group is 2F4(2)'");

    GroupDescriptor g;
    g.kind = Kind::Lie;
    g.family = family;
    g.n = natural;
    g.p = p;
    g.a = a;
    return g;
}

std::uint64_t GroupDescriptor::q() const {
    if (kind != Kind::Lie) throw std::logic_error("q() on a group not of Lie type");
    return static_cast<std::uint64_t>(ipow(Integer(p), a));
}

int GroupDescriptor::epsilon() const {
    return kind == Kind::Lie && (family == LieFamily::A2 || family == LieFamily::D2 || family == LieFamily::E62) ? -1
                                                                                                                  : 1;
}

unsigned GroupDescriptor::prk() const {
    if (kind != Kind::Lie || !is_classical(family)) throw std::logic_error("prk() on a non-classical group");
    return (family == LieFamily::A || family == LieFamily::A2) ? n + 1 : n;
}

std::string GroupDescriptor::name() const {
    switch (kind) {
        case Kind::Cyclic: return "Z(" + std::to_string(p) + ")";
        case Kind::Alternating: return "Alt(" + std::to_string(n) + ")";
        case Kind::Symmetric: return "Sym(" + std::to_string(n) + ")";
        case Kind::Sporadic: return sporadic;
        case Kind::Lie:
            return family_name(family) + (is_classical(family) ? std::to_string(n) : "") + "(" + std::to_string(q()) +
                   ")";
    }
    return "?";
}

Integer order(const GroupDescriptor& g) {
    using K = GroupDescriptor::Kind;
    switch (g.kind) {
        case K::Cyclic: return g.p;
        case K::Alternating:
        case K::Symmetric: {
            Integer f = 1;
            for (unsigned i = 2; i <= g.n; ++i) f *= i;
            return g.kind == K::Alternating ? Integer(f / 2) : f;
        }
        case K::Sporadic: return sporadic_record(g.sporadic).order;
        case K::Lie: break;
    }
    const Integer q = g.q();
    const unsigned n = g.n;
    auto gcd = [](const Integer& x, const Integer& y) { return boost::multiprecision::gcd(x, y); };
    auto qp = [&](unsigned e) { return ipow(q, e); };
    const Integer f4_tail = (qp(12) - 1) * (qp(8) - 1) * (qp(6) - 1) * (qp(2) - 1);
    const Integer f4 = qp(24) * f4_tail;
    Integer o = 1;
    switch (g.family) {
        case LieFamily::A:
            o = qp(n * (n + 1) / 2);
            for (unsigned i = 2; i <= n + 1; ++i) o *= qp(i) - 1;
            return o / gcd(Integer(n + 1), q - 1);
        case LieFamily::A2:
            o = qp(n * (n + 1) / 2);
            for (unsigned i = 2; i <= n + 1; ++i) o *= (i % 2 == 0) ? Integer(qp(i) - 1) : Integer(qp(i) + 1);
            return o / gcd(Integer(n + 1), q + 1);
        case LieFamily::B:
        case LieFamily::C:
            o = qp(n * n);
            for (unsigned i = 1; i <= n; ++i) o *= qp(2 * i) - 1;
            return o / gcd(Integer(2), q - 1);
        case LieFamily::D:
            o = qp(n * (n - 1)) * (qp(n) - 1);
            for (unsigned i = 1; i < n; ++i) o *= qp(2 * i) - 1;
            return o / gcd(Integer(4), qp(n) - 1);
        case LieFamily::D2:
            o = qp(n * (n - 1)) * (qp(n) + 1);
            for (unsigned i = 1; i < n; ++i) o *= qp(2 * i) - 1;
            return o / gcd(Integer(4), qp(n) + 1);
        case LieFamily::G2: return qp(6) * (qp(6) - 1) * (qp(2) - 1);
        case LieFamily::F4: return f4;
        case LieFamily::E6: return qp(12) * (qp(9) - 1) * (qp(5) - 1) * f4 / gcd(Integer(3), q - 1);
        case LieFamily::E62: return qp(12) * (qp(9) + 1) * (qp(5) + 1) * f4 / gcd(Integer(3), q + 1);
        case LieFamily::E7:
            return qp(39) * (qp(18) - 1) * (qp(14) - 1) * (qp(10) - 1) * f4 / gcd(Integer(2), q - 1);
        case LieFamily::E8:
            return qp(96) * (qp(30) - 1) * (qp(12) + 1) * (qp(20) - 1) * (qp(18) - 1) * (qp(14) - 1) * (qp(6) + 1) * f4;
        case LieFamily::B22: return qp(2) * (qp(2) + 1) * (q - 1);
        case LieFamily::G22: return qp(3) * (qp(3) + 1) * (q - 1);
        case LieFamily::F42: return qp(12) * (qp(6) + 1) * (qp(4) - 1) * (qp(3) + 1) * (q - 1);
        case LieFamily::D43: return qp(12) * (qp(8) + qp(4) + 1) * (qp(6) - 1) * (qp(2) - 1);
    }
    return o;
}

nt::PrimeSet prime_spectrum(const GroupDescriptor& g) {
    using K = GroupDescriptor::Kind;
    if (g.kind == K::Alternating || g.kind == K::Symmetric) {
        const auto ps = nt::primes_up_to(g.n);
        return nt::PrimeSet(ps.begin(), ps.end());
    }
    return nt::prime_set(order(g));
}

std::set<std::uint64_t> maximal_elements(const std::set<std::uint64_t>& values) {
    std::set<std::uint64_t> out;
    for (auto v : values) {
        if (v == 0) throw std::invalid_argument("element orders must be positive");
        bool dominated = false;
        for (auto w : values)
            if (w != v && w % v == 0) dominated = true;
        if (!dominated) out.insert(v);
    }
    return out;
}

Graph gk_from_spectrum(const SpectrumData& s) {
    if (s.mu.empty()) throw std::invalid_argument("gk_from_spectrum: empty spectrum");
    std::set<std::uint64_t> primes;
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (auto m : s.mu) {
        if (m == 0) throw std::invalid_argument("gk_from_spectrum: zero element order");
        const auto ps = nt::prime_set(m);
        primes.insert(ps.begin(), ps.end());
        for (auto r : ps)
            for (auto t : ps)
                if (r < t) edges.emplace(r, t);
    }
    return Graph::from_primes(std::vector<std::uint64_t>(primes.begin(), primes.end()),
                              std::vector<std::pair<std::uint64_t, std::uint64_t>>(edges.begin(), edges.end()));
}

SpectrumData spectrum_formulas(const GroupDescriptor& g) {
    SpectrumData s;
    s.group = g;
    auto u = [](const Integer& v) { return static_cast<std::uint64_t>(v); };
    if (g.is_tits()) {
        s.mu = sporadic_record(g.sporadic).mu;
        return s;
    }
    if (g.kind != GroupDescriptor::Kind::Lie) throw UnsupportedFamily("no element order formula for " + g.name());
    const Integer q = g.q(), p = g.p;
    std::set<std::uint64_t> mu;
    if (g.family == LieFamily::A && g.n == 1) {
        const Integer d = g.p == 2 ? 1 : 2;
        mu = {g.p, u((q - 1) / d), u((q + 1) / d)};
    } else if (g.family == LieFamily::B && g.n == 2) {
        if (g.p == 2 || g.p == 3) {
            const Integer d = g.p == 2 ? 1 : 2;
            mu = {u((q * q + 1) / d), u((q * q - 1) / d), u(p * (q + 1)), u(p * (q - 1)), u(p * p)};
        } else {
            mu = {u((q * q + 1) / 2), u((q * q - 1) / 2), u(p * (q + 1)), u(p * (q - 1))};
        }
    } else if (g.family == LieFamily::B22) {
        const Integer r = nt::exact_sqrt(2 * q);
        mu = {4, u(q - 1), u(q - r + 1), u(q + r + 1)};
    } else if (g.family == LieFamily::G22) {
        const Integer r = nt::exact_sqrt(3 * q);
        mu = {6, 9, u(q - 1), u((q + 1) / 2), u(q - r + 1), u(q + r + 1)};
    } else if ((g.family == LieFamily::B || g.family == LieFamily::C) && g.n == 3 && q == 3) {
        mu = {8, 12, 13, 14, 18, 20};
    } else {
        throw UnsupportedFamily("no element order formula for " + g.name());
    }
    s.mu = maximal_elements(mu);
    return s;
}

std::optional<std::string> spectrum_problem(const SpectrumData& s) {
    if (s.mu.empty()) return "empty spectrum";
    if (s.mu.count(0)) return "zero element order";
    if (maximal_elements(s.mu) != s.mu) return "mu is not an antichain under divisibility";
    nt::PrimeSet from_mu;
    for (auto m : s.mu) {
        const auto ps = nt::prime_set(m);
        from_mu.insert(ps.begin(), ps.end());
    }
    const auto expected = prime_spectrum(s.group);
    if (from_mu != expected) {
        std::string msg = "primes of mu differ from pi(|" + s.group.name() + "|):";
        for (auto r : from_mu)
            if (!expected.count(r)) msg += " extra " + std::to_string(r);
        for (auto r : expected)
            if (!from_mu.count(r)) msg += " missing " + std::to_string(r);
        return msg;
    }
    return std::nullopt;
}

std::vector<std::string> sporadic_problems(const SporadicRecord& r) {
    std::vector<std::string> out;
    const auto pi = nt::prime_set(r.order);
    auto check = [&](const PrimePartition& part, const std::string& what) {
        for (auto c : part.C)
            if (part.I.count(c)) out.push_back(r.name + " " + what + ": " + std::to_string(c) + " in both C and I");
        nt::PrimeSet all = part.C;
        all.insert(part.I.begin(), part.I.end());
        for (auto x : all)
            if (!pi.count(x))
                out.push_back(r.name + " " + what + ": " + std::to_string(x) + " does not divide the order");
        for (auto x : pi)
            if (!all.count(x)) out.push_back(r.name + " " + what + ": prime divisor " + std::to_string(x) + " missing");
    };
    check(r.prime_partition, "prime partition");
    if (r.solvable_partition) check(*r.solvable_partition, "solvable partition");
    if (r.solvable_witness_W)
        for (auto w : *r.solvable_witness_W)
            if (!pi.count(w)) out.push_back(r.name + " W: " + std::to_string(w) + " does not divide the order");
    return out;
}

}  // namespace gkc
