#include "gkc/audit.hpp"

#include <limits>

namespace gkc {

using nt::Integer;

namespace {

bool fits_i64(const Integer& v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::uint64_t as_u64(const Integer& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) throw std::out_of_range(nt::to_string(v));
    return static_cast<std::uint64_t>(v);
}

std::int64_t as_i64(const Integer& v) {
    if (!fits_i64(v)) throw std::out_of_range(nt::to_string(v));
    return static_cast<std::int64_t>(v);
}

std::string show(const Fact& f) {
    std::string s = f.op + "[";
    for (std::size_t i = 0; i < f.args.size(); ++i) s += (i ? ", " : "") + nt::to_string(f.args[i]);
    return s + "]";
}

std::string verdict(bool ok, const Fact& f) { return ok ? std::string() : show(f) + " does not hold"; }

}  // namespace

std::string check_fact(const Fact& f) {
    static const std::map<std::string, std::size_t> arity = {
        {"prime", 1},        {"composite", 1},    {"order", 3},          {"raw_order", 3},  {"divides", 2},
        {"ndivides", 2},     {"lt", 2},           {"le", 2},             {"eq", 2},         {"ne", 2},
        {"lin_lt", 5},       {"lin_le", 5},       {"sum_lt", 3},         {"sum_gt", 3},     {"affine2", 3},
        {"eta", 2},          {"nu", 2},           {"ppd_nonempty", 2},   {"ppd_empty", 2},  {"zsig_exception", 2},
        {"pi_part", 3},      {"not_subset_pi", 2}, {"primitive_root", 2},
    };
    auto it = arity.find(f.op);
    if (it == arity.end()) return "unknown operation " + f.op;
    if (f.args.size() != it->second) return show(f) + ": expected " + std::to_string(it->second) + " arguments";
    const auto& a = f.args;
    try {
        if (f.op == "prime") return verdict(nt::is_prime(a[0]), f);
        if (f.op == "composite") return verdict(a[0] > 1 && !nt::is_prime(a[0]), f);
        if (f.op == "order" || f.op == "raw_order") {
            const auto r = as_u64(a[0]);
            const auto n = as_i64(a[1]);
            if (!nt::is_prime(r)) return show(f) + ": modulus is not prime";
            const auto k = f.op == "order" ? nt::mult_order(r, n) : nt::raw_order(r, n);
            return verdict(Integer(k) == a[2], f);
        }
        if (f.op == "divides") return verdict(a[0] != 0 && a[1] % a[0] == 0, f);
        if (f.op == "ndivides") return verdict(a[0] != 0 && a[1] % a[0] != 0, f);
        if (f.op == "lt") return verdict(a[0] < a[1], f);
        if (f.op == "le") return verdict(a[0] <= a[1], f);
        if (f.op == "eq") return verdict(a[0] == a[1], f);
        if (f.op == "ne") return verdict(a[0] != a[1], f);
        if (f.op == "lin_lt") return verdict(a[0] * a[1] < a[2] * a[3] + a[4], f);
        if (f.op == "lin_le") return verdict(a[0] * a[1] <= a[2] * a[3] + a[4], f);
        if (f.op == "sum_lt") return verdict(a[0] + a[1] < a[2], f);
        if (f.op == "sum_gt") return verdict(a[0] + a[1] > a[2], f);
        if (f.op == "affine2") return verdict(a[0] == 2 * a[2] + a[1], f);
        if (f.op == "eta") {
            const Integer e = a[0];
            return verdict(e > 0 && a[1] == (e % 2 == 1 ? e : Integer(e / 2)), f);
        }
        if (f.op == "nu") {
            const Integer j = a[0];
            Integer v = j % 4 == 0 ? j : (j % 2 == 0 ? Integer(j / 2) : Integer(2 * j));
            return verdict(j > 0 && a[1] == v, f);
        }
        if (f.op == "ppd_nonempty" || f.op == "ppd_empty") {
            const auto i = as_u64(a[0]);
            const auto n = as_i64(a[1]);
            if (i == 0 || (n >= -1 && n <= 1)) return show(f) + ": needs i >= 1 and |n| > 1";
            if (f.op == "ppd_nonempty") return verdict(!nt::zsigmondy_exception(n, i), f);
            return verdict(nt::ppd_set(i, n).empty(), f);
        }
        if (f.op == "zsig_exception") return verdict(nt::zsigmondy_exception(as_i64(a[0]), as_u64(a[1])), f);
        if (f.op == "pi_part" || f.op == "not_subset_pi") {
            if (a[0] < 1 || a[1] < 1) return show(f) + ": arguments must be positive";
            const auto pk = nt::prime_set(a[1]);
            if (f.op == "pi_part") return verdict(nt::pi_part(a[0], pk) == a[2], f);
            const auto pa = nt::prime_set(a[0]);
            bool inside = true;
            for (auto r : pa) inside = inside && pk.count(r);
            return verdict(!inside, f);
        }
        if (f.op == "primitive_root") {
            const auto n = as_u64(a[1]);
            if (n < 3 || !nt::is_prime(n)) return show(f) + ": modulus must be an odd prime";
            return verdict(nt::is_primitive_root(as_i64(a[0]), n), f);
        }
    } catch (const std::exception& e) {
        return show(f) + ": " + e.what();
    }
    return "unknown operation " + f.op;
}

AuditReport audit(const Certificate& c) {
    AuditReport report;
    for (std::size_t i = 0; i < c.claims.size(); ++i) {
        if (c.claims[i].assumption) ++report.assumptions;
        for (std::size_t k = 0; k < c.claims[i].facts.size(); ++k) {
            ++report.facts_checked;
            auto why = check_fact(c.claims[i].facts[k]);
            if (!why.empty()) report.failures.push_back({i, k, c.claims[i].statement + ": " + why});
        }
    }
    return report;
}

}  // namespace gkc
