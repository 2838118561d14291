#include "gkc/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>

namespace gkc::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::mutex budget_mutex;
FactorBudget process_budget;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool fits_u64(const Integer& n) { return n >= 0 && n <= std::numeric_limits<u64>::max(); }

bool miller_rabin_u64(u64 n, u64 witness) {
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(witness % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// iteration allowance runs out for this constant.
u64 brent_u64(u64 n, u64 c, u64& remaining) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    const u64 m = 128;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            const u64 steps = std::min(m, r - k);
            if (remaining < steps) return 0;
            remaining -= steps;
            for (u64 i = 0; i < steps; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

Integer brent_big(const Integer& n, const Integer& c, u64& remaining) {
    auto f = [&](const Integer& x) { return Integer((x * x + c) % n); };
    Integer y = 2, x = 2, ys = 2, q = 1, g = 1;
    const u64 m = 64;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            const u64 steps = std::min(m, r - k);
            if (remaining < steps) return 0;
            remaining -= steps;
            for (u64 i = 0; i < steps; ++i) {
                y = f(y);
                q = (q * (x > y ? Integer(x - y) : Integer(y - x))) % n;
            }
            g = boost::multiprecision::gcd(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = boost::multiprecision::gcd(x > ys ? Integer(x - ys) : Integer(ys - x), n);
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

Integer kth_root(const Integer& n, unsigned k) {
    const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
    Integer lo = 1, hi = Integer(1) << (bits / k + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (ipow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Largest k with n = b^k for an integer b >= 2; returns (b, k), k = 1 if none.
std::pair<Integer, unsigned> perfect_power(const Integer& n) {
    const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
    for (unsigned k = bits; k >= 2; --k) {
        const Integer r = kth_root(n, k);
        if (r >= 2 && ipow(r, k) == n) return {r, k};
    }
    return {n, 1};
}

Integer split_composite(const Integer& n, u64& remaining) {
    if (fits_u64(n)) {
        const u64 v = static_cast<u64>(n);
        for (u64 c = 1; remaining > 0; ++c) {
            const u64 d = brent_u64(v, c, remaining);
            if (d) return d;
        }
        return 0;
    }
    for (unsigned c = 1; remaining > 0; ++c) {
        Integer d = brent_big(n, c, remaining);
        if (d != 0) return d;
    }
    return 0;
}

void add_factor(std::map<Integer, unsigned>& acc, const Integer& p, unsigned e) { acc[p] += e; }

Factorization assemble(const Integer& value, const std::map<Integer, unsigned>& acc) {
    Factorization f;
    f.value = value;
    for (const auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

int mobius(u64 n) {
    int mu = 1;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

u64 mod_reduce(std::int64_t n, u64 r) {
    const std::int64_t m = static_cast<std::int64_t>(r);
    std::int64_t v = n % m;
    if (v < 0) v += m;
    return static_cast<u64>(v);
}

PrimeSet ppd_base_case(u64 i, std::int64_t n, const FactorBudget& budget) {
    const Integer value = abs(cyclotomic_value(i, n));
    PrimeSet result;
    if (value <= 1) return result;
    const u64 abs_n = static_cast<u64>(n < 0 ? -n : n);
    for (u64 r : factor(value, budget).primes()) {
        if (abs_n % r == 0) continue;
        if (mult_order(r, n) == i) result.insert(r);
    }
    return result;
}

}  // namespace

Integer Factorization::product() const {
    Integer p = 1;
    for (const auto& f : factors) p *= ipow(f.prime, f.exponent);
    return p;
}

PrimeSet Factorization::primes() const {
    PrimeSet out;
    for (const auto& f : factors) {
        if (!fits_u64(f.prime)) throw std::overflow_error("prime factor exceeds 64 bits: " + to_string(f.prime));
        out.insert(static_cast<u64>(f.prime));
    }
    return out;
}

FactorBudget default_budget() {
    std::lock_guard lock(budget_mutex);
    return process_budget;
}

void set_default_budget(const FactorBudget& budget) {
    std::lock_guard lock(budget_mutex);
    process_budget = budget;
}

BudgetExceeded::BudgetExceeded(Factorization partial, Integer cofactor)
    : std::runtime_error("factoring budget exceeded; unfactored cofactor " + to_string(cofactor)),
      partial_(std::move(partial)),
      cofactor_(std::move(cofactor)) {}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    for (u64 w : kWitnesses) {
        if (!miller_rabin_u64(n, w)) return false;
    }
    return true;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(static_cast<u64>(n));
    for (u64 p : kWitnesses) {
        if (n % p == 0) return false;
        if (powm(Integer(p), Integer(n - 1), n) != 1) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 25);
}

Factorization factor(const Integer& n, const FactorBudget& budget) {
    if (n < 1) throw std::invalid_argument("factor: n must be positive, got " + to_string(n));
    std::map<Integer, unsigned> acc;
    Integer rest = n;
    for (u64 p = 2; p <= budget.trial_bound && Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) add_factor(acc, p, e);
    }
    if (rest == 1) return assemble(n, acc);

    std::vector<std::pair<Integer, unsigned>> pending{{rest, 1}};
    u64 remaining = budget.rho_iterations;
    while (!pending.empty()) {
        auto [m, mult] = pending.back();
        pending.pop_back();
        if (m == 1) continue;
        if (Integer(budget.trial_bound) * budget.trial_bound >= m || is_prime(m)) {
            // below trial_bound^2 every remaining cofactor is prime
            add_factor(acc, m, mult);
            continue;
        }
        const auto [root, k] = perfect_power(m);
        if (k > 1) {
            pending.push_back({root, mult * k});
            continue;
        }
        const Integer d = split_composite(m, remaining);
        if (d == 0) {
            Integer left = m;
            for (const auto& [c, e] : pending) left *= ipow(c, e);
            throw BudgetExceeded(assemble(n, acc), left);
        }
        pending.push_back({d, mult});
        pending.push_back({m / d, mult});
    }
    return assemble(n, acc);
}

PrimeSet prime_set(const Integer& n, const FactorBudget& budget) { return factor(n, budget).primes(); }

std::uint64_t raw_order(std::uint64_t r, std::int64_t n) {
    if (!is_prime(r)) throw std::invalid_argument("raw_order: modulus must be prime");
    const u64 a = mod_reduce(n, r);
    if (a == 0) throw NotCoprime("raw_order: " + std::to_string(r) + " divides " + std::to_string(n));
    if (r == 2) return 1;
    u64 order = r - 1;
    for (u64 f : factor(order).primes()) {
        while (order % f == 0 && powmod(a, order / f, r) == 1) order /= f;
    }
    return order;
}

std::uint64_t mult_order(std::uint64_t r, std::int64_t n) {
    if (r == 2) {
        if (n % 2 == 0) throw NotCoprime("mult_order: 2 divides " + std::to_string(n));
        return mod_reduce(n, 4) == 1 ? 1 : 2;
    }
    return raw_order(r, n);
}

bool zsigmondy_exception(std::int64_t n, std::uint64_t i) {
    return (n == 2 && (i == 1 || i == 6)) || (n == -2 && (i == 2 || i == 3)) || (n == 3 && i == 1) ||
           (n == -3 && i == 2);
}

Integer cyclotomic_value(std::uint64_t i, std::int64_t n) {
    if (i == 0) throw std::invalid_argument("cyclotomic_value: index must be positive");
    Integer num = 1, den = 1;
    for (u64 d : divisors(i)) {
        const int mu = mobius(i / d);
        if (mu == 0) continue;
        Integer term = ipow(Integer(n), d) - 1;
        if (mu == 1)
            num *= term;
        else
            den *= term;
    }
    return num / den;
}

PrimeSet ppd_set(std::uint64_t i, std::int64_t n, const FactorBudget& budget) {
    if (i == 0) throw std::invalid_argument("ppd_set: index must be >= 1");
    if (n >= -1 && n <= 1) throw std::invalid_argument("ppd_set: base must satisfy |n| > 1");

    const u64 abs_n = static_cast<u64>(n < 0 ? -n : n);
    Integer root = abs_n;
    unsigned k = 1;
    for (unsigned cand = 63; cand >= 2; --cand) {
        if (n < 0 && cand % 2 == 0) continue;
        const Integer r = kth_root(Integer(abs_n), cand);
        if (r >= 2 && ipow(r, cand) == abs_n) {
            root = r;
            k = cand;
            break;
        }
    }
    if (k <= 1) return ppd_base_case(i, n, budget);

    // e(r, b^k) = e(r, b) / gcd(e(r, b), k)
    const std::int64_t base = n < 0 ? -static_cast<std::int64_t>(root) : static_cast<std::int64_t>(root);
    PrimeSet result;
    for (u64 j : divisors(i * k)) {
        if (j / std::gcd(j, static_cast<u64>(k)) != i) continue;
        const PrimeSet part = ppd_base_case(j, base, budget);
        result.insert(part.begin(), part.end());
    }
    return result;
}

PpdTable::PpdTable(std::int64_t base, FactorBudget budget) : base_(base), budget_(budget) {
    if (base >= -1 && base <= 1) throw std::invalid_argument("PpdTable: base must satisfy |n| > 1");
}

const PrimeSet& PpdTable::get(std::uint64_t i) {
    auto it = entries_.find(i);
    if (it != entries_.end()) return it->second;
    return entries_.emplace(i, ppd_set(i, base_, budget_)).first->second;
}

std::uint64_t pi_part(std::uint64_t a, const PrimeSet& pi) {
    if (a == 0) throw std::invalid_argument("pi_part: a must be positive");
    u64 part = 1;
    for (u64 p : pi) {
        if (p < 2) continue;
        while (a % p == 0) {
            a /= p;
            part *= p;
        }
    }
    return part;
}

Integer pi_part(const Integer& a_in, const PrimeSet& pi) {
    if (a_in < 1) throw std::invalid_argument("pi_part: a must be positive");
    Integer a = a_in, part = 1;
    for (u64 p : pi) {
        if (p < 2) continue;
        while (a % p == 0) {
            a /= p;
            part *= p;
        }
    }
    return part;
}

std::uint64_t largest_prime_le(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("largest_prime_le: x must be >= 2");
    while (!is_prime(x)) --x;
    return x;
}

std::uint64_t smallest_prime_gt(std::uint64_t x) {
    ++x;
    while (!is_prime(x)) ++x;
    return x;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

bool is_primitive_root(std::int64_t p, std::uint64_t n) {
    if (n < 3 || !is_prime(n)) throw std::invalid_argument("is_primitive_root: modulus must be an odd prime");
    if (mod_reduce(p, n) == 0) throw std::invalid_argument("is_primitive_root: p must not be divisible by n");
    return raw_order(n, p) == n - 1;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

Integer ipow(const Integer& base, std::uint64_t exp) {
    Integer result = 1, b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

Integer exact_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("exact_sqrt: negative argument");
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) throw std::domain_error("exact_sqrt: " + to_string(n) + " is not a square");
    return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::string to_string(const Integer& n) { return n.str(); }

}  // namespace gkc::nt
