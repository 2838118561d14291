#pragma once

// Exact integer arithmetic behind every adjacency criterion: factorization,
// multiplicative orders, primitive prime divisors, pi-parts and prime
// neighbours.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkc::nt {

using Integer = boost::multiprecision::cpp_int;
using PrimeSet = std::set<std::uint64_t>;

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Complete factorization of a positive integer. Bases are strictly increasing
/// and pass the primality test; the product of prime^exponent equals value.
struct Factorization {
    Integer value;
    std::vector<PrimePower> factors;

    Integer product() const;
    /// Prime bases as 64-bit values; throws std::overflow_error if one does not fit.
    PrimeSet primes() const;
};

/// Effort bound for factoring. Trial division runs up to trial_bound; each
/// composite cofactor left after that gets at most rho_iterations Brent steps.
struct FactorBudget {
    std::uint64_t trial_bound = 1u << 16;
    std::uint64_t rho_iterations = 1u << 22;
};

/// Process-wide default budget; the CLI overrides it from --budget.
FactorBudget default_budget();
void set_default_budget(const FactorBudget& budget);

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Factorization partial, Integer cofactor);

    /// Factors found so far; `partial.value` is the input.
    const Factorization& partial() const { return partial_; }
    const Integer& cofactor() const { return cofactor_; }

private:
    Factorization partial_;
    Integer cofactor_;
};

class NotCoprime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Primality. Deterministic Miller-Rabin for 64-bit inputs (the first twelve
// prime witnesses suffice below 3.3e24); above 64 bits boost's randomized test
// with 25 extra rounds after the same fixed witnesses.
bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

Factorization factor(const Integer& n, const FactorBudget& budget = default_budget());

/// The set pi(n) of prime divisors.
PrimeSet prime_set(const Integer& n, const FactorBudget& budget = default_budget());

/// Multiplicative order of n modulo the prime r, with no convention for r = 2.
std::uint64_t raw_order(std::uint64_t r, std::int64_t n);

/// e(r, n): for odd r the order of n modulo r; for r = 2 it is 1 when
/// n = 1 (mod 4) and 2 when n = 3 (mod 4).
std::uint64_t mult_order(std::uint64_t r, std::int64_t n);

/// Membership of (n, i) in the Bang-Zsigmondy exception list.
bool zsigmondy_exception(std::int64_t n, std::uint64_t i);

/// Value of the i-th cyclotomic polynomial at n.
Integer cyclotomic_value(std::uint64_t i, std::int64_t n);

/// R_i(n): all primes r with e(r, n) = i.
PrimeSet ppd_set(std::uint64_t i, std::int64_t n, const FactorBudget& budget = default_budget());

/// Cache of R_i(n) for a fixed base. Not internally synchronized.
class PpdTable {
public:
    explicit PpdTable(std::int64_t base, FactorBudget budget = default_budget());

    std::int64_t base() const { return base_; }
    const FactorBudget& budget() const { return budget_; }

    const PrimeSet& get(std::uint64_t i);
    bool nonempty(std::uint64_t i) { return !get(i).empty(); }
    const std::map<std::uint64_t, PrimeSet>& entries() const { return entries_; }

private:
    std::int64_t base_;
    FactorBudget budget_;
    std::map<std::uint64_t, PrimeSet> entries_;
};

/// (a)_pi: the largest divisor of a whose prime divisors all lie in pi.
std::uint64_t pi_part(std::uint64_t a, const PrimeSet& pi);
Integer pi_part(const Integer& a, const PrimeSet& pi);

std::uint64_t largest_prime_le(std::uint64_t x);
std::uint64_t smallest_prime_gt(std::uint64_t x);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// True iff the multiplicative order of p modulo the odd prime n is n - 1.
bool is_primitive_root(std::int64_t p, std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
Integer ipow(const Integer& base, std::uint64_t exp);
/// Exact integer square root; throws std::domain_error if n is not a square.
Integer exact_sqrt(const Integer& n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::string to_string(const Integer& n);

}  // namespace gkc::nt
