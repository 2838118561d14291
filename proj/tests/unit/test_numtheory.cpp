#include "gkc/numtheory.hpp"

#include <doctest.h>

using namespace gkc;
using nt::Integer;

TEST_CASE("primality") {
    CHECK(nt::is_prime(std::uint64_t{2}));
    CHECK(nt::is_prime(std::uint64_t{524287}));
    CHECK_FALSE(nt::is_prime(std::uint64_t{1}));
    CHECK_FALSE(nt::is_prime(std::uint64_t{561}));
    CHECK(nt::is_prime(std::uint64_t{18446744073709551557ull}));
    CHECK_FALSE(nt::is_prime(std::uint64_t{3215031751ull}));
    CHECK(nt::is_prime(Integer("170141183460469231731687303715884105727")));
}

TEST_CASE("factorization") {
    const auto f = nt::factor(Integer(16383));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.product() == 16383);
    CHECK(f.primes() == nt::PrimeSet{3, 43, 127});
    CHECK(nt::prime_set(Integer(360)) == nt::PrimeSet{2, 3, 5});
    const Integer big = Integer(1000003) * Integer(1000033) * Integer(999983);
    CHECK(nt::prime_set(big) == nt::PrimeSet{999983, 1000003, 1000033});
}

TEST_CASE("factoring budget is enforced") {
    nt::FactorBudget tiny{100, 10};
    const Integer semiprime = Integer(4294967291ull) * Integer(4294967279ull);
    CHECK_THROWS_AS(nt::factor(semiprime, tiny), nt::BudgetExceeded);
}

TEST_CASE("multiplicative order and the convention at 2") {
    CHECK(nt::mult_order(43, 4) == 7);
    CHECK(nt::mult_order(19, 4) == 9);
    CHECK(nt::mult_order(2, 5) == 1);
    CHECK(nt::mult_order(2, 7) == 2);
    CHECK(nt::mult_order(3, -2) == 1);
    CHECK(nt::raw_order(7, 2) == 3);
}

TEST_CASE("primitive prime divisors") {
    CHECK(nt::ppd_set(7, 4) == nt::PrimeSet{43, 127});
    CHECK(nt::ppd_set(9, 4) == nt::PrimeSet{19, 73});
    CHECK(nt::ppd_set(11, 2) == nt::PrimeSet{23, 89});
    CHECK(nt::ppd_set(6, 2).empty());
    CHECK(nt::ppd_set(1, 3).empty());
    CHECK(nt::ppd_set(2, 3) == nt::PrimeSet{2});
    CHECK(nt::ppd_set(11, 9) == nt::PrimeSet{23, 67, 661, 3851});
    CHECK(nt::ppd_set(2, -2).empty());
    CHECK(nt::zsigmondy_exception(2, 6));
    CHECK_FALSE(nt::zsigmondy_exception(2, 105));
    CHECK(nt::cyclotomic_value(6, 2) == 3);
    CHECK(nt::cyclotomic_value(12, 2) == 13);
}

TEST_CASE("ppd table caches") {
    nt::PpdTable t(4);
    CHECK(t.get(7) == nt::PrimeSet{43, 127});
    CHECK(t.nonempty(9));
    CHECK(t.entries().size() == 2);
}

TEST_CASE("pi-parts and helpers") {
    CHECK(nt::pi_part(360, nt::PrimeSet{2, 5}) == 40);
    CHECK(nt::pi_part(3, nt::prime_set(Integer(35))) == 1);
    CHECK(nt::largest_prime_le(100) == 97);
    CHECK(nt::smallest_prime_gt(100) == 101);
    CHECK(nt::primes_up_to(30).size() == 10);
    CHECK(nt::is_primitive_root(2, 19));
    CHECK_FALSE(nt::is_primitive_root(2, 7));
    CHECK(nt::exact_sqrt(Integer(64)) == 8);
    CHECK_THROWS(nt::exact_sqrt(Integer(65)));
    CHECK(nt::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
}
