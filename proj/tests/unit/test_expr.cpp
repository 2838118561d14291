#include "gkc/expr.hpp"

#include <doctest.h>

using namespace gkc;

TEST_CASE("expression evaluation") {
    ExprVars v{{"q", 8}, {"gcd2", 1}, {"sqrt2q", 4}};
    CHECK(eval_expr("q-sqrt2q+1", v) == 5);
    CHECK(eval_expr("(q+1)/gcd2", v) == 9);
    CHECK(eval_expr("q^2-q+1", v) == 57);
    CHECK(eval_expr("-q + 2*3", v) == -2);
    CHECK(eval_expr("2^3^2", {}) == 512);
    CHECK_THROWS_AS(eval_expr("q/3", v), ExprError);
    CHECK_THROWS_AS(eval_expr("r+1", v), ExprError);
    CHECK_THROWS_AS(eval_expr("(q", v), ExprError);
    CHECK_THROWS_AS(eval_expr("2^5000", {}), ExprError);
}
