#pragma once

// Integer expressions over named variables, as used by the diagram resource:
// numbers, identifiers, + - * / ^ and parentheses. Division must be exact.

#include "gkc/numtheory.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace gkc {

class ExprError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using ExprVars = std::map<std::string, nt::Integer>;

nt::Integer eval_expr(const std::string& text, const ExprVars& vars);

}  // namespace gkc
