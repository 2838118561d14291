#include "gkc/expr.hpp"

#include <cctype>

namespace gkc {

using nt::Integer;

namespace {

class Parser {
public:
    Parser(const std::string& s, const ExprVars& vars) : s_(s), vars_(vars) {}

    Integer run() {
        Integer v = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ExprError("expression \"" + s_ + "\" at " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer sum() {
        Integer v = product();
        for (;;) {
            if (eat('+'))
                v += product();
            else if (eat('-'))
                v -= product();
            else
                return v;
        }
    }

    Integer product() {
        Integer v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Integer d = unary();
                if (d == 0) fail("division by zero");
                if (v % d != 0) fail("inexact division " + nt::to_string(v) + "/" + nt::to_string(d));
                v /= d;
            } else {
                return v;
            }
        }
    }

    Integer unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Integer power() {
        Integer base = atom();
        if (eat('^')) {
            Integer e = unary();
            if (e < 0 || e > 4096) fail("exponent out of range");
            return nt::ipow(base, static_cast<std::uint64_t>(e));
        }
        return base;
    }

    Integer atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            Integer v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Integer(s_.substr(start, pos_ - start));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const auto name = s_.substr(start, pos_ - start);
            auto it = vars_.find(name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("unknown variable " + name);
            }
            return it->second;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const ExprVars& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Integer eval_expr(const std::string& text, const ExprVars& vars) { return Parser(text, vars).run(); }

}  // namespace gkc
