#include "gkc/descriptor_parse.hpp"

#include <cctype>
#include <limits>

namespace gkc {

SyntaxError::SyntaxError(const std::string& text, std::size_t position, const std::string& expected)
    : DescriptorError("syntax error in \"" + text + "\" at position " + std::to_string(position) + ": expected " +
                      expected),
      position_(position) {}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    bool done() const { return i_ == s_.size(); }
    std::size_t pos() const { return i_; }
    char peek() const { return done() ? '\0' : s_[i_]; }

    bool accept(const std::string& word) {
        if (s_.compare(i_, word.size(), word) != 0) return false;
        i_ += word.size();
        return true;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("'") + c + "'");
        ++i_;
    }
    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("a number");
        const std::size_t start = i_;
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            const unsigned d = static_cast<unsigned>(s_[i_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
                i_ = start;
                fail("a number that fits in 64 bits");
            }
            v = v * 10 + d;
            ++i_;
        }
        return v;
    }
    std::uint64_t parenthesized() {
        expect('(');
        const auto v = number();
        expect(')');
        return v;
    }
    void finish() {
        if (!done()) fail("end of input");
    }
    [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(s_, i_, expected); }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

unsigned small(std::uint64_t v, const std::string& what) {
    if (v > 100000) throw DescriptorError(what + " " + std::to_string(v) + " is out of range");
    return static_cast<unsigned>(v);
}

LieFamily lie_family(int twist, char letter, unsigned rank, const std::string& text) {
    switch (twist) {
        case 1:
            switch (letter) {
                case 'A': return LieFamily::A;
                case 'B': return LieFamily::B;
                case 'C': return LieFamily::C;
                case 'D': return LieFamily::D;
                case 'E':
                    if (rank == 6) return LieFamily::E6;
                    if (rank == 7) return LieFamily::E7;
                    if (rank == 8) return LieFamily::E8;
                    throw DescriptorError(text + ": E needs rank 6, 7 or 8");
                case 'F':
                    if (rank == 4) return LieFamily::F4;
                    throw DescriptorError(text + ": F needs rank 4");
                case 'G':
                    if (rank == 2) return LieFamily::G2;
                    throw DescriptorError(text + ": G needs rank 2");
            }
            break;
        case 2:
            switch (letter) {
                case 'A': return LieFamily::A2;
                case 'D': return LieFamily::D2;
                case 'B':
                    if (rank == 2) return LieFamily::B22;
                    break;
                case 'G':
                    if (rank == 2) return LieFamily::G22;
                    break;
                case 'F':
                    if (rank == 4) return LieFamily::F42;
                    break;
                case 'E':
                    if (rank == 6) return LieFamily::E62;
                    break;
            }
            break;
        case 3:
            if (letter == 'D' && rank == 4) return LieFamily::D43;
            break;
    }
    throw DescriptorError(text + ": no twisted group of this type");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

GroupDescriptor parse_descriptor(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw SyntaxError(raw, 0, "a group descriptor");

    for (const auto& r : sporadic_table()) {
        if (r.name == text) return GroupDescriptor::sporadic_group(text);
        for (const auto& a : r.aliases)
            if (a == text) return GroupDescriptor::sporadic_group(text);
    }

    Cursor c(text);
    if (c.accept("Alt")) {
        const auto n = c.parenthesized();
        c.finish();
        return GroupDescriptor::alternating(small(n, "degree"));
    }
    if (c.accept("Sym")) {
        const auto n = c.parenthesized();
        c.finish();
        return GroupDescriptor::symmetric(small(n, "degree"));
    }
    if (c.accept("Z")) {
        const auto p = c.parenthesized();
        c.finish();
        return GroupDescriptor::cyclic(p);
    }

    int twist = 1;
    if (c.accept("2")) twist = 2;
    else if (c.accept("3")) twist = 3;
    const char letter = c.peek();
    if (letter < 'A' || letter > 'G') c.fail("a Lie family letter A-G, Alt, Sym, Z or a sporadic name");
    c.accept(std::string(1, letter));
    const unsigned rank = small(c.number(), "rank");
    const auto q = c.parenthesized();
    c.finish();
    if (q > std::numeric_limits<std::uint32_t>::max()) throw InvalidField(text + ": field size too large");
    return GroupDescriptor::lie(lie_family(twist, letter, rank, text), rank, q);
}

}  // namespace gkc
