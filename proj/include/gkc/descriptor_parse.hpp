#pragma once

// Text descriptors for finite simple groups: "A3(4)", "2A4(9)", "Alt(12)",
// "Sym(9)", "Z(7)", "2B2(32)", "E8(5)", sporadic names and their aliases.

#include "gkc/groups.hpp"

#include <cstddef>
#include <string>

namespace gkc {

class SyntaxError : public DescriptorError {
public:
    SyntaxError(const std::string& text, std::size_t position, const std::string& expected);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

GroupDescriptor parse_descriptor(const std::string& text);

}  // namespace gkc
