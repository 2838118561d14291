#pragma once

// Re-checks the arithmetic facts of a certificate using nothing but the
// number theory layer.

#include "gkc/certificate.hpp"

#include <string>
#include <vector>

namespace gkc {

struct FactFailure {
    std::size_t claim = 0;
    std::size_t fact = 0;
    std::string message;
};

struct AuditReport {
    std::size_t facts_checked = 0;
    std::size_t assumptions = 0;
    std::vector<FactFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Returns an empty string when the fact holds, otherwise the reason.
std::string check_fact(const Fact& f);

AuditReport audit(const Certificate& c);

}  // namespace gkc
