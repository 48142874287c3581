#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace apic {

// Domain error with a stable machine-readable code. The CLI maps any of
// these to exit status 2 and, in JSON mode, to an error object carrying
// the code verbatim.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define APIC_DEFINE_ERROR(type, code)                                      \
    struct type : error {                                                  \
        explicit type(const std::string& w) : error(code, w) {}            \
    }

APIC_DEFINE_ERROR(dimension_error, "dimension-mismatch");
APIC_DEFINE_ERROR(parse_error, "parse-error");
APIC_DEFINE_ERROR(not_reduced_error, "not-reduced");
APIC_DEFINE_ERROR(irrational_point_error, "irrational-infinitely-near-point");
APIC_DEFINE_ERROR(degree_cap_error, "degree-cap-exceeded");
APIC_DEFINE_ERROR(not_convenient_error, "not-convenient");
APIC_DEFINE_ERROR(degenerate_newton_error, "degenerate-newton-boundary");
APIC_DEFINE_ERROR(invalid_invariants_error, "invalid-invariants");
APIC_DEFINE_ERROR(config_error, "malformed-configuration");
APIC_DEFINE_ERROR(disconnected_error, "disconnected-configuration");
APIC_DEFINE_ERROR(unknown_name_error, "unknown-name");
APIC_DEFINE_ERROR(injectivity_unknown_error, "injectivity-unknown");
APIC_DEFINE_ERROR(non_ordinary_error, "non-ordinary-entry");
APIC_DEFINE_ERROR(bezout_error, "bezout-mismatch");
APIC_DEFINE_ERROR(invalid_lambda_error, "invalid-lambda");
APIC_DEFINE_ERROR(abelian_hom_error, "abelian-sector-hom");
APIC_DEFINE_ERROR(invalid_argument_error, "invalid-argument");

#undef APIC_DEFINE_ERROR

}  // namespace apic
