#ifndef VACRAD_VERIFY_HPP
#define VACRAD_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vacrad/exec.hpp"

namespace vacrad {

enum class VerifyLevel { Fast, Full };

/// One self-test: a named quantity, the value it must take, what was
/// measured, and the tolerance used. Informational checks document known
/// ambiguities (they carry data but never count as failures).
struct Check {
    std::string name;
    double expected;
    double actual;
    double tolerance;
    bool pass;
    bool informational = false;
};

struct VerificationReport {
    std::string level;
    std::uint64_t seed = 0;
    int workers = 1;
    std::vector<Check> checks;

    int passed() const;
    int failed() const; // non-informational failures only
    int informational() const;
    bool overall_pass() const { return failed() == 0; }

    std::string to_json() const;
    std::string to_text(bool color) const;
};

/// Run the physics self-test battery. Fast trims the Monte Carlo sample
/// count; Full runs the survey exactly as published in the acceptance
/// suite.
VerificationReport run_verification(VerifyLevel level, std::uint64_t seed,
                                    Exec exec = Exec::Parallel);

} // namespace vacrad

#endif
