#pragma once

#include <stdexcept>

namespace rbx {

// A mathematical postcondition failed (Hopf axiom, RB identity, proportionality).
// Distinct from std::invalid_argument / std::domain_error, which signal bad
// input or ring misuse; the CLI maps the two classes to different exit codes.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rbx
