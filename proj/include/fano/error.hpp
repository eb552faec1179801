#pragma once

#include <stdexcept>
#include <string>

namespace fano {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when exact interval data in a chase becomes contradictory.
struct ChaseError : Error {
    explicit ChaseError(const std::string& msg, std::string trace_text = {})
        : Error(msg), trace(std::move(trace_text)) {}
    std::string trace;
};

} // namespace fano
