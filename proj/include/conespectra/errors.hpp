#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace conespectra {

// Every precondition or domain failure carries a short machine-readable kind
// (e.g. "NotConeSequence", "NoConvergence") next to the human message, so
// callers and tests can dispatch without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace conespectra
