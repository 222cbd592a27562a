#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tlab {

// Runtime failure with a stable machine-readable name. The CLI maps the name
// to stderr output and a nonzero exit code; library users can switch on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

inline void require(bool condition, const char* name, const std::string& message) {
    if (!condition) throw Error(name, message);
}

} // namespace tlab
