#pragma once

#include <stdexcept>
#include <string>

namespace bcnet {

// Every domain failure carries a stable machine-readable code (printed by the CLI).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& what = {}) {
    throw Error(code, what.empty() ? std::string(code) : what);
}

} // namespace bcnet
