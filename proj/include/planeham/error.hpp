#pragma once

#include <stdexcept>
#include <string>

namespace planeham {

/// Category of a failure. The CLI maps these onto its exit codes.
enum class ErrorKind {
    invalid_input,  // malformed rotation system or argument outside the domain
    hypothesis,     // a precondition of the requested construction does not hold
    verification,   // a produced certificate failed its own check (defect alert)
    format,         // unreadable file or stream
    guard,          // brute-force search space larger than the configured guard
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::hypothesis: return "hypothesis violation";
    case ErrorKind::verification: return "verification failure";
    case ErrorKind::format: return "format error";
    case ErrorKind::guard: return "guard exceeded";
    }
    return "error";
}

}  // namespace planeham
