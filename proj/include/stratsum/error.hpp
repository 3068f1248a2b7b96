#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stratsum {

// Error carries a stable machine-readable code next to the human message.
// Codes are lowercase snake_case and part of the library contract; the C API
// and the CLI map exit behaviour off them.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error parse_error(const std::string& msg) { return Error("parse_error", msg); }
inline Error semantic_error(const std::string& msg) { return Error("semantic_error", msg); }

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;  // empty when ok
};

// Report-style validation output: one row per named invariant.
struct ValidationReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string to_text() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.ok ? "pass " : "FAIL ";
            out += c.name;
            if (!c.detail.empty()) {
                out += ": ";
                out += c.detail;
            }
            out += '\n';
        }
        return out;
    }
};

}  // namespace stratsum
