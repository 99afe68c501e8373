#pragma once

#include <stdexcept>
#include <string>

namespace arbordyn {

/// Error with a stable machine-readable code, used by the CLI to map
/// precondition violations to exit status 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error division_by_zero(const std::string& w = "division by zero") { return Error("DivisionByZero", w); }
inline Error domain_mismatch(const std::string& w) { return Error("DomainMismatch", w); }
inline Error not_a_square(const std::string& w) { return Error("NotASquare", w); }
inline Error not_a_pth_power(const std::string& w) { return Error("NotAPthPower", w); }
inline Error undefined(const std::string& w) { return Error("Undefined", w); }
inline Error ill_defined(const std::string& w) { return Error("IllDefined", w); }
inline Error degenerate_square(const std::string& w) { return Error("DegenerateSquare", w); }
inline Error iterates_inseparable(const std::string& w) { return Error("IteratesInseparable", w); }
inline Error cap_exceeded(const std::string& w) { return Error("CapExceeded", w); }
inline Error parse_error(const std::string& w) { return Error("ParseError", w); }

}  // namespace arbordyn
