#pragma once

#include <stdexcept>
#include <string>

namespace monret {

/// Rejection of an input that fails a mathematical precondition
/// (not a retraction, not idempotent, degenerate, ...).  Distinct
/// from std::invalid_argument, which signals size/domain mismatches
/// and other caller errors.
class MathError : public std::runtime_error {
public:
    enum class Code {
        NotMonic,
        NotRetraction,
        Degenerate,
        NotIdempotent,
        NotStandard,
        ZeroImage,
        ZeroInput,
        ZeroRow,
    };

    MathError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

/// A computation refused because it would exceed a hard resource cap
/// (census candidate space, equivalents materialization, ...).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input.  Lines and columns are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace monret
