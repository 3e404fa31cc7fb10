#pragma once

#include <array>
#include <algorithm>
#include <stdexcept>
#include <string>

namespace nofil {

// A block of a triple system: three distinct points, stored ascending.
using Triple = std::array<int, 3>;

inline Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

class DomainError : public std::runtime_error {
public:
    enum class Code {
        OrderInvalid,
        NotAnSts,
        UnknownName,
        ParseError,
        IllegalMove,
        FilledBlock,
        SizeLimit,
        BadFixedTriples,
        BudgetExceeded,
    };

    DomainError(Code code, const std::string& msg, int line = -1)
        : std::runtime_error(msg), code_(code), line_(line) {}

    Code code() const { return code_; }
    int line() const { return line_; }

private:
    Code code_;
    int line_;
};

} // namespace nofil
