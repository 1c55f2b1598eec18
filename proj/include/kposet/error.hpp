#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kposet {

enum class ErrorKind {
    LabelOutOfRange,
    CycleDetected,
    UnknownElement,
    DuplicateId,
    BudgetExceeded,
    SizeBudgetExceeded,
    NotBounded,
    WrongExtremeLabel,
    NotTwoLattice,
    InvalidArgument,
    ParseError,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every failure raised by the library carries one of the kinds above, so
/// callers (and the CLI) can dispatch on kind() rather than on message text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message);

    auto kind() const noexcept -> ErrorKind { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace kposet
