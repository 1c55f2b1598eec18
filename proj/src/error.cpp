#include "kposet/error.hpp"

namespace kposet {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::DuplicateId: return "DuplicateId";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
        case ErrorKind::NotBounded: return "NotBounded";
        case ErrorKind::WrongExtremeLabel: return "WrongExtremeLabel";
        case ErrorKind::NotTwoLattice: return "NotTwoLattice";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    kind_(kind)
{
}

} // namespace kposet
