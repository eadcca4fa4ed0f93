#include "commgraph/error.hpp"

namespace commgraph {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NoSuchOrder: return "NoSuchOrder";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::NoSuchParams: return "NoSuchParams";
    case ErrorCode::EigenvalueClash: return "EigenvalueClash";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::NotNormalizing: return "NotNormalizing";
    case ErrorCode::NotInD: return "NotInD";
    case ErrorCode::SymbolicFailure: return "SymbolicFailure";
    case ErrorCode::PathBroken: return "PathBroken";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace commgraph
