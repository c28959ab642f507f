#include "cftp/error.hpp"

namespace cftp {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::RedundantCover: return "RedundantCover";
        case ErrorKind::IdentifierOutOfRange: return "IdentifierOutOfRange";
        case ErrorKind::CapacityExceeded: return "CapacityExceeded";
        case ErrorKind::EmptyRegion: return "EmptyRegion";
        case ErrorKind::InvalidBounds: return "InvalidBounds";
        case ErrorKind::NotBipartite: return "NotBipartite";
        case ErrorKind::NotTileable: return "NotTileable";
        case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
        case ErrorKind::HorizonExceeded: return "HorizonExceeded";
        case ErrorKind::NonPositiveQ: return "NonPositiveQ";
        case ErrorKind::MaxTriesExceeded: return "MaxTriesExceeded";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ExpectedCountTooSmall: return "ExpectedCountTooSmall";
        case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace cftp
