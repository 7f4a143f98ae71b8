#include "minaff/error.hpp"

namespace minaff {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::NotIDominant: return "NotIDominant";
    case ErrorCode::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorCode::DisconnectedSubdiagram: return "DisconnectedSubdiagram";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace minaff
