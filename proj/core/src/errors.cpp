#include "braid3/errors.hpp"

#include <utility>

namespace braid3 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownToken:
      return "UnknownToken";
    case ErrorCode::MalformedExponent:
      return "MalformedExponent";
    case ErrorCode::NotParabolic:
      return "NotParabolic";
    case ErrorCode::InternalInconsistency:
      return "InternalInconsistency";
    case ErrorCode::InvalidForm:
      return "InvalidForm";
    case ErrorCode::PositiveB1:
      return "PositiveB1";
    case ErrorCode::B1NotOne:
      return "B1NotOne";
    case ErrorCode::NotLSpace:
      return "NotLSpace";
    case ErrorCode::NotAKnot:
      return "NotAKnot";
    case ErrorCode::FamilyNotCovered:
      return "FamilyNotCovered";
    case ErrorCode::SplitClosure:
      return "SplitClosure";
  }
  return "Unknown";
}

namespace {
std::string parse_message(ErrorCode code, std::size_t index,
                          std::string const& token) {
  std::string msg(to_string(code));
  msg += " at token ";
  msg += std::to_string(index);
  msg += ": '";
  msg += token;
  msg += "'";
  return msg;
}
}  // namespace

ParseError::ParseError(ErrorCode code, std::size_t token_index,
                       std::string token)
    : Error(code, parse_message(code, token_index, token)),
      _token_index(token_index),
      _token(std::move(token)) {}

}  // namespace braid3
