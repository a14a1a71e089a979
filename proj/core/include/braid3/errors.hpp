#ifndef BRAID3_ERRORS_HPP_
#define BRAID3_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace braid3 {

enum class ErrorCode {
  UnknownToken,
  MalformedExponent,
  NotParabolic,
  InternalInconsistency,
  InvalidForm,
  PositiveB1,
  B1NotOne,
  NotLSpace,
  NotAKnot,
  FamilyNotCovered,
  SplitClosure,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& message)
      : std::runtime_error(message), _code(code) {}

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

// Raised by the word parser. `token_index` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t token_index, std::string token);

  std::size_t token_index() const noexcept { return _token_index; }
  std::string const& token() const noexcept { return _token; }

 private:
  std::size_t _token_index;
  std::string _token;
};

}  // namespace braid3

#endif  // BRAID3_ERRORS_HPP_
