#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewhopf {

enum class ErrorCode {
  // chain validation and input
  NonRefining,
  NonIntervalBlock,
  DuplicateIndex,
  EmptyWindow,
  UnknownIndex,
  BadPartition,
  BadChainFile,
  UnknownPreset,
  BadParams,
  ParseError,
  LevelOutOfWindow,
  // computation
  LetterNotPresent,
  LetterOutOfWindow,
  InconsistentChain,
  WindowExceeded,
  TooLarge,
  NonUniqueRank,
  ZeroElement,
  NotASubcomodule,
};

/// Upper-case identifier used in reports and CLI messages, e.g. "NON_REFINING".
std::string_view error_code_name(ErrorCode code);

/// True for errors caused by malformed or inconsistent user input, as opposed
/// to failures of a computation on valid input.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  /// position is 1-based; text.size() + 1 denotes end of input.
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace skewhopf
