#include "skewhopf/error.hpp"

namespace skewhopf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonRefining: return "NON_REFINING";
    case ErrorCode::NonIntervalBlock: return "NON_INTERVAL_BLOCK";
    case ErrorCode::DuplicateIndex: return "DUPLICATE_INDEX";
    case ErrorCode::EmptyWindow: return "EMPTY_WINDOW";
    case ErrorCode::UnknownIndex: return "UNKNOWN_INDEX";
    case ErrorCode::BadPartition: return "BAD_PARTITION";
    case ErrorCode::BadChainFile: return "BAD_CHAIN_FILE";
    case ErrorCode::UnknownPreset: return "UNKNOWN_PRESET";
    case ErrorCode::BadParams: return "BAD_PARAMS";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::LevelOutOfWindow: return "LEVEL_OUT_OF_WINDOW";
    case ErrorCode::LetterNotPresent: return "LETTER_NOT_PRESENT";
    case ErrorCode::LetterOutOfWindow: return "LETTER_OUT_OF_WINDOW";
    case ErrorCode::InconsistentChain: return "INCONSISTENT_CHAIN";
    case ErrorCode::WindowExceeded: return "WINDOW_EXCEEDED";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NonUniqueRank: return "NON_UNIQUE_RANK";
    case ErrorCode::ZeroElement: return "ZERO_ELEMENT";
    case ErrorCode::NotASubcomodule: return "NOT_A_SUBCOMODULE";
  }
  return "UNKNOWN";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonRefining:
    case ErrorCode::NonIntervalBlock:
    case ErrorCode::DuplicateIndex:
    case ErrorCode::EmptyWindow:
    case ErrorCode::UnknownIndex:
    case ErrorCode::BadPartition:
    case ErrorCode::BadChainFile:
    case ErrorCode::UnknownPreset:
    case ErrorCode::BadParams:
    case ErrorCode::ParseError:
    case ErrorCode::LevelOutOfWindow:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace skewhopf
