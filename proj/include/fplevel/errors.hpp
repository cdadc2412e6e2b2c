#pragma once

#include <stdexcept>
#include <string>

namespace fplevel {

enum class Errc {
  MismatchedContext,
  DegreeOverflow,
  NotHomogeneous,
  InvalidExponent,
  InvalidCongruence,
  WrongDegree,
  CutoffExceeded,
  VerificationFailed,
  SyntaxError,
  NegativeExponent,
  UnknownVariable,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MismatchedContext: return "MismatchedContext";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::InvalidExponent: return "InvalidExponent";
    case Errc::InvalidCongruence: return "InvalidCongruence";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::CutoffExceeded: return "CutoffExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Syntax errors carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& msg, std::size_t pos)
      : Error(code, msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace fplevel
