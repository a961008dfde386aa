#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace copath {

enum class Errc {
  NotComposable,
  UnknownVertex,
  UnknownBundle,
  InvalidQuiver,
  InvalidShape,
  UninstantiatedOmega,
  InfinitePathSet,
  NotInShape,
  TruncationTooSmall,
  BeyondTruncation,
  ShapeMismatch,
  FieldMismatch,
  NotAUnit,
  NotAComodule,
  NotHereditary,
  MalformedXData,
  RepMismatch,
  BadArgument,
  Parse,
  Semantic,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure with source position (1-based line/column).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(Errc::Parse,
              "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Semantic failure naming the offending token.
class SemanticError : public Error {
 public:
  SemanticError(const std::string& token, const std::string& msg)
      : Error(Errc::Semantic, "'" + token + "': " + msg), token_(token) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace copath
