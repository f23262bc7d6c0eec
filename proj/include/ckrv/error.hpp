#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ckrv
{
  enum class ErrorKind
  {
    SinkVertex,
    UnknownVertex,
    UnknownPlayer,
    DuplicateOwner,
    MissingInitial,
    MultipleInitial,
    CountOverflow,
    PlayerMismatch,
    InvalidProfile,
    InvalidFrame,
    InvalidModel,
    EmptySet,
    InvalidBound,
    PrefixShapeMismatch,
    TooManyVariables,
    Syntax,
    UnknownName,
    MissingSpec,
    MissingObjective,
  };

  std::string_view to_string(ErrorKind kind);

  /// \brief Error raised by every validating operation of the library.
  ///
  /// Parse errors additionally carry a 1-based line and column; both are
  /// zero when no location applies.
  class Error : public std::runtime_error
  {
  public:
    Error(ErrorKind kind, const std::string& message,
          std::size_t line = 0, std::size_t column = 0);

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// Message without the location and kind prefix.
    const std::string& message() const noexcept { return bare_; }

    /// Same error, relocated to \a line (column kept).
    Error at_line(std::size_t line) const;

  private:
    ErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string bare_;
  };
}
