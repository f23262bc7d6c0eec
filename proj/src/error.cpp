#include <ckrv/error.hpp>

namespace ckrv
{
  std::string_view to_string(ErrorKind kind)
  {
    switch (kind)
      {
      case ErrorKind::SinkVertex: return "SinkVertex";
      case ErrorKind::UnknownVertex: return "UnknownVertex";
      case ErrorKind::UnknownPlayer: return "UnknownPlayer";
      case ErrorKind::DuplicateOwner: return "DuplicateOwner";
      case ErrorKind::MissingInitial: return "MissingInitial";
      case ErrorKind::MultipleInitial: return "MultipleInitial";
      case ErrorKind::CountOverflow: return "CountOverflow";
      case ErrorKind::PlayerMismatch: return "PlayerMismatch";
      case ErrorKind::InvalidProfile: return "InvalidProfile";
      case ErrorKind::InvalidFrame: return "InvalidFrame";
      case ErrorKind::InvalidModel: return "InvalidModel";
      case ErrorKind::EmptySet: return "EmptySet";
      case ErrorKind::InvalidBound: return "InvalidBound";
      case ErrorKind::PrefixShapeMismatch: return "PrefixShapeMismatch";
      case ErrorKind::TooManyVariables: return "TooManyVariables";
      case ErrorKind::Syntax: return "Syntax";
      case ErrorKind::UnknownName: return "UnknownName";
      case ErrorKind::MissingSpec: return "MissingSpec";
      case ErrorKind::MissingObjective: return "MissingObjective";
      }
    return "Unknown";
  }

  namespace
  {
    std::string decorate(ErrorKind kind, const std::string& message,
                         std::size_t line, std::size_t column)
    {
      std::string out;
      if (line != 0)
        {
          out += "line " + std::to_string(line);
          if (column != 0)
            out += ", column " + std::to_string(column);
          out += ": ";
        }
      out += std::string(to_string(kind)) + ": " + message;
      return out;
    }
  }

  Error::Error(ErrorKind kind, const std::string& message,
               std::size_t line, std::size_t column)
    : std::runtime_error(decorate(kind, message, line, column)),
      kind_(kind), line_(line), column_(column), bare_(message)
  {
  }

  Error Error::at_line(std::size_t line) const
  {
    return Error(kind_, bare_, line, column_);
  }
}
