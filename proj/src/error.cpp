#include "gcx/error.hpp"

namespace gcx {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::InvalidByte: return "InvalidByte";
    case ErrorKind::InvalidPadding: return "InvalidPadding";
    case ErrorKind::UnknownTask: return "UnknownTask";
  }
  return "Error";
}

}  // namespace gcx
