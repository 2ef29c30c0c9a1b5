#include "modiag/error.hpp"

namespace modiag {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::usage: return "usage";
  case ErrorKind::parity: return "parity";
  case ErrorKind::schema: return "schema";
  case ErrorKind::dangling_reference: return "dangling-reference";
  case ErrorKind::genus_mismatch: return "genus-mismatch";
  case ErrorKind::invariant: return "invariant";
  case ErrorKind::hypothesis: return "hypothesis";
  case ErrorKind::incomplete: return "incomplete";
  case ErrorKind::network: return "network";
  case ErrorKind::internal: return "internal";
  }
  return "internal";
}

} // namespace modiag
