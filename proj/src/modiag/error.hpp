#pragma once

#include <stdexcept>
#include <string>

namespace modiag {

// Every failure the library reports is one of these kinds. The C API and the
// CLI map them onto status codes, so new kinds must be added there as well.
enum class ErrorKind {
  usage,             // caller passed arguments outside an operation's domain
  parity,            // Hasse-invariant prescription with odd support
  schema,            // dataset file does not follow the documented schema
  dangling_reference,
  genus_mismatch,
  invariant,         // a record violates a stated data invariant
  hypothesis,        // construction inputs outside the supported hypotheses
  incomplete,        // a decision needs local data nobody supplied
  network,           // fetch failed and no cached copy exists
  internal           // a computed quantity contradicts the theory (a bug)
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace modiag
