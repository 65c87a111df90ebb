#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jdeform {

/// Outcome of an exact axiom or identity check. A failing report names the
/// first violated identity and carries witnesses (basis names, indices).
struct Report {
  std::string check;
  bool pass = true;
  std::string message;
  std::vector<std::string> witness;
  std::vector<std::string> notes;

  static Report ok(std::string check) { return Report{std::move(check), true, {}, {}, {}}; }
  static Report fail(std::string check, std::string message, std::vector<std::string> witness = {}) {
    return Report{std::move(check), false, std::move(message), std::move(witness), {}};
  }
};

/// Input violates a mathematical precondition (e.g. nonvanishing H^0).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A combinatorial budget (basis size, order) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed model data (unknown names, non-automorphisms, bad nerves).
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jdeform
