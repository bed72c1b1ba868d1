#ifndef ORDALG_COMMANDS_HPP_
#define ORDALG_COMMANDS_HPP_

#include <string>

#include "ordalg/io.hpp"

namespace ordalg {

/// Result of a command: JSON for stdout, a one-line summary for stderr, and
/// the exit status (0 success, 1 a mathematical "no").
struct CommandResult {
  Json output;
  std::string summary;
  int status = 0;
};

CommandResult cmd_idempotents(const Order& a);
CommandResult cmd_units(const Order& a, bool naive_lift);
/// `targets` and `element` are E-coordinate vectors (JSON arrays of decimal
/// strings, rationals allowed).  Throws InputError for malformed vectors or
/// targets outside mu(E).
CommandResult cmd_dlog(const Order& a, const Json& targets, const Json& element);
/// Gamma(A_sep), or Gamma(C) for the given prime.
CommandResult cmd_graph(const Order& a, const std::optional<Int>& prime);
CommandResult cmd_decompose(const Order& a);
CommandResult cmd_from_poly(const IntVector& f);

}  // namespace ordalg

#endif  // ORDALG_COMMANDS_HPP_
