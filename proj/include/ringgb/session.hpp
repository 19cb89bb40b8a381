#ifndef RINGGB_SESSION_HPP
#define RINGGB_SESSION_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringgb/coeff_ring.hpp"
#include "ringgb/term.hpp"

namespace ringgb {

enum class Command { gb, nf, member };

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotMember = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitStepCeiling = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SessionConfig {
  Ring ring = Ring::rationals();
  std::vector<std::string> variables;
  OrderKind order = OrderKind::lex;
  Command command = Command::gb;
  // Generators come from this file when set; positional polynomials are then
  // all queries. Without a file, gb takes every positional as a generator,
  // while nf and member take the first positional as the query and the rest
  // as generators.
  std::optional<std::string> input_path;
  std::vector<std::string> polynomials;
  // Randomized reduction strategy for nf queries.
  std::optional<std::uint64_t> seed;
  bool trace = false;
};

// Throws UsageError on malformed arguments. Returns nullopt after printing
// help text to out.
std::optional<SessionConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

int run(const SessionConfig& config, std::ostream& out, std::ostream& err);

// parse_command_line followed by run, mapping usage errors to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringgb

#endif  // RINGGB_SESSION_HPP
