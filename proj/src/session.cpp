#include "ringgb/session.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ringgb/completion.hpp"
#include "ringgb/reduction.hpp"
#include "ringgb/text_format.hpp"

namespace ringgb {

namespace {

std::vector<std::string> read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const PolyRing& ring) {
  std::vector<Polynomial> out;
  for (const std::string& t : texts) {
    try {
      out.push_back(parse_polynomial(t, ring));
    } catch (const ParseError& e) {
      throw UsageError("in \"" + t + "\": " + e.what());
    }
  }
  return out;
}

void print_trace(const CompletionTrace& trace, std::ostream& err) {
  err << "iterations: " << trace.iterations << '\n'
      << "pairs processed: " << trace.pairs_processed << '\n'
      << "polynomials added: " << trace.added.size() << '\n'
      << "basis size: " << trace.basis.size() << '\n';
}

int execute(const SessionConfig& config, std::ostream& out, std::ostream& err) {
  if (config.variables.empty()) throw UsageError("--vars is required");
  PolyRing ring(config.ring, TermOrder(config.order, config.variables.size()), config.variables);

  std::vector<std::string> generator_texts;
  std::vector<std::string> query_texts;
  if (config.input_path) {
    generator_texts = read_polynomial_file(*config.input_path);
    query_texts = config.polynomials;
  } else if (config.command == Command::gb) {
    generator_texts = config.polynomials;
  } else if (!config.polynomials.empty()) {
    query_texts.push_back(config.polynomials.front());
    generator_texts.assign(config.polynomials.begin() + 1, config.polynomials.end());
  }
  if (config.command == Command::gb && !query_texts.empty())
    throw UsageError("gb takes no query polynomials when --input is given");
  if (config.command != Command::gb && query_texts.empty()) throw UsageError("missing query polynomial");

  const std::vector<Polynomial> generators = parse_all(generator_texts, ring);
  const std::vector<Polynomial> queries = parse_all(query_texts, ring);

  CompletionOptions options;
  options.track_certificates = config.command == Command::member;
  CompletionTrace trace = complete(ring, generators, options);
  if (config.trace) print_trace(trace, err);

  switch (config.command) {
    case Command::gb:
      for (const Polynomial& p : interreduce(ring, trace.basis)) out << format_polynomial(p, ring) << '\n';
      return kExitOk;

    case Command::nf:
      for (const Polynomial& q : queries) {
        ReductionStrategy strategy =
            config.seed ? ReductionStrategy::randomized(*config.seed) : ReductionStrategy::first_valid();
        out << format_polynomial(normal_form(ring, q, trace.basis, strategy).remainder, ring) << '\n';
      }
      return kExitOk;

    case Command::member: {
      int code = kExitOk;
      for (const Polynomial& q : queries) {
        Membership m = ideal_membership(ring, q, generators, options);
        if (!m.member) {
          out << "NO\n" << format_polynomial(m.normal_form, ring) << '\n';
          code = kExitNotMember;
          continue;
        }
        out << "YES\n";
        for (std::size_t i = 0; i < generators.size(); ++i) {
          if (m.certificate[i].is_zero()) continue;
          out << '(' << format_polynomial(m.certificate[i], ring) << ") * (" << format_polynomial(generators[i], ring)
              << ")\n";
        }
      }
      return code;
    }
  }
  return kExitOk;
}

}  // namespace

std::optional<SessionConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  SessionConfig config;
  CLI::App app{"Groebner bases over GF(p), QQ and ZZ", "ringgb"};
  app.require_subcommand(1);

  std::string ring_text = "qq";
  std::string order_text = "lex";
  std::string input;
  std::uint64_t seed = 0;
  app.add_option("--ring", ring_text, "Coefficient ring: gf(p), qq or zz");
  app.add_option("--order", order_text, "Term order: lex or deglex")->check(CLI::IsMember({"lex", "deglex"}));
  app.add_option("--vars", config.variables, "Comma-separated variables, most significant first")
      ->delimiter(',')
      ->allow_extra_args(false);
  auto* input_opt = app.add_option("--input", input, "File with one generator per line");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for a randomized reduction strategy (nf)");
  app.add_flag("--trace", config.trace, "Print completion statistics to standard error");

  struct Sub {
    const char* name;
    const char* help;
    Command command;
  };
  const Sub subs[] = {{"gb", "Print the interreduced Groebner basis", Command::gb},
                      {"nf", "Print normal forms of the queries", Command::nf},
                      {"member", "Decide ideal membership of the queries", Command::member}};
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    sub->add_option("polynomials", config.polynomials, "Polynomials");
    Command command = s.command;
    sub->callback([&config, command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  try {
    config.ring = Ring::parse(ring_text);
  } catch (const RingError& e) {
    throw UsageError(e.what());
  }
  config.order = order_text == "deglex" ? OrderKind::deglex : OrderKind::lex;
  if (*input_opt) config.input_path = input;
  if (*seed_opt) config.seed = seed;
  return config;
}

int run(const SessionConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const CompletionLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitStepCeiling;
  } catch (const StepLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitStepCeiling;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<SessionConfig> config;
  try {
    config = parse_command_line(argc, argv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace ringgb
