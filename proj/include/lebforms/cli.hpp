// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Kept header-only and stream-driven so the tests
// can run it in-process.

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lebforms/io.hpp"

namespace lebforms {

namespace detail {

inline std::string read_input(const std::optional<std::string>& path, std::istream& fallback) {
  if (!path || *path == "-") {
    return std::string(std::istreambuf_iterator<char>(fallback),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream file(*path);
  if (!file) {
    throw InvalidInputError("cannot open input file \"" + *path + "\"");
  }
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

}  // namespace detail

// Runs one subcommand; returns the process exit code. `args` is the argv
// tail (no program name).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  CLI::App app{
      "lebforms: Lebesgue-type decompositions of sesquilinear forms on C^n.\n"
      "Matrix convention: every matrix read or written obeys entry (i,j) = t(e_i, e_j);\n"
      "complex entries are [re, im] pairs. Exit codes: 0 ok, 1 invalid input,\n"
      "2 validation failure, 3 verification check failed."};
  app.require_subcommand(1);

  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::optional<std::string> pair_choice;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<double> tol_rank;
  std::optional<double> tol_cert;

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"classify", "Classify t as w-left regular / strongly singular"},
      {"decompose", "Left Lebesgue decomposition t = t_lr + t_ls"},
      {"psd-decompose", "Classical decomposition of a non-negative form"},
      {"check-pair", "Check a dominating pair for t"},
      {"witness", "Split vector_f across ker(w) and ker(t)"},
      {"measure", "Decompose an atomic measure and its induced forms"},
      {"verify", "Decompose, then run the verification report"},
  };
  for (const auto& [name, description] : subcommands) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->add_option("-i,--input", input_path, "Problem JSON file (default: stdin)");
    cmd->add_option("-o,--output", output_path, "Write the full JSON report here");
    cmd->add_option("--pair", pair_choice, "Dominating pair: identity, polar, or explicit")
        ->check(CLI::IsMember({"identity", "polar", "explicit"}));
    cmd->add_option("--seed", seed, "Seed for randomized checks");
    cmd->add_option("--samples", samples, "Sample count for randomized checks")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-rank", tol_rank, "Relative rank threshold override");
    cmd->add_option("--tol-cert", tol_cert, "Absolute certificate tolerance override");
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    ProblemFile problem = parse_problem(detail::read_input(input_path, in));
    RunOptions options;
    if (pair_choice) {
      PairSpec spec;
      if (*pair_choice == "identity") {
        spec.kind = PairSpec::Kind::identity;
      } else if (*pair_choice == "polar") {
        spec.kind = PairSpec::Kind::polar;
      } else {
        spec.kind = PairSpec::Kind::explicit_forms;  // use the problem file's pair
      }
      options.pair_override = spec;
    }
    options.seed = seed;
    options.samples = samples;
    options.tol_rank = tol_rank;
    options.tol_cert = tol_cert;

    const std::string name = app.get_subcommands().front()->get_name();
    RunResult result = run_subcommand(name, problem, options);
    out << result.summary << "\n";
    if (output_path) {
      std::ofstream file(*output_path);
      if (!file) {
        throw InvalidInputError("cannot open output file \"" + *output_path + "\"");
      }
      file << result.report.dump(2) << "\n";
    }
    return result.exit_code;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace lebforms
