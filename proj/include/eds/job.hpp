#pragma once

#include <array>
#include <optional>
#include <string>

#include "eds/classifier.hpp"

namespace eds {

/// Parses one expression over integer literals and t with + - * / ^ and
/// parentheses. `line` and `column0` locate the text for error messages.
RationalFunction parse_expression(const std::string& text, const FieldSpec& f, int line = 1, int column0 = 1);

struct JobSpec {
  std::string command = "table";
  std::uint32_t p = 0;
  std::array<std::optional<RationalFunction>, 5> a;  // a1 a2 a3 a4 a6; empty reads as 0
  std::optional<RationalFunction> x;
  std::optional<RationalFunction> y;
  int N = 12;
  bool show_local = false;
  bool show_primitive = true;
  bool verify = false;

  const FieldSpec& field() const { return FieldSpec::prime(p); }
  RationalFunction coefficient(int i) const;
  Curve curve() const;
  bool has_point() const { return x.has_value() && y.has_value(); }
  FfPoint point() const;

  bool operator==(const JobSpec& o) const;
};

/// Lines (or comma-separated items) "key = value"; keys p, a1, a2, a3, a4, a6,
/// x, y, N. '#' starts a comment. Throws ParseError or DomainError.
JobSpec parse_job(const std::string& text);

/// Canonical text that parse_job maps back to an equal JobSpec.
std::string render_job(const JobSpec& job);

struct CommandResult {
  int exit_code;  // 0 ok, 1 assertion violation, 2 input error
  std::string out;
  std::string err;
};

struct RunOptions {
  std::uint64_t seed = 0;
  Schedule schedule = Schedule::Parallel;
};

/// Commands: table, local, zsigmondy, verify, constant.
CommandResult run_command(const JobSpec& job, const RunOptions& options = {});

}  // namespace eds
