#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"

namespace majcl {

enum class EnumerationMode { DecideVsOracle, SynthesizeAll, ClassifyBalance };

const char* to_string(EnumerationMode mode);
std::optional<EnumerationMode> parse_mode(const std::string& text);

struct Disagreement {
  ChoiceFunction generator;
  ChoiceFunction target;
  std::string detail;
};

/// Tallies of the balance predicates over every choice function on n vertices.
struct BalanceCounts {
  std::uint64_t full_total = 0;
  std::uint64_t full_balanced = 0;
  std::uint64_t full_pseudo = 0;  // = strongly connected tournaments
  std::uint64_t full_weight = 0;
  std::uint64_t full_partition = 0;
  std::uint64_t full_partition_plus = 0;
  std::uint64_t all_total = 0;
  std::uint64_t all_pseudo = 0;
  std::uint64_t all_weight = 0;
  std::uint64_t all_partition = 0;
  std::uint64_t all_partition_plus = 0;

  friend bool operator==(const BalanceCounts&, const BalanceCounts&) = default;
};

struct EnumerationReport {
  int n = 0;
  EnumerationMode mode = EnumerationMode::DecideVsOracle;
  std::uint64_t families_tested = 0;
  std::uint64_t targets_tested = 0;
  std::uint64_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::uint64_t realizable_count = 0;
  std::uint64_t pseudo_balanced_count = 0;
  std::optional<BalanceCounts> balance;  // ClassifyBalance only
};

struct EnumerationOptions {
  unsigned workers = 0;  // 0: one per hardware thread
  Limits limits;
};

/// Generators and targets covered by an exhaustive sweep at n (3 to 5).
/// n = 3: all full generators, all functions as targets. n = 4: full × full.
/// n = 5: a fixed sample of full generators (rotational, linear, two seeded
/// random tournaments) against all full targets.
std::vector<ChoiceFunction> sweep_generators(int n);
std::vector<ChoiceFunction> sweep_targets(int n);

/// Runs the sweep. Results do not depend on the worker count.
EnumerationReport enumerate_check(int n, EnumerationMode mode, const EnumerationOptions& options = {});

std::string render_text(const EnumerationReport& report);
/// One `key=value` line per report.
std::string render_machine(const EnumerationReport& report);

}  // namespace majcl
