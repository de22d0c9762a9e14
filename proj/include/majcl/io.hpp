#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"
#include "majcl/profile.hpp"
#include "majcl/synthesis.hpp"
#include "majcl/verify.hpp"

namespace majcl {

// Tournament file:
//   n <count>
//   <u> <v>        one Tor edge per line (v wins the pair)
//   # comment
// Profile file:
//   n <count>
//   voter <multiplicity>
//   <u> <v>        edges of that voter
//   <blank line>   ends the block
// ASCII, LF line endings, single spaces between fields.

ChoiceFunction parse_tournament(std::string_view text);
std::string format_tournament(const ChoiceFunction& c);

IntegerProfile parse_profile(std::string_view text);
std::string format_profile(const IntegerProfile& p);

/// Each stage: "stage <label>", its weighted voters, then the induced matrix
/// as "<x> <y> <t_xy>" lines for x < y.
std::string format_trace(const SynthesisTrace& trace);

/// Per-pair tally table and PASS/FAIL summary.
std::string format_verification(const VerificationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

enum class FamilyKind { Linear, Cyclic, Random };

std::optional<FamilyKind> parse_family_kind(std::string_view text);

/// linear: c{i,j} = max(i,j); cyclic: rotational (odd n only);
/// random: full tournament from a 64-bit Mersenne Twister seeded with `seed`.
ChoiceFunction generate_family(FamilyKind kind, int n, std::uint64_t seed = 0);

/// Valencies, V/V* sets and every balance predicate of c, plus the clause-(g)
/// and certificate status when c is full.
std::string analyze_report(const ChoiceFunction& c, const Limits& limits = {});

}  // namespace majcl
