// majcl: decide, synthesize and verify majority realizations of tournaments.
//
// Exit codes: 0 success / positive answer, 1 definite negative, 2 error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "majcl/enumerate.hpp"
#include "majcl/error.hpp"
#include "majcl/io.hpp"
#include "majcl/realizability.hpp"
#include "majcl/synthesis.hpp"
#include "majcl/verify.hpp"

namespace {

using namespace majcl;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

ChoiceFunction load_tournament(const std::string& path) { return parse_tournament(read_file(path)); }

ChoiceFunction resolve_family(const std::string& source, int n, std::uint64_t seed) {
  if (const auto kind = parse_family_kind(source)) return generate_family(*kind, n, seed);
  return load_tournament(source);
}

void print_certificate(const FCertificate& cert) {
  std::cout << "certificate: r0 " << to_string(cert.r0) << ", r1 " << to_string(cert.r1) << "\n";
  for (int side = 1; side >= 0; --side) {
    for (const auto& e : side == 1 ? cert.support1 : cert.support0) {
      std::cout << "  side " << side << " point (" << to_string(e.point.first) << ","
                << to_string(e.point.second) << ") witness (" << e.witness.first << "," << e.witness.second
                << ") weight " << to_string(e.weight) << "\n";
    }
  }
}

void print_vector(const char* label, const std::vector<Rational>& y) {
  std::cout << label << ":";
  for (const auto& v : y) std::cout << ' ' << to_string(v);
  std::cout << "\n";
}

int run_analyze(const std::string& path) {
  std::cout << analyze_report(load_tournament(path), limits_from_env());
  return kYes;
}

int run_decide(const std::string& family, std::uint64_t seed, const std::string& target_path) {
  const ChoiceFunction target = load_tournament(target_path);
  const ChoiceFunction generator = resolve_family(family, target.size(), seed);
  const MembershipAnswer answer = decide_membership(generator, target);
  std::cout << "member: " << (answer.member ? "yes" : "no") << "\n";
  switch (answer.reason) {
    case MembershipReason::ClauseG:
      std::cout << "reason: clause(g): generator not balanced\n";
      break;
    case MembershipReason::PseudoBalanced:
      std::cout << "reason: pseudo-balanced\n";
      break;
    case MembershipReason::NotPseudoBalanced:
      std::cout << "reason: target not pseudo-balanced\n";
      break;
  }
  if (answer.certificate) print_certificate(*answer.certificate);
  if (answer.uncovered_edge) {
    std::cout << "uncovered edge: " << answer.uncovered_edge->from << " " << answer.uncovered_edge->to << "\n";
  }
  if (answer.farkas) {
    print_vector("farkas above", answer.farkas->above);
    print_vector("farkas below", answer.farkas->below);
  }
  return answer.member ? kYes : kNo;
}

int run_synthesize(const std::string& family, std::uint64_t seed, const std::string& target_path,
                   const std::string& out_path, const std::string& trace_path, bool classic) {
  const ChoiceFunction target = load_tournament(target_path);
  const Limits limits = limits_from_env();
  IntegerProfile profile = [&] {
    if (classic) {
      if (family != "linear") throw Error(ErrorKind::InvalidProfile, "--classic-mcgarvey needs --family linear");
      return mcgarvey_classic(target.size(), target);
    }
    const ChoiceFunction generator = resolve_family(family, target.size(), seed);
    const SynthesisTrace trace = realize_target_traced(generator, target, limits);
    if (!trace_path.empty()) write_file(trace_path, format_trace(trace));
    return *trace.final;
  }();
  if (!verify(profile, target).pass) throw Error(ErrorKind::InternalCheckFailed, "profile failed verification");
  write_file(out_path, format_profile(profile));
  std::cout << "voters: " << profile.total().get_str() << "\n";
  std::cout << "distinct voters: " << profile.voters().size() << "\n";
  std::cout << "wrote " << out_path << "\n";
  return kYes;
}

int run_verify(const std::string& profile_path, const std::string& target_path) {
  const IntegerProfile profile = parse_profile(read_file(profile_path));
  const ChoiceFunction target = load_tournament(target_path);
  const VerificationReport report = verify(profile, target);
  std::cout << format_verification(report);
  return report.pass ? kYes : kNo;
}

int run_enumerate(int n, const std::string& mode_text, const std::string& out_path, unsigned workers) {
  const auto mode = parse_mode(mode_text);
  if (!mode) throw Error(ErrorKind::ParseError, "unknown mode '" + mode_text + "'");
  EnumerationOptions options;
  options.workers = workers;
  options.limits = limits_from_env();
  const EnumerationReport report = enumerate_check(n, *mode, options);
  const std::string text = render_text(report) + render_machine(report);
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
  return report.disagreements.empty() ? kYes : kNo;
}

int run_generate(const std::string& kind_text, int n, std::uint64_t seed, const std::string& out_path) {
  const auto kind = parse_family_kind(kind_text);
  if (!kind) throw Error(ErrorKind::ParseError, "unknown family kind '" + kind_text + "'");
  const std::string text = format_tournament(generate_family(*kind, n, seed));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majority realizability of tournaments over relabeled voter families"};
  app.require_subcommand(1);

  std::string path, family, target, out, trace, profile, mode = "decide-vs-oracle", kind;
  std::uint64_t seed = 0;
  int n = 3;
  unsigned workers = 0;
  bool classic = false;

  auto* analyze = app.add_subcommand("analyze", "Valencies, V-sets and balance predicates of a tournament file");
  analyze->add_option("path", path, "tournament file")->required();

  auto* decide = app.add_subcommand("decide", "Is the target a majority of the family's relabelings?");
  decide->add_option("--family", family, "tournament file, or linear | cyclic | random")->required();
  decide->add_option("--seed", seed, "seed for --family random");
  decide->add_option("--target", target, "target tournament file")->required();

  auto* synthesize = app.add_subcommand("synthesize", "Write a verified integer profile realizing the target");
  synthesize->add_option("--family", family, "tournament file, or linear | cyclic | random")->required();
  synthesize->add_option("--seed", seed, "seed for --family random");
  synthesize->add_option("--target", target, "target tournament file")->required();
  synthesize->add_option("--out", out, "profile output file")->required();
  synthesize->add_option("--trace", trace, "stage-by-stage trace output file");
  synthesize->add_flag("--classic-mcgarvey", classic, "two linear orders per decided pair (linear family only)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a profile's strict majority against a target");
  verify_cmd->add_option("--profile", profile, "profile file")->required();
  verify_cmd->add_option("--target", target, "target tournament file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive validation sweep at small n");
  enumerate->add_option("--n", n, "number of candidates (3 to 5)")->required();
  enumerate->add_option("--mode", mode, "decide-vs-oracle | synthesize-all | classify");
  enumerate->add_option("--out", out, "report file");
  enumerate->add_option("--workers", workers, "worker threads (0 = hardware)");

  auto* generate = app.add_subcommand("generate", "Emit a generator tournament");
  generate->add_option("--kind", kind, "linear | cyclic | random")->required();
  generate->add_option("--n", n, "number of candidates")->required();
  generate->add_option("--seed", seed, "seed for random");
  generate->add_option("--out", out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kError;
  }

  try {
    if (analyze->parsed()) return run_analyze(path);
    if (decide->parsed()) return run_decide(family, seed, target);
    if (synthesize->parsed()) return run_synthesize(family, seed, target, out, trace, classic);
    if (verify_cmd->parsed()) return run_verify(profile, target);
    if (enumerate->parsed()) return run_enumerate(n, mode, out, workers);
    if (generate->parsed()) return run_generate(kind, n, seed, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NotRealizable ? kNo : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
