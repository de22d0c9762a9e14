#include "majcl/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>

#include "majcl/balance.hpp"
#include "majcl/error.hpp"
#include "majcl/io.hpp"
#include "majcl/lp.hpp"
#include "majcl/permutation.hpp"
#include "majcl/realizability.hpp"
#include "majcl/synthesis.hpp"
#include "majcl/verify.hpp"

namespace majcl {

namespace {

std::uint64_t power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::vector<ChoiceFunction> all_full(int n) {
  std::vector<ChoiceFunction> out;
  const std::uint64_t count = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < count; ++code) out.push_back(ChoiceFunction::from_full_code(n, code));
  return out;
}

std::vector<ChoiceFunction> all_functions(int n) {
  std::vector<ChoiceFunction> out;
  const std::uint64_t count = power(3, pair_count(n));
  for (std::uint64_t code = 0; code < count; ++code) out.push_back(ChoiceFunction::from_ternary_code(n, code));
  return out;
}

void check_scope(int n) {
  if (n < 3) throw Error(ErrorKind::TooFewCandidates, "enumeration needs n >= 3");
  if (n > 5) throw Error(ErrorKind::ScopeTooLarge, "exhaustive sweeps are limited to n <= 5");
}

// Evaluates job(i) for i in [0, count) on `workers` threads; results are
// stored by index so the merge order is fixed.
template <typename Result>
std::vector<Result> parallel_map(std::size_t count, unsigned workers,
                                 const std::function<Result(std::size_t)>& job) {
  std::vector<Result> results(count);
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) results[i] = job(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

struct PairResult {
  bool agree = true;
  bool realizable = false;
  std::string detail;
};

struct ClassifyResult {
  bool full = false;
  bool balanced = false;
  bool pseudo = false;
  bool weight = false;
  bool partition = false;
  bool partition_plus = false;
  std::string violation;
};

ClassifyResult classify_one(const ChoiceFunction& c) {
  ClassifyResult r;
  r.full = c.is_full();
  r.balanced = r.full && is_balanced(c);
  r.pseudo = is_pseudo_balanced(c);
  r.weight = is_weight_balanced(c);
  r.partition = is_partition_balanced(c);
  r.partition_plus = is_partition_plus_balanced(c);
  if (r.pseudo != is_pseudo_balanced_by_paths(c)) r.violation = "strong components and path search disagree";
  if (r.weight != r.pseudo) r.violation = "weight-balanced differs from pseudo-balanced";
  if (r.weight && !r.partition) r.violation = "weight-balanced but not partition-balanced";
  if (r.full && r.weight && !r.partition_plus) r.violation = "full weight-balanced but not partition+-balanced";
  if (r.full && r.partition != r.partition_plus) r.violation = "full: partition differs from partition+";
  return r;
}

}  // namespace

const char* to_string(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::DecideVsOracle: return "decide-vs-oracle";
    case EnumerationMode::SynthesizeAll: return "synthesize-all";
    case EnumerationMode::ClassifyBalance: return "classify";
  }
  return "unknown";
}

std::optional<EnumerationMode> parse_mode(const std::string& text) {
  for (auto mode : {EnumerationMode::DecideVsOracle, EnumerationMode::SynthesizeAll,
                    EnumerationMode::ClassifyBalance}) {
    if (text == to_string(mode)) return mode;
  }
  return std::nullopt;
}

std::vector<ChoiceFunction> sweep_generators(int n) {
  check_scope(n);
  if (n < 5) return all_full(n);
  return {rotational(5), linear_order(5), generate_family(FamilyKind::Random, 5, 1),
          generate_family(FamilyKind::Random, 5, 2)};
}

std::vector<ChoiceFunction> sweep_targets(int n) {
  check_scope(n);
  return n == 3 ? all_functions(n) : all_full(n);
}

EnumerationReport enumerate_check(int n, EnumerationMode mode, const EnumerationOptions& options) {
  check_scope(n);
  EnumerationReport report;
  report.n = n;
  report.mode = mode;

  if (mode == EnumerationMode::ClassifyBalance) {
    const auto functions = all_functions(n);
    const auto results = parallel_map<ClassifyResult>(
        functions.size(), options.workers, [&](std::size_t i) { return classify_one(functions[i]); });
    BalanceCounts counts;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      ++counts.all_total;
      counts.all_pseudo += r.pseudo;
      counts.all_weight += r.weight;
      counts.all_partition += r.partition;
      counts.all_partition_plus += r.partition_plus;
      if (r.full) {
        ++counts.full_total;
        counts.full_balanced += r.balanced;
        counts.full_pseudo += r.pseudo;
        counts.full_weight += r.weight;
        counts.full_partition += r.partition;
        counts.full_partition_plus += r.partition_plus;
      }
      if (r.violation.empty()) {
        ++report.agreements;
      } else {
        report.disagreements.push_back({functions[i], functions[i], r.violation});
      }
    }
    report.families_tested = 1;
    report.targets_tested = counts.all_total;
    report.pseudo_balanced_count = counts.all_pseudo;
    report.realizable_count = counts.all_weight;
    report.balance = counts;
    return report;
  }

  const auto generators = sweep_generators(n);
  const auto targets = sweep_targets(n);
  report.families_tested = generators.size();
  report.targets_tested = targets.size();
  for (const auto& c : targets) report.pseudo_balanced_count += is_pseudo_balanced(c);

  // Per-generator orbits are shared by every target of that generator.
  std::vector<std::vector<ChoiceFunction>> orbits;
  if (mode == EnumerationMode::DecideVsOracle) {
    for (const auto& d : generators) orbits.push_back(sym_closure(d, options.limits));
  }

  const std::size_t total = generators.size() * targets.size();
  const auto results = parallel_map<PairResult>(total, options.workers, [&](std::size_t i) {
    const std::size_t g = i / targets.size();
    const auto& d = generators[g];
    const auto& c = targets[i % targets.size()];
    PairResult r;
    const MembershipAnswer answer = decide_membership(d, c);
    r.realizable = answer.member;
    if (mode == EnumerationMode::DecideVsOracle) {
      const bool oracle = max_margin_feasible(oracle_program(orbits[g], c)).feasible;
      r.agree = oracle == answer.member;
      if (!r.agree) r.detail = std::string("decide=") + (answer.member ? "1" : "0") + " oracle=" + (oracle ? "1" : "0");
    } else if (answer.member) {
      try {
        const IntegerProfile profile = realize_target(d, c, options.limits);
        r.agree = verify(profile, c).pass;
        if (!r.agree) r.detail = "synthesized profile fails verification";
      } catch (const Error& e) {
        r.agree = false;
        r.detail = e.what();
      }
    }
    return r;
  });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    report.realizable_count += r.realizable;
    if (r.agree) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({generators[i / targets.size()], targets[i % targets.size()], r.detail});
    }
  }
  return report;
}

std::string render_text(const EnumerationReport& report) {
  std::ostringstream out;
  out << "enumeration n=" << report.n << " mode=" << to_string(report.mode) << "\n";
  if (report.balance) {
    const auto& b = *report.balance;
    out << "full: " << b.full_total << ", pseudo-balanced: " << b.full_pseudo << "; partial: " << b.all_total
        << ", pseudo-balanced: " << b.all_pseudo << "\n";
    out << "strong tournaments: " << b.full_pseudo << "\n";
    out << "balanced tournaments: " << b.full_balanced << "\n";
    out << "full weight-balanced: " << b.full_weight << ", partition-balanced: " << b.full_partition
        << ", partition+-balanced: " << b.full_partition_plus << "\n";
    out << "all weight-balanced: " << b.all_weight << ", partition-balanced: " << b.all_partition
        << ", partition+-balanced: " << b.all_partition_plus << "\n";
  } else {
    out << "families: " << report.families_tested << "\n";
    out << "targets: " << report.targets_tested << "\n";
    out << "realizable: " << report.realizable_count << "\n";
    out << "pseudo-balanced targets: " << report.pseudo_balanced_count << "\n";
  }
  out << "agreements: " << report.agreements << "\n";
  out << "disagreements: " << report.disagreements.size() << "\n";
  if (!report.disagreements.empty()) {
    const auto& first = report.disagreements.front();
    out << "first disagreement: generator " << describe(first.generator) << " target " << describe(first.target)
        << " (" << first.detail << ")\n";
  }
  return out.str();
}

std::string render_machine(const EnumerationReport& report) {
  std::ostringstream out;
  out << "report n=" << report.n << " mode=" << to_string(report.mode) << " families=" << report.families_tested
      << " targets=" << report.targets_tested << " agreements=" << report.agreements
      << " disagreements=" << report.disagreements.size() << " realizable=" << report.realizable_count
      << " pseudo_balanced=" << report.pseudo_balanced_count;
  if (report.balance) {
    const auto& b = *report.balance;
    out << " full=" << b.full_total << " full_balanced=" << b.full_balanced << " full_pseudo=" << b.full_pseudo
        << " full_weight=" << b.full_weight << " full_partition=" << b.full_partition
        << " full_partition_plus=" << b.full_partition_plus << " all=" << b.all_total
        << " all_pseudo=" << b.all_pseudo << " all_weight=" << b.all_weight
        << " all_partition=" << b.all_partition << " all_partition_plus=" << b.all_partition_plus;
  }
  out << "\n";
  return out.str();
}

}  // namespace majcl
