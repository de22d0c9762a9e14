#include "majcl/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "majcl/balance.hpp"
#include "majcl/error.hpp"
#include "majcl/realizability.hpp"
#include "majcl/valency.hpp"

namespace majcl {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    const auto stop = end == std::string_view::npos ? text.size() : end;
    lines.push_back({number++, text.substr(start, stop - start)});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> fields(const Line& line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  const auto text = line.text;
  for (;;) {
    const auto space = text.find(' ', start);
    const auto token = text.substr(start, space == std::string_view::npos ? std::string_view::npos : space - start);
    if (token.empty()) fail(line.number, "fields must be separated by single spaces");
    out.push_back(token);
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  return out;
}

long parse_integer(const Line& line, std::string_view token) {
  long value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) fail(line.number, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

bool is_comment(const Line& line) { return !line.text.empty() && line.text.front() == '#'; }

int parse_header(const std::vector<Line>& lines, std::size_t& pos) {
  while (pos < lines.size() && (lines[pos].text.empty() || is_comment(lines[pos]))) ++pos;
  if (pos == lines.size()) throw Error(ErrorKind::ParseError, "missing 'n <count>' header");
  const Line& line = lines[pos++];
  const auto tokens = fields(line);
  if (tokens.size() != 2 || tokens[0] != "n") fail(line.number, "expected 'n <count>'");
  const long n = parse_integer(line, tokens[1]);
  if (n < 3) fail(line.number, "need at least 3 candidates");
  if (n > 64) fail(line.number, "too many candidates");
  return static_cast<int>(n);
}

Edge parse_edge(const Line& line, int n, std::set<std::pair<Vertex, Vertex>>& seen) {
  const auto tokens = fields(line);
  if (tokens.size() != 2) fail(line.number, "expected '<u> <v>'");
  const long u = parse_integer(line, tokens[0]);
  const long v = parse_integer(line, tokens[1]);
  if (u < 0 || v < 0 || u >= n || v >= n) fail(line.number, "vertex index out of range");
  if (u == v) fail(line.number, "self-loop " + std::to_string(u) + " " + std::to_string(v));
  const std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
  if (!seen.insert(key).second) fail(line.number, "pair listed twice");
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

void append_edges(std::ostringstream& out, const ChoiceFunction& c) {
  for (const Edge& e : c.edges()) out << e.from << ' ' << e.to << '\n';
}

std::string point_set_line(const PointSet& points) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [point, witnesses] : points) {
    out << (first ? "" : " ") << "(" << to_string(point.first) << "," << to_string(point.second) << ")";
    out << "[" << witnesses.front().first << " " << witnesses.front().second << "]";
    first = false;
  }
  return first ? "{}" : out.str();
}

std::string subset_text(std::uint32_t mask, int n) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) {
      out << (first ? "" : ",") << v;
      first = false;
    }
  }
  out << "}";
  return out.str();
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

}  // namespace

ChoiceFunction parse_tournament(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t pos = 0;
  const int n = parse_header(lines, pos);
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    if (line.text.empty() || is_comment(line)) continue;
    edges.push_back(parse_edge(line, n, seen));
  }
  return ChoiceFunction::from_edges(n, edges);
}

std::string format_tournament(const ChoiceFunction& c) {
  std::ostringstream out;
  out << "n " << c.size() << '\n';
  append_edges(out, c);
  return out.str();
}

IntegerProfile parse_profile(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t pos = 0;
  const int n = parse_header(lines, pos);
  std::vector<CountedVoter> voters;
  while (pos < lines.size()) {
    const Line& line = lines[pos];
    if (line.text.empty() || is_comment(line)) {
      ++pos;
      continue;
    }
    const auto tokens = fields(line);
    if (tokens.size() != 2 || tokens[0] != "voter") fail(line.number, "expected 'voter <multiplicity>'");
    Integer multiplicity;
    if (multiplicity.set_str(std::string(tokens[1]), 10) != 0 || multiplicity < 1) {
      fail(line.number, "multiplicity must be a positive integer");
    }
    ++pos;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    while (pos < lines.size() && !lines[pos].text.empty()) {
      const Line& body = lines[pos++];
      if (is_comment(body)) continue;
      if (body.text.starts_with("voter")) fail(body.number, "voter block must end with a blank line");
      edges.push_back(parse_edge(body, n, seen));
    }
    voters.push_back({ChoiceFunction::from_edges(n, edges), multiplicity});
  }
  if (voters.empty()) throw Error(ErrorKind::ParseError, "profile has no voters");
  return IntegerProfile(n, std::move(voters));
}

std::string format_profile(const IntegerProfile& p) {
  std::ostringstream out;
  out << "n " << p.size() << '\n';
  for (const auto& v : p.voters()) {
    out << "voter " << v.multiplicity.get_str() << '\n';
    append_edges(out, v.voter);
    out << '\n';
  }
  return out.str();
}

std::string format_trace(const SynthesisTrace& trace) {
  std::ostringstream out;
  for (const auto& s : trace.stages) {
    out << "stage " << s.label << '\n';
    for (const auto& v : s.profile.voters()) {
      out << "voter " << to_string(v.weight) << '\n';
      append_edges(out, v.voter);
    }
    out << "matrix\n";
    for (Vertex x = 0; x < s.induced.size(); ++x) {
      for (Vertex y = x + 1; y < s.induced.size(); ++y) {
        out << x << ' ' << y << ' ' << to_string(s.induced.at(x, y)) << '\n';
      }
    }
    out << '\n';
  }
  if (trace.final) {
    out << "stage final\n";
    out << format_profile(*trace.final);
  }
  return out.str();
}

std::string format_verification(const VerificationReport& report) {
  std::ostringstream out;
  out << "pair winner_count loser_count outcome observed expected\n";
  for (const auto& t : report.per_pair) {
    auto name = [](const std::optional<Vertex>& v) { return v ? std::to_string(*v) : std::string("-"); };
    out << t.x << "," << t.y << ' ' << to_string(t.winner_count) << ' ' << to_string(t.loser_count) << ' '
        << (t.outcome == PairOutcome::Win ? "win" : "tie") << ' ' << name(t.winner) << ' ' << name(t.expected)
        << '\n';
  }
  out << "mismatches: " << report.mismatches.size() << '\n';
  out << (report.pass ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << contents;
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  if (text == "linear") return FamilyKind::Linear;
  if (text == "cyclic") return FamilyKind::Cyclic;
  if (text == "random") return FamilyKind::Random;
  return std::nullopt;
}

ChoiceFunction generate_family(FamilyKind kind, int n, std::uint64_t seed) {
  switch (kind) {
    case FamilyKind::Linear:
      return linear_order(n);
    case FamilyKind::Cyclic:
      return rotational(n);
    case FamilyKind::Random: {
      if (n < 3) throw Error(ErrorKind::TooFewCandidates, "need at least 3 candidates");
      std::mt19937_64 rng(seed);
      std::vector<Vertex> winners(pair_count(n));
      std::size_t p = 0;
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y, ++p) winners[p] = (rng() & 1U) ? y : x;
      }
      return ChoiceFunction(n, std::move(winners));
    }
  }
  throw Error(ErrorKind::ParseError, "unknown family kind");
}

std::string analyze_report(const ChoiceFunction& c, const Limits& limits) {
  std::ostringstream out;
  const int n = c.size();
  const auto sig = valency_signature(c);
  out << "n: " << n << '\n';
  out << "full: " << yes_no(c.is_full()) << '\n';
  out << "valencies:";
  for (const auto& v : sig.val) out << ' ' << to_string(v);
  out << '\n';
  out << "V0: " << point_set_line(sig.v0) << '\n';
  out << "V1: " << point_set_line(sig.v1) << '\n';
  out << "Vhalf: " << point_set_line(sig.vhalf) << '\n';
  out << "V0*: " << point_set_line(sig.v0star) << '\n';
  out << "V1*: " << point_set_line(sig.v1star) << '\n';

  out << "balanced: " << yes_no(is_balanced(c)) << '\n';
  out << "pseudo-balanced: " << yes_no(is_pseudo_balanced(c)) << '\n';
  const auto scc = strong_components(c);
  out << "strong components: " << scc.components.size() << '\n';
  if (n <= limits.subset_cap) {
    const auto part = partition_violation(c, limits);
    const auto plus = partition_plus_violation(c, limits);
    out << "partition-balanced: " << yes_no(!part);
    if (part) out << " (Y = " << subset_text(*part, n) << ")";
    out << '\n';
    out << "partition+-balanced: " << yes_no(!plus);
    if (plus) out << " (Y = " << subset_text(*plus, n) << ")";
    out << '\n';
  } else {
    out << "partition-balanced: skipped\npartition+-balanced: skipped\n";
  }
  const WeightBalance wb = weight_balance(c);
  out << "weight-balanced: " << yes_no(wb.weight_balanced);
  if (wb.weight_balanced) out << " (margin " << to_string(wb.margin) << ")";
  out << '\n';

  if (!c.is_full()) {
    out << "clause(g): n/a (partial)\ncertificate: n/a (partial)\n";
    return out.str();
  }
  out << "clause(g): " << yes_no(has_clause_g(c)) << '\n';
  const auto cert = f_certificate(c);
  if (!cert) {
    out << "certificate: none\n";
    return out.str();
  }
  out << "certificate: found (r0 " << to_string(cert->r0) << ", r1 " << to_string(cert->r1) << ")\n";
  for (int side = 1; side >= 0; --side) {
    for (const auto& e : side == 1 ? cert->support1 : cert->support0) {
      out << "  side " << side << " point (" << to_string(e.point.first) << "," << to_string(e.point.second)
          << ") witness (" << e.witness.first << "," << e.witness.second << ") weight " << to_string(e.weight)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace majcl
