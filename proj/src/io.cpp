#include "orient/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orient/errors.hpp"

namespace orient {

namespace {

using nlohmann::json;

std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) out.push_back(line);
  }
  return out;
}

std::pair<int, int> parse_arc_line(const std::string& line, int n, int lineno) {
  std::istringstream in(line);
  int a = 0, b = 0;
  std::string extra;
  if (!(in >> a >> b) || (in >> extra))
    throw FormatError("line " + std::to_string(lineno) + ": expected two vertex ids");
  if (a < 1 || b < 1 || a > n || b > n)
    throw FormatError("line " + std::to_string(lineno) + ": vertex id out of range 1.." +
                      std::to_string(n));
  if (a == b) throw FormatError("line " + std::to_string(lineno) + ": loop not allowed");
  return {a - 1, b - 1};
}

Tournament parse_tournament_block(const std::vector<std::string>& lines, std::size_t& at) {
  std::istringstream head(lines[at]);
  std::string tok;
  head >> tok;
  // compact form n:bits
  auto colon = tok.find(':');
  if (tok != "tournament" && colon != std::string::npos) {
    int n = 0;
    try {
      n = std::stoi(tok.substr(0, colon));
    } catch (...) {
      throw FormatError("bad compact tournament header: " + tok);
    }
    std::string bits = tok.substr(colon + 1);
    std::vector<int> vec;
    for (char c : bits) {
      if (c != '0' && c != '1') throw FormatError("compact tournament bits must be 0/1");
      vec.push_back(c - '0');
    }
    ++at;
    return decode(n, vec);
  }
  if (tok != "tournament") throw FormatError("expected a tournament block, got: " + lines[at]);
  int n = 0;
  std::string extra;
  if (!(head >> n) || (head >> extra) || n < 1)
    throw FormatError("bad tournament header: " + lines[at]);
  if (n > kMaxTournamentVertices)
    throw FormatError("tournament too large: n = " + std::to_string(n));
  ++at;
  Tournament t{n, 0};
  std::vector<std::uint8_t> seen(pair_count(n), 0);
  int needed = pair_count(n);
  while (needed > 0) {
    if (at >= lines.size()) throw FormatError("tournament block ended before all arcs were given");
    auto [a, b] = parse_arc_line(lines[at], n, static_cast<int>(at + 1));
    int i = std::min(a, b), j = std::max(a, b);
    int p = pair_pos(n, i, j);
    if (seen[p]) throw FormatError("pair listed twice in tournament block");
    seen[p] = 1;
    t.bits = set_bit(t.bits, p, a < b);
    ++at;
    --needed;
  }
  return t;
}

}  // namespace

Tournament parse_tournament(const std::string& text) {
  std::vector<std::string> lines = significant_lines(text);
  if (lines.empty()) throw FormatError("empty tournament input");
  std::size_t at = 0;
  Tournament t = parse_tournament_block(lines, at);
  if (at != lines.size()) throw FormatError("trailing content after tournament block");
  return t;
}

std::string format_tournament(const Tournament& t, bool compact) {
  std::ostringstream out;
  if (compact) {
    out << t.n << ':';
    for (int p = 0; p < pair_count(t.n); ++p) out << (get_bit(t.bits, p) ? '1' : '0');
    return out.str();
  }
  out << "tournament " << t.n << '\n';
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j) {
      if (t.arc(i, j))
        out << i + 1 << ' ' << j + 1 << '\n';
      else
        out << j + 1 << ' ' << i + 1 << '\n';
    }
  return out.str();
}

ForbiddenSet parse_forbidden_set(const std::string& text, std::vector<std::string>* warnings) {
  std::vector<std::string> lines = significant_lines(text);
  std::vector<Tournament> members;
  std::size_t at = 0;
  while (at < lines.size()) {
    Tournament t = parse_tournament_block(lines, at);
    if (t.n < 2) throw FormatError("forbidden tournaments need at least two vertices");
    members.push_back(t);
  }
  return ForbiddenSet(std::move(members), warnings);
}

PartialDigraph parse_digraph(const std::string& text) {
  std::vector<std::string> lines = significant_lines(text);
  if (lines.empty()) throw FormatError("empty digraph input");
  std::istringstream head(lines[0]);
  std::string kind;
  int n = 0;
  std::string extra;
  head >> kind;
  if (!(head >> n) || (head >> extra) || n < 0)
    throw FormatError("bad digraph header: " + lines[0]);
  bool symmetric;
  if (kind == "digraph") symmetric = false;
  else if (kind == "graph") symmetric = true;
  else throw FormatError("expected 'digraph <n>' or 'graph <n>', got: " + lines[0]);
  PartialDigraph d(n);
  for (std::size_t at = 1; at < lines.size(); ++at) {
    auto [a, b] = parse_arc_line(lines[at], n, static_cast<int>(at + 1));
    if (symmetric)
      d.add_edge(a, b);
    else
      d.add_arc(a, b);
  }
  return d;
}

std::string format_digraph(const PartialDigraph& d) {
  std::ostringstream out;
  if (d.is_symmetric()) {
    out << "graph " << d.n() << '\n';
    for (auto [u, v] : d.underlying_edges()) out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
  }
  out << "digraph " << d.n() << '\n';
  for (auto [u, v] : d.fixed_arcs()) out << u + 1 << ' ' << v + 1 << '\n';
  for (auto [u, v] : d.sym_edges()) {
    out << u + 1 << ' ' << v + 1 << '\n';
    out << v + 1 << ' ' << u + 1 << '\n';
  }
  return out.str();
}

std::string digraph_to_json(const PartialDigraph& d) {
  json j;
  j["n"] = d.n();
  j["fixed_arcs"] = json::array();
  for (auto [u, v] : d.fixed_arcs()) j["fixed_arcs"].push_back({u + 1, v + 1});
  j["sym_edges"] = json::array();
  for (auto [u, v] : d.sym_edges()) j["sym_edges"].push_back({u + 1, v + 1});
  return j.dump(2);
}

PartialDigraph digraph_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("bad digraph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw FormatError("digraph JSON needs an integer field 'n'");
  PartialDigraph d(j["n"].get<int>());
  auto read_pairs = [&](const char* key, bool sym) {
    if (!j.contains(key)) return;
    for (const auto& e : j[key]) {
      if (!e.is_array() || e.size() != 2) throw FormatError("digraph JSON pairs must be [u, v]");
      int u = e[0].get<int>() - 1, v = e[1].get<int>() - 1;
      if (sym)
        d.add_edge(u, v);
      else
        d.add_arc(u, v);
    }
  };
  read_pairs("fixed_arcs", false);
  read_pairs("sym_edges", true);
  return d;
}

NaeFormula parse_nae_formula(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  NaeFormula formula;
  int expected_clauses = -1;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      int arity = 0;
      if (!(ls >> fmt >> arity >> formula.num_vars >> expected_clauses) || fmt != "nae" ||
          arity != 3)
        throw FormatError("line " + std::to_string(lineno) +
                          ": expected 'p nae 3 <vars> <clauses>'");
      header_seen = true;
      continue;
    }
    if (!header_seen)
      throw FormatError("line " + std::to_string(lineno) + ": clause before the 'p nae' header");
    NaeClause clause{};
    try {
      clause.lit[0] = std::stoi(tok);
    } catch (...) {
      throw FormatError("line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
    }
    if (!(ls >> clause.lit[1] >> clause.lit[2]))
      throw FormatError("line " + std::to_string(lineno) + ": clause needs three literals");
    int trailing = 0;
    if (ls >> trailing && trailing != 0)
      throw FormatError("line " + std::to_string(lineno) + ": unexpected fourth literal");
    for (int lit : clause.lit)
      if (lit == 0 || std::abs(lit) > formula.num_vars)
        throw FormatError("line " + std::to_string(lineno) + ": literal out of range");
    formula.clauses.push_back(clause);
  }
  if (!header_seen) throw FormatError("missing 'p nae 3 <vars> <clauses>' header");
  if (expected_clauses >= 0 && expected_clauses != static_cast<int>(formula.clauses.size()))
    throw FormatError("clause count does not match the header");
  return formula;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace orient
