#include "lch/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "lch/errors.hpp"

namespace lch {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string rest;  // text after '=' for differential lines
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ContractError("line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const char* begin = s.data();
  if (!s.empty() && s[0] == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || begin == ptr) return std::nullopt;
  return value;
}

}  // namespace

ParseResult parse_dga(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}, {}};
    if (auto eq = raw.find('='); eq != std::string_view::npos) {
      line.tokens = split_ws(raw.substr(0, eq));
      line.rest = std::string(raw.substr(eq + 1));
      if (line.tokens.empty()) fail(number, "unexpected '='");
    } else {
      line.tokens = split_ws(raw);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }

  if (lines.empty() || lines[0].tokens[0] != "modulus")
    fail(lines.empty() ? 1 : lines[0].number, "missing modulus line");
  const Line& first = lines[0];
  if (first.tokens.size() != 2 || !first.rest.empty()) fail(first.number, "expected 'modulus <non-negative integer>'");
  const auto modulus = parse_int(first.tokens[1]);
  if (!modulus || *modulus < 0) fail(first.number, "modulus must be a non-negative integer");

  std::vector<Generator> gens;
  std::unordered_map<std::string, GenId> index;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& head = line.tokens[0];
    if (head == "modulus") fail(line.number, "duplicate modulus line");
    if (head == "d") continue;
    if (head != "gen") fail(line.number, "unknown statement '" + head + "'");
    if (line.tokens.size() != 3 || !line.rest.empty()) fail(line.number, "expected 'gen <name> <integer degree>'");
    const std::string& name = line.tokens[1];
    if (!valid_name(name)) fail(line.number, "invalid generator name '" + name + "'");
    const auto degree = parse_int(line.tokens[2]);
    if (!degree) fail(line.number, "invalid degree '" + line.tokens[2] + "'");
    if (index.count(name)) fail(line.number, "duplicate generator declaration '" + name + "'");
    index.emplace(name, static_cast<GenId>(gens.size()));
    gens.push_back({name, Grading::reduce(*degree, *modulus)});
  }

  ParseResult result;
  std::vector<Poly> diff(gens.size());
  std::vector<bool> seen(gens.size(), false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens[0] != "d") continue;
    if (line.tokens.size() != 2) fail(line.number, "expected 'd <name> = <poly>'");
    auto it = index.find(line.tokens[1]);
    if (it == index.end()) fail(line.number, "undeclared generator '" + line.tokens[1] + "'");
    const GenId g = it->second;
    if (seen[g]) fail(line.number, "duplicate differential for '" + line.tokens[1] + "'");
    seen[g] = true;

    const auto body = split_ws(line.rest);
    if (body.empty()) fail(line.number, "empty polynomial");
    if (body.size() == 1 && body[0] == "0") continue;

    std::vector<Word> terms;
    Word current;
    bool unit = false;
    bool empty_term = true;
    auto finish = [&] {
      if (empty_term) fail(line.number, "empty term");
      terms.push_back(current);
      current.clear();
      unit = false;
      empty_term = true;
    };
    // Tokens may carry '+' without surrounding spaces.
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      if (token == "1") {
        if (!empty_term) fail(line.number, "'1' must stand alone in a term");
        unit = true;
      } else if (token == "0") {
        fail(line.number, "'0' must be the whole polynomial");
      } else {
        if (unit) fail(line.number, "'1' must stand alone in a term");
        auto g2 = index.find(token);
        if (g2 == index.end()) {
          if (!valid_name(token)) fail(line.number, "unexpected token '" + token + "'");
          fail(line.number, "undeclared generator '" + token + "'");
        }
        current.push_back(g2->second);
      }
      empty_term = false;
      token.clear();
    };
    for (char c : line.rest + ' ') {
      if (c == '+') {
        flush();
        finish();
      } else if (c == ' ' || c == '\t') {
        flush();
      } else {
        token += c;
      }
    }
    flush();
    finish();

    std::size_t cancelled = 0;
    diff[g] = Poly::from_terms(std::move(terms), &cancelled);
    if (cancelled > 0)
      result.warnings.push_back("line " + std::to_string(line.number) + ": " + std::to_string(cancelled) +
                                " term(s) of d " + gens[g].name + " cancelled mod 2");
  }

  result.dga = Dga(*modulus, std::move(gens), std::move(diff));
  return result;
}

std::string serialize_dga(const Dga& d) {
  std::string out = "modulus " + std::to_string(d.modulus()) + "\n";
  for (const auto& g : d.generators()) out += "gen " + g.name + " " + std::to_string(g.degree) + "\n";
  for (GenId g = 0; g < d.size(); ++g)
    if (!d.d(g).is_zero()) out += "d " + d.name(g) + " = " + d.format(d.d(g)) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lch
