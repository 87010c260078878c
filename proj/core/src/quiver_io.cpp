#include "arq/quiver_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace arq {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::int64_t parse_id(const Token& t, std::size_t line) {
  std::int64_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) throw ParseError(line, t.column, "expected integer id, got '" + t.text + "'");
  return v;
}

void expect_arity(const std::vector<Token>& toks, std::size_t n, std::size_t line) {
  if (toks.size() < n) {
    std::size_t col = toks.back().column + toks.back().text.size();
    throw ParseError(line, col, "'" + toks[0].text + "' expects " + std::to_string(n - 1) + " arguments");
  }
  if (toks.size() > n) throw ParseError(line, toks[n].column, "unexpected token '" + toks[n].text + "'");
}

}  // namespace

QuiverFile parse_quiver(std::istream& in) {
  QuiverFile f;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    try {
      if (kw == "v") {
        if (toks.size() < 2) expect_arity(toks, 2, lineno);
        VertexId v = parse_id(toks[1], lineno);
        bool p = false, i = false;
        for (std::size_t k = 2; k < toks.size(); ++k) {
          bool& flag = toks[k].text == "P" ? p : i;
          if ((toks[k].text != "P" && toks[k].text != "I") || flag)
            throw ParseError(lineno, toks[k].column, "unexpected vertex flag '" + toks[k].text + "'");
          flag = true;
        }
        if (f.quiver.has_vertex(v)) throw ParseError(lineno, toks[1].column, "duplicate vertex " + toks[1].text);
        f.quiver.add_vertex(v, p, i);
      } else if (kw == "a") {
        expect_arity(toks, 4, lineno);
        ArrowId a = parse_id(toks[1], lineno);
        VertexId s = parse_id(toks[2], lineno);
        VertexId t = parse_id(toks[3], lineno);
        if (f.quiver.has_arrow(a)) throw ParseError(lineno, toks[1].column, "duplicate arrow " + toks[1].text);
        f.quiver.add_arrow(a, s, t);
      } else if (kw == "t") {
        expect_arity(toks, 3, lineno);
        VertexId x = parse_id(toks[1], lineno);
        VertexId tx = parse_id(toks[2], lineno);
        if (f.quiver.tau(x)) throw ParseError(lineno, toks[1].column, "tau already defined at " + toks[1].text);
        f.quiver.set_tau(x, tx);
        if (!f.first_translation_line) f.first_translation_line = lineno;
      } else if (kw == "s") {
        expect_arity(toks, 3, lineno);
        ArrowId a = parse_id(toks[1], lineno);
        ArrowId sa = parse_id(toks[2], lineno);
        if (f.quiver.sigma(a)) throw ParseError(lineno, toks[1].column, "sigma already defined at " + toks[1].text);
        f.quiver.set_sigma(a, sa);
        if (!f.first_translation_line) f.first_translation_line = lineno;
      } else if (kw == "pi") {
        expect_arity(toks, 4, lineno);
        const std::string& kind = toks[1].text;
        std::int64_t c = parse_id(toks[2], lineno);
        std::int64_t b = parse_id(toks[3], lineno);
        if (kind == "v") {
          if (!f.pi_vertices.emplace(c, b).second) throw ParseError(lineno, toks[2].column, "duplicate pi entry");
        } else if (kind == "a") {
          if (!f.pi_arrows.emplace(c, b).second) throw ParseError(lineno, toks[2].column, "duplicate pi entry");
        } else {
          throw ParseError(lineno, toks[1].column, "expected 'v' or 'a' after 'pi', got '" + kind + "'");
        }
      } else {
        throw ParseError(lineno, toks[0].column, "unknown declaration '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, toks[0].column, e.what());
    }
  }
  return f;
}

QuiverFile parse_quiver_string(const std::string& text) {
  std::istringstream in(text);
  return parse_quiver(in);
}

QuiverFile load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_quiver(in);
}

std::string serialize(const TranslationQuiver& q) {
  std::ostringstream os;
  for (VertexId v : q.vertices()) {
    os << "v " << v;
    if (q.is_projective(v)) os << " P";
    if (q.is_injective(v)) os << " I";
    os << '\n';
  }
  for (const Arrow& a : q.arrows()) os << "a " << a.id << ' ' << a.source << ' ' << a.target << '\n';
  for (const auto& [x, tx] : q.tau_map()) os << "t " << x << ' ' << tx << '\n';
  for (const auto& [a, sa] : q.sigma_map()) os << "s " << a << ' ' << sa << '\n';
  return os.str();
}

std::string serialize(const QuiverFile& f) {
  std::ostringstream os;
  os << serialize(f.quiver);
  for (const auto& [c, b] : f.pi_vertices) os << "pi v " << c << ' ' << b << '\n';
  for (const auto& [c, b] : f.pi_arrows) os << "pi a " << c << ' ' << b << '\n';
  return os.str();
}

}  // namespace arq
