#include "timeline/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace timeline {

namespace {

struct Token {
  long long value = 0;
  int line = 0;
  int column = 0;
};

// Reads whitespace-separated integers line by line, remembering positions.
class TokenReader {
 public:
  explicit TokenReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::vector<Token> row;
      size_t p = 0;
      while (p < line.size()) {
        while (p < line.size() && (line[p] == ' ' || line[p] == '\t' || line[p] == '\r')) ++p;
        if (p >= line.size()) break;
        const size_t start = p;
        while (p < line.size() && line[p] != ' ' && line[p] != '\t' && line[p] != '\r') ++p;
        const std::string word = line.substr(start, p - start);
        Token tok{0, lineno, static_cast<int>(start) + 1};
        try {
          size_t used = 0;
          tok.value = std::stoll(word, &used);
          if (used != word.size()) throw std::invalid_argument(word);
        } catch (const std::exception&) {
          throw ParseError(lineno, tok.column, "expected an integer, found '" + word + "'");
        }
        row.push_back(tok);
      }
      rows_.push_back(std::move(row));
    }
    last_line_ = lineno;
  }

  // Next non-empty line, which must hold exactly `count` integers.
  std::vector<Token> line(size_t count, const std::string& what) {
    if (next_ >= rows_.size()) throw ParseError(last_line_ + 1, 1, "unexpected end of input, expected " + what);
    auto row = rows_[next_++];
    if (row.size() != count)
      throw ParseError(row.front().line, row.front().column,
                       "expected " + what + " (" + std::to_string(count) + " integers), found " +
                           std::to_string(row.size()));
    return row;
  }

  bool done() const { return next_ >= rows_.size(); }
  const Token& peek() const { return rows_[next_].front(); }

 private:
  std::vector<std::vector<Token>> rows_;
  size_t next_ = 0;
  int last_line_ = 0;
};

}  // namespace

TemporalGraph parse_instance(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, static_cast<int>(e.byte), std::string("invalid JSON: ") + e.what());
    }
    try {
      const int n = j.at("n").get<int>();
      std::vector<std::vector<Edge>> snaps;
      for (const auto& s : j.at("snapshots")) {
        std::vector<Edge> es;
        for (const auto& e : s) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        snaps.push_back(std::move(es));
      }
      return TemporalGraph(n, std::move(snaps));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, 1, std::string("malformed JSON instance: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, 1, e.what());
    }
  }

  TokenReader rd(text);
  const auto head = rd.line(2, "header 'n T'");
  if (head[0].value < 1) throw ParseError(head[0].line, head[0].column, "vertex count must be positive");
  if (head[1].value < 1) throw ParseError(head[1].line, head[1].column, "snapshot count must be positive");
  if (head[0].value > (1 << 30) || head[1].value > (1 << 30))
    throw ParseError(head[0].line, head[0].column, "counts too large");
  const int n = static_cast<int>(head[0].value), T = static_cast<int>(head[1].value);
  std::vector<std::vector<Edge>> snaps(T);
  for (int i = 0; i < T; ++i) {
    const auto cnt = rd.line(1, "edge count of snapshot " + std::to_string(i + 1));
    if (cnt[0].value < 0) throw ParseError(cnt[0].line, cnt[0].column, "negative edge count");
    std::set<Edge> seen;
    for (long long e = 0; e < cnt[0].value; ++e) {
      const auto uv = rd.line(2, "edge 'u v'");
      for (const auto& tok : uv)
        if (tok.value < 1 || tok.value > n)
          throw ParseError(tok.line, tok.column, "endpoint " + std::to_string(tok.value) + " out of range [1, " +
                                                     std::to_string(n) + "]");
      if (uv[0].value == uv[1].value) throw ParseError(uv[1].line, uv[1].column, "self-loop");
      const Edge edge(static_cast<Vertex>(uv[0].value), static_cast<Vertex>(uv[1].value));
      if (!seen.insert(edge).second)
        throw ParseError(uv[0].line, uv[0].column, "duplicate edge in snapshot " + std::to_string(i + 1));
      snaps[i].push_back(edge);
    }
  }
  if (!rd.done()) throw ParseError(rd.peek().line, rd.peek().column, "trailing content after last snapshot");
  return TemporalGraph(n, std::move(snaps));
}

std::string emit_instance(const TemporalGraph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.lifetime() << '\n';
  for (const auto& es : g.snapshots()) {
    out << es.size() << '\n';
    for (const auto& e : es) out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

std::string emit_instance_json(const TemporalGraph& g) {
  nlohmann::json j;
  j["n"] = g.num_vertices();
  j["snapshots"] = nlohmann::json::array();
  for (const auto& es : g.snapshots()) {
    auto arr = nlohmann::json::array();
    for (const auto& e : es) arr.push_back({e.u, e.v});
    j["snapshots"].push_back(arr);
  }
  return j.dump() + "\n";
}

std::string emit_witness(const Timeline& tl) {
  nlohmann::json j;
  j["intervals"] = nlohmann::json::array();
  for (const auto& iv : tl.intervals) j["intervals"].push_back({{"v", iv.v}, {"a", iv.a}, {"b", iv.b}});
  return j.dump() + "\n";
}

Timeline parse_witness(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Timeline tl;
    for (const auto& iv : j.at("intervals"))
      tl.add(iv.at("v").get<int>(), iv.at("a").get<int>(), iv.at("b").get<int>());
    return tl;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("witness: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace timeline
