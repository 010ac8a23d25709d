#include "sixflow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sixflow {

namespace {

std::vector<std::string> tokens(const std::string& line, std::size_t number) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(' ', start);
    if (end == std::string::npos) end = line.size();
    if (end == start) throw ParseError(number, "expected single-space separated fields");
    out.push_back(line.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// Splits into lines, keeping 1-based line numbers and dropping comments.
class LineReader {
 public:
  explicit LineReader(const std::string& text) {
    std::size_t start = 0;
    std::size_t number = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      ++number;
      std::string line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') {
        throw ParseError(number, "CR line endings are not accepted");
      }
      if (line.empty() || line[0] != '#') lines_.emplace_back(number, std::move(line));
      start = end + 1;
    }
  }

  const std::string& next(const char* expecting) {
    if (pos_ >= lines_.size()) {
      throw ParseError(last_line() + 1, std::string("unexpected end of input, expected ") + expecting);
    }
    current_ = lines_[pos_].first;
    return lines_[pos_++].second;
  }
  std::vector<std::string> next_tokens(const char* expecting) {
    const std::string& text = next(expecting);
    return tokens(text, current_);
  }
  std::size_t line() const noexcept { return current_; }
  bool done() const noexcept { return pos_ >= lines_.size(); }
  std::size_t peek_line() const noexcept { return pos_ < lines_.size() ? lines_[pos_].first : last_line() + 1; }

 private:
  std::size_t last_line() const noexcept { return lines_.empty() ? 0 : lines_.back().first; }

  std::vector<std::pair<std::size_t, std::string>> lines_;
  std::size_t pos_ = 0;
  std::size_t current_ = 0;
};

template <class T>
T number(const std::string& tok, std::size_t line, const char* what) {
  T value{};
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

Dir parse_dir(const std::string& tok, std::size_t line) {
  if (tok == "a") return Dir::Away;
  if (tok == "t") return Dir::Toward;
  throw ParseError(line, "bad direction token '" + tok + "'");
}

}  // namespace

SignedGraph parse_sgf(const std::string& text) {
  LineReader in(text);
  if (in.next("header") != "sgf 1") throw ParseError(in.line(), "expected header 'sgf 1'");
  const auto counts = in.next_tokens("vertex and edge counts");
  if (counts.size() != 2) throw ParseError(in.line(), "expected '<n> <m>'");
  const auto n = number<std::size_t>(counts[0], in.line(), "vertex count");
  const auto m = number<std::size_t>(counts[1], in.line(), "edge count");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto tok = in.next_tokens("an edge line");
    if (tok.size() != 3) throw ParseError(in.line(), "expected '<end1> <end2> <sign>'");
    Edge e;
    e.end1 = number<VertexId>(tok[0], in.line(), "endpoint");
    e.end2 = number<VertexId>(tok[1], in.line(), "endpoint");
    if (e.end1 >= n || e.end2 >= n) throw ParseError(in.line(), "endpoint out of range");
    if (tok[2] == "+") {
      e.sign = Sign::Positive;
    } else if (tok[2] == "-") {
      e.sign = Sign::Negative;
    } else {
      throw ParseError(in.line(), "bad sign token '" + tok[2] + "'");
    }
    edges.push_back(e);
  }
  if (!in.done()) throw ParseError(in.peek_line(), "more edge lines than declared");
  return SignedGraph(n, std::move(edges));
}

std::string serialize_sgf(const SignedGraph& g) {
  std::ostringstream os;
  os << "sgf 1\n" << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.end1 << ' ' << e.end2 << ' ' << to_string(e.sign) << '\n';
  return os.str();
}

IntegerFlow parse_flw(const std::string& text, const SignedGraph& g) {
  LineReader in(text);
  if (in.next("header") != "flw 1") throw ParseError(in.line(), "expected header 'flw 1'");
  const auto count = in.next_tokens("edge count");
  if (count.size() != 1) throw ParseError(in.line(), "expected '<m>'");
  const auto m = number<std::size_t>(count[0], in.line(), "edge count");
  if (m != g.edge_count()) {
    throw ParseError(in.line(), "flow covers " + std::to_string(m) + " edges, graph has " +
                                    std::to_string(g.edge_count()));
  }
  IntegerFlow out{Orientation(std::vector<Orientation::DirPair>(m)), EdgeValuation(m, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    const auto tok = in.next_tokens("a flow line");
    if (tok.size() != 4) throw ParseError(in.line(), "expected '<edge> <dir1> <dir2> <value>'");
    const auto e = number<EdgeId>(tok[0], in.line(), "edge id");
    if (e != i) throw ParseError(in.line(), "expected edge " + std::to_string(i));
    out.orientation[e] = {parse_dir(tok[1], in.line()), parse_dir(tok[2], in.line())};
    if ((out.orientation[e][0] == out.orientation[e][1]) != g.edge(e).is_negative()) {
      throw ParseError(in.line(), "directions are not consistent with the sign of edge " + std::to_string(e));
    }
    out.values[e] = number<FlowValue>(tok[3], in.line(), "value");
  }
  if (!in.done()) throw ParseError(in.peek_line(), "more flow lines than edges");
  return out;
}

std::string serialize_flw(const IntegerFlow& flow) {
  std::ostringstream os;
  os << "flw 1\n" << flow.values.size() << '\n';
  for (EdgeId e = 0; e < flow.values.size(); ++e) {
    os << e << ' ' << to_string(flow.orientation[e][0]) << ' ' << to_string(flow.orientation[e][1]) << ' '
       << flow.values[e] << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace sixflow
