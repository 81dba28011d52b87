#include "graphdecomp/io.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphdecomp::io {

namespace {

struct GraphAccumulator {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::pair<VertexId, VertexId>> links;

  VertexId intern(const std::string& label) {
    auto [it, fresh] = index.try_emplace(label, labels.size());
    if (fresh) labels.push_back(label);
    return it->second;
  }
};

GraphAccumulator parse_edge_list_lines(std::string_view text, bool directed) {
  GraphAccumulator acc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }

    if (tokens.size() == 1) {
      acc.intern(tokens[0]);
    } else if (tokens.size() == 2) {
      VertexId u = acc.intern(tokens[0]);
      VertexId v = acc.intern(tokens[1]);
      if (!directed && u == v)
        throw ParseError(line_no, 1,
                         "loop at '" + tokens[0] +
                             "' is not allowed in an undirected graph");
      acc.links.emplace_back(u, v);
    } else if (tokens.size() > 2) {
      throw ParseError(line_no, 1,
                       "expected `u v` or a bare vertex label, got " +
                           std::to_string(tokens.size()) + " tokens");
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return acc;
}

}  // namespace

Digraph parse_edge_list_digraph(std::string_view text) {
  GraphAccumulator acc = parse_edge_list_lines(text, true);
  std::size_t p = acc.labels.size();
  return Digraph(p, acc.links, std::move(acc.labels));
}

UndirectedGraph parse_edge_list_undirected(std::string_view text) {
  GraphAccumulator acc = parse_edge_list_lines(text, false);
  std::size_t p = acc.labels.size();
  return UndirectedGraph(p, acc.links, std::move(acc.labels));
}

namespace {

void check_emittable(const std::string& label) {
  if (label.empty()) throw DomainError("cannot emit an empty vertex label");
  for (char c : label)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      throw DomainError("cannot emit vertex label '" + label +
                        "' in edge-list form");
}

template <class Graph>
std::string emit_edge_list(const Graph& g,
                           const std::vector<std::pair<VertexId, VertexId>>& links) {
  for (const std::string& label : g.labels()) check_emittable(label);
  VertexSet touched(g.vertex_count());
  std::string out;
  for (auto [u, v] : links) {
    touched.set(u);
    touched.set(v);
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!touched.test(v)) {
      out += g.label(v);
      out += '\n';
    }
  return out;
}

}  // namespace

std::string to_edge_list(const Digraph& g) {
  return emit_edge_list(g, g.arcs());
}

std::string to_edge_list(const UndirectedGraph& g) {
  return emit_edge_list(g, g.edges());
}

namespace {

struct DotToken {
  enum class Kind { identifier, arrow_directed, arrow_undirected, lbrace,
                    rbrace, semicolon, end };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class DotLexer {
public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  DotToken next() {
    skip_space_and_attributes();
    if (pos_ >= text_.size()) return make(DotToken::Kind::end, "");
    char c = text_[pos_];
    if (c == '{') return single(DotToken::Kind::lbrace);
    if (c == '}') return single(DotToken::Kind::rbrace);
    if (c == ';') return single(DotToken::Kind::semicolon);
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        DotToken t = make(DotToken::Kind::arrow_directed, "->");
        advance(2);
        return t;
      }
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        DotToken t = make(DotToken::Kind::arrow_undirected, "--");
        advance(2);
        return t;
      }
      throw ParseError(line_, column_, "stray '-'");
    }
    if (c == '"') {
      std::size_t start_line = line_, start_col = column_;
      advance(1);
      std::string word;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        word += text_[pos_];
        advance(1);
      }
      if (pos_ >= text_.size())
        throw ParseError(start_line, start_col, "unterminated quoted label");
      advance(1);
      return {DotToken::Kind::identifier, word, start_line, start_col};
    }
    if (is_word_char(c)) {
      std::size_t start_line = line_, start_col = column_;
      std::string word;
      while (pos_ < text_.size() && is_word_char(text_[pos_])) {
        word += text_[pos_];
        advance(1);
      }
      return {DotToken::Kind::identifier, word, start_line, start_col};
    }
    throw ParseError(line_, column_,
                     std::string("unexpected character '") + c + "'");
  }

private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  DotToken make(DotToken::Kind kind, std::string text) const {
    return {kind, std::move(text), line_, column_};
  }

  DotToken single(DotToken::Kind kind) {
    DotToken t = make(kind, std::string(1, text_[pos_]));
    advance(1);
    return t;
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space_and_attributes() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '[') {
        std::size_t start_line = line_, start_col = column_;
        while (pos_ < text_.size() && text_[pos_] != ']') advance(1);
        if (pos_ >= text_.size())
          throw ParseError(start_line, start_col, "unterminated attribute block");
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

std::variant<Digraph, UndirectedGraph> parse_dot(std::string_view text) {
  DotLexer lexer(text);
  DotToken t = lexer.next();
  if (t.kind != DotToken::Kind::identifier ||
      (t.text != "digraph" && t.text != "graph"))
    throw ParseError(t.line, t.column, "expected 'digraph' or 'graph'");
  const bool directed = t.text == "digraph";

  t = lexer.next();
  if (t.kind == DotToken::Kind::identifier) t = lexer.next();  // graph name
  if (t.kind != DotToken::Kind::lbrace)
    throw ParseError(t.line, t.column, "expected '{'");

  GraphAccumulator acc;
  while (true) {
    t = lexer.next();
    if (t.kind == DotToken::Kind::rbrace) break;
    if (t.kind == DotToken::Kind::semicolon) continue;
    if (t.kind == DotToken::Kind::end)
      throw ParseError(t.line, t.column, "missing '}'");
    if (t.kind != DotToken::Kind::identifier)
      throw ParseError(t.line, t.column, "expected a vertex name");

    VertexId u = acc.intern(t.text);
    DotToken sep = lexer.next();
    if (sep.kind == DotToken::Kind::semicolon ||
        sep.kind == DotToken::Kind::rbrace) {
      if (sep.kind == DotToken::Kind::rbrace) break;
      continue;  // bare node statement
    }
    if (sep.kind == DotToken::Kind::arrow_directed && !directed)
      throw ParseError(sep.line, sep.column,
                       "directed edge '->' in an undirected graph");
    if (sep.kind == DotToken::Kind::arrow_undirected && directed)
      throw ParseError(sep.line, sep.column,
                       "undirected edge '--' in a directed graph");
    if (sep.kind != DotToken::Kind::arrow_directed &&
        sep.kind != DotToken::Kind::arrow_undirected)
      throw ParseError(sep.line, sep.column, "expected '->', '--', or ';'");

    DotToken target = lexer.next();
    if (target.kind != DotToken::Kind::identifier)
      throw ParseError(target.line, target.column, "expected a vertex name");
    VertexId v = acc.intern(target.text);
    if (!directed && u == v)
      throw ParseError(target.line, target.column,
                       "loop at '" + target.text +
                           "' is not allowed in an undirected graph");
    acc.links.emplace_back(u, v);
  }

  t = lexer.next();
  if (t.kind != DotToken::Kind::end)
    throw ParseError(t.line, t.column, "trailing content after '}'");

  std::size_t p = acc.labels.size();
  if (directed) return Digraph(p, acc.links, std::move(acc.labels));
  return UndirectedGraph(p, acc.links, std::move(acc.labels));
}

}  // namespace graphdecomp::io
