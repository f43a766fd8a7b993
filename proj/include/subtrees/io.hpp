#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "subtrees/canonical.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

/// edgelist: "n" on the first line, then n-1 lines "u v".
/// levelseq: one line of depths, first entry 0.
enum class TreeFormat { edgelist, levelseq };

inline TreeFormat parse_format(std::string_view name) {
  if (name == "edgelist") return TreeFormat::edgelist;
  if (name == "levelseq") return TreeFormat::levelseq;
  throw Error(ErrorKind::MalformedInput, "unknown tree format '" + std::string(name) + "'");
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_index(std::string_view token) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw Error(ErrorKind::MalformedInput, "bad token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

inline Tree parse_tree(std::string_view text, TreeFormat format = TreeFormat::edgelist) {
  std::vector<std::vector<std::string_view>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = detail::split_ws(text.substr(start, end - start));
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    start = end + 1;
  }
  if (lines.empty()) throw Error(ErrorKind::MalformedInput, "empty input");

  if (format == TreeFormat::levelseq) {
    if (lines.size() != 1) throw Error(ErrorKind::MalformedInput, "levelseq input must be a single line");
    std::vector<int> seq;
    for (auto token : lines.front()) {
      const std::size_t depth = detail::parse_index(token);
      if (depth > 1'000'000) throw Error(ErrorKind::MalformedInput, "depth too large");
      seq.push_back(static_cast<int>(depth));
    }
    return tree_from_level_sequence(seq);
  }

  if (lines.front().size() != 1) throw Error(ErrorKind::MalformedInput, "first line must hold only n");
  const std::size_t n = detail::parse_index(lines.front().front());
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) {
      throw Error(ErrorKind::MalformedInput, "edge line " + std::to_string(i) + " must hold exactly two labels");
    }
    const std::size_t u = detail::parse_index(lines[i][0]);
    const std::size_t v = detail::parse_index(lines[i][1]);
    if (u >= n || v >= n) {
      throw Error(ErrorKind::LabelOutOfRange, "edge line " + std::to_string(i) + " names a vertex outside 0.." +
                                                  std::to_string(n == 0 ? 0 : n - 1));
    }
    edges.emplace_back(u, v);
  }
  return Tree(n, std::move(edges));
}

/// edgelist output is "n\n" followed by the sorted edge lines joined by "\n"
/// (so K_1 is "1\n"); levelseq output is the canonical form on one line.
inline std::string serialize_tree(const Tree& t, TreeFormat format = TreeFormat::edgelist) {
  if (format == TreeFormat::levelseq) return canonical_form(t).to_string();
  std::string out = std::to_string(t.order()) + "\n";
  bool first = true;
  for (const Edge& e : t.edges()) {
    if (!first) out += '\n';
    first = false;
    out += std::to_string(e.u) + ' ' + std::to_string(e.v);
  }
  return out;
}

}  // namespace subtrees
