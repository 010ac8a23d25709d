#pragma once

// Text formats.
//
// .sgf (signed graph):
//   sgf 1
//   <n> <m>
//   <end1> <end2> <+|->        m lines, edge id = line order
//
// .flw (flow on a companion .sgf):
//   flw 1
//   <m>
//   <edge> <a|t> <a|t> <value>  m lines, one per edge, in edge order
//
// ASCII, LF line endings, single spaces. Lines starting with '#' are
// comments and are skipped by the parsers.

#include <stdexcept>
#include <string>

#include "sixflow/analysis.hpp"
#include "sixflow/graph.hpp"

namespace sixflow {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

SignedGraph parse_sgf(const std::string& text);
std::string serialize_sgf(const SignedGraph& g);

/// The direction pairs must be sign-consistent with g.
IntegerFlow parse_flw(const std::string& text, const SignedGraph& g);
std::string serialize_flw(const IntegerFlow& flow);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace sixflow
