#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wupto/automata.hpp"
#include "wupto/spath.hpp"

namespace wupto {

enum class ParseCode {
  UnknownSemiring,
  UnexpectedToken,
  MissingSection,
  BadNumber,
  BadScalar,
  OutOfDomain,
  DimensionMismatch,
  UnknownSymbol,
  DuplicateSymbol,
  MissingTransition,
  BadVector,
  BadUnitIndex,
  BadDiagonal,
  TrailingInput,
};

const char* parse_code_name(ParseCode c);

// Parse failure with 1-based source position. Column 0 means end of input
// or a position-free context (bare scalar parsing).
struct ParseError : std::runtime_error {
  ParseError(ParseCode code, std::size_t line, std::size_t col, const std::string& msg);

  ParseCode code;
  std::size_t line;
  std::size_t col;
  std::string detail;  // message without position/code decoration
};

// Scalar syntax: "inf", integers, fractions p/q, or decimals with at most
// six fractional digits (read exactly as p/10^k). Signs only where the
// semiring admits them.
Value parse_scalar(SemiringId s, std::string_view token);
std::string render_scalar(const Value& v);

// Vector literals: comma-separated scalars ("3,inf,0"), a single 1-based
// unit vector ("unit:2"), or a join of unit vectors ("unit:1+unit:4").
Vec parse_vector(SemiringId s, std::size_t dim, std::string_view text);

// Automaton file: sections semiring / states / alphabet / output, then one
// "trans <symbol>" block per symbol with an n x n row-major matrix.
// '#' starts a comment.
WeightedAutomaton parse_automaton(std::istream& in);
WeightedAutomaton parse_automaton_text(std::string_view text);
std::string serialize_automaton(const WeightedAutomaton& a);

// Graph file: "graph", "vertices <n>", then an n x n matrix of tropical
// weights with zero diagonal.
WeightedDigraph parse_graph(std::istream& in);
WeightedDigraph parse_graph_text(std::string_view text);
std::string serialize_graph(const WeightedDigraph& g);

}  // namespace wupto
