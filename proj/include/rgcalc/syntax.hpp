// Concrete syntax: space files, predicates over states and state pairs,
// expressions and commands, with a printer whose output parses back to a
// structurally equal command.
#pragma once

#include <string>

#include "rgcalc/command.hpp"
#include "rgcalc/exprs.hpp"
#include "rgcalc/relspace.hpp"

namespace rgc {

/// Syntax error carrying the byte offset of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Parses lines of the form `var name : {v1, v2, ...}` or `var name : lo..hi`;
/// `#` starts a comment.
Space parse_space(const std::string& text, std::size_t cap = kDefaultStateCap);
std::string print_space(const StateSpace& space);

/// Predicate over unprimed variables, compiled by enumeration.
StateSet parse_set(const std::string& src, const Space& space);
/// Predicate over primed and unprimed variables, compiled by enumeration.
Rel parse_rel(const std::string& src, const Space& space);
/// Expression over unprimed variables (no && or ||).
Expr parse_expr(const std::string& src, const Space& space, BoolEncoding enc = {});
Command parse_command(const std::string& src, const Space& space);

/// Characteristic predicate in disjunctive normal form ("true"/"false" at the extremes).
std::string print_set(const StateSet& p);
std::string print_rel(const Rel& r);
std::string print_expr(const Expr& e);
std::string print_command(const Command& c);

}  // namespace rgc
