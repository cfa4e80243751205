#pragma once

#include "unitstate/states.hpp"

#include <map>
#include <string>

namespace unitstate {

// A batch problem: the polytopal set W as a simplicial complex embedded at
// x_{n+1} = 1, named terms, optional named per-simplex affine elements,
// and the names of terms that must be units.
struct ProblemSpec {
  std::string name;
  size_t n = 0;  // cube dimension; ambient is n+1
  PolytopalComplex complex;
  std::map<std::string, Term> terms;
  std::map<std::string, PerSimplexForms> elements;
  std::vector<std::string> units;  // term names checked at load

  const Term& term(const std::string& name) const;
  Element element(const std::string& name) const;  // term or per-simplex data
};

// Parse and validate a problem file. Throws ValidationError with the
// collected diagnostics on any failure.
ProblemSpec load_problem(const std::string& path);
ProblemSpec parse_problem(const std::string& json_text, const std::string& origin = "<memory>");

// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace unitstate
