#pragma once

#include "unitstate/refine.hpp"

namespace unitstate {

// AST for terms in the l-group / hoop language over x1..xn and the
// constant 1. Values are immutable.
enum class TermKind { Var, One, Scale, Add, Sub, Monus, Join, Meet };

struct Term {
  TermKind kind = TermKind::One;
  int var = 0;   // Var: 1-based index; after homogenization may be n+1
  Int scale = 0; // Scale
  std::vector<Term> args;

  static Term variable(int i);
  static Term one();
  static Term scaled(Int k, Term t);
  static Term binary(TermKind k, Term a, Term b);

  bool operator==(const Term& o) const;
};

// Concrete syntax:
//   atoms        x1..xN, 1
//   scalar       k*T           (k a nonnegative integer literal)
//   additive     +  -  -.      (-. is the monus / truncated difference)
//   lattice      \/  /\        (bind looser than + and -)
//   parentheses
// max_var bounds the admissible variable index.
Term parse_term(const std::string& text, int max_var);

// Canonical fully parenthesized printer; parse_term(print_term(t)) == t.
std::string print_term(const Term& t);

// A term over R^{n+1} in which the constant has been replaced by the
// (n+1)-th projection; positively homogeneous of degree 1.
struct HomTerm {
  Term body;
  size_t ambient = 0;  // n+1
};

HomTerm homogenize(const Term& t, size_t n);

Rat eval(const HomTerm& t, const RatVec& v);
// Fast path for integer points; homogeneous terms are integer-valued there.
Int eval(const HomTerm& t, const IntVec& v);

// A finite set P of integer linear forms such that at every point the term
// evaluates to f(p) for some f in P.
std::vector<IntVec> candidate_pieces(const HomTerm& t);

// The difference hyperplanes of candidate-piece pairs that meet in a
// comparison node (join, meet, monus); refining by these makes the term
// affine on every cell.
std::vector<IntVec> comparison_hyperplanes(const HomTerm& t);

// The single linear form the term agrees with on a cell that is already
// refined by comparison_hyperplanes(t); throws otherwise.
IntVec resolve_form(const HomTerm& t, const Simplex& s);

struct Affinization {
  PolytopalComplex complex;
  std::vector<IntVec> forms;  // one per cell
};

// Refine the complex so the term is affine per cell and record which
// linear form it equals on each.
Affinization affinize(const HomTerm& t, const PolytopalComplex& c);

// True iff the homogeneous correspondent of t is strictly positive on the
// underlying set (checked at the vertices of the refined complex, where
// the per-cell affine pieces attain their minima).
bool check_unit(const Term& t, const PolytopalComplex& c);

// Like check_unit but returns the affinization and throws a
// ValidationError naming the offending vertex when t is not a unit.
Affinization require_unit(const Term& t, const PolytopalComplex& c);

}  // namespace unitstate
