#include "unitstate/term.hpp"

#include <algorithm>
#include <cctype>

namespace unitstate {

Term Term::variable(int i) {
  Term t;
  t.kind = TermKind::Var;
  t.var = i;
  return t;
}

Term Term::one() {
  Term t;
  t.kind = TermKind::One;
  return t;
}

Term Term::scaled(Int k, Term inner) {
  Term t;
  t.kind = TermKind::Scale;
  t.scale = std::move(k);
  t.args.push_back(std::move(inner));
  return t;
}

Term Term::binary(TermKind k, Term a, Term b) {
  Term t;
  t.kind = k;
  t.args.push_back(std::move(a));
  t.args.push_back(std::move(b));
  return t;
}

bool Term::operator==(const Term& o) const {
  return kind == o.kind && var == o.var && scale == o.scale && args == o.args;
}

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  struct Token {
    enum Kind { Var, Num, Plus, Minus, Monus, Join, Meet, Star, LParen, RParen, End } kind;
    Int num;
    int var = 0;
    size_t at = 0;
  };

  explicit Lexer(const std::string& t) : text(t) { next(); }

  Token tok;

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw ValidationError("term syntax error at position " + std::to_string(at + 1) + ": " + msg);
  }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok.at = pos;
    if (pos >= text.size()) {
      tok.kind = Token::End;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '+': tok.kind = Token::Plus; ++pos; return;
      case '*': tok.kind = Token::Star; ++pos; return;
      case '(': tok.kind = Token::LParen; ++pos; return;
      case ')': tok.kind = Token::RParen; ++pos; return;
      case '-':
        ++pos;
        if (pos < text.size() && text[pos] == '.') {
          ++pos;
          tok.kind = Token::Monus;
        } else {
          tok.kind = Token::Minus;
        }
        return;
      case '\\':
        ++pos;
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          tok.kind = Token::Join;
          return;
        }
        fail("expected \"\\/\"", tok.at);
      case '/':
        ++pos;
        if (pos < text.size() && text[pos] == '\\') {
          ++pos;
          tok.kind = Token::Meet;
          return;
        }
        fail("expected \"/\\\"", tok.at);
      default: break;
    }
    if (c == 'x') {
      size_t start = ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("variable name needs an index, e.g. x1", tok.at);
      tok.kind = Token::Var;
      tok.var = std::stoi(text.substr(start, pos - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      tok.kind = Token::Num;
      tok.num = Int(text.substr(start, pos - start));
      return;
    }
    fail(std::string("unexpected character '") + c + "'", tok.at);
  }
};

struct Parser {
  Lexer lex;
  int max_var;

  Parser(const std::string& text, int mv) : lex(text), max_var(mv) {}

  Term parse() {
    Term t = lattice();
    if (lex.tok.kind != Lexer::Token::End) lex.fail("trailing input", lex.tok.at);
    return t;
  }

  Term lattice() {
    Term t = additive();
    while (lex.tok.kind == Lexer::Token::Join || lex.tok.kind == Lexer::Token::Meet) {
      TermKind k = lex.tok.kind == Lexer::Token::Join ? TermKind::Join : TermKind::Meet;
      lex.next();
      t = Term::binary(k, std::move(t), additive());
    }
    return t;
  }

  Term additive() {
    Term t = factor();
    while (lex.tok.kind == Lexer::Token::Plus || lex.tok.kind == Lexer::Token::Minus ||
           lex.tok.kind == Lexer::Token::Monus) {
      TermKind k = lex.tok.kind == Lexer::Token::Plus    ? TermKind::Add
                   : lex.tok.kind == Lexer::Token::Minus ? TermKind::Sub
                                                         : TermKind::Monus;
      lex.next();
      t = Term::binary(k, std::move(t), factor());
    }
    return t;
  }

  Term factor() {
    size_t at = lex.tok.at;
    switch (lex.tok.kind) {
      case Lexer::Token::Num: {
        Int k = lex.tok.num;
        lex.next();
        if (lex.tok.kind == Lexer::Token::Star) {
          lex.next();
          return Term::scaled(std::move(k), factor());
        }
        if (k != 1) lex.fail("integer constant " + k.str() + " must be written " + k.str() + "*1", at);
        return Term::one();
      }
      case Lexer::Token::Var: {
        int i = lex.tok.var;
        if (i < 1 || i > max_var)
          lex.fail("variable x" + std::to_string(i) + " exceeds ambient dimension " + std::to_string(max_var), at);
        lex.next();
        return Term::variable(i);
      }
      case Lexer::Token::LParen: {
        lex.next();
        Term t = lattice();
        if (lex.tok.kind != Lexer::Token::RParen) lex.fail("expected ')'", lex.tok.at);
        lex.next();
        return t;
      }
      default:
        lex.fail("expected an atom, scalar or '('", at);
    }
  }
};

}  // namespace

Term parse_term(const std::string& text, int max_var) { return Parser(text, max_var).parse(); }

std::string print_term(const Term& t) {
  switch (t.kind) {
    case TermKind::Var: return "x" + std::to_string(t.var);
    case TermKind::One: return "1";
    case TermKind::Scale: return "(" + t.scale.str() + "*" + print_term(t.args[0]) + ")";
    case TermKind::Add: return "(" + print_term(t.args[0]) + " + " + print_term(t.args[1]) + ")";
    case TermKind::Sub: return "(" + print_term(t.args[0]) + " - " + print_term(t.args[1]) + ")";
    case TermKind::Monus: return "(" + print_term(t.args[0]) + " -. " + print_term(t.args[1]) + ")";
    case TermKind::Join: return "(" + print_term(t.args[0]) + " \\/ " + print_term(t.args[1]) + ")";
    case TermKind::Meet: return "(" + print_term(t.args[0]) + " /\\ " + print_term(t.args[1]) + ")";
  }
  throw std::logic_error("print_term: bad kind");
}

namespace {

Term homogenize_rec(const Term& t, int nvar) {
  switch (t.kind) {
    case TermKind::One: return Term::variable(nvar);
    case TermKind::Var: return t;
    case TermKind::Scale: return Term::scaled(t.scale, homogenize_rec(t.args[0], nvar));
    default: {
      Term out;
      out.kind = t.kind;
      out.args.push_back(homogenize_rec(t.args[0], nvar));
      out.args.push_back(homogenize_rec(t.args[1], nvar));
      return out;
    }
  }
}

template <typename Scalar>
Scalar eval_rec(const Term& t, const std::vector<Scalar>& v) {
  switch (t.kind) {
    case TermKind::Var: return v[static_cast<size_t>(t.var) - 1];
    case TermKind::One: throw std::logic_error("eval: unhomogenized constant");
    case TermKind::Scale: return Scalar(t.scale) * eval_rec(t.args[0], v);
    case TermKind::Add: return eval_rec(t.args[0], v) + eval_rec(t.args[1], v);
    case TermKind::Sub: return eval_rec(t.args[0], v) - eval_rec(t.args[1], v);
    case TermKind::Monus: {
      Scalar d = eval_rec(t.args[0], v) - eval_rec(t.args[1], v);
      return d > 0 ? d : Scalar(0);
    }
    case TermKind::Join: return std::max(eval_rec(t.args[0], v), eval_rec(t.args[1], v));
    case TermKind::Meet: return std::min(eval_rec(t.args[0], v), eval_rec(t.args[1], v));
  }
  throw std::logic_error("eval: bad kind");
}

void dedupe_forms(std::vector<IntVec>& forms) {
  std::sort(forms.begin(), forms.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

IntVec form_sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<IntVec> pieces_rec(const Term& t, size_t m) {
  switch (t.kind) {
    case TermKind::Var: {
      IntVec e(m, Int(0));
      e[static_cast<size_t>(t.var) - 1] = 1;
      return {e};
    }
    case TermKind::One: throw std::logic_error("candidate_pieces: unhomogenized constant");
    case TermKind::Scale: {
      std::vector<IntVec> out;
      for (IntVec p : pieces_rec(t.args[0], m)) {
        for (Int& x : p) x *= t.scale;
        out.push_back(std::move(p));
      }
      dedupe_forms(out);
      return out;
    }
    case TermKind::Add:
    case TermKind::Sub: {
      std::vector<IntVec> a = pieces_rec(t.args[0], m);
      std::vector<IntVec> b = pieces_rec(t.args[1], m);
      std::vector<IntVec> out;
      for (const IntVec& p : a)
        for (const IntVec& q : b) {
          IntVec r(m);
          for (size_t i = 0; i < m; ++i) r[i] = t.kind == TermKind::Add ? Int(p[i] + q[i]) : Int(p[i] - q[i]);
          out.push_back(std::move(r));
        }
      dedupe_forms(out);
      return out;
    }
    case TermKind::Monus: {
      std::vector<IntVec> a = pieces_rec(t.args[0], m);
      std::vector<IntVec> b = pieces_rec(t.args[1], m);
      std::vector<IntVec> out;
      for (const IntVec& p : a)
        for (const IntVec& q : b) out.push_back(form_sub(p, q));
      out.push_back(IntVec(m, Int(0)));
      dedupe_forms(out);
      return out;
    }
    case TermKind::Join:
    case TermKind::Meet: {
      std::vector<IntVec> out = pieces_rec(t.args[0], m);
      std::vector<IntVec> b = pieces_rec(t.args[1], m);
      out.insert(out.end(), b.begin(), b.end());
      dedupe_forms(out);
      return out;
    }
  }
  throw std::logic_error("candidate_pieces: bad kind");
}

void hyperplanes_rec(const Term& t, size_t m, std::vector<IntVec>& out) {
  switch (t.kind) {
    case TermKind::Var:
    case TermKind::One:
      return;
    case TermKind::Scale:
      hyperplanes_rec(t.args[0], m, out);
      return;
    case TermKind::Add:
    case TermKind::Sub:
      hyperplanes_rec(t.args[0], m, out);
      hyperplanes_rec(t.args[1], m, out);
      return;
    case TermKind::Monus:
    case TermKind::Join:
    case TermKind::Meet: {
      hyperplanes_rec(t.args[0], m, out);
      hyperplanes_rec(t.args[1], m, out);
      // The comparison changes branch exactly where a piece of one side
      // meets a piece of the other.
      for (const IntVec& p : pieces_rec(t.args[0], m))
        for (const IntVec& q : pieces_rec(t.args[1], m)) {
          IntVec d = canonical_form(form_sub(p, q));
          if (!is_zero(d)) out.push_back(std::move(d));
        }
      return;
    }
  }
}

// Sign of a linear form on a cell known to lie in one closed halfspace.
int sign_on(const Simplex& s, const IntVec& f) {
  bool pos = false, neg = false;
  for (const RatVec& v : s.vertices()) {
    Rat x = dot(f, v);
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos && neg)
    throw ValidationError("resolve_form: term is not affine on the cell; refine the complex first");
  return pos ? 1 : (neg ? -1 : 0);
}

IntVec resolve_rec(const Term& t, const Simplex& s, size_t m) {
  switch (t.kind) {
    case TermKind::Var: {
      IntVec e(m, Int(0));
      e[static_cast<size_t>(t.var) - 1] = 1;
      return e;
    }
    case TermKind::One: throw std::logic_error("resolve_form: unhomogenized constant");
    case TermKind::Scale: {
      IntVec f = resolve_rec(t.args[0], s, m);
      for (Int& x : f) x *= t.scale;
      return f;
    }
    case TermKind::Add:
    case TermKind::Sub: {
      IntVec a = resolve_rec(t.args[0], s, m);
      IntVec b = resolve_rec(t.args[1], s, m);
      for (size_t i = 0; i < m; ++i) a[i] = t.kind == TermKind::Add ? Int(a[i] + b[i]) : Int(a[i] - b[i]);
      return a;
    }
    case TermKind::Monus: {
      IntVec d = form_sub(resolve_rec(t.args[0], s, m), resolve_rec(t.args[1], s, m));
      return sign_on(s, d) >= 0 ? d : IntVec(m, Int(0));
    }
    case TermKind::Join:
    case TermKind::Meet: {
      IntVec a = resolve_rec(t.args[0], s, m);
      IntVec b = resolve_rec(t.args[1], s, m);
      int sg = sign_on(s, form_sub(a, b));
      if (t.kind == TermKind::Join) return sg >= 0 ? a : b;
      return sg >= 0 ? b : a;
    }
  }
  throw std::logic_error("resolve_form: bad kind");
}

}  // namespace

HomTerm homogenize(const Term& t, size_t n) {
  return HomTerm{homogenize_rec(t, static_cast<int>(n) + 1), n + 1};
}

Rat eval(const HomTerm& t, const RatVec& v) {
  if (v.size() != t.ambient) throw ValidationError("eval: point dimension mismatch");
  return eval_rec<Rat>(t.body, v);
}

Int eval(const HomTerm& t, const IntVec& v) {
  if (v.size() != t.ambient) throw ValidationError("eval: point dimension mismatch");
  return eval_rec<Int>(t.body, v);
}

std::vector<IntVec> candidate_pieces(const HomTerm& t) { return pieces_rec(t.body, t.ambient); }

std::vector<IntVec> comparison_hyperplanes(const HomTerm& t) {
  std::vector<IntVec> out;
  hyperplanes_rec(t.body, t.ambient, out);
  dedupe_forms(out);
  return out;
}

IntVec resolve_form(const HomTerm& t, const Simplex& s) {
  if (s.ambient() != t.ambient) throw ValidationError("resolve_form: ambient mismatch");
  return resolve_rec(t.body, s, t.ambient);
}

Affinization affinize(const HomTerm& t, const PolytopalComplex& c) {
  Affinization out;
  out.complex = refine_by_hyperplanes(c, comparison_hyperplanes(t));
  out.forms.reserve(out.complex.size());
  for (const Simplex& s : out.complex.cells()) out.forms.push_back(resolve_form(t, s));
  return out;
}

bool check_unit(const Term& t, const PolytopalComplex& c) {
  HomTerm h = homogenize(t, c.ambient() - 1);
  PolytopalComplex refined = refine_by_hyperplanes(c, comparison_hyperplanes(h));
  for (const Simplex& s : refined.cells())
    for (const RatVec& v : s.vertices())
      if (eval(h, v) <= 0) return false;
  return true;
}

Affinization require_unit(const Term& t, const PolytopalComplex& c) {
  HomTerm h = homogenize(t, c.ambient() - 1);
  Affinization a = affinize(h, c);
  for (const Simplex& s : a.complex.cells()) {
    for (const RatVec& v : s.vertices()) {
      Rat x = eval(h, v);
      if (x <= 0)
        throw ValidationError("not a unit on W: value " + rat_str(x) + " at vertex (" + vec_str(v) + ")");
    }
  }
  return a;
}

}  // namespace unitstate
