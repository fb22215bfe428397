#pragma once

// Expression language for elements of P = A(S^7_q), A(SU_q(2)) and C.
//
//   expression := ['-'] term (('+' | '-') term)*
//   term       := coeff | [coeff '*'] factor+
//   factor     := token ['^' integer]
//   coeff      := atom ('*' atom)*
//   atom       := ['-'] rational | 'q' ['^' integer] | '(' coeff (('+' | '-') coeff)* ')'
//
// Tokens by context:
//   P    z1..z4, z1*..z4*, A, A*, B, B*, RR, An(n), An(n)*, Bn(n), Bn(n)*
//   SU2  a, b, c, d
//   C    r[k,m,n]   (one per term, no exponent)
// A '*' written directly after a generator name is its conjugate; a '*'
// after a coefficient is multiplication. Whitespace is insignificant apart
// from separating factors. Every canonical rendering parses back to itself.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qinst/cmod.hpp"
#include "qinst/coeff.hpp"
#include "qinst/s7.hpp"
#include "qinst/suq2.hpp"

namespace qinst::parse {

enum class Context { P, SU2, C };

std::string to_string(Context c);
/// `P`, `SU2`, `C` (case-insensitive); throws std::invalid_argument.
Context parse_context(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Factor {
  enum class Kind { Generator, Su2Letter, Basis, Named };
  Kind kind = Kind::Generator;
  std::string name;  // as written, e.g. `z3*`, `An`, `RR`, `b`
  s7::Gen gen = s7::Gen::Z1;
  su2::Letter letter = su2::Letter::A;
  cmod::CIndex index;
  int argument = 0;  // An(n) / Bn(n)
  bool starred = false;
  int exponent = 1;
  int line = 1;
  int column = 1;
};

struct Term {
  Laurent coeff = Laurent(1);
  std::vector<Factor> factors;
  int line = 1;
  int column = 1;
};

struct ExprAst {
  Context context = Context::P;
  std::vector<Term> terms;
};

/// Throws ParseError on unknown tokens, negative generator exponents,
/// tokens from another context and malformed syntax.
ExprAst parse(std::string_view source, Context context);

s7::Element elaborate_p(const ExprAst& ast);
su2::Element elaborate_su2(const ExprAst& ast);
cmod::CElement elaborate_c(const ExprAst& ast);

inline s7::Element parse_p(std::string_view source) { return elaborate_p(parse(source, Context::P)); }
inline su2::Element parse_su2(std::string_view source) { return elaborate_su2(parse(source, Context::SU2)); }
inline cmod::CElement parse_c(std::string_view source) { return elaborate_c(parse(source, Context::C)); }

}  // namespace qinst::parse
