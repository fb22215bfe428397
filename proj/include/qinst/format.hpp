#pragma once

// Shared rendering of linear combinations: `q^-1*z1 z2 - 2*z3`,
// multi-term coefficients parenthesised as `(1 + -1*q^2)*z1 z1*`.

#include <string>

#include "qinst/coeff.hpp"

namespace qinst {

class TermWriter {
 public:
  /// `basis` is the rendered basis element; pass "1" for the unit.
  void add(const Laurent& c, const std::string& basis);
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

template <typename Range, typename Render>
std::string render_terms(const Range& terms, Render render) {
  TermWriter w;
  for (const auto& [key, c] : terms) w.add(c, render(key));
  return w.str();
}

}  // namespace qinst
