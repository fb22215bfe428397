#include "qinst/format.hpp"

namespace qinst {

void TermWriter::add(const Laurent& c, const std::string& basis) {
  if (c.is_zero()) return;
  const bool unit_basis = basis == "1";
  std::string body;
  bool negative = false;
  if (c.size() == 1) {
    const auto& [e, r] = c.terms()[0];
    negative = r.sign() < 0;
    const Scalar mag = negative ? -r : r;
    std::string scale;
    if (!mag.is_one()) scale = mag.to_string();
    if (e != 0) scale += (scale.empty() ? "" : "*") + std::string("q^") + std::to_string(e);
    if (unit_basis) {
      body = scale.empty() ? "1" : scale;
    } else {
      body = scale.empty() ? basis : scale + "*" + basis;
    }
  } else {
    body = "(" + c.to_string() + ")";
    if (!unit_basis) body += "*" + basis;
  }
  if (out_.empty()) {
    out_ = negative ? "-" + body : body;
  } else {
    out_ += negative ? " - " : " + ";
    out_ += body;
  }
}

}  // namespace qinst
