#include "mq2_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qinst::oracle {
namespace {

void accumulate(MqElement& out, const std::string& word, const Laurent& c) {
  if (c.is_zero()) return;
  auto& slot = out[word];
  slot += c;
  if (slot.is_zero()) out.erase(word);
}

// one rewrite of the leftmost descent; false when the word is sorted
bool rewrite_once(const std::string& word, const Laurent& c, MqElement& out) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const char x = word[i], y = word[i + 1];
    if (x <= y) continue;
    const std::string head = word.substr(0, i), tail = word.substr(i + 2);
    auto put = [&](const std::string& mid, const Laurent& f) { accumulate(out, head + mid + tail, c * f); };
    if (x == 'd' && y == 'a') {
      put("ad", Laurent(1));
      put("bc", -(q_pow(1) - q_pow(-1)));
    } else if (x == 'c' && y == 'b') {
      put("bc", Laurent(1));
    } else {
      // ba, ca, db, dc
      put(std::string{y, x}, q_pow(-1));
    }
    return true;
  }
  return false;
}

int count(const std::string& w, char ch) { return static_cast<int>(std::count(w.begin(), w.end(), ch)); }

cmod::CElement reduce_sorted(const std::string& word);

cmod::CElement reduce_all(const MqElement& x) {
  cmod::CElement out;
  for (const auto& [w, c] : x) out.add(reduce_sorted(w), c);
  return out;
}

cmod::CElement reduce_sorted(const std::string& word) {
  const int i = count(word, 'a'), m = count(word, 'b'), n = count(word, 'c'), j = count(word, 'd');
  if (i == 0 || j == 0) return cmod::CElement(cmod::CIndex{i > 0 ? i : -j, m, n});
  // word = lead^-1 (D N - rest) with D N == N modulo the right ideal
  const std::string inner = std::string(i - 1, 'a') + std::string(m, 'b') + std::string(n, 'c') + std::string(j - 1, 'd');
  MqElement dn = mq2_normal_order("ad" + inner);
  for (const auto& [w, c] : mq2_normal_order("bc" + inner)) accumulate(dn, w, -q_pow(1) * c);
  auto it = dn.find(word);
  if (it == dn.end() || it->second.size() != 1) throw std::logic_error("oracle: leading coefficient is not a unit");
  const auto [exp, coeff] = it->second.terms().front();
  const Laurent inverse = Laurent::monomial(Scalar(Rational(1) / coeff.to_rational()), -exp);
  dn.erase(it);
  cmod::CElement out = reduce_sorted(inner);
  out -= reduce_all(dn);
  return inverse * out;
}

}  // namespace

MqElement mq2_normal_order(const std::string& word) {
  MqElement pending{{word, Laurent(1)}}, done;
  while (!pending.empty()) {
    MqElement next;
    for (const auto& [w, c] : pending)
      if (!rewrite_once(w, c, next)) accumulate(done, w, c);
    pending = std::move(next);
  }
  return done;
}

cmod::CElement reduce_right_ideal(const std::string& word) { return reduce_all(mq2_normal_order(word)); }

std::string basis_word(const cmod::CIndex& x) {
  const std::string bc = std::string(x.m, 'b') + std::string(x.n, 'c');
  return x.k >= 0 ? std::string(x.k, 'a') + bc : bc + std::string(-x.k, 'd');
}

}  // namespace qinst::oracle
