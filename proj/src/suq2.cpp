#include "qinst/suq2.hpp"

#include <array>
#include <map>
#include <tuple>

#include "qinst/format.hpp"

namespace qinst::su2 {
namespace {

using Exps = std::array<int, 4>;  // exponents of a, b, c, d

Exps exps_of(const Monomial& mono) {
  return {mono.k > 0 ? mono.k : 0, mono.m, mono.n, mono.k < 0 ? -mono.k : 0};
}

Monomial mono_of(const Exps& e) { return Monomial{e[0] - e[3], e[1], e[2]}; }

struct Rule {
  Laurent coeff;
  Word word;
};

// Rewrites of an out-of-order adjacent pair (hi, lo) with lo < hi.
std::vector<Rule> swap_rule(Letter hi, Letter lo) {
  using L = Letter;
  if (hi == L::D && lo == L::A) return {{Laurent(1), {}}, {q_pow(-1), {L::B, L::C}}};
  if (hi == L::C && lo == L::B) return {{Laurent(1), {L::B, L::C}}};
  return {{q_pow(-1), {lo, hi}}};  // ba, ca, db, dc
}

Element fold(const Monomial& start, const Word& word) {
  Element acc(start);
  for (Letter g : word) {
    Element next;
    for (const auto& [mono, c] : acc) next.add(nf(mono, g), c);
    acc = std::move(next);
  }
  return acc;
}

Element append_uncached(const Monomial& mono, Letter g) {
  Exps e = exps_of(mono);
  int last = -1;
  for (int i = 3; i >= 0; --i)
    if (e[i] > 0) {
      last = i;
      break;
    }
  const int gi = static_cast<int>(g);
  if (gi >= last) {
    if (g == Letter::D && e[0] > 0) {
      // b^m c^n d = q^{m+n} d b^m c^n and a d = 1 + q bc.
      Element out;
      Laurent scale = q_pow(e[1] + e[2]);
      out.add(Monomial{e[0] - 1, e[1], e[2]}, scale);
      out.add(Monomial{e[0] - 1, e[1] + 1, e[2] + 1}, scale * q_pow(1));
      return out;
    }
    ++e[gi];
    return Element(mono_of(e));
  }
  Exps rest = e;
  --rest[last];
  Element out;
  for (const auto& rule : swap_rule(static_cast<Letter>(last), g)) {
    Word w = rule.word;
    out.add(fold(mono_of(rest), w), rule.coeff);
  }
  return out;
}

struct Counted {
  Laurent coeff;
  Word word;
};

// Finds the redex selected by `strategy`; returns false for a normal word.
bool rewrite_once(const Word& w, Strategy strategy, std::vector<Counted>& out) {
  const int len = static_cast<int>(w.size());
  auto redex_at = [&](int i) -> bool {
    if (i + 1 < len && w[i + 1] < w[i]) return true;
    if (w[i] == Letter::A) {
      int j = i + 1;
      while (j < len && (w[j] == Letter::B || w[j] == Letter::C)) ++j;
      if (j < len && w[j] == Letter::D) return true;
    }
    return false;
  };
  int pos = -1;
  if (strategy == Strategy::LeftmostInnermost) {
    for (int i = 0; i < len && pos < 0; ++i)
      if (redex_at(i)) pos = i;
  } else {
    for (int i = len - 1; i >= 0 && pos < 0; --i)
      if (redex_at(i)) pos = i;
  }
  if (pos < 0) return false;

  Word prefix(w.begin(), w.begin() + pos);
  if (pos + 1 < len && w[pos + 1] < w[pos]) {
    Word suffix(w.begin() + pos + 2, w.end());
    for (auto& rule : swap_rule(w[pos], w[pos + 1])) {
      Word nw = prefix;
      nw.insert(nw.end(), rule.word.begin(), rule.word.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      out.push_back({rule.coeff, std::move(nw)});
    }
    return true;
  }
  // a w d -> q^{|w|} (1 + q bc) w with w in {b, c}*
  int j = pos + 1;
  while (w[j] != Letter::D) ++j;
  Word middle(w.begin() + pos + 1, w.begin() + j);
  Word suffix(w.begin() + j + 1, w.end());
  Laurent scale = q_pow(static_cast<int>(middle.size()));
  Word plain = prefix;
  plain.insert(plain.end(), middle.begin(), middle.end());
  plain.insert(plain.end(), suffix.begin(), suffix.end());
  Word with_bc = prefix;
  with_bc.push_back(Letter::B);
  with_bc.push_back(Letter::C);
  with_bc.insert(with_bc.end(), middle.begin(), middle.end());
  with_bc.insert(with_bc.end(), suffix.begin(), suffix.end());
  out.push_back({scale, std::move(plain)});
  out.push_back({scale * q_pow(1), std::move(with_bc)});
  return true;
}

Monomial normal_word_to_monomial(const Word& w) {
  Exps e{0, 0, 0, 0};
  for (Letter g : w) ++e[static_cast<int>(g)];
  return mono_of(e);
}

}  // namespace

char letter_char(Letter g) { return "abcd"[static_cast<int>(g)]; }

Word to_word(const Monomial& mono) {
  Exps e = exps_of(mono);
  Word w;
  for (int i = 0; i < 4; ++i) w.insert(w.end(), e[i], static_cast<Letter>(i));
  return w;
}

const Element& nf(const Monomial& mono, Letter g) {
  thread_local std::map<std::pair<Monomial, Letter>, Element> cache;
  auto key = std::make_pair(mono, g);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Element out = append_uncached(mono, g);
  return cache.emplace(key, std::move(out)).first->second;
}

Element nf(const Word& word) { return fold(Monomial{}, word); }

Element mul(const Monomial& x, const Monomial& y) { return fold(x, to_word(y)); }

Element mul(const Element& x, const Element& y) {
  Element out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) out.add(mul(mx, my), cx * cy);
  return out;
}

Element reduce_word(const Word& word, Strategy strategy) {
  std::map<Word, Laurent> pending;
  pending[word] = Laurent(1);
  Element result;
  std::vector<Counted> produced;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Laurent& c = node.mapped();
    produced.clear();
    if (!rewrite_once(w, strategy, produced)) {
      result.add(normal_word_to_monomial(w), c);
      continue;
    }
    for (auto& [rc, rw] : produced) {
      Laurent add = rc * c;
      auto [it, inserted] = pending.try_emplace(std::move(rw), add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

namespace {

Tensor generator_coproduct(Letter g) {
  const Monomial a{1, 0, 0}, b{0, 1, 0}, c{0, 0, 1}, d{-1, 0, 0};
  Tensor t;
  switch (g) {
    case Letter::A:
      t.add({a, a}, 1);
      t.add({b, c}, 1);
      break;
    case Letter::B:
      t.add({a, b}, 1);
      t.add({b, d}, 1);
      break;
    case Letter::C:
      t.add({c, a}, 1);
      t.add({d, c}, 1);
      break;
    case Letter::D:
      t.add({c, b}, 1);
      t.add({d, d}, 1);
      break;
  }
  return t;
}

Tensor tensor_mul(const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      Element l = mul(kx.left, ky.left);
      Element r = mul(kx.right, ky.right);
      Laurent s = cx * cy;
      for (const auto& [ml, cl] : l)
        for (const auto& [mr, cr] : r) out.add({ml, mr}, s * cl * cr);
    }
  return out;
}

}  // namespace

const Tensor& coproduct(const Monomial& mono) {
  thread_local std::map<Monomial, Tensor> cache;
  if (auto it = cache.find(mono); it != cache.end()) return it->second;
  Word w = to_word(mono);
  Tensor out;
  if (w.empty()) {
    out.add({Monomial{}, Monomial{}}, 1);
  } else {
    Letter last = w.back();
    w.pop_back();
    Element prefix = nf(w);  // a single monomial: w is an ordered prefix
    out = tensor_mul(coproduct(prefix.begin()->first), generator_coproduct(last));
  }
  return cache.emplace(mono, std::move(out)).first->second;
}

Tensor coproduct(const Element& x) {
  Tensor out;
  for (const auto& [mono, c] : x) out.add(coproduct(mono), c);
  return out;
}

Laurent counit(const Monomial& mono) { return (mono.m == 0 && mono.n == 0) ? Laurent(1) : Laurent{}; }

Laurent counit(const Element& x) {
  Laurent out;
  for (const auto& [mono, c] : x) out += c * counit(mono);
  return out;
}

std::string to_string(const Monomial& mono) {
  Exps e = exps_of(mono);
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += letter_char(static_cast<Letter>(i));
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Element& x) {
  return render_terms(x, [](const Monomial& m) { return to_string(m); });
}

}  // namespace qinst::su2
