#include "qinst/s7.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <map>
#include <numeric>
#include <unordered_map>

#include "qinst/format.hpp"

namespace qinst::s7 {
namespace {

std::atomic<int> g_degree_cap{24};

struct Rule {
  Laurent coeff;
  Word word;
};

// Rewrites of an out-of-order adjacent pair hi * lo (lo < hi).
std::vector<Rule> swap_rule(Gen hi, Gen lo) {
  if (!is_starred(hi)) return {{q_pow(-1), {lo, hi}}};       // z_j z_i
  if (is_starred(lo)) return {{q_pow(1), {lo, hi}}};         // z_j* z_i*
  if (index_of(hi) != index_of(lo)) return {{q_pow(1), {lo, hi}}};  // z_j* z_i
  // z_k* z_k = z_k z_k* + (1 - q^2) sum_{j<k} z_j z_j*
  const int k = index_of(hi);
  std::vector<Rule> out{{Laurent(1), {lo, hi}}};
  const Laurent corr = Laurent(1) - q_pow(2);
  for (int j = 1; j < k; ++j) out.push_back({corr, {z(j), zs(j)}});
  return out;
}

Element fold(Element acc, const Word& word) {
  for (Gen g : word) {
    Element next;
    for (const auto& [mono, c] : acc) next.add(nf(mono, g), c);
    acc = std::move(next);
  }
  return acc;
}

template <typename Describe>
void check_cap(const Monomial& mono, int extra, Describe describe) {
  const int cap = g_degree_cap.load(std::memory_order_relaxed);
  if (mono.degree() + extra > cap)
    throw DegreeCapExceeded("degree cap " + std::to_string(cap) + " exceeded multiplying " + to_string(mono) +
                            " by " + describe());
}

Element append_uncached(const Monomial& mono, Gen g) {
  int last = -1;
  for (int i = 7; i >= 0; --i)
    if (mono.e[i] > 0) {
      last = i;
      break;
    }
  const int gi = static_cast<int>(g);
  if (gi >= last) {
    if (g == Gen::Z4s && mono.e[3] > 0) {
      // M = U z4^a S with S = z1*^b1 z2*^b2 z3*^b3; S z4* = q^{-|S|} z4* S and
      // z4 z4* = 1 - sum_{j<4} z_j z_j*.
      Monomial core = mono;
      --core.e[3];
      Word tail;
      int shift = 0;
      for (int i = 4; i < 7; ++i) {
        tail.insert(tail.end(), core.e[i], static_cast<Gen>(i));
        shift += core.e[i];
        core.e[i] = 0;
      }
      Element inner(core);
      for (int j = 1; j < 4; ++j) inner.add(fold(Element(core), {z(j), zs(j)}), Laurent(-1));
      return fold(std::move(inner), tail) * q_pow(-shift);
    }
    Monomial out = mono;
    ++out.e[gi];
    return Element(out);
  }
  Monomial rest = mono;
  --rest.e[last];
  Element out;
  for (const auto& rule : swap_rule(static_cast<Gen>(last), g))
    out.add(fold(Element(rest), rule.word), rule.coeff);
  return out;
}

struct PairHash {
  template <typename A, typename B>
  std::size_t operator()(const std::pair<A, B>& p) const noexcept {
    std::size_t h1 = std::hash<A>{}(p.first);
    std::size_t h2 = std::hash<B>{}(p.second);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

}  // namespace

void set_degree_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("degree cap must be non-negative");
  g_degree_cap.store(cap);
}

int degree_cap() { return g_degree_cap.load(); }

std::string gen_name(Gen g) {
  std::string s = "z" + std::to_string(index_of(g));
  if (is_starred(g)) s += '*';
  return s;
}

Word to_word(const Monomial& mono) {
  Word w;
  for (int i = 0; i < 8; ++i) w.insert(w.end(), mono.e[i], static_cast<Gen>(i));
  return w;
}

const Element& nf(const Monomial& mono, Gen g) {
  thread_local std::unordered_map<std::pair<Monomial, Gen>, Element, PairHash> cache;
  check_cap(mono, 1, [g] { return gen_name(g); });
  auto key = std::make_pair(mono, g);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Element out = append_uncached(mono, g);
  return cache.emplace(key, std::move(out)).first->second;
}

Element nf(const Word& word) { return fold(unit(), word); }

const Element& mul(const Monomial& x, const Monomial& y) {
  thread_local std::unordered_map<std::pair<Monomial, Monomial>, Element, PairHash> cache;
  check_cap(x, y.degree(), [&y] { return to_string(y); });
  auto key = std::make_pair(x, y);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Element out = fold(Element(x), to_word(y));
  return cache.emplace(key, std::move(out)).first->second;
}

Element mul(const Element& x, const Element& y) {
  Element out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) out.add(mul(mx, my), cx * cy);
  return out;
}

Element left_mul(Gen g, const Element& x) {
  Element out;
  const Monomial mg = Monomial::of(g);
  for (const auto& [mono, c] : x) out.add(mul(mg, mono), c);
  return out;
}

Element right_mul(const Element& x, Gen g) { return fold(x, {g}); }

Element star(const Element& x) {
  Element out;
  for (const auto& [mono, c] : x) {
    Word w = to_word(mono);
    Word rev(w.rbegin(), w.rend());
    for (auto& g : rev) g = star(g);
    out.add(nf(rev), c);
  }
  return out;
}

int degree(const Element& x) {
  if (x.is_zero()) throw std::invalid_argument("degree of the zero element is undefined");
  int d = 0;
  for (const auto& [mono, c] : x) d = std::max(d, mono.degree());
  return d;
}

namespace {

bool rewrite_once(const Word& w, Strategy strategy, std::vector<Rule>& out) {
  const int len = static_cast<int>(w.size());
  auto schema_end = [&](int i) -> int {
    if (w[i] != Gen::Z4) return -1;
    int j = i + 1;
    while (j < len && is_starred(w[j]) && w[j] != Gen::Z4s) ++j;
    return (j < len && w[j] == Gen::Z4s) ? j : -1;
  };
  auto redex_at = [&](int i) { return (i + 1 < len && w[i + 1] < w[i]) || schema_end(i) >= 0; };
  int pos = -1;
  if (strategy == Strategy::LeftmostInnermost) {
    for (int i = 0; i < len && pos < 0; ++i)
      if (redex_at(i)) pos = i;
  } else {
    for (int i = len - 1; i >= 0 && pos < 0; --i)
      if (redex_at(i)) pos = i;
  }
  if (pos < 0) return false;

  auto splice = [&](const Word& mid, int from, int to) {
    Word nw(w.begin(), w.begin() + from);
    nw.insert(nw.end(), mid.begin(), mid.end());
    nw.insert(nw.end(), w.begin() + to, w.end());
    return nw;
  };
  if (pos + 1 < len && w[pos + 1] < w[pos]) {
    for (auto& rule : swap_rule(w[pos], w[pos + 1]))
      out.push_back({rule.coeff, splice(rule.word, pos, pos + 2)});
    return true;
  }
  // z4 u z4* -> q^{-|u|} (1 - sum_{j<4} z_j z_j*) u, u in {z1*, z2*, z3*}*
  const int end = schema_end(pos);
  Word middle(w.begin() + pos + 1, w.begin() + end);
  const Laurent scale = q_pow(-static_cast<int>(middle.size()));
  out.push_back({scale, splice(middle, pos, end + 1)});
  for (int j = 1; j < 4; ++j) {
    Word mid{z(j), zs(j)};
    mid.insert(mid.end(), middle.begin(), middle.end());
    out.push_back({-scale, splice(mid, pos, end + 1)});
  }
  return true;
}

}  // namespace

Element reduce_word(const Word& word, Strategy strategy) {
  std::map<Word, Laurent> pending;
  pending[word] = Laurent(1);
  Element result;
  std::vector<Rule> produced;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    produced.clear();
    if (!rewrite_once(node.key(), strategy, produced)) {
      Monomial m;
      for (Gen g : node.key()) ++m.e[static_cast<int>(g)];
      result.add(m, node.mapped());
      continue;
    }
    for (auto& [rc, rw] : produced) {
      Laurent add = rc * node.mapped();
      auto [it, inserted] = pending.try_emplace(std::move(rw), add);
      if (!inserted) {
        it->second += add;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

std::vector<Monomial> monomials_up_to(int max_degree) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int slot, int budget) -> void {
    if (slot == 8) {
      if (!(cur.e[3] > 0 && cur.e[7] > 0)) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      cur.e[slot] = static_cast<std::uint8_t>(v);
      self(self, slot + 1, budget - v);
    }
    cur.e[slot] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Monomial& mono) {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    if (mono.e[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += gen_name(static_cast<Gen>(i));
    if (mono.e[i] > 1) out += "^" + std::to_string(mono.e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Element& x) {
  return render_terms(x, [](const Monomial& m) { return to_string(m); });
}

Monomial parse_monomial(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed S7 monomial '" + std::string(text) + "': " + why);
  };
  Monomial m;
  if (text == "1") return m;
  int previous = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(' ', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    if (tok.size() < 2 || tok[0] != 'z' || tok[1] < '1' || tok[1] > '4') fail("bad token");
    int idx = tok[1] - '1';
    std::size_t p = 2;
    if (p < tok.size() && tok[p] == '*') {
      idx += 4;
      ++p;
    }
    int exp = 1;
    if (p < tok.size()) {
      if (tok[p] != '^' || p + 1 == tok.size()) fail("bad exponent");
      exp = 0;
      for (std::size_t i = p + 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') fail("bad exponent");
        exp = exp * 10 + (tok[i] - '0');
        if (exp > 255) fail("exponent too large");
      }
      if (exp < 2) fail("non-canonical exponent");
    }
    if (idx <= previous) fail("letters out of order");
    previous = idx;
    m.e[idx] = static_cast<std::uint8_t>(exp);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (m.e[3] > 0 && m.e[7] > 0) fail("contains z4 and z4*");
  return m;
}

}  // namespace qinst::s7
