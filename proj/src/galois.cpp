#include "qinst/galois.hpp"

#include <stdexcept>

#include "qinst/format.hpp"

namespace qinst::galois {

using s7::Gen;
using s7::z;
using s7::zs;

PCElement tensor(const s7::Element& p, const CElement& c) {
  PCElement out;
  for (const auto& [mp, cp] : p)
    for (const auto& [mc, cc] : c) out.add_product({mp, mc}, cp, cc);
  return out;
}

PPElement tensor(const s7::Element& left, const s7::Element& right) {
  PPElement out;
  for (const auto& [ml, cl] : left)
    for (const auto& [mr, cr] : right) out.add_product({ml, mr}, cl, cr);
  return out;
}

PCElement left_mul(const s7::Element& x, const PCElement& y) {
  PCElement out;
  for (const auto& [key, c] : y)
    for (const auto& [mx, cx] : x) {
      Laurent s = c * cx;
      for (const auto& [mp, cp] : s7::mul(mx, key.p)) out.add_product({mp, key.c}, s, cp);
    }
  return out;
}

PPElement left_mul(const s7::Element& x, const PPElement& y) {
  PPElement out;
  for (const auto& [key, c] : y)
    for (const auto& [mx, cx] : x) {
      Laurent s = c * cx;
      for (const auto& [mp, cp] : s7::mul(mx, key.left)) out.add_product({mp, key.right}, s, cp);
    }
  return out;
}

PPElement right_mul(const PPElement& x, const s7::Element& y) {
  PPElement out;
  for (const auto& [key, c] : x)
    for (const auto& [my, cy] : y) {
      Laurent s = c * cy;
      for (const auto& [mp, cp] : s7::mul(key.right, my)) out.add_product({key.left, mp}, s, cp);
    }
  return out;
}

std::optional<PPElement> TauTable::find(const CIndex& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

void TauTable::insert(const CIndex& key, PPElement value) {
  std::unique_lock lock(mutex_);
  entries_.try_emplace(key, std::move(value));
}

std::size_t TauTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::map<CIndex, PPElement> TauTable::snapshot() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

void TauTable::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

PCElement GaloisEngine::triangle(const PCElement& x, Gen g) const {
  // (u (x) c) <| z_i = sum_j u z_j (x) c . t_ji, and likewise for z_i* with t*_ji.
  const int i = s7::index_of(g);
  const bool starred = s7::is_starred(g);
  PCElement out;
  for (const auto& [key, c] : x)
    for (int j = 1; j <= 4; ++j) {
      const CElement& image = action_.act(key.c, cmod::GenSymbol{j, i, starred});
      if (image.is_zero()) continue;
      const s7::Element& u = s7::nf(key.p, starred ? zs(j) : z(j));
      for (const auto& [mu, cu] : u) {
        Laurent s = c * cu;
        for (const auto& [mc, cc] : image) out.add_product({mu, mc}, s, cc);
      }
    }
  return out;
}

PCElement GaloisEngine::triangle(const PCElement& x, const s7::Word& word) const {
  PCElement acc = x;
  for (Gen g : word) acc = triangle(acc, g);
  return acc;
}

PCElement GaloisEngine::triangle(const PCElement& x, const s7::Element& v) const {
  PCElement out;
  for (const auto& [mv, cv] : v) out.add(triangle(x, s7::to_word(mv)), cv);
  return out;
}

const PCElement& GaloisEngine::delta_r(const s7::Monomial& p) const {
  {
    std::lock_guard lock(delta_mutex_);
    if (auto it = delta_cache_.find(p); it != delta_cache_.end()) return it->second;
  }
  PCElement out;
  if (p == s7::Monomial{}) {
    out = unit_pc(CIndex{});
  } else {
    s7::Word w = s7::to_word(p);
    Gen last = w.back();
    s7::Monomial prefix = p;
    --prefix.e[static_cast<int>(last)];
    out = triangle(delta_r(prefix), last);
  }
  std::lock_guard lock(delta_mutex_);
  return delta_cache_.emplace(p, std::move(out)).first->second;
}

PCElement GaloisEngine::delta_r(const s7::Element& p) const {
  PCElement out;
  for (const auto& [mono, c] : p) out.add(delta_r(mono), c);
  return out;
}

PCElement GaloisEngine::chi(const PPElement& x) const {
  // Group by right leg: chi(sum_i l_i (x) p) = (sum_i l_i) Delta_r(p).
  std::map<s7::Monomial, s7::Element> by_right;
  for (const auto& [key, c] : x) by_right[key.right].add(key.left, c);
  PCElement out;
  for (const auto& [p, left] : by_right) out.add(left_mul(left, delta_r(p)));
  return out;
}

PPElement GaloisEngine::tau_step(TauStep step, const CIndex& from, const PPElement& tau_from) const {
  const int k = from.k;
  const int mn = from.m + from.n;
  const int abs_k = k < 0 ? -k : k;
  const int hm = (abs_k - k) / 2;
  const int hp = (abs_k + k) / 2;
  struct Sandwich {
    Laurent coeff;
    Gen left;
    Gen right;
  };
  std::vector<Sandwich> terms;
  switch (step) {
    case TauStep::RaiseK:
      if (k < 0) throw std::invalid_argument("RaiseK step requires k >= 0");
      terms = {{q_pow(2 + mn), zs(1), z(1)},
               {q_pow(2 + mn), z(2), zs(2)},
               {q_pow(2), z(3), zs(3)},
               {Laurent(1), zs(4), z(4)}};
      break;
    case TauStep::LowerK:
      if (k > 0) throw std::invalid_argument("LowerK step requires k <= 0");
      terms = {{q_pow(4), z(1), zs(1)},
               {q_pow(2), zs(2), z(2)},
               {q_pow(mn), zs(3), z(3)},
               {q_pow(mn), z(4), zs(4)}};
      break;
    case TauStep::RaiseM:
      terms = {{q_pow(2 + hm), zs(1), z(2)},
               {-q_pow(3 + hm), z(2), zs(1)},
               {q_pow(1 + hp), z(3), zs(4)},
               {-q_pow(hp), zs(4), z(3)}};
      break;
    case TauStep::RaiseN:
      terms = {{-q_pow(3 + hm), z(1), zs(2)},
               {q_pow(2 + hm), zs(2), z(1)},
               {-q_pow(hp), zs(3), z(4)},
               {q_pow(1 + hp), z(4), zs(3)}};
      break;
  }
  PPElement out;
  for (const auto& t : terms) {
    const s7::Monomial lg = s7::Monomial::of(t.left);
    for (const auto& [key, c] : tau_from) {
      const s7::Element& l = s7::mul(lg, key.left);
      const s7::Element& r = s7::nf(key.right, t.right);
      Laurent s = t.coeff * c;
      for (const auto& [ml, cl] : l) {
        Laurent sl = s * cl;
        for (const auto& [mr, cr] : r) out.add_product({ml, mr}, sl, cr);
      }
    }
  }
  return out;
}

PPElement GaloisEngine::tau(const CIndex& key, TauTable& table, TauPath path) const {
  if (key.m < 0 || key.n < 0) throw std::invalid_argument("tau: m and n must be non-negative");
  if (auto hit = table.find(key)) return *hit;
  PPElement value;
  if (key == CIndex{}) {
    value = PPElement(PPKey{});
  } else {
    CIndex from = key;
    TauStep step;
    const bool m_first = path == TauPath::Alternate;
    if (key.n > 0 && !(m_first && key.m > 0)) {
      --from.n;
      step = TauStep::RaiseN;
    } else if (key.m > 0) {
      --from.m;
      step = TauStep::RaiseM;
    } else if (key.k > 0) {
      --from.k;
      step = TauStep::RaiseK;
    } else {
      ++from.k;
      step = TauStep::LowerK;
    }
    value = tau_step(step, from, tau(from, table, path));
  }
  if (options_.verify_tau && chi(value) != unit_pc(key)) {
    throw std::logic_error("tau table entry " + cmod::to_string(key) + " fails chi(tau) = 1 (x) r");
  }
  table.insert(key, value);
  return value;
}

PCElement GaloisEngine::psi(const CElement& c, const s7::Element& p) const {
  return triangle(tensor(s7::unit(), c), p);
}

bool GaloisEngine::is_coinvariant(const s7::Element& p) const {
  return delta_r(p) == tensor(p, cmod::basis(0, 0, 0));
}

const GaloisEngine& standard_engine() {
  static const GaloisEngine engine;
  return engine;
}

PCElement triangle(const PCElement& x, const s7::Element& v) { return standard_engine().triangle(x, v); }
PCElement delta_r(const s7::Element& p) { return standard_engine().delta_r(p); }
PCElement chi(const PPElement& x) { return standard_engine().chi(x); }
PPElement tau(int k, int m, int n, TauTable& table) { return standard_engine().tau(CIndex{k, m, n}, table); }
bool quotient_eq(const PPElement& x, const PPElement& y) { return standard_engine().quotient_eq(x, y); }
PCElement psi(const CElement& c, const s7::Element& p) { return standard_engine().psi(c, p); }
bool is_coinvariant(const s7::Element& p) { return standard_engine().is_coinvariant(p); }

s7::Element a_n(int n) { return s7::nf({z(1), zs(4)}) - q_pow(n) * s7::nf({z(2), zs(3)}); }
s7::Element b_n(int n) { return s7::nf({z(1), z(3)}) + q_pow(n - 1) * s7::nf({z(2), z(4)}); }
s7::Element a_star_n(int n) { return s7::star(a_n(n)); }
s7::Element b_star_n(int n) { return s7::star(b_n(n)); }

BGenerators b_generators() {
  return {a_n(0), a_star_n(0), b_n(0), b_star_n(0), s7::nf({z(1), zs(1)}) + s7::nf({z(2), zs(2)})};
}

std::string to_string(const PCElement& x) {
  return render_terms(x, [](const PCKey& k) { return s7::to_string(k.p) + " ⊗ " + cmod::to_string(k.c); });
}

std::string to_string(const PPElement& x) {
  return render_terms(x, [](const PPKey& k) { return s7::to_string(k.left) + " ⊗ " + s7::to_string(k.right); });
}

}  // namespace qinst::galois
