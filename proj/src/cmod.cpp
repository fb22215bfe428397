#include "qinst/cmod.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "qinst/format.hpp"

namespace qinst::cmod {
namespace {

su2::Letter block_letter(int row, int col) {
  if (row == 1) return col == 1 ? su2::Letter::A : su2::Letter::B;
  return col == 1 ? su2::Letter::C : su2::Letter::D;
}

int symbol_index(const GenSymbol& g) { return (g.starred ? 16 : 0) + (g.row - 1) * 4 + (g.col - 1); }

int theta(int k) { return k >= 0 ? 1 : 0; }

}  // namespace

std::vector<GenSymbol> all_symbols() {
  std::vector<GenSymbol> out;
  for (bool s : {false, true})
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) out.push_back({i, j, s});
  return out;
}

std::string to_string(const GenSymbol& g) {
  return std::string("t") + (g.starred ? "*" : "") + std::to_string(g.row) + std::to_string(g.col);
}

std::string to_string(ActionEntry e) {
  static const std::array<const char*, kActionEntryCount> names = {
      "t*11", "t*12", "t*21", "t*22", "t*33", "t*34", "t*43", "t*44", "t*33-correction",
      "t*44-correction", "t33", "t34", "t43", "t44", "t33-correction", "t44-correction"};
  return names[static_cast<int>(e)];
}

const ModuleAction& ModuleAction::standard() {
  static const ModuleAction instance;
  return instance;
}

const CElement& ModuleAction::act(const CIndex& x, const GenSymbol& g) const {
  const std::uint64_t key = (static_cast<std::uint64_t>(x.k + 32768) << 48) |
                            (static_cast<std::uint64_t>(x.m) << 32) |
                            (static_cast<std::uint64_t>(x.n) << 16) |
                            static_cast<std::uint64_t>(symbol_index(g));
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  CElement out = compute(x, g);
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(out)).first->second;
}

CElement ModuleAction::act(const CElement& x, const GenSymbol& g) const {
  CElement out;
  for (const auto& [idx, c] : x) out.add(act(idx, g), c);
  return out;
}

CElement ModuleAction::act_word(const CElement& x, const std::vector<GenSymbol>& word) const {
  CElement acc = x;
  for (const auto& g : word) acc = act(acc, g);
  return acc;
}

CElement ModuleAction::compute(const CIndex& x, const GenSymbol& g) const {
  const int k = x.k;
  const int mn = x.m + x.n;
  auto block = [&](int row, int col) { return su2::nf(x, block_letter(row, col)); };
  // r^{k+shift,m,n} . t12 t21
  auto correction = [&](int shift) {
    return act_word(CElement(CIndex{k + shift, x.m, x.n}), {t(1, 2), t(2, 1)});
  };
  const Laurent one_minus = Laurent(1) - q_pow(-2 * k);  // 1 - q^{-2k}

  if (g.in_block()) {
    if (!g.starred) return block(g.row, g.col);
    // (t*11 t*12; t*21 t*22) acts as (t22, -q t21; -q^-1 t12, t11)
    if (g.row == 1 && g.col == 1) return sign(ActionEntry::Star11) * block(2, 2);
    if (g.row == 1 && g.col == 2) return sign(ActionEntry::Star12) * q_pow(1) * block(2, 1) * Laurent(-1);
    if (g.row == 2 && g.col == 1) return sign(ActionEntry::Star21) * q_pow(-1) * block(1, 2) * Laurent(-1);
    return sign(ActionEntry::Star22) * block(1, 1);
  }
  if (!g.in_lower_block()) return {};

  const int pos = (g.row - 3) * 2 + (g.col - 3);  // 0:33 1:34 2:43 3:44
  CElement out;
  if (g.starred) {
    switch (pos) {
      case 0:
        out.add(block(1, 1), sign(ActionEntry::Star33) * q_pow(mn));
        if (theta(-k))
          out.add(correction(+1), sign(ActionEntry::Star33Correction) * Laurent(-1) * q_pow(mn - 1) * one_minus);
        break;
      case 1:
        out.add(block(1, 2), sign(ActionEntry::Star34) * q_pow(1 - k));
        break;
      case 2:
        out.add(block(2, 1), sign(ActionEntry::Star43) * q_pow(-(1 + k)));
        break;
      default:
        out.add(block(2, 2), sign(ActionEntry::Star44) * q_pow(-mn));
        if (theta(k))
          out.add(correction(-1), sign(ActionEntry::Star44Correction) * Laurent(-1) * q_pow(1) * one_minus);
        break;
    }
  } else {
    switch (pos) {
      case 0:
        out.add(block(2, 2), sign(ActionEntry::T33) * q_pow(-mn));
        if (theta(k))
          out.add(correction(-1), sign(ActionEntry::T33Correction) * Laurent(-1) * q_pow(1) * one_minus);
        break;
      case 1:
        out.add(block(2, 1), sign(ActionEntry::T34) * Laurent(-1) * q_pow(-k));
        break;
      case 2:
        out.add(block(1, 2), sign(ActionEntry::T43) * Laurent(-1) * q_pow(-k));
        break;
      default:
        out.add(block(1, 1), sign(ActionEntry::T44) * q_pow(mn));
        if (theta(-k))
          out.add(correction(+1), sign(ActionEntry::T44Correction) * Laurent(-1) * q_pow(mn - 1) * one_minus);
        break;
    }
  }
  return out;
}

CElement act_gen(const CElement& x, const GenSymbol& g) { return ModuleAction::standard().act(x, g); }

CElement act_word(const CElement& x, const std::vector<GenSymbol>& word) {
  return ModuleAction::standard().act_word(x, word);
}

CTensor coproduct_c(const CIndex& x) { return su2::coproduct(x); }
CTensor coproduct_c(const CElement& x) { return su2::coproduct(x); }
Laurent counit_c(const CElement& x) { return su2::counit(x); }

std::string to_string(const CIndex& x) {
  return "r[" + std::to_string(x.k) + "," + std::to_string(x.m) + "," + std::to_string(x.n) + "]";
}

std::string to_string(const CElement& x) {
  return render_terms(x, [](const CIndex& i) { return cmod::to_string(i); });
}

CIndex parse_index(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed C basis element: '" + std::string(text) + "'"); };
  if (text.size() < 8 || text.substr(0, 2) != "r[" || text.back() != ']') fail();
  std::string_view body = text.substr(2, text.size() - 3);
  std::array<int, 3> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t end = i < 2 ? body.find(',', pos) : body.size();
    if (end == std::string_view::npos) fail();
    auto piece = body.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v[i]);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) fail();
    pos = end + 1;
  }
  if (v[1] < 0 || v[2] < 0) fail();
  return CIndex{v[0], v[1], v[2]};
}

std::vector<CIndex> indices_up_to(int max_degree) {
  std::vector<CIndex> out;
  for (int s = 0; s <= max_degree; ++s)
    for (int k = s; k >= -s; --k) {
      const int rest = s - (k < 0 ? -k : k);
      for (int m = rest; m >= 0; --m) out.push_back({k, m, rest - m});
    }
  return out;
}

}  // namespace qinst::cmod
