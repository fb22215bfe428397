#include "qinst/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <stdexcept>

namespace qinst {
namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 num, i128 den) { return magnitude(num) <= static_cast<u128>(kMax) && den <= kMax; }

Rational to_gmp(std::int64_t num, std::int64_t den) {
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), num);
  mpz_set_si(d.get_mpz_t(), den);
  return Rational(n, d);
}

}  // namespace

Scalar::Scalar(long value) {
  if (value == std::numeric_limits<long>::min()) {
    big_ = std::make_shared<const Rational>(to_gmp(value, 1));
  } else {
    num_ = value;
  }
}

Scalar::Scalar(const Rational& value) { *this = from_big(value); }

Scalar Scalar::from_big(Rational value) {
  value.canonicalize();
  Scalar out;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    out.num_ = n.get_si();
    out.den_ = d.get_si();
  } else {
    out.big_ = std::make_shared<const Rational>(std::move(value));
  }
  return out;
}

Rational Scalar::to_rational() const { return big_ ? *big_ : to_gmp(num_, den_); }

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Scalar Scalar::operator-() const {
  if (big_) return from_big(-*big_);
  Scalar out = *this;
  out.num_ = -num_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    i128 num, den;
    if (den_ == 1 && rhs.den_ == 1) {
      num = static_cast<i128>(num_) + rhs.num_;
      den = 1;
    } else {
      const auto g = static_cast<std::int64_t>(gcd128(den_, rhs.den_));
      num = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
      den = static_cast<i128>(den_) * (rhs.den_ / g);
      if (num == 0) {
        den = 1;
      } else {
        const u128 r = gcd128(magnitude(num), static_cast<u128>(den));
        num /= static_cast<i128>(r);
        den /= static_cast<i128>(r);
      }
    }
    if (fits(num, den)) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      return *this;
    }
  }
  *this = from_big(to_rational() + rhs.to_rational());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (!big_ && !rhs.big_) {
    i128 num = static_cast<i128>(num_) * rhs.num_;
    i128 den = static_cast<i128>(den_) * rhs.den_;
    if (num == 0) {
      den = 1;
    } else if (den != 1) {
      const u128 r = gcd128(magnitude(num), static_cast<u128>(den));
      num /= static_cast<i128>(r);
      den /= static_cast<i128>(r);
    }
    if (fits(num, den)) {
      num_ = static_cast<std::int64_t>(num);
      den_ = static_cast<std::int64_t>(den);
      return *this;
    }
  }
  *this = from_big(to_rational() * rhs.to_rational());
  return *this;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.big_ || rhs.big_) return lhs.big_ && rhs.big_ && *lhs.big_ == *rhs.big_;
  return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

std::size_t Scalar::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 31 + std::hash<std::int64_t>{}(den_);
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  bool ok = slash == std::string_view::npos ? digits(body)
                                            : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Rational r(std::string(text), 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Laurent::Laurent(long value) {
  if (value != 0) terms_.emplace_back(0, Scalar(value));
}

Laurent::Laurent(const Rational& value) {
  if (value != 0) terms_.emplace_back(0, Scalar(value));
}

Laurent::Laurent(const Scalar& value) {
  if (!value.is_zero()) terms_.emplace_back(0, value);
}

Laurent Laurent::monomial(const Scalar& c, int e) {
  Laurent out;
  if (!c.is_zero()) out.terms_.emplace_back(e, c);
  return out;
}

bool Laurent::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }

Rational Laurent::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, int key) { return t.first < key; });
  return it != terms_.end() && it->first == e ? it->second.to_rational() : Rational(0);
}

void Laurent::add_term(int e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, int key) { return t.first < key; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, e, c);
  }
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  if (rhs.terms_.size() == 1) {
    const Term t = rhs.terms_[0];
    add_term(t.first, t.second);
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Scalar sum = a->second + b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) { return *this += -rhs; }

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Laurent& Laurent::shift(int e) {
  for (auto& t : terms_) t.first += e;
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  Laurent out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  if (lhs.size() == 1 || rhs.size() == 1) {
    const Laurent& single = lhs.size() == 1 ? lhs : rhs;
    const Laurent& other = lhs.size() == 1 ? rhs : lhs;
    const auto& [e, c] = single.terms_[0];
    out.terms_ = other.terms_;
    for (auto& t : out.terms_) {
      t.first += e;
      t.second *= c;
    }
    return out;
  }
  // dense accumulation over the exponent window
  const int lo = lhs.terms_.front().first + rhs.terms_.front().first;
  const int hi = lhs.terms_.back().first + rhs.terms_.back().first;
  std::vector<Scalar> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) acc[ea + eb - lo] += ca * cb;
  for (int i = 0; i <= hi - lo; ++i)
    if (!acc[i].is_zero()) out.terms_.emplace_back(lo + i, std::move(acc[i]));
  return out;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  *this = *this * rhs;
  return *this;
}

Laurent& Laurent::add_product(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return *this;
  if (this == &a || this == &b) return *this += a * b;
  if (a.size() == 1 || b.size() == 1) {
    const Laurent& single = a.size() == 1 ? a : b;
    const Laurent& other = a.size() == 1 ? b : a;
    const auto& [e, c] = single.terms_[0];
    for (const auto& [eo, co] : other.terms_) add_term(eo + e, co * c);
    return *this;
  }
  return *this += a * b;
}

Rational Laurent::eval_at(const Rational& q0) const {
  if (q0 == 0) throw std::invalid_argument("eval_at: specialization point q0 must be nonzero");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? q0 : Rational(1) / q0;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    sum += c.to_rational() * p;
  }
  return sum;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (e != 0) out += "*q^" + std::to_string(e);
  }
  return out;
}

Laurent Laurent::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed Laurent coefficient: '" + std::string(text) + "'"); };
  if (text == "0") return Laurent{};
  Laurent out;
  int previous = 0;
  bool first = true;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(" + ", pos);
    std::string_view piece = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    int e = 0;
    auto star = piece.find("*q^");
    Rational c = parse_rational(piece.substr(0, star));
    if (star != std::string_view::npos) {
      std::string_view exp = piece.substr(star + 3);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), e);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || e == 0) fail();
    }
    if (c == 0 || (!first && e <= previous)) fail();
    out.terms_.emplace_back(e, Scalar(c));
    previous = e;
    first = false;
    if (end == std::string_view::npos) break;
    pos = end + 3;
  }
  return out;
}

std::size_t Laurent::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= c.hash() + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qinst
