#include "flexpoly/numfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flexpoly {

using detail::TowerLevel;

namespace {

using Coeffs = std::vector<Rational>;
using CSpan = std::span<const Rational>;

bool all_zero(CSpan a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return sgn(r) == 0; });
}

Coeffs zeros(std::size_t n) { return Coeffs(n); }

Coeffs add(CSpan a, CSpan b) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Coeffs sub(CSpan a, CSpan b) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Coeffs scale(CSpan a, const Rational& s) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

Coeffs negate(CSpan a) {
  Coeffs out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Coeffs join(const Coeffs& p, const Coeffs& q) {
  Coeffs out;
  out.reserve(p.size() * 2);
  out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

// `lvl` is the tower level whose depth matches log2(a.size()); nullptr for Q.
Coeffs mul(CSpan a, CSpan b, const TowerLevel* lvl);

Coeffs mul_or_zero(CSpan a, CSpan b, const TowerLevel* lvl) {
  if (all_zero(a) || all_zero(b)) return zeros(a.size());
  return mul(a, b, lvl);
}

Coeffs mul(CSpan a, CSpan b, const TowerLevel* lvl) {
  if (a.size() == 1) return {a[0] * b[0]};
  const std::size_t half = a.size() / 2;
  const TowerLevel* parent = lvl->parent.get();
  CSpan p1 = a.first(half), q1 = a.subspan(half);
  CSpan p2 = b.first(half), q2 = b.subspan(half);

  Coeffs out_p = mul_or_zero(p1, p2, parent);
  Coeffs qq = mul_or_zero(q1, q2, parent);
  if (!all_zero(qq)) out_p = add(out_p, mul(qq, lvl->radicand.coefficients(), parent));
  Coeffs out_q = add(mul_or_zero(p1, q2, parent), mul_or_zero(q1, p2, parent));
  return join(out_p, out_q);
}

// p^2 - q^2 d, the norm down to the parent field.
Coeffs norm_down(CSpan p, CSpan q, const TowerLevel* lvl) {
  const TowerLevel* parent = lvl->parent.get();
  Coeffs pp = mul_or_zero(p, p, parent);
  Coeffs qq = mul_or_zero(q, q, parent);
  if (all_zero(qq)) return pp;
  return sub(pp, mul(qq, lvl->radicand.coefficients(), parent));
}

Coeffs inverse(CSpan a, const TowerLevel* lvl) {
  if (a.size() == 1) {
    if (sgn(a[0]) == 0) throw NumfieldError(NumfieldError::Kind::DivisionByZero, "division by zero");
    return {1 / a[0]};
  }
  const std::size_t half = a.size() / 2;
  const TowerLevel* parent = lvl->parent.get();
  CSpan p = a.first(half), q = a.subspan(half);
  if (all_zero(q)) return join(inverse(p, parent), zeros(half));
  Coeffs n_inv = inverse(norm_down(p, q, lvl), parent);
  return join(mul_or_zero(p, n_inv, parent), negate(mul(q, n_inv, parent)));
}

int sign_of(CSpan a, const TowerLevel* lvl) {
  if (a.size() == 1) return sgn(a[0]);
  const std::size_t half = a.size() / 2;
  const TowerLevel* parent = lvl->parent.get();
  CSpan p = a.first(half), q = a.subspan(half);
  const int sq = sign_of(q, parent);
  const int sp = sign_of(p, parent);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  return sp * sign_of(norm_down(p, q, lvl), parent);
}

std::optional<Coeffs> sqrt_of(CSpan a, const TowerLevel* lvl) {
  if (a.size() == 1) {
    const Rational& r = a[0];
    if (sgn(r) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
      return std::nullopt;
    mpz_class n = sqrt(r.get_num()), d = sqrt(r.get_den());
    return Coeffs{Rational(n, d)};
  }
  if (sign_of(a, lvl) < 0) return std::nullopt;
  const std::size_t half = a.size() / 2;
  const TowerLevel* parent = lvl->parent.get();
  CSpan p = a.first(half), q = a.subspan(half);

  if (all_zero(q)) {
    // Either the root lies in the parent field, or it is s * sqrt(d) with s^2 = p / d.
    if (auto r = sqrt_of(p, parent)) return join(*r, zeros(half));
    Coeffs ratio = mul(p, inverse(lvl->radicand.coefficients(), parent), parent);
    if (auto s = sqrt_of(ratio, parent)) return join(zeros(half), *s);
    return std::nullopt;
  }

  // (u + v sqrt d)^2 = p + q sqrt d  <=>  u^2 + v^2 d = p, 2uv = q.
  // u^2 is a root of T^2 - p T + q^2 d / 4, whose discriminant is the norm.
  auto w = sqrt_of(norm_down(p, q, lvl), parent);
  if (!w) return std::nullopt;
  const Rational half_r(1, 2);
  for (const Coeffs& t : {scale(add(p, *w), half_r), scale(sub(p, *w), half_r)}) {
    auto u = sqrt_of(t, parent);
    if (!u || all_zero(*u)) continue;
    Coeffs v = mul(q, inverse(scale(*u, Rational(2)), parent), parent);
    return join(*u, v);
  }
  return std::nullopt;
}

bool same_level(const TowerLevel* x, const TowerLevel* y) {
  if (x == y) return true;
  if (x == nullptr || y == nullptr) return false;
  if (x->depth != y->depth) return false;
  auto cx = x->radicand.coefficients(), cy = y->radicand.coefficients();
  if (!std::equal(cx.begin(), cx.end(), cy.begin(), cy.end())) return false;
  return same_level(x->parent.get(), y->parent.get());
}

// Outward-rounded interval evaluation on a dyadic grid.
class Encloser {
 public:
  explicit Encloser(std::uint32_t bits) : bits_(bits) { mpz_ui_pow_ui(unit_.get_mpz_t(), 2, bits); }

  DecimalInterval eval(CSpan a, const TowerLevel* lvl) {
    if (a.size() == 1) return {a[0], a[0]};
    const std::size_t half = a.size() / 2;
    const TowerLevel* parent = lvl->parent.get();
    CSpan p = a.first(half), q = a.subspan(half);
    DecimalInterval ip = eval(p, parent);
    if (all_zero(q)) return ip;
    DecimalInterval prod = multiply(eval(q, parent), root(lvl));
    return {round_down(ip.lower + prod.lower), round_up(ip.upper + prod.upper)};
  }

 private:
  DecimalInterval multiply(const DecimalInterval& x, const DecimalInterval& y) {
    Rational c[4] = {x.lower * y.lower, x.lower * y.upper, x.upper * y.lower, x.upper * y.upper};
    auto [lo, hi] = std::minmax_element(std::begin(c), std::end(c));
    return {round_down(*lo), round_up(*hi)};
  }

  const DecimalInterval& root(const TowerLevel* lvl) {
    if (roots_.size() < static_cast<std::size_t>(lvl->depth)) roots_.resize(lvl->depth);
    auto& slot = roots_[lvl->depth - 1];
    if (!slot) {
      DecimalInterval r = eval(lvl->radicand.coefficients(), lvl->parent.get());
      slot = DecimalInterval{sqrt_down(r.lower), sqrt_up(r.upper)};
    }
    return *slot;
  }

  Rational round_down(const Rational& x) const {
    mpz_class n = x.get_num() * unit_, q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q, unit_);
    r.canonicalize();
    return r;
  }

  Rational round_up(const Rational& x) const {
    mpz_class n = x.get_num() * unit_, q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q, unit_);
    r.canonicalize();
    return r;
  }

  Rational sqrt_down(const Rational& x) const {
    if (sgn(x) <= 0) return Rational(0);
    mpz_class n = x.get_num() * unit_ * unit_, m;
    mpz_fdiv_q(m.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    Rational r(sqrt(m), unit_);
    r.canonicalize();
    return r;
  }

  Rational sqrt_up(const Rational& x) const {
    if (sgn(x) <= 0) return Rational(0);
    mpz_class n = x.get_num() * unit_ * unit_, m;
    mpz_cdiv_q(m.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
    mpz_class s = sqrt(m);
    if (s * s < m) s += 1;
    Rational r(s, unit_);
    r.canonicalize();
    return r;
  }

  std::uint32_t bits_;
  mpz_class unit_;
  std::vector<std::optional<DecimalInterval>> roots_;
};

std::string radicand_label(const FieldElem& d) { return "(" + d.to_string() + ")"; }

// Largest s with s^2 | n, found by trial division up to `bound` plus a
// perfect-square test of the cofactor.
mpz_class square_part_root(mpz_class n, unsigned long bound = 1000) {
  mpz_class root = 1;
  n = abs(n);
  if (n == 0) return 1;
  for (unsigned long p = 2; p <= bound && p * p <= n; ++p) {
    const mpz_class pp = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      root *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) root *= sqrt(n);
  return root;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return NumfieldError(NumfieldError::Kind::Parse, "not a rational number: '" + std::string(text) + "'");
  };
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    auto is_int = [](const std::string& t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      return i < t.size() && std::all_of(t.begin() + i, t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (!is_int(num) || !is_int(den)) throw fail();
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw fail();
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++frac;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw fail();
    std::string e = s.substr(i + 1);
    try {
      std::size_t used = 0;
      exponent = std::stol(e, &used);
      if (used != e.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  mpz_class n(digits, 10);
  if (negative) n = -n;
  long shift = exponent - frac;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift < 0 ? Rational(n, p) : Rational(n * p);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r, int digits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  Rational scaled = abs(r) * p + Rational(1, 2);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(r) < 0 && n != 0) s.insert(0, "-");
  return s;
}

// ---------------------------------------------------------------------------
// FieldTower

int FieldTower::depth() const noexcept { return top_ ? top_->depth : 0; }

const TowerLevel* FieldTower::level_ptr(int level) const {
  if (level < 0 || level > depth()) throw std::out_of_range("tower level out of range");
  const TowerLevel* l = top_.get();
  while (l != nullptr && l->depth > level) l = l->parent.get();
  return l;
}

const FieldElem& FieldTower::radicand(int level) const {
  if (level < 1) throw std::out_of_range("tower level out of range");
  return level_ptr(level)->radicand;
}

FieldElem FieldTower::generator(int level) const {
  if (level < 1 || level > depth()) throw std::out_of_range("tower level out of range");
  std::vector<Rational> c(std::size_t{1} << depth());
  c[std::size_t{1} << (level - 1)] = 1;
  return FieldElem(*this, std::move(c));
}

FieldTower FieldTower::truncated(int d) const {
  const TowerLevel* target = level_ptr(d);
  std::shared_ptr<const TowerLevel> l = top_;
  while (l.get() != target) l = l->parent;
  return FieldTower(std::move(l));
}

bool FieldTower::is_prefix_of(const FieldTower& other) const {
  if (depth() > other.depth()) return false;
  return same_level(top_.get(), other.level_ptr(depth()));
}

std::string FieldTower::to_string() const {
  std::vector<std::string> parts;
  for (const TowerLevel* l = top_.get(); l != nullptr; l = l->parent.get())
    parts.push_back("sqrt" + radicand_label(l->radicand));
  if (parts.empty()) return "Q";
  std::string s = "Q(";
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (it != parts.rbegin()) s += ", ";
    s += *it;
  }
  return s + ")";
}

const FieldTower& common_tower(const FieldTower& a, const FieldTower& b) {
  if (a.depth() >= b.depth()) {
    if (b.is_prefix_of(a)) return a;
  } else if (a.is_prefix_of(b)) {
    return b;
  }
  throw NumfieldError(NumfieldError::Kind::IncompatibleTowers,
                      "incompatible towers " + a.to_string() + " and " + b.to_string());
}

FieldTower adjoin(const FieldTower& tower, const FieldElem& d) {
  FieldElem radicand = d.lifted(tower);
  if (sign(radicand) <= 0)
    throw NumfieldError(NumfieldError::Kind::NonPositiveRadicand, "radicand must be positive: " + d.to_string());
  if (auto r = sqrt_in_field(radicand)) throw AlreadySquare(std::move(*r));
  auto level = std::make_shared<TowerLevel>();
  level->parent = tower.top_;
  level->depth = tower.depth() + 1;
  level->radicand = std::move(radicand);
  return FieldTower(std::move(level));
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(FieldTower tower, std::vector<Rational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != (std::size_t{1} << tower_.depth()))
    throw std::invalid_argument("coefficient count does not match tower depth");
  for (auto& c : coeffs_) c.canonicalize();
}

FieldElem FieldElem::zero(const FieldTower& tower) {
  return FieldElem(tower, std::vector<Rational>(std::size_t{1} << tower.depth()));
}

FieldElem FieldElem::one(const FieldTower& tower) {
  FieldElem e = zero(tower);
  e.coeffs_[0] = 1;
  return e;
}

FieldElem FieldElem::lifted(const FieldTower& deeper) const {
  if (deeper.depth() == tower_.depth()) {
    if (!(tower_ == deeper))
      throw NumfieldError(NumfieldError::Kind::IncompatibleTowers,
                          "cannot lift " + tower_.to_string() + " to " + deeper.to_string());
    FieldElem e = *this;
    e.tower_ = deeper;
    return e;
  }
  if (!tower_.is_prefix_of(deeper))
    throw NumfieldError(NumfieldError::Kind::IncompatibleTowers,
                        "cannot lift " + tower_.to_string() + " to " + deeper.to_string());
  std::vector<Rational> c(std::size_t{1} << deeper.depth());
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin());
  return FieldElem(deeper, std::move(c));
}

FieldElem FieldElem::lowered(const FieldTower& prefix) const {
  if (!prefix.is_prefix_of(tower_))
    throw NumfieldError(NumfieldError::Kind::IncompatibleTowers,
                        prefix.to_string() + " is not a prefix of " + tower_.to_string());
  const std::size_t n = std::size_t{1} << prefix.depth();
  if (!all_zero(CSpan(coeffs_).subspan(n)))
    throw NumfieldError(NumfieldError::Kind::NotInSubfield, to_string() + " is not in " + prefix.to_string());
  return FieldElem(prefix, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n));
}

std::pair<FieldElem, FieldElem> FieldElem::split() const {
  if (tower_.depth() == 0) throw std::logic_error("split() needs an element of an extension");
  FieldTower parent = tower_.truncated(tower_.depth() - 1);
  const auto half = coeffs_.begin() + coeffs_.size() / 2;
  return {FieldElem(parent, std::vector<Rational>(coeffs_.begin(), half)),
          FieldElem(parent, std::vector<Rational>(half, coeffs_.end()))};
}

FieldElem FieldElem::join(const FieldTower& tower, const FieldElem& p, const FieldElem& q) {
  if (tower.depth() == 0) throw std::logic_error("join() needs an extension tower");
  FieldTower parent = tower.truncated(tower.depth() - 1);
  FieldElem lp = p.lifted(parent), lq = q.lifted(parent);
  return FieldElem(tower, flexpoly::join(lp.coeffs_, lq.coeffs_));
}

bool FieldElem::is_zero() const noexcept { return all_zero(coeffs_); }

bool FieldElem::is_rational() const noexcept { return all_zero(CSpan(coeffs_).subspan(1)); }

const Rational& FieldElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("element is not rational");
  return coeffs_[0];
}

FieldElem FieldElem::inverse() const {
  return FieldElem(tower_, flexpoly::inverse(coeffs_, tower_.top_level()));
}

FieldElem FieldElem::operator-() const { return FieldElem(tower_, negate(coeffs_)); }

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
  const FieldTower& t = common_tower(tower_, rhs.tower_);
  if (t.depth() > tower_.depth()) *this = lifted(t);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
  const FieldTower& t = common_tower(tower_, rhs.tower_);
  if (t.depth() > tower_.depth()) *this = lifted(t);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const FieldTower& t = common_tower(a.tower_, b.tower_);
  if (a.is_rational()) return FieldElem(t, scale(b.lifted(t).coeffs_, a.coeffs_[0]));
  if (b.is_rational()) return FieldElem(t, scale(a.lifted(t).coeffs_, b.coeffs_[0]));
  if (a.tower_.depth() == b.tower_.depth()) return FieldElem(t, mul(a.coeffs_, b.coeffs_, t.top_level()));
  FieldElem la = a.lifted(t), lb = b.lifted(t);
  return FieldElem(t, mul(la.coeffs_, lb.coeffs_, t.top_level()));
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) { return *this = *this * rhs; }

FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this = *this / rhs; }

std::string FieldElem::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    const Rational& c = coeffs_[mask];
    if (sgn(c) == 0) continue;
    std::string radicals;
    for (int level = 1; level <= tower_.depth(); ++level) {
      if (mask & (std::size_t{1} << (level - 1))) {
        if (!radicals.empty()) radicals += "*";
        radicals += "sqrt" + radicand_label(tower_.radicand(level));
      }
    }
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (radicals.empty()) {
      out << rational_string(mag);
    } else {
      if (mag != 1) out << rational_string(mag) << "*";
      out << radicals;
    }
  }
  if (first) return "0";
  return out.str();
}

double FieldElem::to_double() const {
  if (is_rational()) return coeffs_[0].get_d();
  for (std::uint32_t bits = 96;; bits *= 2) {
    DecimalInterval iv = enclose(*this, bits);
    Rational mid = iv.midpoint();
    if (iv.width() * (Rational(1) << 60) <= abs(mid) || bits > (1u << 14)) return mid.get_d();
  }
}

// ---------------------------------------------------------------------------
// Free operations

int sign(const FieldElem& x) { return sign_of(x.coefficients(), x.tower().top_level()); }

std::optional<FieldElem> sqrt_in_field(const FieldElem& x) {
  if (sign(x) < 0) throw NumfieldError(NumfieldError::Kind::NegativeInput, "square root of negative " + x.to_string());
  auto r = sqrt_of(x.coefficients(), x.tower().top_level());
  if (!r) return std::nullopt;
  return FieldElem(x.tower(), std::move(*r));
}

std::optional<FieldElem> positive_sqrt_in_field(const FieldElem& x) {
  auto r = sqrt_in_field(x);
  if (r && sign(*r) < 0) *r = -*r;
  return r;
}

std::pair<Rational, FieldElem> strip_rational_squares(const FieldElem& x) {
  if (x.is_zero()) return {Rational(1), x};
  mpz_class den = 1;
  for (const Rational& c : x.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  // x = (1/den) * N with integer N; fold the non-square part of den into N.
  mpz_class den_root = square_part_root(den, 0);
  mpz_class folded = den / (den_root * den_root);
  mpz_class g = 0;
  std::vector<Rational> n;
  for (const Rational& c : x.coefficients()) {
    Rational v = c * den * folded;
    n.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  const mpz_class g_root = square_part_root(g);
  for (Rational& v : n) v /= g_root * g_root;
  Rational factor(g_root, den_root * folded);
  factor.canonicalize();
  return {factor, FieldElem(x.tower(), std::move(n))};
}

DecimalInterval enclose(const FieldElem& x, std::uint32_t bits) {
  return Encloser(bits).eval(x.coefficients(), x.tower().top_level());
}

DecimalInterval approx(const FieldElem& x, int digits) {
  if (digits < 1) throw std::invalid_argument("approx needs digits >= 1");
  if (x.is_rational()) return {x.rational_value(), x.rational_value()};
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational target(1, p);
  for (std::uint32_t bits = 4 * static_cast<std::uint32_t>(digits) + 32;; bits *= 2) {
    DecimalInterval iv = enclose(x, bits);
    if (iv.width() < target) return iv;
  }
}

}  // namespace flexpoly
