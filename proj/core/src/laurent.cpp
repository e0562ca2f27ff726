#include "trop/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "trop/error.hpp"

namespace trop {

namespace {

// Effective length: index one past the last nonzero numerator.
int eff_len(const std::vector<Int>& v) {
  int n = static_cast<int>(v.size());
  while (n > 0 && v[n - 1].is_zero()) --n;
  return n;
}

void schoolbook_trunc(const std::vector<Int>& a, int na, const std::vector<Int>& b, int nb,
                      std::vector<Int>& out, int w) {
  for (int i = 0; i < na && i < w; ++i) {
    if (a[i].is_zero()) continue;
    int jmax = std::min(nb, w - i);
    for (int j = 0; j < jmax; ++j) out[i + j].addmul(a[i], b[j]);
  }
}

constexpr int kKaratsubaThreshold = 64;

// Full product a*b (lengths na, nb) accumulated into out at offset `off`.
void karatsuba_full(const Int* a, int na, const Int* b, int nb, std::vector<Int>& out, int off) {
  if (na == 0 || nb == 0) return;
  if (na < kKaratsubaThreshold || nb < kKaratsubaThreshold) {
    for (int i = 0; i < na; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < nb; ++j) out[off + i + j].addmul(a[i], b[j]);
    }
    return;
  }
  int h = std::min(na, nb) / 2;
  // a = a0 + x^h a1, b = b0 + x^h b1
  const Int* a0 = a;
  const Int* a1 = a + h;
  const Int* b0 = b;
  const Int* b1 = b + h;
  int na1 = na - h, nb1 = nb - h;

  std::vector<Int> z0(2 * h - 1), z2(na1 + nb1 - 1);
  karatsuba_full(a0, h, b0, h, z0, 0);
  karatsuba_full(a1, na1, b1, nb1, z2, 0);

  std::vector<Int> sa(std::max(h, na1)), sb(std::max(h, nb1));
  for (int i = 0; i < h; ++i) sa[i] = a0[i];
  for (int i = 0; i < na1; ++i) sa[i] += a1[i];
  for (int i = 0; i < h; ++i) sb[i] = b0[i];
  for (int i = 0; i < nb1; ++i) sb[i] += b1[i];
  std::vector<Int> z1(static_cast<size_t>(sa.size() + sb.size() - 1));
  karatsuba_full(sa.data(), static_cast<int>(sa.size()), sb.data(), static_cast<int>(sb.size()),
                 z1, 0);
  for (size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (size_t i = 0; i < z0.size(); ++i) out[off + i] += z0[i];
  for (size_t i = 0; i < z1.size(); ++i) out[off + h + i] += z1[i];
  for (size_t i = 0; i < z2.size(); ++i) out[off + 2 * h + i] += z2[i];
}

void conv_trunc(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& out,
                int w) {
  int na = std::min(eff_len(a), w);
  int nb = std::min(eff_len(b), w);
  if (na == 0 || nb == 0) return;
  if (na >= kKaratsubaThreshold && nb >= kKaratsubaThreshold) {
    std::vector<Int> full(na + nb - 1);
    karatsuba_full(a.data(), na, b.data(), nb, full, 0);
    int m = std::min(w, na + nb - 1);
    for (int i = 0; i < m; ++i) out[i] += full[i];
  } else {
    schoolbook_trunc(a, na, b, nb, out, w);
  }
}

}  // namespace

Laurent Laurent::monomial(const Rational& c, int k, int width) {
  Laurent x = zero(width);
  x.lo_ = k;
  x.num_[0] = c.num();
  x.den_ = c.den();
  return x;
}

Laurent Laurent::from_rationals(int lo, const std::vector<Rational>& c, int width) {
  Laurent x = zero(width);
  x.lo_ = lo;
  Int d(1);
  size_t n = std::min(c.size(), static_cast<size_t>(width));
  for (size_t i = 0; i < n; ++i) d = Int::lcm(d, c[i].den());
  x.den_ = d;
  for (size_t i = 0; i < n; ++i) x.num_[i] = c[i].num() * Int::divexact(d, c[i].den());
  return x;
}

bool Laurent::is_zero() const {
  for (const auto& v : num_)
    if (!v.is_zero()) return false;
  return true;
}

std::optional<int> Laurent::lowest_nonzero() const {
  for (int i = 0; i < width(); ++i)
    if (!num_[i].is_zero()) return lo_ + i;
  return std::nullopt;
}

Rational Laurent::at(int k) const {
  if (k < lo_) return Rational(0);
  if (k >= lo_ + width())
    throw Error(errc::out_of_range,
                "Laurent read at eps^" + std::to_string(k) + " above window top eps^" +
                    std::to_string(hi()));
  return Rational(num_[k - lo_], den_);
}

Laurent Laurent::rebased(int new_lo) const {
  Laurent r = zero(width());
  r.lo_ = new_lo;
  r.den_ = den_;
  for (int i = 0; i < width(); ++i) {
    int k = lo_ + i;
    if (k < new_lo) {
      if (!num_[i].is_zero())
        throw Error(errc::window_too_small, "rebase would drop nonzero coefficient");
      continue;
    }
    if (k >= new_lo + width()) break;
    r.num_[k - new_lo] = num_[i];
  }
  r.normalize();
  return r;
}

void Laurent::set_coeff(int k, const Rational& c) {
  if (k < lo_) {
    *this = rebased(k);  // throws if that loses data
  }
  if (k >= lo_ + width()) throw Error(errc::out_of_range, "set_coeff above window");
  Int d = Int::lcm(den_, c.den());
  if (!(d == den_)) {
    Int f = Int::divexact(d, den_);
    for (auto& v : num_) v *= f;
    den_ = d;
  }
  num_[k - lo_] = c.num() * Int::divexact(d, c.den());
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  assert(a.width() == b.width());
  int w = a.width();
  Laurent r = Laurent::zero(w);
  r.lo_ = std::min(a.lo_, b.lo_);
  r.den_ = Int::lcm(a.den_, b.den_);
  Int fa = Int::divexact(r.den_, a.den_);
  Int fb = Int::divexact(r.den_, b.den_);
  int oa = a.lo_ - r.lo_, ob = b.lo_ - r.lo_;
  for (int i = 0; i < w && oa + i < w; ++i) r.num_[oa + i] = a.num_[i] * fa;
  for (int i = 0; i < w && ob + i < w; ++i) r.num_[ob + i].addmul(b.num_[i], fb);
  return r;
}

Laurent operator-(const Laurent& a) {
  Laurent r = a;
  for (auto& v : r.num_) v = -v;
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent& Laurent::operator+=(const Laurent& o) {
  *this = *this + o;
  return *this;
}
Laurent& Laurent::operator-=(const Laurent& o) {
  *this = *this - o;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  assert(a.width() == b.width());
  int w = a.width();
  if (a.is_zero() || b.is_zero()) return Laurent::zero(w);
  Laurent r = Laurent::zero(w);
  r.lo_ = a.lo_ + b.lo_;
  r.den_ = a.den_ * b.den_;
  conv_trunc(a.num_, b.num_, r.num_, w);
  r.normalize();
  return r;
}

Laurent Laurent::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(width());
  Laurent r = *this;
  Int cn = c.num(), cd = c.den();
  for (auto& v : r.num_) v *= cn;
  r.den_ = r.den_ * cd;
  r.normalize();
  return r;
}

Laurent Laurent::shifted(int m) const {
  Laurent r = *this;
  r.lo_ += m;
  return r;
}

Laurent Laurent::reciprocal() const {
  auto nz = lowest_nonzero();
  if (!nz) throw Error(errc::all_zero_window, "reciprocal of all-zero window");
  int w = width();
  int i0 = *nz - lo_;
  // u = unit part: coefficients at exponents *nz .. hi
  std::vector<Rational> u(w);
  for (int i = 0; i0 + i < w; ++i) u[i] = Rational(num_[i0 + i], den_);
  std::vector<Rational> b(w);
  b[0] = u[0].inverse();
  for (int n = 1; n < w; ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) s += u[k] * b[n - k];
    b[n] = -s * b[0];
  }
  return from_rationals(-*nz, b, w);
}

Laurent Laurent::divided_by_linear(const Rational& a, const Rational& b) const {
  int w = width();
  if (a.is_zero() && b.is_zero())
    throw Error(errc::zero_omega_division, "division by identically zero linear form");
  if (b.is_zero()) return scaled(a.inverse());
  if (a.is_zero()) {
    Laurent r = scaled(b.inverse());
    r.lo_ -= 1;
    return r;
  }
  // (a + b*eps) * out = in, windows aligned at lo.
  std::vector<Rational> out(w);
  Rational prev(0);
  for (int n = 0; n < w; ++n) {
    out[n] = (Rational(num_[n], den_) - b * prev) / a;
    prev = out[n];
  }
  return from_rationals(lo_, out, w);
}

Laurent Laurent::pole_part() const {
  Laurent r = zero(width());
  r.lo_ = lo_;
  r.den_ = den_;
  bool any = false;
  for (int i = 0; i < width(); ++i) {
    if (lo_ + i < 0 && !num_[i].is_zero()) {
      r.num_[i] = num_[i];
      any = true;
    }
  }
  if (!any) return zero(width());
  r.normalize();
  return r;
}

Laurent Laurent::regular_part() const { return *this - pole_part(); }

void Laurent::normalize() {
  Int g = den_;
  for (const auto& v : num_) {
    if (mpz_cmpabs_ui(g.raw(), 1) == 0) break;
    if (!v.is_zero()) g = Int::gcd(g, v);
  }
  bool allzero = true;
  for (const auto& v : num_)
    if (!v.is_zero()) {
      allzero = false;
      break;
    }
  if (allzero) {
    den_ = Int(1);
    return;
  }
  if (mpz_cmpabs_ui(g.raw(), 1) != 0) {
    for (auto& v : num_) v = Int::divexact(v, g);
    den_ = Int::divexact(den_, g);
  }
}

bool Laurent::operator==(const Laurent& o) const {
  int klo = std::min(lo_, o.lo_);
  int khi = std::min(hi(), o.hi());
  for (int k = klo; k <= khi; ++k)
    if (at(k) != o.at(k)) return false;
  return true;
}

std::string Laurent::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < width(); ++i) {
    if (num_[i].is_zero()) continue;
    if (!first) os << "  ";
    os << "eps^" << (lo_ + i) << ": " << Rational(num_[i], den_).str();
    first = false;
  }
  if (first) return "0";
  return os.str();
}

void LaurentMulAcc::add_product(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return;
  assert(a.width() == acc_.width() && b.width() == acc_.width());
  int w = acc_.width();
  int plo = a.lo_ + b.lo_;
  Int pden = a.den_ * b.den_;
  std::vector<Int> pnum(w);
  conv_trunc(a.num_, b.num_, pnum, w);

  if (fresh_) {
    acc_.lo_ = plo;
    acc_.den_ = std::move(pden);
    acc_.num_ = std::move(pnum);
    fresh_ = false;
    return;
  }
  int nlo = std::min(acc_.lo_, plo);
  if (nlo != acc_.lo_) {
    // shift accumulator content up, dropping the window top
    int sh = acc_.lo_ - nlo;
    for (int i = w - 1; i >= 0; --i) acc_.num_[i] = (i - sh >= 0) ? acc_.num_[i - sh] : Int(0);
    acc_.lo_ = nlo;
  }
  Int nden = Int::lcm(acc_.den_, pden);
  if (!(nden == acc_.den_)) {
    Int f = Int::divexact(nden, acc_.den_);
    for (auto& v : acc_.num_) v *= f;
    acc_.den_ = nden;
  }
  Int fp = Int::divexact(acc_.den_, pden);
  int off = plo - acc_.lo_;
  bool scale = !fp.is_one();
  for (int i = 0; i + off < w; ++i) {
    if (pnum[i].is_zero()) continue;
    if (scale)
      acc_.num_[i + off].addmul(pnum[i], fp);
    else
      acc_.num_[i + off] += pnum[i];
  }
}

void LaurentMulAcc::add_scaled(const Laurent& a, const Rational& c) {
  if (a.is_zero() || c.is_zero()) return;
  Laurent unit = Laurent::constant(c, acc_.width());
  add_product(a, unit);
}

Laurent LaurentMulAcc::take() {
  acc_.normalize();
  return std::move(acc_);
}

}  // namespace trop
