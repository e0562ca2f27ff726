#include "trop/rational.hpp"

#include <ostream>

#include "trop/error.hpp"

namespace trop {

const char* errc_name(errc c) {
  switch (c) {
    case errc::all_zero_window: return "AllZeroWindow";
    case errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case errc::non_unit_linear_term: return "NonUnitLinearTerm";
    case errc::duplicate_abscissa: return "DuplicateAbscissa";
    case errc::insufficient_points: return "InsufficientPoints";
    case errc::zero_omega_division: return "ZeroOmegaDivision";
    case errc::too_many_edges: return "TooManyEdges";
    case errc::not_log_divergent: return "NotLogDivergent";
    case errc::non_quartic_vertex: return "NonQuarticVertex";
    case errc::too_large: return "TooLarge";
    case errc::massive_unsupported: return "MassiveUnsupported";
    case errc::too_many_vertices: return "TooManyVertices";
    case errc::out_of_range: return "OutOfRange";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::missing_mass_order: return "MissingMassOrder";
    case errc::residual_pole: return "ResidualPole";
    case errc::singular_system: return "SingularSystem";
    case errc::non_convergence: return "NonConvergence";
    case errc::zero_coefficient: return "ZeroCoefficient";
    case errc::gamma_pole: return "GammaPole";
    case errc::insufficient_length: return "InsufficientLength";
    case errc::parse_error: return "ParseError";
    case errc::cache_mismatch: return "CacheMismatch";
  }
  return "UnknownError";
}

Int::Int(const std::string& s) {
  if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
    mpz_clear(z_);
    mpz_init(z_);
    throw Error(errc::parse_error, "bad integer literal '" + s + "'");
  }
}

std::string Int::str() const {
  char* p = mpz_get_str(nullptr, 10, z_);
  std::string s(p);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(p, s.size() + 1);
  return s;
}

Rational::Rational(long num, long den) {
  mpq_init(q_);
  if (den == 0) throw Error(errc::parse_error, "zero denominator");
  mpq_set_si(q_, num, 1);
  Rational d;
  mpq_set_si(d.q_, den, 1);
  mpq_div(q_, q_, d.q_);
}

Rational::Rational(const Int& num, const Int& den) {
  mpq_init(q_);
  if (den.is_zero()) throw Error(errc::parse_error, "zero denominator");
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  mpq_canonicalize(q_);
}

Rational::Rational(const std::string& s) {
  mpq_init(q_);
  if (mpq_set_str(q_, s.c_str(), 10) != 0) {
    mpq_clear(q_);
    mpq_init(q_);
    throw Error(errc::parse_error, "bad rational literal '" + s + "'");
  }
  if (mpz_sgn(mpq_denref(q_)) == 0)
    throw Error(errc::parse_error, "zero denominator in '" + s + "'");
  mpq_canonicalize(q_);
}

std::string Rational::str() const {
  char* p = mpq_get_str(nullptr, 10, q_);
  std::string s(p);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(p, s.size() + 1);
  return s;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(errc::parse_error, "rational division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(errc::parse_error, "rational division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(errc::parse_error, "inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(const Rational& a, long e) {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? a : a.inverse();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace trop
