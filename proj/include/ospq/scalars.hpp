// Exact coefficient arithmetic for the osp(2n+1|2m) toolkit:
//   Rational     -- arbitrary-precision rationals (GMP-backed)
//   Sqrt2Scalar  -- the quadratic extension Q(sqrt(2)), used by the matrix realization
//   LaurentPoly  -- integer-coefficient Laurent polynomials in q
//   QScalar      -- the fraction field of Laurent polynomials, canonical form
//
// All values are immutable after construction in the sense that every
// operation returns a fresh value; nothing here holds shared mutable state.

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ospq {

using BigInt = mpz_class;

struct ScalarError : std::runtime_error {
  explicit ScalarError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Rational

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ScalarError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "p/q", with optional sign.
  static Rational parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw ScalarError("Rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw ScalarError("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
  }

  const mpq_class& raw() const { return v_; }
  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw ScalarError("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  // q^k for k of either sign; throws on 0^negative.
  Rational pow(long k) const {
    if (k == 0) return Rational(1);
    if (is_zero() && k < 0) throw ScalarError("Rational: 0 to a negative power");
    mpq_class base = k > 0 ? v_ : mpq_class(1 / v_);
    unsigned long e = static_cast<unsigned long>(k > 0 ? k : -k);
    mpq_class num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_num().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return Rational(num.get_num(), den.get_num());
  }

  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

// ---------------------------------------------------------------------------
// Sqrt2Scalar: a + b*sqrt(2) with rational a, b.  Exact field arithmetic;
// a^2 - 2 b^2 = 0 has no rational solution besides a = b = 0, so every
// nonzero element is invertible.

class Sqrt2Scalar {
 public:
  Sqrt2Scalar() : a_(0), b_(0) {}
  Sqrt2Scalar(long n) : a_(n), b_(0) {}  // NOLINT
  Sqrt2Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Sqrt2Scalar sqrt2() { return Sqrt2Scalar(Rational(0), Rational(1)); }

  const Rational& rat_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }

  Sqrt2Scalar conj() const { return Sqrt2Scalar(a_, -b_); }

  Sqrt2Scalar operator-() const { return Sqrt2Scalar(-a_, -b_); }
  Sqrt2Scalar operator+(const Sqrt2Scalar& o) const { return Sqrt2Scalar(a_ + o.a_, b_ + o.b_); }
  Sqrt2Scalar operator-(const Sqrt2Scalar& o) const { return Sqrt2Scalar(a_ - o.a_, b_ - o.b_); }
  Sqrt2Scalar operator*(const Sqrt2Scalar& o) const {
    return Sqrt2Scalar(a_ * o.a_ + Rational(2) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
  }
  Sqrt2Scalar operator/(const Sqrt2Scalar& o) const {
    if (o.is_zero()) throw ScalarError("Sqrt2Scalar: division by zero");
    Rational norm = o.a_ * o.a_ - Rational(2) * o.b_ * o.b_;
    // norm == 0 would force o == 0 over the rationals.
    Sqrt2Scalar num = *this * o.conj();
    return Sqrt2Scalar(num.a_ / norm, num.b_ / norm);
  }
  Sqrt2Scalar& operator+=(const Sqrt2Scalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Sqrt2Scalar& operator-=(const Sqrt2Scalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }

  bool operator==(const Sqrt2Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Sqrt2Scalar& o) const { return !(*this == o); }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s2 = b_.is_one() ? "sqrt2" : (b_ == Rational(-1) ? "-sqrt2" : b_.str() + "*sqrt2");
    if (a_.is_zero()) return s2;
    if (b_.sign() < 0) {
      Rational nb = -b_;
      std::string t = nb.is_one() ? "sqrt2" : nb.str() + "*sqrt2";
      return a_.str() + " - " + t;
    }
    return a_.str() + " + " + (b_.is_one() ? "sqrt2" : b_.str() + "*sqrt2");
  }

 private:
  Rational a_, b_;
};

inline Sqrt2Scalar operator*(long a, const Sqrt2Scalar& b) { return Sqrt2Scalar(a) * b; }

// ---------------------------------------------------------------------------
// LaurentPoly: finite map exponent -> nonzero integer coefficient.

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(BigInt c, int k) {
    LaurentPoly p;
    if (c != 0) p.c_[k] = std::move(c);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
  const std::map<int, BigInt>& coeffs() const { return c_; }

  int lowest_exp() const {
    if (is_zero()) throw ScalarError("LaurentPoly: lowest_exp of zero");
    return c_.begin()->first;
  }
  int highest_exp() const {
    if (is_zero()) throw ScalarError("LaurentPoly: highest_exp of zero");
    return c_.rbegin()->first;
  }
  const BigInt& leading_coeff() const {
    if (is_zero()) throw ScalarError("LaurentPoly: leading_coeff of zero");
    return c_.rbegin()->second;
  }

  LaurentPoly shifted(int k) const {  // multiply by q^k
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) {
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_[e] = c;
      } else {
        it->second += c;
        if (it->second == 0) r.c_.erase(it);
      }
    }
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_)
      for (const auto& [e2, c2] : o.c_) {
        BigInt& slot = r.c_[e1 + e2];
        slot += c1 * c2;
      }
    for (auto it = r.c_.begin(); it != r.c_.end();)
      it = (it->second == 0) ? r.c_.erase(it) : std::next(it);
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  BigInt content() const {  // gcd of coefficients, nonnegative
    BigInt g = 0;
    for (const auto& [e, c] : c_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  Rational eval(const Rational& q0) const {
    if (q0.is_zero() && !is_zero() && lowest_exp() < 0)
      throw ScalarError("LaurentPoly: evaluation at q = 0 with negative exponents");
    Rational acc(0);
    for (const auto& [e, c] : c_) acc += Rational(c, 1) * q0.pow(e);
    return acc;
  }

  // Terms rendered "c*q^k", exponents descending: "q^2 - 2*q + 1", "q^-1", "3".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      BigInt c = it->second;
      int e = it->first;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono;
      if (e == 0) {
        mono = c.get_str();
      } else {
        std::string qp = (e == 1) ? "q" : "q^" + std::to_string(e);
        mono = (c == 1) ? qp : c.get_str() + "*" + qp;
      }
      out += mono;
    }
    return out;
  }

  std::size_t term_count() const { return c_.size(); }

 private:
  std::map<int, BigInt> c_;
};

namespace detail {

// Dense ordinary polynomial helpers over Z for gcd computation.  Vectors are
// coefficient lists, index = exponent, no trailing zeros.

using ZVec = std::vector<BigInt>;

inline ZVec to_dense(const LaurentPoly& p) {
  // requires lowest_exp() == 0
  ZVec v(static_cast<std::size_t>(p.highest_exp()) + 1, BigInt(0));
  for (const auto& [e, c] : p.coeffs()) v[static_cast<std::size_t>(e)] = c;
  return v;
}

inline LaurentPoly from_dense(const ZVec& v) {
  LaurentPoly r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r = r + LaurentPoly::monomial(v[i], static_cast<int>(i));
  return r;
}

inline void trim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline BigInt vec_content(const ZVec& v) {
  BigInt g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void make_primitive(ZVec& v) {
  trim(v);
  if (v.empty()) return;
  BigInt g = vec_content(v);
  if (v.back() < 0) g = -g;  // normalize positive leading coefficient
  if (g == 1) return;
  for (auto& c : v) c /= g;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
inline ZVec pseudo_rem(ZVec a, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    std::size_t da = a.size() - 1;
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    std::size_t shift = da - db;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// gcd over Z[q] via the primitive PRS; result has positive leading coefficient.
inline LaurentPoly poly_gcd(const LaurentPoly& pa, const LaurentPoly& pb) {
  if (pa.is_zero()) return pb;
  if (pb.is_zero()) return pa;
  BigInt ca = pa.content(), cb = pb.content();
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZVec a = to_dense(pa), b = to_dense(pb);
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZVec r = pseudo_rem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  LaurentPoly g = from_dense(a);
  return g * LaurentPoly::monomial(cg, 0);
}

// Exact division a / b over Z[q]; throws if not exact (internal invariant).
inline LaurentPoly poly_div_exact(const LaurentPoly& pa, const LaurentPoly& pb) {
  if (pa.is_zero()) return LaurentPoly::zero();
  ZVec a = to_dense(pa), b = to_dense(pb);
  trim(b);
  if (b.empty()) throw ScalarError("poly_div_exact: division by zero polynomial");
  ZVec quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
  while (!a.empty() && a.size() >= b.size()) {
    BigInt c = a.back() / b.back();
    if (c * b.back() != a.back())
      throw ScalarError("poly_div_exact: inexact leading coefficient");
    std::size_t shift = a.size() - b.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) throw ScalarError("poly_div_exact: nonzero remainder");
  return from_dense(quot);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// QScalar: element of the field of rational functions in q, held as a reduced
// fraction of Laurent polynomials.  Canonical form:
//   * numerator zero  =>  denominator one;
//   * denominator is an ordinary polynomial (lowest exponent 0) with positive
//     leading coefficient;
//   * no common polynomial factor (including integer content) between the
//     q^0-aligned part of the numerator and the denominator.
// Any stray q-power lives in the numerator's exponents, so equality of
// canonical forms is plain structural equality.

class QScalar {
 public:
  QScalar() : num_(), den_(LaurentPoly::one()) {}
  QScalar(long n) : num_(LaurentPoly::monomial(n, 0)), den_(LaurentPoly::one()) {}  // NOLINT
  explicit QScalar(const Rational& r)
      : num_(LaurentPoly::monomial(r.numerator(), 0)),
        den_(LaurentPoly::monomial(r.denominator(), 0)) {}
  QScalar(LaurentPoly num, LaurentPoly den) { normalize(std::move(num), std::move(den)); }

  static QScalar q() { return q_pow(1); }
  static QScalar qbar() { return q_pow(-1); }
  static QScalar q_pow(int k) {
    QScalar s;
    s.num_ = LaurentPoly::monomial(1, k);
    return s;
  }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer_den() const { return den_.is_one(); }

  QScalar operator-() const {
    QScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  QScalar operator+(const QScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return QScalar(num_ + o.num_, den_);
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  QScalar operator-(const QScalar& o) const { return *this + (-o); }
  QScalar operator*(const QScalar& o) const {
    if (is_zero() || o.is_zero()) return QScalar();
    if (den_.is_one() && o.den_.is_one()) {
      QScalar r;
      r.num_ = num_ * o.num_;
      return r;
    }
    return QScalar(num_ * o.num_, den_ * o.den_);
  }
  QScalar operator/(const QScalar& o) const {
    if (o.is_zero()) throw ScalarError("QScalar: division by zero scalar");
    if (is_zero()) return QScalar();
    return QScalar(num_ * o.den_, den_ * o.num_);
  }
  QScalar inverse() const { return QScalar(1) / *this; }

  QScalar& operator+=(const QScalar& o) { *this = *this + o; return *this; }
  QScalar& operator-=(const QScalar& o) { *this = *this - o; return *this; }
  QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }

  bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  // Exact evaluation at q = q0; error on pole, naming the denominator.
  Rational eval(const Rational& q0) const {
    if (q0.is_zero()) throw ScalarError("QScalar: evaluation at q = 0");
    if (is_zero()) return Rational(0);
    Rational d = den_.eval(q0);
    if (d.is_zero())
      throw ScalarError("QScalar: pole at q = " + q0.str() + " (denominator " + den_.str() +
                        " vanishes)");
    return num_.eval(q0) / d;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const std::string& s) {
      return s.find(' ') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_.str()) + " / " + wrap(den_.str());
  }

  // True when the value is c*q^k; used by renderers for parenthesization.
  bool is_monomial() const { return den_.is_one() && num_.term_count() == 1; }

 private:
  void normalize(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw ScalarError("QScalar: zero denominator");
    if (num.is_zero()) {
      num_ = LaurentPoly::zero();
      den_ = LaurentPoly::one();
      return;
    }
    int a = num.lowest_exp();
    int b = den.lowest_exp();
    LaurentPoly nu = num.shifted(-a);
    LaurentPoly de = den.shifted(-b);
    LaurentPoly g = detail::poly_gcd(nu, de);
    if (!g.is_one()) {
      nu = detail::poly_div_exact(nu, g);
      de = detail::poly_div_exact(de, g);
    }
    if (de.leading_coeff() < 0) {
      nu = -nu;
      de = -de;
    }
    num_ = nu.shifted(a - b);
    den_ = de;
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline QScalar operator*(long a, const QScalar& b) { return QScalar(a) * b; }

}  // namespace ospq
