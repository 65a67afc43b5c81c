// The free associative Z2-graded algebra over a fixed generator alphabet:
// graded symbols, words, formal sums with scalar coefficients, and the three
// bracket operations [x,y]_w, {x,y}_w, [[x,y]]_w.
//
// Words are totally ordered by length first, then position-wise by
// (kind, index).  The kind order places the f-sector below kbar, k and e, so
// the same comparator doubles as the monomial order of the rewriting engine
// (normal words sort as f-letters, kbar/k-letters, e-letters).

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ospq/scalars.hpp"

namespace ospq {

struct AlgebraError : std::runtime_error {
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

enum class HomogeneityClass { Even, Odd, Mixed };

// m pairs of para-Bose generators, n pairs of para-Fermi generators.
// The grading <i> is odd for i <= m and even for i > m.
struct AlgebraSignature {
  int m = 1;
  int n = 1;

  AlgebraSignature() = default;
  AlgebraSignature(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw AlgebraError("AlgebraSignature: require m >= 1 and n >= 1");
  }

  int N() const { return m + n; }
  Parity grade(int i) const { return i <= m ? Parity::Odd : Parity::Even; }
  int grade_sign(int i) const { return i <= m ? -1 : 1; }  // (-1)^<i>
};

// Kind values fix the rewrite alphabet order: f < kbar < k < e.  The
// remaining kinds only appear outside the Chevalley rewriting alphabet.
enum class Kind : std::uint8_t {
  F = 0,
  KBar = 1,
  K = 2,
  E = 3,
  H = 4,
  LBar = 5,
  L = 6,
  AMinus = 7,
  APlus = 8,
  X = 9,  // abstract letter with user-assigned parity
};

struct GeneratorSymbol {
  Kind kind = Kind::X;
  std::int16_t index = 0;
  Parity parity = Parity::Even;

  friend bool operator==(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    return a.kind == b.kind && a.index == b.index && a.parity == b.parity;
  }
  friend bool operator!=(const GeneratorSymbol& a, const GeneratorSymbol& b) { return !(a == b); }
  friend bool operator<(const GeneratorSymbol& a, const GeneratorSymbol& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    return a.parity < b.parity;
  }

  std::string str() const {
    switch (kind) {
      case Kind::E: return "e" + std::to_string(index);
      case Kind::F: return "f" + std::to_string(index);
      case Kind::K: return "k" + std::to_string(index);
      case Kind::KBar: return "kb" + std::to_string(index);
      case Kind::L: return "L" + std::to_string(index);
      case Kind::LBar: return "Lb" + std::to_string(index);
      case Kind::H: return "h" + std::to_string(index);
      case Kind::APlus: return "a+" + std::to_string(index);
      case Kind::AMinus: return "a-" + std::to_string(index);
      case Kind::X: return "x" + std::to_string(index);
    }
    return "?";
  }
};

inline void check_index(const AlgebraSignature& sig, int i, const char* what) {
  if (i < 1 || i > sig.N())
    throw AlgebraError(std::string(what) + std::to_string(i) + ": index out of range 1.." +
                       std::to_string(sig.N()));
}

// deg(e_i) = deg(f_i) = odd exactly at the node i = m.
inline GeneratorSymbol sym_e(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "e");
  return {Kind::E, static_cast<std::int16_t>(i), i == sig.m ? Parity::Odd : Parity::Even};
}
inline GeneratorSymbol sym_f(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "f");
  return {Kind::F, static_cast<std::int16_t>(i), i == sig.m ? Parity::Odd : Parity::Even};
}
inline GeneratorSymbol sym_k(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "k");
  return {Kind::K, static_cast<std::int16_t>(i), Parity::Even};
}
inline GeneratorSymbol sym_kbar(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "kb");
  return {Kind::KBar, static_cast<std::int16_t>(i), Parity::Even};
}
inline GeneratorSymbol sym_L(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "L");
  return {Kind::L, static_cast<std::int16_t>(i), Parity::Even};
}
inline GeneratorSymbol sym_Lbar(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "Lb");
  return {Kind::LBar, static_cast<std::int16_t>(i), Parity::Even};
}
inline GeneratorSymbol sym_h(const AlgebraSignature& sig, int i) {
  check_index(sig, i, "h");
  return {Kind::H, static_cast<std::int16_t>(i), Parity::Even};
}
// deg(a_i^+-) = <i>
inline GeneratorSymbol sym_a(const AlgebraSignature& sig, int i, int sign) {
  check_index(sig, i, "a");
  return {sign > 0 ? Kind::APlus : Kind::AMinus, static_cast<std::int16_t>(i), sig.grade(i)};
}
inline GeneratorSymbol sym_abstract(int index, Parity p) {
  return {Kind::X, static_cast<std::int16_t>(index), p};
}

// ---------------------------------------------------------------------------
// SuperWord

class SuperWord {
 public:
  SuperWord() = default;
  explicit SuperWord(std::vector<GeneratorSymbol> letters) : letters_(std::move(letters)) {}
  SuperWord(std::initializer_list<GeneratorSymbol> letters) : letters_(letters) {}

  static SuperWord empty() { return SuperWord(); }

  std::size_t size() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  const std::vector<GeneratorSymbol>& letters() const { return letters_; }
  const GeneratorSymbol& at(std::size_t i) const { return letters_[i]; }

  Parity parity() const {
    int p = 0;
    for (const auto& g : letters_) p ^= static_cast<int>(g.parity);
    return static_cast<Parity>(p);
  }

  SuperWord concat(const SuperWord& o) const {
    std::vector<GeneratorSymbol> v = letters_;
    v.insert(v.end(), o.letters_.begin(), o.letters_.end());
    return SuperWord(std::move(v));
  }

  bool matches_at(const SuperWord& pattern, std::size_t pos) const {
    if (pos + pattern.size() > size()) return false;
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (!(letters_[pos + i] == pattern.letters_[i])) return false;
    return true;
  }

  SuperWord subword(std::size_t pos, std::size_t len) const {
    return SuperWord(std::vector<GeneratorSymbol>(letters_.begin() + pos,
                                                  letters_.begin() + pos + len));
  }

  // Replace the segment [pos, pos+len) by another word.
  SuperWord splice(std::size_t pos, std::size_t len, const SuperWord& repl) const {
    std::vector<GeneratorSymbol> v;
    v.reserve(letters_.size() - len + repl.size());
    v.insert(v.end(), letters_.begin(), letters_.begin() + pos);
    v.insert(v.end(), repl.letters_.begin(), repl.letters_.end());
    v.insert(v.end(), letters_.begin() + pos + len, letters_.end());
    return SuperWord(std::move(v));
  }

  friend bool operator==(const SuperWord& a, const SuperWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const SuperWord& a, const SuperWord& b) { return !(a == b); }

  // Length first, then lexicographic by (kind, index).
  friend bool operator<(const SuperWord& a, const SuperWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.letters_[i] < b.letters_[i]) return true;
      if (b.letters_[i] < a.letters_[i]) return false;
    }
    return false;
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += "*";
      out += letters_[i].str();
    }
    return out;
  }

 private:
  std::vector<GeneratorSymbol> letters_;
};

// ---------------------------------------------------------------------------
// Element: finite formal sum of words with nonzero scalar coefficients.

template <class S>
class Element {
 public:
  using TermMap = std::map<SuperWord, S>;

  Element() = default;

  static Element zero() { return Element(); }
  static Element unit(const S& c) { return word(SuperWord::empty(), c); }
  static Element word(const SuperWord& w, const S& c = S(1)) {
    Element e;
    if (!c.is_zero()) e.t_[w] = c;
    return e;
  }
  static Element letter(const GeneratorSymbol& g, const S& c = S(1)) {
    return word(SuperWord({g}), c);
  }

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }

  // Coefficient of a word (zero if absent).
  S coeff(const SuperWord& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? S(0) : it->second;
  }

  void add_term(const SuperWord& w, const S& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Element operator-() const {
    Element r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
  }
  Element operator+(const Element& o) const {
    Element r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, c);
    return r;
  }
  Element operator-(const Element& o) const {
    Element r = *this;
    for (const auto& [w, c] : o.t_) r.add_term(w, -c);
    return r;
  }
  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }

  Element scaled(const S& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : t_) {
      S p = k * c;
      if (!p.is_zero()) r.t_.emplace(w, p);
    }
    return r;
  }

  // Bilinear extension of word concatenation.
  Element operator*(const Element& o) const {
    Element r;
    for (const auto& [w1, c1] : t_)
      for (const auto& [w2, c2] : o.t_) r.add_term(w1.concat(w2), c1 * c2);
    return r;
  }

  bool operator==(const Element& o) const { return t_ == o.t_; }
  bool operator!=(const Element& o) const { return t_ != o.t_; }

  // Even/Odd when every word shares that parity; zero reports Even.
  HomogeneityClass parity_of() const {
    if (t_.empty()) return HomogeneityClass::Even;
    Parity p = t_.begin()->first.parity();
    for (const auto& [w, c] : t_)
      if (w.parity() != p) return HomogeneityClass::Mixed;
    return p == Parity::Even ? HomogeneityClass::Even : HomogeneityClass::Odd;
  }

  Element component(Parity p) const {
    Element r;
    for (const auto& [w, c] : t_)
      if (w.parity() == p) r.t_.emplace(w, c);
    return r;
  }

  std::size_t max_word_length() const {
    std::size_t n = 0;
    for (const auto& [w, c] : t_) n = std::max(n, w.size());
    return n;
  }

  // Largest term under the word order; element must be nonzero.
  const std::pair<const SuperWord, S>& leading_term() const {
    if (t_.empty()) throw AlgebraError("Element: leading_term of zero");
    return *t_.rbegin();
  }

  // Remove and return the largest term.
  std::pair<SuperWord, S> pop_leading() {
    if (t_.empty()) throw AlgebraError("Element: pop_leading of zero");
    auto it = std::prev(t_.end());
    std::pair<SuperWord, S> out = *it;
    t_.erase(it);
    return out;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : t_) {
      // Split a leading minus off the coefficient for readable joins.
      S cc = c;
      bool neg = false;
      std::string cs = cc.str();
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cc = -cc;
        cs = cc.str();
      }
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
      std::string coeff_part = needs_parens ? "(" + cs + ")" : cs;
      if (w.is_empty()) {
        out += coeff_part;
      } else if (cc.is_one()) {
        out += w.str();
      } else {
        out += coeff_part + "*" + w.str();
      }
    }
    return out;
  }

 private:
  TermMap t_;
};

template <class S>
inline Element<S> operator*(const S& c, const Element<S>& e) {
  return e.scaled(c);
}

// ---------------------------------------------------------------------------
// Brackets.  [x,y]_w = xy - w yx;  {x,y}_w = xy + w yx;
// [[x,y]]_w = xy - (-1)^(deg x deg y) w yx, extended bilinearly over the
// homogeneous components of both arguments.

enum class BracketKind { Commutator, Anticommutator, Super };

template <class S>
Element<S> bracket_comm(const Element<S>& x, const Element<S>& y, const S& w = S(1)) {
  return x * y - (y * x).scaled(w);
}

template <class S>
Element<S> bracket_anti(const Element<S>& x, const Element<S>& y, const S& w = S(1)) {
  return x * y + (y * x).scaled(w);
}

template <class S>
Element<S> bracket_super(const Element<S>& x, const Element<S>& y, const S& w = S(1)) {
  Element<S> r;
  for (int px = 0; px < 2; ++px) {
    Element<S> xc = x.component(static_cast<Parity>(px));
    if (xc.is_zero()) continue;
    for (int py = 0; py < 2; ++py) {
      Element<S> yc = y.component(static_cast<Parity>(py));
      if (yc.is_zero()) continue;
      S ww = (px & py) ? -w : w;
      r += xc * yc - (yc * xc).scaled(ww);
    }
  }
  return r;
}

template <class S>
Element<S> bracket(BracketKind kind, const Element<S>& x, const Element<S>& y, const S& w = S(1)) {
  switch (kind) {
    case BracketKind::Commutator: return bracket_comm(x, y, w);
    case BracketKind::Anticommutator: return bracket_anti(x, y, w);
    case BracketKind::Super: return bracket_super(x, y, w);
  }
  throw AlgebraError("bracket: bad kind");
}

// ---------------------------------------------------------------------------
// RootTwoElement: a pair u + sqrt(2) v of elements.  The conversion images of
// the Green generators carry a single sqrt(2) each; sums and products of such
// images live in this rank-2 module over the base scalar field.

template <class S>
struct RootTwoElement {
  Element<S> rat;   // rational part
  Element<S> irr;   // coefficient of sqrt(2)

  static RootTwoElement from(const Element<S>& e) { return {e, Element<S>::zero()}; }
  static RootTwoElement from_sqrt2(const Element<S>& e) { return {Element<S>::zero(), e}; }

  bool is_zero() const { return rat.is_zero() && irr.is_zero(); }

  RootTwoElement operator-() const { return {-rat, -irr}; }
  RootTwoElement operator+(const RootTwoElement& o) const { return {rat + o.rat, irr + o.irr}; }
  RootTwoElement operator-(const RootTwoElement& o) const { return {rat - o.rat, irr - o.irr}; }
  RootTwoElement operator*(const RootTwoElement& o) const {
    return {rat * o.rat + (irr * o.irr).scaled(S(2)), rat * o.irr + irr * o.rat};
  }
  RootTwoElement scaled(const S& c) const { return {rat.scaled(c), irr.scaled(c)}; }
  RootTwoElement mul_sqrt2() const { return {irr.scaled(S(2)), rat}; }

  bool operator==(const RootTwoElement& o) const { return rat == o.rat && irr == o.irr; }

  std::size_t max_word_length() const {
    return std::max(rat.max_word_length(), irr.max_word_length());
  }

  std::string str() const {
    if (is_zero()) return "0";
    if (irr.is_zero()) return rat.str();
    std::string s = "sqrt2*(" + irr.str() + ")";
    if (rat.is_zero()) return s;
    return rat.str() + " + " + s;
  }
};

}  // namespace ospq
