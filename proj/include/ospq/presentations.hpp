// Construction of the defining presentations of U[osp(2n+1|2m)] and its
// q-deformation: the Cartan matrix, the Chevalley presentation (Cartan-Kac
// plus Serre relations), the Green-generator presentation, the explicit
// conversion formulas between the two generator systems, and the root
// assignment of the Green generators.
//
// Every relation is stored as a single element LHS - RHS of the free graded
// algebra, so "the relation holds" always means "this element maps to zero".

#pragma once

#include <string>
#include <vector>

#include "ospq/free_algebra.hpp"
#include "ospq/scalars.hpp"

namespace ospq {

// ---------------------------------------------------------------------------
// Cartan matrix, entries
//   a_ij = (-1)^<j> d_{i+1,j} + (-1)^<i> d_{i,j+1}
//          - [(-1)^<j+1> + (-1)^<j>] d_ij + d_{iN} d_{jN}
// with <i> odd for i <= m.  The boundary value <N+1> is even, which is what
// the closed formula needs at the corner entry.

struct CartanMatrix {
  int N = 0;
  std::vector<int> entries;  // row-major, N*N

  int at(int i, int j) const { return entries[static_cast<std::size_t>((i - 1) * N + (j - 1))]; }

  bool symmetric() const {
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }
};

inline CartanMatrix cartan_matrix(const AlgebraSignature& sig) {
  const int N = sig.N();
  auto s = [&](int i) { return i <= sig.m ? -1 : 1; };  // (-1)^<i>, any i >= 1
  CartanMatrix cm;
  cm.N = N;
  cm.entries.assign(static_cast<std::size_t>(N) * N, 0);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      int v = 0;
      if (j == i + 1) v += s(j);
      if (i == j + 1) v += s(i);
      if (i == j) v -= s(j + 1) + s(j);
      if (i == N && j == N) v += 1;
      cm.entries[static_cast<std::size_t>((i - 1) * N + (j - 1))] = v;
    }
  return cm;
}

// ---------------------------------------------------------------------------
// Presentations

struct Relation {
  std::string name;
  Element<QScalar> element;  // LHS - RHS
  int sqrt2_exponent = 0;    // parity of the sqrt(2) power cleared from the relation
};

struct Presentation {
  AlgebraSignature sig;
  bool deformed = false;
  bool green = false;  // false: Chevalley generators, true: Green generators
  std::vector<GeneratorSymbol> generators;
  std::vector<Relation> relations;

  const Relation* find(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
};

namespace detail {

inline std::string idx2(int i, int j) {
  return "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}
inline std::string sgn_str(int s) { return s > 0 ? "+" : "-"; }

}  // namespace detail

// The Lusztig-style weights of the conversion formulas: q_i = qbar below the
// node m, q_i = q from m on.  The index 0 (reached by the i = 1 instances of
// the q_{i-1} weights) falls in the first branch.
inline QScalar conversion_weight(const AlgebraSignature& sig, int i) {
  return i < sig.m ? QScalar::qbar() : QScalar::q();
}

// ---------------------------------------------------------------------------
// Chevalley presentations.

inline Presentation chevalley_presentation(const AlgebraSignature& sig, bool deformed) {
  using El = Element<QScalar>;
  const int N = sig.N();
  const int m = sig.m;
  const CartanMatrix cm = cartan_matrix(sig);
  const QScalar q = QScalar::q(), qb = QScalar::qbar();

  Presentation p;
  p.sig = sig;
  p.deformed = deformed;
  p.green = false;

  auto E = [&](int i) { return El::letter(sym_e(sig, i)); };
  auto F = [&](int i) { return El::letter(sym_f(sig, i)); };

  auto add = [&](const std::string& name, El el) {
    if (el.is_zero()) return;  // vacuous instances (e.g. [[e_i,e_i]] for even e_i)
    p.relations.push_back({name, std::move(el), 0});
  };

  for (int i = 1; i <= N; ++i) {
    p.generators.push_back(sym_e(sig, i));
    p.generators.push_back(sym_f(sig, i));
  }
  if (deformed) {
    for (int i = 1; i <= N; ++i) {
      p.generators.push_back(sym_k(sig, i));
      p.generators.push_back(sym_kbar(sig, i));
    }
  } else {
    for (int i = 1; i <= N; ++i) p.generators.push_back(sym_h(sig, i));
  }

  if (deformed) {
    auto K = [&](int i) { return El::letter(sym_k(sig, i)); };
    auto Kb = [&](int i) { return El::letter(sym_kbar(sig, i)); };
    const QScalar one(1);
    for (int i = 1; i <= N; ++i) {
      add("ck-kkbar[" + std::to_string(i) + "]", K(i) * Kb(i) - El::unit(one));
      add("ck-kbark[" + std::to_string(i) + "]", Kb(i) * K(i) - El::unit(one));
    }
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j)
        add("ck-kk" + detail::idx2(i, j), K(i) * K(j) - K(j) * K(i));
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        add("ck-ke" + detail::idx2(i, j),
            K(i) * E(j) - (E(j) * K(i)).scaled(QScalar::q_pow(cm.at(i, j))));
        add("ck-kf" + detail::idx2(i, j),
            K(i) * F(j) - (F(j) * K(i)).scaled(QScalar::q_pow(-cm.at(i, j))));
      }
    const QScalar hdiv = (q - qb).inverse();
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        El rel = bracket_super(E(i), F(j));
        if (i == j) rel -= (K(i) - Kb(i)).scaled(hdiv);
        add("ck-ef" + detail::idx2(i, j), rel);
      }
  } else {
    auto H = [&](int i) { return El::letter(sym_h(sig, i)); };
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j)
        add("ck-hh" + detail::idx2(i, j), bracket_comm(H(i), H(j)));
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        add("ck-he" + detail::idx2(i, j),
            bracket_comm(H(i), E(j)) - E(j).scaled(QScalar(cm.at(i, j))));
        add("ck-hf" + detail::idx2(i, j),
            bracket_comm(H(i), F(j)) + F(j).scaled(QScalar(cm.at(i, j))));
        El rel = bracket_super(E(i), F(j));
        if (i == j) rel -= H(i);
        add("ck-ef" + detail::idx2(i, j), rel);
      }
  }

  // Serre relations for one letter family (e or f).
  auto serre = [&](const char* tag, auto G) {
    if (deformed) {
      // (x1): [[G_i,G_j]] = 0 for |i-j| != 1 (covers G_m^2 = 0 at i = j = m)
      for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j)
          if (j - i != 1) add(std::string(tag) + "-serre-1" + detail::idx2(i, j),
                              bracket_super(G(i), G(j)));
      // (x2): [G_i,[G_i,G_{i+-1}]_qb]_q = 0 for i != m, i != N
      for (int i = 1; i < N; ++i) {
        if (i == m) continue;
        for (int dj : {-1, +1}) {
          int j = i + dj;
          if (j < 1 || j > N) continue;
          add(std::string(tag) + "-serre-2" + detail::idx2(i, j),
              bracket_comm(G(i), bracket_comm(G(i), G(j), qb), q));
        }
      }
      // (x3): {[G_m,G_{m-1}]_q, [G_m,G_{m+1}]_qb} = 0; needs m >= 2
      if (m >= 2)
        add(std::string(tag) + "-serre-3",
            bracket_anti(bracket_comm(G(m), G(m - 1), q), bracket_comm(G(m), G(m + 1), qb)));
      // (x4): [G_N,[G_N,[G_N,G_{N-1}]_qb]]_q = 0
      add(std::string(tag) + "-serre-4",
          bracket_comm(G(N), bracket_comm(G(N), bracket_comm(G(N), G(N - 1), qb)), q));
    } else {
      for (int i = 1; i <= N; ++i)
        for (int j = i + 2; j <= N; ++j)
          add(std::string(tag) + "-serre-1" + detail::idx2(i, j), bracket_comm(G(i), G(j)));
      for (int i = 1; i < N; ++i)
        for (int dj : {-1, +1}) {
          int j = i + dj;
          if (j < 1 || j > N) continue;
          add(std::string(tag) + "-serre-2" + detail::idx2(i, j),
              bracket_super(G(i), bracket_comm(G(i), G(j))));
        }
      if (m >= 2)
        add(std::string(tag) + "-serre-3",
            bracket_anti(bracket_comm(G(m - 1), G(m)), bracket_comm(G(m), G(m + 1))));
      add(std::string(tag) + "-serre-4",
          bracket_comm(G(N), bracket_comm(G(N), bracket_comm(G(N), G(N - 1)))));
    }
  };
  serre("e", E);
  serre("f", F);
  return p;
}

// ---------------------------------------------------------------------------
// Green presentations.

inline Presentation green_presentation(const AlgebraSignature& sig, bool deformed) {
  using El = Element<QScalar>;
  const int N = sig.N();
  const QScalar q = QScalar::q(), qb = QScalar::qbar();

  Presentation p;
  p.sig = sig;
  p.deformed = deformed;
  p.green = true;

  auto A = [&](int i, int s) { return El::letter(sym_a(sig, i, s)); };
  for (int i = 1; i <= N; ++i) {
    p.generators.push_back(sym_a(sig, i, +1));
    p.generators.push_back(sym_a(sig, i, -1));
  }
  if (deformed)
    for (int i = 1; i <= N; ++i) {
      p.generators.push_back(sym_L(sig, i));
      p.generators.push_back(sym_Lbar(sig, i));
    }

  if (deformed) {
    auto L = [&](int i) { return El::letter(sym_L(sig, i)); };
    auto Lb = [&](int i) { return El::letter(sym_Lbar(sig, i)); };
    const QScalar one(1);

    for (int i = 1; i <= N; ++i) {
      p.relations.push_back({"green-1a[" + std::to_string(i) + "]",
                             L(i) * Lb(i) - El::unit(one), 0});
      p.relations.push_back({"green-1b[" + std::to_string(i) + "]",
                             Lb(i) * L(i) - El::unit(one), 0});
    }
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j)
        p.relations.push_back({"green-1c" + detail::idx2(i, j), L(i) * L(j) - L(j) * L(i), 0});

    // L_i a_j^s = q^(s d_ij (-1)^<i>) a_j^s L_i
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int s : {+1, -1}) {
          int expo = (i == j) ? s * sig.grade_sign(i) : 0;
          p.relations.push_back(
              {"green-2" + detail::idx2(i, j) + detail::sgn_str(s),
               L(i) * A(j, s) - (A(j, s) * L(i)).scaled(QScalar::q_pow(expo)), 1});
        }

    // [[a_i^-, a_i^+]] = -2 (L_i - Lbar_i)/(q - qbar)
    const QScalar two_over = QScalar(2) / (q - qb);
    for (int i = 1; i <= N; ++i)
      p.relations.push_back({"green-3[" + std::to_string(i) + "]",
                             bracket_super(A(i, -1), A(i, +1)) + (L(i) - Lb(i)).scaled(two_over),
                             0});

    // [[ [[a_i^eta, a_{i+xi}^-eta]], a_j^eta ]]_{q^(-xi (-1)^<i> d_ij)}
    //   = 2 eta^<j> d_{j,i+xi} L_j^{-xi eta} a_i^eta
    for (int xi : {+1, -1})
      for (int i = 1; i <= N; ++i) {
        int ip = i + xi;
        if (ip < 1 || ip > N) continue;
        for (int j = 1; j <= N; ++j)
          for (int eta : {+1, -1}) {
            QScalar w = (i == j) ? QScalar::q_pow(-xi * sig.grade_sign(i)) : QScalar(1);
            El lhs = bracket_super(bracket_super(A(i, eta), A(ip, -eta)), A(j, eta), w);
            El rel = lhs;
            if (j == ip) {
              long c = 2 * (sig.grade(j) == Parity::Odd ? eta : 1);
              GeneratorSymbol Lj = (-xi * eta) > 0 ? sym_L(sig, j) : sym_Lbar(sig, j);
              rel -= (El::letter(Lj) * A(i, eta)).scaled(QScalar(c));
            }
            p.relations.push_back({"green-4[" + std::to_string(i) + "," +
                                       detail::sgn_str(xi) + "1," + std::to_string(j) + "," +
                                       detail::sgn_str(eta) + "]",
                                   rel, 1});
          }
      }

    // [[a_{N-1}^xi, a_N^xi], a_N^xi]_qb = 0
    for (int xi : {+1, -1})
      p.relations.push_back(
          {"green-5[" + detail::sgn_str(xi) + "]",
           bracket_comm(bracket_comm(A(N - 1, xi), A(N, xi)), A(N, xi), qb), 1});
  } else {
    // (24): [[ [[a_i^eta, a_j^-eta]], a_k^eta ]] = 2 eta^<k> d_jk a_i^eta, |i-j| <= 1
    for (int i = 1; i <= N; ++i)
      for (int j = std::max(1, i - 1); j <= std::min(N, i + 1); ++j)
        for (int k = 1; k <= N; ++k)
          for (int eta : {+1, -1}) {
            El rel = bracket_super(bracket_super(A(i, eta), A(j, -eta)), A(k, eta));
            if (k == j) {
              long c = 2 * (sig.grade(k) == Parity::Odd ? eta : 1);
              rel -= A(i, eta).scaled(QScalar(c));
            }
            p.relations.push_back({"green-24[" + std::to_string(i) + "," + std::to_string(j) +
                                       "," + std::to_string(k) + "," + detail::sgn_str(eta) + "]",
                                   rel, 1});
          }
    for (int eta : {+1, -1})
      p.relations.push_back(
          {"green-24N[" + detail::sgn_str(eta) + "]",
           bracket_comm(bracket_comm(A(N - 1, eta), A(N, eta)), A(N, eta)), 1});
  }
  return p;
}

// ---------------------------------------------------------------------------
// Conversion formulas.
//
// A GreenImage is a value sqrt(2)^sqrt2_power * value; the engine never mixes
// the two components, so value stays over the plain q-scalar field.

struct GreenImage {
  Element<QScalar> value;
  int sqrt2_power = 0;

  RootTwoElement<QScalar> as_root_two() const {
    RootTwoElement<QScalar> r = RootTwoElement<QScalar>::from(value);
    int p = sqrt2_power;
    // fold sqrt(2)^p: even part scales by 2^(p/2), odd part keeps one sqrt(2)
    while (p >= 2) { r = r.scaled(QScalar(2)); p -= 2; }
    while (p <= -2) { r = r.scaled(QScalar(Rational(1, 2))); p += 2; }
    if (p == 1) r = r.mul_sqrt2();
    if (p == -1) r = r.mul_sqrt2().scaled(QScalar(Rational(1, 2)));  // 1/sqrt2 = sqrt2/2
    return r;
  }
};

// a_i^- as nested brackets in e_i..e_N; a_i^+ as nested brackets in f_i..f_N.
// The returned value carries sqrt2_power = 1.
inline GreenImage green_from_chevalley(const AlgebraSignature& sig, int i, int sign,
                                       bool deformed) {
  using El = Element<QScalar>;
  check_index(sig, i, "a");
  const int N = sig.N();
  GreenImage img;
  img.sqrt2_power = 1;

  if (sign < 0) {
    // a_i^- = (-1)^((m-i)<i>) sqrt2 [e_i,[e_{i+1},[...,[e_{N-1},e_N]_{q_{N-1}}]...]_{q_i}
    El acc = El::letter(sym_e(sig, N));
    for (int j = N - 1; j >= i; --j) {
      QScalar w = deformed ? conversion_weight(sig, j) : QScalar(1);
      acc = bracket_comm(El::letter(sym_e(sig, j)), acc, w);
    }
    bool negate = (i <= sig.m) && (((sig.m - i) % 2) == 1);
    img.value = negate ? -acc : acc;
    return img;
  }

  if (deformed) {
    // a_i^+ = (-1)^(N-i+1) sqrt2 [[..[f_N,f_{N-1}]_{qb_{N-1}},..]_{qb_{i+1}},f_i]_{qb_i}
    El acc = El::letter(sym_f(sig, N));
    for (int j = N - 1; j >= i; --j)
      acc = bracket_comm(acc, El::letter(sym_f(sig, j)), conversion_weight(sig, j).inverse());
    bool negate = ((N - i + 1) % 2) == 1;
    img.value = negate ? -acc : acc;
    return img;
  }

  // classical: a_i^+ = -sqrt2 [f_i,[f_{i+1},[...,[f_{N-1},f_N]]...]]
  El acc = El::letter(sym_f(sig, N));
  for (int j = N - 1; j >= i; --j) acc = bracket_comm(El::letter(sym_f(sig, j)), acc);
  img.value = -acc;
  return img;
}

// L_i = k_i k_{i+1} ... k_N; the inverse as the ascending kbar word.
inline SuperWord chevalley_word_for_L(const AlgebraSignature& sig, int i, bool bar) {
  check_index(sig, i, "L");
  std::vector<GeneratorSymbol> v;
  for (int j = i; j <= sig.N(); ++j) v.push_back(bar ? sym_kbar(sig, j) : sym_k(sig, j));
  return SuperWord(std::move(v));
}

enum class ChevalleyGenerator { H, E, F, K };

// The Chevalley generators written in the Green alphabet (a's and L's).
inline GreenImage chevalley_from_green(const AlgebraSignature& sig, ChevalleyGenerator which,
                                       int i, bool deformed) {
  using El = Element<QScalar>;
  check_index(sig, i, "generator ");
  const int N = sig.N();
  const QScalar half(Rational(1, 2));
  auto A = [&](int j, int s) { return El::letter(sym_a(sig, j, s)); };

  GreenImage img;
  switch (which) {
    case ChevalleyGenerator::K: {
      if (!deformed) throw AlgebraError("chevalley_from_green: k_i only exists when deformed");
      if (i < N)
        img.value = El::letter(sym_L(sig, i)) * El::letter(sym_Lbar(sig, i + 1));
      else
        img.value = El::letter(sym_L(sig, N));
      return img;
    }
    case ChevalleyGenerator::H: {
      if (deformed) throw AlgebraError("chevalley_from_green: h_i only exists classically");
      if (i < N)
        img.value = bracket_super(A(i + 1, -1), A(i + 1, +1)).scaled(half) -
                    bracket_super(A(i, -1), A(i, +1)).scaled(half);
      else
        img.value = -bracket_super(A(N, -1), A(N, +1)).scaled(half);
      return img;
    }
    case ChevalleyGenerator::E: {
      if (i < N) {
        El br = bracket_super(A(i, -1), A(i + 1, +1)).scaled(half);
        img.value = deformed ? El::letter(sym_Lbar(sig, i + 1)) * br : br;
      } else {
        img.value = A(N, -1);
        img.sqrt2_power = -1;  // e_N = (1/sqrt2) a_N^-
      }
      return img;
    }
    case ChevalleyGenerator::F: {
      if (i < N) {
        El br = bracket_super(A(i, +1), A(i + 1, -1)).scaled(half);
        img.value = deformed ? br * El::letter(sym_L(sig, i + 1)) : br;
      } else {
        img.value = -A(N, +1);
        img.sqrt2_power = -1;  // f_N = -(1/sqrt2) a_N^+
      }
      return img;
    }
  }
  throw AlgebraError("chevalley_from_green: bad generator");
}

// ---------------------------------------------------------------------------
// Substitution of the Green alphabet by its Chevalley images.  Elements over
// the mixed alphabet (a's, L's, and Chevalley letters) map into the rank-2
// module Element + sqrt2*Element over the Chevalley alphabet.

class GreenSubstitution {
 public:
  explicit GreenSubstitution(const AlgebraSignature& sig, bool deformed = true) : sig_(sig) {
    const int N = sig.N();
    aplus_.reserve(N);
    aminus_.reserve(N);
    for (int i = 1; i <= N; ++i) {
      aplus_.push_back(green_from_chevalley(sig, i, +1, deformed).as_root_two());
      aminus_.push_back(green_from_chevalley(sig, i, -1, deformed).as_root_two());
      lword_.push_back(RootTwoElement<QScalar>::from(
          Element<QScalar>::word(chevalley_word_for_L(sig, i, false))));
      lbarword_.push_back(RootTwoElement<QScalar>::from(
          Element<QScalar>::word(chevalley_word_for_L(sig, i, true))));
    }
  }

  RootTwoElement<QScalar> letter_image(const GeneratorSymbol& g) const {
    switch (g.kind) {
      case Kind::APlus: return aplus_[static_cast<std::size_t>(g.index - 1)];
      case Kind::AMinus: return aminus_[static_cast<std::size_t>(g.index - 1)];
      case Kind::L: return lword_[static_cast<std::size_t>(g.index - 1)];
      case Kind::LBar: return lbarword_[static_cast<std::size_t>(g.index - 1)];
      case Kind::E:
      case Kind::F:
      case Kind::K:
      case Kind::KBar:
        return RootTwoElement<QScalar>::from(Element<QScalar>::letter(g));
      default:
        throw AlgebraError("GreenSubstitution: no image for letter " + g.str());
    }
  }

  RootTwoElement<QScalar> apply(const Element<QScalar>& x) const {
    RootTwoElement<QScalar> acc;
    for (const auto& [w, c] : x.terms()) {
      RootTwoElement<QScalar> prod =
          RootTwoElement<QScalar>::from(Element<QScalar>::unit(QScalar(1)));
      for (const auto& g : w.letters()) prod = prod * letter_image(g);
      acc = acc + prod.scaled(c);
    }
    return acc;
  }

  RootTwoElement<QScalar> apply(const RootTwoElement<QScalar>& x) const {
    return apply(x.rat) + apply(x.irr).mul_sqrt2();
  }

 private:
  AlgebraSignature sig_;
  std::vector<RootTwoElement<QScalar>> aplus_, aminus_, lword_, lbarword_;
};

// ---------------------------------------------------------------------------
// Root system correspondence.  Roots are integer vectors over the orthogonal
// basis eps_1..eps_N.

struct Root {
  std::vector<int> coeff;

  bool operator==(const Root& o) const { return coeff == o.coeff; }
  bool operator<(const Root& o) const { return coeff < o.coeff; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      int c = coeff[i];
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      int a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a) + "*";
      out += "eps" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }
};

struct RootAssignment {
  std::vector<std::pair<GeneratorSymbol, Root>> generator_roots;  // a_i^+- -> -+ eps_i
  std::vector<Root> delta;                                        // the full root list
};

inline RootAssignment root_assignment(const AlgebraSignature& sig) {
  const int N = sig.N();
  RootAssignment ra;
  auto eps = [&](int i, int c) {
    Root r;
    r.coeff.assign(static_cast<std::size_t>(N), 0);
    r.coeff[static_cast<std::size_t>(i - 1)] = c;
    return r;
  };
  for (int i = 1; i <= N; ++i) {
    ra.generator_roots.emplace_back(sym_a(sig, i, +1), eps(i, -1));
    ra.generator_roots.emplace_back(sym_a(sig, i, -1), eps(i, +1));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int xi : {+1, -1})
        for (int eta : {+1, -1}) {
          Root r = eps(i, xi);
          r.coeff[static_cast<std::size_t>(j - 1)] = eta;
          ra.delta.push_back(std::move(r));
        }
  for (int i = 1; i <= N; ++i)
    for (int xi : {+1, -1}) ra.delta.push_back(eps(i, xi));
  for (int k = 1; k <= sig.m; ++k)
    for (int xi : {+1, -1}) ra.delta.push_back(eps(k, 2 * xi));
  return ra;
}

}  // namespace ospq
