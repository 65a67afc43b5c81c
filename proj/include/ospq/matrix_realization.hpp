// The exact classical matrix realization of osp(2n+1|2m): square matrices of
// size 2n+2m+1 over Q(sqrt2), rows and columns labelled -2n..2m.  The basis
// of the graded subspace L(n/m) consists of the para-Bose matrices B_i^+- and
// para-Fermi matrices F_j^+-, each with two entries of value +-sqrt2.
//
// This module is the ground-truth oracle for the classical (q = 1) half of
// the toolkit: every classical relation family is verified here by direct
// matrix arithmetic, instance by instance, with exact zero as the only
// accepted outcome.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ospq/free_algebra.hpp"
#include "ospq/presentations.hpp"
#include "ospq/scalars.hpp"

namespace ospq {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(const AlgebraSignature& sig)
      : m_(sig.m), n_(sig.n), dim_(2 * sig.m + 2 * sig.n + 1),
        e_(static_cast<std::size_t>(dim_) * dim_) {}

  int dim() const { return dim_; }
  int min_label() const { return -2 * n_; }
  int max_label() const { return 2 * m_; }

  // Row/column labels run -2n..2m, mapped to positions in ascending order.
  int pos(int label) const { return label + 2 * n_; }

  const Sqrt2Scalar& at(int row_label, int col_label) const {
    return e_[static_cast<std::size_t>(pos(row_label)) * dim_ + pos(col_label)];
  }
  Sqrt2Scalar& at(int row_label, int col_label) {
    return e_[static_cast<std::size_t>(pos(row_label)) * dim_ + pos(col_label)];
  }

  static ExactMatrix unit(const AlgebraSignature& sig, int A, int B,
                          const Sqrt2Scalar& v = Sqrt2Scalar(1)) {
    ExactMatrix r(sig);
    r.at(A, B) = v;
    return r;
  }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!v.is_zero()) return false;
    return true;
  }

  ExactMatrix operator-() const {
    ExactMatrix r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
  }
  ExactMatrix operator+(const ExactMatrix& o) const {
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  ExactMatrix operator-(const ExactMatrix& o) const {
    ExactMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  ExactMatrix scaled(const Sqrt2Scalar& c) const {
    ExactMatrix r = *this;
    for (auto& v : r.e_) v = v * c;
    return r;
  }
  ExactMatrix operator*(const ExactMatrix& o) const {
    ExactMatrix r(AlgebraSignature(m_, n_));
    const int d = dim_;
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const Sqrt2Scalar& a = e_[static_cast<std::size_t>(i) * d + k];
        if (a.is_zero()) continue;
        for (int j = 0; j < d; ++j) {
          const Sqrt2Scalar& b = o.e_[static_cast<std::size_t>(k) * d + j];
          if (b.is_zero()) continue;
          r.e_[static_cast<std::size_t>(i) * d + j] += a * b;
        }
      }
    return r;
  }

  bool operator==(const ExactMatrix& o) const { return e_ == o.e_; }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  // Sparse rendering "e(A,B) = value" by ascending labels, for witnesses.
  std::string str_sparse() const {
    std::string out;
    for (int A = min_label(); A <= max_label(); ++A)
      for (int B = min_label(); B <= max_label(); ++B) {
        const Sqrt2Scalar& v = at(A, B);
        if (v.is_zero()) continue;
        if (!out.empty()) out += ", ";
        out += "e(" + std::to_string(A) + "," + std::to_string(B) + ")=" + v.str();
      }
    return out.empty() ? "0" : out;
  }

  std::vector<std::pair<std::pair<int, int>, Sqrt2Scalar>> sparse_entries() const {
    std::vector<std::pair<std::pair<int, int>, Sqrt2Scalar>> out;
    for (int A = min_label(); A <= max_label(); ++A)
      for (int B = min_label(); B <= max_label(); ++B)
        if (!at(A, B).is_zero()) out.push_back({{A, B}, at(A, B)});
    return out;
  }

 private:
  int m_ = 0, n_ = 0, dim_ = 0;
  std::vector<Sqrt2Scalar> e_;
};

// Index class of a label: the so(2n+1) block holds labels <= 0, the sp(2m)
// block labels >= 1.  A matrix unit e_{AB} is even iff both labels fall in
// the same block.
inline int label_class(int label) { return label > 0 ? 1 : 0; }

struct GradedMatrix {
  ExactMatrix mat;
  Parity parity = Parity::Even;

  // Even matrices vanish on the odd block pattern and vice versa.
  bool parity_pattern_ok() const {
    for (int A = mat.min_label(); A <= mat.max_label(); ++A)
      for (int B = mat.min_label(); B <= mat.max_label(); ++B) {
        if (mat.at(A, B).is_zero()) continue;
        Parity entry = (label_class(A) == label_class(B)) ? Parity::Even : Parity::Odd;
        if (entry != parity) return false;
      }
    return true;
  }
};

inline GradedMatrix graded_add(const GradedMatrix& x, const GradedMatrix& y) {
  if (x.parity != y.parity) throw AlgebraError("graded_add: parity mismatch");
  return {x.mat + y.mat, x.parity};
}

// Basis of L(n/m):
//   B_i^- = sqrt2 (e_{0,i} - e_{i+m,0}),  B_i^+ = sqrt2 (e_{0,i+m} + e_{i,0}),   i = 1..m
//   F_j^- = sqrt2 (e_{-j,0} - e_{0,-j-n}), F_j^+ = sqrt2 (e_{0,-j} - e_{-j-n,0}), j = 1..n
inline GradedMatrix basis_matrix(const AlgebraSignature& sig, int i, int sign) {
  check_index(sig, i, "a");
  const Sqrt2Scalar r2 = Sqrt2Scalar::sqrt2();
  ExactMatrix mx(sig);
  if (i <= sig.m) {
    if (sign < 0) {
      mx.at(0, i) = r2;
      mx.at(i + sig.m, 0) = -r2;
    } else {
      mx.at(0, i + sig.m) = r2;
      mx.at(i, 0) = r2;
    }
    return {mx, Parity::Odd};
  }
  int j = i - sig.m;  // para-Fermi index
  if (sign < 0) {
    mx.at(-j, 0) = r2;
    mx.at(0, -j - sig.n) = -r2;
  } else {
    mx.at(0, -j) = r2;
    mx.at(-j - sig.n, 0) = -r2;
  }
  return {mx, Parity::Even};
}

inline GradedMatrix supercommutator(const GradedMatrix& x, const GradedMatrix& y) {
  ExactMatrix xy = x.mat * y.mat;
  ExactMatrix yx = y.mat * x.mat;
  bool both_odd = x.parity == Parity::Odd && y.parity == Parity::Odd;
  return {both_odd ? xy + yx : xy - yx, parity_sum(x.parity, y.parity)};
}

inline GradedMatrix plain_commutator(const GradedMatrix& x, const GradedMatrix& y) {
  return {x.mat * y.mat - y.mat * x.mat, parity_sum(x.parity, y.parity)};
}

inline GradedMatrix plain_anticommutator(const GradedMatrix& x, const GradedMatrix& y) {
  return {x.mat * y.mat + y.mat * x.mat, parity_sum(x.parity, y.parity)};
}

// Membership of the L(n/m) block pattern: nonzero entries only in row 0
// against nonzero labels, or column 0 against nonzero labels.
inline bool in_L_pattern(const ExactMatrix& mx) {
  for (int A = mx.min_label(); A <= mx.max_label(); ++A)
    for (int B = mx.min_label(); B <= mx.max_label(); ++B) {
      if (mx.at(A, B).is_zero()) continue;
      if (!((A == 0 && B != 0) || (B == 0 && A != 0))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Chevalley generators in the matrix realization, built through the classical
// conversion formulas:
//   h_i = 1/2 [[a_{i+1}^-, a_{i+1}^+]] - 1/2 [[a_i^-, a_i^+]],
//   h_N = -1/2 [[a_N^-, a_N^+]],
//   e_i = 1/2 [[a_i^-, a_{i+1}^+]],   e_N = (1/sqrt2) a_N^-,
//   f_i = 1/2 [[a_i^+, a_{i+1}^-]],   f_N = -(1/sqrt2) a_N^+.

struct ChevalleyMatrices {
  std::vector<GradedMatrix> h, e, f;  // index 0 unused; 1..N
};

inline ChevalleyMatrices chevalley_matrices(const AlgebraSignature& sig) {
  const int N = sig.N();
  const Sqrt2Scalar half(Rational(1, 2), Rational(0));
  const Sqrt2Scalar inv_r2(Rational(0), Rational(1, 2));  // 1/sqrt2 = sqrt2/2
  ChevalleyMatrices cm;
  cm.h.resize(static_cast<std::size_t>(N) + 1);
  cm.e.resize(static_cast<std::size_t>(N) + 1);
  cm.f.resize(static_cast<std::size_t>(N) + 1);
  auto a = [&](int i, int s) { return basis_matrix(sig, i, s); };
  for (int i = 1; i <= N; ++i) {
    if (i < N) {
      GradedMatrix hi = supercommutator(a(i + 1, -1), a(i + 1, +1));
      GradedMatrix lo = supercommutator(a(i, -1), a(i, +1));
      cm.h[static_cast<std::size_t>(i)] = {hi.mat.scaled(half) - lo.mat.scaled(half),
                                           Parity::Even};
      GradedMatrix ei = supercommutator(a(i, -1), a(i + 1, +1));
      cm.e[static_cast<std::size_t>(i)] = {ei.mat.scaled(half), ei.parity};
      GradedMatrix fi = supercommutator(a(i, +1), a(i + 1, -1));
      cm.f[static_cast<std::size_t>(i)] = {fi.mat.scaled(half), fi.parity};
    } else {
      GradedMatrix hN = supercommutator(a(N, -1), a(N, +1));
      cm.h[static_cast<std::size_t>(N)] = {-hN.mat.scaled(half), Parity::Even};
      GradedMatrix aN = a(N, -1);
      cm.e[static_cast<std::size_t>(N)] = {aN.mat.scaled(inv_r2), aN.parity};
      GradedMatrix aNp = a(N, +1);
      cm.f[static_cast<std::size_t>(N)] = {-aNp.mat.scaled(inv_r2), aNp.parity};
    }
  }
  return cm;
}

// ---------------------------------------------------------------------------
// Relation sweeps.

enum class ClassicalFamily { Eq12, Eq14, Eq16, Eq20, Eq21, Eq24, Eq28, Eq29 };

inline std::string classical_family_name(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::Eq12: return "eq12";
    case ClassicalFamily::Eq14: return "eq14";
    case ClassicalFamily::Eq16: return "eq16";
    case ClassicalFamily::Eq20: return "eq20";
    case ClassicalFamily::Eq21: return "eq21";
    case ClassicalFamily::Eq24: return "eq24";
    case ClassicalFamily::Eq28: return "eq28";
    case ClassicalFamily::Eq29: return "eq29";
  }
  return "?";
}

inline ClassicalFamily classical_family_from_name(const std::string& s) {
  for (ClassicalFamily f :
       {ClassicalFamily::Eq12, ClassicalFamily::Eq14, ClassicalFamily::Eq16,
        ClassicalFamily::Eq20, ClassicalFamily::Eq21, ClassicalFamily::Eq24,
        ClassicalFamily::Eq28, ClassicalFamily::Eq29})
    if (classical_family_name(f) == s) return f;
  throw AlgebraError("unknown classical relation family: " + s);
}

struct MatrixInstanceResult {
  std::string key;
  bool proved = false;
  std::string lhs;  // sparse renderings, kept for witnesses
  std::string rhs;
};

struct ClassicalReport {
  AlgebraSignature sig;
  std::string family;
  std::vector<MatrixInstanceResult> instances;

  bool all_proved() const {
    for (const auto& r : instances)
      if (!r.proved) return false;
    return true;
  }
  std::size_t instance_count() const { return instances.size(); }
};

constexpr int kMatrixDimGuard = 25;

// Evaluates every instantiation of the chosen relation family in the matrix
// realization; an instance is Proved iff both sides agree entry for entry.
inline ClassicalReport verify_classical(const AlgebraSignature& sig, ClassicalFamily family) {
  const int N = sig.N();
  const int dim = 2 * sig.m + 2 * sig.n + 1;
  if (dim > kMatrixDimGuard)
    throw AlgebraError("verify_classical: dimension " + std::to_string(dim) + " exceeds guard " +
                       std::to_string(kMatrixDimGuard) + "; use a smaller signature");

  ClassicalReport rep;
  rep.sig = sig;
  rep.family = classical_family_name(family);

  auto a = [&](int i, int s) { return basis_matrix(sig, i, s); };
  auto grade01 = [&](int i) { return sig.grade(i) == Parity::Odd ? 1 : 0; };
  // eps^<k>: -1 only for eps = -1 at an odd node
  auto pow_sign = [&](int eps, int k) { return grade01(k) ? eps : 1; };
  auto record = [&](std::string key, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    bool ok = lhs == rhs;
    MatrixInstanceResult r;
    r.key = std::move(key);
    r.proved = ok;
    if (!ok) {
      r.lhs = lhs.str_sparse();
      r.rhs = rhs.str_sparse();
    }
    rep.instances.push_back(std::move(r));
  };
  ExactMatrix zero(sig);

  auto key_of = [](std::initializer_list<int> idx, std::initializer_list<int> signs) {
    std::string k = "[";
    bool first = true;
    for (int v : idx) {
      if (!first) k += ",";
      k += std::to_string(v);
      first = false;
    }
    for (int s : signs) k += (s > 0 ? ",+" : ",-");
    return k + "]";
  };

  switch (family) {
    case ClassicalFamily::Eq12:
    case ClassicalFamily::Eq16: {
      // [[ [[a_i^xi, a_j^eta]], a_k^eps ]] =
      //   2 eps^<k> d_jk d_{eps,-eta} a_i^xi
      // - 2 eps^<k> (-1)^(<j><k>) d_ik d_{eps,-xi} a_j^eta
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          for (int k = 1; k <= N; ++k)
            for (int xi : {+1, -1})
              for (int eta : {+1, -1})
                for (int eps : {+1, -1}) {
                  ExactMatrix lhs =
                      supercommutator(supercommutator(a(i, xi), a(j, eta)), a(k, eps)).mat;
                  ExactMatrix rhs = zero;
                  if (j == k && eps == -eta)
                    rhs = rhs + a(i, xi).mat.scaled(Sqrt2Scalar(2 * pow_sign(eps, k)));
                  if (i == k && eps == -xi) {
                    int sg = (grade01(j) & grade01(k)) ? -1 : 1;
                    rhs = rhs - a(j, eta).mat.scaled(Sqrt2Scalar(2 * pow_sign(eps, k) * sg));
                  }
                  record(key_of({i, j, k}, {xi, eta, eps}), lhs, rhs);
                }
      break;
    }
    case ClassicalFamily::Eq14: {
      // [[ [[a_i^xi,a_j^eta]], [[a_k^eps,a_l^phi]] ]] expanded against the
      // four delta terms, verified as stated (not derived from eq12).
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
          for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l)
              for (int xi : {+1, -1})
                for (int eta : {+1, -1})
                  for (int eps : {+1, -1})
                    for (int phi : {+1, -1}) {
                      ExactMatrix lhs = supercommutator(supercommutator(a(i, xi), a(j, eta)),
                                                        supercommutator(a(k, eps), a(l, phi)))
                                            .mat;
                      ExactMatrix rhs = zero;
                      if (j == k && eps == -eta)
                        rhs = rhs + supercommutator(a(i, xi), a(l, phi))
                                        .mat.scaled(Sqrt2Scalar(2 * pow_sign(eps, k)));
                      if (i == k && eps == -xi) {
                        int sg = (grade01(j) & grade01(k)) ? -1 : 1;
                        rhs = rhs - supercommutator(a(j, eta), a(l, phi))
                                        .mat.scaled(Sqrt2Scalar(2 * pow_sign(eps, k) * sg));
                      }
                      if (j == l && phi == -eta) {
                        int sg = (grade01(j) & grade01(k)) ? -1 : 1;
                        rhs = rhs - supercommutator(a(i, xi), a(k, eps))
                                        .mat.scaled(Sqrt2Scalar(2 * pow_sign(phi, l) * sg));
                      }
                      if (i == l && phi == -xi) {
                        int sg = ((grade01(i) & grade01(j)) ^ (grade01(i) & grade01(k))) ? -1 : 1;
                        rhs = rhs + supercommutator(a(j, eta), a(k, eps))
                                        .mat.scaled(Sqrt2Scalar(2 * pow_sign(phi, l) * sg));
                      }
                      record(key_of({i, j, k, l}, {xi, eta, eps, phi}), lhs, rhs);
                    }
      break;
    }
    case ClassicalFamily::Eq20: {
      // para-Bose triple relations, i,j,k = 1..m:
      // [{B_i^xi,B_j^eta},B_k^eps] = 2 eps d_jk d_{eps,-eta} B_i^xi
      //                            + 2 eps d_ik d_{eps,-xi} B_j^eta
      for (int i = 1; i <= sig.m; ++i)
        for (int j = 1; j <= sig.m; ++j)
          for (int k = 1; k <= sig.m; ++k)
            for (int xi : {+1, -1})
              for (int eta : {+1, -1})
                for (int eps : {+1, -1}) {
                  ExactMatrix lhs =
                      plain_commutator(plain_anticommutator(a(i, xi), a(j, eta)), a(k, eps)).mat;
                  ExactMatrix rhs = zero;
                  if (j == k && eps == -eta) rhs = rhs + a(i, xi).mat.scaled(Sqrt2Scalar(2 * eps));
                  if (i == k && eps == -xi) rhs = rhs + a(j, eta).mat.scaled(Sqrt2Scalar(2 * eps));
                  record(key_of({i, j, k}, {xi, eta, eps}), lhs, rhs);
                }
      break;
    }
    case ClassicalFamily::Eq21: {
      // para-Fermi triple relations, F_j = a_{j+m}, i,j,k = 1..n:
      // [[F_i^xi,F_j^eta],F_k^eps] = 2 d_jk d_{eps,-eta} F_i^xi - 2 d_ik d_{eps,-xi} F_j^eta
      for (int i = 1; i <= sig.n; ++i)
        for (int j = 1; j <= sig.n; ++j)
          for (int k = 1; k <= sig.n; ++k)
            for (int xi : {+1, -1})
              for (int eta : {+1, -1})
                for (int eps : {+1, -1}) {
                  ExactMatrix lhs = plain_commutator(
                                        plain_commutator(a(i + sig.m, xi), a(j + sig.m, eta)),
                                        a(k + sig.m, eps))
                                        .mat;
                  ExactMatrix rhs = zero;
                  if (j == k && eps == -eta) rhs = rhs + a(i + sig.m, xi).mat.scaled(Sqrt2Scalar(2));
                  if (i == k && eps == -xi) rhs = rhs - a(j + sig.m, eta).mat.scaled(Sqrt2Scalar(2));
                  record(key_of({i, j, k}, {xi, eta, eps}), lhs, rhs);
                }
      break;
    }
    case ClassicalFamily::Eq24: {
      // Green defining relations: |i-j| <= 1, all k, eta = +-:
      // [[ [[a_i^eta,a_j^-eta]], a_k^eta ]] = 2 eta^<k> d_jk a_i^eta
      for (int i = 1; i <= N; ++i)
        for (int j = std::max(1, i - 1); j <= std::min(N, i + 1); ++j)
          for (int k = 1; k <= N; ++k)
            for (int eta : {+1, -1}) {
              ExactMatrix lhs =
                  supercommutator(supercommutator(a(i, eta), a(j, -eta)), a(k, eta)).mat;
              ExactMatrix rhs = zero;
              if (j == k) rhs = rhs + a(i, eta).mat.scaled(Sqrt2Scalar(2 * pow_sign(eta, k)));
              record(key_of({i, j, k}, {eta}), lhs, rhs);
            }
      for (int eta : {+1, -1}) {
        ExactMatrix lhs =
            plain_commutator(plain_commutator(a(N - 1, eta), a(N, eta)), a(N, eta)).mat;
        record(std::string("N") + key_of({}, {eta}), lhs, zero);
      }
      break;
    }
    case ClassicalFamily::Eq28: {
      const ChevalleyMatrices cm = chevalley_matrices(sig);
      const CartanMatrix ca = cartan_matrix(sig);
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          auto I = static_cast<std::size_t>(i);
          auto J = static_cast<std::size_t>(j);
          record("hh" + detail::idx2(i, j), plain_commutator(cm.h[I], cm.h[J]).mat, zero);
          record("he" + detail::idx2(i, j), plain_commutator(cm.h[I], cm.e[J]).mat,
                 cm.e[J].mat.scaled(Sqrt2Scalar(ca.at(i, j))));
          record("hf" + detail::idx2(i, j), plain_commutator(cm.h[I], cm.f[J]).mat,
                 cm.f[J].mat.scaled(Sqrt2Scalar(-ca.at(i, j))));
          record("ef" + detail::idx2(i, j), supercommutator(cm.e[I], cm.f[J]).mat,
                 i == j ? cm.h[I].mat : zero);
        }
      break;
    }
    case ClassicalFamily::Eq29: {
      const ChevalleyMatrices cm = chevalley_matrices(sig);
      auto run = [&](const char* tag, const std::vector<GradedMatrix>& g) {
        for (int i = 1; i <= N; ++i)
          for (int j = i + 2; j <= N; ++j)
            record(std::string(tag) + "-serre-1" + detail::idx2(i, j),
                   plain_commutator(g[static_cast<std::size_t>(i)],
                                    g[static_cast<std::size_t>(j)])
                       .mat,
                   zero);
        for (int i = 1; i < N; ++i)
          for (int dj : {-1, +1}) {
            int j = i + dj;
            if (j < 1 || j > N) continue;
            record(std::string(tag) + "-serre-2" + detail::idx2(i, j),
                   supercommutator(g[static_cast<std::size_t>(i)],
                                   plain_commutator(g[static_cast<std::size_t>(i)],
                                                    g[static_cast<std::size_t>(j)]))
                       .mat,
                   zero);
          }
        if (sig.m >= 2)
          record(std::string(tag) + "-serre-3",
                 plain_anticommutator(
                     plain_commutator(g[static_cast<std::size_t>(sig.m - 1)],
                                      g[static_cast<std::size_t>(sig.m)]),
                     plain_commutator(g[static_cast<std::size_t>(sig.m)],
                                      g[static_cast<std::size_t>(sig.m + 1)]))
                     .mat,
                 zero);
        record(std::string(tag) + "-serre-4",
               plain_commutator(
                   g[static_cast<std::size_t>(N)],
                   plain_commutator(g[static_cast<std::size_t>(N)],
                                    plain_commutator(g[static_cast<std::size_t>(N)],
                                                     g[static_cast<std::size_t>(N - 1)])))
                   .mat,
               zero);
      };
      run("e", cm.e);
      run("f", cm.f);
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact span membership over Q(sqrt2), used for the closure property: every
// triple bracket of basis elements lies in span{a's} + span{pairwise
// brackets}.  Plain Gauss elimination on the vectorized matrices.

inline bool in_span(const ExactMatrix& target, const std::vector<ExactMatrix>& basis) {
  if (target.is_zero()) return true;
  const int d = target.dim();
  const std::size_t cols = basis.size();
  const std::size_t rows = static_cast<std::size_t>(d) * d;
  // augmented system basis * x = target
  std::vector<std::vector<Sqrt2Scalar>> A(rows, std::vector<Sqrt2Scalar>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    int Arow = static_cast<int>(r) / d + target.min_label();
    int Acol = static_cast<int>(r) % d + target.min_label();
    for (std::size_t c = 0; c < cols; ++c) A[r][c] = basis[c].at(Arow, Acol);
    A[r][cols] = target.at(Arow, Acol);
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && A[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(A[pivot_row], A[sel]);
    Sqrt2Scalar inv = Sqrt2Scalar(1) / A[pivot_row][c];
    for (auto& v : A[pivot_row]) v = v * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || A[r][c].is_zero()) continue;
      Sqrt2Scalar f = A[r][c];
      for (std::size_t cc = c; cc <= cols; ++cc) A[r][cc] -= f * A[pivot_row][cc];
    }
    ++pivot_row;
  }
  // consistent iff no row reads 0 = nonzero
  for (std::size_t r = 0; r < rows; ++r) {
    bool all_zero = true;
    for (std::size_t c = 0; c < cols; ++c)
      if (!A[r][c].is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero && !A[r][cols].is_zero()) return false;
  }
  return true;
}

}  // namespace ospq
