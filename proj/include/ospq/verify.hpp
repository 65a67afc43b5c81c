// Verification suites for the q-deformed side: Proposition-5 style mixed
// relations, the main theorem's Green relations under the conversion
// substitution, the round-trip identities, and the weighted bracket identity
// checked by exact rational sampling.
//
// Every suite builds its identities as elements that must reduce to zero,
// derives the degree bound from the largest word appearing (2*maxlen + 4
// unless overridden), completes the Chevalley rewriting system at that
// bound, and reduces each instance.  Instances are independent; the worker
// pool writes results into preallocated slots so the report does not depend
// on scheduling.

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ospq/free_algebra.hpp"
#include "ospq/presentations.hpp"
#include "ospq/rewriting.hpp"
#include "ospq/scalars.hpp"

namespace ospq {

inline constexpr std::uint64_t kDefaultSeed = 20260809;

struct VerifyOptions {
  int degree_bound = 0;  // 0: default rule from the identity sizes
  int workers = 1;
  std::optional<Rational> q0;  // sampled mode; symbolic when absent
  std::uint64_t seed = kDefaultSeed;
  int samples = 20;
  std::size_t rule_ceiling = 20000;
  std::string mutate_key;  // perturb one named identity by +1 before verification
};

struct InstanceVerdict {
  std::string key;
  Verdict verdict;
};

struct SuiteReport {
  std::string suite;
  AlgebraSignature sig;
  int degree_bound = 0;
  std::size_t rule_count = 0;
  bool completion_closed = true;
  std::uint64_t presentation_fingerprint = 0;
  std::string q_mode = "symbolic";
  std::vector<InstanceVerdict> instances;

  std::size_t count(VerdictStatus s) const {
    std::size_t n = 0;
    for (const auto& iv : instances)
      if (iv.verdict.status == s) ++n;
    return n;
  }
  bool all_proved() const { return count(VerdictStatus::Proved) == instances.size(); }
};

// ---------------------------------------------------------------------------
// helpers

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t presentation_fingerprint(const Presentation& p) {
  std::uint64_t h = fnv1a("sig:" + std::to_string(p.sig.m) + "," + std::to_string(p.sig.n) +
                          ";deformed:" + (p.deformed ? "1" : "0") +
                          ";green:" + (p.green ? "1" : "0"));
  for (const auto& r : p.relations) h = fnv1a(r.name + "=" + r.element.str() + ";", h);
  return h;
}

inline void parallel_for(std::size_t n, int workers,
                         const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  std::size_t nw = std::min(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t t = 0; t < nw; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline Element<Rational> specialize(const Element<QScalar>& e, const Rational& q0) {
  Element<Rational> r;
  for (const auto& [w, c] : e.terms()) r.add_term(w, c.eval(q0));
  return r;
}

inline RootTwoElement<Rational> specialize(const RootTwoElement<QScalar>& e,
                                           const Rational& q0) {
  return {specialize(e.rat, q0), specialize(e.irr, q0)};
}

// Transplant a completed symbolic system to a sample point.  Specialization
// is a ring map, so confluence within the completed range carries over; rule
// left-hand sides are untouched and stay oriented.
inline RewriteSystem<Rational> specialize_system(const RewriteSystem<QScalar>& rs,
                                                 const Rational& q0) {
  RewriteSystem<Rational> out(rs.degree_bound());
  for (const auto& r : rs.rules()) {
    if (!r.active) continue;
    out.add_raw(r.lhs, specialize(r.rhs, q0), r.origin);
  }
  out.set_completion_closed(rs.completion_closed());
  return out;
}

// ---------------------------------------------------------------------------
// Identity builders.  Each identity is an element of the mixed alphabet
// (Chevalley letters plus a/L letters) that the relations claim is zero.

struct ZeroIdentity {
  std::string key;
  Element<QScalar> element;
};

// Proposition-5 families: commutation of the Chevalley e's and f's with the
// Green generator images.
inline std::vector<ZeroIdentity> prop5_identities(const AlgebraSignature& sig) {
  using El = Element<QScalar>;
  const int N = sig.N();
  std::vector<ZeroIdentity> ids;
  auto A = [&](int j, int s) { return El::letter(sym_a(sig, j, s)); };
  auto E = [&](int i) { return El::letter(sym_e(sig, i)); };
  auto F = [&](int i) { return El::letter(sym_f(sig, i)); };
  auto K = [&](int i) { return El::letter(sym_k(sig, i)); };
  auto Kb = [&](int i) { return El::letter(sym_kbar(sig, i)); };
  auto key = [](const char* fam, int i, int j) {
    return std::string(fam) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };
  auto key1 = [](const char* fam, int i) {
    return std::string(fam) + "[" + std::to_string(i) + "]";
  };

  for (int i = 1; i < N; ++i) {
    for (int j = 1; j <= N; ++j) {
      // (37) [[e_i, a_j^+]] = -d_ij (-1)^<i+1> k_i a_{i+1}^+
      El rel = bracket_super(E(i), A(j, +1));
      if (i == j) rel += (K(i) * A(i + 1, +1)).scaled(QScalar(sig.grade_sign(i + 1)));
      ids.push_back({key("p5-37", i, j), std::move(rel)});
      // (38) [[a_j^-, f_i]] = d_ij a_{i+1}^- kbar_i
      El rel2 = bracket_super(A(j, -1), F(i));
      if (i == j) rel2 -= A(i + 1, -1) * Kb(i);
      ids.push_back({key("p5-38", i, j), std::move(rel2)});
      // (39a) [[e_i, a_j^-]] = 0 when i < j-1 or i > j
      if (i < j - 1 || i > j)
        ids.push_back({key("p5-39a", i, j), bracket_super(E(i), A(j, -1))});
      // (40a) [[a_j^+, f_i]] = 0 when i < j-1 or i > j
      if (i < j - 1 || i > j)
        ids.push_back({key("p5-40a", i, j), bracket_super(A(j, +1), F(i))});
    }
    const QScalar qi = conversion_weight(sig, i);
    const QScalar qim1 = conversion_weight(sig, i - 1);
    // (39b) [[e_i, a_{i+1}^-]]_{q_i} = (-1)^<i+1> a_i^-
    ids.push_back({key1("p5-39b", i),
                   bracket_super(E(i), A(i + 1, -1), qi) -
                       A(i, -1).scaled(QScalar(sig.grade_sign(i + 1)))});
    // (39c) [[e_i, a_i^-]]_{qbar_{i-1}} = 0
    ids.push_back({key1("p5-39c", i), bracket_super(E(i), A(i, -1), qim1.inverse())});
    // (40b) [[a_{i+1}^+, f_i]]_{qbar_i} = -a_i^+
    ids.push_back({key1("p5-40b", i),
                   bracket_super(A(i + 1, +1), F(i), qi.inverse()) + A(i, +1)});
    // (40c) [[a_i^+, f_i]]_{q_{i-1}} = 0
    ids.push_back({key1("p5-40c", i), bracket_super(A(i, +1), F(i), qim1)});
  }
  return ids;
}

// The theorem's relations: the Green presentation itself, to be checked under
// the substitution by Chevalley images.
inline std::vector<ZeroIdentity> theorem_identities(const AlgebraSignature& sig) {
  std::vector<ZeroIdentity> ids;
  for (const auto& rel : green_presentation(sig, true).relations)
    ids.push_back({rel.name, rel.element});
  return ids;
}

// Round-trip: the conversion images of the Chevalley generators, minus the
// bare generators.
inline std::vector<ZeroIdentity> roundtrip_identities(const AlgebraSignature& sig) {
  using El = Element<QScalar>;
  const int N = sig.N();
  std::vector<ZeroIdentity> ids;
  GreenSubstitution sub(sig, true);
  auto push = [&](const std::string& k, const GreenImage& img, const GeneratorSymbol& target) {
    RootTwoElement<QScalar> image = sub.apply(img.as_root_two());
    RootTwoElement<QScalar> bare = RootTwoElement<QScalar>::from(El::letter(target));
    RootTwoElement<QScalar> diff = image - bare;
    // identity is zero in both components; keep them as separate instances
    // only when the sqrt2 part is actually populated
    if (diff.irr.is_zero()) {
      ids.push_back({k, diff.rat});
    } else if (diff.rat.is_zero()) {
      ids.push_back({k, diff.irr});
    } else {
      ids.push_back({k + ":rat", diff.rat});
      ids.push_back({k + ":irr", diff.irr});
    }
  };
  for (int i = 1; i <= N; ++i) {
    push("rt-k[" + std::to_string(i) + "]",
         chevalley_from_green(sig, ChevalleyGenerator::K, i, true), sym_k(sig, i));
    push("rt-e[" + std::to_string(i) + "]",
         chevalley_from_green(sig, ChevalleyGenerator::E, i, true), sym_e(sig, i));
    push("rt-f[" + std::to_string(i) + "]",
         chevalley_from_green(sig, ChevalleyGenerator::F, i, true), sym_f(sig, i));
  }
  // L_N = k_N, stated alongside (the L-word substitution makes it immediate)
  ids.push_back({"rt-LN", Element<QScalar>::word(chevalley_word_for_L(sig, N, false)) -
                              El::letter(sym_k(sig, N))});
  return ids;
}

// ---------------------------------------------------------------------------
// Suite runner.

namespace detail {

template <class S>
void run_instances(SuiteReport& rep, const std::vector<std::pair<std::string, RootTwoElement<S>>>& work,
                   const RewriteSystem<S>& rs, int workers) {
  rep.instances.resize(work.size());
  parallel_for(work.size(), workers, [&](std::size_t i) {
    rep.instances[i].key = work[i].first;
    rep.instances[i].verdict = verify_zero_r2(work[i].second, rs);
  });
  std::sort(rep.instances.begin(), rep.instances.end(),
            [](const InstanceVerdict& a, const InstanceVerdict& b) { return a.key < b.key; });
}

}  // namespace detail

// Substitute the Green letters by their Chevalley images, then reduce every
// identity.  `substitute` = false runs the identities as given (they must
// already live in the Chevalley alphabet).
inline SuiteReport run_zero_suite(const std::string& suite, const AlgebraSignature& sig,
                                  std::vector<ZeroIdentity> ids, const VerifyOptions& opt) {
  if (!opt.mutate_key.empty()) {
    bool found = false;
    for (auto& id : ids)
      if (id.key == opt.mutate_key) {
        if (id.element.is_zero())
          throw RewriteError("mutation target '" + opt.mutate_key + "' is a zero identity");
        // +1 on the coefficient of the smallest word: a single-constant dent
        SuperWord w = id.element.terms().begin()->first;
        id.element.add_term(w, QScalar(1));
        found = true;
      }
    if (!found)
      throw RewriteError("mutation target '" + opt.mutate_key + "' is not an instance key");
  }

  GreenSubstitution sub(sig, true);
  std::vector<std::pair<std::string, RootTwoElement<QScalar>>> work;
  work.reserve(ids.size());
  std::size_t maxlen = 0;
  for (const auto& id : ids) {
    RootTwoElement<QScalar> v = sub.apply(id.element);
    maxlen = std::max(maxlen, v.max_word_length());
    work.push_back({id.key, std::move(v)});
  }

  SuiteReport rep;
  rep.suite = suite;
  rep.sig = sig;
  rep.degree_bound = opt.degree_bound > 0 ? opt.degree_bound : default_degree_bound(maxlen);
  Presentation pres = chevalley_presentation(sig, true);
  rep.presentation_fingerprint = presentation_fingerprint(pres);

  RewriteSystem<QScalar> rs = build_rules(pres, rep.degree_bound);
  CompletionStats cst = complete(rs, opt.rule_ceiling);
  rep.rule_count = rs.active_rule_count();
  rep.completion_closed = cst.closed;

  if (opt.q0) {
    rep.q_mode = "sampled(q0=" + opt.q0->str() + ")";
    RewriteSystem<Rational> rsr = specialize_system(rs, *opt.q0);
    std::vector<std::pair<std::string, RootTwoElement<Rational>>> workr;
    workr.reserve(work.size());
    for (const auto& [k, v] : work) workr.push_back({k, specialize(v, *opt.q0)});
    detail::run_instances(rep, workr, rsr, opt.workers);
  } else {
    detail::run_instances(rep, work, rs, opt.workers);
  }
  return rep;
}

inline SuiteReport verify_prop5(const AlgebraSignature& sig, const VerifyOptions& opt = {}) {
  return run_zero_suite("prop5", sig, prop5_identities(sig), opt);
}

inline SuiteReport verify_theorem(const AlgebraSignature& sig, const VerifyOptions& opt = {}) {
  return run_zero_suite("theorem", sig, theorem_identities(sig), opt);
}

inline SuiteReport verify_roundtrip(const AlgebraSignature& sig, const VerifyOptions& opt = {}) {
  return run_zero_suite("roundtrip", sig, roundtrip_identities(sig), opt);
}

// ---------------------------------------------------------------------------
// Experimental converse: orient the Green relations themselves and test
// whether the Chevalley relations reduce to zero under the reverse
// substitution.  Inconclusive outcomes are expected here; the bound guards
// against runaway completion.

inline SuiteReport verify_green_converse(const AlgebraSignature& sig,
                                         const VerifyOptions& opt = {}) {
  const int N = sig.N();
  using El = Element<QScalar>;

  // reverse substitution: e/f/k/kbar -> Green alphabet
  std::vector<RootTwoElement<QScalar>> e_img, f_img, k_img, kb_img;
  for (int i = 1; i <= N; ++i) {
    e_img.push_back(chevalley_from_green(sig, ChevalleyGenerator::E, i, true).as_root_two());
    f_img.push_back(chevalley_from_green(sig, ChevalleyGenerator::F, i, true).as_root_two());
    k_img.push_back(chevalley_from_green(sig, ChevalleyGenerator::K, i, true).as_root_two());
    std::vector<GeneratorSymbol> kb;
    kb.push_back(sym_Lbar(sig, i));
    if (i < N) kb.insert(kb.begin(), sym_L(sig, i + 1));  // kbar_i = L_{i+1} Lbar_i
    kb_img.push_back(RootTwoElement<QScalar>::from(El::word(SuperWord(kb))));
  }
  auto letter_image = [&](const GeneratorSymbol& g) -> RootTwoElement<QScalar> {
    std::size_t i = static_cast<std::size_t>(g.index - 1);
    switch (g.kind) {
      case Kind::E: return e_img[i];
      case Kind::F: return f_img[i];
      case Kind::K: return k_img[i];
      case Kind::KBar: return kb_img[i];
      default: throw RewriteError("converse substitution: unexpected letter " + g.str());
    }
  };
  auto substitute = [&](const Element<QScalar>& x) {
    RootTwoElement<QScalar> acc;
    for (const auto& [w, c] : x.terms()) {
      RootTwoElement<QScalar> prod = RootTwoElement<QScalar>::from(El::unit(QScalar(1)));
      for (const auto& g : w.letters()) prod = prod * letter_image(g);
      acc = acc + prod.scaled(c);
    }
    return acc;
  };

  Presentation chev = chevalley_presentation(sig, true);
  std::vector<std::pair<std::string, RootTwoElement<QScalar>>> work;
  std::size_t maxlen = 0;
  for (const auto& rel : chev.relations) {
    RootTwoElement<QScalar> v = substitute(rel.element);
    maxlen = std::max(maxlen, v.max_word_length());
    work.push_back({rel.name, std::move(v)});
  }

  SuiteReport rep;
  rep.suite = "converse";
  rep.sig = sig;
  rep.degree_bound = opt.degree_bound > 0 ? opt.degree_bound : default_degree_bound(maxlen);
  Presentation green = green_presentation(sig, true);
  rep.presentation_fingerprint = presentation_fingerprint(green);
  RewriteSystem<QScalar> rs = build_green_rules(green, rep.degree_bound);
  CompletionStats cst = complete(rs, opt.rule_ceiling);
  rep.rule_count = rs.active_rule_count();
  rep.completion_closed = cst.closed;
  detail::run_instances(rep, work, rs, opt.workers);
  return rep;
}

// ---------------------------------------------------------------------------
// Proposition 6: the weighted bracket identity
//   [[A, [B,C]_x]]_y = [[ [[A,B]]_z, C]]_t + (-1)^(deg A deg B) z [[B, [[A,C]]_r]]_s
// with x = z s, y = z r, t = z s r, valid whenever B or C is even.  Both
// sides are cubic polynomials in (z, r, s) over the free algebra on three
// letters, so exact agreement on >= 20 rational sample points is checked per
// admissible parity triple.

inline Verdict verify_bracket_identity(Parity pA, Parity pB, Parity pC, int samples,
                                       std::uint64_t seed) {
  if (pB == Parity::Odd && pC == Parity::Odd)
    throw AlgebraError(
        "verify_bracket_identity: hypothesis requires B or C even (identity not claimed)");
  using El = Element<QScalar>;
  El A = El::letter(sym_abstract(1, pA));
  El B = El::letter(sym_abstract(2, pB));
  El C = El::letter(sym_abstract(3, pC));
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(static_cast<int>(pA)) << 2 ^
                              static_cast<std::uint64_t>(static_cast<int>(pB)) << 1 ^
                              static_cast<std::uint64_t>(static_cast<int>(pC))));
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto draw_nonzero = [&]() {
    for (;;) {
      int p = num(rng);
      if (p == 0) continue;
      return Rational(BigInt(p), BigInt(den(rng)));
    }
  };
  Verdict v;
  v.bound_used = 0;
  for (int s_i = 0; s_i < samples; ++s_i) {
    Rational z = draw_nonzero(), s = draw_nonzero(), r = draw_nonzero();
    QScalar zq(z), sq(s), rq(r);
    QScalar x = zq * sq, y = zq * rq, t = zq * sq * rq;
    El lhs = bracket_super(A, bracket_comm(B, C, x), y);
    El rhs = bracket_super(bracket_super(A, B, zq), C, t);
    El second = bracket_super(B, bracket_super(A, C, rq), sq).scaled(zq);
    if (pA == Parity::Odd && pB == Parity::Odd) rhs -= second; else rhs += second;
    ++v.reduction_steps;
    if (lhs != rhs) {
      v.status = VerdictStatus::Refuted;
      v.witness = "sample (z,s,r)=(" + z.str() + "," + s.str() + "," + r.str() +
                  "); difference = " + (lhs - rhs).str();
      return v;
    }
  }
  v.status = VerdictStatus::Proved;
  return v;
}

inline SuiteReport verify_prop6(const VerifyOptions& opt = {}) {
  SuiteReport rep;
  rep.suite = "prop6";
  rep.sig = AlgebraSignature(1, 1);  // parity triples do not depend on the signature
  rep.degree_bound = 0;
  auto pstr = [](Parity p) { return p == Parity::Odd ? "odd" : "even"; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        if (b == 1 && c == 1) continue;  // hypothesis excludes B and C both odd
        Parity pA = static_cast<Parity>(a), pB = static_cast<Parity>(b),
               pC = static_cast<Parity>(c);
        InstanceVerdict iv;
        iv.key = std::string("p6[") + pstr(pA) + "," + pstr(pB) + "," + pstr(pC) + "]";
        iv.verdict = verify_bracket_identity(pA, pB, pC, opt.samples, opt.seed);
        rep.instances.push_back(std::move(iv));
      }
  std::sort(rep.instances.begin(), rep.instances.end(),
            [](const InstanceVerdict& a, const InstanceVerdict& b) { return a.key < b.key; });
  return rep;
}

// ---------------------------------------------------------------------------
// Mutation sweep: bump each coefficient of each theorem relation by +1 in
// turn; every single perturbation must knock at least its own instance off
// Proved.  Returns the perturbations that still proved (ideally none).

inline std::vector<std::string> mutation_survivors_theorem(const AlgebraSignature& sig,
                                                           const VerifyOptions& opt = {}) {
  std::vector<ZeroIdentity> base = theorem_identities(sig);
  GreenSubstitution sub(sig, true);

  std::size_t maxlen = 0;
  for (const auto& id : base) maxlen = std::max(maxlen, sub.apply(id.element).max_word_length());
  int bound = opt.degree_bound > 0 ? opt.degree_bound : default_degree_bound(maxlen);
  RewriteSystem<QScalar> rs = build_rules(chevalley_presentation(sig, true), bound);
  complete(rs, opt.rule_ceiling);

  std::vector<std::string> survivors;
  for (const auto& id : base) {
    std::vector<SuperWord> words;
    for (const auto& [w, c] : id.element.terms()) words.push_back(w);
    for (const auto& w : words) {
      Element<QScalar> mutated = id.element;
      mutated.add_term(w, QScalar(1));
      Verdict v = verify_zero_r2(sub.apply(mutated), rs);
      if (v.status == VerdictStatus::Proved)
        survivors.push_back(id.key + " @ " + w.str());
    }
  }
  return survivors;
}

}  // namespace ospq
