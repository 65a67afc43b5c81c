// Degree-bounded noncommutative rewriting over the free graded algebra.
//
// The monomial order is word length first, then left-to-right comparison by
// (kind, index), with the kind order f < kbar < k < e.  Every relation is
// oriented so that its largest word rewrites to the rest; the resulting
// system targets the PBW shape (f-words)(k-monomials)(e-words).  Completion
// resolves overlaps of rule left-hand sides in increasing overlap degree up
// to the configured bound; because no rule ever lengthens a word, resolving
// every overlap of degree <= D makes normal forms unique for all words of
// degree <= D.
//
// Verdicts are three-valued on purpose: Proved means the difference reduced
// to exactly zero, Refuted carries the nonzero normal form as an exact
// witness, and Inconclusive reports that the degree bound was exceeded.

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ospq/free_algebra.hpp"
#include "ospq/presentations.hpp"
#include "ospq/scalars.hpp"

namespace ospq {

struct RewriteError : std::runtime_error {
  explicit RewriteError(const std::string& what) : std::runtime_error(what) {}
};

enum class VerdictStatus { Proved, Refuted, Inconclusive };

inline std::string verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Proved: return "proved";
    case VerdictStatus::Refuted: return "refuted";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ReduceStats {
  long steps = 0;
  bool bound_hit = false;
};

inline int default_degree_bound(std::size_t max_word_len) {
  return 2 * static_cast<int>(max_word_len) + 4;
}

// ---------------------------------------------------------------------------
// RewriteSystem

template <class S>
class RewriteSystem {
 public:
  struct Rule {
    SuperWord lhs;
    Element<S> rhs;
    std::string origin;
    bool active = true;
  };

  explicit RewriteSystem(int degree_bound) : degree_bound_(degree_bound) {
    if (degree_bound < 1) throw RewriteError("RewriteSystem: degree bound must be positive");
  }

  int degree_bound() const { return degree_bound_; }
  bool completion_closed() const { return closed_; }
  void set_completion_closed(bool v) { closed_ = v; }

  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t active_rule_count() const {
    std::size_t n = 0;
    for (const auto& r : rules_)
      if (r.active) ++n;
    return n;
  }

  const Rule* find_rule(const std::string& origin) const {
    for (const auto& r : rules_)
      if (r.active && r.origin == origin) return &r;
    return nullptr;
  }

  // Lowest-id active rule matching at position pos of w; -1 when none.
  int match_at(const SuperWord& w, std::size_t pos) const {
    auto it = by_first_.find(w.at(pos));
    if (it == by_first_.end()) return -1;
    for (std::size_t id : it->second) {
      const Rule& r = rules_[id];
      if (r.active && w.matches_at(r.lhs, pos)) return static_cast<int>(id);
    }
    return -1;
  }

  // All (pos, rule) matches inside w, used by the shuffled reducer.
  std::vector<std::pair<std::size_t, std::size_t>> all_matches(const SuperWord& w) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      auto it = by_first_.find(w.at(pos));
      if (it == by_first_.end()) continue;
      for (std::size_t id : it->second)
        if (rules_[id].active && w.matches_at(rules_[id].lhs, pos)) out.push_back({pos, id});
    }
    return out;
  }

  // Insert a prebuilt rule without rederivation (used when transplanting a
  // completed system to a sample point).  The order-decrease invariant still
  // holds because specialization keeps words unchanged.
  void add_raw(SuperWord lhs, Element<S> rhs, std::string origin) {
    rules_.push_back({std::move(lhs), std::move(rhs), std::move(origin), true});
    by_first_[rules_.back().lhs.at(0)].push_back(rules_.size() - 1);
  }

  // Orient a relation element (largest word -> the rest) and insert it.
  // Existing rules whose left side becomes reducible are rederived.
  std::size_t add_oriented(Element<S> elem, const std::string& origin) {
    if (elem.is_zero()) throw RewriteError("add_oriented: zero relation '" + origin + "'");
    const auto& [w, c] = elem.leading_term();
    if (w.size() == 0)
      throw RewriteError("add_oriented: relation '" + origin +
                         "' reduces to a nonzero scalar (inconsistent presentation)");
    if (w.size() < 2)
      throw RewriteError("add_oriented: relation '" + origin +
                         "' would rewrite the single letter " + w.str() +
                         " (cannot orient consistently)");
    SuperWord lhs = w;
    Element<S> rhs = (Element<S>::word(w, c) - elem).scaled(S(1) / c);
    Parity p = lhs.parity();
    for (const auto& [rw, rc] : rhs.terms()) {
      if (!(rw < lhs))
        throw RewriteError("add_oriented: relation '" + origin + "' is not order-decreasing");
      if (rw.parity() != p)
        throw RewriteError("add_oriented: relation '" + origin + "' mixes parities");
    }
    rules_.push_back({std::move(lhs), std::move(rhs), origin, true});
    std::size_t id = rules_.size() - 1;
    by_first_[rules_[id].lhs.at(0)].push_back(id);

    // Rederive any rule whose lhs now contains the new lhs.
    std::vector<std::pair<Element<S>, std::string>> pending;
    for (std::size_t j = 0; j + 1 < rules_.size(); ++j) {
      Rule& r = rules_[j];
      if (!r.active) continue;
      bool reducible = false;
      for (std::size_t pos = 0; pos + rules_[id].lhs.size() <= r.lhs.size() && !reducible; ++pos)
        if (r.lhs.matches_at(rules_[id].lhs, pos)) reducible = true;
      if (reducible) {
        r.active = false;
        pending.push_back({Element<S>::word(r.lhs) - r.rhs, r.origin});
      }
    }
    for (auto& [el, org] : pending) {
      Element<S> nf = normal_form_of(el);
      if (!nf.is_zero()) add_oriented(std::move(nf), org);
    }
    return id;
  }

  Element<S> normal_form_of(const Element<S>& x, ReduceStats* stats = nullptr,
                            std::vector<std::string>* trace = nullptr) const;

  // Reduce every right-hand side to normal form.  Left-hand sides reducible
  // by other rules are already rederived eagerly in add_oriented.
  void reduce_rhs_all() {
    for (auto& r : rules_) {
      if (!r.active) continue;
      r.rhs = normal_form_of(r.rhs);
    }
  }

 private:
  std::vector<Rule> rules_;
  std::map<GeneratorSymbol, std::vector<std::size_t>> by_first_;
  int degree_bound_;
  bool closed_ = false;
};

// ---------------------------------------------------------------------------
// Normal forms.
//
// Terms are processed largest-first: reducing a word only ever produces
// strictly smaller words, so each word is popped once, after every
// contribution to it has been merged.  Within a word, the strategy is the
// leftmost reducible position with the lowest-numbered matching rule.

template <class S>
Element<S> RewriteSystem<S>::normal_form_of(const Element<S>& x, ReduceStats* stats,
                                            std::vector<std::string>* trace) const {
  constexpr std::size_t kTraceCap = 20000;
  Element<S> pending = x;
  Element<S> result;
  while (!pending.is_zero()) {
    auto [w, c] = pending.pop_leading();
    if (static_cast<int>(w.size()) > degree_bound_) {
      if (stats) stats->bound_hit = true;
      result.add_term(w, c);
      continue;
    }
    int rule_id = -1;
    std::size_t pos = 0;
    for (; pos < w.size(); ++pos) {
      rule_id = match_at(w, pos);
      if (rule_id >= 0) break;
    }
    if (rule_id < 0) {
      result.add_term(w, c);
      continue;
    }
    const Rule& r = rules_[static_cast<std::size_t>(rule_id)];
    if (stats) ++stats->steps;
    if (trace && trace->size() < kTraceCap)
      trace->push_back(w.str() + "  --[" + r.origin + " @" + std::to_string(pos) + "]");
    for (const auto& [u, cu] : r.rhs.terms())
      pending.add_term(w.splice(pos, r.lhs.size(), u), c * cu);
  }
  return result;
}

template <class S>
Element<S> normal_form(const Element<S>& x, const RewriteSystem<S>& rs,
                       ReduceStats* stats = nullptr, std::vector<std::string>* trace = nullptr) {
  return rs.normal_form_of(x, stats, trace);
}

// Randomized reduction strategy; must agree with normal_form within the
// completed degree range (confluence).
template <class S>
Element<S> normal_form_shuffled(const Element<S>& x, const RewriteSystem<S>& rs,
                                std::mt19937_64& rng) {
  Element<S> cur = x;
  for (;;) {
    std::vector<std::pair<SuperWord, std::vector<std::pair<std::size_t, std::size_t>>>> reducible;
    for (const auto& [w, c] : cur.terms()) {
      if (static_cast<int>(w.size()) > rs.degree_bound()) continue;
      auto m = rs.all_matches(w);
      if (!m.empty()) reducible.push_back({w, std::move(m)});
    }
    if (reducible.empty()) return cur;
    std::uniform_int_distribution<std::size_t> dt(0, reducible.size() - 1);
    const auto& [w, matches] = reducible[dt(rng)];
    std::uniform_int_distribution<std::size_t> dm(0, matches.size() - 1);
    auto [pos, rule_id] = matches[dm(rng)];
    const auto& r = rs.rules()[rule_id];
    S c = cur.coeff(w);
    cur.add_term(w, -c);
    for (const auto& [u, cu] : r.rhs.terms())
      cur.add_term(w.splice(pos, r.lhs.size(), u), c * cu);
  }
}

// ---------------------------------------------------------------------------
// Completion.

struct CompletionStats {
  std::size_t overlaps_processed = 0;
  std::size_t rules_added = 0;
  bool closed = false;
};

// Resolves every overlap ambiguity of combined degree <= the system bound,
// in increasing overlap degree.  Nonzero resolution differences become new
// oriented rules.  Throws when the rule count passes the ceiling.
template <class S>
CompletionStats complete(RewriteSystem<S>& rs, std::size_t rule_ceiling = 20000) {
  using Key = std::array<std::size_t, 4>;  // (overlap len, rule a, rule b, offset)
  std::set<Key> queue;

  auto enqueue_pair = [&](std::size_t a, std::size_t b) {
    const SuperWord& u = rs.rules()[a].lhs;
    const SuperWord& v = rs.rules()[b].lhs;
    std::size_t start = (a == b) ? 1 : 0;
    for (std::size_t p = start; p < u.size(); ++p) {
      // letters must agree on the intersection of [0,|u|) and [p, p+|v|)
      std::size_t upper = std::min(u.size(), p + v.size());
      bool ok = true;
      for (std::size_t t = p; t < upper && ok; ++t)
        if (!(u.at(t) == v.at(t - p))) ok = false;
      if (!ok) continue;
      std::size_t len = std::max(u.size(), p + v.size());
      queue.insert({len, a, b, p});
    }
  };

  const std::size_t initial = rs.rules().size();
  for (std::size_t a = 0; a < initial; ++a)
    for (std::size_t b = 0; b < initial; ++b)
      if (rs.rules()[a].active && rs.rules()[b].active) enqueue_pair(a, b);

  CompletionStats st;
  bool skipped_any = false;
  while (!queue.empty()) {
    Key k = *queue.begin();
    queue.erase(queue.begin());
    auto [len, a, b, p] = k;
    if (static_cast<int>(len) > rs.degree_bound()) {
      // queue is ordered by length; everything left is out of range
      skipped_any = true;
      break;
    }
    if (a >= rs.rules().size() || b >= rs.rules().size()) continue;
    if (!rs.rules()[a].active || !rs.rules()[b].active) continue;
    const SuperWord u = rs.rules()[a].lhs;
    const SuperWord v = rs.rules()[b].lhs;
    // revalidate (rules may have been rederived under the same slot ids)
    std::size_t upper = std::min(u.size(), p + v.size());
    bool ok = p < u.size();
    for (std::size_t t = p; t < upper && ok; ++t)
      if (!(u.at(t) == v.at(t - p))) ok = false;
    if (!ok) continue;

    SuperWord w = (p + v.size() > u.size()) ? u.concat(v.subword(u.size() - p, p + v.size() - u.size()))
                                            : u;
    ++st.overlaps_processed;
    Element<S> t1 = rs.rules()[a].rhs * Element<S>::word(w.subword(u.size(), w.size() - u.size()));
    Element<S> t2 = Element<S>::word(w.subword(0, p)) * rs.rules()[b].rhs *
                    Element<S>::word(w.subword(p + v.size(), w.size() - p - v.size()));
    Element<S> d = normal_form(t1, rs) - normal_form(t2, rs);
    if (d.is_zero()) continue;
    d = normal_form(d, rs);
    if (d.is_zero()) continue;
    std::size_t before = rs.rules().size();
    std::size_t id = rs.add_oriented(std::move(d), "cp(" + rs.rules()[a].origin + "," +
                                                      rs.rules()[b].origin + ")");
    st.rules_added += rs.rules().size() - before;
    if (rs.rules().size() > rule_ceiling)
      throw RewriteError("complete: rule ceiling " + std::to_string(rule_ceiling) +
                         " exceeded while resolving overlap of '" + rs.rules()[a].origin +
                         "' and '" + rs.rules()[b].origin + "'");
    for (std::size_t other = 0; other < rs.rules().size(); ++other) {
      if (!rs.rules()[other].active) continue;
      for (std::size_t nid = id; nid < rs.rules().size(); ++nid) {
        if (!rs.rules()[nid].active) continue;
        enqueue_pair(other, nid);
        if (other != nid) enqueue_pair(nid, other);
      }
    }
  }
  st.closed = !skipped_any;
  rs.set_completion_closed(st.closed);
  rs.reduce_rhs_all();
  return st;
}

// ---------------------------------------------------------------------------
// build_rules: oriented system from the deformed Chevalley presentation,
// plus the forced kbar exchange rules (consequences of k kbar = 1 that the
// completion would otherwise rediscover one overlap at a time).

inline RewriteSystem<QScalar> build_rules(const Presentation& p, int degree_bound) {
  if (!p.deformed || p.green)
    throw RewriteError("build_rules: expected the deformed Chevalley presentation");
  RewriteSystem<QScalar> rs(degree_bound);
  for (const auto& rel : p.relations) rs.add_oriented(rel.element, rel.name);

  const AlgebraSignature sig = p.sig;
  const CartanMatrix cm = cartan_matrix(sig);
  const int N = sig.N();
  using El = Element<QScalar>;
  auto E = [&](int i) { return El::letter(sym_e(sig, i)); };
  auto F = [&](int i) { return El::letter(sym_f(sig, i)); };
  auto K = [&](int i) { return El::letter(sym_k(sig, i)); };
  auto Kb = [&](int i) { return El::letter(sym_kbar(sig, i)); };

  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      // kbar_i e_j = q^(-a_ij) e_j kbar_i and kbar_i f_j = q^(a_ij) f_j kbar_i
      rs.add_oriented(Kb(i) * E(j) - (E(j) * Kb(i)).scaled(QScalar::q_pow(-cm.at(i, j))),
                      "ck-kbare" + detail::idx2(i, j));
      rs.add_oriented(Kb(i) * F(j) - (F(j) * Kb(i)).scaled(QScalar::q_pow(cm.at(i, j))),
                      "ck-kbarf" + detail::idx2(i, j));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      rs.add_oriented(Kb(i) * Kb(j) - Kb(j) * Kb(i), "ck-kbarkbar" + detail::idx2(i, j));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (i != j) rs.add_oriented(K(i) * Kb(j) - Kb(j) * K(i), "ck-kkbarx" + detail::idx2(i, j));
  return rs;
}

// Green-side system for the experimental converse direction: the theorem's
// relations oriented over the a/L alphabet, plus Lbar exchange rules.
inline RewriteSystem<QScalar> build_green_rules(const Presentation& p, int degree_bound) {
  if (!p.deformed || !p.green)
    throw RewriteError("build_green_rules: expected the deformed Green presentation");
  RewriteSystem<QScalar> rs(degree_bound);
  for (const auto& rel : p.relations) rs.add_oriented(rel.element, rel.name);

  const AlgebraSignature sig = p.sig;
  const int N = sig.N();
  using El = Element<QScalar>;
  auto A = [&](int i, int s) { return El::letter(sym_a(sig, i, s)); };
  auto L = [&](int i) { return El::letter(sym_L(sig, i)); };
  auto Lb = [&](int i) { return El::letter(sym_Lbar(sig, i)); };
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      for (int s : {+1, -1}) {
        int expo = (i == j) ? -s * sig.grade_sign(i) : 0;
        rs.add_oriented(Lb(i) * A(j, s) - (A(j, s) * Lb(i)).scaled(QScalar::q_pow(expo)),
                        "green-2bar" + detail::idx2(i, j) + detail::sgn_str(s));
      }
      if (i != j) rs.add_oriented(L(i) * Lb(j) - Lb(j) * L(i), "green-1x" + detail::idx2(i, j));
      if (i < j) rs.add_oriented(Lb(i) * Lb(j) - Lb(j) * Lb(i), "green-1y" + detail::idx2(i, j));
    }
  return rs;
}

// ---------------------------------------------------------------------------
// Verdicts and identity checks.

struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string witness;  // rendered nonzero normal form when Refuted
  int bound_used = 0;
  long reduction_steps = 0;
};

template <class S>
Verdict verify_identity(const Element<S>& lhs, const Element<S>& rhs,
                        const RewriteSystem<S>& rs) {
  ReduceStats st;
  Element<S> nf = normal_form(lhs - rhs, rs, &st);
  Verdict v;
  v.bound_used = rs.degree_bound();
  v.reduction_steps = st.steps;
  if (st.bound_hit) {
    v.status = VerdictStatus::Inconclusive;
  } else if (nf.is_zero()) {
    v.status = VerdictStatus::Proved;
  } else {
    v.status = VerdictStatus::Refuted;
    v.witness = nf.str();
  }
  return v;
}

template <class S>
Verdict verify_zero_r2(const RootTwoElement<S>& x, const RewriteSystem<S>& rs,
                       std::vector<std::string>* trace = nullptr) {
  ReduceStats st;
  Element<S> nr = normal_form(x.rat, rs, &st, trace);
  Element<S> ni = normal_form(x.irr, rs, &st, trace);
  Verdict v;
  v.bound_used = rs.degree_bound();
  v.reduction_steps = st.steps;
  if (st.bound_hit) {
    v.status = VerdictStatus::Inconclusive;
  } else if (nr.is_zero() && ni.is_zero()) {
    v.status = VerdictStatus::Proved;
  } else {
    v.status = VerdictStatus::Refuted;
    v.witness = RootTwoElement<S>{nr, ni}.str();
  }
  return v;
}

}  // namespace ospq
