#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "subtrees/canonical.hpp"
#include "subtrees/counting.hpp"
#include "subtrees/enumeration.hpp"
#include "subtrees/families.hpp"
#include "subtrees/invariants.hpp"
#include "subtrees/structure.hpp"
#include "subtrees/transforms.hpp"

namespace subtrees {

/// One checked claim: a theorem at one (order, parameter, quantity), or a
/// whole lemma property suite.
struct VerificationResult {
  std::string theorem;
  std::size_t n = 0;
  std::map<std::string, std::int64_t> params;  // constraint echo (q, gamma, delta, k, d) or suite settings
  std::string quantity;                        // "F", "Fstar", or "property"
  std::string direction;                       // "max", "min", or "property"
  std::optional<Count> claimed;
  std::optional<Count> achieved;
  std::size_t class_size = 0;  // trees in the class, or instances sampled
  std::vector<CanonicalForm> extremizers;
  std::optional<CanonicalForm> expected;
  bool uniqueness_asserted = false;
  bool pass = false;
  std::optional<Tree> counterexample;
  std::string note;
};

struct VerifyOptions {
  /// How the diameter-class display joins its binomials.
  HatVariant hat_variant = HatVariant::sum;
  /// Check the diameter-class statement as printed ("minimizes") instead of
  /// the maximum its proof establishes.
  bool literal_t48_minimize = false;
  std::size_t max_order = kDefaultMaxOrder;
};

inline constexpr std::array<std::string_view, 9> kTheoremTags{"T4.1", "T4.2", "T4.3", "T4.4", "T4.5",
                                                              "T4.6", "T4.7", "T4.8", "L2star"};
inline constexpr std::array<std::string_view, 7> kLemmaTags{
    "L3.1", "L3.2", "L3.3", "leaf-deletion", "pendant-edge", "path-attachment", "path-comparison"};

/// Smallest order each theorem speaks about; lower orders are skipped.
inline std::size_t theorem_min_order(std::string_view tag) {
  if (tag == "T4.3" || tag == "T4.6") return 4;
  if (tag == "T4.4") return 6;
  for (auto t : kTheoremTags)
    if (t == tag) return 3;
  throw Error(ErrorKind::UnknownTag, "unknown theorem tag '" + std::string(tag) + "'");
}

namespace detail {

struct TreeStats {
  CanonicalForm form;
  Count F;
  Count Fstar;
  std::size_t matching = 0;
  std::size_t domination = 0;
  std::size_t diameter = 0;
  std::size_t leaves = 0;
  std::size_t max_degree = 0;
  bool perfect_matching = false;
};

/// Every tree of order n with its invariants, sorted by canonical form so the
/// result does not depend on how the work was sharded.
inline std::vector<TreeStats> tree_stats(std::size_t n, std::size_t jobs, std::size_t max_order) {
  if (jobs == 0) throw Error(ErrorKind::BadParams, "jobs must be at least 1");
  std::vector<std::vector<TreeStats>> parts(jobs);
  auto work = [&](std::size_t shard) {
    for_each_tree(
        n,
        [&](const Tree& t) {
          TreeStats s;
          s.form = canonical_form(t);
          s.F = count_subtrees(t);
          s.Fstar = count_leaf_subtrees(t);
          s.matching = matching_number(t);
          s.domination = domination_number(t);
          s.diameter = subtrees::diameter(t);
          s.leaves = t.leaf_count();
          s.max_degree = t.max_degree();
          s.perfect_matching = 2 * s.matching == n;
          parts[shard].push_back(std::move(s));
        },
        shard, jobs, max_order);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t s = 0; s < jobs; ++s) pool.emplace_back(work, s);
  }
  std::vector<TreeStats> all;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const TreeStats& a, const TreeStats& b) { return a.form < b.form; });
  return all;
}

/// One (class, quantity, direction) claim to test against the stats.
struct Claim {
  std::map<std::string, std::int64_t> params;
  std::function<bool(const TreeStats&)> member;
  Quantity quantity = Quantity::F;
  bool maximize = true;
  bool unique = true;
  FamilySpec expected;
  std::string note;
};

inline VerificationResult evaluate(const std::string& tag, std::size_t n, const std::vector<TreeStats>& stats,
                                   const Claim& claim, const VerifyOptions& options) {
  VerificationResult r;
  r.theorem = tag;
  r.n = n;
  r.params = claim.params;
  r.quantity = std::string(to_string(claim.quantity));
  r.direction = claim.maximize ? "max" : "min";
  r.uniqueness_asserted = claim.unique;
  r.note = claim.note;

  std::optional<Count> best;
  for (const TreeStats& s : stats) {
    if (!claim.member(s)) continue;
    ++r.class_size;
    const Count& value = claim.quantity == Quantity::F ? s.F : s.Fstar;
    const bool better = !best || (claim.maximize ? value > *best : value < *best);
    if (better) {
      best = value;
      r.extremizers.clear();
    }
    if (better || value == *best) r.extremizers.push_back(s.form);
  }
  if (r.class_size == 0) {
    r.pass = true;
    r.note += (r.note.empty() ? "" : "; ") + std::string("empty class, vacuous pass");
    return r;
  }
  r.achieved = best;
  const Tree expected_tree = construct(claim.expected);
  r.expected = canonical_form(expected_tree);
  r.claimed = closed_form(claim.expected, claim.quantity, options.hat_variant).value;

  const bool value_ok = *r.achieved == *r.claimed;
  const bool member_ok = std::find(r.extremizers.begin(), r.extremizers.end(), *r.expected) != r.extremizers.end();
  const bool unique_ok = !claim.unique || r.extremizers.size() == 1;
  r.pass = value_ok && member_ok && unique_ok;
  if (!r.pass) {
    // The witness: an extremizer other than the expected tree if there is
    // one, else the first extremizer.
    CanonicalForm witness = r.extremizers.front();
    for (const auto& f : r.extremizers)
      if (f != *r.expected) {
        witness = f;
        break;
      }
    r.counterexample = tree_from_level_sequence(witness.level_seq);
    std::string why;
    if (!value_ok) why += "achieved " + to_decimal(*r.achieved) + " vs claimed " + to_decimal(*r.claimed);
    if (!member_ok) why += std::string(why.empty() ? "" : "; ") + "expected extremizer not optimal";
    if (!unique_ok) {
      why += std::string(why.empty() ? "" : "; ") + std::to_string(r.extremizers.size()) + " extremizers";
    }
    r.note += (r.note.empty() ? "" : "; ") + why;
  }
  return r;
}

inline std::vector<Claim> claims_for(std::string_view tag, std::size_t order, const VerifyOptions& options) {
  const auto n = static_cast<std::int64_t>(order);
  std::vector<Claim> out;
  auto both = [&](Claim c) {
    c.quantity = Quantity::F;
    out.push_back(c);
    c.quantity = Quantity::Fstar;
    out.push_back(std::move(c));
  };
  if (tag == "T4.1") {
    for (std::int64_t q = 1; 2 * q <= n; ++q) {
      both({{{"q", q}},
            [q](const TreeStats& s) { return static_cast<std::int64_t>(s.matching) == q; },
            Quantity::F, true, true, make_spec(Family::A_nq, {{"n", n}, {"q", q}}), ""});
    }
  } else if (tag == "T4.2") {
    for (std::int64_t g = 1; 2 * g <= n; ++g) {
      both({{{"gamma", g}},
            [g](const TreeStats& s) { return static_cast<std::int64_t>(s.domination) == g; },
            Quantity::F, true, false, make_spec(Family::A_nq, {{"n", n}, {"q", g}}), ""});
    }
  } else if (tag == "T4.3") {
    if (n % 2 == 0) {
      both({{{"gamma", n / 2}},
            [n](const TreeStats& s) { return 2 * static_cast<std::int64_t>(s.domination) == n; },
            Quantity::F, false, true, make_spec(Family::corona_path, {{"m", n / 2}}), ""});
    }
  } else if (tag == "T4.4") {
    Claim c{{{"gamma", 2}},
            [](const TreeStats& s) { return s.domination == 2; },
            Quantity::F, false, true,
            make_spec(Family::Pk_ab, {{"k", 4}, {"a", (n - 4) / 2}, {"b", (n - 3) / 2}}), ""};
    if (n == 6) c.note = "P_4(1^1,1^1) is P_6";
    both(std::move(c));
  } else if (tag == "T4.5") {
    for (std::int64_t delta = 3; delta <= n - 1; ++delta) {
      out.push_back({{{"delta", delta}},
                     [delta](const TreeStats& s) { return static_cast<std::int64_t>(s.max_degree) >= delta; },
                     Quantity::Fstar, false, true, make_spec(Family::T_nDelta, {{"n", n}, {"delta", delta}}), ""});
    }
  } else if (tag == "T4.6") {
    if (n % 2 == 0) {
      for (std::int64_t delta = 3; delta <= n - 1; ++delta) {
        both({{{"delta", delta}},
              [delta](const TreeStats& s) {
                return s.perfect_matching && static_cast<std::int64_t>(s.max_degree) >= delta;
              },
              Quantity::F, false, true, make_spec(Family::Tprime_nDelta, {{"n", n}, {"delta", delta}}), ""});
      }
    }
  } else if (tag == "T4.7") {
    for (std::int64_t k = 2; k <= n - 1; ++k) {
      out.push_back({{{"k", k}},
                     [k](const TreeStats& s) { return static_cast<std::int64_t>(s.leaves) == k; },
                     Quantity::Fstar, true, true, make_spec(Family::spider_Tnk, {{"n", n}, {"k", k}}), ""});
    }
  } else if (tag == "T4.8") {
    const bool maximize = !options.literal_t48_minimize;
    std::string note;
    if (options.hat_variant == HatVariant::product) note = "claimed value uses the product reading of the binomial pair";
    if (options.literal_t48_minimize) {
      note += std::string(note.empty() ? "" : "; ") + "literal reading: minimize";
    }
    for (std::int64_t d = 2; d <= n - 1; ++d) {
      both({{{"d", d}},
            [d](const TreeStats& s) { return static_cast<std::int64_t>(s.diameter) == d; },
            Quantity::F, maximize, true, make_spec(Family::hat_T_ndk, {{"n", n}, {"d", d}, {"k", d / 2 + 1}}), note});
    }
  } else if (tag == "L2star") {
    auto all = [](const TreeStats&) { return true; };
    out.push_back({{}, all, Quantity::Fstar, false, true, make_spec(Family::path, {{"n", n}}), ""});
    out.push_back({{}, all, Quantity::Fstar, true, true, make_spec(Family::star, {{"n", n}}), ""});
  } else {
    throw Error(ErrorKind::UnknownTag, "unknown theorem tag '" + std::string(tag) + "'");
  }
  return out;
}

}  // namespace detail

/// Exhaustive check of one extremal theorem for every order in
/// [n_min, n_max] (orders below the theorem's range are skipped) and every
/// parameter value. Results are ordered by (n, parameter, quantity) and do
/// not depend on `jobs`.
inline std::vector<VerificationResult> verify_theorem(std::string_view tag, std::size_t n_min, std::size_t n_max,
                                                      std::size_t jobs = 1, const VerifyOptions& options = {}) {
  const std::size_t lowest = theorem_min_order(tag);
  if (n_max > options.max_order) {
    throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n_max) + " exceeds the enumeration cap " +
                                         std::to_string(options.max_order));
  }
  std::vector<VerificationResult> results;
  for (std::size_t n = std::max(n_min, lowest); n <= n_max; ++n) {
    const auto claims = detail::claims_for(tag, n, options);
    if (claims.empty()) continue;
    const auto stats = detail::tree_stats(n, jobs, options.max_order);
    for (const auto& claim : claims) results.push_back(detail::evaluate(std::string(tag), n, stats, claim, options));
  }
  return results;
}

inline bool all_pass(const std::vector<VerificationResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const VerificationResult& r) { return r.pass; });
}

namespace detail {

/// f*_T(v) with the value 0 on a single vertex, where no other leaf exists.
inline Count leaf_count_at_or_zero(const Tree& t, Vertex v) {
  return t.order() == 1 ? Count(0) : count_leaf_subtrees_at(t, v);
}

/// Tree t with a new path of k vertices whose i-th vertex (1-based) is t's
/// vertex x.
inline Tree attach_path(const Tree& t, Vertex x, std::size_t k, std::size_t i) {
  std::vector<Edge> edges = t.edges();
  std::size_t next = t.order();
  std::vector<Vertex> path(k);
  for (std::size_t j = 1; j <= k; ++j) path[j - 1] = j == i ? x : next++;
  for (std::size_t j = 1; j < k; ++j) edges.emplace_back(path[j - 1], path[j]);
  return Tree(next, std::move(edges));
}

class SuiteRun {
 public:
  SuiteRun(std::string tag, std::size_t samples, std::uint64_t seed) : rng_(seed) {
    result_.theorem = std::move(tag);
    result_.quantity = "property";
    result_.direction = "property";
    result_.params = {{"samples", static_cast<std::int64_t>(samples)}, {"seed", static_cast<std::int64_t>(seed)}};
  }

  std::mt19937_64& rng() { return rng_; }

  std::size_t uniform(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  Tree random(std::size_t lo, std::size_t hi) {
    const std::size_t n = uniform(lo, hi);
    result_.n = std::max(result_.n, n);
    return random_tree(n, rng_);
  }

  void instance() { ++result_.class_size; }

  void require(bool ok, const Tree& t, const std::string& what) {
    if (ok) return;
    ++violations_;
    if (!result_.counterexample) {
      result_.counterexample = t;
      first_violation_ = what;
    }
  }

  void tally(const std::string& key) { ++tallies_[key]; }

  VerificationResult finish() {
    result_.pass = violations_ == 0 && result_.class_size > 0;
    std::string note = std::to_string(violations_) + " violations";
    if (!first_violation_.empty()) note += " (first: " + first_violation_ + ")";
    for (const auto& [key, count] : tallies_) note += "; " + key + ": " + std::to_string(count);
    result_.note = note;
    return result_;
  }

 private:
  std::mt19937_64 rng_;
  VerificationResult result_;
  std::size_t violations_ = 0;
  std::string first_violation_;
  std::map<std::string, std::size_t> tallies_;
};

inline void suite_a_transform(SuiteRun& run, std::size_t samples) {
  while (samples > 0) {
    const Tree t = run.random(3, 16);
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.degree(v) >= 2) candidates.push_back(v);
    const Vertex u = candidates[run.uniform(0, candidates.size() - 1)];
    // A proper, nonempty subset of u's branches, so T' keeps a vertex besides u.
    const auto nbrs = t.neighbors(u);
    std::vector<Vertex> chosen;
    for (Vertex c : nbrs)
      if (run.uniform(0, 1)) chosen.push_back(c);
    if (chosen.empty()) chosen.push_back(nbrs[run.uniform(0, nbrs.size() - 1)]);
    if (chosen.size() == nbrs.size()) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(run.uniform(0, chosen.size() - 1)));
    --samples;
    run.instance();

    const Tree after = a_transform(t, u, chosen).tree;
    const bool path_at_end = chosen.size() == 1 && pendant_path_length(t, u, chosen.front()) > 0;
    const Count f1 = count_subtrees(t), f2 = count_subtrees(after);
    const Count s1 = count_leaf_subtrees(t), s2 = count_leaf_subtrees(after);
    run.require(f1 >= f2, t, "F increased");
    run.require(s1 >= s2, t, "F* increased");
    run.require((f1 == f2) == path_at_end, t, "F equality iff replaced part is a pendant path");
    run.require((s1 == s2) == path_at_end, t, "F* equality iff replaced part is a pendant path");
    run.require(is_isomorphic(t, after) == path_at_end, t, "output isomorphic iff replaced part is a pendant path");
    if (path_at_end) run.tally("equality cases");
  }
}

inline void suite_b_transform(SuiteRun& run, std::size_t samples) {
  while (samples > 0) {
    const Tree t = run.random(4, 16);
    std::vector<Edge> inner;
    for (const Edge& e : t.edges())
      if (t.degree(e.u) >= 2 && t.degree(e.v) >= 2) inner.push_back(e);
    if (inner.empty()) continue;
    const Edge e = inner[run.uniform(0, inner.size() - 1)];
    --samples;
    run.instance();
    const bool flip = run.uniform(0, 1) == 1;
    const Tree after = b_transform(t, flip ? e.v : e.u, flip ? e.u : e.v).tree;
    const Count f1 = count_subtrees(t), f2 = count_subtrees(after);
    const Count s1 = count_leaf_subtrees(t), s2 = count_leaf_subtrees(after);
    run.require(f1 < f2, t, "F did not strictly increase");
    run.require(s1 < s2, t, "F* did not strictly increase");
    if (f1 == f2 || s1 == s2) run.tally("equality cases");
  }
}

inline void suite_c_transform(SuiteRun& run, std::size_t samples) {
  while (samples > 0) {
    const Tree t = run.random(4, 16);
    std::vector<Vertex> applicable;
    for (Vertex v = 0; v < t.order(); ++v) {
      try {
        c_transform(t, v);
        applicable.push_back(v);
      } catch (const Error&) {
      }
    }
    if (applicable.empty()) continue;
    const Vertex v = applicable[run.uniform(0, applicable.size() - 1)];
    --samples;
    run.instance();
    const auto result = c_transform(t, v);
    const Tree& after = result.tree;
    run.require(count_subtrees(t) < count_subtrees(after), t, "F did not strictly increase");
    run.require(count_leaf_subtrees(t) < count_leaf_subtrees(after), t, "F* did not strictly increase");
    run.require(t.leaf_count() == after.leaf_count(), t, "leaf count changed");
    run.require(diameter(after) <= diameter(t), t, "diameter increased");
    run.tally(result.kind == TransformKind::Cprime ? "Cprime instances" : "C instances");
  }
}

inline void suite_leaf_deletion(SuiteRun& run, std::size_t samples) {
  for (std::size_t i = 0; i < samples; ++i) {
    const Tree t = run.random(3, 16);
    const auto leaves = t.leaves();
    const Vertex u = leaves[run.uniform(0, leaves.size() - 1)];
    run.instance();
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < t.order(); ++v)
      if (v != u) keep.push_back(v);
    const Component c = induced_component(t, keep, keep.front());
    const Tree& smaller = c.tree;
    run.require(count_subtrees(smaller) < count_subtrees(t), t, "F(T-u) >= F(T)");
    run.require(count_leaf_subtrees(smaller) < count_leaf_subtrees(t), t, "F*(T-u) >= F*(T)");
    const auto f = subtree_counts_at_all(t);
    const auto fs = leaf_subtree_counts_at_all(t);
    const auto g = subtree_counts_at_all(smaller);
    const auto gs = leaf_subtree_counts_at_all(smaller);
    const bool is_path = t.max_degree() <= 2;
    for (Vertex v = 0; v < smaller.order(); ++v) {
      const Vertex host = c.to_host[v];
      run.require(g[v] < f[host], t, "f did not drop");
      run.require(gs[v] <= fs[host], t, "f* increased");
      const bool other_leaf = is_path && t.is_leaf(host);
      run.require((gs[v] == fs[host]) == other_leaf, t, "f* equality iff path and the other leaf");
      if (other_leaf) run.tally("equality cases");
    }
  }
}

inline void suite_pendant_edge(SuiteRun& run, std::size_t samples) {
  for (std::size_t i = 0; i < samples; ++i) {
    const Tree t = run.random(2, 16);
    run.instance();
    const auto f = subtree_counts_at_all(t);
    const auto fs = leaf_subtree_counts_at_all(t);
    const bool k2 = t.order() == 2;
    for (Vertex u : t.leaves()) {
      const Vertex v = t.neighbors(u).front();
      run.require(f[u] <= f[v], t, "f(u) > f(v)");
      run.require(fs[u] <= fs[v], t, "f*(u) > f*(v)");
      run.require((f[u] == f[v]) == k2, t, "f equality iff K_2");
      run.require((fs[u] == fs[v]) == k2, t, "f* equality iff K_2");
    }
    if (k2) run.tally("K_2 instances");
  }
}

inline void suite_path_attachment(SuiteRun& run, std::size_t samples) {
  for (std::size_t s = 0; s < samples; ++s) {
    const Tree base = run.random(2, 10);
    const Vertex x = run.uniform(0, base.order() - 1);
    const std::size_t k = run.uniform(2, 9);
    run.instance();
    std::vector<Count> F(k + 1), Fs(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
      const Tree ti = attach_path(base, x, k, i);
      F[i] = count_subtrees(ti);
      Fs[i] = count_leaf_subtrees(ti);
    }
    for (std::size_t i = 1; i <= k; ++i) {
      run.require(F[i] == F[k - i + 1], base, "F(T_i) != F(T_{k-i+1})");
      run.require(Fs[i] == Fs[k - i + 1], base, "F*(T_i) != F*(T_{k-i+1})");
    }
    for (std::size_t i = 1; i < (k + 1) / 2; ++i) {
      run.require(F[i] < F[i + 1], base, "F not strictly increasing toward the middle");
      run.require(Fs[i] < Fs[i + 1], base, "F* not strictly increasing toward the middle");
    }
  }
}

inline void suite_path_comparison(SuiteRun& run, std::size_t samples) {
  while (samples > 0) {
    // Build W = x - x_1 .. x_m - [z] - y_m .. y_1 - y from random rooted pieces
    // with f_{X_i}(x_i) >= f_{Y_i}(y_i) and f*_{X_i}(x_i) >= f*_{Y_i}(y_i).
    const std::size_t m = run.uniform(0, 3);
    const bool with_z = run.uniform(0, 1) == 1;
    if (m == 0 && !with_z) continue;
    struct Piece {
      Tree tree;
      Vertex root;
      Count f, fs;
    };
    auto piece = [&] {
      Tree t = random_tree(run.uniform(1, 5), run.rng());
      const Vertex r = run.uniform(0, t.order() - 1);
      Count f = count_subtrees_at(t, r), fs = leaf_count_at_or_zero(t, r);
      return Piece{std::move(t), r, std::move(f), std::move(fs)};
    };
    std::vector<std::pair<Piece, Piece>> pairs;
    bool comparable = true;
    for (std::size_t i = 0; i < m && comparable; ++i) {
      Piece a = piece(), b = piece();
      if (a.f >= b.f && a.fs >= b.fs) {
        pairs.emplace_back(std::move(a), std::move(b));
      } else if (b.f >= a.f && b.fs >= a.fs) {
        pairs.emplace_back(std::move(b), std::move(a));
      } else {
        comparable = false;
      }
    }
    if (!comparable) continue;
    --samples;
    run.instance();

    std::vector<Edge> edges;
    std::size_t next = 2;  // x = 0, y = 1
    auto place = [&](const Piece& p) {
      const std::size_t offset = next;
      for (const Edge& e : p.tree.edges()) edges.emplace_back(offset + e.u, offset + e.v);
      next += p.tree.order();
      return offset + p.root;
    };
    std::vector<Vertex> path{0};
    for (const auto& pr : pairs) path.push_back(place(pr.first));
    std::vector<Vertex> ys;
    for (const auto& pr : pairs) ys.push_back(place(pr.second));
    std::optional<Piece> z;
    if (with_z) {
      z = piece();
      path.push_back(place(*z));
    }
    path.insert(path.end(), ys.rbegin(), ys.rend());
    path.push_back(1);
    for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
    const Tree w(next, std::move(edges));

    // The decomposition must hand back the pieces we glued in.
    const auto d = path_decomposition(w, 0, 1);
    bool pieces_ok = d.x_components.size() == pairs.size() && d.z_component.has_value() == with_z;
    for (std::size_t i = 0; pieces_ok && i < pairs.size(); ++i) {
      pieces_ok = count_subtrees_at(d.x_components[i].tree, d.x_components[i].root) == pairs[i].first.f &&
                  count_subtrees_at(d.y_components[i].tree, d.y_components[i].root) == pairs[i].second.f;
    }
    run.require(pieces_ok, w, "path decomposition does not match the construction");

    const Count fx = count_subtrees_at(w, 0), fy = count_subtrees_at(w, 1);
    const Count sx = count_leaf_subtrees_at(w, 0), sy = count_leaf_subtrees_at(w, 1);
    run.require(fx >= fy, w, "f_W(x) < f_W(y)");
    run.require(sx >= sy, w, "f*_W(x) < f*_W(y)");
    const bool strict_f = std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.first.f > p.second.f; });
    const bool strict_fs =
        std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.first.fs > p.second.fs; });
    if (strict_f) run.require(fx > fy, w, "strict f pair but f_W(x) = f_W(y)");
    if (strict_fs) run.require(sx > sy, w, "strict f* pair but f*_W(x) = f*_W(y)");
    if (strict_f && sx == sy) run.tally("strict f pair with f*_W(x) = f*_W(y)");
  }
}

}  // namespace detail

/// Runs one lemma property suite on `samples` random instances drawn from a
/// generator seeded with `seed`.
inline std::vector<VerificationResult> run_lemma_suite(std::string_view tag, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorKind::BadParams, "samples must be at least 1");
  detail::SuiteRun run{std::string(tag), samples, seed};
  if (tag == "L3.1") {
    detail::suite_a_transform(run, samples);
  } else if (tag == "L3.2") {
    detail::suite_b_transform(run, samples);
  } else if (tag == "L3.3") {
    detail::suite_c_transform(run, samples);
  } else if (tag == "leaf-deletion") {
    detail::suite_leaf_deletion(run, samples);
  } else if (tag == "pendant-edge") {
    detail::suite_pendant_edge(run, samples);
  } else if (tag == "path-attachment") {
    detail::suite_path_attachment(run, samples);
  } else if (tag == "path-comparison") {
    detail::suite_path_comparison(run, samples);
  } else {
    throw Error(ErrorKind::UnknownTag, "unknown lemma tag '" + std::string(tag) + "'");
  }
  return {run.finish()};
}

}  // namespace subtrees
