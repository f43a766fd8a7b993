#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "subtrees/count.hpp"
#include "subtrees/tree.hpp"

namespace subtrees {

enum class Family { path, star, A_nq, Pk_ab, corona_path, T_nDelta, Tprime_nDelta, spider_Tnk, hat_T_ndk };

inline constexpr std::array<Family, 9> kAllFamilies{Family::path,          Family::star,       Family::A_nq,
                                                    Family::Pk_ab,         Family::corona_path, Family::T_nDelta,
                                                    Family::Tprime_nDelta, Family::spider_Tnk, Family::hat_T_ndk};

constexpr std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::A_nq: return "A_nq";
    case Family::Pk_ab: return "Pk_ab";
    case Family::corona_path: return "corona_path";
    case Family::T_nDelta: return "T_nDelta";
    case Family::Tprime_nDelta: return "Tprime_nDelta";
    case Family::spider_Tnk: return "spider_Tnk";
    case Family::hat_T_ndk: return "hat_T_ndk";
  }
  return "?";
}

/// Accepts the canonical names case-insensitively plus a few short aliases.
inline Family parse_family(std::string_view name) {
  std::string key;
  for (char c : name)
    if (c != '_' && c != '-') key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::map<std::string, Family> names{
      {"path", Family::path},           {"star", Family::star},
      {"anq", Family::A_nq},            {"a", Family::A_nq},
      {"pkab", Family::Pk_ab},          {"pk", Family::Pk_ab},
      {"coronapath", Family::corona_path}, {"corona", Family::corona_path},
      {"tndelta", Family::T_nDelta},    {"broom", Family::T_nDelta},
      {"tprimendelta", Family::Tprime_nDelta}, {"tprime", Family::Tprime_nDelta},
      {"spidertnk", Family::spider_Tnk}, {"spider", Family::spider_Tnk},
      {"hattndk", Family::hat_T_ndk},   {"hat", Family::hat_T_ndk},
  };
  const auto it = names.find(key);
  if (it == names.end()) throw Error(ErrorKind::BadParams, "unknown family '" + std::string(name) + "'");
  return it->second;
}

/// A family plus its integer parameters by name: n, q, k, a, b, delta, d, m.
struct FamilySpec {
  Family family = Family::path;
  std::map<std::string, std::int64_t> params;

  [[nodiscard]] std::int64_t get(const std::string& name) const {
    const auto it = params.find(name);
    if (it == params.end()) {
      throw Error(ErrorKind::BadParams, std::string(to_string(family)) + " needs parameter '" + name + "'");
    }
    return it->second;
  }

  [[nodiscard]] std::string describe() const {
    std::string out(to_string(family));
    for (const auto& [key, value] : params) out += " " + key + "=" + std::to_string(value);
    return out;
  }
};

inline FamilySpec make_spec(Family f, std::map<std::string, std::int64_t> params) { return {f, std::move(params)}; }

namespace detail {

inline void require(bool ok, const FamilySpec& spec, std::string_view constraint) {
  if (!ok) throw Error(ErrorKind::BadParams, spec.describe() + " violates " + std::string(constraint));
}

inline std::size_t as_size(std::int64_t x) { return static_cast<std::size_t>(x); }

/// Vertices appended one at a time; keeps the edge list in creation order.
struct Builder {
  std::size_t n = 0;
  std::vector<Edge> edges;

  Vertex add() { return n++; }
  Vertex add_under(Vertex parent) {
    const Vertex v = add();
    edges.emplace_back(parent, v);
    return v;
  }
  Vertex add_path(std::size_t length) {
    const Vertex first = add();
    for (std::size_t i = 1; i < length; ++i) add_under(n - 1);
    return first;
  }
  Tree build() { return Tree(n, std::move(edges)); }
};

}  // namespace detail

/// Order of the tree a valid spec describes.
inline std::size_t family_order(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Pk_ab: return detail::as_size(spec.get("k") + spec.get("a") + spec.get("b"));
    case Family::corona_path: return detail::as_size(2 * spec.get("m"));
    default: return detail::as_size(spec.get("n"));
  }
}

/// Checks every parameter constraint; throws BadParams naming the first one
/// violated.
inline void validate(const FamilySpec& spec) {
  using detail::require;
  switch (spec.family) {
    case Family::path:
    case Family::star: require(spec.get("n") >= 1, spec, "n >= 1"); break;
    case Family::A_nq: {
      const auto n = spec.get("n"), q = spec.get("q");
      require(q >= 1, spec, "q >= 1");
      require(n >= 2 * q, spec, "n >= 2q");
      break;
    }
    case Family::Pk_ab:
      require(spec.get("k") >= 2, spec, "k >= 2");
      require(spec.get("a") >= 0 && spec.get("b") >= 0, spec, "a, b >= 0");
      break;
    case Family::corona_path: require(spec.get("m") >= 1, spec, "m >= 1"); break;
    case Family::T_nDelta: {
      const auto n = spec.get("n"), delta = spec.get("delta");
      require(delta >= 3, spec, "delta >= 3");
      require(n >= delta + 1, spec, "n >= delta + 1");
      break;
    }
    case Family::Tprime_nDelta: {
      const auto n = spec.get("n"), delta = spec.get("delta");
      require(delta >= 3, spec, "delta >= 3");
      require(n % 2 == 0, spec, "n even");
      require(n >= 2 * delta, spec, "n >= 2 delta");
      break;
    }
    case Family::spider_Tnk: {
      const auto n = spec.get("n"), k = spec.get("k");
      require(k >= 2, spec, "k >= 2");
      require(k <= n - 1, spec, "k <= n - 1");
      break;
    }
    case Family::hat_T_ndk: {
      const auto n = spec.get("n"), d = spec.get("d"), k = spec.get("k");
      require(d >= 2, spec, "d >= 2");
      require(d <= n - 1, spec, "d <= n - 1");
      require(k >= 1 && k <= d + 1, spec, "1 <= k <= d + 1");
      break;
    }
  }
}

/// Builds the family member. Labelings:
///   path      0-1-...-(n-1)
///   star      center 0
///   A_nq      star center 0 with leaves 1..n-q; leaf i (1 <= i < q) carries pendant n-q+i
///   Pk_ab     path 0..k-1, then a pendants on 0, then b pendants on k-1
///   corona    path 0..m-1, pendant m+i on i
///   T_nDelta  path 0..n-delta, then delta-1 pendants on 0
///   Tprime    path 0..L-1 (L = n-2delta+3), a pendant on 0, then delta-2 two-edge legs on 0
///   spider    hub 0, legs one after another, the (n-1) mod k long legs first
///   hat       path 0..d, then n-d-1 pendants on k-1
inline Tree construct(const FamilySpec& spec) {
  validate(spec);
  detail::Builder b;
  switch (spec.family) {
    case Family::path: b.add_path(detail::as_size(spec.get("n"))); break;
    case Family::star: {
      const Vertex c = b.add();
      for (std::int64_t i = 1; i < spec.get("n"); ++i) b.add_under(c);
      break;
    }
    case Family::A_nq: {
      const auto n = spec.get("n"), q = spec.get("q");
      const Vertex c = b.add();
      for (std::int64_t i = 0; i < n - q; ++i) b.add_under(c);
      for (std::int64_t i = 1; i < q; ++i) b.add_under(detail::as_size(i));
      break;
    }
    case Family::Pk_ab: {
      const auto k = detail::as_size(spec.get("k"));
      b.add_path(k);
      for (std::int64_t i = 0; i < spec.get("a"); ++i) b.add_under(0);
      for (std::int64_t i = 0; i < spec.get("b"); ++i) b.add_under(k - 1);
      break;
    }
    case Family::corona_path: {
      const auto m = detail::as_size(spec.get("m"));
      b.add_path(m);
      for (Vertex v = 0; v < m; ++v) b.add_under(v);
      break;
    }
    case Family::T_nDelta: {
      const auto n = spec.get("n"), delta = spec.get("delta");
      b.add_path(detail::as_size(n - delta + 1));
      for (std::int64_t i = 0; i < delta - 1; ++i) b.add_under(0);
      break;
    }
    case Family::Tprime_nDelta: {
      const auto n = spec.get("n"), delta = spec.get("delta");
      b.add_path(detail::as_size(n - 2 * delta + 3));
      b.add_under(0);
      for (std::int64_t i = 0; i < delta - 2; ++i) b.add_under(b.add_under(0));
      break;
    }
    case Family::spider_Tnk: {
      const auto n = spec.get("n"), k = spec.get("k");
      const auto l = (n - 1) / k, j = (n - 1) % k;
      const Vertex hub = b.add();
      for (std::int64_t leg = 0; leg < k; ++leg) {
        Vertex prev = hub;
        for (std::int64_t s = 0; s < l + (leg < j ? 1 : 0); ++s) prev = b.add_under(prev);
      }
      break;
    }
    case Family::hat_T_ndk: {
      const auto n = spec.get("n"), d = spec.get("d"), k = spec.get("k");
      b.add_path(detail::as_size(d + 1));
      for (std::int64_t i = 0; i < n - d - 1; ++i) b.add_under(detail::as_size(k - 1));
      break;
    }
  }
  return b.build();
}

/// P_k(1^0, 1^b) is P_{k-1}(1^1, 1^b): an empty end is the pendant of its
/// neighbor. Repeats that while k >= 3, then orders a <= b.
inline FamilySpec canonical_pk(const FamilySpec& spec) {
  if (spec.family != Family::Pk_ab) return spec;
  validate(spec);
  auto k = spec.get("k"), a = spec.get("a"), b = spec.get("b");
  while (k >= 3 && (a == 0 || b == 0)) {
    --k;
    (a == 0 ? a : b) = 1;
  }
  if (a > b) std::swap(a, b);
  return make_spec(Family::Pk_ab, {{"k", k}, {"a", a}, {"b", b}});
}

enum class Quantity { F, Fstar };

constexpr std::string_view to_string(Quantity q) noexcept { return q == Quantity::F ? "F" : "Fstar"; }

inline Quantity parse_quantity(std::string_view s) {
  if (s == "F") return Quantity::F;
  if (s == "Fstar" || s == "F*") return Quantity::Fstar;
  throw Error(ErrorKind::BadParams, "quantity must be F or Fstar, got '" + std::string(s) + "'");
}

/// How the diameter-class formula joins its two binomials. `sum` is the
/// correct count; `product` is the juxtaposed reading of the printed display.
enum class HatVariant { sum, product };

struct ClosedForm {
  Family family;
  Quantity which;
  Count value;
  std::string formula_id;
};

/// The theorem's closed-form value for a family member, computed from the
/// parameters alone.
inline ClosedForm closed_form(const FamilySpec& spec, Quantity which, HatVariant variant = HatVariant::sum) {
  validate(spec);
  const bool star_q = which == Quantity::Fstar;
  auto u = [](std::int64_t x) { return static_cast<unsigned long>(x); };
  auto pw = [&](std::int64_t base, std::int64_t e) { return pow_count(u(base), u(e)); };
  auto bin = [&](std::int64_t n, std::int64_t k) { return binomial(u(n), u(k)); };
  auto num = [&](std::int64_t x) { return Count(static_cast<long>(x)); };
  ClosedForm out{spec.family, which, Count(0), ""};

  switch (spec.family) {
    case Family::path: {
      const auto n = spec.get("n");
      out.formula_id = "L2star";
      out.value = star_q ? num(2 * n - 1) : num(n * (n + 1) / 2);
      break;
    }
    case Family::star: {
      const auto n = spec.get("n");
      out.formula_id = "L2star";
      if (star_q) {
        detail::require(n >= 3, spec, "n >= 3 for the star F* formula");
        out.value = pw(2, n - 1) + num(n - 2);
      } else {
        out.value = pw(2, n - 1) + num(n - 1);
      }
      break;
    }
    case Family::A_nq: {
      const auto n = spec.get("n"), q = spec.get("q");
      out.formula_id = "T4.1";
      const Count core = pw(2, n - 2 * q + 1) * pw(3, q - 1);
      if (star_q) {
        detail::require(n >= 3, spec, "n >= 3 for the A(n,q) F* formula");
        out.value = core - pw(2, q - 1) + num(n - 1);
      } else {
        out.value = core + num(n + q - 2);
      }
      break;
    }
    case Family::corona_path: {
      const auto m = spec.get("m");
      out.formula_id = "T4.3";
      detail::require(m >= 2, spec, "m >= 2 for the corona formulas");
      out.value = pw(2, m + 2) - num(m + 4);
      if (star_q) out.value -= bin(m + 1, 2);
      break;
    }
    case Family::Pk_ab: {
      const FamilySpec c = canonical_pk(spec);
      out.formula_id = "T4.4";
      if (c.get("k") != 4 || c.get("a") < 1) {
        throw Error(ErrorKind::NoFormula, spec.describe() + " is not of the form P_4(1^a,1^b) with a, b >= 1");
      }
      const auto a = c.get("a"), b = c.get("b"), n = 4 + a + b;
      out.value = 3 * (pw(2, a) + pw(2, b)) + pw(2, n - 4) + num(star_q ? n - 11 : n - 1);
      break;
    }
    case Family::T_nDelta: {
      const auto n = spec.get("n"), delta = spec.get("delta");
      out.formula_id = "T4.5";
      out.value = num(n - delta + 1) * pw(2, delta - 1) + num(delta - 1);
      if (!star_q) out.value += bin(n - delta + 1, 2);
      break;
    }
    case Family::Tprime_nDelta: {
      const auto n = spec.get("n"), delta = spec.get("delta");
      const auto tail = n - 2 * delta + 3;
      out.formula_id = "T4.6";
      const Count core = 2 * num(tail) * pw(3, delta - 2);
      if (star_q) {
        out.value = core - num(n - 2 * delta + 2) * pw(2, delta - 2) + num(n - 1);
      } else {
        out.value = core + num(3 * delta - 5) + bin(tail, 2);
      }
      break;
    }
    case Family::spider_Tnk: {
      const auto n = spec.get("n"), k = spec.get("k");
      const auto l = (n - 1) / k, j = (n - 1) % k, i = k - j;
      const auto L = l + (j > 0 ? 1 : 0);
      out.formula_id = "T4.7";
      const Count all_legs = pw(l + 1, i) * pw(L + 1, j);
      if (star_q) {
        out.value = all_legs - pw(l, i) * pw(L, j) + num(i * l + j * L);
      } else {
        out.value = all_legs + num(i) * bin(l + 1, 2) + num(j) * bin(L + 1, 2);
      }
      break;
    }
    case Family::hat_T_ndk: {
      const auto n = spec.get("n"), d = spec.get("d"), k = spec.get("k");
      const auto lo = d / 2, hi = d - d / 2;
      out.formula_id = "T4.8";
      if (k != lo + 1 && k != hi + 1) {
        throw Error(ErrorKind::NoFormula, spec.describe() + ": the formula needs k = floor(d/2)+1 or ceil(d/2)+1");
      }
      const Count sides = variant == HatVariant::sum ? Count(bin(lo + 1, 2) + bin(hi + 1, 2))
                                                     : Count(bin(lo + 1, 2) * bin(hi + 1, 2));
      out.value = pw(2, n - d - 1) * num(lo + 1) * num(hi + 1) + sides + num(n - d - 1);
      if (star_q) out.value -= bin(d, 2);
      break;
    }
  }
  return out;
}

/// Every valid parameter tuple of a family with order at most max_n.
inline std::vector<FamilySpec> parameter_sweep(Family f, std::int64_t max_n) {
  std::vector<FamilySpec> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    switch (f) {
      case Family::path:
      case Family::star: out.push_back(make_spec(f, {{"n", n}})); break;
      case Family::A_nq:
        for (std::int64_t q = 1; 2 * q <= n; ++q) out.push_back(make_spec(f, {{"n", n}, {"q", q}}));
        break;
      case Family::Pk_ab:
        for (std::int64_t k = 2; k <= n; ++k)
          for (std::int64_t a = 0; a <= n - k; ++a) out.push_back(make_spec(f, {{"k", k}, {"a", a}, {"b", n - k - a}}));
        break;
      case Family::corona_path:
        if (n % 2 == 0) out.push_back(make_spec(f, {{"m", n / 2}}));
        break;
      case Family::T_nDelta:
        for (std::int64_t delta = 3; delta + 1 <= n; ++delta) out.push_back(make_spec(f, {{"n", n}, {"delta", delta}}));
        break;
      case Family::Tprime_nDelta:
        for (std::int64_t delta = 3; 2 * delta <= n; ++delta)
          if (n % 2 == 0) out.push_back(make_spec(f, {{"n", n}, {"delta", delta}}));
        break;
      case Family::spider_Tnk:
        for (std::int64_t k = 2; k <= n - 1; ++k) out.push_back(make_spec(f, {{"n", n}, {"k", k}}));
        break;
      case Family::hat_T_ndk:
        for (std::int64_t d = 2; d <= n - 1; ++d)
          for (std::int64_t k = 1; k <= d + 1; ++k) out.push_back(make_spec(f, {{"n", n}, {"d", d}, {"k", k}}));
        break;
    }
  }
  return out;
}

}  // namespace subtrees
