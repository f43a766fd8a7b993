#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subtrees/counting.hpp"
#include "subtrees/enumeration.hpp"
#include "subtrees/families.hpp"
#include "subtrees/invariants.hpp"
#include "subtrees/io.hpp"
#include "subtrees/oracle.hpp"
#include "subtrees/report_json.hpp"
#include "subtrees/transforms.hpp"
#include "subtrees/verify.hpp"

namespace subtrees::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

/// Where machine-readable output goes: --json with no value means stdout.
struct OutputMode {
  CLI::Option* json = nullptr;
  CLI::Option* csv = nullptr;
  std::string json_path;

  [[nodiscard]] bool is_json() const { return json && json->count() > 0; }
  [[nodiscard]] bool is_csv() const { return csv && csv->count() > 0; }
};

inline OutputMode add_output_flags(CLI::App* sub, std::string& json_path) {
  OutputMode mode;
  mode.json = sub->add_option("--json", json_path, "Emit JSON (to PATH if given, else stdout)")->expected(0, 1);
  mode.csv = sub->add_flag("--csv", "Emit CSV with a header row");
  mode.json->excludes(mode.csv);
  return mode;
}

inline void write_json(const json::Json& doc, const std::string& path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::MalformedInput, "cannot write '" + path + "'");
  file << text;
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::MalformedInput, "cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join_counts(const std::vector<Count>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + to_decimal(values[i]);
  return out;
}

inline std::string params_text(const std::map<std::string, std::int64_t>& params, char sep) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += sep;
    out += key + "=" + std::to_string(value);
  }
  return out;
}

inline std::string theorem_label(const std::string& id) {
  if (id.size() > 1 && id[0] == 'T') return "Theorem " + id.substr(1);
  return id;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`; the return value is the exit code.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subtree counting, extremal tree families and exhaustive verification", "subtrees"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string input_path;
  std::string format_name = "edgelist";
  std::string json_path;
  std::size_t jobs = 1;
  std::uint64_t seed = 0;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "Tree file ('-' for stdin)")->required();
    sub->add_option("--format", format_name, "Tree format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  };

  // count
  auto* count_cmd = app.add_subcommand("count", "Subtree counts F, F*, W and per-vertex f, f*");
  add_input(count_cmd);
  const auto count_out = detail::add_output_flags(count_cmd, json_path);
  bool use_oracle = false;
  std::vector<Vertex> pair;
  count_cmd->add_flag("--oracle", use_oracle, "Use brute-force subset enumeration (n <= 20)");
  count_cmd->add_option("--pair", pair, "Also count subtrees containing both U and V")->expected(2);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a named extremal tree and its closed-form counts");
  std::string family_name;
  std::map<std::string, std::int64_t> family_params;
  std::string closed_form_which;
  bool product_form = false;
  construct_cmd->add_option("--family", family_name, "Family name (path, star, A_nq, Pk_ab, corona_path, "
                                                     "T_nDelta, Tprime_nDelta, spider_Tnk, hat_T_ndk)")
      ->required();
  for (const char* p : {"n", "q", "k", "a", "b", "delta", "d", "m"}) {
    construct_cmd->add_option_function<std::int64_t>(
        std::string("--") + p, [&family_params, key = std::string(p)](std::int64_t v) { family_params[key] = v; },
        std::string("Family parameter ") + p);
  }
  construct_cmd->add_option("--closed-form", closed_form_which, "Print the closed-form value of F or Fstar")
      ->check(CLI::IsMember({"F", "Fstar"}));
  construct_cmd->add_flag("--product-form", product_form, "Join the diameter-class binomials by product");
  construct_cmd->add_option("--format", format_name, "Tree format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  const auto construct_out = detail::add_output_flags(construct_cmd, json_path);

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "Apply an A, B, C or C' transformation");
  add_input(transform_cmd);
  std::string kind_name;
  std::optional<Vertex> anchor_u, anchor_v;
  std::vector<Vertex> branches;
  transform_cmd->add_option("--kind", kind_name, "A, B, C or Cprime")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C", "Cprime"}));
  transform_cmd->add_option("--u", anchor_u, "A: cut vertex; B: edge end kept");
  transform_cmd->add_option("--v", anchor_v, "B: edge end merged; C/Cprime: the moved vertex");
  transform_cmd->add_option("--branch", branches, "A: neighbor of u whose branch is replaced (repeatable)");
  const auto transform_out = detail::add_output_flags(transform_cmd, json_path);

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List non-isomorphic trees, optionally constrained");
  std::size_t order = 0;
  std::size_t max_order = kDefaultMaxOrder;
  TreeConstraint constraint;
  bool count_only = false;
  bool perfect = false;
  enumerate_cmd->add_option("--n", order, "Order")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--matching", constraint.matching, "Matching number");
  enumerate_cmd->add_option("--domination", constraint.domination, "Domination number");
  enumerate_cmd->add_option("--diameter", constraint.diameter, "Diameter");
  enumerate_cmd->add_option("--leaves", constraint.leaves, "Leaf count");
  enumerate_cmd->add_option("--min-max-degree", constraint.min_max_degree, "Lower bound on the maximum degree");
  enumerate_cmd->add_flag("--perfect-matching", perfect, "Only trees with a perfect matching");
  enumerate_cmd->add_flag("--count-only", count_only, "Print only the class size");
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--max-order", max_order, "Enumeration cap")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", format_name, "Tree format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  const auto enumerate_out = detail::add_output_flags(enumerate_cmd, json_path);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive theorem checks and lemma property suites");
  std::string tag;
  std::size_t n_min = 1, n_max = 0, samples = 300;
  VerifyOptions options;
  verify_cmd->add_option("--theorem", tag, "T4.1..T4.8, L2star, or a lemma suite tag")->required();
  verify_cmd->add_option("--n-min", n_min, "Smallest order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-max", n_max, "Largest order (theorem tags)");
  verify_cmd->add_option("--samples", samples, "Instances per lemma suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Random seed for lemma suites");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-order", options.max_order, "Enumeration cap")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--product-form", product_form, "T4.8: claimed value from the product reading");
  verify_cmd->add_flag("--literal-t48-minimize", options.literal_t48_minimize, "T4.8: check the printed 'minimizes'");
  const auto verify_out = detail::add_output_flags(verify_cmd, json_path);

  // profile
  auto* profile_cmd = app.add_subcommand("profile", "Matching, domination, diameter, leaves, degree, centers");
  add_input(profile_cmd);
  const auto profile_out = detail::add_output_flags(profile_cmd, json_path);

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known =
        std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args.front(); });
    if (!known) {
      err << "unknown subcommand '" << args.front() << "'\nRun with --help for more information.\n";
      return kExitUsage;
    }
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const TreeFormat format = parse_format(format_name);

    if (count_cmd->parsed()) {
      const Tree t = parse_tree(detail::read_input(input_path, in), format);
      const CountReport r = use_oracle ? oracle::oracle_counts(t) : count_report(t);
      std::optional<Count> pair_count;
      if (!pair.empty()) pair_count = count_subtrees_at_pair(t, pair[0], pair[1]);
      if (count_out.is_json()) {
        auto doc = json::count_report(r);
        if (pair_count) doc["pair"] = {{"u", pair[0]}, {"v", pair[1]}, {"count", to_decimal(*pair_count)}};
        detail::write_json(doc, json_path, out);
      } else if (count_out.is_csv()) {
        out << "n,F,Fstar,W\n" << r.n << ',' << r.F << ',' << r.Fstar << ',' << r.wiener << '\n';
      } else {
        out << "n " << r.n << "\nF " << r.F << "\nFstar " << r.Fstar << "\nW " << r.wiener << "\nf "
            << detail::join_counts(r.f) << "\nfstar " << detail::join_counts(r.fstar) << '\n';
        if (pair_count) out << "pair " << pair[0] << ' ' << pair[1] << ' ' << *pair_count << '\n';
      }
      return kExitOk;
    }

    if (construct_cmd->parsed()) {
      FamilySpec spec{parse_family(family_name), family_params};
      if (spec.family == Family::corona_path && !spec.params.count("m") && spec.params.count("n")) {
        const auto n = spec.params.at("n");
        if (n % 2 != 0) throw Error(ErrorKind::BadParams, "corona_path needs an even n");
        spec.params.erase("n");
        spec.params["m"] = n / 2;
      }
      const Tree t = construct(spec);
      std::optional<ClosedForm> cf;
      if (!closed_form_which.empty()) {
        cf = closed_form(spec, parse_quantity(closed_form_which),
                         product_form ? HatVariant::product : HatVariant::sum);
      }
      if (construct_out.is_json()) {
        json::Json doc{{"family", std::string(to_string(spec.family))},
                       {"params", spec.params},
                       {"tree", serialize_tree(t, format)}};
        if (cf) doc["closed_form"] = json::closed_form(*cf);
        detail::write_json(doc, json_path, out);
      } else if (construct_out.is_csv()) {
        out << "family,params,tree" << (cf ? ",which,value,formula_id" : "") << '\n';
        out << to_string(spec.family) << ',' << detail::params_text(spec.params, ';') << ','
            << detail::csv_field(serialize_tree(t, format));
        if (cf) out << ',' << to_string(cf->which) << ',' << cf->value << ',' << cf->formula_id;
        out << '\n';
      } else if (cf) {
        out << cf->value << " (" << detail::theorem_label(cf->formula_id) << ")\n";
      } else {
        out << serialize_tree(t, format) << '\n';
      }
      return kExitOk;
    }

    if (transform_cmd->parsed()) {
      const Tree t = parse_tree(detail::read_input(input_path, in), format);
      TransformSpec spec;
      if (kind_name == "A") {
        if (!anchor_u || branches.empty()) throw CLI::ValidationError("--kind A", "needs --u and at least one --branch");
        spec = {TransformKind::A, *anchor_u, 0, branches};
      } else if (kind_name == "B") {
        if (!anchor_u || !anchor_v) throw CLI::ValidationError("--kind B", "needs --u and --v");
        spec = {TransformKind::B, *anchor_u, *anchor_v, {}};
      } else {
        if (!anchor_v) throw CLI::ValidationError("--kind " + kind_name, "needs --v");
        spec = {kind_name == "C" ? TransformKind::C : TransformKind::Cprime, 0, *anchor_v, {}};
      }
      const TransformResult result = apply_transform(t, spec);
      const auto report = json::transform_report(t, result, format);
      if (transform_out.is_json()) {
        detail::write_json(report, json_path, out);
      } else if (transform_out.is_csv()) {
        out << "kind,F_before,F_after,Fstar_before,Fstar_after,tree\n"
            << report["kind"].get<std::string>() << ',' << report["F_before"].get<std::string>() << ','
            << report["F_after"].get<std::string>() << ',' << report["Fstar_before"].get<std::string>() << ','
            << report["Fstar_after"].get<std::string>() << ',' << detail::csv_field(serialize_tree(result.tree, format))
            << '\n';
      } else {
        out << serialize_tree(result.tree, format) << "\n\n"
            << report.dump() << '\n';
      }
      return kExitOk;
    }

    if (enumerate_cmd->parsed()) {
      if (perfect) constraint.perfect_matching = true;
      if (count_only) {
        const std::size_t total = count_trees(order, constraint, jobs, max_order);
        if (enumerate_out.is_json()) {
          detail::write_json(json::Json{{"n", order}, {"count", total}}, json_path, out);
        } else if (enumerate_out.is_csv()) {
          out << "n,count\n" << order << ',' << total << '\n';
        } else {
          out << total << '\n';
        }
        return kExitOk;
      }
      // Shards keep their emission indices so the merged listing is in
      // generation order whatever the job count.
      std::vector<std::vector<std::pair<std::size_t, Tree>>> parts(jobs);
      auto work = [&](std::size_t shard) {
        std::size_t index = shard;
        for_each_tree(
            order,
            [&](const Tree& t) {
              if (constraint.admits(t)) parts[shard].emplace_back(index, t);
              index += jobs;
            },
            shard, jobs, max_order);
      };
      if (jobs == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t s = 0; s < jobs; ++s) pool.emplace_back(work, s);
      }
      std::vector<std::pair<std::size_t, Tree>> trees;
      for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(trees));
      std::sort(trees.begin(), trees.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (enumerate_out.is_json()) {
        json::Json doc = json::Json::array();
        for (const auto& [index, t] : trees) doc.push_back(serialize_tree(t, format));
        detail::write_json(doc, json_path, out);
      } else if (enumerate_out.is_csv()) {
        out << "index,levelseq\n";
        std::size_t i = 0;
        for (const auto& [index, t] : trees) out << i++ << ',' << serialize_tree(t, TreeFormat::levelseq) << '\n';
      } else {
        for (std::size_t i = 0; i < trees.size(); ++i) {
          if (i) out << '\n';
          out << serialize_tree(trees[i].second, format) << '\n';
        }
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      options.hat_variant = product_form ? HatVariant::product : HatVariant::sum;
      const bool is_lemma = std::find(kLemmaTags.begin(), kLemmaTags.end(), tag) != kLemmaTags.end();
      std::vector<VerificationResult> results;
      std::string header;
      if (is_lemma) {
        results = run_lemma_suite(tag, samples, seed);
        header = "verify " + tag + " samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
      } else {
        if (n_max == 0) throw CLI::ValidationError("--n-max", "required for theorem tags");
        if (n_max < n_min) throw CLI::ValidationError("--n-max", "must be at least --n-min");
        results = verify_theorem(tag, n_min, n_max, jobs, options);
        header = "verify " + tag + " n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
      }
      const bool ok = all_pass(results);
      if (verify_out.is_json()) {
        detail::write_json(json::verification_report(results), json_path, out);
      } else if (verify_out.is_csv()) {
        out << "theorem,n,params,quantity,direction,claimed,achieved,class_size,extremizers,uniqueness_asserted,"
               "pass,note\n";
        for (const auto& r : results) {
          out << r.theorem << ',' << r.n << ',' << detail::params_text(r.params, ';') << ',' << r.quantity << ','
              << r.direction << ',' << (r.claimed ? to_decimal(*r.claimed) : "") << ','
              << (r.achieved ? to_decimal(*r.achieved) : "") << ',' << r.class_size << ',' << r.extremizers.size()
              << ',' << (r.uniqueness_asserted ? "true" : "false") << ',' << (r.pass ? "true" : "false") << ','
              << detail::csv_field(r.note) << '\n';
        }
      } else {
        out << "# " << header << '\n';
        std::size_t failed = 0;
        for (const auto& r : results) {
          failed += r.pass ? 0 : 1;
          out << r.theorem;
          if (is_lemma) {
            out << " instances=" << r.class_size;
          } else {
            out << " n=" << r.n;
            if (!r.params.empty()) out << ' ' << detail::params_text(r.params, ' ');
            out << ' ' << r.quantity << ' ' << r.direction << " class=" << r.class_size;
            if (r.claimed) out << " claimed=" << *r.claimed << " achieved=" << *r.achieved;
            out << " extremizers=" << r.extremizers.size();
          }
          out << (r.pass ? " PASS" : " FAIL");
          if (!r.note.empty()) out << " (" << r.note << ')';
          out << '\n';
          if (r.counterexample) out << "  counterexample: " << serialize_tree(*r.counterexample, TreeFormat::levelseq) << '\n';
        }
        out << (ok ? "PASS " : "FAIL ") << results.size() - failed << '/' << results.size() << " results pass\n";
      }
      return ok ? kExitOk : kExitVerificationFailed;
    }

    if (profile_cmd->parsed()) {
      const Tree t = parse_tree(detail::read_input(input_path, in), format);
      const InvariantProfile p = invariant_profile(t);
      if (profile_out.is_json()) {
        detail::write_json(json::profile(p), json_path, out);
      } else if (profile_out.is_csv()) {
        std::string cs;
        for (Vertex c : p.centers) cs += (cs.empty() ? "" : " ") + std::to_string(c);
        out << "matching,domination,diameter,leafCount,maxDegree,centers,hasPerfectMatching\n"
            << p.matching << ',' << p.domination << ',' << p.diameter << ',' << p.leaf_count << ',' << p.max_degree
            << ',' << cs << ',' << (p.has_perfect_matching ? "true" : "false") << '\n';
      } else {
        out << "matching " << p.matching << "\ndomination " << p.domination << "\ndiameter " << p.diameter
            << "\nleafCount " << p.leaf_count << "\nmaxDegree " << p.max_degree << "\ncenters";
        for (Vertex c : p.centers) out << ' ' << c;
        out << "\nhasPerfectMatching " << (p.has_perfect_matching ? "true" : "false") << "\nmaximumMatching";
        for (const Edge& e : maximum_matching(t)) out << ' ' << e.u << '-' << e.v;
        out << "\ndominatingSet";
        for (Vertex v : minimum_dominating_set(t)) out << ' ' << v;
        out << '\n';
      }
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace subtrees::cli
