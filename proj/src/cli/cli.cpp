#include "cli/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ifam/analysis.hpp"
#include "ifam/bounds.hpp"
#include "ifam/constraint.hpp"
#include "ifam/constructions.hpp"
#include "ifam/cover.hpp"
#include "ifam/errors.hpp"
#include "ifam/family.hpp"
#include "ifam/search.hpp"

namespace ifam::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json family_json(const SetFamily& f) {
  ordered_json members = ordered_json::array();
  for (const auto& m : f.members()) members.push_back(m.elements());
  ordered_json j;
  j["n"] = f.ground_size();
  j["members"] = std::move(members);
  return j;
}

ordered_json constraint_json(const IntersectionConstraint& c) {
  ordered_json j;
  if (c.is_interval()) {
    j["kind"] = "interval";
    j["lmin"] = c.lmin();
    j["lmax"] = c.lmax();
  } else {
    j["kind"] = "set";
    j["allowed"] = c.allowed();
  }
  j["size_min"] = c.size_min();
  j["size_max"] = c.size_max();
  return j;
}

ordered_json conditions_json(const std::vector<Condition>& conds) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : conds) arr.push_back(ordered_json{{"name", c.name}, {"holds", c.holds}});
  return arr;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

void print_family_members(std::ostream& os, const SetFamily& f, const char* indent) {
  for (const auto& m : f.members()) os << indent << join_ints(m.elements()) << "\n";
}

void print_conditions(std::ostream& os, const std::vector<Condition>& conds) {
  os << "conditions:\n";
  for (const auto& c : conds) os << "  " << c.name << ": " << (c.holds ? "true" : "false") << "\n";
}

struct Renderer {
  bool json = false;
  std::ostringstream payload;
};

struct ConstraintFlags {
  std::optional<int> lmin, lmax;
  std::string lset;
  std::optional<int> smin, smax;

  void attach(CLI::App* cmd) {
    cmd->add_option("--lmin", lmin, "smallest admissible intersection size");
    cmd->add_option("--lmax", lmax, "largest admissible intersection size");
    cmd->add_option("--lset", lset,
                    "comma-separated admissible intersection sizes "
                    "(alternative to --lmin/--lmax)");
    cmd->add_option("--smin", smin, "smallest member size");
    cmd->add_option("--smax", smax, "largest member size");
  }

  bool any() const { return lmin || lmax || !lset.empty() || smin || smax; }

  IntersectionConstraint build(int default_smin, int default_smax) const {
    const int lo = smin.value_or(default_smin);
    const int hi = smax.value_or(default_smax);
    if (!lset.empty()) {
      if (lmin || lmax)
        throw std::invalid_argument("give either --lset or --lmin/--lmax, not both");
      std::vector<int> values;
      std::stringstream ss(lset);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("--lset: bad entry '" + tok + "'");
        values.push_back(v);
      }
      if (values.empty()) throw std::invalid_argument("--lset: empty list");
      return IntersectionConstraint::explicit_set(std::move(values), lo, hi);
    }
    if (!lmin || !lmax)
      throw std::invalid_argument("constraint needs --lmin and --lmax, or --lset");
    return IntersectionConstraint::interval(*lmin, *lmax, lo, hi);
  }
};

struct SearchFlags {
  bool symmetry_breaking = false;
  bool parallel = false;
  int threads = 0;
  std::optional<double> time_budget_s;
  std::optional<std::uint64_t> node_budget;
  std::string seed_path;
  std::uint64_t candidate_cap = kDefaultCandidateCap;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--symmetry-breaking", symmetry_breaking,
                  "anchor the search on canonical prefix members");
    cmd->add_flag("--parallel", parallel, "split the root branches across threads");
    cmd->add_option("--threads", threads, "worker threads for --parallel (0 = hardware)");
    cmd->add_option("--time-budget", time_budget_s, "wall-clock budget in seconds");
    cmd->add_option("--node-budget", node_budget, "maximum search-tree nodes");
    cmd->add_option("--seed-family", seed_path, "family file used as starting incumbent");
    cmd->add_option("--candidate-cap", candidate_cap, "maximum candidate count");
  }

  SearchOptions build() const {
    SearchOptions o;
    o.symmetry_breaking = symmetry_breaking;
    o.parallel = parallel;
    o.threads = threads;
    if (time_budget_s) {
      if (*time_budget_s < 0) throw std::invalid_argument("--time-budget must be >= 0");
      o.time_budget =
          std::chrono::milliseconds(static_cast<std::int64_t>(std::ceil(*time_budget_s * 1000)));
    }
    o.node_budget = node_budget;
    if (!seed_path.empty()) o.lower_bound_seed = load_family(seed_path);
    o.candidate_cap = candidate_cap;
    return o;
  }
};

std::string q_string(const mpq_class& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

void render_bound(Renderer& r, const BoundReport& report) {
  if (r.json) {
    ordered_json j;
    j["theorem"] = std::string(theorem_name(report.theorem));
    ordered_json params;
    if (report.params.n) params["n"] = *report.params.n;
    if (report.params.s) params["s"] = *report.params.s;
    if (report.params.k) params["k"] = *report.params.k;
    j["params"] = std::move(params);
    j["value"] = ordered_json{{"num", report.value.get_num().get_str()},
                              {"den", report.value.get_den().get_str()}};
    j["floor"] = report.floor.get_str();
    j["conditions"] = conditions_json(report.conditions);
    j["applicable"] = report.applicable;
    r.payload << j.dump(2) << "\n";
    return;
  }
  r.payload << "theorem: " << theorem_name(report.theorem) << "\n";
  if (report.params.n) r.payload << "n: " << *report.params.n << "\n";
  if (report.params.s) r.payload << "s: " << *report.params.s << "\n";
  if (report.params.k) r.payload << "k: " << *report.params.k << "\n";
  r.payload << "value: " << q_string(report.value) << "\n";
  r.payload << "floor: " << report.floor.get_str() << "\n";
  print_conditions(r.payload, report.conditions);
  r.payload << "applicable: " << (report.applicable ? "true" : "false") << "\n";
}

void render_inequalities(Renderer& r, long long n, long long s,
                         const std::vector<Condition>& conds) {
  if (r.json) {
    ordered_json j;
    j["params"] = ordered_json{{"n", n}, {"s", s}};
    j["conditions"] = conditions_json(conds);
    r.payload << j.dump(2) << "\n";
    return;
  }
  r.payload << "n: " << n << "\n";
  r.payload << "s: " << s << "\n";
  print_conditions(r.payload, conds);
}

void render_op1(Renderer& r, long long s, long long k, const mpz_class& threshold) {
  if (r.json) {
    ordered_json j;
    j["params"] = ordered_json{{"s", s}, {"k", k}};
    j["threshold"] = threshold.get_str();
    r.payload << j.dump(2) << "\n";
    return;
  }
  r.payload << "s: " << s << "\n";
  r.payload << "k: " << k << "\n";
  r.payload << "threshold: " << threshold.get_str() << "\n";
}

void render_family(Renderer& r, const SetFamily& f) {
  if (r.json) {
    r.payload << family_json(f).dump(2) << "\n";
    return;
  }
  r.payload << serialize_family(f);
}

void render_search(Renderer& r, int n, const IntersectionConstraint& c, const char* mode,
                   const SearchResult& res) {
  const char* status = res.status == SearchStatus::Exact ? "exact" : "budget-exhausted";
  if (r.json) {
    ordered_json j;
    j["n"] = n;
    j["constraint"] = constraint_json(c);
    j["mode"] = mode;
    j["status"] = status;
    j["max_size"] = res.max_size;
    j["nodes"] = res.nodes_explored;
    j["elapsed_ms"] = res.elapsed.count();
    j["witness"] = family_json(res.witness);
    r.payload << j.dump(2) << "\n";
    return;
  }
  r.payload << "n: " << n << "\n";
  r.payload << "constraint: " << c.describe() << "\n";
  r.payload << "mode: " << mode << "\n";
  r.payload << "status: " << status << "\n";
  r.payload << "max_size: " << res.max_size << "\n";
  r.payload << "nodes: " << res.nodes_explored << "\n";
  r.payload << "elapsed_ms: " << res.elapsed.count() << "\n";
  r.payload << "witness:\n";
  print_family_members(r.payload, res.witness, "  ");
}

// Each construct output is re-verified against the property that defines
// its kind before anything is printed; a failure here is a generation bug,
// not user error.
void self_check_construction(const std::string& kind, const SetFamily& f,
                             const std::optional<int>& k_param) {
  auto fail = [&kind](const std::string& what) {
    throw std::logic_error("construct " + kind + ": self-check failed: " + what);
  };
  if (f.empty()) fail("empty family");
  if (kind == "projective-plane") {
    if (!verify_design(f, 2, 1).ok) fail("some point pair is not on exactly one line");
  } else if (kind == "paley-biplane") {
    if (!verify_design(f, 2, 2).ok) fail("some point pair is not on exactly two blocks");
  } else if (kind == "fano-complement") {
    const auto spectrum = intersection_spectrum(f);
    if (spectrum.intersection_counts != std::map<int, std::uint64_t>{{2, 21}})
      fail("pairwise intersections are not uniformly 2");
  } else if (kind == "residual") {
    std::set<std::vector<int>> distinct;
    for (const auto& m : f.members())
      if (!distinct.insert(m.elements()).second) fail("two blocks coincide");
  } else if (kind == "steiner-augment") {
    if (find_common_element(f) != f.ground_size()) fail("new point is not in every block");
  } else if (kind == "d-construction") {
    if (find_common_element(f).has_value()) fail("family has a common element");
    const std::size_t cap = std::min<std::size_t>(f.size(), 2048);
    for (std::size_t i = 0; i < cap; ++i)
      for (std::size_t j = i + 1; j < cap; ++j)
        if (!f.member(i).intersects(f.member(j)))
          fail("members " + std::to_string(i) + " and " + std::to_string(j) +
               " are disjoint");
  } else if (kind == "all-k-subsets") {
    mpz_class want = binomial(f.ground_size(), k_param.value_or(-1));
    if (mpz_class(static_cast<unsigned long>(f.size())) != want)
      fail("member count is not the full binomial");
    for (const auto& m : f.members())
      if (m.size() != *k_param) fail("member size drifted from k");
  } else if (kind == "star") {
    if (find_common_element(f) != 1) fail("element 1 is not in every member");
  }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for intersecting set families"};
  app.require_subcommand(1);

  Renderer renderer;
  std::string output_path;
  int rc = 0;

  // ---- bound ----------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "evaluate an upper bound or its hypotheses");
  struct BoundArgs {
    std::string theorem;
    bool inequalities = false;
    bool op1 = false;
    std::optional<long long> n, s, k;
  };
  auto bound_args = std::make_shared<BoundArgs>();
  bound->add_option("theorem", bound_args->theorem,
                    "one of: ekr, rcw, frankl-wilson, snevily, thm15, thm16");
  bound->add_flag("--inequalities", bound_args->inequalities,
                  "report the case-split inequalities for n, s instead of a bound");
  bound->add_flag("--op1-threshold", bound_args->op1,
                  "report the least n with n^(k-1) >= s^(2k-1)");
  bound->add_option("-n,--n", bound_args->n, "ground-set size");
  bound->add_option("-s,--s", bound_args->s, "member size");
  bound->add_option("-k,--k", bound_args->k, "intersection parameter");
  bound->callback([bound_args, &renderer] {
    const auto& a = *bound_args;
    const int modes = (!a.theorem.empty() ? 1 : 0) + (a.inequalities ? 1 : 0) + (a.op1 ? 1 : 0);
    if (modes != 1)
      throw std::invalid_argument(
          "bound: give exactly one of a theorem name, --inequalities, or --op1-threshold");
    auto need = [](const std::optional<long long>& v, const char* name) {
      if (!v) throw std::invalid_argument(std::string("bound: missing --") + name);
      return *v;
    };
    if (a.inequalities) {
      const long long n = need(a.n, "n"), s = need(a.s, "s");
      render_inequalities(renderer, n, s, check_proof_inequalities(n, s));
      return;
    }
    if (a.op1) {
      const long long s = need(a.s, "s"), k = need(a.k, "k");
      render_op1(renderer, s, k, op1_conjectured_threshold(s, k));
      return;
    }
    const auto id = theorem_from_name(a.theorem);
    if (!id) throw std::invalid_argument("bound: unknown theorem '" + a.theorem + "'");
    BoundReport report = [&] {
      switch (*id) {
        case TheoremId::Ekr: return ekr_bound(need(a.n, "n"), need(a.s, "s"));
        case TheoremId::Rcw: return rcw_bound(need(a.n, "n"), need(a.k, "k"));
        case TheoremId::FranklWilson:
          return frankl_wilson_bound(need(a.n, "n"), need(a.k, "k"));
        case TheoremId::Snevily: return snevily_bound(need(a.n, "n"), need(a.k, "k"));
        case TheoremId::Thm15:
          return thm15_bound(need(a.n, "n"), need(a.s, "s"), need(a.k, "k"));
        case TheoremId::Thm16:
          return thm16_bound(need(a.n, "n"), need(a.s, "s"), need(a.k, "k"));
      }
      throw std::invalid_argument("bound: unknown theorem");
    }();
    render_bound(renderer, report);
  });

  // ---- construct ------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "emit a named block family");
  struct ConstructArgs {
    std::string kind;
    std::optional<int> q, n, k, s, d, t;
    std::optional<std::size_t> block;
    std::string input;
  };
  auto con_args = std::make_shared<ConstructArgs>();
  construct
      ->add_option("kind", con_args->kind,
                   "projective-plane | fano-complement | paley-biplane | residual | "
                   "steiner-augment | d-construction | all-k-subsets | star")
      ->required();
  construct->add_option("--q", con_args->q, "projective plane order");
  construct->add_option("-n,--n", con_args->n, "ground-set size");
  construct->add_option("-k,--k", con_args->k, "member size");
  construct->add_option("-s,--s", con_args->s, "member size (star)");
  construct->add_option("--d", con_args->d, "block count for d-construction");
  construct->add_option("--t", con_args->t, "cover parameter for steiner-augment");
  construct->add_option("--block", con_args->block, "block index to drop (residual)");
  construct->add_option("--input", con_args->input, "input family file");
  construct->callback([con_args, &renderer] {
    const auto& a = *con_args;
    auto need_int = [](const std::optional<int>& v, const char* name) {
      if (!v) throw std::invalid_argument(std::string("construct: missing --") + name);
      return *v;
    };
    auto need_input = [&a] {
      if (a.input.empty()) throw std::invalid_argument("construct: missing --input");
      return load_family(a.input);
    };
    SetFamily family{GroundSet(1)};
    if (a.kind == "projective-plane") {
      family = projective_plane(need_int(a.q, "q"));
    } else if (a.kind == "fano-complement") {
      family = fano_complement();
    } else if (a.kind == "paley-biplane") {
      family = paley_biplane();
    } else if (a.kind == "residual") {
      if (!a.block) throw std::invalid_argument("construct: missing --block");
      family = residual(need_input(), *a.block);
    } else if (a.kind == "steiner-augment") {
      family = steiner_augment(need_input(), need_int(a.t, "t"));
    } else if (a.kind == "d-construction") {
      family = d_construction(need_int(a.k, "k"), need_int(a.d, "d"));
    } else if (a.kind == "all-k-subsets") {
      family = all_k_subsets(need_int(a.n, "n"), need_int(a.k, "k"));
    } else if (a.kind == "star") {
      family = star_family(need_int(a.n, "n"), need_int(a.s, "s"));
    } else {
      throw std::invalid_argument("construct: unknown kind '" + a.kind + "'");
    }
    self_check_construction(a.kind, family, a.k);
    render_family(renderer, family);
  });

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a family against a property");
  struct VerifyArgs {
    std::string file;
    ConstraintFlags constraint;
    std::string design;  // "t,lambda"
    bool quasi = false;
  };
  auto ver_args = std::make_shared<VerifyArgs>();
  verify->add_option("file", ver_args->file, "family file")->required();
  ver_args->constraint.attach(verify);
  verify->add_option("--design", ver_args->design,
                     "t,lambda: require every t-subset in exactly lambda blocks");
  verify->add_flag("--quasi-symmetric", ver_args->quasi,
                   "require at most two distinct pairwise intersection sizes");
  verify->callback([ver_args, &renderer, &rc] {
    const auto& a = *ver_args;
    const int modes = (a.constraint.any() ? 1 : 0) + (!a.design.empty() ? 1 : 0) +
                      (a.quasi ? 1 : 0);
    if (modes != 1)
      throw std::invalid_argument(
          "verify: give exactly one of constraint flags, --design, or --quasi-symmetric");
    const SetFamily family = load_family(a.file);
    ordered_json j;
    std::ostringstream text;
    bool pass = false;
    if (a.constraint.any()) {
      const auto constraint = a.constraint.build(1, family.ground_size());
      const ValidationReport report = validate_family(family, constraint);
      pass = report.valid;
      j["check"] = "constraint";
      j["input"] = a.file;
      j["constraint"] = constraint_json(constraint);
      j["members"] = family.size();
      j["result"] = pass ? "pass" : "fail";
      text << "check: constraint\n";
      text << "input: " << a.file << "\n";
      text << "constraint: " << constraint.describe() << "\n";
      text << "members: " << family.size() << "\n";
      text << "result: " << (pass ? "pass" : "fail") << "\n";
      if (!pass) {
        const Violation& v = *report.first_violation;
        j["violation"] = ordered_json{{"kind", std::string(violation_kind_name(v.kind))},
                                      {"i", v.index_i},
                                      {"j", v.index_j}};
        text << "violation: " << violation_kind_name(v.kind) << " at members " << v.index_i
             << " and " << v.index_j << "\n";
      }
    } else if (!a.design.empty()) {
      const auto comma = a.design.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("verify: --design wants t,lambda");
      int t = 0;
      std::uint64_t lambda = 0;
      try {
        t = std::stoi(a.design.substr(0, comma));
        lambda = std::stoull(a.design.substr(comma + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("verify: --design wants t,lambda as integers");
      }
      const DesignCheckResult report = verify_design(family, t, lambda);
      pass = report.ok;
      j["check"] = "design";
      j["input"] = a.file;
      j["t"] = t;
      j["lambda"] = lambda;
      j["members"] = family.size();
      j["result"] = pass ? "pass" : "fail";
      text << "check: design\n";
      text << "input: " << a.file << "\n";
      text << "t: " << t << "\n";
      text << "lambda: " << lambda << "\n";
      text << "members: " << family.size() << "\n";
      text << "result: " << (pass ? "pass" : "fail") << "\n";
      if (!pass) {
        j["witness"] = ordered_json{{"subset", report.witness_subset},
                                    {"count", report.witness_count}};
        text << "witness_subset: " << join_ints(report.witness_subset) << "\n";
        text << "witness_count: " << report.witness_count << "\n";
      }
    } else {
      const QuasiSymmetricReport report = verify_quasi_symmetric(family);
      pass = report.quasi_symmetric;
      j["check"] = "quasi-symmetric";
      j["input"] = a.file;
      j["members"] = family.size();
      j["intersection_sizes"] = report.intersection_sizes;
      j["result"] = pass ? "pass" : "fail";
      text << "check: quasi-symmetric\n";
      text << "input: " << a.file << "\n";
      text << "members: " << family.size() << "\n";
      text << "intersection_sizes: " << join_ints(report.intersection_sizes) << "\n";
      text << "result: " << (pass ? "pass" : "fail") << "\n";
    }
    if (renderer.json)
      renderer.payload << j.dump(2) << "\n";
    else
      renderer.payload << text.str();
    if (!pass) rc = 1;
  });

  // ---- spectrum -------------------------------------------------------
  auto* spectrum = app.add_subcommand("spectrum", "intersection and size statistics");
  auto spec_input = std::make_shared<std::string>();
  spectrum->add_option("file", *spec_input, "family file")->required();
  spectrum->callback([spec_input, &renderer] {
    const SetFamily family = load_family(*spec_input);
    const SpectrumReport report = intersection_spectrum(family);
    if (renderer.json) {
      ordered_json j;
      j["input"] = *spec_input;
      j["n"] = family.ground_size();
      j["members"] = family.size();
      ordered_json ic = ordered_json::object();
      for (const auto& [size, count] : report.intersection_counts)
        ic[std::to_string(size)] = count;
      j["intersection_sizes"] = std::move(ic);
      ordered_json sh = ordered_json::object();
      for (const auto& [size, count] : report.size_histogram) sh[std::to_string(size)] = count;
      j["member_sizes"] = std::move(sh);
      renderer.payload << j.dump(2) << "\n";
      return;
    }
    renderer.payload << "input: " << *spec_input << "\n";
    renderer.payload << "n: " << family.ground_size() << "\n";
    renderer.payload << "members: " << family.size() << "\n";
    renderer.payload << "intersection_sizes:\n";
    for (const auto& [size, count] : report.intersection_counts)
      renderer.payload << "  " << size << ": " << count << "\n";
    renderer.payload << "member_sizes:\n";
    for (const auto& [size, count] : report.size_histogram)
      renderer.payload << "  " << size << ": " << count << "\n";
  });

  // ---- search ---------------------------------------------------------
  auto* search = app.add_subcommand("search", "maximum family under a constraint");
  struct SearchArgs {
    int n = 0;
    ConstraintFlags constraint;
    SearchFlags flags;
    bool oracle = false;
  };
  auto search_args = std::make_shared<SearchArgs>();
  search->add_option("-n,--n", search_args->n, "ground-set size")->required();
  search_args->constraint.attach(search);
  search_args->flags.attach(search);
  search->add_flag("--oracle", search_args->oracle,
                   "use the exhaustive reference enumeration instead");
  search->callback([search_args, &renderer, &rc] {
    const auto& a = *search_args;
    const auto constraint = a.constraint.build(1, a.n);
    if (a.oracle) {
      if (a.flags.parallel || a.flags.symmetry_breaking || a.flags.time_budget_s ||
          a.flags.node_budget || !a.flags.seed_path.empty())
        throw std::invalid_argument("search: --oracle takes no budget or strategy flags");
      const SearchResult res = brute_force_oracle(a.n, constraint);
      render_search(renderer, a.n, constraint, "oracle", res);
      return;
    }
    const SearchResult res = max_family(a.n, constraint, a.flags.build());
    render_search(renderer, a.n, constraint, "branch-and-bound", res);
    if (res.status == SearchStatus::BudgetExhausted) rc = 3;
  });

  // ---- triples --------------------------------------------------------
  auto* triples = app.add_subcommand("triples", "three-element cover of a family");
  auto tri_input = std::make_shared<std::string>();
  triples->add_option("file", *tri_input, "family file")->required();
  triples->callback([tri_input, &renderer] {
    const SetFamily family = load_family(*tri_input);
    const TripleCoverResult result = triple_cover(family);
    int max_size = 0;
    for (const auto& m : family.members()) max_size = std::max(max_size, m.size());
    const std::uint64_t cap = static_cast<std::uint64_t>(max_size) * max_size * max_size;
    if (renderer.json) {
      ordered_json j;
      j["input"] = *tri_input;
      j["n"] = family.ground_size();
      j["members"] = family.size();
      j["max_member_size"] = max_size;
      j["triple_cap"] = cap;
      j["triples"] = result.triples.size();
      j["cover"] = family_json(result.triples);
      ordered_json trace = ordered_json::array();
      for (const auto& t : result.trace)
        trace.push_back(ordered_json{{"a", t.a},
                                     {"b_member", t.b_member},
                                     {"b", t.b},
                                     {"c_member", t.c_member},
                                     {"c", t.c}});
      j["trace"] = std::move(trace);
      renderer.payload << j.dump(2) << "\n";
      return;
    }
    renderer.payload << "input: " << *tri_input << "\n";
    renderer.payload << "n: " << family.ground_size() << "\n";
    renderer.payload << "members: " << family.size() << "\n";
    renderer.payload << "max_member_size: " << max_size << "\n";
    renderer.payload << "triple_cap: " << cap << "\n";
    renderer.payload << "triples: " << result.triples.size() << "\n";
    renderer.payload << "cover:\n";
    print_family_members(renderer.payload, result.triples, "  ");
    renderer.payload << "trace:\n";
    for (const auto& t : result.trace)
      renderer.payload << "  a=" << t.a << " b_member=" << t.b_member << " b=" << t.b
                       << " c_member=" << t.c_member << " c=" << t.c << "\n";
  });

  // ---- scan -----------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "maximum family sizes along a range of n");
  struct ScanArgs {
    int s = 0;
    int k = 0;
    int from = 0;
    int to = 0;
    SearchFlags flags;
  };
  auto scan_args = std::make_shared<ScanArgs>();
  scan->add_option("-s,--s", scan_args->s, "member size")->required();
  scan->add_option("-k,--k", scan_args->k, "largest admissible intersection size")->required();
  scan->add_option("--n-from", scan_args->from, "first ground-set size")->required();
  scan->add_option("--n-to", scan_args->to, "last ground-set size")->required();
  scan_args->flags.attach(scan);
  scan->callback([scan_args, &renderer, &rc] {
    const auto& a = *scan_args;
    const auto rows = threshold_scan(a.s, a.k, a.from, a.to, a.flags.build());
    bool exhausted = false;
    for (const auto& row : rows)
      if (row.status != SearchStatus::Exact) exhausted = true;
    if (renderer.json) {
      for (const auto& row : rows) {
        ordered_json j;
        j["n"] = row.n;
        j["max_size"] = row.max_size;
        j["bound_floor"] = row.bound_floor.get_str();
        j["holds"] = std::string(bound_verdict_name(row.bound_holds));
        j["status"] = row.status == SearchStatus::Exact ? "exact" : "budget-exhausted";
        j["nodes"] = row.nodes;
        j["elapsed_ms"] = row.elapsed_ms;
        renderer.payload << j.dump() << "\n";
      }
    } else {
      renderer.payload << "s: " << a.s << "\n";
      renderer.payload << "k: " << a.k << "\n";
      std::vector<std::array<std::string, 7>> cells;
      cells.push_back(
          {"n", "max_size", "bound_floor", "holds", "status", "nodes", "elapsed_ms"});
      for (const auto& row : rows)
        cells.push_back({std::to_string(row.n), std::to_string(row.max_size),
                         row.bound_floor.get_str(),
                         std::string(bound_verdict_name(row.bound_holds)),
                         row.status == SearchStatus::Exact ? "exact" : "budget-exhausted",
                         std::to_string(row.nodes), std::to_string(row.elapsed_ms)});
      std::array<std::size_t, 7> width{};
      for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
          width[c] = std::max(width[c], row[c].size());
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c)
          renderer.payload << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        renderer.payload << "\n";
      }
    }
    if (exhausted) rc = 3;
  });

  for (CLI::App* cmd : {bound, construct, verify, spectrum, search, triples, scan}) {
    cmd->add_flag("--json", renderer.json, "render JSON instead of text");
    cmd->add_option("--output", output_path, "write the rendering to a file instead of stdout");
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ifam");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (!output_path.empty()) {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write output file: " << output_path << "\n";
      return 2;
    }
    f << renderer.payload.str();
  } else {
    out << renderer.payload.str();
  }
  return rc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace ifam::cli
