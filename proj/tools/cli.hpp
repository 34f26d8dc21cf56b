#pragma once

// Command implementations for the defdom tool. run() is the whole program
// minus process setup, so tests can drive it in-process.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "defdom/clique_deletion.hpp"
#include "defdom/defense.hpp"
#include "defdom/formula.hpp"
#include "defdom/graph.hpp"
#include "defdom/graph_io.hpp"
#include "defdom/interval.hpp"
#include "defdom/reduction_cnd.hpp"
#include "defdom/reduction_dds.hpp"
#include "defdom/solvers.hpp"

namespace defdom::cli {

enum Exit { affirmative = 0, negative = 1, usage_error = 2, timed_out = 3 };

struct CommandResult {
  Exit code = affirmative;
  std::string verdict;
  std::string value = "-";
  std::string certificate = "none";
};

struct Options {
  int jobs = 1;
  double time_limit = 0;

  std::string graph, defense, intervals, formula, deletion, attacks, lower, upper, output, emit;
  int k = 0;
  int s = 0;
  int t = 0;
  std::string strategy = "pruned";
  std::string ell_mode = "proof-consistent";
  bool multiset = false;
  bool check = false;
  bool reference = false;
  bool allow_small = false;
  bool typed = false;
  std::string nu, mu;

  // gen
  std::string kind;
  int size = 10;
  double p = 0.3;
  std::uint64_t seed = 1;
  long long span = -1, max_len = -1;
  int a = 2, b = 1, c = 7;
};

namespace detail {

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

inline ViolatorSearch strategy_of(const Options& o) {
  if (o.strategy == "pruned") return {SearchMode::pruned, o.jobs};
  if (o.strategy == "exhaustive") return {SearchMode::exhaustive, o.jobs};
  throw InputError("unknown strategy '" + o.strategy + "' (pruned or exhaustive)");
}

inline EllMode ell_mode_of(const Options& o) {
  if (o.ell_mode == "proof-consistent") return EllMode::proof_consistent;
  if (o.ell_mode == "literal") return EllMode::literal;
  throw InputError("unknown ell mode '" + o.ell_mode + "' (proof-consistent or literal)");
}

// s and t from the command line, falling back to the file's params line.
inline CndInstance cnd_from(const Options& o) {
  auto file = read_graph_file(o.graph);
  CndInstance inst{std::move(file.graph), o.s, o.t};
  if (inst.s == 0 && file.params.count("s")) inst.s = static_cast<int>(file.params.at("s"));
  if (inst.t == 0 && file.params.count("t")) inst.t = static_cast<int>(file.params.at("t"));
  if (inst.s == 0 || inst.t == 0) throw InputError("clique deletion needs s and t (flags or 'c params s <s> t <t>')");
  inst.validate();
  return inst;
}

inline int k_from(const Options& o, const GraphFile& file) {
  int k = o.k;
  if (k == 0 && file.params.count("k")) k = static_cast<int>(file.params.at("k"));
  if (k < 1) throw InputError("attack bound k must be at least 1");
  return k;
}

// A defense file whose lines are all single ids is a set; any "<v> <count>"
// line makes it a multiset. --multiset insists on the multiset format.
inline VertexMultiset read_defense(const Options& o) { return read_vertex_multiset_file(o.defense, o.multiset); }

inline std::string write_set_certificate(const Options& o, const VertexSet& s) {
  if (o.output.empty()) return "none";
  auto out = open_output(o.output);
  write_vertex_set(out, s);
  return o.output;
}

inline std::string write_multiset_certificate(const std::string& path, const VertexMultiset& d) {
  if (path.empty()) return "none";
  auto out = open_output(path);
  write_vertex_multiset(out, d);
  return path;
}

}  // namespace detail

inline CommandResult cmd_verify(const Options& o, std::ostream& log) {
  auto file = read_graph_file(o.graph);
  int k = detail::k_from(o, file);
  auto d = detail::read_defense(o);
  d.check_in(file.graph);
  SearchStats stats;
  auto bad = find_violator(file.graph, d, k, detail::strategy_of(o), &stats);
  log << "attacks checked: " << stats.attacks_checked << '\n';
  if (!bad) {
    log << "GOOD: defense of size " << d.total() << " counters every " << k << "-attack\n";
    return {affirmative, "good", std::to_string(d.total())};
  }
  log << "BAD: attack " << format_set(bad->attack) << " has deficiency " << bad->deficiency << '\n';
  return {negative, "bad", format_set(bad->attack), detail::write_set_certificate(o, bad->attack)};
}

inline CommandResult cmd_solve_exact(const Options& o, std::ostream& log) {
  auto file = read_graph_file(o.graph);
  const auto& g = file.graph;
  std::optional<SolveResult> res;
  if (!o.attacks.empty()) {
    auto in = defdom::detail::open_input(o.attacks);
    auto attacks = read_attack_list(in);
    VertexMultiset lower, upper;
    if (!o.lower.empty()) lower = read_vertex_multiset_file(o.lower);
    if (!o.upper.empty()) {
      upper = read_vertex_multiset_file(o.upper);
    } else {
      // Without an upper bound any attack needs at most |A| copies near it.
      std::size_t widest = 1;
      for (const auto& a : attacks) widest = std::max(widest, a.size());
      for (Vertex v = 1; v <= g.n(); ++v) upper.add(v, static_cast<int>(widest));
    }
    res = min_constrained_multiset(g, attacks, lower, upper);
    if (!res) {
      log << "no defense within the bounds counters every listed attack\n";
      return {negative, "none"};
    }
  } else {
    int k = detail::k_from(o, file);
    res = o.multiset ? min_multiset_defense(g, k) : min_set_defense(g, k);
  }
  log << "optimum " << res->optimum << ", witness " << format_multiset(res->witness) << ", nodes " << res->explored
      << '\n';
  return {affirmative, "optimal", std::to_string(res->optimum), detail::write_multiset_certificate(o.output, res->witness)};
}

inline CommandResult cmd_greedy(const Options& o, std::ostream& log) {
  auto inst = read_interval_file(o.intervals);
  if (auto c = find_endpoint_conflict(inst)) {
    inst = normalize(inst);
    log << describe(*c) << "; perturbed apart without changing the graph\n";
  }
  if (o.k < 1) throw InputError("attack bound k must be at least 1");
  auto d = o.reference ? greedy_defense_reference(inst, o.k) : greedy_defense(inst, o.k);
  log << "greedy defense size " << d.total() << ": " << format_multiset(d) << '\n';
  std::string path = o.emit.empty() ? o.output : o.emit;
  CommandResult r{affirmative, "value", std::to_string(d.total()), detail::write_multiset_certificate(path, d)};
  if (o.check) {
    auto bad = find_violator(intersection_graph(inst), d, o.k, detail::strategy_of(o));
    if (bad) {
      log << "CHECK FAILED: attack " << format_set(bad->attack) << " is not countered\n";
      r.code = negative;
      r.verdict = "bad";
    } else {
      log << "check: GOOD\n";
    }
  }
  return r;
}

inline CommandResult cmd_reduce_cnd_to_dds(const Options& o, std::ostream& log) {
  auto inst = detail::cnd_from(o);
  auto dds = cnd_to_dds(inst, detail::ell_mode_of(o));
  if (auto bad = dds_invariant_violations(inst, dds); !bad.empty())
    throw std::logic_error("construction invariant failed: " + bad.front());
  log << "built G' with " << dds.graph.n() << " vertices and " << dds.graph.edge_count() << " edges; k = " << dds.k
      << ", ell = " << dds.ell << '\n';
  if (o.output.empty()) throw InputError("reduce needs -o <output file>");
  auto out = detail::open_output(o.output);
  write_graph(out, dds.graph, {{"k", dds.k}, {"ell", dds.ell}});
  return {affirmative, "built", "k=" + std::to_string(dds.k) + ",ell=" + std::to_string(dds.ell), o.output};
}

inline CommandResult cmd_reduce_e2sat_to_cnd(const Options& o, std::ostream& log) {
  auto f = read_formula_file(o.formula);
  auto inst = e2sat_to_cnd(f, o.allow_small);
  log << "built G with " << inst.cnd.graph.n() << " vertices and " << inst.cnd.graph.edge_count()
      << " edges; s = " << inst.cnd.s << ", t = " << inst.cnd.t << '\n';
  if (o.output.empty()) throw InputError("reduce needs -o <output file>");
  auto out = detail::open_output(o.output);
  write_graph(out, inst.cnd.graph, {{"s", inst.cnd.s}, {"t", inst.cnd.t}});
  return {affirmative, "built", "s=" + std::to_string(inst.cnd.s) + ",t=" + std::to_string(inst.cnd.t), o.output};
}

inline CommandResult cmd_audit_dds_forward(const Options& o, std::ostream& log) {
  auto inst = detail::cnd_from(o);
  if (o.deletion.empty()) throw InputError("audit dds-forward needs --deletion <file>");
  auto x = read_vertex_set_file(o.deletion);
  auto dds = cnd_to_dds(inst, detail::ell_mode_of(o));
  auto audit = audit_forward(inst, dds, x, o.jobs);
  log << "serious attacks checked: " << audit.serious_checked << '\n';
  if (audit.pass()) {
    log << "PASS: defense of size " << dds.ell << " counters every " << dds.k << "-attack of G'\n";
    return {affirmative, "pass", std::to_string(dds.ell)};
  }
  VertexSet witness = audit.uncountered_serious ? *audit.uncountered_serious : audit.violator->attack;
  if (audit.uncountered_serious)
    log << "FAIL: serious attack " << format_set(witness) << " is not countered\n";
  if (audit.violator)
    log << "FAIL: attack " << format_set(audit.violator->attack) << " has deficiency " << audit.violator->deficiency
        << '\n';
  return {negative, "fail", format_set(witness), detail::write_set_certificate(o, witness)};
}

inline CommandResult cmd_audit_dds_roundtrip(const Options& o, std::ostream& log) {
  auto inst = detail::cnd_from(o);
  auto dds = cnd_to_dds(inst, detail::ell_mode_of(o));
  std::optional<VertexSet> expected;
  VertexMultiset d;
  if (!o.defense.empty()) {
    d = detail::read_defense(o);
  } else {
    if (o.deletion.empty()) throw InputError("audit dds-roundtrip needs --deletion or --defense");
    expected = read_vertex_set_file(o.deletion);
    d = proof_defense(inst, dds, *expected);
  }
  auto got = extract_deletion_set(dds, d);
  bool free = static_cast<int>(got.deletion.size()) <= inst.s && kt_free_after(inst, got.deletion);
  bool same = !expected || got.deletion == *expected;
  log << "extracted X = {" << format_set(got.deletion) << "}, " << (free ? "K_t-free" : "K_t survives") << '\n';
  if (free && same) return {affirmative, "pass", format_set(got.deletion), detail::write_set_certificate(o, got.deletion)};
  if (!same) log << "FAIL: expected {" << format_set(*expected) << "}\n";
  return {negative, "fail", format_set(got.deletion)};
}

inline CommandResult cmd_audit_cnd_certificate(const Options& o, std::ostream& log) {
  auto f = read_formula_file(o.formula);
  auto inst = e2sat_to_cnd(f, o.allow_small);
  if (o.nu.empty()) throw InputError("audit cnd-certificate needs --nu <bits>");
  auto nu = parse_assignment(o.nu, f.a);
  if (!o.mu.empty()) {
    auto mu = parse_assignment(o.mu, f.b);
    auto q = kt_witness_from_y(f, inst, nu, mu);
    auto sub = induced_subgraph(inst.cnd.graph, q);
    if (!has_clique(sub.graph, inst.cnd.t)) {
      log << "FAIL: selected vertices " << format_set(q) << " are not a K_t\n";
      return {negative, "fail", format_set(q)};
    }
    log << "PASS: K_" << inst.cnd.t << " survives the deletion: " << format_set(q) << '\n';
    return {affirmative, "pass", format_set(q), detail::write_set_certificate(o, q)};
  }
  auto x = o.deletion.empty() ? valuation_to_deletion(f, inst, nu) : read_vertex_set_file(o.deletion);
  auto back = deletion_to_valuation(f, inst, x);
  if (back != nu) {
    log << "FAIL: deletion set encodes nu = " << format_assignment(back) << '\n';
    return {negative, "fail", format_assignment(back)};
  }
  if (auto w = typed_clique_audit(inst.cnd.graph, inst.cnd.t, x)) {
    log << "FAIL: K_t survives: " << format_set(w->members) << '\n';
    return {negative, "fail", format_set(w->members), detail::write_set_certificate(o, w->members)};
  }
  log << "PASS: deleting " << x.size() << " vertices leaves no K_" << inst.cnd.t << '\n';
  return {affirmative, "pass", std::to_string(x.size()), detail::write_set_certificate(o, x)};
}

inline CommandResult cmd_audit_clique_typed(const Options& o, std::ostream& log) {
  auto file = read_graph_file(o.graph);
  int t = o.t;
  if (t == 0 && file.params.count("t")) t = static_cast<int>(file.params.at("t"));
  if (t < 2) throw InputError("clique-typed audit needs t >= 2");
  VertexSet x;
  if (!o.deletion.empty()) x = read_vertex_set_file(o.deletion);
  auto typed = typed_clique_audit(file.graph, t, x);
  bool generic = has_clique(delete_vertices(file.graph, x).graph, t);
  log << "typed: " << (typed ? "K_t found" : "none") << ", generic: " << (generic ? "K_t found" : "none") << '\n';
  if (typed.has_value() != generic) return {negative, "fail", typed ? "typed-only" : "generic-only"};
  return {affirmative, "pass", generic ? "clique" : "none"};
}

inline CommandResult cmd_e2sat(const Options& o, std::ostream& log) {
  auto f = read_formula_file(o.formula);
  auto ans = solve_e2sat(f);
  std::ostringstream cert;
  CommandResult r;
  if (ans.yes) {
    log << "YES: nu = " << format_assignment(ans.winning_nu) << " leaves phi unsatisfiable\n";
    cert << format_assignment(ans.winning_nu) << '\n';
    r = {affirmative, "yes", format_assignment(ans.winning_nu)};
  } else {
    log << "NO: every nu admits a satisfying mu\n";
    for (const auto& [nu, mu] : ans.refutation) {
      log << "  nu = " << format_assignment(nu) << "  mu = " << format_assignment(mu) << '\n';
      cert << format_assignment(nu) << ' ' << format_assignment(mu) << '\n';
    }
    r = {negative, "no"};
  }
  if (!o.output.empty()) {
    auto out = detail::open_output(o.output);
    out << cert.str();
    r.certificate = o.output;
  }
  return r;
}

inline CommandResult cmd_solve_cnd(const Options& o, std::ostream& log) {
  auto inst = detail::cnd_from(o);
  auto x = solve_cnd_bruteforce(inst);
  if (!x) {
    log << "no set of at most " << inst.s << " vertices destroys every K_" << inst.t << '\n';
    return {negative, "no"};
  }
  log << "deleting {" << format_set(*x) << "} leaves no K_" << inst.t << '\n';
  return {affirmative, "yes", format_set(*x), detail::write_set_certificate(o, *x)};
}

inline CommandResult cmd_clique(const Options& o, std::ostream& log) {
  auto file = read_graph_file(o.graph);
  int t = o.t;
  if (t == 0 && file.params.count("t")) t = static_cast<int>(file.params.at("t"));
  if (t < 1) throw InputError("clique size t must be at least 1");
  VertexSet x;
  if (!o.deletion.empty()) x = read_vertex_set_file(o.deletion);
  std::optional<VertexSet> found;
  if (o.typed) {
    if (auto w = typed_clique_audit(file.graph, t, x)) found = w->members;
  } else {
    auto sub = delete_vertices(file.graph, x);
    if (auto w = find_clique(sub.graph, t)) {
      VertexSet back;
      for (Vertex v : *w) back.push_back(sub.original[v]);
      found = make_set(std::move(back));
    }
  }
  if (!found) {
    log << "no K_" << t << '\n';
    return {negative, "no"};
  }
  log << "K_" << t << ": " << format_set(*found) << '\n';
  return {affirmative, "yes", format_set(*found), detail::write_set_certificate(o, *found)};
}

inline CommandResult cmd_gen(const Options& o, std::ostream& log) {
  if (o.output.empty()) throw InputError("gen needs -o <output file>");
  auto out = detail::open_output(o.output);
  if (o.kind == "interval") {
    write_intervals(out, random_intervals(o.size, o.seed, o.span, o.max_len));
  } else if (o.kind == "formula") {
    write_formula(out, random_formula(o.a, o.b, o.c, o.seed));
  } else {
    Graph g;
    if (o.size < 0) throw InputError("size must be non-negative");
    if (o.kind == "complete") g = complete_graph(o.size);
    else if (o.kind == "star") g = star_graph(o.size);
    else if (o.kind == "path") g = path_graph(o.size);
    else if (o.kind == "cycle") g = cycle_graph(o.size);
    else if (o.kind == "random") {
      if (o.p < 0 || o.p > 1) throw InputError("edge probability must lie in [0, 1]");
      g = random_graph(o.size, o.p, o.seed);
    } else if (o.kind == "petersen") g = petersen_graph();
    else throw InputError("unknown generator '" + o.kind + "'");
    write_graph(out, g);
  }
  log << "seed " << o.seed << '\n';
  return {affirmative, "generated", "seed=" + std::to_string(o.seed), o.output};
}

inline void print_summary(std::ostream& out, const CommandResult& r) {
  std::string value = r.value.empty() ? "-" : r.value;
  for (auto& ch : value)
    if (ch == ' ') ch = ',';
  out << "verdict=" << r.verdict << " value=" << value << " certificate=" << r.certificate << '\n';
}

// Parses and runs one command. Summary goes to `out`, everything else to `log`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& log) {
  Options o;
  CLI::App app{"Defensive domination toolkit", "defdom"};
  app.require_subcommand(1);
  app.add_option("--jobs", o.jobs, "worker threads for violator searches")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", o.time_limit, "abort after this many seconds (exit 3)")->check(CLI::NonNegativeNumber);

  std::function<CommandResult(const Options&, std::ostream&)> action;
  auto bind = [&](CLI::App* sub, auto fn) { sub->callback([&action, fn] { action = fn; }); };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "certificate or instance file"); };

  auto* verify = app.add_subcommand("verify", "check that a defense counters every k-attack");
  verify->add_option("graph", o.graph)->required();
  verify->add_option("defense", o.defense)->required();
  verify->add_option("-k", o.k, "attack bound");
  verify->add_option("--strategy", o.strategy, "pruned or exhaustive");
  verify->add_flag("--multiset", o.multiset, "defense file lines are '<v> <count>'");
  out_opt(verify);
  bind(verify, cmd_verify);

  auto* solve = app.add_subcommand("solve-exact", "minimum defense by exhaustive search");
  solve->add_option("graph", o.graph)->required();
  solve->add_option("-k", o.k, "attack bound");
  solve->add_flag("--multiset", o.multiset, "allow several defenders per vertex");
  solve->add_option("--attacks", o.attacks, "explicit attack list (one per line)");
  solve->add_option("--lower", o.lower, "multiset every solution must contain");
  solve->add_option("--upper", o.upper, "multiset every solution must fit in");
  out_opt(solve);
  bind(solve, cmd_solve_exact);

  auto* greedy = app.add_subcommand("greedy", "greedy multiset defense of an interval graph");
  greedy->add_option("intervals", o.intervals)->required();
  greedy->add_option("-k", o.k, "attack bound")->required();
  greedy->add_option("--emit-defense", o.emit, "write the defense here");
  greedy->add_flag("--check", o.check, "verify the result on the intersection graph");
  greedy->add_flag("--reference", o.reference, "use the direct quadratic implementation");
  greedy->add_option("--strategy", o.strategy, "violator search for --check");
  out_opt(greedy);
  bind(greedy, cmd_greedy);

  auto* reduce = app.add_subcommand("reduce", "build a reduction instance");
  reduce->require_subcommand(1);
  auto* r1 = reduce->add_subcommand("cnd-to-dds", "clique node deletion to defensive domination");
  r1->add_option("graph", o.graph)->required();
  r1->add_option("-s", o.s);
  r1->add_option("-t", o.t);
  r1->add_option("--ell-mode", o.ell_mode, "proof-consistent or literal");
  out_opt(r1);
  bind(r1, cmd_reduce_cnd_to_dds);
  auto* r2 = reduce->add_subcommand("e2sat-to-cnd", "existential 2-level 3-CNF to clique node deletion");
  r2->add_option("formula", o.formula)->required();
  r2->add_flag("--allow-small", o.allow_small, "accept c <= 6 (testing only)");
  out_opt(r2);
  bind(r2, cmd_reduce_e2sat_to_cnd);

  auto* audit = app.add_subcommand("audit", "check a reduction certificate");
  audit->require_subcommand(1);
  auto* a1 = audit->add_subcommand("dds-forward", "forward defense of a deletion set");
  a1->add_option("graph", o.graph)->required();
  a1->add_option("-s", o.s);
  a1->add_option("-t", o.t);
  a1->add_option("--deletion", o.deletion)->required();
  a1->add_option("--ell-mode", o.ell_mode);
  out_opt(a1);
  bind(a1, cmd_audit_dds_forward);
  auto* a2 = audit->add_subcommand("dds-roundtrip", "deletion set back from a defense");
  a2->add_option("graph", o.graph)->required();
  a2->add_option("-s", o.s);
  a2->add_option("-t", o.t);
  a2->add_option("--deletion", o.deletion);
  a2->add_option("--defense", o.defense, "defense of the constructed graph");
  a2->add_option("--ell-mode", o.ell_mode);
  out_opt(a2);
  bind(a2, cmd_audit_dds_roundtrip);
  auto* a3 = audit->add_subcommand("cnd-certificate", "valuation certificates of the 3-CNF reduction");
  a3->add_option("formula", o.formula)->required();
  a3->add_option("--nu", o.nu, "existential valuation as 0/1 string")->required();
  a3->add_option("--mu", o.mu, "universal valuation as 0/1 string");
  a3->add_option("--deletion", o.deletion, "deletion set instead of the one built from nu");
  a3->add_flag("--allow-small", o.allow_small);
  out_opt(a3);
  bind(a3, cmd_audit_cnd_certificate);
  auto* a4 = audit->add_subcommand("clique-typed", "typed clique search against the generic one");
  a4->add_option("graph", o.graph)->required();
  a4->add_option("-t", o.t);
  a4->add_option("--deletion", o.deletion);
  bind(a4, cmd_audit_clique_typed);

  auto* e2 = app.add_subcommand("e2sat", "brute-force existential 2-level 3-CNF");
  e2->add_option("formula", o.formula)->required();
  out_opt(e2);
  bind(e2, cmd_e2sat);

  auto* cnd = app.add_subcommand("solve-cnd", "brute-force clique node deletion");
  cnd->add_option("graph", o.graph)->required();
  cnd->add_option("-s", o.s);
  cnd->add_option("-t", o.t);
  out_opt(cnd);
  bind(cnd, cmd_solve_cnd);

  auto* clique = app.add_subcommand("clique", "find a K_t");
  clique->add_option("graph", o.graph)->required();
  clique->add_option("-t", o.t);
  clique->add_option("--deletion", o.deletion, "delete these vertices first");
  clique->add_flag("--typed", o.typed, "use the typed search (labelled reduction graphs)");
  out_opt(clique);
  bind(clique, cmd_clique);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", o.kind, "complete|star|path|cycle|random|petersen|interval|formula")->required();
  gen->add_option("-n,--size", o.size, "vertex count (leaf count for star)");
  gen->add_option("-p", o.p, "edge probability for random");
  gen->add_option("--seed", o.seed);
  gen->add_option("--span", o.span, "interval start range");
  gen->add_option("--max-len", o.max_len, "longest interval");
  gen->add_option("-a", o.a);
  gen->add_option("-b", o.b);
  gen->add_option("-c", o.c);
  out_opt(gen);
  bind(gen, cmd_gen);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, log, log);
    return code == 0 ? 0 : usage_error;
  }

  auto execute = [&]() -> int {
    try {
      auto r = action(o, log);
      print_summary(out, r);
      return r.code;
    } catch (const InputError& e) {
      log << "error: " << e.what() << '\n';
      print_summary(out, {usage_error, "error"});
      return usage_error;
    } catch (const std::exception& e) {
      log << "error: " << e.what() << '\n';
      print_summary(out, {usage_error, "error"});
      return usage_error;
    }
  };
  if (o.time_limit <= 0) return execute();

  auto task = std::async(std::launch::async, execute);
  if (task.wait_for(std::chrono::duration<double>(o.time_limit)) == std::future_status::ready) return task.get();
  log << "time limit of " << o.time_limit << " s reached\n";
  print_summary(out, {timed_out, "timeout"});
  out.flush();
  log.flush();
  std::quick_exit(timed_out);
}

}  // namespace defdom::cli
