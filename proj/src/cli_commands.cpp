#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "matpart/algorithms.hpp"
#include "matpart/cli.hpp"
#include "matpart/limits.hpp"
#include "matpart/oracle.hpp"
#include "matpart/partitioner.hpp"

namespace matpart::cli {

namespace {

struct Options {
  std::string instance;
  std::string second_path;
  std::string name;
  std::size_t k = 0;
  std::string mode = "auto";
  std::string pair_mode = "intersecting";
  std::string pair_kind = "laminar";
  std::size_t matroid = 1;
  std::optional<std::size_t> threshold;
  std::string output;
  bool transcript = false;
  bool local = false;
  bool assume = false;
  std::vector<std::string> set_labels;
};

class LimitsScope {
 public:
  explicit LimitsScope(std::optional<std::size_t> threshold) : saved_(limits()) {
    if (threshold) {
      Limits l = saved_;
      l.spanned = *threshold;
      l.brute_force = *threshold;
      set_limits(l);
    }
  }
  ~LimitsScope() { set_limits(saved_); }
  LimitsScope(const LimitsScope&) = delete;
  LimitsScope& operator=(const LimitsScope&) = delete;

 private:
  Limits saved_;
};

void emit(const Json& doc, const Options& opt, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw DocumentError(opt.output, "cannot write output file");
  file << text;
}

const LoadedMatroid& pick(const Instance& inst, std::size_t index) {
  if (index < 1 || index > inst.matroids.size()) {
    throw ValidationError("--matroid must be 1 or 2");
  }
  return inst.matroids[index - 1];
}

Json sets_json(const GroundSet& g, const std::vector<ElementSet>& sets) {
  Json out = Json::array();
  for (ElementSet s : sets) out.push_back(label_list(g, s));
  return out;
}

Json check_json(const HypothesisCheck& c, const GroundSet& g) {
  Json j = {{"name", c.name}, {"passed", c.passed}, {"verified", c.verified}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness_element) j["witness_element"] = element_label(g, *c.witness_element);
  if (!c.witness_sets.empty()) j["witness_sets"] = sets_json(g, c.witness_sets);
  return j;
}

Json step_json(const StepRecord& r, const GroundSet& g) {
  return {{"k", r.k},
          {"ground", label_list(g, r.ground)},
          {"extracted", label_list(g, r.extracted)},
          {"m_max", r.bounds.m_max},
          {"m_min", r.bounds.m_min},
          {"pads", r.pad_count},
          {"augmentations", r.augmentations},
          {"oracle_calls", r.oracle_calls}};
}

Json step_failure_json(const StepFailure& f, const GroundSet& g) {
  Json j = {{"kind", "padded-intersection"}, {"step_k", f.step_k()}, {"reason", f.what()}};
  if (const auto& cert = f.certificate()) {
    j["common_set"] = label_list(g, cert->common_set);
    if (cert->certificate) {
      j["first"] = label_list(g, cert->certificate->first);
      j["second"] = label_list(g, cert->certificate->second);
    }
  }
  return j;
}

bool is_power_check(const HypothesisCheck& c) { return c.name.rfind("E in I", 0) == 0; }

int cmd_partition(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  if (opt.k == 0) throw ValidationError("-k must be at least 1");
  const MatroidPtr m1 = inst.matroids[0].matroid;
  const MatroidPtr m2 = inst.matroids[1].matroid;
  const GroundSet& g = inst.ground;
  const PartitionPlan plan = validate_plan(m1, m2, opt.k, parse_mode(opt.mode));

  Json doc;
  doc["status"] = "ok";
  doc["mode"] = to_string(plan.mode);
  if (opt.mode != to_string(plan.mode)) doc["requested_mode"] = opt.mode;
  doc["k"] = opt.k;
  Json checks = Json::array();
  for (const auto& c : plan.checks) checks.push_back(check_json(c, g));
  doc["checks"] = checks;

  if (const HypothesisCheck* bad = plan.first_failure()) {
    doc["status"] = is_power_check(*bad) ? "infeasible" : "hypothesis-failed";
    doc["certificate"] = check_json(*bad, g);
    emit(doc, opt, out);
    return kNegative;
  }
  try {
    const CommonPartition result = partition_common(m1, m2, opt.k, plan);
    doc["parts"] = sets_json(g, result.parts);
    doc["source"] = "reduction";
    if (opt.transcript) {
      Json steps = Json::array();
      for (const auto& r : result.transcript) steps.push_back(step_json(r, g));
      doc["transcript"] = steps;
    }
    doc["oracle_calls"] = result.oracle_calls;
    emit(doc, opt, out);
    return kOk;
  } catch (const StepFailure& f) {
    doc["certificate"] = step_failure_json(f, g);
    if (m1->ground().size() <= limits().brute_force) {
      const ExhaustiveResult bf = bf_partition_exists(*m1, *m2, opt.k);
      doc["certificate"]["exhaustive"] = {{"found", bf.found}, {"nodes", bf.nodes_explored}};
      if (bf.found) {
        if (!verify_common_partition(*m1, *m2, *bf.partition)) {
          throw InternalError("exhaustive partition failed verification");
        }
        doc["status"] = "ok";
        doc["parts"] = sets_json(g, *bf.partition);
        doc["source"] = "exhaustive";
        emit(doc, opt, out);
        return kOk;
      }
      doc["status"] = "infeasible";
    } else {
      // Failing at the first step proves J1 ∩ J2 is empty; later failures
      // only show this sequence of choices did not work.
      doc["status"] = f.step_k() == opt.k ? "infeasible" : "hypothesis-failed";
    }
    emit(doc, opt, out);
    return kNegative;
  }
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const Json result = read_document(opt.second_path);
  if (!result.is_object()) throw DocumentError("result", "expected an object");
  for (const auto& item : result.items()) {
    static const std::vector<std::string> known{"status", "mode",   "requested_mode", "k",
                                                "checks", "parts",  "source",         "certificate",
                                                "transcript", "oracle_calls"};
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw DocumentError(item.key(), "unknown field");
    }
  }
  const GroundSet& g = inst.ground;
  Json doc;
  auto fail = [&](const std::string& why) {
    doc["valid"] = false;
    doc["failure"] = why;
    emit(doc, opt, out);
    return kNegative;
  };
  if (!result.contains("parts")) return fail("result has no parts");
  const Json& parts = result["parts"];
  if (!parts.is_array()) throw DocumentError("parts", "expected a list");
  ElementSet seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].is_array()) throw DocumentError("parts[" + std::to_string(i) + "]", "expected a list");
    ElementSet part;
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      const std::string path = "parts[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!parts[i][j].is_string()) throw DocumentError(path, "expected an element label");
      const auto e = g.find(parts[i][j].get<std::string>());
      if (!e) throw DocumentError(path, "unknown element '" + parts[i][j].get<std::string>() + "'");
      if (part.contains(*e) || seen.contains(*e)) {
        return fail("part " + std::to_string(i) + " repeats element " + g.label(*e));
      }
      part.insert(*e);
    }
    for (std::size_t m = 0; m < inst.matroids.size(); ++m) {
      if (!inst.matroids[m].matroid->independent(part)) {
        return fail("part " + std::to_string(i) + " " + g.format(part) +
                    " is dependent in matroid " + std::to_string(m + 1));
      }
    }
    seen |= part;
  }
  if (seen != g.all()) return fail("parts miss " + g.format(g.all() - seen));
  doc["valid"] = true;
  doc["parts"] = parts.size();
  emit(doc, opt, out);
  return kOk;
}

int cmd_spanned(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  if (opt.k == 0) throw ValidationError("-k must be at least 1");
  const GroundSet& g = inst.ground;
  Json doc = {{"k", opt.k}, {"spanned_level", opt.k + 1}};
  Json list = Json::array();
  bool any = false;
  for (std::size_t i = 0; i < inst.matroids.size(); ++i) {
    const Matroid& m = *inst.matroids[i].matroid;
    Json elems = Json::array();
    for (Element e : m.ground()) {
      if (auto sets = k_spanning_sets(m, e, opt.k + 1)) {
        elems.push_back({{"element", g.label(e)}, {"spanning_sets", sets_json(g, *sets)}});
        any = true;
      }
    }
    list.push_back({{"matroid", i + 1}, {"kind", inst.matroids[i].kind}, {"elements", elems}});
  }
  doc["matroids"] = list;
  emit(doc, opt, out);
  return any ? kNegative : kOk;
}

int cmd_export_pair(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const LoadedMatroid& m = pick(inst, opt.matroid);
  if (opt.pair_kind == "laminar") {
    if (!m.laminar) {
      throw ValidationError("matroid " + std::to_string(opt.matroid) + " is not laminar");
    }
    emit(pair_document(build_laminar_pair(*m.laminar, opt.k), inst.ground), opt, out);
  } else if (opt.pair_kind == "rank") {
    const auto policy = opt.assume ? HypothesisPolicy::assume : HypothesisPolicy::verify;
    emit(pair_document(build_rank_pair(m.matroid, opt.k, policy), inst.ground), opt, out);
  } else {
    throw ValidationError("--pair must be laminar or rank");
  }
  return kOk;
}

int cmd_paramodular(const Options& opt, std::ostream& out) {
  GroundSet g;
  const ParamodularPair pair = parse_pair(read_document(opt.instance), &g);
  ParamodularMode mode;
  if (opt.pair_mode == "intersecting") {
    mode = ParamodularMode::intersecting;
  } else if (opt.pair_mode == "full") {
    mode = ParamodularMode::full;
  } else {
    throw ValidationError("--mode must be intersecting or full");
  }
  const AxiomReport report = check_paramodular(pair, mode);
  Json doc = {{"mode", opt.pair_mode}, {"report", report_document(report, g)}};
  bool passed = report.passed();
  if (opt.local) {
    const AxiomReport local = check_local_cross(pair);
    doc["local_cross"] = report_document(local, g);
    passed = passed && local.passed();
  }
  emit(doc, opt, out);
  return passed ? kOk : kNegative;
}

int cmd_gmatroid(const Options& opt, std::ostream& out) {
  GroundSet g;
  const auto family = parse_family(read_document(opt.instance), &g);
  const AxiomReport report = gmatroid_axioms_check(family, g.all());
  emit(report_document(report, g), opt, out);
  return report.passed() ? kOk : kNegative;
}

int counterexample_figure1(const Options& opt, std::ostream& out) {
  using namespace fig1;
  const Figure1 fig = reconstruct_figure1();
  const Matroid& m = *fig.matroid;
  const GroundSet& g = fig.labels;
  const ElementSet all = m.ground();
  Json edges = Json::array();
  for (const auto& [e, f] : fig.graph.edges) edges.push_back({g.label(e), f});

  Json facts = Json::array();
  bool ok = true;
  auto fact = [&](const std::string& what, bool holds) {
    facts.push_back({{"fact", what}, {"holds", holds}});
    ok = ok && holds;
  };
  auto indep = [&](ElementSet s) { return m.independent(s); };
  fact("rank(E) = 3", rank(m) == 3);
  fact(g.format(ElementSet{e1p, e2p, e3p}) + " independent", indep(ElementSet{e1p, e2p, e3p}));
  fact("X = " + g.format(fig.x) + " independent", indep(fig.x));
  fact("E - X = " + g.format(all - fig.x) + " independent", indep(all - fig.x));
  fact("Y = " + g.format(fig.y) + " independent", indep(fig.y));
  fact("E - Y = " + g.format(all - fig.y) + " independent", indep(all - fig.y));
  fact("X + e3 = " + g.format(fig.x.with(e3)) + " dependent", !indep(fig.x.with(e3)));
  fact(g.format(ElementSet{e2p, e3, e3p}) + " dependent", !indep(ElementSet{e2p, e3, e3p}));
  fact(g.format(ElementSet{e1p, e2, e3p}) + " dependent", !indep(ElementSet{e1p, e2, e3p}));
  fact("matroid axioms hold", axioms_check(independent_family(m), all).passed());

  const auto j = bf_enumerate_family(
      [&](ElementSet x) { return indep(x) && indep(all - x); }, all);
  const AxiomReport report = gmatroid_axioms_check(j, all);
  const bool violated = report.contains({"(J1)", {fig.x, fig.y}, {fig.e}});
  ok = ok && violated;

  const Json doc = {
      {"name", "figure1"},
      {"graph", {{"left", g.labels()}, {"right_size", fig.graph.right_size}, {"edges", edges}}},
      {"adjacency_mask", fig.adjacency},
      {"candidates_scanned", fig.candidates_scanned},
      {"facts", facts},
      {"family_J", sets_json(g, j)},
      {"j1_violations", report.count("(J1)")},
      {"reproduced", ok},
      {"violation",
       {{"axiom", "(J1)"},
        {"X", label_list(g, fig.x)},
        {"Y", label_list(g, fig.y)},
        {"e", g.label(fig.e)},
        {"confirmed", violated}}}};
  emit(doc, opt, out);
  return ok ? kOk : kInternal;
}

int counterexample_k4(const Options& opt, std::ostream& out) {
  const K4Instance k4 = k4_instance();
  const GroundSet& g = k4.labels;
  const ElementSet all = k4.graphic->ground();
  const PartitionResult split1 = matroid_partition(repeated(k4.graphic, 2), all);
  const PartitionResult split2 = matroid_partition(repeated(k4.matching_partition, 2), all);
  const ExhaustiveResult bf = bf_partition_exists(*k4.graphic, *k4.matching_partition, 2);

  Json reduction;
  bool step_failed = false;
  const PartitionPlan plan = validate_plan(k4.graphic, k4.matching_partition, 2, Mode::generic);
  try {
    const CommonPartition cp = partition_common(k4.graphic, k4.matching_partition, 2, plan);
    reduction = {{"status", "ok"}, {"parts", sets_json(g, cp.parts)}};
  } catch (const StepFailure& f) {
    step_failed = true;
    reduction = {{"status", "infeasible"}, {"certificate", step_failure_json(f, g)}};
  }
  Json forest_transversals = Json::array();
  for_each_subset(all, [&](ElementSet x) {
    if (x.size() == 3 && k4.graphic->independent(x) && k4.matching_partition->independent(x)) {
      forest_transversals.push_back({{"set", label_list(g, x)},
                                     {"complement", label_list(g, all - x)},
                                     {"complement_forest", k4.graphic->independent(all - x)},
                                     {"complement_transversal",
                                      k4.matching_partition->independent(all - x)}});
    }
  });
  const bool ok = split1.covered && split2.covered && !bf.found && step_failed;
  const Json doc = {{"name", "k4"},
                    {"ground", g.labels()},
                    {"graphic_two_forests", sets_json(g, split1.parts)},
                    {"partition_two_transversals", sets_json(g, split2.parts)},
                    {"common_transversal_forests", forest_transversals},
                    {"exhaustive", {{"found", bf.found}, {"nodes", bf.nodes_explored}}},
                    {"reduction", reduction},
                    {"reproduced", ok}};
  emit(doc, opt, out);
  return ok ? kOk : kInternal;
}

int cmd_counterexample(const Options& opt, std::ostream& out) {
  if (opt.name == "figure1") return counterexample_figure1(opt, out);
  if (opt.name == "k4") return counterexample_k4(opt, out);
  throw ValidationError("unknown counterexample '" + opt.name + "' (figure1 or k4)");
}

int cmd_show(const Options& opt, std::ostream& out) {
  emit(builtin_instance(opt.name), opt, out);
  return kOk;
}

ElementSet chosen_set(const Instance& inst, const std::vector<std::string>& labels) {
  if (labels.empty()) return inst.ground.all();
  ElementSet s;
  for (const auto& l : labels) {
    const auto e = inst.ground.find(l);
    if (!e) throw DocumentError("--set", "unknown element '" + l + "'");
    s.insert(*e);
  }
  return s;
}

int cmd_oracle_partition(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const ExhaustiveResult r =
      bf_partition_exists(*inst.matroids[0].matroid, *inst.matroids[1].matroid, opt.k);
  Json doc = {{"k", opt.k}, {"found", r.found}, {"nodes_explored", r.nodes_explored}};
  if (r.partition) doc["partition"] = sets_json(inst.ground, *r.partition);
  emit(doc, opt, out);
  return r.found ? kOk : kNegative;
}

int cmd_oracle_rank(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const MatroidPtr m = pick(inst, opt.matroid).matroid;
  const ElementSet x = chosen_set(inst, opt.set_labels);
  const std::size_t formula = bf_rank_formula(*m, opt.k, x);
  const std::size_t algorithmic = union_rank(repeated(m, opt.k), x);
  emit({{"matroid", opt.matroid},
        {"k", opt.k},
        {"set", label_list(inst.ground, x)},
        {"formula", formula},
        {"union_rank", algorithmic},
        {"agree", formula == algorithmic}},
       opt, out);
  return formula == algorithmic ? kOk : kInternal;
}

int cmd_oracle_family(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const MatroidPtr m = pick(inst, opt.matroid).matroid;
  if (opt.k < 2) throw ValidationError("-k must be at least 2");
  const auto family =
      bf_enumerate_family([&](ElementSet x) { return j_member(m, opt.k, x); }, m->ground());
  emit({{"matroid", opt.matroid},
        {"k", opt.k},
        {"size", family.size()},
        {"family", sets_json(inst.ground, family)}},
       opt, out);
  return kOk;
}

int cmd_oracle_max_common(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const Matroid& m1 = *inst.matroids[0].matroid;
  const Matroid& m2 = *inst.matroids[1].matroid;
  const ElementSet best = bf_max_common_independent(m1, m2);
  const IntersectionResult r = matroid_intersection_max(m1, m2);
  const bool agree = best.size() == r.common_set.size();
  emit({{"exhaustive", label_list(inst.ground, best)},
        {"intersection", label_list(inst.ground, r.common_set)},
        {"size", best.size()},
        {"agree", agree}},
       opt, out);
  return agree ? kOk : kInternal;
}

int cmd_oracle_pad_bounds(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_document(opt.instance));
  const MatroidPtr m1 = inst.matroids[0].matroid;
  const MatroidPtr m2 = inst.matroids[1].matroid;
  const PadBounds formula = compute_pad_bounds(m1, m2, opt.k);
  std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
  bool any = false;
  bf_enumerate_family(
      [&](ElementSet x) {
        if (j_member(m1, opt.k, x) || j_member(m2, opt.k, x)) {
          lo = std::min(lo, x.size());
          hi = std::max(hi, x.size());
          any = true;
        }
        return false;
      },
      m1->ground());
  const bool agree = any && formula == PadBounds{hi, lo};
  emit({{"k", opt.k},
        {"m_max", formula.m_max},
        {"m_min", formula.m_min},
        {"enumerated_max", hi},
        {"enumerated_min", any ? lo : 0},
        {"agree", agree}},
       opt, out);
  return agree ? kOk : kInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition a ground set into common independent sets of two matroids",
               "matpart"};
  app.require_subcommand(1);
  Options opt;
  std::function<int(const Options&, std::ostream&)> action;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Write the result document to this path");
  };
  auto add_threshold = [&](CLI::App* sub) {
    sub->add_option("--threshold", opt.threshold,
                    "Size limit for the exhaustive spanned test and brute-force search");
  };
  auto bind = [&](CLI::App* sub, auto fn) {
    sub->callback([&action, fn] { action = fn; });
  };
  const std::string instance_help = "Instance document path, or builtin:<name>";

  auto* partition = app.add_subcommand("partition", "Partition into k common independent sets");
  partition->add_option("instance", opt.instance, instance_help)->required();
  partition->add_option("-k", opt.k, "Number of parts")->required();
  partition->add_option("--mode", opt.mode, "auto|laminar|kz1|kz2|mixed-kz1|mixed-kz2|generic");
  partition->add_flag("--transcript", opt.transcript, "Include the per-step log");
  add_threshold(partition);
  add_output(partition);
  bind(partition, cmd_partition);

  auto* verify = app.add_subcommand("verify", "Re-check a result document against its instance");
  verify->add_option("instance", opt.instance, instance_help)->required();
  verify->add_option("result", opt.second_path, "Result document")->required();
  add_output(verify);
  bind(verify, cmd_verify);

  auto* spanned = app.add_subcommand("spanned", "List every (k+1)-spanned element");
  spanned->add_option("instance", opt.instance, instance_help)->required();
  spanned->add_option("-k", opt.k, "k")->required();
  add_threshold(spanned);
  add_output(spanned);
  bind(spanned, cmd_spanned);

  auto* export_pair = app.add_subcommand("export-pair", "Write the laminar or rank pair of a matroid");
  export_pair->add_option("instance", opt.instance, instance_help)->required();
  export_pair->add_option("-k", opt.k, "k")->required();
  export_pair->add_option("--matroid", opt.matroid, "1 or 2");
  export_pair->add_option("--pair", opt.pair_kind, "laminar or rank");
  export_pair->add_flag("--assume", opt.assume, "Skip the spanned-element check for rank pairs");
  add_threshold(export_pair);
  add_output(export_pair);
  bind(export_pair, cmd_export_pair);

  auto* paramodular = app.add_subcommand("paramodular-check", "Check a pair for paramodularity");
  paramodular->add_option("pair", opt.instance, "Pair document")->required();
  paramodular->add_option("--mode", opt.pair_mode, "intersecting or full");
  paramodular->add_flag("--local", opt.local, "Also check the single-element cross inequality");
  add_output(paramodular);
  bind(paramodular, cmd_paramodular);

  auto* gmatroid = app.add_subcommand("gmatroid-check", "Check a set family against (J1), (J2)");
  gmatroid->add_option("family", opt.instance, "Family document")->required();
  add_output(gmatroid);
  bind(gmatroid, cmd_gmatroid);

  auto* counter = app.add_subcommand("counterexample", "Reproduce figure1 or k4");
  counter->add_option("name", opt.name, "figure1 or k4")->required();
  add_output(counter);
  bind(counter, cmd_counterexample);

  auto* show = app.add_subcommand("show", "Print a built-in instance document");
  show->add_option("name", opt.name, "figure1, k4 or konig-demo")->required();
  add_output(show);
  bind(show, cmd_show);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference computations");
  oracle->require_subcommand(1);
  auto oracle_sub = [&](const char* name, const char* help, auto fn, bool needs_k,
                        bool needs_matroid) {
    auto* sub = oracle->add_subcommand(name, help);
    sub->add_option("instance", opt.instance, instance_help)->required();
    if (needs_k) sub->add_option("-k", opt.k, "k")->required();
    if (needs_matroid) sub->add_option("--matroid", opt.matroid, "1 or 2");
    add_threshold(sub);
    add_output(sub);
    bind(sub, fn);
    return sub;
  };
  oracle_sub("partition", "Backtracking search for a common k-partition", cmd_oracle_partition,
             true, false);
  oracle_sub("rank-formula", "min over Y of |X - Y| + k r(Y) against the union rank",
             cmd_oracle_rank, true, true)
      ->add_option("--set", opt.set_labels, "Elements of X (default: all)");
  oracle_sub("family", "Enumerate {X in I : E - X in I^(k-1)}", cmd_oracle_family, true, true);
  oracle_sub("max-common", "Largest common independent set", cmd_oracle_max_common, false,
             false);
  oracle_sub("pad-bounds", "Closed-form pad bounds against enumeration", cmd_oracle_pad_bounds,
             true, false);

  std::vector<const char*> argv{"matpart"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "matpart: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    const LimitsScope scope(opt.threshold);
    return action(opt, out);
  } catch (const DocumentError& e) {
    err << "matpart: invalid document: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InternalError& e) {
    err << "matpart: internal verification failure: " << e.what() << "\n";
    return kInternal;
  } catch (const ValidationError& e) {
    err << "matpart: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const CapacityError& e) {
    err << "matpart: over capacity: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "matpart: precondition failed: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "matpart: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace matpart::cli
