#include "sigmaf/cli/commands.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "sigmaf/cardinality.hpp"
#include "sigmaf/cli/document.hpp"
#include "sigmaf/cli/report_json.hpp"
#include "sigmaf/enumerate.hpp"
#include "sigmaf/errors.hpp"
#include "sigmaf/independence.hpp"
#include "sigmaf/kernels.hpp"
#include "sigmaf/partition.hpp"
#include "sigmaf/sigma_field.hpp"

namespace sigmaf::cli {

namespace {

// Listings above this many members need --force.
constexpr std::size_t kListingLimit = 256;
// Exhaustive enumeration refuses beyond this many candidate classes.
constexpr std::uint64_t kExhaustiveCandidateLimit = 200'000'000;

class CrossCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "human";
  bool verify = false;
  std::uint64_t seed = 1;
  std::string input;
  std::vector<std::string> sets;

  bool machine() const { return format == "machine"; }
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  const Common& common;
};

Json envelope(const char* command, const Common& c) {
  Json j = Json::object();
  j["command"] = command;
  if (!c.input.empty()) j["input"] = c.input;
  return j;
}

InputDocument load(const Context& ctx) {
  InputDocument doc = load_document(ctx.common.input);
  if (doc.universe->exceeds_desk_scale()) {
    ctx.err << "warning: " << doc.universe->describe()
            << " is above 64 points; word kernels are bypassed and runs may be slow\n";
  }
  return doc;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string families_text(const std::vector<IndexSet>& v) {
  if (v.empty()) return "none";
  std::string s;
  for (const auto& f : v) s += (s.empty() ? "" : " ") + f.to_string();
  return s;
}

std::string values_text(const std::set<std::uint64_t>& v) {
  std::string s = "{";
  bool first = true;
  for (auto x : v) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + "}";
}

// ---------------------------------------------------------------- partition

int cmd_partition(const Context& ctx) {
  const InputDocument doc = load(ctx);
  const GeneratingClass cls = generating_class(doc, ctx.common.sets);
  const Partition p = induced_partition(cls);

  if (ctx.common.verify) {
    const auto masks = cls.masks();
    const auto ref = kernels::cells_reference(masks, doc.universe->full_set());
    bool same = ref.size() == p.size();
    for (std::size_t i = 0; same && i < ref.size(); ++i) {
      same = ref[i].signature == p.cells()[i].signature && ref[i].mask == p.cells()[i].mask;
    }
    if (!same || !is_disjoint_cover(doc.universe, p.masks())) {
      throw CrossCheckFailed("partition differs from the serial reference");
    }
  }

  const auto st = strata(p);
  if (ctx.common.machine()) {
    Json j = envelope("partition", ctx.common);
    j["result"] = to_json(p);
    if (ctx.common.verify) j["verified"] = true;
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }

  ctx.out << doc.universe->describe() << "\n";
  ctx.out << "class: " << join(p.names(), ", ") << "\n";
  for (const auto& c : p.cells()) {
    ctx.out << "  " << p.signature_string(c) << "  " << p.signature_expression(c) << "  "
            << c.mask.to_string(*doc.universe) << "\n";
  }
  ctx.out << "|P| = " << p.size() << "\n";
  ctx.out << "strata:";
  for (const auto& s : st) ctx.out << " Q" << s.order << "=" << s.cells.size();
  ctx.out << "\n";
  if (ctx.common.verify) ctx.out << "verify: matches serial reference, disjoint cover\n";
  return kExitOk;
}

// ---------------------------------------------------------------- sigma

struct SigmaFlags {
  bool list = false;
  bool force = false;
  std::string extend;
};

int cmd_sigma(const Context& ctx, const SigmaFlags& flags) {
  const InputDocument doc = load(ctx);

  std::vector<std::string> names = ctx.common.sets;
  std::optional<SetMask> d;
  if (!flags.extend.empty()) {
    const NamedSet* ds = doc.find(flags.extend);
    if (!ds) throw ParseError("no set named '" + flags.extend + "' (available: " + join(doc.set_names(), ", ") + ")");
    d = ds->mask;
    if (names.empty()) {
      for (const auto& n : doc.set_names()) {
        if (n != flags.extend) names.push_back(n);
      }
    }
  }
  const GeneratingClass cls = generating_class(doc, names);
  const Partition p = induced_partition(cls);
  if (p.size() > kMaxPartitionBlocksForField) {
    throw GuardExceeded("sigma field would have 2^" + std::to_string(p.size()) + " members; the limit is 2^" +
                            std::to_string(kMaxPartitionBlocksForField),
                        p.size());
  }
  const SigmaField field = sigma_from_partition(p);
  const bool list = flags.list && (field.size() <= kListingLimit || flags.force);
  const bool suppressed = flags.list && !list;

  std::optional<GenerationReport> gen;
  std::optional<ClosureAudit> audit;
  if (ctx.common.verify) {
    gen = verify_generation_by_partition(cls);
    audit = audit_closure(field, 1024, 200000, ctx.common.seed);
    if (!gen->equal || !audit->ok()) throw CrossCheckFailed("closure and partition routes disagree");
  }
  std::optional<ExtensionReport> ext;
  if (d) ext = extend_with(field, *d);

  if (ctx.common.machine()) {
    Json j = envelope("sigma", ctx.common);
    Json r = Json::object();
    r["partition_size"] = p.size();
    r["field"] = to_json(field, list);
    r["listing_suppressed"] = suppressed;
    if (gen) {
      r["verification"] = to_json(*gen);
      r["closure_audit"] = Json{{"ok", audit->ok()}, {"sampled", audit->sampled}, {"pairs_checked", audit->pairs_checked}};
    }
    if (ext) {
      r["extension"] = to_json(*ext, list);
      r["extension"]["with"] = flags.extend;
    }
    j["result"] = std::move(r);
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }

  ctx.out << "class: " << join(p.names(), ", ") << "\n";
  ctx.out << "|sigma| = " << field.size() << " = 2^" << p.size() << "\n";
  if (list) {
    for (std::size_t i = 0; i < field.size(); ++i) {
      ctx.out << "  " << (i + 1) << ": " << field.members()[i].to_string(*doc.universe) << "\n";
    }
  } else if (suppressed) {
    ctx.out << "listing suppressed above " << kListingLimit << " members (pass --force)\n";
  }
  if (gen) {
    ctx.out << "verify: equal, " << gen->closure_size << " == 2^" << gen->partition_size << "\n";
    ctx.out << "closure audit: ok (" << audit->pairs_checked << (audit->sampled ? " sampled" : "")
            << " union pairs)\n";
    if (!gen->hypotheses_hold) {
      ctx.out << "note: class is not sigma-distinct with all members atoms\n";
    }
  }
  if (ext) {
    ctx.out << "extend with " << flags.extend << ": ";
    if (ext->d_in_field) {
      ctx.out << flags.extend << " already in the field, size stays " << field.size() << "\n";
    } else {
      ctx.out << "|sigma| = " << ext->extended.size() << " = 2^" << ext->extended_partition_size;
      if (ext->square_law) ctx.out << " = " << field.size() << "^2";
      ctx.out << "\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- cardinality

int cmd_cardinality(const Context& ctx, const std::string& method) {
  const InputDocument doc = load(ctx);
  const GeneratingClass cls = generating_class(doc, ctx.common.sets);
  const CardinalityReport r = predict_cardinality(cls);
  std::optional<CaseClassification> cc;
  if (r.n >= 3) cc = classify_case(cls);

  if (ctx.common.verify) {
    const auto& L = r.families.minimal;
    if (L.size() <= 24 && implied_union_size_inclusion_exclusion(r.n, L) != r.implied_union_size) {
      throw CrossCheckFailed("implied-union size differs between enumeration and inclusion-exclusion");
    }
    const auto staged = implied_union_size(r.n, [&] {
      auto all = r.staged_families.minimal;
      all.insert(all.end(), r.staged_families.extra.begin(), r.staged_families.extra.end());
      return all;
    }());
    if (staged != r.implied_union_size) throw CrossCheckFailed("staged and canonical families imply different cells");
  }

  if (ctx.common.machine()) {
    Json j = envelope("cardinality", ctx.common);
    j["method"] = method;
    j["result"] = to_json(r);
    if (cc) j["classification"] = to_json(*cc);
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }

  const bool formula = method != "oracle";
  const bool oracle = method != "formula";
  std::vector<std::string> parts;
  if (formula) {
    parts.push_back("s1=" + std::to_string(r.s1));
    parts.push_back("|∪S|=" + std::to_string(r.implied_union_size));
    parts.push_back("predict " + std::to_string(r.predicted_partition_size));
  }
  if (oracle && r.oracle_size) parts.push_back("oracle " + std::to_string(*r.oracle_size));
  if (formula && oracle) parts.push_back(r.formula_applicable ? "applicable" : "applicable=false, predict≠oracle");
  ctx.out << join(parts, ", ") << "\n";

  if (formula) {
    std::vector<std::string> s1names;
    for (auto i : r.s1_members) s1names.push_back(cls.members()[i].name);
    ctx.out << "s1 members: " << (s1names.empty() ? "none" : join(s1names, " ")) << "\n";
    ctx.out << "minimal empty families L: " << families_text(r.families.minimal) << "\n";
    ctx.out << "extra families M: " << families_text(r.families.extra) << "\n";
    ctx.out << "staged view: L = " << families_text(r.staged_families.minimal)
            << ", M = " << families_text(r.staged_families.extra) << "\n";
    ctx.out << "Q0 cell: " << (r.covers_universe ? "empty (union covers the universe)" : "nonempty") << "\n";
  }
  if (!r.formula_applicable && oracle) {
    ctx.out << "unexplained empty cells: " << families_text(r.unexplained_empty_cells) << "\n";
  }
  if (cc) {
    ctx.out << "case " << to_string(cc->label) << ": range " << cc->range.min << ".." << cc->range.max << ", |P|="
            << cc->partition_size << (cc->in_range ? " in range" : " outside range");
    if (!cc->hypotheses_hold) ctx.out << " (class is not sigma-distinct with all atoms; range not guaranteed)";
    ctx.out << "\n";
  } else {
    ctx.out << "case " << to_string(r.case_label) << " (ranges apply from three sets on)\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateFlags {
  std::size_t n = 3;
  std::size_t universe_size = 0;
  std::uint64_t budget = 0;
  bool parallel = false;
};

int cmd_enumerate(const Context& ctx, const EnumerateFlags& flags) {
  const std::uint64_t total = family_candidate_count(flags.n, flags.universe_size);
  if (flags.budget == 0 && total > kExhaustiveCandidateLimit) {
    throw GuardExceeded("exhaustive enumeration would examine " + std::to_string(total) +
                            " candidate classes; pass --budget to sample",
                        total);
  }
  EnumerationOptions opts;
  opts.sample_budget = flags.budget;
  opts.seed = ctx.common.seed;
  const EnumerationHistogram h = flags.parallel ? enumerate_families(flags.n, flags.universe_size, opts)
                                                : enumerate_families_serial(flags.n, flags.universe_size, opts);
  if (h.sampled) {
    ctx.err << "warning: sampled " << h.candidates_examined << " of " << total
            << " candidate classes; counts are not exhaustive\n";
  }
  if (ctx.common.verify && flags.parallel) {
    if (enumerate_families_serial(flags.n, flags.universe_size, opts) != h) {
      throw CrossCheckFailed("parallel and serial enumeration disagree");
    }
  }

  if (ctx.common.machine()) {
    Json j = envelope("enumerate", ctx.common);
    j["result"] = to_json(h);
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }

  ctx.out << "n=" << h.n << ", universe size " << h.universe_size << ": " << (h.sampled ? "sampled" : "exhaustive")
          << ", " << h.candidates_examined << " candidate classes examined, " << h.qualifying << " qualifying\n";
  if (h.empty()) {
    ctx.out << "no qualifying class\n";
    return kExitOk;
  }
  for (const auto& [label, sizes] : h.counts) {
    const CaseRange range = case_range(label, h.n);
    ctx.out << "case " << to_string(label) << " (range " << range.min << ".." << range.max << "):";
    for (const auto& [size, count] : sizes) ctx.out << " " << size << ":" << count;
    ctx.out << "\n";
  }
  ctx.out << "achieved overall: " << values_text(h.achieved_all()) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- independence

int cmd_independence(const Context& ctx, const std::vector<std::string>& positional) {
  const InputDocument doc = load(ctx);
  const std::vector<std::string> events = positional.empty() ? doc.events : positional;
  if (events.size() != 3) {
    throw ParseError("independence needs exactly three events A B C (got " + std::to_string(events.size()) + ")");
  }
  std::array<SetMask, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    const NamedSet* s = doc.find(events[i]);
    if (!s) throw ParseError("no set named '" + events[i] + "' (available: " + join(doc.set_names(), ", ") + ")");
    m[i] = s->mask;
  }
  const ProbabilitySpace space = probability_space(doc);
  const IndependenceVerdict v = independence_verdict(space, m[0], m[1], m[2]);
  const CellIndependenceReport cells = cell_independence(space, m[0], m[1], m[2]);
  const UnionIntersectionIdentity id = union_intersection_identity(space, m[0], m[1], m[2]);

  if (!v.consistent()) throw CrossCheckFailed("the three independence routes disagree");
  if (id.asserted && !id.holds()) throw CrossCheckFailed("identity fails although its premises hold");

  if (ctx.common.machine()) {
    Json j = envelope("independence", ctx.common);
    j["events"] = events;
    j["result"] = Json{{"verdict", to_json(v)}, {"cells", to_json(cells)}, {"identity", to_json(id)}};
    ctx.out << j.dump(2) << "\n";
    return kExitOk;
  }

  const auto& u = *doc.universe;
  auto yn = [](bool b) { return b ? "true" : "false"; };
  ctx.out << events[0] << " = " << m[0].to_string(u) << ", " << events[1] << " = " << m[1].to_string(u) << ", "
          << events[2] << " = " << m[2].to_string(u) << "\n";
  ctx.out << "independent of every nonempty cell:   " << yn(v.of_cells) << "\n";
  ctx.out << "independent of B, C and B∪C:          " << yn(v.pairwise) << "\n";
  ctx.out << "independent of every member of sigma: " << yn(v.of_field) << "\n";
  ctx.out << "identity: " << format_rational(id.lhs) << " = " << format_rational(id.rhs)
          << (id.holds() ? "" : " fails") << (id.premises ? " (premises hold)" : " (premises fail)") << "\n";
  ctx.out << "cells:\n";
  for (const auto& c : cells.cells) {
    ctx.out << "  " << to_string(c.cell) << ": " << (c.empty ? "empty" : (c.independent ? "independent" : "dependent"))
            << "\n";
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool needs_input) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  sub->add_flag("--verify", c.verify, "Cross-check the result by a second route");
  sub->add_option("--seed", c.seed, "Seed for sampling");
  if (needs_input) {
    sub->add_option("input", c.input, "Input document")->required();
    sub->add_option("--sets", c.sets, "Members of the generating class, in order")->delimiter(',');
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite sigma-fields: partitions, generated fields, cardinality, independence", "sigmaf"};
  app.require_subcommand(1, 1);

  Common common;
  SigmaFlags sigma_flags;
  std::string method = "both";
  EnumerateFlags enum_flags;
  std::vector<std::string> events;

  auto* partition = app.add_subcommand("partition", "Cells of the induced partition");
  add_common(partition, common, true);

  auto* sigma = app.add_subcommand("sigma", "Generated sigma-field");
  add_common(sigma, common, true);
  sigma->add_flag("--list", sigma_flags.list, "List the members in canonical order");
  sigma->add_flag("--force", sigma_flags.force, "List even above 256 members");
  sigma->add_option("--extend", sigma_flags.extend, "Extend the field by this set");

  auto* cardinality = app.add_subcommand("cardinality", "Predicted and actual partition size");
  add_common(cardinality, common, true);
  cardinality->add_option("--method", method, "formula, oracle or both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));

  auto* enumerate = app.add_subcommand("enumerate", "Histogram of partition sizes over all classes");
  add_common(enumerate, common, false);
  enumerate->add_option("--n", enum_flags.n, "Sets per class")->check(CLI::Range(3, 24));
  enumerate->add_option("--universe-size", enum_flags.universe_size, "Points in the universe")
      ->required()
      ->check(CLI::Range(1, 62));
  enumerate->add_option("--budget", enum_flags.budget, "Sample this many classes when there are more");
  enumerate->add_flag("--parallel", enum_flags.parallel, "Use the OpenMP enumerator");

  auto* independence = app.add_subcommand("independence", "Independence of A from sigma(B, C)");
  add_common(independence, common, true);
  independence->add_option("events", events, "Set names A B C (default: the document's events)");

  std::vector<const char*> argv{"sigmaf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  const Context ctx{out, err, common};
  try {
    if (partition->parsed()) return cmd_partition(ctx);
    if (sigma->parsed()) return cmd_sigma(ctx, sigma_flags);
    if (cardinality->parsed()) return cmd_cardinality(ctx, method);
    if (enumerate->parsed()) return cmd_enumerate(ctx, enum_flags);
    if (independence->parsed()) return cmd_independence(ctx, events);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const GuardExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const CrossCheckFailed& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace sigmaf::cli
