#include "sigmaf/cli/report_json.hpp"

#include "sigmaf/errors.hpp"

namespace sigmaf::cli {

namespace {

Json families_to_json(const std::vector<IndexSet>& v) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(to_json(f));
  return out;
}

std::vector<IndexSet> families_from_json(const Json& j) {
  std::vector<IndexSet> out;
  for (const auto& f : j) out.push_back(index_set_from_json(f));
  return out;
}

RangeCase case_from_json(const Json& j) {
  auto c = parse_range_case(j.get<std::string>());
  if (!c) throw ParseError("unknown case label '" + j.get<std::string>() + "'");
  return *c;
}

TwoSetCell two_set_cell_from_string(const std::string& s) {
  for (auto c : {TwoSetCell::kBC, TwoSetCell::kBcC, TwoSetCell::kBCc, TwoSetCell::kBcCc}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown cell '" + s + "'");
}

}  // namespace

Json to_json(const IndexSet& s) { return s.one_based(); }

IndexSet index_set_from_json(const Json& j) {
  std::uint32_t bits = 0;
  for (const auto& v : j) {
    const auto i = v.get<unsigned>();
    if (i == 0 || i > 32) throw ParseError("index set member out of range");
    bits |= 1U << (i - 1);
  }
  return IndexSet(bits);
}

Json to_json(const SetMask& m, const Universe& u) {
  Json out = Json::array();
  for (auto i : m.indices()) out.push_back(u.label(i));
  return out;
}

SetMask set_from_json(const Json& j, const Universe& u) {
  std::vector<std::string> labels;
  for (const auto& v : j) labels.push_back(v.get<std::string>());
  return u.mask_of(labels);
}

// ---------------------------------------------------------------- partition / fields

Json to_json(const Partition& p) {
  Json out = Json::object();
  out["size"] = p.size();
  out["arity"] = p.arity();
  out["names"] = p.names();
  Json cells = Json::array();
  for (const auto& c : p.cells()) {
    Json cell = Json::object();
    if (p.has_signatures()) {
      cell["signature"] = p.signature_string(c);
      cell["order"] = p.order(c);
    }
    cell["members"] = to_json(c.mask, *p.universe());
    cells.push_back(std::move(cell));
  }
  out["cells"] = std::move(cells);
  if (p.has_signatures()) {
    Json sizes = Json::array();
    for (const auto& s : strata(p)) sizes.push_back(s.cells.size());
    out["strata_sizes"] = std::move(sizes);
    Json unions = Json::array();
    for (const auto& r : strata_union_partition(p)) {
      unions.push_back(Json{{"order", r.order}, {"members", to_json(r.mask, *p.universe())}});
    }
    out["strata_unions"] = std::move(unions);
  }
  return out;
}

Partition partition_from_json(const Json& j, const UniversePtr& universe) {
  const auto arity = j.at("arity").get<std::size_t>();
  std::vector<Cell> cells;
  std::uint32_t fallback = 0;
  for (const auto& c : j.at("cells")) {
    Cell cell;
    cell.mask = set_from_json(c.at("members"), *universe);
    if (arity > 0) {
      const auto bits = c.at("signature").get<std::string>();
      cell.signature = static_cast<std::uint32_t>(std::stoul(bits, nullptr, 2));
    } else {
      cell.signature = fallback++;
    }
    cells.push_back(std::move(cell));
  }
  return Partition(universe, arity, j.at("names").get<std::vector<std::string>>(), std::move(cells));
}

Json to_json(const SigmaField& f, bool list_members) {
  Json out = Json::object();
  out["size"] = f.size();
  if (auto m = f.log2_size()) out["log2_size"] = *m;
  else out["log2_size"] = nullptr;
  if (list_members) {
    Json members = Json::array();
    for (const auto& m : f.members()) members.push_back(to_json(m, *f.universe()));
    out["members"] = std::move(members);
  }
  return out;
}

Json to_json(const SigmaDistinctReport& r) {
  Json violators = Json::array();
  for (const auto& v : r.violators) {
    violators.push_back(Json{{"index", v.index + 1}, {"witness_field_size", v.witness ? v.witness->size() : 0}});
  }
  return Json{{"distinct", r.distinct}, {"violators", std::move(violators)}};
}

Json to_json(const AtomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json::array({v.container + 1, v.contained + 1}));
  return Json{{"all_atoms", r.all_atoms}, {"violations", std::move(violations)}};
}

Json to_json(const GenerationReport& r) {
  return Json{{"equal", r.equal},
              {"closure_size", r.closure_size},
              {"partition_size", r.partition_size},
              {"from_partition_size", r.from_partition_size},
              {"hypotheses_hold", r.hypotheses_hold},
              {"sigma_distinct", to_json(r.distinct)},
              {"atoms", to_json(r.atoms)}};
}

Json to_json(const ExtensionReport& r, bool list_members) {
  return Json{{"d_in_field", r.d_in_field},
              {"extended_partition_size", r.extended_partition_size},
              {"predicted_size", r.predicted_size},
              {"square_law", r.square_law},
              {"extended", to_json(r.extended, list_members)}};
}

// ---------------------------------------------------------------- cardinality

Json to_json(const CardinalityReport& r) {
  Json s1_members = Json::array();
  for (auto i : r.s1_members) s1_members.push_back(i + 1);
  Json out = Json::object();
  out["n"] = r.n;
  out["s1"] = r.s1;
  out["s1_members"] = std::move(s1_members);
  out["empty_families"] = families_to_json(r.families.minimal);
  out["extra_families"] = families_to_json(r.families.extra);
  out["staged_empty_families"] = families_to_json(r.staged_families.minimal);
  out["staged_extra_families"] = families_to_json(r.staged_families.extra);
  out["implied_union_size"] = r.implied_union_size;
  out["covers_universe"] = r.covers_universe;
  out["q0_correction"] = r.q0_correction;
  out["predicted_partition_size"] = r.predicted_partition_size;
  out["case_label"] = to_string(r.case_label);
  if (r.oracle_size) out["oracle_size"] = *r.oracle_size;
  else out["oracle_size"] = nullptr;
  out["formula_applicable"] = r.formula_applicable;
  out["unexplained_empty_cells"] = families_to_json(r.unexplained_empty_cells);
  return out;
}

CardinalityReport cardinality_from_json(const Json& j) {
  CardinalityReport r;
  r.n = j.at("n").get<std::size_t>();
  r.s1 = j.at("s1").get<std::size_t>();
  for (const auto& i : j.at("s1_members")) r.s1_members.push_back(i.get<std::size_t>() - 1);
  r.families.minimal = families_from_json(j.at("empty_families"));
  r.families.extra = families_from_json(j.at("extra_families"));
  r.staged_families.minimal = families_from_json(j.at("staged_empty_families"));
  r.staged_families.extra = families_from_json(j.at("staged_extra_families"));
  r.implied_union_size = j.at("implied_union_size").get<std::uint64_t>();
  r.covers_universe = j.at("covers_universe").get<bool>();
  r.q0_correction = j.at("q0_correction").get<std::uint64_t>();
  r.predicted_partition_size = j.at("predicted_partition_size").get<std::uint64_t>();
  r.case_label = case_from_json(j.at("case_label"));
  if (!j.at("oracle_size").is_null()) r.oracle_size = j.at("oracle_size").get<std::uint64_t>();
  r.formula_applicable = j.at("formula_applicable").get<bool>();
  r.unexplained_empty_cells = families_from_json(j.at("unexplained_empty_cells"));
  return r;
}

Json to_json(const CaseClassification& c) {
  return Json{{"case_label", to_string(c.label)},
              {"range_min", c.range.min},
              {"range_max", c.range.max},
              {"partition_size", c.partition_size},
              {"in_range", c.in_range},
              {"hypotheses_hold", c.hypotheses_hold}};
}

CaseClassification classification_from_json(const Json& j) {
  const RangeCase label = case_from_json(j.at("case_label"));
  CaseClassification c{label, CaseRange{label, j.at("range_min").get<std::uint64_t>(), j.at("range_max").get<std::uint64_t>()}};
  c.partition_size = j.at("partition_size").get<std::size_t>();
  c.in_range = j.at("in_range").get<bool>();
  c.hypotheses_hold = j.at("hypotheses_hold").get<bool>();
  return c;
}

// ---------------------------------------------------------------- enumeration

Json to_json(const EnumerationHistogram& h) {
  Json cases = Json::object();
  for (const auto& [label, sizes] : h.counts) {
    Json per_size = Json::object();
    for (const auto& [size, count] : sizes) per_size[std::to_string(size)] = count;
    cases[to_string(label)] = Json{{"achieved", h.achieved(label)}, {"counts", std::move(per_size)}};
  }
  return Json{{"n", h.n},
              {"universe_size", h.universe_size},
              {"sampled", h.sampled},
              {"candidates_total", h.candidates_total},
              {"candidates_examined", h.candidates_examined},
              {"qualifying", h.qualifying},
              {"achieved_all", h.achieved_all()},
              {"cases", std::move(cases)}};
}

EnumerationHistogram histogram_from_json(const Json& j) {
  EnumerationHistogram h;
  h.n = j.at("n").get<std::size_t>();
  h.universe_size = j.at("universe_size").get<std::size_t>();
  h.sampled = j.at("sampled").get<bool>();
  h.candidates_total = j.at("candidates_total").get<std::uint64_t>();
  h.candidates_examined = j.at("candidates_examined").get<std::uint64_t>();
  h.qualifying = j.at("qualifying").get<std::uint64_t>();
  for (const auto& [label, body] : j.at("cases").items()) {
    auto c = parse_range_case(label);
    if (!c) throw ParseError("unknown case label '" + label + "'");
    auto& sizes = h.counts[*c];
    for (const auto& [size, count] : body.at("counts").items()) {
      sizes[std::stoull(size)] = count.get<std::uint64_t>();
    }
  }
  return h;
}

// ---------------------------------------------------------------- independence

Json to_json(const IndependenceVerdict& v) {
  return Json{{"statement_i", v.of_cells},
              {"statement_ii", v.pairwise},
              {"statement_iii", v.of_field},
              {"identity_lhs", format_rational(v.identity_lhs)},
              {"identity_rhs", format_rational(v.identity_rhs)},
              {"consistent", v.consistent()}};
}

namespace {

Rational signed_rational(const std::string& s) {
  if (!s.empty() && s[0] == '-') return -parse_rational(s.substr(1));
  return parse_rational(s);
}

}  // namespace

IndependenceVerdict verdict_from_json(const Json& j) {
  IndependenceVerdict v;
  v.of_cells = j.at("statement_i").get<bool>();
  v.pairwise = j.at("statement_ii").get<bool>();
  v.of_field = j.at("statement_iii").get<bool>();
  v.identity_lhs = signed_rational(j.at("identity_lhs").get<std::string>());
  v.identity_rhs = signed_rational(j.at("identity_rhs").get<std::string>());
  return v;
}

Json to_json(const CellIndependenceReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    cells.push_back(Json{{"cell", to_string(c.cell)}, {"empty", c.empty}, {"independent", c.independent}});
  }
  return Json{{"indep_b", r.indep_b},
              {"indep_c", r.indep_c},
              {"indep_union", r.indep_union},
              {"premises", r.premises},
              {"cell_verdicts", std::move(cells)}};
}

CellIndependenceReport cell_report_from_json(const Json& j) {
  CellIndependenceReport r;
  r.indep_b = j.at("indep_b").get<bool>();
  r.indep_c = j.at("indep_c").get<bool>();
  r.indep_union = j.at("indep_union").get<bool>();
  r.premises = j.at("premises").get<bool>();
  const auto& cells = j.at("cell_verdicts");
  if (cells.size() != 4) throw ParseError("cell_verdicts must list four cells");
  for (std::size_t k = 0; k < 4; ++k) {
    r.cells[k].cell = two_set_cell_from_string(cells[k].at("cell").get<std::string>());
    r.cells[k].empty = cells[k].at("empty").get<bool>();
    r.cells[k].independent = cells[k].at("independent").get<bool>();
  }
  return r;
}

Json to_json(const UnionIntersectionIdentity& id) {
  return Json{{"lhs", format_rational(id.lhs)},
              {"rhs", format_rational(id.rhs)},
              {"premises", id.premises},
              {"asserted", id.asserted},
              {"holds", id.holds()}};
}

}  // namespace sigmaf::cli
