#include "sigmaf/independence.hpp"

#include <algorithm>
#include <cctype>

#include "sigmaf/errors.hpp"
#include "sigmaf/partition.hpp"
#include "sigmaf/sigma_field.hpp"

namespace sigmaf {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_natural(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidInput("malformed rational '" + std::string(whole) + "': expected p/q with p >= 0, q > 0");
  }
  return cpp_int(std::string(digits));
}

void require_universe(const ProbabilitySpace& space, const SetMask& e) {
  if (e.universe_id() != space.universe()->id()) {
    throw UniverseMismatch("event of universe #" + std::to_string(e.universe_id()) + " measured on " +
                           space.universe()->describe());
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const cpp_int p = parse_natural(text.substr(0, slash), text);
  cpp_int q = 1;
  if (slash != std::string_view::npos) q = parse_natural(text.substr(slash + 1), text);
  if (q == 0) throw InvalidInput("malformed rational '" + std::string(text) + "': zero denominator");
  return Rational(p, q);
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ProbabilitySpace::ProbabilitySpace(UniversePtr universe, std::vector<Rational> masses)
    : universe_(std::move(universe)), masses_(std::move(masses)) {
  if (!universe_) throw InvalidInput("probability space needs a universe");
  if (masses_.size() != universe_->size()) {
    throw InvalidInput("probability space has " + std::to_string(masses_.size()) + " masses for " +
                       std::to_string(universe_->size()) + " points");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (masses_[i] < 0) throw InvalidInput("negative mass at point '" + universe_->label(i) + "'");
    total += masses_[i];
  }
  if (total != 1) throw InvalidInput("masses sum to " + format_rational(total) + ", not 1");
}

ProbabilitySpace ProbabilitySpace::uniform(UniversePtr universe) {
  const auto n = universe->size();
  std::vector<Rational> masses(n, Rational(1, static_cast<long long>(n)));
  return ProbabilitySpace(std::move(universe), std::move(masses));
}

Rational prob(const ProbabilitySpace& space, const SetMask& e) {
  require_universe(space, e);
  Rational p = 0;
  for (auto i : e.indices()) p += space.mass(i);
  return p;
}

bool is_independent(const ProbabilitySpace& space, const SetMask& e, const SetMask& f) {
  return prob(space, e & f) == prob(space, e) * prob(space, f);
}

UnionIntersectionIdentity union_intersection_identity(const ProbabilitySpace& space, const SetMask& a,
                                                      const SetMask& b, const SetMask& c) {
  UnionIntersectionIdentity id;
  const Rational pa = prob(space, a);
  id.lhs = prob(space, a & (b | c)) - pa * prob(space, b | c);
  id.rhs = pa * prob(space, b & c) - prob(space, a & b & c);
  id.premises = is_independent(space, a, b) && is_independent(space, a, c);
  id.asserted = id.premises;
  return id;
}

std::string to_string(TwoSetCell c) {
  switch (c) {
    case TwoSetCell::kBC: return "BC";
    case TwoSetCell::kBcC: return "B^cC";
    case TwoSetCell::kBCc: return "BC^c";
    case TwoSetCell::kBcCc: return "B^cC^c";
  }
  return "?";
}

bool CellIndependenceReport::all_cells_independent() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellVerdict& v) { return v.independent; });
}

CellIndependenceReport cell_independence(const ProbabilitySpace& space, const SetMask& a, const SetMask& b,
                                         const SetMask& c) {
  CellIndependenceReport r;
  r.indep_b = is_independent(space, a, b);
  r.indep_c = is_independent(space, a, c);
  r.indep_union = is_independent(space, a, b | c);
  r.premises = r.indep_b && r.indep_c && r.indep_union;
  const SetMask cells[4] = {b & c, c - b, b - c, (b | c).complement()};
  const TwoSetCell labels[4] = {TwoSetCell::kBC, TwoSetCell::kBcC, TwoSetCell::kBCc, TwoSetCell::kBcCc};
  for (std::size_t k = 0; k < 4; ++k) {
    r.cells[k].cell = labels[k];
    r.cells[k].empty = cells[k].none();
    r.cells[k].independent = r.cells[k].empty || is_independent(space, a, cells[k]);
  }
  return r;
}

IndependenceVerdict independence_verdict(const ProbabilitySpace& space, const SetMask& a, const SetMask& b,
                                         const SetMask& c) {
  IndependenceVerdict v;

  const SetMask bc[2] = {b, c};
  const Partition cells = partition_of(space.universe(), bc);
  v.of_cells = std::all_of(cells.cells().begin(), cells.cells().end(),
                           [&](const Cell& cell) { return is_independent(space, a, cell.mask); });

  v.pairwise = is_independent(space, a, b) && is_independent(space, a, c) && is_independent(space, a, b | c);

  const SigmaField field = sigma_from_partition(cells);
  v.of_field = std::all_of(field.members().begin(), field.members().end(),
                           [&](const SetMask& e) { return is_independent(space, a, e); });

  const auto identity = union_intersection_identity(space, a, b, c);
  v.identity_lhs = identity.lhs;
  v.identity_rhs = identity.rhs;
  return v;
}

}  // namespace sigmaf
