#ifndef SIGMAF_INDEPENDENCE_HPP_
#define SIGMAF_INDEPENDENCE_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigmaf/core_sets.hpp"

namespace sigmaf {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" with p >= 0, q > 0. Throws InvalidInput.
Rational parse_rational(std::string_view text);
/// "p/q" in lowest terms, or "p" when q == 1.
std::string format_rational(const Rational& r);

/// Exact point masses on a universe: nonnegative, summing to exactly 1.
class ProbabilitySpace {
 public:
  ProbabilitySpace(UniversePtr universe, std::vector<Rational> masses);
  static ProbabilitySpace uniform(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& mass(std::size_t point) const { return masses_.at(point); }

 private:
  UniversePtr universe_;
  std::vector<Rational> masses_;
};

Rational prob(const ProbabilitySpace& space, const SetMask& e);

/// P(e ∩ f) == P(e) P(f), exactly.
bool is_independent(const ProbabilitySpace& space, const SetMask& e, const SetMask& f);

struct UnionIntersectionIdentity {
  Rational lhs;  // P(A ∩ (B ∪ C)) - P(A) P(B ∪ C)
  Rational rhs;  // P(A) P(BC) - P(ABC)
  bool premises = false;  // A indep. B and A indep. C
  bool asserted = false;  // premises hold, so lhs == rhs is claimed
  bool holds() const { return lhs == rhs; }
};

/// Both sides of the union/intersection identity. The equality is only
/// claimed when A is independent of B and of C; the values are returned
/// either way.
UnionIntersectionIdentity union_intersection_identity(const ProbabilitySpace& space, const SetMask& a,
                                                      const SetMask& b, const SetMask& c);

enum class TwoSetCell { kBC, kBcC, kBCc, kBcCc };

std::string to_string(TwoSetCell c);  // "BC", "B^cC", "BC^c", "B^cC^c"

struct CellVerdict {
  TwoSetCell cell;
  bool empty = false;
  bool independent = false;  // vacuously true for empty cells

  bool operator==(const CellVerdict&) const = default;
};

struct CellIndependenceReport {
  bool indep_b = false;
  bool indep_c = false;
  bool indep_union = false;
  bool premises = false;  // all three above
  std::array<CellVerdict, 4> cells{};
  bool all_cells_independent() const;

  bool operator==(const CellIndependenceReport&) const = default;
};

/// Evaluates the premises A⫫B, A⫫C, A⫫(B∪C) and A's independence from each
/// of the four cells BC, B^cC, BC^c, B^cC^c.
CellIndependenceReport cell_independence(const ProbabilitySpace& space, const SetMask& a,
                                         const SetMask& b, const SetMask& c);

struct IndependenceVerdict {
  bool of_cells = false;        // A independent of every nonempty cell of P_{B,C}
  bool pairwise = false;        // A⫫B, A⫫C and A⫫(B∪C)
  bool of_field = false;        // A independent of every member of sigma(B,C)
  Rational identity_lhs;
  Rational identity_rhs;
  bool consistent() const { return of_cells == pairwise && pairwise == of_field; }

  bool operator==(const IndependenceVerdict&) const = default;
};

/// Three independent routes to "A is independent of sigma(B, C)". The field
/// is built from the partition of {B, C}.
IndependenceVerdict independence_verdict(const ProbabilitySpace& space, const SetMask& a,
                                         const SetMask& b, const SetMask& c);

}  // namespace sigmaf

#endif  // SIGMAF_INDEPENDENCE_HPP_
