#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "admcm/errors.hpp"
#include "admcm/grid.hpp"
#include "admcm/ideal.hpp"

namespace admcm {

/// Minimal generators of ((prefix) : u), as supports: the inclusion-minimal
/// sets among u_j \ u.
std::vector<VertexSet> colon_step(std::span<const VertexSet> prefix, VertexSet u);

struct ColonStep {
  std::size_t generator = 0;       ///< index into ideal.generators()
  std::vector<VertexSet> colon;    ///< minimal generators of the colon ideal
  bool linear = true;
};

/// First non-linear step: the quotient of `earlier` by `current` has degree
/// >= 2 and no earlier generator yields a linear quotient dividing it.
struct FailureWitness {
  std::size_t position = 0;  ///< 0-based position of `current` in the ordering
  std::size_t current = 0;   ///< generator indices
  std::size_t earlier = 0;
  VertexSet quotient;        ///< support of earlier / gcd(earlier, current)
};

struct LinearQuotientReport {
  std::vector<std::size_t> ordering;
  bool success = false;
  std::vector<ColonStep> steps;
  std::optional<FailureWitness> witness;
};

/// InputError unless `ordering` is a permutation of the generator indices with
/// nondecreasing degrees.
LinearQuotientReport check_linear_quotients(const SquareFreeIdeal& ideal, std::span<const std::size_t> ordering);

// Orders on exponent vectors. Each comparator returns a negative value when
// the first argument comes first, zero for equal vectors, positive otherwise,
// and throws InputError for entries outside 1..d.

/// (a, b) before (m, q) iff a < m, or a == m and b > q.
int compare_g2(int d, const ExponentVector& x, const ExponentVector& y);
/// Compare (first, last) by compare_g2; ties go to the larger middle entry.
int compare_g3(int d, const ExponentVector& x, const ExponentVector& y);
/// d = 3 only: (first, last) ranked (1,3) (1,2) (2,3) (2,2) (1,1) (2,1) (3,3)
/// (3,2) (3,1); ties go to the larger middle entry.
int compare_g3_alt(int d, const ExponentVector& x, const ExponentVector& y);
/// Smaller entry at the first differing position first.
int compare_lex(int d, const ExponentVector& x, const ExponentVector& y);
/// Larger entry at the last differing position first, so that
/// (1,3,2) precedes (3,2,2).
int compare_revlex(int d, const ExponentVector& x, const ExponentVector& y);

using ExponentCompare = std::function<int(const ExponentVector&, const ExponentVector&)>;

/// Generator indices sorted by the comparator applied to exponent vectors.
std::vector<std::size_t> ordering_by(const SquareFreeIdeal& ideal, const GridStructure& grid,
                                     const ExponentCompare& compare);

/// Two size-4 covers (a,b,c,d), (a,s,t,d) whose swaps (a,b,t,d) and (a,s,c,d)
/// are both non-covers.
struct BadPair {
  ExponentVector first;
  ExponentVector second;
  VertexSet first_cover;
  VertexSet second_cover;
};

class ConditionStarError : public Error {
 public:
  explicit ConditionStarError(BadPair pair)
      : Error("condition (*) holds: the generator order for g = 4 is undefined"), pair_(std::move(pair)) {}
  const BadPair& pair() const noexcept { return pair_; }

 private:
  BadPair pair_;
};

/// First bad pair over canonically ordered cover pairs, or std::nullopt.
/// InputError unless the instance is uniform, unmixed, and has g = 4.
std::optional<BadPair> satisfies_condition_star(const AdmissibleInstance& instance);

/// The g = 4 generator order: (first, last) by compare_g2; then larger third
/// entry first; then, for equal first/third/last, (a,b,t,d) precedes (a,s,t,d)
/// when some c > t makes (a,b,c,d) a cover but (a,s,c,d) not; otherwise the
/// larger second entry comes first.
class G4Comparator {
 public:
  explicit G4Comparator(const AdmissibleInstance& instance);
  int operator()(const ExponentVector& x, const ExponentVector& y) const;
  bool is_cover(const ExponentVector& e) const;

 private:
  bool rule3(int a, int b, int s, int t, int last) const;
  int d_ = 0;
  std::vector<char> covers_;  // indexed by code(e)
};

struct G4Order {
  std::vector<std::size_t> ordering;  ///< indices into the dual ideal's generators
  std::vector<ExponentVector> sorted;
  std::size_t audited_pairs = 0;
  std::size_t audited_triples = 0;
};

/// Sorts the dual generators by G4Comparator after auditing it as a strict
/// total order over all pairs and triples. ConditionStarError if a bad pair
/// exists; InvariantError if the audit fails.
G4Order order_g4(const AdmissibleInstance& instance);

/// Searches generator orderings with linear quotients, memoizing dead prefix
/// sets (the colon ideal depends only on the prefix as a set). std::nullopt is
/// a definitive "none"; more than `max_generators` generators is a
/// ResourceError. InputError for mixed degrees.
std::optional<std::vector<std::size_t>> exists_linear_quotients_ordering(const SquareFreeIdeal& ideal,
                                                                        int max_generators = 22);

enum class OrderName { GridG2, GridG3, GridG3Alt, GridG4, Lex, Revlex, Search };

OrderName parse_order_name(std::string_view name);
std::string_view to_string(OrderName name);

}  // namespace admcm
