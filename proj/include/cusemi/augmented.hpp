#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusemi/audit.hpp"
#include "cusemi/cc.hpp"
#include "cusemi/cumap.hpp"

namespace cusemi {

/// A formal-difference construction together with a rank morphism onto the
/// signed line. The rank must act on the difference-vector view, so the
/// construction has to be in closed form.
struct RankedCc {
  CcModel cc;
  CuMap rank;
  AuditReport rank_audit;
};

/// Audits the rank map and bundles it with the construction. Throws when the
/// construction has no closed form, when the map is not view -> signed line,
/// or when the morphism audit reports a failure.
RankedCc build_ranked(CcModel cc, CuMap rank);

/// The rank that reads off the basepoint coordinate of the difference vector.
/// Requires basepoint metadata on the base carrier.
CuMap basepoint_rank(const CcModel& cc);

struct FindResult {
  Verdict3 verdict;
  FormalDifference z;
};

/// Kernel of the rank map: the classes of rank zero, with the ambient order,
/// addition and suprema restricted to them. When the rank is a single
/// coordinate, the kernel also materializes as a pinned signed vector model.
class AugmentedModel {
 public:
  explicit AugmentedModel(RankedCc ranked);

  const RankedCc& ranked() const { return ranked_; }
  const CcModel& cc() const { return ranked_.cc; }
  const CuMap& rank() const { return ranked_.rank; }

  /// Pinned vector model of the kernel; null when the rank is not a
  /// coordinate projection.
  const VectorModelPtr& kernel_view() const { return kview_; }

  ExtScalar rank_of(const FormalDifference& d) const;
  bool member(const FormalDifference& d) const { return rank_of(d) == ExtScalar(0); }

  /// Canonical member class of a difference vector; the vector must have rank
  /// zero and split into window-valid positive and negative parts.
  FormalDifference class_from_vector(const ScalarVec& v) const;
  /// The member's difference vector as a kernel-view element.
  std::optional<Element> kernel_elem(const FormalDifference& d) const;

  /// All member classes whose difference vectors lie in the window.
  std::vector<FormalDifference> window_members(int bound) const;

  /// Class of a rank-zero base element. Throws when rank(x) is nonzero.
  FormalDifference q(const Element& x) const;
  /// Every window-positive member class must lift to a rank-zero base element.
  Verdict3 q_surjective(int bound) const;

  /// Order and structure, restricted to members (checked).
  Verdict3 below(const FormalDifference& a, const FormalDifference& b) const;
  Verdict3 way_below(const FormalDifference& a, const FormalDifference& b) const;
  FormalDifference add(const FormalDifference& a, const FormalDifference& b) const;
  /// Ambient supremum of a member chain; the verdict turns false if the
  /// supremum were to leave the kernel, which a sup-preserving rank forbids.
  CcSupResult sup(const CcChain& c) const;

  /// Greatest member (all free coordinates infinite), when the kernel view
  /// exists. Addition must absorb into it; reported, not assumed.
  std::optional<FormalDifference> omega() const;

  /// z >= 0 with x + z >= 0, built from the negative part of the class.
  FindResult find_positive_absorber(const FormalDifference& x) const;

  /// z with x' + z <= 0 <= x + z for x' way below x. Bounds the predecessor by
  /// N copies of the unit class and complements pointwise, so when a pair
  /// (y', y) with x + y <= 0 and y' way below y is supplied, y' <= z holds as
  /// well. Throws when the preconditions fail.
  FindResult find_complement(
      const FormalDifference& xp, const FormalDifference& x,
      const std::optional<std::pair<FormalDifference, FormalDifference>>& moreover =
          std::nullopt) const;

 private:
  void require_member(const FormalDifference& d, const char* who) const;

  RankedCc ranked_;
  VectorModelPtr kview_;
  std::optional<int> rank_coord_;
};

/// Operation name from the construction recipe.
AugmentedModel kernel_model(RankedCc ranked);

/// x + z way below y + z forces x <= y; sweeps member triples.
AuditReport check_weak_cancellation(const AugmentedModel& m, const Window& w);
/// The same sweep on a plain carrier (pre-construction models included).
AuditReport check_weak_cancellation(const ModelPtr& m, const Window& w);

/// User-supplied ordered-group data for the compact classes: a free rank and
/// the positivity cone on coordinate vectors.
struct K0Data {
  int rank = 0;
  std::function<bool(const std::vector<long long>&)> positive;
  std::string name;
};

struct CompactGroupReport {
  AuditReport audit;
  int group_rank = 0;
  std::vector<FormalDifference> compact_classes;  // kernel overload
  std::vector<Element> compact_elements;          // carrier overload
};

/// Window compacts of the kernel: cancellation precheck, inverses found
/// through find_complement, summand-closedness of compactness under sums, and
/// the ordered-group comparison against supplied data.
CompactGroupReport compact_group(const AugmentedModel& m, const Window& w,
                                 const std::optional<K0Data>& k0 = std::nullopt);
/// The same checks on a glued carrier's compact part.
CompactGroupReport compact_group(const ModelPtr& m, const Window& w,
                                 const std::optional<K0Data>& k0 = std::nullopt);

enum class SoftKind { Soft, Compact, Undecided };

struct SoftReport {
  SoftKind kind = SoftKind::Undecided;
  std::string detail;
  std::vector<Element> witness;
};

/// Soft/compact dichotomy on a simple carrier: compact when x is way below
/// itself, soft when every window predecessor admits a nonzero positive
/// complement under x. Throws when a window element refutes simplicity.
SoftReport classify_soft_compact(const ModelPtr& m, const Element& x, const Window& w);

struct FullComparisonResult {
  Verdict3 verdict;
  long long n = -1;
  Element yp;
};

/// Minimal window n with x' + n z <= y' + n z for some window y' way below y.
/// Requires x' way below x and z full; the class comparison q(x) <= q(y) is a
/// documented precondition and is not re-audited here.
FullComparisonResult full_comparison(const ModelPtr& m, const Element& xp, const Element& x,
                                     const Element& y, const Element& z, const Window& w);

/// Windowed exactness of kernel-view maps: the composite vanishes, the image
/// of the inclusion equals the kernel of the quotient, the inclusion is an
/// order embedding, and the quotient is surjective.
AuditReport verify_exact_sequence(const CuMap& inc, const CuMap& quo, const Window& w);

struct IsoResult {
  CuMap map;
  AuditReport audit;
};

/// The sum map on free coordinates, audited as an ordered-semigroup
/// isomorphism from the direct sum onto the joint signed power.
IsoResult direct_sum_iso(const VectorModelPtr& a, const VectorModelPtr& b, const Window& w);

/// Re-run reported kernel-level violations; every Fail must come back true.
bool reevaluate(const AugmentedModel& m, const PredicateResult& r);
bool reevaluate(const AugmentedModel& m, const PredicateResult& r, const K0Data& k0);
bool reevaluate(const CuMap& inc, const CuMap& quo, const PredicateResult& r);

}  // namespace cusemi
