#pragma once

#include "cusemi/model.hpp"
#include "cusemi/poset.hpp"

namespace cusemi {

/// Per-coordinate value constraint.
///   Nat      {0,1,2,...} + inf, every finite element compact
///   Int      {...,-1,0,1,...} + inf, every finite element compact
///   RealRay  nonnegative rationals + inf, only strict approximation
enum class CoordKind { Nat, Int, RealRay };

/// Scalar-vector carrier: coordinates with kinds, optional monotonicity edges
/// (table constraints along a poset), and coordinates pinned to zero (kernel
/// presentations). Order, addition and way-below are coordinatewise.
class VectorModel : public CuModel {
 public:
  VectorModel(std::vector<CoordKind> kinds, std::vector<std::pair<int, int>> edges,
              std::vector<int> zero_coords, std::optional<int> basepoint, std::string sig,
              std::string name);

  static std::shared_ptr<const VectorModel> ext_power(CoordKind kind, int k);
  /// Monotone tables over a finite poset (values nondecreasing along the order).
  static std::shared_ptr<const VectorModel> lsc_poset(const FinitePoset& p, CoordKind kind);
  /// Carrier of the unitization of a k-point discrete algebra: k+1 Nat
  /// coordinates, the last one marked as the basepoint.
  static std::shared_ptr<const VectorModel> pointed_power(int k);
  /// Tables over a pointed poset that vanish at the basepoint, with Int values.
  static std::shared_ptr<const VectorModel> pointed_kernel_presentation(const FinitePoset& p);
  static std::shared_ptr<const VectorModel> direct_sum(const std::shared_ptr<const VectorModel>& a,
                                                       const std::shared_ptr<const VectorModel>& b);

  int dims() const { return static_cast<int>(kinds_.size()); }
  const std::vector<CoordKind>& kinds() const { return kinds_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& zero_coords() const { return zero_coords_; }
  std::optional<int> basepoint() const { return basepoint_; }

  /// Builds an element after validating kind/edge/zero constraints.
  Element make(ScalarVec v) const;
  /// Validation error message for a raw vector, empty when valid.
  std::string validate(const ScalarVec& v) const;

  bool leq(const Element& a, const Element& b) const override;
  Element add(const Element& a, const Element& b) const override;
  Element zero() const override;
  bool way_below(const Element& a, const Element& b) const override;
  Element ramp_term(const Element& start, const Element& target, std::size_t m) const override;
  Chain approximant_chain(const Element& x) const override;
  std::vector<Element> window_elements(int bound) const override;
  std::optional<Element> order_unit() const override;
  std::optional<Element> max_element() const override;
  std::optional<Element> sup_of_multiples(const Element& x) const override;
  DecideAnswer o5_decide(const Element& xp, const Element& x, const Element& y, const Element& w,
                         const Element& wp) const override;
  DecideAnswer divisibility_decide(const Element& xp, const Element& x, int n) const override;
  std::optional<ScalarVec> functional_coords(const Element& e) const override;
  std::optional<Element> positive_absorber(const Element& x) const override;
  bool g_search_complete() const override { return order_unit().has_value(); }

  /// Least raise of v making it edge-monotone (values only go up).
  ScalarVec edge_close_up(ScalarVec v) const;

 private:
  std::vector<CoordKind> kinds_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> zero_coords_;
  std::vector<char> is_zero_;  // indicator per coordinate
  std::optional<int> basepoint_;
};

using VectorModelPtr = std::shared_ptr<const VectorModel>;

std::string coord_kind_name(CoordKind k);

}  // namespace cusemi
