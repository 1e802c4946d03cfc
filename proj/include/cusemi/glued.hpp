#pragma once

#include "cusemi/model.hpp"
#include "cusemi/rational.hpp"

namespace cusemi {

/// Carrier of a simple stably finite pure model: a free abelian compact part
/// of rank d glued to a soft part of ray vectors of length k. The pairing
/// matrix (d rows, k columns, rational) sends a compact-part element to its
/// ray vector; positivity of nonzero compacts is strict positivity of that
/// vector on every ray. d = 0 gives the one-compact model {0} glued to rays.
class GluedModel : public CuModel {
 public:
  GluedModel(int d, int k, std::vector<std::vector<Rat>> pairing);

  static std::shared_ptr<const GluedModel> simple_pure(int d, int k,
                                                       std::vector<std::vector<Rat>> pairing);
  /// d = 0, k = 1: the one-ray model with a single compact zero.
  static std::shared_ptr<const GluedModel> razak();

  int comp_rank() const { return d_; }
  int rays() const { return k_; }

  Element compact(std::vector<long long> v) const;
  Element soft(ScalarVec f) const;
  /// Ray vector of an element: the pairing image of a compact, the ray data of a soft.
  ScalarVec hat(const Element& e) const;

  bool leq(const Element& a, const Element& b) const override;
  Element add(const Element& a, const Element& b) const override;
  Element zero() const override;
  bool way_below(const Element& a, const Element& b) const override;
  Element ramp_term(const Element& start, const Element& target, std::size_t m) const override;
  Chain approximant_chain(const Element& x) const override;
  std::vector<Element> window_elements(int bound) const override;
  std::vector<Element> compact_window(int bound) const override;
  std::optional<Element> order_unit() const override;
  std::optional<Element> max_element() const override;
  std::optional<Element> sup_of_multiples(const Element& x) const override;
  DecideAnswer o5_decide(const Element& xp, const Element& x, const Element& y, const Element& w,
                         const Element& wp) const override;
  DecideAnswer divisibility_decide(const Element& xp, const Element& x, int n) const override;
  std::optional<ScalarVec> functional_coords(const Element& e) const override;
  std::optional<Element> positive_absorber(const Element& x) const override;

 private:
  ScalarVec pair_vec(const std::vector<long long>& v) const;

  int d_;
  int k_;
  std::vector<std::vector<Rat>> pairing_;  // d rows of k rational entries
};

using GluedModelPtr = std::shared_ptr<const GluedModel>;

}  // namespace cusemi
