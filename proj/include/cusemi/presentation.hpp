#pragma once

#include <memory>
#include <vector>

#include "cusemi/model.hpp"
#include "cusemi/poset.hpp"

namespace cusemi {

/// Presentation-level carriers: a family of classes (the V part) glued onto
/// integer-valued lower semicontinuous tables over a finite stand-in poset
/// (the function part). Two concrete presentations are provided:
///
///   r2: V = Z with distinct classes pairwise incomparable, tables over the
///   two-point pointed antichain with values in Z u {inf} vanishing at the
///   basepoint. The zero table is identified with the class v(0). A class is
///   absorbed by every table: n + f = f. Not positively ordered (tables with
///   negative values sit below classes).
///
///   sphere: V = {(0,0)} u {(rank, twist) : rank >= 1} ordered by rank alone,
///   tables over the lambda poset with values in N u {inf}, monotone along the
///   poset. A finite constant table n is identified with the class v(n, 0),
///   and classes add onto tables through their rank: (r, c) + f = r + f.
///   Positively ordered; the twist coordinate is invisible to the order
///   whenever ranks differ.
///
/// Tables with an infinite entry are honest sup-limits of finite tables, but
/// the finite poset stand-in makes every finite table compact. That collapse
/// is intentional and these models report non_axiom_exact().
class PresentationModel : public CuModel {
 public:
  enum class Kind { R2, Sphere };

  static std::shared_ptr<const PresentationModel> r2();
  static std::shared_ptr<const PresentationModel> sphere();

  Kind kind() const { return kind_; }
  const FinitePoset& poset() const { return poset_; }

  /// Class element: r2 takes {n}, sphere takes {rank, twist} with rank >= 1
  /// or {0, 0}. Throws std::invalid_argument on malformed data.
  Element vclass(std::vector<long long> v) const;

  /// Table element from per-point values (integer or inf). Validates the
  /// basepoint / positivity / monotonicity constraints of the presentation
  /// and returns the canonical form (constant tables may fold into a class).
  Element table(ScalarVec f) const;

  bool leq(const Element& a, const Element& b) const override;
  Element add(const Element& a, const Element& b) const override;
  Element zero() const override;
  bool way_below(const Element& a, const Element& b) const override;
  Element canonical(const Element& e) const override;
  Element ramp_term(const Element& start, const Element& target, std::size_t m) const override;
  Chain approximant_chain(const Element& x) const override;
  std::vector<Element> window_elements(int bound) const override;
  std::optional<Element> order_unit() const override;
  std::optional<Element> max_element() const override;
  std::optional<Element> sup_of_multiples(const Element& x) const override;
  DecideAnswer o5_decide(const Element& xp, const Element& x, const Element& y, const Element& w,
                         const Element& wp) const override;
  bool non_axiom_exact() const override { return true; }
  /// Every table that is not secretly a class stands in for a soft function.
  bool declared_soft(const Element& e) const override;

 private:
  explicit PresentationModel(Kind kind);

  /// Rank a class adds onto a table (r2: always 0, sphere: the rank entry).
  long long glue_rank(const std::vector<long long>& v) const;
  bool valid_class(const std::vector<long long>& v) const;
  /// Structural validity of raw table values (without canonicalization).
  bool valid_table(const ScalarVec& f) const;
  PresElem elem(const Element& e) const;

  Kind kind_;
  FinitePoset poset_;
};

using PresentationPtr = std::shared_ptr<const PresentationModel>;

}  // namespace cusemi
