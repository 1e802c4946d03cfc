#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cusemi/element.hpp"

namespace cusemi {

/// Search / enumeration budget shared by all three-valued procedures.
/// bound caps coordinate values, search_bound caps compact searches,
/// chain_samples caps sampled chain prefixes, kmax caps multiplier sweeps.
struct Window {
  int bound = 4;
  int search_bound = 8;
  int chain_samples = 64;
  int kmax = 3;
  std::uint64_t seed = 0x00c0ffee5eedULL;
};

struct ChainTailConstant {};
/// Tail terms walk from `start` toward `target` using the model's ramp formula;
/// the supremum of the tail is `target` by construction.
struct ChainTailRamp {
  Element start;
  Element target;
};
/// User-supplied term formula with a declared supremum. The monotonicity
/// promise is sampled, not proved.
struct ChainTailFormula {
  std::function<Element(std::size_t)> term;
  Element declared_sup;
};
using ChainTail = std::variant<ChainTailConstant, ChainTailRamp, ChainTailFormula>;

/// Increasing sequence given by a finite prefix plus a tail rule with a
/// closed-form supremum.
struct Chain {
  std::vector<Element> prefix;
  ChainTail tail = ChainTailConstant{};
};

/// Outcome of a closed-form existential decision (e.g. a complement search):
/// either a witness, a refutation certificate, or no verdict.
struct DecideAnswer {
  enum class Kind { Witness, NoWitness, Undecided } kind = Kind::Undecided;
  Element witness;
  std::string certificate;

  static DecideAnswer found(Element w) { return {Kind::Witness, std::move(w), {}}; }
  static DecideAnswer none(std::string cert) { return {Kind::NoWitness, {}, std::move(cert)}; }
  static DecideAnswer undecided() { return {}; }
};

/// An effectively presented Cu-semigroup carrier: closed-form order, addition,
/// way-below and chain suprema, plus finite window enumerations for audits.
class CuModel {
 public:
  virtual ~CuModel() = default;

  const std::string& sig() const { return sig_; }
  const std::string& name() const { return name_; }

  virtual bool leq(const Element& a, const Element& b) const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element zero() const = 0;
  virtual bool way_below(const Element& a, const Element& b) const = 0;

  /// Canonical representative of the element (identifications live here).
  virtual Element canonical(const Element& e) const { return e; }

  /// m-th tail term of a ramp from start toward target (m = 0 gives start).
  virtual Element ramp_term(const Element& start, const Element& target, std::size_t m) const = 0;

  /// A way-below-increasing chain with supremum x.
  virtual Chain approximant_chain(const Element& x) const = 0;

  /// Deterministic enumeration of the carrier window at the given coordinate bound.
  virtual std::vector<Element> window_elements(int bound) const = 0;

  /// Compact elements of the window (e with e way-below e).
  virtual std::vector<Element> compact_window(int bound) const;

  virtual std::optional<Element> order_unit() const { return std::nullopt; }
  virtual std::optional<Element> max_element() const { return std::nullopt; }

  /// Closed-form supremum of {n*x : n >= 1} for x >= 0, when available.
  virtual std::optional<Element> sup_of_multiples(const Element&) const { return std::nullopt; }

  /// Closed-form search for z with x'+z <= y <= x+z and w' way-below z.
  virtual DecideAnswer o5_decide(const Element&, const Element&, const Element&, const Element&,
                                 const Element&) const {
    return DecideAnswer::undecided();
  }

  /// Closed-form search for y with n*y <= x and x' <= (n+1)*y.
  virtual DecideAnswer divisibility_decide(const Element&, const Element&, int) const {
    return DecideAnswer::undecided();
  }

  /// Ray coordinates used by weight functionals; nullopt when unsupported.
  virtual std::optional<ScalarVec> functional_coords(const Element&) const { return std::nullopt; }

  /// Closed-form z >= 0 with x + z >= 0 and z way-below some z'.
  virtual std::optional<Element> positive_absorber(const Element&) const { return std::nullopt; }

  /// Presentation-level models whose function part cannot satisfy the
  /// strict-approximation reading of O2 report it expected-fail.
  virtual bool non_axiom_exact() const { return false; }

  /// True when x is soft in the idealized model this carrier stands in for,
  /// even if the finite-scale way_below sees it as compact. Such elements need
  /// strictly increasing approximants, which integer tables cannot supply.
  virtual bool declared_soft(const Element&) const { return false; }

  /// True when exhausting the compact search {n*u} is an authoritative refutation.
  virtual bool g_search_complete() const { return false; }

  void check_sig(const Element& e) const {
    if (e.sig != sig_)
      throw std::invalid_argument("element signature '" + e.sig + "' does not match model '" +
                                  sig_ + "'");
  }

  Element nsum(const Element& x, long long n) const;

 protected:
  CuModel(std::string sig, std::string name) : sig_(std::move(sig)), name_(std::move(name)) {}

 private:
  std::string sig_;
  std::string name_;
};

using ModelPtr = std::shared_ptr<const CuModel>;

/// n-th term of the chain (prefix then tail).
Element chain_term(const CuModel& m, const Chain& c, std::size_t n);

/// Closed-form supremum from the tail rule. Throws std::invalid_argument when
/// the sampled prefix/tail is not increasing.
Element sup_chain(const CuModel& m, const Chain& c);

/// Constant chain at x.
Chain constant_chain(const Element& x);

/// Ramp chain from start to target; term n is ramp_term(start, target, n).
Chain ramp_chain(const Element& start, const Element& target);

}  // namespace cusemi
