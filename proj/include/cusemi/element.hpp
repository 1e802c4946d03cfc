#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cusemi/ext_scalar.hpp"

namespace cusemi {

using ScalarVec = std::vector<ExtScalar>;

/// Element of a glued carrier: either a compact-part group element (integer
/// vector of length d) or a soft-part ray vector (length k, values in (-inf, inf]).
struct GluedElem {
  bool soft = false;
  std::vector<long long> comp;  // used when !soft
  ScalarVec rays;               // used when soft
};

/// Element of a presentation-level glued carrier: a V-part monoid element
/// (integer data) or a function-part table over the stand-in poset.
struct PresElem {
  bool vpart = false;
  std::vector<long long> v;  // used when vpart
  ScalarVec fn;              // used when !vpart
};

using Payload = std::variant<ScalarVec, GluedElem, PresElem>;

/// A carrier element tagged with the structural signature of its model.
/// Operations reject elements whose signature does not match the model.
struct Element {
  std::string sig;
  Payload payload;

  const ScalarVec& scalars() const { return std::get<ScalarVec>(payload); }
  ScalarVec& scalars() { return std::get<ScalarVec>(payload); }
  const GluedElem& glued() const { return std::get<GluedElem>(payload); }
  const PresElem& pres() const { return std::get<PresElem>(payload); }

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
};

/// Canonical display form, parseable back by parse_element:
///   scalar vectors  "(1,inf,1/2)"
///   glued           "c(1,-2)" / "s(3,inf)"   (d = 0 compact prints "c()")
///   presentation    "v(2)" / "v(1,1)" / "f(0,1,2)"
std::string format_element(const Element& e);

/// Inverse of format_element for the given signature. Nullopt on malformed text.
std::optional<Element> parse_element(const std::string& sig, const std::string& text);

std::string format_scalars(const ScalarVec& v);

}  // namespace cusemi
