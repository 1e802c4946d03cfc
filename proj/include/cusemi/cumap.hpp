#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cusemi/model.hpp"
#include "cusemi/vector_model.hpp"

namespace cusemi {

/// Coordinate action: target coordinate i receives sum_j rows[i][j] * x[j]
/// with infinity-absorbing arithmetic and the convention 0 * inf = 0.
struct MapMatrix {
  std::vector<std::vector<ExtScalar>> rows;
};

/// Table pullback along a point map: target table entry i is the source entry
/// at point_of[i]. Models the composition f |-> f o phi for continuous phi.
struct MapPullback {
  std::vector<int> point_of;
};

/// Per-coordinate collapse finite -> 0, inf -> inf. Additive and
/// order-preserving but not sup-preserving: the canonical M1 violator.
struct MapCollapse {};

using MapAction = std::variant<MapMatrix, MapPullback, MapCollapse>;

/// Morphism candidate between coordinate carriers. Whether it actually is a
/// Cu-morphism (M1/M2) is the auditor's business, not a construction invariant.
struct CuMap {
  ModelPtr source;
  ModelPtr target;
  MapAction action;
  std::string name;

  Element apply(const Element& x) const;
};

CuMap identity_map(const ModelPtr& m);
CuMap matrix_map(const ModelPtr& source, const ModelPtr& target,
                 std::vector<std::vector<ExtScalar>> rows, std::string name);
/// Integer-entry convenience overload.
CuMap matrix_map(const ModelPtr& source, const ModelPtr& target,
                 const std::vector<std::vector<long long>>& rows, std::string name);
CuMap pullback_map(const ModelPtr& source, const ModelPtr& target, std::vector<int> point_of,
                   std::string name);
CuMap collapse_map(const ModelPtr& m, std::string name);

}  // namespace cusemi
