#include "cusemi/cumap.hpp"

#include <stdexcept>

namespace cusemi {

namespace {

const VectorModel& as_vector(const ModelPtr& m, const char* role) {
  auto p = std::dynamic_pointer_cast<const VectorModel>(m);
  if (!p) throw std::invalid_argument(std::string("coordinate map needs a coordinate ") + role +
                                      " carrier, got " + m->name());
  return *p;
}

}  // namespace

Element CuMap::apply(const Element& x) const {
  source->check_sig(x);
  const VectorModel& src = as_vector(source, "source");
  const VectorModel& dst = as_vector(target, "target");
  const ScalarVec& v = x.scalars();
  ScalarVec out;
  if (const auto* mat = std::get_if<MapMatrix>(&action)) {
    if (static_cast<int>(mat->rows.size()) != dst.dims())
      throw std::invalid_argument("matrix map: row count does not match target dimension");
    out.resize(mat->rows.size());
    for (std::size_t i = 0; i < mat->rows.size(); ++i) {
      if (static_cast<int>(mat->rows[i].size()) != src.dims())
        throw std::invalid_argument("matrix map: column count does not match source dimension");
      ExtScalar acc{0};
      for (std::size_t j = 0; j < mat->rows[i].size(); ++j)
        acc = acc + ExtScalar::weighted(mat->rows[i][j], v[j]);
      out[i] = acc;
    }
  } else if (const auto* pb = std::get_if<MapPullback>(&action)) {
    if (static_cast<int>(pb->point_of.size()) != dst.dims())
      throw std::invalid_argument("pullback map: point list does not match target dimension");
    out.resize(pb->point_of.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      int j = pb->point_of[i];
      if (j < 0 || j >= src.dims())
        throw std::invalid_argument("pullback map: source point out of range");
      out[i] = v[static_cast<std::size_t>(j)];
    }
  } else {
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i].is_infinite() ? ExtScalar::infinity() : ExtScalar(0);
  }
  return dst.make(std::move(out));
}

CuMap identity_map(const ModelPtr& m) {
  const VectorModel& vm = as_vector(m, "source");
  std::vector<std::vector<ExtScalar>> rows(static_cast<std::size_t>(vm.dims()),
                                           std::vector<ExtScalar>(vm.dims(), ExtScalar(0)));
  for (int i = 0; i < vm.dims(); ++i) rows[static_cast<std::size_t>(i)][i] = ExtScalar(1);
  return CuMap{m, m, MapMatrix{std::move(rows)}, "id"};
}

CuMap matrix_map(const ModelPtr& source, const ModelPtr& target,
                 std::vector<std::vector<ExtScalar>> rows, std::string name) {
  return CuMap{source, target, MapMatrix{std::move(rows)}, std::move(name)};
}

CuMap matrix_map(const ModelPtr& source, const ModelPtr& target,
                 const std::vector<std::vector<long long>>& rows, std::string name) {
  std::vector<std::vector<ExtScalar>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return matrix_map(source, target, std::move(r), std::move(name));
}

CuMap pullback_map(const ModelPtr& source, const ModelPtr& target, std::vector<int> point_of,
                   std::string name) {
  return CuMap{source, target, MapPullback{std::move(point_of)}, std::move(name)};
}

CuMap collapse_map(const ModelPtr& m, std::string name) {
  return CuMap{m, m, MapCollapse{}, std::move(name)};
}

}  // namespace cusemi
