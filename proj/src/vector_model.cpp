#include "cusemi/vector_model.hpp"

#include <algorithm>
#include <sstream>

namespace cusemi {

namespace {

const ExtScalar kZero(0);
const ExtScalar kOne(1);

bool kind_admits(CoordKind k, const ExtScalar& v) {
  if (v.is_infinite()) return true;
  const Rat& r = v.finite_value();
  switch (k) {
    case CoordKind::Nat:
      return r.is_integer() && r.num() >= 0;
    case CoordKind::Int:
      return r.is_integer();
    case CoordKind::RealRay:
      return r >= Rat(0);
  }
  return false;
}

// Integer kinds step by 1; ray kinds halve the remaining gap so the target is
// approached strictly from below.
ExtScalar ramp_coord(CoordKind k, const ExtScalar& s, const ExtScalar& t, std::size_t m) {
  if (s.is_infinite()) return s;
  if (t.is_infinite()) return s + ExtScalar(static_cast<long long>(m));
  if (k == CoordKind::RealRay) {
    if (s == t) return t;
    Rat gap = t.finite_value() - s.finite_value();
    return ExtScalar(t.finite_value() - gap / Rat(static_cast<long long>(m) + 1));
  }
  return ExtScalar::min(t, s + ExtScalar(static_cast<long long>(m)));
}

}  // namespace

std::string coord_kind_name(CoordKind k) {
  switch (k) {
    case CoordKind::Nat:
      return "ext-nat";
    case CoordKind::Int:
      return "ext-int";
    case CoordKind::RealRay:
      return "ext-real";
  }
  return "?";
}

VectorModel::VectorModel(std::vector<CoordKind> kinds, std::vector<std::pair<int, int>> edges,
                         std::vector<int> zero_coords, std::optional<int> basepoint,
                         std::string sig, std::string name)
    : CuModel(std::move(sig), std::move(name)),
      kinds_(std::move(kinds)),
      edges_(std::move(edges)),
      zero_coords_(std::move(zero_coords)),
      is_zero_(kinds_.size(), 0),
      basepoint_(basepoint) {
  if (kinds_.empty()) throw std::invalid_argument("VectorModel: need at least one coordinate");
  for (auto [a, b] : edges_)
    if (a < 0 || b < 0 || a >= dims() || b >= dims())
      throw std::invalid_argument("VectorModel: edge out of range");
  for (int z : zero_coords_) {
    if (z < 0 || z >= dims()) throw std::invalid_argument("VectorModel: zero coord out of range");
    is_zero_[z] = 1;
  }
  if (basepoint_ && (*basepoint_ < 0 || *basepoint_ >= dims()))
    throw std::invalid_argument("VectorModel: basepoint out of range");
}

std::shared_ptr<const VectorModel> VectorModel::ext_power(CoordKind kind, int k) {
  if (k <= 0) throw std::invalid_argument("ext_power: k must be positive");
  std::string sig = "P:" + coord_kind_name(kind) + "^" + std::to_string(k);
  return std::make_shared<VectorModel>(std::vector<CoordKind>(k, kind),
                                       std::vector<std::pair<int, int>>{}, std::vector<int>{},
                                       std::nullopt, sig,
                                       "ext_power(" + coord_kind_name(kind) + "," +
                                           std::to_string(k) + ")");
}

std::shared_ptr<const VectorModel> VectorModel::lsc_poset(const FinitePoset& p, CoordKind kind) {
  std::string sig = "L:" + coord_kind_name(kind) + ":" + p.describe();
  return std::make_shared<VectorModel>(std::vector<CoordKind>(p.size(), kind), p.covers(),
                                       std::vector<int>{}, p.basepoint(), sig,
                                       "lsc_poset(" + p.describe() + "," + coord_kind_name(kind) +
                                           ")");
}

std::shared_ptr<const VectorModel> VectorModel::pointed_power(int k) {
  if (k <= 0) throw std::invalid_argument("pointed_power: k must be positive");
  std::string sig = "U:ext-nat^" + std::to_string(k) + "+1";
  return std::make_shared<VectorModel>(std::vector<CoordKind>(k + 1, CoordKind::Nat),
                                       std::vector<std::pair<int, int>>{}, std::vector<int>{}, k,
                                       sig, "pointed_power(" + std::to_string(k) + ")");
}

std::shared_ptr<const VectorModel> VectorModel::pointed_kernel_presentation(const FinitePoset& p) {
  if (!p.basepoint()) throw std::invalid_argument("pointed_kernel_presentation: poset needs a basepoint");
  std::string sig = "K:ext-int:" + p.describe();
  return std::make_shared<VectorModel>(std::vector<CoordKind>(p.size(), CoordKind::Int),
                                       p.covers(), std::vector<int>{*p.basepoint()}, p.basepoint(),
                                       sig, "pointed_kernel(" + p.describe() + ")");
}

std::shared_ptr<const VectorModel> VectorModel::direct_sum(
    const std::shared_ptr<const VectorModel>& a, const std::shared_ptr<const VectorModel>& b) {
  std::vector<CoordKind> kinds = a->kinds_;
  kinds.insert(kinds.end(), b->kinds_.begin(), b->kinds_.end());
  std::vector<std::pair<int, int>> edges = a->edges_;
  int off = a->dims();
  for (auto [x, y] : b->edges_) edges.push_back({x + off, y + off});
  std::vector<int> zeros = a->zero_coords_;
  for (int z : b->zero_coords_) zeros.push_back(z + off);
  std::string sig = "D:[" + a->sig() + "+" + b->sig() + "]";
  return std::make_shared<VectorModel>(std::move(kinds), std::move(edges), std::move(zeros),
                                       std::nullopt, sig,
                                       "direct_sum(" + a->name() + "," + b->name() + ")");
}

std::string VectorModel::validate(const ScalarVec& v) const {
  if (static_cast<int>(v.size()) != dims()) return "wrong dimension";
  for (int i = 0; i < dims(); ++i)
    if (!kind_admits(kinds_[i], v[i]))
      return "coordinate " + std::to_string(i) + " violates " + coord_kind_name(kinds_[i]);
  for (auto [a, b] : edges_)
    if (!(v[a] <= v[b]))
      return "table not monotone: value at " + std::to_string(a) + " exceeds value at " +
             std::to_string(b);
  for (int z : zero_coords_)
    if (v[z] != kZero) return "coordinate " + std::to_string(z) + " must be zero";
  return {};
}

Element VectorModel::make(ScalarVec v) const {
  std::string err = validate(v);
  if (!err.empty()) throw std::invalid_argument(name() + ": " + err);
  return Element{sig(), std::move(v)};
}

bool VectorModel::leq(const Element& a, const Element& b) const {
  check_sig(a);
  check_sig(b);
  const auto& u = a.scalars();
  const auto& v = b.scalars();
  for (int i = 0; i < dims(); ++i)
    if (!(u[i] <= v[i])) return false;
  return true;
}

Element VectorModel::add(const Element& a, const Element& b) const {
  check_sig(a);
  check_sig(b);
  ScalarVec out(dims());
  for (int i = 0; i < dims(); ++i) out[i] = a.scalars()[i] + b.scalars()[i];
  return Element{sig(), std::move(out)};
}

Element VectorModel::zero() const { return Element{sig(), ScalarVec(dims(), kZero)}; }

bool VectorModel::way_below(const Element& a, const Element& b) const {
  check_sig(a);
  check_sig(b);
  const auto& u = a.scalars();
  const auto& v = b.scalars();
  for (int i = 0; i < dims(); ++i) {
    if (kinds_[i] == CoordKind::RealRay) {
      if (u[i] == kZero) continue;
      if (u[i].is_infinite() || !(u[i] < v[i])) return false;
    } else {
      if (u[i].is_infinite() || !(u[i] <= v[i])) return false;
    }
  }
  return true;
}

Element VectorModel::ramp_term(const Element& start, const Element& target, std::size_t m) const {
  check_sig(start);
  check_sig(target);
  ScalarVec out(dims());
  for (int i = 0; i < dims(); ++i)
    out[i] = ramp_coord(kinds_[i], start.scalars()[i], target.scalars()[i], m);
  return Element{sig(), std::move(out)};
}

ScalarVec VectorModel::edge_close_up(ScalarVec v) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges_)
      if (!(v[a] <= v[b])) {
        v[b] = v[a];
        changed = true;
      }
  }
  return v;
}

Chain VectorModel::approximant_chain(const Element& x) const {
  check_sig(x);
  const auto& v = x.scalars();
  bool finite = true, ray_pos = false;
  for (int i = 0; i < dims(); ++i) {
    if (v[i].is_infinite()) finite = false;
    if (kinds_[i] == CoordKind::RealRay && v[i] != kZero) ray_pos = true;
  }
  if (finite && !ray_pos) return constant_chain(x);  // compact
  ScalarVec start(dims());
  for (int i = 0; i < dims(); ++i) {
    if (v[i].is_infinite())
      start[i] = kZero;
    else if (kinds_[i] == CoordKind::RealRay && v[i] != kZero)
      start[i] = ExtScalar(v[i].finite_value() / Rat(2));
    else
      start[i] = v[i];
  }
  start = edge_close_up(std::move(start));
  return ramp_chain(Element{sig(), std::move(start)}, x);
}

std::vector<Element> VectorModel::window_elements(int bound) const {
  std::vector<std::vector<ExtScalar>> choices(dims());
  for (int i = 0; i < dims(); ++i) {
    if (is_zero_[i]) {
      choices[i] = {kZero};
      continue;
    }
    long long lo = kinds_[i] == CoordKind::Int ? -bound : 0;
    for (long long t = lo; t <= bound; ++t) choices[i].push_back(ExtScalar(t));
    choices[i].push_back(ExtScalar::infinity());
  }
  std::vector<Element> out;
  ScalarVec cur(dims());
  std::function<void(int)> rec = [&](int i) {
    if (i == dims()) {
      if (validate(cur).empty()) out.push_back(Element{sig(), cur});
      return;
    }
    for (const auto& c : choices[i]) {
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<Element> VectorModel::order_unit() const {
  ScalarVec u(dims());
  for (int i = 0; i < dims(); ++i)
    u[i] = (is_zero_[i] || kinds_[i] == CoordKind::RealRay) ? kZero : kOne;
  // The unit must itself be compact and must dominate multiples of every
  // compact; ray coordinates are zero on compacts, so zero entries suffice
  // there. A model whose only compact is zero has no useful unit.
  bool some = false;
  for (int i = 0; i < dims(); ++i)
    if (u[i] == kOne) some = true;
  if (!some) return std::nullopt;
  if (!validate(u).empty()) return std::nullopt;
  return Element{sig(), std::move(u)};
}

std::optional<Element> VectorModel::max_element() const {
  ScalarVec v(dims());
  for (int i = 0; i < dims(); ++i) v[i] = is_zero_[i] ? kZero : ExtScalar::infinity();
  // Close down along edges into pinned-zero coordinates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges_)
      if (!(v[a] <= v[b])) {
        v[a] = v[b];
        changed = true;
      }
  }
  if (!validate(v).empty()) return std::nullopt;
  return Element{sig(), std::move(v)};
}

std::optional<Element> VectorModel::sup_of_multiples(const Element& x) const {
  check_sig(x);
  ScalarVec v(dims());
  for (int i = 0; i < dims(); ++i) {
    const ExtScalar& c = x.scalars()[i];
    if (c < kZero) throw std::invalid_argument("sup_of_multiples: element not positive");
    v[i] = (c == kZero) ? kZero : ExtScalar::infinity();
  }
  return Element{sig(), std::move(v)};
}

DecideAnswer VectorModel::o5_decide(const Element& xp, const Element& x, const Element& y,
                                    const Element& w, const Element& wp) const {
  check_sig(xp);
  check_sig(x);
  check_sig(y);
  check_sig(wp);
  check_sig(w);
  (void)w;
  // Coordinatewise necessary bounds for z: x+z >= y gives a lower bound,
  // x'+z <= y gives an upper bound, w' way-below z gives another lower bound
  // (strict on ray coordinates). With monotonicity edges the least admissible
  // raise decides solvability exactly for integer kinds.
  bool has_ray_edge = false;
  for (auto [a, b] : edges_)
    if (kinds_[a] == CoordKind::RealRay || kinds_[b] == CoordKind::RealRay) has_ray_edge = true;
  ScalarVec lo(dims()), hi(dims());
  std::vector<char> lo_strict(dims(), 0);
  for (int i = 0; i < dims(); ++i) {
    const ExtScalar &xi = x.scalars()[i], &xpi = xp.scalars()[i], &yi = y.scalars()[i],
                    &wpi = wp.scalars()[i];
    // lower bound from y <= x+z
    if (xi.is_infinite() || yi <= xi)
      lo[i] = kZero;
    else if (yi.is_infinite())
      lo[i] = ExtScalar::infinity();
    else
      lo[i] = yi - xi;
    if (kinds_[i] != CoordKind::Int) lo[i] = ExtScalar::max(lo[i], kZero);
    // lower bound from w' way-below z
    if (wpi.is_infinite()) return DecideAnswer::none("w' not finite at coordinate " + std::to_string(i));
    if (kinds_[i] == CoordKind::RealRay && wpi != kZero) {
      if (!(wpi < lo[i])) {
        lo[i] = wpi;
        lo_strict[i] = 1;
      }
    } else {
      lo[i] = ExtScalar::max(lo[i], wpi);
    }
    // upper bound from x'+z <= y
    if (yi.is_infinite())
      hi[i] = ExtScalar::infinity();
    else if (xpi.is_infinite())
      return DecideAnswer::none("x' not finite at coordinate " + std::to_string(i));
    else
      hi[i] = yi - xpi;
    if (is_zero_[i]) {
      if (lo[i] > kZero || lo_strict[i])
        return DecideAnswer::none("pinned-zero coordinate " + std::to_string(i) + " needs z > 0");
      lo[i] = kZero;
      hi[i] = kZero;
    }
  }
  if (has_ray_edge) return DecideAnswer::undecided();
  // Least solution above lo respecting edges.
  ScalarVec z = lo;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges_)
      if (!(z[a] <= z[b])) {
        z[b] = z[a];
        changed = true;
      }
  }
  for (int i = 0; i < dims(); ++i) {
    if (lo_strict[i] && z[i] == lo[i]) {
      // need strict room above w' on a ray coordinate (no edges here)
      if (hi[i].is_infinite())
        z[i] = z[i] + kOne;
      else if (z[i] < hi[i])
        z[i] = ExtScalar((z[i].finite_value() + hi[i].finite_value()) / Rat(2));
      else
        return DecideAnswer::none("no strict room above w' at coordinate " + std::to_string(i));
    }
    if (!(z[i] <= hi[i]))
      return DecideAnswer::none("coordinate " + std::to_string(i) +
                                " interval empty after edge closure");
  }
  if (!validate(z).empty()) return DecideAnswer::undecided();
  return DecideAnswer::found(Element{sig(), std::move(z)});
}

DecideAnswer VectorModel::divisibility_decide(const Element& xp, const Element& x, int n) const {
  check_sig(xp);
  check_sig(x);
  if (n <= 0) throw std::invalid_argument("divisibility_decide: n must be positive");
  // y with n*y <= x and x' <= (n+1)*y: per-coordinate interval
  // [ceil(x'/(n+1)), floor(x/n)] for integer kinds, exact rationals for rays.
  ScalarVec y(dims());
  for (int i = 0; i < dims(); ++i) {
    const ExtScalar &xi = x.scalars()[i], &xpi = xp.scalars()[i];
    if (xpi.is_infinite()) return DecideAnswer::none("x' not finite at coordinate " + std::to_string(i));
    ExtScalar lo, hi;
    if (kinds_[i] == CoordKind::RealRay) {
      lo = ExtScalar(xpi.finite_value() / Rat(n + 1));
      hi = xi.is_infinite() ? ExtScalar::infinity() : ExtScalar(xi.finite_value() / Rat(n));
    } else {
      long long a = xpi.finite_value().num();  // integer kinds store integers
      long long num = a >= 0 ? (a + n) / (n + 1) : -((-a) / (n + 1));
      lo = ExtScalar(num);
      if (xi.is_infinite())
        hi = ExtScalar::infinity();
      else {
        long long b = xi.finite_value().num();
        long long fl = b >= 0 ? b / n : -((-b + n - 1) / n);
        hi = ExtScalar(fl);
      }
    }
    if (kinds_[i] != CoordKind::Int) lo = ExtScalar::max(lo, kZero);
    if (lo > hi)
      return DecideAnswer::none("coordinate " + std::to_string(i) + " interval empty");
    y[i] = lo;
  }
  y = edge_close_up(std::move(y));
  // Re-check upper bounds after the raise.
  for (int i = 0; i < dims(); ++i) {
    ExtScalar hi;
    const ExtScalar& xi = x.scalars()[i];
    if (xi.is_infinite())
      continue;
    if (kinds_[i] == CoordKind::RealRay)
      hi = ExtScalar(xi.finite_value() / Rat(n));
    else {
      long long b = xi.finite_value().num();
      hi = ExtScalar(b >= 0 ? b / n : -((-b + n - 1) / n));
    }
    if (!(y[i] <= hi))
      return DecideAnswer::none("edge closure exceeds floor(x/n) at coordinate " +
                                std::to_string(i));
  }
  if (!validate(y).empty()) return DecideAnswer::undecided();
  return DecideAnswer::found(Element{sig(), std::move(y)});
}

std::optional<ScalarVec> VectorModel::functional_coords(const Element& e) const {
  check_sig(e);
  return e.scalars();
}

std::optional<Element> VectorModel::positive_absorber(const Element& x) const {
  check_sig(x);
  ScalarVec z(dims());
  for (int i = 0; i < dims(); ++i) {
    const ExtScalar& v = x.scalars()[i];
    z[i] = (v.is_infinite() || v >= kZero) ? kZero : -v;
  }
  z = edge_close_up(std::move(z));
  if (!validate(z).empty()) return std::nullopt;
  return Element{sig(), std::move(z)};
}

}  // namespace cusemi
