#include "cusemi/augmented.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "cusemi/glued.hpp"

namespace cusemi {

namespace {

constexpr std::size_t kSweepBudget = 500000;

std::string class_str(const FormalDifference& d) {
  return "[" + format_element(d.x) + " - " + format_element(d.e) + "]";
}

const VectorModel* as_vm(const ModelPtr& m) {
  return dynamic_cast<const VectorModel*>(m.get());
}

std::uint64_t mix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

/// Visits index tuples over {0..n-1}^arity, exhaustively when the count fits
/// the budget and by seeded sampling otherwise. The visitor returns false to
/// stop early.
template <typename F>
void sweep_tuples(std::size_t n, int arity, std::uint64_t seed, F&& visit) {
  if (n == 0) return;
  double total = 1;
  for (int i = 0; i < arity; ++i) total *= static_cast<double>(n);
  std::vector<std::size_t> ix(static_cast<std::size_t>(arity), 0);
  if (total <= static_cast<double>(kSweepBudget)) {
    while (true) {
      if (!visit(ix)) return;
      int i = arity - 1;
      while (i >= 0 && ++ix[static_cast<std::size_t>(i)] == n) ix[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) return;
    }
  }
  std::uint64_t s = seed;
  for (std::size_t draws = 0; draws < kSweepBudget; ++draws) {
    for (auto& i : ix) i = static_cast<std::size_t>(mix64(s) % n);
    if (!visit(ix)) return;
  }
}

PredicateResult pred(const char* name) {
  PredicateResult r;
  r.predicate = name;
  return r;
}

std::string kernel_name(const AugmentedModel& m) {
  if (m.kernel_view()) return m.kernel_view()->name();
  return "kernel(" + m.rank().name + ")";
}

long long ceil_ll(const Rat& r) {
  long long q = r.num() / r.den();
  if (r.num() > 0 && r.num() % r.den() != 0) ++q;
  return q;
}

}  // namespace

RankedCc build_ranked(CcModel cc, CuMap rank) {
  if (!cc.closed_form())
    throw std::invalid_argument("rank maps act on difference vectors; the construction over '" +
                                cc.base()->name() + "' has no closed form");
  if (rank.source->sig() != cc.view()->sig())
    throw std::invalid_argument("rank map source '" + rank.source->sig() +
                                "' is not the difference-vector view '" + cc.view()->sig() + "'");
  const VectorModel* tgt = as_vm(rank.target);
  if (!tgt || tgt->dims() != 1 || tgt->kinds()[0] != CoordKind::Int)
    throw std::invalid_argument("rank maps land in the signed line");
  AuditReport audit = audit_morphism(rank, cc.window());
  if (audit.status() == 1) {
    std::string which;
    for (const auto& r : audit.results)
      if (r.verdict == Verdict::Fail) {
        which = r.predicate;
        break;
      }
    throw std::invalid_argument("rank map '" + rank.name + "' is not a morphism: predicate '" +
                                which + "' fails");
  }
  return RankedCc{std::move(cc), std::move(rank), std::move(audit)};
}

CuMap basepoint_rank(const CcModel& cc) {
  if (!cc.closed_form())
    throw std::invalid_argument("basepoint rank needs the closed form");
  const VectorModel* base = as_vm(cc.base());
  if (!base || !base->basepoint())
    throw std::invalid_argument("base carrier '" + cc.base()->name() + "' has no basepoint");
  std::vector<std::vector<long long>> rows(1, std::vector<long long>(base->dims(), 0));
  rows[0][static_cast<std::size_t>(*base->basepoint())] = 1;
  return matrix_map(cc.view(), VectorModel::ext_power(CoordKind::Int, 1), rows,
                    "rank:" + base->name());
}

AugmentedModel::AugmentedModel(RankedCc ranked) : ranked_(std::move(ranked)) {
  const auto* mat = std::get_if<MapMatrix>(&ranked_.rank.action);
  if (!mat || mat->rows.size() != 1) return;
  const auto& row = mat->rows[0];
  int nonzero = -1;
  bool clean = true;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == ExtScalar(0)) continue;
    if (nonzero >= 0 || row[i] != ExtScalar(1)) {
      clean = false;
      break;
    }
    nonzero = static_cast<int>(i);
  }
  if (!clean) return;
  const VectorModelPtr& view = ranked_.cc.view();
  if (nonzero < 0) {
    // Zero rank: the kernel is the whole view.
    kview_ = view;
    return;
  }
  rank_coord_ = nonzero;
  std::string sig = "K:" + view->sig() + ":pin" + std::to_string(nonzero);
  kview_ = std::make_shared<VectorModel>(view->kinds(), view->edges(), std::vector<int>{nonzero},
                                         nonzero, sig, "kernel(" + ranked_.rank.name + ")");
}

AugmentedModel kernel_model(RankedCc ranked) { return AugmentedModel(std::move(ranked)); }

ExtScalar AugmentedModel::rank_of(const FormalDifference& d) const {
  std::optional<Element> cv = ranked_.cc.class_vector(d);
  return ranked_.rank.apply(*cv).scalars()[0];
}

void AugmentedModel::require_member(const FormalDifference& d, const char* who) const {
  ExtScalar r = rank_of(d);
  if (r == ExtScalar(0)) return;
  throw std::invalid_argument(std::string(who) + " needs kernel members; rank " + class_str(d) +
                              " = " + r.str());
}

FormalDifference AugmentedModel::class_from_vector(const ScalarVec& v) const {
  Element cv = ranked_.cc.view()->make(v);
  ExtScalar r = ranked_.rank.apply(cv).scalars()[0];
  if (!(r == ExtScalar(0)))
    throw std::invalid_argument("difference vector " + format_scalars(v) + " has rank " + r.str());
  const VectorModel* base = as_vm(ranked_.cc.base());
  ScalarVec pos(v.size(), ExtScalar(0)), neg(v.size(), ExtScalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_infinite() || v[i] >= ExtScalar(0))
      pos[i] = v[i];
    else
      neg[i] = -v[i];
  }
  return {base->make(std::move(pos)), base->make(std::move(neg))};
}

std::optional<Element> AugmentedModel::kernel_elem(const FormalDifference& d) const {
  if (!kview_) return std::nullopt;
  require_member(d, "kernel_elem");
  return kview_->make(ranked_.cc.class_vector(d)->scalars());
}

std::vector<FormalDifference> AugmentedModel::window_members(int bound) const {
  std::vector<FormalDifference> out;
  const VectorModelPtr& src = kview_ ? kview_ : ranked_.cc.view();
  for (const Element& e : src->window_elements(bound)) {
    if (!kview_ && !(ranked_.rank.apply(e).scalars()[0] == ExtScalar(0))) continue;
    out.push_back(class_from_vector(e.scalars()));
  }
  return out;
}

FormalDifference AugmentedModel::q(const Element& x) const {
  FormalDifference d = ranked_.cc.pair_of(x);
  ExtScalar r = rank_of(d);
  if (!(r == ExtScalar(0)))
    throw std::invalid_argument("q expects a rank-zero base element; rank(" + format_element(x) +
                                ") = " + r.str());
  return d;
}

Verdict3 AugmentedModel::q_surjective(int bound) const {
  const CcModel& c = ranked_.cc;
  FormalDifference zc = c.pair_of(c.base()->zero());
  long long count = 0;
  for (const FormalDifference& d : window_members(bound)) {
    if (!c.below(zc, d).is_true()) continue;
    Verdict3 lift = c.positive_lift(d);
    if (!lift.is_true())
      return Verdict3::no("positive class " + class_str(d) + " does not lift: " + lift.detail,
                          {d.x, d.e});
    const Element& rep = lift.witness.front();
    FormalDifference qd = c.pair_of(rep);
    if (!(rank_of(qd) == ExtScalar(0)) || !c.eq(qd, d).is_true())
      return Verdict3::no("lift " + format_element(rep) + " does not realize " + class_str(d),
                          {rep});
    ++count;
  }
  return Verdict3::yes("all " + std::to_string(count) +
                       " positive window classes lift to rank-zero base elements");
}

Verdict3 AugmentedModel::below(const FormalDifference& a, const FormalDifference& b) const {
  require_member(a, "below");
  require_member(b, "below");
  return ranked_.cc.below(a, b);
}

Verdict3 AugmentedModel::way_below(const FormalDifference& a, const FormalDifference& b) const {
  require_member(a, "way_below");
  require_member(b, "way_below");
  return ranked_.cc.way_below(a, b);
}

FormalDifference AugmentedModel::add(const FormalDifference& a, const FormalDifference& b) const {
  require_member(a, "add");
  require_member(b, "add");
  return ranked_.cc.add(a, b);
}

CcSupResult AugmentedModel::sup(const CcChain& c) const {
  for (const FormalDifference& d : c.prefix) require_member(d, "sup");
  CcSupResult r = ranked_.cc.sup(c);
  if (r.verdict.is_true() && !member(r.sup))
    r.verdict = Verdict3::no("supremum leaves the kernel: rank " + class_str(r.sup) + " = " +
                             rank_of(r.sup).str());
  return r;
}

std::optional<FormalDifference> AugmentedModel::omega() const {
  if (!kview_) return std::nullopt;
  std::optional<Element> m = kview_->max_element();
  if (!m) return std::nullopt;
  return class_from_vector(m->scalars());
}

FindResult AugmentedModel::find_positive_absorber(const FormalDifference& x) const {
  require_member(x, "find_positive_absorber");
  const CcModel& c = ranked_.cc;
  FormalDifference zc = c.pair_of(c.base()->zero());
  ScalarVec v = c.class_vector(x)->scalars();
  ScalarVec zv(v.size(), ExtScalar(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].is_finite() && v[i] < ExtScalar(0)) zv[i] = -v[i];
  FindResult out;
  try {
    out.z = class_from_vector(zv);
  } catch (const std::invalid_argument&) {
    // The negative part leaves the kernel under this rank; search the window.
    for (const FormalDifference& cand : window_members(c.window().search_bound)) {
      if (!c.below(zc, cand).is_true()) continue;
      if (!c.below(zc, c.add(x, cand)).is_true()) continue;
      out.z = cand;
      out.verdict = Verdict3::yes("window absorber " + class_str(cand), {cand.x, cand.e});
      return out;
    }
    out.verdict = Verdict3::open("no positive absorber within the window");
    return out;
  }
  bool ok = c.below(zc, out.z).is_true() && c.below(zc, c.add(x, out.z)).is_true();
  out.verdict = ok ? Verdict3::yes("z is the negative part " + format_scalars(zv) + "; x + z = " +
                                       class_str(c.add(x, out.z)),
                                   {out.z.x, out.z.e})
                   : Verdict3::no("negative-part candidate fails its defining inequalities");
  return out;
}

FindResult AugmentedModel::find_complement(
    const FormalDifference& xp, const FormalDifference& x,
    const std::optional<std::pair<FormalDifference, FormalDifference>>& moreover) const {
  require_member(xp, "find_complement");
  require_member(x, "find_complement");
  const CcModel& c = ranked_.cc;
  FormalDifference zc = c.pair_of(c.base()->zero());
  Verdict3 wb = c.way_below(xp, x);
  if (!wb.is_true())
    throw std::invalid_argument("find_complement needs x' way below x: " + wb.detail);
  if (moreover) {
    require_member(moreover->first, "find_complement");
    require_member(moreover->second, "find_complement");
    if (!c.below(c.add(x, moreover->second), zc).is_true())
      throw std::invalid_argument("the refinement needs x + y <= 0");
    if (!c.way_below(moreover->first, moreover->second).is_true())
      throw std::invalid_argument("the refinement needs y' way below y");
  }

  ScalarVec vp = c.class_vector(xp)->scalars();
  ScalarVec v = c.class_vector(x)->scalars();
  long long bound = 0;
  for (const ExtScalar& s : vp) {
    if (s.is_infinite()) return {Verdict3::open("predecessor has an infinite coordinate"), zc};
    bound = std::max(bound, ceil_ll(s.finite_value()));
  }
  std::optional<Element> unit = c.base()->order_unit();
  if (!unit) return {Verdict3::open("base has no order unit for the bounding step"), zc};

  // Proof recipe: bound the predecessor by N copies of the unit class, then
  // complement pointwise so that N*1 sits between x' + w and x + w.
  ScalarVec wv(v.size(), ExtScalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_infinite()) continue;
    Rat need = Rat(bound) - v[i].finite_value();
    if (need > Rat(0)) wv[i] = ExtScalar(need);
  }
  std::string wtext = format_scalars(wv);
  const VectorModel* base = as_vm(c.base());
  FormalDifference z = c.canonical_pair(
      FormalDifference{base->make(std::move(wv)), c.base()->nsum(*unit, bound)});
  if (!member(z)) return {Verdict3::open("the recipe leaves the kernel under this rank"), z};

  bool ok = c.below(c.add(xp, z), zc).is_true() && c.below(zc, c.add(x, z)).is_true();
  if (ok && moreover) ok = c.below(moreover->first, z).is_true();
  if (!ok) return {Verdict3::no("complement candidate fails its defining inequalities"), z};
  std::string detail =
      "z = w - " + std::to_string(bound) + "*1 with complement w = " + wtext;
  if (moreover) detail += "; dominates y'";
  return {Verdict3::yes(std::move(detail), {z.x, z.e}), z};
}

AuditReport check_weak_cancellation(const AugmentedModel& m, const Window& w) {
  AuditReport rep;
  rep.subject = "weak-cancellation over " + kernel_name(m);
  rep.window = w;
  std::vector<FormalDifference> W = m.window_members(w.bound);
  const CcModel& c = m.cc();
  PredicateResult r = pred("weak-cancellation");
  sweep_tuples(W.size(), 3, w.seed ^ 0x51, [&](const std::vector<std::size_t>& ix) {
    const FormalDifference &a = W[ix[0]], &b = W[ix[1]], &z = W[ix[2]];
    if (!c.way_below(c.add(a, z), c.add(b, z)).is_true()) return true;
    ++r.samples;
    if (!c.below(a, b).is_false()) return true;
    r.verdict = Verdict::Fail;
    r.witness = "x = " + class_str(a) + ", y = " + class_str(b) + ", z = " + class_str(z);
    r.witness_elems = {a.x, a.e, b.x, b.e, z.x, z.e};
    return false;
  });
  rep.results.push_back(std::move(r));
  return rep;
}

AuditReport check_weak_cancellation(const ModelPtr& m, const Window& w) {
  AuditReport rep;
  rep.subject = "weak-cancellation over " + m->name();
  rep.window = w;
  std::vector<Element> W = m->window_elements(w.bound);
  PredicateResult r = pred("weak-cancellation");
  sweep_tuples(W.size(), 3, w.seed ^ 0x51, [&](const std::vector<std::size_t>& ix) {
    const Element &x = W[ix[0]], &y = W[ix[1]], &z = W[ix[2]];
    if (!m->way_below(m->add(x, z), m->add(y, z))) return true;
    ++r.samples;
    if (m->leq(x, y)) return true;
    r.verdict = Verdict::Fail;
    r.witness = "x = " + format_element(x) + ", y = " + format_element(y) +
                ", z = " + format_element(z);
    r.witness_elems = {x, y, z};
    return false;
  });
  rep.results.push_back(std::move(r));
  return rep;
}

CompactGroupReport compact_group(const AugmentedModel& m, const Window& w,
                                 const std::optional<K0Data>& k0) {
  CompactGroupReport out;
  const CcModel& c = m.cc();
  out.audit.subject = "compact-group over " + kernel_name(m);
  out.audit.window = w;
  FormalDifference zc = c.pair_of(c.base()->zero());

  std::vector<FormalDifference> W = m.window_members(w.bound);
  for (const FormalDifference& d : W)
    if (c.way_below(d, d).is_true()) out.compact_classes.push_back(d);
  const std::vector<FormalDifference>& C = out.compact_classes;
  out.group_rank = m.kernel_view() ? m.kernel_view()->dims() -
                                         static_cast<int>(m.kernel_view()->zero_coords().size())
                                   : -1;

  PredicateResult rc = pred("compact-cancellation");
  sweep_tuples(C.size(), 3, w.seed ^ 0x52, [&](const std::vector<std::size_t>& ix) {
    const FormalDifference &a = C[ix[0]], &b = C[ix[1]], &z = C[ix[2]];
    if (!c.eq(c.add(a, z), c.add(b, z)).is_true()) return true;
    ++rc.samples;
    if (!c.eq(a, b).is_false()) return true;
    rc.verdict = Verdict::Fail;
    rc.witness = "x = " + class_str(a) + ", y = " + class_str(b) + ", z = " + class_str(z);
    rc.witness_elems = {a.x, a.e, b.x, b.e, z.x, z.e};
    return false;
  });
  out.audit.results.push_back(std::move(rc));

  PredicateResult ri = pred("compact-inverses");
  for (const FormalDifference& d : C) {
    ++ri.samples;
    FindResult fc = m.find_complement(d, d);
    bool ok = fc.verdict.is_true() && c.eq(c.add(d, fc.z), zc).is_true() &&
              c.way_below(fc.z, fc.z).is_true();
    if (ok) continue;
    ri.verdict = Verdict::Fail;
    ri.witness = "x = " + class_str(d) + ": " + fc.verdict.detail;
    ri.witness_elems = {d.x, d.e};
    break;
  }
  out.audit.results.push_back(std::move(ri));

  PredicateResult rs = pred("summand-closed");
  sweep_tuples(W.size(), 2, w.seed ^ 0x53, [&](const std::vector<std::size_t>& ix) {
    const FormalDifference &a = W[ix[0]], &b = W[ix[1]];
    FormalDifference s = c.add(a, b);
    if (!c.way_below(s, s).is_true()) return true;
    ++rs.samples;
    if (c.way_below(a, a).is_true() && c.way_below(b, b).is_true()) return true;
    rs.verdict = Verdict::Fail;
    rs.witness = "x = " + class_str(a) + ", y = " + class_str(b);
    rs.witness_elems = {a.x, a.e, b.x, b.e};
    return false;
  });
  out.audit.results.push_back(std::move(rs));

  if (k0) {
    PredicateResult rk = pred("k0-iso");
    if (!m.kernel_view()) {
      rk.verdict = Verdict::Unknown;
      rk.note = "no pinned kernel view to compare against";
    } else if (k0->rank != out.group_rank) {
      rk.verdict = Verdict::Fail;
      rk.witness = "supplied rank " + std::to_string(k0->rank) + ", kernel rank " +
                   std::to_string(out.group_rank);
    } else {
      const auto& zeros = m.kernel_view()->zero_coords();
      for (const FormalDifference& d : C) {
        ScalarVec v = c.class_vector(d)->scalars();
        std::vector<long long> fv;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (std::find(zeros.begin(), zeros.end(), static_cast<int>(i)) != zeros.end()) continue;
          fv.push_back(v[i].finite_value().num());
        }
        ++rk.samples;
        bool model_pos = c.below(zc, d).is_true();
        if (model_pos == k0->positive(fv)) continue;
        rk.verdict = Verdict::Fail;
        rk.witness = "order disagrees at " + class_str(d);
        rk.witness_elems = {d.x, d.e};
        rk.aux = fv;
        break;
      }
    }
    out.audit.results.push_back(std::move(rk));
  }
  return out;
}

CompactGroupReport compact_group(const ModelPtr& m, const Window& w,
                                 const std::optional<K0Data>& k0) {
  CompactGroupReport out;
  out.audit.subject = "compact-group over " + m->name();
  out.audit.window = w;
  const Element zero = m->zero();
  auto eq = [&](const Element& a, const Element& b) { return m->leq(a, b) && m->leq(b, a); };

  out.compact_elements = m->compact_window(w.bound);
  const std::vector<Element>& C = out.compact_elements;
  auto glued = std::dynamic_pointer_cast<const GluedModel>(m);
  out.group_rank = glued ? glued->comp_rank() : -1;

  PredicateResult rc = pred("compact-cancellation");
  sweep_tuples(C.size(), 3, w.seed ^ 0x52, [&](const std::vector<std::size_t>& ix) {
    const Element &a = C[ix[0]], &b = C[ix[1]], &z = C[ix[2]];
    if (!eq(m->add(a, z), m->add(b, z))) return true;
    ++rc.samples;
    if (eq(a, b)) return true;
    rc.verdict = Verdict::Fail;
    rc.witness = "x = " + format_element(a) + ", y = " + format_element(b) +
                 ", z = " + format_element(z);
    rc.witness_elems = {a, b, z};
    return false;
  });
  out.audit.results.push_back(std::move(rc));

  PredicateResult ri = pred("compact-inverses");
  for (const Element& x : C) {
    ++ri.samples;
    bool found = false;
    for (const Element& z : C)
      if (eq(m->add(x, z), zero)) {
        found = true;
        break;
      }
    if (found) continue;
    ri.verdict = Verdict::Fail;
    ri.witness = "no window inverse for " + format_element(x);
    ri.witness_elems = {x};
    break;
  }
  out.audit.results.push_back(std::move(ri));

  PredicateResult rs = pred("summand-closed");
  std::vector<Element> W = m->window_elements(w.bound);
  sweep_tuples(W.size(), 2, w.seed ^ 0x53, [&](const std::vector<std::size_t>& ix) {
    const Element &a = W[ix[0]], &b = W[ix[1]];
    Element s = m->add(a, b);
    if (!m->way_below(s, s)) return true;
    ++rs.samples;
    if (m->way_below(a, a) && m->way_below(b, b)) return true;
    rs.verdict = Verdict::Fail;
    rs.witness = "x = " + format_element(a) + ", y = " + format_element(b);
    rs.witness_elems = {a, b};
    return false;
  });
  out.audit.results.push_back(std::move(rs));

  if (k0) {
    PredicateResult rk = pred("k0-iso");
    if (!glued) {
      rk.verdict = Verdict::Unknown;
      rk.note = "no compact coordinate data on this carrier";
    } else if (k0->rank != out.group_rank) {
      rk.verdict = Verdict::Fail;
      rk.witness = "supplied rank " + std::to_string(k0->rank) + ", compact rank " +
                   std::to_string(out.group_rank);
    } else {
      for (const Element& x : C) {
        ++rk.samples;
        bool model_pos = m->leq(zero, x);
        if (model_pos == k0->positive(x.glued().comp)) continue;
        rk.verdict = Verdict::Fail;
        rk.witness = "order disagrees at " + format_element(x);
        rk.witness_elems = {x};
        rk.aux = x.glued().comp;
        break;
      }
    }
    out.audit.results.push_back(std::move(rk));
  }
  return out;
}

SoftReport classify_soft_compact(const ModelPtr& m, const Element& x, const Window& w) {
  const Element zero = m->zero();
  std::vector<Element> W = m->window_elements(w.bound);
  for (const Element& e : W) {
    if (!m->leq(zero, e) || m->leq(e, zero)) continue;
    if (is_full(*m, e) == Verdict::Fail)
      throw std::invalid_argument("classify_soft_compact needs a simple carrier: " +
                                  format_element(e) + " is not full");
  }

  if (m->way_below(x, x)) return {SoftKind::Compact, "way below itself", {x}};

  std::vector<Element> preds;
  for (const Element& e : W)
    if (m->way_below(e, x)) preds.push_back(e);
  SoftReport out;
  auto gm = std::dynamic_pointer_cast<const GluedModel>(m);
  for (const Element& p : preds) {
    bool found = false;
    auto accept = [&](const Element& z) {
      if (!m->leq(zero, z) || m->leq(z, zero)) return false;
      if (!m->leq(m->add(p, z), x)) return false;
      found = true;
      if (out.witness.size() < 2) out.witness.push_back(z);
      return true;
    };
    if (gm) {
      // Glued carriers admit an exact ray gap; the window only samples it.
      ScalarVec hx = gm->hat(x), hp = gm->hat(p);
      ScalarVec gap(hx.size(), ExtScalar(0));
      bool defined = true;
      for (std::size_t i = 0; i < hx.size(); ++i) {
        if (hx[i].is_infinite())
          gap[i] = ExtScalar::infinity();
        else if (hp[i].is_infinite())
          defined = false;
        else
          gap[i] = hx[i] - hp[i];
      }
      if (defined) accept(gm->soft(gap));
    }
    if (!found)
      for (const Element& z : W)
        if (accept(z)) break;
    if (!found)
      return {SoftKind::Undecided,
              "no nonzero positive window complement above predecessor " + format_element(p),
              {p}};
  }
  out.kind = SoftKind::Soft;
  out.detail = preds.empty()
                   ? "no window predecessors; the softness condition is vacuous here"
                   : std::to_string(preds.size()) +
                         " window predecessors admit nonzero positive complements";
  return out;
}

FullComparisonResult full_comparison(const ModelPtr& m, const Element& xp, const Element& x,
                                     const Element& y, const Element& z, const Window& w) {
  if (!m->way_below(xp, x))
    throw std::invalid_argument("full_comparison needs x' way below x");
  if (is_full(*m, z) == Verdict::Fail)
    throw std::invalid_argument("full_comparison needs a full z: " + format_element(z));
  std::string note =
      is_full(*m, z) == Verdict::Unknown ? "; fullness of z undecided on this window" : "";

  std::vector<Element> cands;
  for (const Element& e : m->window_elements(w.bound))
    if (m->way_below(e, y)) cands.push_back(e);

  FullComparisonResult out;
  for (long long n = 0; n <= w.kmax; ++n) {
    Element nz = m->nsum(z, n);
    Element lhs = m->add(xp, nz);
    for (const Element& yp : cands) {
      if (!m->leq(lhs, m->add(yp, nz))) continue;
      out.n = n;
      out.yp = yp;
      out.verdict = Verdict3::yes(
          "n = " + std::to_string(n) + " with y' = " + format_element(yp) + note, {yp});
      return out;
    }
  }
  out.verdict = Verdict3::open("no (n, y') pair within the window (kmax = " +
                               std::to_string(w.kmax) + ")");
  return out;
}

AuditReport verify_exact_sequence(const CuMap& inc, const CuMap& quo, const Window& w) {
  if (inc.target->sig() != quo.source->sig())
    throw std::invalid_argument("the inclusion target must be the quotient source");
  AuditReport rep;
  rep.subject = inc.name + " / " + quo.name;
  rep.window = w;

  std::vector<Element> srcw = inc.source->window_elements(w.bound);
  std::vector<Element> midw = quo.source->window_elements(w.bound);
  std::vector<Element> qtw = quo.target->window_elements(w.bound);
  const Element qzero = quo.target->zero();

  PredicateResult r0 = pred("composite-zero");
  for (const Element& s : srcw) {
    ++r0.samples;
    Element t = quo.apply(inc.apply(s));
    if (t == qzero) continue;
    r0.verdict = Verdict::Fail;
    r0.witness = "composite at " + format_element(s) + " is " + format_element(t);
    r0.witness_elems = {s};
    break;
  }
  rep.results.push_back(std::move(r0));

  std::vector<Element> image;
  image.reserve(srcw.size());
  for (const Element& s : srcw) image.push_back(inc.apply(s));

  PredicateResult r1 = pred("im-equals-ker");
  for (const Element& t : midw) {
    if (!(quo.apply(t) == qzero)) continue;
    ++r1.samples;
    if (std::find(image.begin(), image.end(), t) != image.end()) continue;
    r1.verdict = Verdict::Fail;
    r1.witness = "kernel class " + format_element(t) + " has no preimage";
    r1.witness_elems = {t};
    r1.aux = {w.bound};
    break;
  }
  rep.results.push_back(std::move(r1));

  PredicateResult r2 = pred("order-embedding");
  sweep_tuples(srcw.size(), 2, w.seed ^ 0x55, [&](const std::vector<std::size_t>& ix) {
    const Element &a = srcw[ix[0]], &b = srcw[ix[1]];
    ++r2.samples;
    if (inc.source->leq(a, b) == inc.target->leq(inc.apply(a), inc.apply(b))) return true;
    r2.verdict = Verdict::Fail;
    r2.witness = "order disagrees at a = " + format_element(a) + ", b = " + format_element(b);
    r2.witness_elems = {a, b};
    return false;
  });
  rep.results.push_back(std::move(r2));

  PredicateResult r3 = pred("quotient-surjective");
  for (const Element& u : qtw) {
    ++r3.samples;
    bool hit = false;
    for (const Element& t : midw)
      if (quo.apply(t) == u) {
        hit = true;
        break;
      }
    if (hit) continue;
    r3.verdict = Verdict::Fail;
    r3.witness = "no window preimage of " + format_element(u);
    r3.witness_elems = {u};
    r3.aux = {w.bound};
    break;
  }
  rep.results.push_back(std::move(r3));
  return rep;
}

IsoResult direct_sum_iso(const VectorModelPtr& a, const VectorModelPtr& b, const Window& w) {
  VectorModelPtr src = VectorModel::direct_sum(a, b);
  std::vector<int> freeidx;
  std::vector<CoordKind> kinds;
  for (int i = 0; i < src->dims(); ++i) {
    if (std::find(src->zero_coords().begin(), src->zero_coords().end(), i) !=
        src->zero_coords().end())
      continue;
    freeidx.push_back(i);
    kinds.push_back(src->kinds()[static_cast<std::size_t>(i)]);
  }
  auto tgt = std::make_shared<VectorModel>(
      kinds, std::vector<std::pair<int, int>>{}, std::vector<int>{}, std::nullopt,
      "J:[" + a->sig() + "+" + b->sig() + "]", "joint(" + a->name() + "," + b->name() + ")");
  std::vector<std::vector<long long>> rows(freeidx.size(),
                                           std::vector<long long>(src->dims(), 0));
  for (std::size_t r = 0; r < freeidx.size(); ++r) rows[r][static_cast<std::size_t>(freeidx[r])] = 1;
  CuMap g = matrix_map(src, tgt, rows, "sum-embedding(" + a->name() + "," + b->name() + ")");

  AuditReport rep = audit_morphism(g, w);
  std::vector<Element> srcw = src->window_elements(w.bound);
  std::vector<Element> tgtw = tgt->window_elements(w.bound);

  PredicateResult rb = pred("window-bijection");
  std::set<std::string> seen;
  for (const Element& s : srcw) {
    ++rb.samples;
    Element t = g.apply(s);
    if (seen.insert(format_element(t)).second) continue;
    rb.verdict = Verdict::Fail;
    rb.witness = "image collision at " + format_element(s);
    rb.witness_elems = {s};
    break;
  }
  if (rb.verdict == Verdict::Pass && seen.size() != tgtw.size()) {
    rb.verdict = Verdict::Fail;
    rb.witness = "image covers " + std::to_string(seen.size()) + " of " +
                 std::to_string(tgtw.size()) + " window classes";
  }
  rep.results.push_back(std::move(rb));

  PredicateResult ro = pred("order-iso");
  sweep_tuples(srcw.size(), 2, w.seed ^ 0x56, [&](const std::vector<std::size_t>& ix) {
    const Element &p = srcw[ix[0]], &q = srcw[ix[1]];
    ++ro.samples;
    if (src->leq(p, q) == tgt->leq(g.apply(p), g.apply(q))) return true;
    ro.verdict = Verdict::Fail;
    ro.witness = "order disagrees at a = " + format_element(p) + ", b = " + format_element(q);
    ro.witness_elems = {p, q};
    return false;
  });
  rep.results.push_back(std::move(ro));
  return {std::move(g), std::move(rep)};
}

bool reevaluate(const AugmentedModel& m, const PredicateResult& r) {
  const auto& e = r.witness_elems;
  const CcModel& c = m.cc();
  auto fd = [&](std::size_t i) { return FormalDifference{e[i], e[i + 1]}; };
  if (r.predicate == "weak-cancellation") {
    FormalDifference a = fd(0), b = fd(2), z = fd(4);
    return c.way_below(c.add(a, z), c.add(b, z)).is_true() && c.below(a, b).is_false();
  }
  if (r.predicate == "compact-cancellation") {
    FormalDifference a = fd(0), b = fd(2), z = fd(4);
    return c.eq(c.add(a, z), c.add(b, z)).is_true() && c.eq(a, b).is_false();
  }
  if (r.predicate == "compact-inverses") {
    FormalDifference d = fd(0);
    FormalDifference zc = c.pair_of(c.base()->zero());
    FindResult fc = m.find_complement(d, d);
    return !(fc.verdict.is_true() && c.eq(c.add(d, fc.z), zc).is_true() &&
             c.way_below(fc.z, fc.z).is_true());
  }
  if (r.predicate == "summand-closed") {
    FormalDifference a = fd(0), b = fd(2);
    FormalDifference s = c.add(a, b);
    return c.way_below(s, s).is_true() &&
           !(c.way_below(a, a).is_true() && c.way_below(b, b).is_true());
  }
  throw std::invalid_argument("no reevaluation rule for predicate " + r.predicate);
}

bool reevaluate(const AugmentedModel& m, const PredicateResult& r, const K0Data& k0) {
  if (r.predicate != "k0-iso")
    throw std::invalid_argument("no reevaluation rule for predicate " + r.predicate);
  if (r.witness_elems.empty()) return true;  // rank mismatch claims carry no elements
  FormalDifference d{r.witness_elems[0], r.witness_elems[1]};
  FormalDifference zc = m.cc().pair_of(m.cc().base()->zero());
  bool model_pos = m.cc().below(zc, d).is_true();
  return model_pos != k0.positive(r.aux);
}

bool reevaluate(const CuMap& inc, const CuMap& quo, const PredicateResult& r) {
  const auto& e = r.witness_elems;
  const Element qzero = quo.target->zero();
  if (r.predicate == "composite-zero") return !(quo.apply(inc.apply(e[0])) == qzero);
  if (r.predicate == "im-equals-ker") {
    if (!(quo.apply(e[0]) == qzero)) return false;
    for (const Element& s : inc.source->window_elements(static_cast<int>(r.aux[0])))
      if (inc.apply(s) == e[0]) return false;
    return true;
  }
  if (r.predicate == "order-embedding")
    return inc.source->leq(e[0], e[1]) != inc.target->leq(inc.apply(e[0]), inc.apply(e[1]));
  if (r.predicate == "quotient-surjective") {
    for (const Element& t : quo.source->window_elements(static_cast<int>(r.aux[0])))
      if (quo.apply(t) == e[0]) return false;
    return true;
  }
  throw std::invalid_argument("no reevaluation rule for predicate " + r.predicate);
}

}  // namespace cusemi
