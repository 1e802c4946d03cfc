#include "cusemi/functionals.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "cusemi/element.hpp"
#include "cusemi/vector_model.hpp"

namespace cusemi {

namespace {

void check_weights(const Functional& f) {
  for (const ExtScalar& w : f.weights)
    if (w < ExtScalar(0))
      throw std::invalid_argument(f.name + ": functional weights must be nonnegative");
}

ExtScalar weighted_sum(const ScalarVec& w, const ScalarVec& v) {
  ExtScalar total(0);
  for (std::size_t i = 0; i < w.size(); ++i) total = total + ExtScalar::weighted(w[i], v[i]);
  return total;
}

FormalDifference zero_class(const AugmentedModel& aug) {
  return aug.cc().pair_of(aug.cc().base()->zero());
}

Element view_elem(const AugmentedModel& aug, const FormalDifference& d) {
  std::optional<Element> e = aug.cc().class_vector(d);
  if (!e) throw std::invalid_argument("class has no difference vector");
  return *e;
}

/// The all-ones kernel class, when the kernel view names one.
std::optional<FormalDifference> unit_class(const AugmentedModel& aug) {
  const VectorModelPtr& kv = aug.kernel_view();
  if (!kv) return std::nullopt;
  std::optional<Element> u = kv->order_unit();
  if (!u) return std::nullopt;
  return aug.class_from_vector(u->scalars());
}

PredicateResult pred(std::string name) {
  PredicateResult r;
  r.predicate = std::move(name);
  return r;
}

/// liminf/limsup of the sequence at one point, exact by the tail rule.
std::pair<ExtScalar, ExtScalar> tail_bounds(
    const FunctionalSequence& seq, const std::function<ExtScalar(const Functional&)>& value) {
  if (seq.terms.empty()) throw std::invalid_argument(seq.name + ": no terms");
  switch (seq.tail) {
    case TailRule::Constant: {
      ExtScalar v = value(seq.terms.back());
      return {v, v};
    }
    case TailRule::Limit: {
      if (!seq.limit) throw std::invalid_argument(seq.name + ": limit tail without a limit");
      ExtScalar v = value(*seq.limit);
      return {v, v};
    }
    case TailRule::Periodic: {
      if (seq.period < 1 || static_cast<std::size_t>(seq.period) > seq.terms.size())
        throw std::invalid_argument(seq.name + ": period outside the term list");
      std::size_t start = seq.terms.size() - static_cast<std::size_t>(seq.period);
      ExtScalar lo = value(seq.terms[start]);
      ExtScalar hi = lo;
      for (std::size_t i = start + 1; i < seq.terms.size(); ++i) {
        ExtScalar v = value(seq.terms[i]);
        lo = ExtScalar::min(lo, v);
        hi = ExtScalar::max(hi, v);
      }
      return {lo, hi};
    }
  }
  throw std::logic_error("unreachable tail rule");
}

}  // namespace

ExtScalar evaluate(const Functional& f, const ModelPtr& m, const Element& x) {
  check_weights(f);
  std::optional<ScalarVec> coords = m->functional_coords(x);
  if (!coords)
    throw std::invalid_argument("carrier " + m->sig() + " exposes no functional coordinates");
  if (coords->size() != f.weights.size())
    throw std::invalid_argument(f.name + ": " + std::to_string(f.weights.size()) +
                                " weights against " + std::to_string(coords->size()) +
                                " coordinates");
  if (!m->leq(m->zero(), x))
    throw std::invalid_argument("evaluate needs a positive element; extend handles " +
                                format_element(x));
  return weighted_sum(f.weights, *coords);
}

ExtScalar evaluate(const Functional& f, const AugmentedModel& aug, const FormalDifference& d) {
  check_weights(f);
  Element cv = view_elem(aug, d);
  if (cv.scalars().size() != f.weights.size())
    throw std::invalid_argument(f.name + ": " + std::to_string(f.weights.size()) +
                                " weights against " + std::to_string(cv.scalars().size()) +
                                " class coordinates");
  if (!aug.below(zero_class(aug), d).is_true())
    throw std::invalid_argument("evaluate needs a positive class; extend handles signed ones");
  return weighted_sum(f.weights, cv.scalars());
}

ExtendResult extend(const Functional& f, const AugmentedModel& aug, const FormalDifference& x) {
  check_weights(f);
  FindResult fr = aug.find_positive_absorber(x);
  if (!fr.verdict.is_true())
    return {Verdict3::open("no admissible absorber within the window"), {}};
  FormalDifference z1 = fr.z;
  ExtScalar lz1 = evaluate(f, aug, z1);
  if (lz1.is_infinite())
    return {Verdict3::open("the absorber has infinite value under " + f.name +
                           "; the extension needs dense finiteness there"),
            {}};
  ExtScalar v1 = evaluate(f, aug, aug.add(x, z1)) - lz1;

  std::vector<Element> wit{view_elem(aug, x), view_elem(aug, z1)};
  std::string detail = "no unit class available; one admissible absorber checked";
  std::optional<FormalDifference> u = unit_class(aug);
  if (u) {
    if (!aug.way_below(z1, aug.add(z1, *u)).is_true())
      return {Verdict3::open("the absorber is not way below its unit bump; outside the "
                             "admissible set"),
              {}};
    FormalDifference z2 = aug.add(z1, *u);
    ExtScalar lz2 = evaluate(f, aug, z2);
    if (lz2.is_infinite()) {
      detail = "the second absorber has infinite value; one admissible absorber checked";
    } else {
      ExtScalar v2 = evaluate(f, aug, aug.add(x, z2)) - lz2;
      wit.push_back(view_elem(aug, z2));
      if (v1 != v2)
        return {Verdict3::no("absorbers disagree: " + v1.str() + " via z against " + v2.str() +
                                 " via z + unit",
                             wit),
                {}};
      detail = "absorber-independent across z and z + unit";
    }
  }
  if (aug.below(zero_class(aug), x).is_true()) {
    ExtScalar direct = evaluate(f, aug, x);
    if (direct != v1)
      return {Verdict3::no("direct value " + direct.str() + " differs from the extension " +
                               v1.str(),
                           wit),
              {}};
  }
  return {Verdict3::yes("lambda(x+z) - lambda(z) = " + v1.str() + "; " + detail, wit), v1};
}

ExtendResult extend(const Functional& f, const ModelPtr& m, const Element& x) {
  check_weights(f);
  if (m->leq(m->zero(), x))
    return {Verdict3::yes("positive element; z = 0", {x}), evaluate(f, m, x)};
  std::optional<Element> z = m->positive_absorber(x);
  if (!z)
    return {Verdict3::open("carrier provides no absorber for " + format_element(x)), {}};
  ExtScalar lz = evaluate(f, m, *z);
  if (lz.is_infinite())
    return {Verdict3::open("the absorber has infinite value under " + f.name), {}};
  ExtScalar v1 = evaluate(f, m, m->add(x, *z)) - lz;
  Element z2 = m->add(*z, *z);
  std::string detail = "the doubled absorber has infinite value; one absorber checked";
  std::vector<Element> wit{x, *z};
  ExtScalar lz2 = evaluate(f, m, z2);
  if (!lz2.is_infinite()) {
    ExtScalar v2 = evaluate(f, m, m->add(x, z2)) - lz2;
    wit.push_back(z2);
    if (v1 != v2)
      return {Verdict3::no("absorbers disagree: " + v1.str() + " via z against " + v2.str() +
                               " via 2z",
                           wit),
              {}};
    detail = "absorber-independent across z and 2z";
  }
  return {Verdict3::yes("lambda(x+z) - lambda(z) = " + v1.str() + "; " + detail, wit), v1};
}

ScalarVec hat_vector(const std::vector<Functional>& rays, const AugmentedModel& aug,
                     const FormalDifference& d) {
  ScalarVec out;
  out.reserve(rays.size());
  for (const Functional& r : rays) {
    ExtendResult e = extend(r, aug, d);
    if (!e.verdict.is_true())
      throw std::invalid_argument("pairing against " + r.name +
                                  " is undefined: " + e.verdict.detail);
    out.push_back(e.value);
  }
  return out;
}

ScalarVec hat_vector(const std::vector<Functional>& rays, const ModelPtr& m, const Element& x) {
  ScalarVec out;
  out.reserve(rays.size());
  for (const Functional& r : rays) {
    ExtendResult e = extend(r, m, x);
    if (!e.verdict.is_true())
      throw std::invalid_argument("pairing against " + r.name +
                                  " is undefined: " + e.verdict.detail);
    out.push_back(e.value);
  }
  return out;
}

FactorResult factor_check(const Functional& f, const AugmentedModel& aug, const Element& full_z,
                          const Window& w) {
  check_weights(f);
  const ModelPtr& base = aug.cc().base();
  if (is_full(*base, full_z) == Verdict::Fail)
    throw std::invalid_argument("factor_check needs a full element, got " +
                                format_element(full_z));
  if (evaluate(f, base, full_z).is_infinite())
    throw std::invalid_argument(f.name + " is infinite on the full element; it cannot descend");

  // The pairing hypothesis: a full order unit whose multiples exhaust the base.
  std::optional<Element> u = base->order_unit();
  if (!u || is_full(*base, *u) == Verdict::Fail)
    return {Verdict3::open("no full order unit; the pairing hypothesis fails on this base"),
            std::nullopt};
  const VectorModelPtr& kv = aug.kernel_view();
  if (!kv)
    return {Verdict3::open("no kernel view; classes cannot be rank-stripped"), std::nullopt};

  std::vector<int> pins = kv->zero_coords();
  auto strip = [&](const Element& e) {
    ScalarVec v = e.scalars();
    for (int p : pins) v[static_cast<std::size_t>(p)] = ExtScalar(0);
    return aug.class_from_vector(std::move(v));
  };

  std::vector<Element> pos;
  for (const Element& e : base->window_elements(w.bound))
    if (base->leq(base->zero(), e)) pos.push_back(e);
  long long checked = 0;
  for (const Element& x : pos)
    for (const Element& y : pos) {
      if (!aug.below(strip(x), strip(y)).is_true()) continue;
      ++checked;
      ExtScalar vx = evaluate(f, base, x);
      ExtScalar vy = evaluate(f, base, y);
      if (!(vx <= vy))
        return {Verdict3::no(f.name + " does not descend along q: the classes compare but " +
                                 vx.str() + " > " + vy.str(),
                             {x, y}),
                std::nullopt};
    }

  Functional down = f;
  for (int p : pins) down.weights[static_cast<std::size_t>(p)] = ExtScalar(0);
  down.name = f.name + "~";
  return {Verdict3::yes(std::to_string(checked) + " comparable pairs of " +
                        std::to_string(pos.size()) + " window positives checked"),
          std::move(down)};
}

ExtendResult pairing(const FactorResult& fr, const AugmentedModel& aug,
                     const FormalDifference& x) {
  if (!fr.verdict.is_true() || !fr.factored)
    throw std::invalid_argument("pairing needs a descended functional: " + fr.verdict.detail);
  return extend(*fr.factored, aug, x);
}

AuditReport audit_functional(const Functional& f, const AugmentedModel& aug, const Window& w) {
  check_weights(f);
  AuditReport rep;
  rep.subject = f.name + " on " +
                (aug.kernel_view() ? aug.kernel_view()->sig() : aug.cc().view()->sig());
  rep.window = w;

  std::vector<FormalDifference> members = aug.window_members(w.bound);

  {
    PredicateResult r = pred("densely-finite");
    bool undecided = false;
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < members.size() && !bad; ++i) {
      std::optional<std::size_t> bound;
      for (std::size_t j = 0; j < members.size(); ++j)
        if (aug.way_below(members[i], members[j]).is_true()) {
          bound = j;
          break;
        }
      if (!bound) continue;
      ExtendResult e = extend(f, aug, members[i]);
      if (!e.verdict.is_true()) {
        undecided = true;
        r.note = e.verdict.detail;
        continue;
      }
      ++r.samples;
      if (e.value.is_infinite()) bad = {i, *bound};
    }
    if (f.densely_finite) {
      if (bad) {
        r.verdict = Verdict::Fail;
        r.witness = "infinite value on a way-below-bounded class";
        r.witness_elems = {view_elem(aug, members[bad->first]),
                           view_elem(aug, members[bad->second])};
      } else if (undecided) {
        r.verdict = Verdict::Unknown;
      }
    } else {
      if (bad) {
        r.note = "declared not densely finite; the window confirms it";
        r.witness_elems = {view_elem(aug, members[bad->first]),
                           view_elem(aug, members[bad->second])};
      } else {
        r.verdict = Verdict::Unknown;
        r.note = "declared not densely finite, but no window class witnesses it";
      }
    }
    rep.results.push_back(std::move(r));
  }

  {
    PredicateResult r = pred("absorber-independent");
    for (const FormalDifference& x : members) {
      ExtendResult e = extend(f, aug, x);
      if (e.verdict.is_false()) {
        r.verdict = Verdict::Fail;
        r.witness = e.verdict.detail;
        r.witness_elems = e.verdict.witness;
        break;
      }
      if (e.verdict.is_unknown()) {
        r.verdict = Verdict::Unknown;
        r.note = e.verdict.detail;
        continue;
      }
      ++r.samples;
    }
    rep.results.push_back(std::move(r));
  }

  // extend is deterministic, so values can be memoized by canonical class
  // vector; the pair sweeps below would otherwise re-run the absorber search
  // quadratically often.
  std::unordered_map<std::string, std::optional<ExtScalar>> value_cache;
  auto value_of = [&](const FormalDifference& d) -> std::optional<ExtScalar> {
    std::string key;
    if (std::optional<Element> e = aug.cc().class_vector(d)) key = format_element(*e);
    if (!key.empty()) {
      auto it = value_cache.find(key);
      if (it != value_cache.end()) return it->second;
    }
    ExtendResult e = extend(f, aug, d);
    std::optional<ExtScalar> v =
        e.verdict.is_true() ? std::optional<ExtScalar>(e.value) : std::nullopt;
    if (!key.empty()) value_cache.emplace(std::move(key), v);
    return v;
  };

  {
    PredicateResult r = pred("extension-additive");
    for (std::size_t i = 0; i < members.size() && r.verdict == Verdict::Pass; ++i)
      for (std::size_t j = i; j < members.size(); ++j) {
        std::optional<ExtScalar> vx = value_of(members[i]);
        std::optional<ExtScalar> vy = value_of(members[j]);
        std::optional<ExtScalar> vs = value_of(aug.add(members[i], members[j]));
        if (!vx || !vy || !vs) {
          r.verdict = Verdict::Unknown;
          r.note = "an extension was undecided on this window";
          break;
        }
        ++r.samples;
        if (*vs != *vx + *vy) {
          r.verdict = Verdict::Fail;
          r.witness = "lambda(x+y) = " + vs->str() + " against " + vx->str() + " + " + vy->str();
          r.witness_elems = {view_elem(aug, members[i]), view_elem(aug, members[j])};
          break;
        }
      }
    rep.results.push_back(std::move(r));
  }

  {
    PredicateResult r = pred("extension-monotone");
    for (std::size_t i = 0; i < members.size() && r.verdict == Verdict::Pass; ++i)
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!aug.below(members[i], members[j]).is_true()) continue;
        std::optional<ExtScalar> vx = value_of(members[i]);
        std::optional<ExtScalar> vy = value_of(members[j]);
        if (!vx || !vy) {
          r.verdict = Verdict::Unknown;
          r.note = "an extension was undecided on this window";
          break;
        }
        ++r.samples;
        if (!(*vx <= *vy)) {
          r.verdict = Verdict::Fail;
          r.witness = vx->str() + " > " + vy->str() + " across a below pair";
          r.witness_elems = {view_elem(aug, members[i]), view_elem(aug, members[j])};
          break;
        }
      }
    rep.results.push_back(std::move(r));
  }

  {
    PredicateResult r = pred("extension-sup-preserving");
    std::optional<FormalDifference> u = unit_class(aug);
    if (!u) {
      r.verdict = Verdict::Unknown;
      r.note = "no unit class; no chains to drive";
    } else {
      ExtScalar step = evaluate(f, aug, *u);
      for (const FormalDifference& x : members) {
        CcChain chain;
        chain.prefix = {x, aug.add(x, *u), aug.add(aug.add(x, *u), *u)};
        std::optional<ExtScalar> vlast = value_of(chain.prefix.back());
        if (!vlast) {
          r.verdict = Verdict::Unknown;
          r.note = "an extension was undecided on this window";
          break;
        }
        for (bool tail : {false, true}) {
          chain.increasing_tail = tail;
          CcSupResult s = aug.sup(chain);
          if (!s.verdict.is_true()) {
            r.verdict = Verdict::Unknown;
            r.note = s.verdict.detail;
            break;
          }
          std::optional<ExtScalar> vsup = value_of(s.sup);
          if (!vsup) {
            r.verdict = Verdict::Unknown;
            r.note = "an extension was undecided on this window";
            break;
          }
          ExtScalar expected =
              tail && step > ExtScalar(0) ? ExtScalar::infinity() : *vlast;
          ++r.samples;
          if (*vsup != expected) {
            r.verdict = Verdict::Fail;
            r.witness = "lambda(sup) = " + vsup->str() + " against the chain limit " +
                        expected.str();
            r.witness_elems = {view_elem(aug, x), view_elem(aug, *u), view_elem(aug, s.sup)};
            r.aux = {tail ? 1LL : 0LL};
            break;
          }
        }
        if (r.verdict != Verdict::Pass) break;
      }
    }
    rep.results.push_back(std::move(r));
  }

  return rep;
}

AuditReport check_convergence(const FunctionalSequence& seq, const Functional& cand,
                              const ModelPtr& m, const Window& w) {
  check_weights(cand);
  for (const Functional& t : seq.terms) check_weights(t);
  AuditReport rep;
  rep.subject = seq.name + " -> " + cand.name + " on " + m->sig();
  rep.window = w;

  PredicateResult r = pred("functional-convergence");
  std::vector<Element> W = m->window_elements(w.bound);
  for (const Element& x : W) {
    if (!m->leq(m->zero(), x)) continue;
    for (const Element& y : W) {
      if (!m->way_below(x, y)) continue;
      auto at = [&](const Element& e) {
        return [&, e](const Functional& g) { return evaluate(g, m, e); };
      };
      auto [lo_x, hi_x] = tail_bounds(seq, at(x));
      auto [lo_y, hi_y] = tail_bounds(seq, at(y));
      (void)lo_x;
      (void)hi_y;
      ExtScalar cy = evaluate(cand, m, y);
      ++r.samples;
      if (!(hi_x <= cy)) {
        r.verdict = Verdict::Fail;
        r.witness = "limsup over the tail at x is " + hi_x.str() + " > lambda(y) = " + cy.str();
        r.witness_elems = {x, y};
        break;
      }
      if (!(cy <= lo_y)) {
        r.verdict = Verdict::Fail;
        r.witness = "lambda(y) = " + cy.str() + " > liminf over the tail at y, " + lo_y.str();
        r.witness_elems = {x, y};
        break;
      }
    }
    if (r.verdict != Verdict::Pass) break;
  }
  rep.results.push_back(std::move(r));
  return rep;
}

AuditReport check_convergence(const FunctionalSequence& seq, const Functional& cand,
                              const AugmentedModel& aug, const Window& w) {
  check_weights(cand);
  for (const Functional& t : seq.terms) check_weights(t);
  AuditReport rep;
  rep.subject = seq.name + " -> " + cand.name + " on " +
                (aug.kernel_view() ? aug.kernel_view()->sig() : aug.cc().view()->sig());
  rep.window = w;

  std::vector<FormalDifference> members = aug.window_members(w.bound);
  FormalDifference zero = zero_class(aug);

  auto bounds_at = [&](const FormalDifference& d) -> std::optional<std::pair<ExtScalar, ExtScalar>> {
    bool undecided = false;
    auto value = [&](const Functional& g) {
      ExtendResult e = extend(g, aug, d);
      if (!e.verdict.is_true()) {
        undecided = true;
        return ExtScalar(0);
      }
      return e.value;
    };
    auto b = tail_bounds(seq, value);
    if (undecided) return std::nullopt;
    return b;
  };

  PredicateResult conv = pred("functional-convergence");
  for (const FormalDifference& x : members) {
    if (!aug.below(zero, x).is_true()) continue;
    for (const FormalDifference& y : members) {
      if (!aug.way_below(x, y).is_true()) continue;
      auto bx = bounds_at(x);
      auto by = bounds_at(y);
      ExtendResult ey = extend(cand, aug, y);
      if (!bx || !by || !ey.verdict.is_true()) {
        conv.verdict = Verdict::Unknown;
        conv.note = "an extension was undecided on this window";
        break;
      }
      ++conv.samples;
      if (!(bx->second <= ey.value)) {
        conv.verdict = Verdict::Fail;
        conv.witness = "limsup over the tail at x is " + bx->second.str() +
                       " > lambda(y) = " + ey.value.str();
        conv.witness_elems = {view_elem(aug, x), view_elem(aug, y)};
        break;
      }
      if (!(ey.value <= by->first)) {
        conv.verdict = Verdict::Fail;
        conv.witness = "lambda(y) = " + ey.value.str() + " > liminf over the tail at y, " +
                       by->first.str();
        conv.witness_elems = {view_elem(aug, x), view_elem(aug, y)};
        break;
      }
    }
    if (conv.verdict != Verdict::Pass) break;
  }
  bool converged = conv.verdict == Verdict::Pass;
  rep.results.push_back(std::move(conv));

  PredicateResult lsc = pred("hat-lsc");
  if (!converged) {
    lsc.verdict = Verdict::Unknown;
    lsc.note = "the sequence does not converge to the candidate";
  } else {
    for (const FormalDifference& x : members) {
      auto bx = bounds_at(x);
      ExtendResult ex = extend(cand, aug, x);
      if (!bx || !ex.verdict.is_true()) {
        lsc.verdict = Verdict::Unknown;
        lsc.note = "an extension was undecided on this window";
        break;
      }
      ++lsc.samples;
      if (!(ex.value <= bx->first)) {
        lsc.verdict = Verdict::Fail;
        lsc.witness = "lambda(x) = " + ex.value.str() + " > liminf over the tail, " +
                      bx->first.str();
        lsc.witness_elems = {view_elem(aug, x)};
        break;
      }
    }
  }
  rep.results.push_back(std::move(lsc));
  return rep;
}

bool reevaluate(const Functional& f, const AugmentedModel& aug, const PredicateResult& r) {
  auto cls = [&](const Element& e) { return aug.class_from_vector(e.scalars()); };
  if (r.predicate == "densely-finite") {
    FormalDifference x = cls(r.witness_elems.at(0));
    FormalDifference y = cls(r.witness_elems.at(1));
    ExtendResult e = extend(f, aug, x);
    return aug.way_below(x, y).is_true() && e.verdict.is_true() && e.value.is_infinite();
  }
  if (r.predicate == "absorber-independent") {
    FormalDifference x = cls(r.witness_elems.at(0));
    FormalDifference z1 = cls(r.witness_elems.at(1));
    FormalDifference z2 = cls(r.witness_elems.at(2));
    ExtScalar v1 = evaluate(f, aug, aug.add(x, z1)) - evaluate(f, aug, z1);
    ExtScalar v2 = evaluate(f, aug, aug.add(x, z2)) - evaluate(f, aug, z2);
    return v1 != v2;
  }
  if (r.predicate == "extension-additive") {
    FormalDifference x = cls(r.witness_elems.at(0));
    FormalDifference y = cls(r.witness_elems.at(1));
    ExtendResult ex = extend(f, aug, x);
    ExtendResult ey = extend(f, aug, y);
    ExtendResult es = extend(f, aug, aug.add(x, y));
    return ex.verdict.is_true() && ey.verdict.is_true() && es.verdict.is_true() &&
           es.value != ex.value + ey.value;
  }
  if (r.predicate == "extension-monotone") {
    FormalDifference x = cls(r.witness_elems.at(0));
    FormalDifference y = cls(r.witness_elems.at(1));
    ExtendResult ex = extend(f, aug, x);
    ExtendResult ey = extend(f, aug, y);
    return aug.below(x, y).is_true() && ex.verdict.is_true() && ey.verdict.is_true() &&
           !(ex.value <= ey.value);
  }
  if (r.predicate == "extension-sup-preserving") {
    FormalDifference x = cls(r.witness_elems.at(0));
    FormalDifference u = cls(r.witness_elems.at(1));
    FormalDifference sup = cls(r.witness_elems.at(2));
    bool tail = !r.aux.empty() && r.aux[0] == 1;
    FormalDifference last = aug.add(aug.add(x, u), u);
    ExtendResult vl = extend(f, aug, last);
    ExtendResult vs = extend(f, aug, sup);
    if (!vl.verdict.is_true() || !vs.verdict.is_true()) return false;
    ExtScalar step = evaluate(f, aug, u);
    ExtScalar expected = tail && step > ExtScalar(0) ? ExtScalar::infinity() : vl.value;
    return vs.value != expected;
  }
  throw std::invalid_argument("no reevaluation for predicate " + r.predicate);
}

bool reevaluate(const Functional& f, const AugmentedModel& aug, const FactorResult& fr) {
  if (fr.verdict.witness.size() < 2)
    throw std::invalid_argument("factor result carries no witness pair");
  const VectorModelPtr& kv = aug.kernel_view();
  if (!kv) return false;
  std::vector<int> pins = kv->zero_coords();
  auto strip = [&](const Element& e) {
    ScalarVec v = e.scalars();
    for (int p : pins) v[static_cast<std::size_t>(p)] = ExtScalar(0);
    return aug.class_from_vector(std::move(v));
  };
  const Element& x = fr.verdict.witness[0];
  const Element& y = fr.verdict.witness[1];
  const ModelPtr& base = aug.cc().base();
  return aug.below(strip(x), strip(y)).is_true() &&
         !(evaluate(f, base, x) <= evaluate(f, base, y));
}

bool reevaluate(const FunctionalSequence& seq, const Functional& cand, const ModelPtr& m,
                const PredicateResult& r) {
  if (r.predicate != "functional-convergence")
    throw std::invalid_argument("no reevaluation for predicate " + r.predicate);
  const Element& x = r.witness_elems.at(0);
  const Element& y = r.witness_elems.at(1);
  auto at = [&](const Element& e) {
    return [&, e](const Functional& g) { return evaluate(g, m, e); };
  };
  auto [lo_x, hi_x] = tail_bounds(seq, at(x));
  auto [lo_y, hi_y] = tail_bounds(seq, at(y));
  (void)lo_x;
  (void)hi_y;
  ExtScalar cy = evaluate(cand, m, y);
  return m->leq(m->zero(), x) && m->way_below(x, y) && (!(hi_x <= cy) || !(cy <= lo_y));
}

bool reevaluate(const FunctionalSequence& seq, const Functional& cand, const AugmentedModel& aug,
                const PredicateResult& r) {
  auto cls = [&](const Element& e) { return aug.class_from_vector(e.scalars()); };
  auto bounds_at = [&](const FormalDifference& d) {
    return tail_bounds(seq, [&](const Functional& g) {
      ExtendResult e = extend(g, aug, d);
      if (!e.verdict.is_true())
        throw std::invalid_argument("an extension in the witness is undecided");
      return e.value;
    });
  };
  if (r.predicate == "functional-convergence") {
    FormalDifference x = cls(r.witness_elems.at(0));
    FormalDifference y = cls(r.witness_elems.at(1));
    auto bx = bounds_at(x);
    auto by = bounds_at(y);
    ExtendResult ey = extend(cand, aug, y);
    if (!ey.verdict.is_true()) return false;
    return aug.way_below(x, y).is_true() &&
           (!(bx.second <= ey.value) || !(ey.value <= by.first));
  }
  if (r.predicate == "hat-lsc") {
    FormalDifference x = cls(r.witness_elems.at(0));
    auto bx = bounds_at(x);
    ExtendResult ex = extend(cand, aug, x);
    if (!ex.verdict.is_true()) return false;
    return !(ex.value <= bx.first);
  }
  throw std::invalid_argument("no reevaluation for predicate " + r.predicate);
}

}  // namespace cusemi
