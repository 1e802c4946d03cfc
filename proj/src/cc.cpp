#include "cusemi/cc.hpp"

#include <algorithm>
#include <stdexcept>

namespace cusemi {

namespace {

std::string vec_str(const ScalarVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::size_t term_budget(const Window& w) {
  return static_cast<std::size_t>(std::max(8, 2 * w.bound + 6));
}

/// Canonical approximants of x, deduplicated; constant tails stop at the
/// prefix, open tails run to the budget.
std::vector<Element> approximant_terms(const CuModel& base, const Element& x, std::size_t cap) {
  Chain c = base.approximant_chain(x);
  const bool constant_tail = std::holds_alternative<ChainTailConstant>(c.tail);
  std::size_t limit = constant_tail ? std::max<std::size_t>(c.prefix.size(), 1) : cap;
  std::vector<Element> out;
  for (std::size_t n = 0; n < limit; ++n) {
    Element t = base.canonical(chain_term(base, c, n));
    if (!out.empty() && t == out.back()) continue;
    out.push_back(std::move(t));
  }
  return out;
}

/// Zero, the multiples of the order unit up to the search bound, and the
/// compact window, deduplicated and all verified compact.
std::vector<Element> compact_candidates(const CuModel& base, const Window& w) {
  std::vector<Element> out;
  auto push = [&](const Element& e) {
    Element c = base.canonical(e);
    if (!base.way_below(c, c)) return;
    for (const auto& seen : out)
      if (seen == c) return;
    out.push_back(std::move(c));
  };
  push(base.zero());
  if (auto u = base.order_unit()) {
    Element acc = base.zero();
    for (int n = 1; n <= w.search_bound; ++n) {
      acc = base.add(acc, *u);
      push(acc);
    }
  }
  for (const auto& e : base.compact_window(w.search_bound)) push(e);
  return out;
}

}  // namespace

std::string verdict3_name(Verdict3::Value v) {
  switch (v) {
    case Verdict3::Value::True: return "true";
    case Verdict3::Value::False: return "false";
    default: return "unknown";
  }
}

Verdict3 v3_and(const Verdict3& a, const Verdict3& b) {
  if (a.is_false()) return a;
  if (b.is_false()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  Verdict3 r = Verdict3::yes(a.detail.empty() ? b.detail : a.detail + "; " + b.detail);
  r.witness = a.witness;
  r.witness.insert(r.witness.end(), b.witness.begin(), b.witness.end());
  return r;
}

std::string cc_strategy_name(CcStrategy s) {
  switch (s) {
    case CcStrategy::ClosedForm: return "closed-form";
    case CcStrategy::BoundedSearch: return "bounded-compact-search";
    default: return "stable-rank-shortcut";
  }
}

Verdict3 cc_below_raw(const CuModel& base, const FormalDifference& a, const FormalDifference& b,
                      const Window& w) {
  const std::vector<Element> terms = approximant_terms(base, a.x, term_budget(w));
  const std::vector<Element> gs = compact_candidates(base, w);
  const Element ye = base.add(b.x, a.e);
  Element wit_xp, wit_g;
  bool have_wit = false;
  for (const Element& xp : terms) {
    const Element xf = base.add(xp, b.e);
    bool ok = false;
    for (const Element& g : gs) {
      if (base.way_below(base.add(xf, g), base.add(ye, g))) {
        ok = true;
        wit_xp = xp;
        wit_g = g;
        have_wit = true;
        break;
      }
    }
    if (!ok) {
      std::string msg = "approximant " + format_element(xp) +
                        " admits no separating compact from {n*u} or the compact window at bound " +
                        std::to_string(w.search_bound);
      if (base.g_search_complete()) return Verdict3::no(msg, {xp});
      return Verdict3::open(msg);
    }
  }
  std::vector<Element> wit;
  if (have_wit) wit = {wit_xp, wit_g};
  return Verdict3::yes(
      std::to_string(terms.size()) + " canonical approximants each admit a separating compact", wit);
}

CcModel::CcModel(ModelPtr base, Window w, CcStrategy s, long long m, AuditReport gate,
                 VectorModelPtr closed, VectorModelPtr view)
    : base_(std::move(base)),
      window_(w),
      strategy_(s),
      srm_(m),
      gate_(std::move(gate)),
      closed_(std::move(closed)),
      view_(std::move(view)) {}

CcModel CcModel::make(ModelPtr base, const Window& w, std::optional<CcStrategy> strategy,
                      long long stable_rank_m, bool gate) {
  if (!base) throw std::invalid_argument("formal differences need a base model");

  VectorModelPtr closed = std::dynamic_pointer_cast<const VectorModel>(base);
  if (closed) {
    bool free_nat = closed->edges().empty() && closed->zero_coords().empty();
    for (CoordKind k : closed->kinds())
      if (k != CoordKind::Nat) free_nat = false;
    if (!free_nat) closed = nullptr;
  }
  VectorModelPtr view = closed ? VectorModel::ext_power(CoordKind::Int, closed->dims()) : nullptr;

  CcStrategy s = strategy.value_or(closed ? CcStrategy::ClosedForm : CcStrategy::BoundedSearch);
  if (s == CcStrategy::ClosedForm && !closed)
    throw std::invalid_argument("closed-form strategy needs a free Nat vector base, got '" +
                                base->name() + "'");
  if (s == CcStrategy::StableRank && !base->order_unit())
    throw std::invalid_argument("stable-rank shortcut needs an order unit on '" + base->name() + "'");
  if (stable_rank_m < 0) throw std::invalid_argument("stable rank parameter must be nonnegative");

  AuditReport gate_report;
  gate_report.subject = base->name();
  gate_report.window = w;
  if (gate) {
    gate_report = audit_axioms(base, w);
    for (const char* p : {"positively-ordered", "O5", "O5-full"}) {
      const PredicateResult* r = gate_report.find(p);
      std::string verdict = r ? verdict_name(r->verdict) : "missing";
      if (!r || r->verdict != Verdict::Pass)
        throw std::invalid_argument("formal differences over '" + base->name() +
                                    "': gate predicate '" + std::string(p) + "' is " + verdict +
                                    (r && !r->witness.empty() ? " at " + r->witness : ""));
    }
  }

  return CcModel(std::move(base), w, s, stable_rank_m, std::move(gate_report), std::move(closed),
                 std::move(view));
}

FormalDifference CcModel::pair(Element x, Element e) const {
  base_->check_sig(x);
  base_->check_sig(e);
  if (!base_->way_below(e, e))
    throw std::invalid_argument("subtrahend must be compact: " + format_element(e));
  return {std::move(x), std::move(e)};
}

FormalDifference CcModel::pair_of(Element x) const { return pair(std::move(x), base_->zero()); }

std::optional<ScalarVec> CcModel::diff_vector(const FormalDifference& d) const {
  if (!view_) return std::nullopt;
  const ScalarVec& xs = d.x.scalars();
  const ScalarVec& es = d.e.scalars();
  ScalarVec out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = xs[i] - es[i];
  return out;
}

std::optional<Element> CcModel::class_vector(const FormalDifference& d) const {
  auto v = diff_vector(d);
  if (!v) return std::nullopt;
  return view_->make(*v);
}

FormalDifference CcModel::canonical_pair(const FormalDifference& d) const {
  auto v = diff_vector(d);
  if (!v) return d;
  ScalarVec pos(v->size()), neg(v->size());
  for (std::size_t i = 0; i < v->size(); ++i) {
    const ExtScalar& c = (*v)[i];
    if (c.is_infinite() || c >= ExtScalar(0)) {
      pos[i] = c;
      neg[i] = ExtScalar(0);
    } else {
      pos[i] = ExtScalar(0);
      neg[i] = -c;
    }
  }
  return {closed_->make(pos), closed_->make(neg)};
}

Verdict3 CcModel::below(const FormalDifference& a, const FormalDifference& b) const {
  switch (strategy_) {
    case CcStrategy::ClosedForm: {
      ScalarVec da = *diff_vector(a), db = *diff_vector(b);
      for (std::size_t i = 0; i < da.size(); ++i)
        if (!(da[i] <= db[i]))
          return Verdict3::no("difference vectors " + vec_str(da) + " vs " + vec_str(db) +
                              ": coordinate " + std::to_string(i) + " has " + da[i].str() + " > " +
                              db[i].str());
      return Verdict3::yes("difference vectors " + vec_str(da) + " <= " + vec_str(db));
    }
    case CcStrategy::BoundedSearch:
      return cc_below_raw(*base_, a, b, window_);
    default: {
      bool v = srm_decide(srm_, a, b);
      std::string d = "stable-rank-" + std::to_string(srm_) +
                      " shortcut; verbatim only under that stable-rank assumption";
      return v ? Verdict3::yes(std::move(d)) : Verdict3::no(std::move(d));
    }
  }
}

Verdict3 CcModel::eq(const FormalDifference& a, const FormalDifference& b) const {
  return v3_and(below(a, b), below(b, a));
}

FormalDifference CcModel::add(const FormalDifference& a, const FormalDifference& b) const {
  return {base_->add(a.x, b.x), base_->add(a.e, b.e)};
}

Verdict3 CcModel::way_below(const FormalDifference& a, const FormalDifference& b) const {
  if (strategy_ == CcStrategy::ClosedForm) {
    Element va = *class_vector(a), vb = *class_vector(b);
    if (view_->way_below(va, vb))
      return Verdict3::yes("difference vector " + format_element(va) + " is finite and below " +
                           format_element(vb));
    return Verdict3::no("difference vector " + format_element(va) +
                        " is not compactly below " + format_element(vb));
  }

  Chain cy = base_->approximant_chain(b.x);
  const bool constant_tail = std::holds_alternative<ChainTailConstant>(cy.tail);
  std::vector<Element> terms = approximant_terms(*base_, b.x, term_budget(window_));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Verdict3 r = below(a, {terms[i], b.e});
    if (r.is_true())
      return Verdict3::yes("class fits below approximant " + std::to_string(i) + " = " +
                               format_element(terms[i]) + " of the majorant",
                           {terms[i]});
  }
  Verdict3 plain = below(a, b);
  if (plain.is_false()) return Verdict3::no("not even below the class: " + plain.detail);
  if (constant_tail) {
    // The chain reaches b.x itself, so below and way-below coincide; the loop
    // already ruled the last term out, leaving only the undecided case.
    return Verdict3::open("order against the compact majorant undecided: " + plain.detail);
  }
  return Verdict3::open("no approximant admits the class within " +
                        std::to_string(term_budget(window_)) + " terms");
}

CcSupResult CcModel::sup(const CcChain& c) const {
  if (c.prefix.empty()) throw std::invalid_argument("class chain needs at least one term");
  std::string monotone_note;
  for (std::size_t i = 0; i + 1 < c.prefix.size(); ++i) {
    Verdict3 v = below(c.prefix[i], c.prefix[i + 1]);
    if (v.is_false())
      throw std::invalid_argument("class chain is not increasing at index " + std::to_string(i) +
                                  ": " + v.detail);
    if (v.is_unknown() && monotone_note.empty())
      monotone_note = "monotonicity undecided at index " + std::to_string(i);
  }

  if (strategy_ == CcStrategy::ClosedForm) {
    CcSupResult out;
    std::vector<ScalarVec> ds;
    ds.reserve(c.prefix.size());
    for (const auto& t : c.prefix) ds.push_back(*diff_vector(t));
    ScalarVec s = ds.back();
    if (c.increasing_tail) {
      if (ds.size() < 2)
        throw std::invalid_argument("a declared increasing tail needs two prefix terms");
      const ScalarVec& prev = ds[ds.size() - 2];
      for (std::size_t i = 0; i < s.size(); ++i)
        if (prev[i] < s[i]) s[i] = ExtScalar::infinity();
    }
    Element sv = view_->make(s);
    for (const auto& d : ds)
      if (!view_->leq(view_->make(d), sv)) {
        out.sup = c.prefix.back();
        out.verdict = Verdict3::no("extrapolated supremum " + vec_str(s) +
                                   " does not dominate the prefix");
        return out;
      }
    ScalarVec pos(s.size()), neg(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].is_infinite() || s[i] >= ExtScalar(0)) {
        pos[i] = s[i];
        neg[i] = ExtScalar(0);
      } else {
        pos[i] = ExtScalar(0);
        neg[i] = -s[i];
      }
    }
    out.sup = {closed_->make(pos), closed_->make(neg)};

    // Cross-check the direct formula against the lifting recursion on the
    // prefix: the recursion must succeed and stay dominated.
    CcChain trunc{c.prefix, false};
    CcSupResult rec = sup_generic(trunc);
    if (!rec.verdict.is_true() || !view_->leq(*class_vector(rec.sup), sv)) {
      out.verdict = Verdict3::no("lifting recursion disagrees with the direct supremum: " +
                                 rec.verdict.detail);
      return out;
    }
    out.lifts = std::move(rec.lifts);
    out.zchain = std::move(rec.zchain);

    std::string detail = "pointwise supremum of difference vectors is " + vec_str(s) +
                         "; recursion cross-check passed";
    if (!monotone_note.empty()) detail += "; " + monotone_note;
    out.verdict = Verdict3::yes(std::move(detail), {sv});
    return out;
  }

  CcSupResult out = sup_generic(c);
  if (out.verdict.is_true() && !monotone_note.empty()) out.verdict.detail += "; " + monotone_note;
  return out;
}

CcSupResult CcModel::sup_generic(const CcChain& c) const {
  CcSupResult out;
  out.sup = c.prefix.back();

  // Translate until positive, lift, interleave.
  const FormalDifference zero_pair{base_->zero(), base_->zero()};
  Element translator = base_->zero();
  bool translated = false;
  for (const Element& g : compact_candidates(*base_, window_)) {
    bool all_pos = true;
    for (const auto& t : c.prefix) {
      if (!below(zero_pair, {base_->add(t.x, g), t.e}).is_true()) {
        all_pos = false;
        break;
      }
    }
    if (all_pos) {
      translator = g;
      translated = true;
      break;
    }
  }
  if (!translated) {
    out.verdict = Verdict3::open("no compact in the window translates every term positive");
    return out;
  }

  for (std::size_t i = 0; i < c.prefix.size(); ++i) {
    FormalDifference shifted{base_->add(c.prefix[i].x, translator), c.prefix[i].e};
    Verdict3 lift = positive_lift(shifted);
    if (!lift.is_true()) {
      out.verdict = Verdict3::open("positive lift of term " + std::to_string(i) +
                                   " ran out of window: " + lift.detail);
      return out;
    }
    out.lifts.push_back(lift.witness.front());
  }

  out.zchain.push_back(out.lifts.front());
  for (std::size_t i = 1; i < out.lifts.size(); ++i) {
    const Element& zprev = out.zchain.back();
    std::vector<Element> approx = approximant_terms(*base_, zprev, term_budget(window_));
    Verdict3 link = chain_lift(approx.back(), zprev, out.lifts[i]);
    if (!link.is_true()) {
      out.verdict =
          Verdict3::open("interleaving stalled at term " + std::to_string(i) + ": " + link.detail);
      return out;
    }
    Element z = link.witness.front();
    FormalDifference shifted{base_->add(c.prefix[i].x, translator), c.prefix[i].e};
    if (!eq(pair_of(z), shifted).is_true()) {
      out.verdict = Verdict3::no("recursion produced a representative outside its class at term " +
                                 std::to_string(i));
      return out;
    }
    out.zchain.push_back(std::move(z));
  }

  if (c.increasing_tail) {
    out.verdict = Verdict3::open(
        "generic recursion truncates at the prefix; declared tails need the closed form");
    return out;
  }
  std::string detail = "lifted and interleaved " + std::to_string(out.zchain.size()) +
                       " classes; the prefix supremum is the last class";
  out.verdict = Verdict3::yes(std::move(detail), out.zchain);
  return out;
}

Verdict3 CcModel::positive_lift(const FormalDifference& d) const {
  const FormalDifference zero_pair{base_->zero(), base_->zero()};
  Verdict3 pos = below(zero_pair, d);
  if (pos.is_false())
    throw std::invalid_argument("class is not positive: " + pos.detail);

  if (view_) {
    ScalarVec dv = *diff_vector(d);
    Element lift = closed_->make(dv);
    return Verdict3::yes("difference vector " + vec_str(dv) + " is its own representative",
                         {lift});
  }
  if (pos.is_unknown())
    return Verdict3::open("positivity of the class is undecided: " + pos.detail);

  std::vector<Element> cands;
  auto push = [&](const Element& e) {
    Element cn = base_->canonical(e);
    for (const auto& seen : cands)
      if (seen == cn) return;
    cands.push_back(std::move(cn));
  };
  push(d.x);
  for (const auto& e : base_->window_elements(window_.search_bound)) push(e);
  for (const auto& cand : cands) {
    if (eq(pair_of(cand), d).is_true())
      return Verdict3::yes("window representative solves x + g = x' + e + g", {cand});
  }
  return Verdict3::open("no representative in the window at bound " +
                        std::to_string(window_.search_bound));
}

Verdict3 CcModel::chain_lift(const Element& xp, const Element& x, const Element& y) const {
  base_->check_sig(xp);
  base_->check_sig(x);
  base_->check_sig(y);
  if (!base_->way_below(xp, x))
    throw std::invalid_argument("chain lift needs x' way below x");
  Verdict3 ord = below(pair_of(x), pair_of(y));
  if (ord.is_false())
    throw std::invalid_argument("chain lift needs class(x) below class(y): " + ord.detail);
  if (ord.is_unknown())
    return Verdict3::open("order of the input classes undecided: " + ord.detail);

  if (base_->canonical(xp) == base_->canonical(base_->zero())) {
    Verdict3 lift = positive_lift(pair_of(y));
    if (lift.is_true()) lift.detail = "x' = 0, any representative works; " + lift.detail;
    return lift;
  }
  if (base_->way_below(xp, y)) return Verdict3::yes("y itself holds the approximant", {y});

  for (const auto& cand : base_->window_elements(window_.search_bound)) {
    if (!base_->way_below(xp, cand)) continue;
    if (eq(pair_of(cand), pair_of(y)).is_true())
      return Verdict3::yes("window element holds the approximant and represents class(y)", {cand});
  }
  return Verdict3::open("no lift in the window at bound " + std::to_string(window_.search_bound));
}

bool CcModel::srm_decide(long long m, const FormalDifference& a, const FormalDifference& b) const {
  auto u = base_->order_unit();
  if (!u) throw std::invalid_argument("stable-rank shortcut needs an order unit");
  Element mu = base_->nsum(*u, m);
  Element lhs = base_->add(base_->add(a.x, b.e), mu);
  Element rhs = base_->add(base_->add(b.x, a.e), mu);
  return base_->leq(lhs, rhs);
}

CcMapResult cc_map(const CcModel& src, const CcModel& tgt, const CuMap& base_map) {
  if (!src.closed_form() || !tgt.closed_form())
    throw std::invalid_argument("induced morphisms need closed-form constructions on both sides");
  if (base_map.source->sig() != src.base()->sig() || base_map.target->sig() != tgt.base()->sig())
    throw std::invalid_argument("morphism endpoints do not match the constructions");

  AuditReport base_audit = audit_morphism(base_map, src.window());
  if (base_audit.status() == 1) {
    std::string which;
    for (const auto& r : base_audit.results)
      if (r.verdict == Verdict::Fail) {
        which = r.predicate;
        break;
      }
    throw std::invalid_argument("base morphism fails its audit at '" + which + "'");
  }

  CuMap induced = [&]() -> CuMap {
    if (const auto* mm = std::get_if<MapMatrix>(&base_map.action)) {
      for (const auto& row : mm->rows)
        for (const auto& entry : row)
          if (entry.is_infinite() || entry < ExtScalar(0))
            throw std::invalid_argument(
                "only finite nonnegative matrix entries transfer to difference vectors");
      return matrix_map(src.view(), tgt.view(), mm->rows, base_map.name + " on difference vectors");
    }
    if (const auto* pb = std::get_if<MapPullback>(&base_map.action))
      return pullback_map(src.view(), tgt.view(), pb->point_of,
                          base_map.name + " on difference vectors");
    throw std::invalid_argument("collapse actions have no induced closed form");
  }();

  AuditReport induced_audit = audit_morphism(induced, src.window());
  return {std::move(induced), std::move(induced_audit)};
}

}  // namespace cusemi
