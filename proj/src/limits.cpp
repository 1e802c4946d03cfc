#include "cusemi/limits.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>

namespace cusemi {

namespace {

void require_shape(const InductiveSystem& sys) {
  const std::string who = "inductive system '" + sys.name + "': ";
  if (sys.stages.empty()) throw std::invalid_argument(who + "no stages");
  for (std::size_t i = 0; i < sys.stages.size(); ++i)
    if (!sys.stages[i]) throw std::invalid_argument(who + "stage " + std::to_string(i) + " is null");
  if (!sys.candidate) throw std::invalid_argument(who + "candidate is null");
  if (sys.steps.size() + 1 != sys.stages.size())
    throw std::invalid_argument(who + "expected " + std::to_string(sys.stages.size() - 1) +
                                " steps, got " + std::to_string(sys.steps.size()));
  if (sys.cocones.size() != sys.stages.size())
    throw std::invalid_argument(who + "expected one cocone per stage, got " +
                                std::to_string(sys.cocones.size()));
  for (std::size_t i = 0; i < sys.steps.size(); ++i) {
    const CuMap& f = sys.steps[i];
    if (!f.source || !f.target || f.source->sig() != sys.stages[i]->sig() ||
        f.target->sig() != sys.stages[i + 1]->sig())
      throw std::invalid_argument(who + "step " + std::to_string(i) +
                                  " does not connect stages " + std::to_string(i) + " -> " +
                                  std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < sys.cocones.size(); ++i) {
    const CuMap& f = sys.cocones[i];
    if (!f.source || !f.target || f.source->sig() != sys.stages[i]->sig() ||
        f.target->sig() != sys.candidate->sig())
      throw std::invalid_argument(who + "cocone " + std::to_string(i) +
                                  " does not map stage " + std::to_string(i) +
                                  " into the candidate");
  }
}

bool model_eq(const CuModel& m, const Element& a, const Element& b) {
  return m.leq(a, b) && m.leq(b, a);
}

/// Windows, cocone images and step images of every stage, plus the transition
/// relation edge[i][a][b]: step_i(a) fits below b and the cocone images do not
/// decrease. The tables depend only on the system, not on the target element.
struct L1Tables {
  std::vector<std::vector<Element>> wins;
  std::vector<std::vector<Element>> images;           // cocone images per stage
  std::vector<std::vector<std::vector<char>>> edge;   // edge[i-1][a][b], i >= 1
};

L1Tables l1_tables(const InductiveSystem& sys, const Window& w) {
  const std::size_t n = sys.stages.size();
  L1Tables t;
  t.wins.resize(n);
  t.images.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.wins[i] = sys.stages[i]->window_elements(w.bound);
    t.images[i].reserve(t.wins[i].size());
    for (const Element& x : t.wins[i]) t.images[i].push_back(sys.cocones[i].apply(x));
  }
  t.edge.resize(n == 0 ? 0 : n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    const CuModel& st = *sys.stages[i];
    const CuModel& cand = *sys.candidate;
    auto& e = t.edge[i - 1];
    e.assign(t.wins[i - 1].size(), std::vector<char>(t.wins[i].size(), 0));
    for (std::size_t a = 0; a < t.wins[i - 1].size(); ++a) {
      Element pushed = sys.steps[i - 1].apply(t.wins[i - 1][a]);
      for (std::size_t b = 0; b < t.wins[i].size(); ++b)
        e[a][b] = st.leq(pushed, t.wins[i][b]) && cand.leq(t.images[i - 1][a], t.images[i][b]);
    }
  }
  return t;
}

/// DP over the tables: stage chains whose cocone images increase below s and
/// land exactly on s. Returns the chain indexes, innermost stage first.
std::optional<std::vector<std::size_t>> l1_search(const InductiveSystem& sys, const L1Tables& t,
                                                  const Element& s) {
  const CuModel& cand = *sys.candidate;
  const std::size_t n = sys.stages.size();
  std::vector<std::vector<int>> parent(n);
  std::vector<std::vector<char>> ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    ok[i].assign(t.wins[i].size(), 0);
    parent[i].assign(t.wins[i].size(), -1);
    for (std::size_t b = 0; b < t.wins[i].size(); ++b) {
      if (!cand.leq(t.images[i][b], s)) continue;
      if (i == 0) {
        ok[i][b] = 1;
        continue;
      }
      for (std::size_t a = 0; a < t.wins[i - 1].size(); ++a)
        if (ok[i - 1][a] && t.edge[i - 1][a][b]) {
          ok[i][b] = 1;
          parent[i][b] = static_cast<int>(a);
          break;
        }
    }
  }
  for (std::size_t b = 0; b < t.wins[n - 1].size(); ++b) {
    if (!ok[n - 1][b] || !cand.leq(s, t.images[n - 1][b])) continue;
    std::vector<std::size_t> chain(n);
    std::size_t cur = b;
    for (std::size_t i = n; i-- > 0;) {
      chain[i] = cur;
      if (i > 0) cur = static_cast<std::size_t>(parent[i][cur]);
    }
    return chain;
  }
  return std::nullopt;
}

std::string list_elements(const std::vector<Element>& es) {
  std::ostringstream os;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) os << ", ";
    os << format_element(es[i]);
  }
  return os.str();
}

/// Matrix composite second o first. Exact for the finite nonnegative entries
/// the induced maps allow, where the distributive rearrangement is valid.
CuMap compose_matrix(const CuMap& second, const CuMap& first) {
  const auto& a = std::get<MapMatrix>(first.action).rows;
  const auto& b = std::get<MapMatrix>(second.action).rows;
  std::vector<std::vector<ExtScalar>> c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    c[i].assign(a.empty() ? 0 : a[0].size(), ExtScalar(0));
    if (b[i].size() != a.size())
      throw std::invalid_argument("matrix composite: inner dimensions disagree");
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      ExtScalar acc(0);
      for (std::size_t k = 0; k < a.size(); ++k)
        acc = acc + ExtScalar::weighted(b[i][k], a[k][j]);
      c[i][j] = acc;
    }
  }
  return matrix_map(first.source, second.target, std::move(c),
                    second.name + " after " + first.name);
}

struct CcBundle {
  std::vector<CcModel> stages;
  CcModel candidate;
  InductiveSystem induced;
  std::vector<AuditReport> map_audits;  // steps first, then cocones
};

CcBundle cc_bundle(const InductiveSystem& sys, const Window& w) {
  require_shape(sys);
  std::vector<CcModel> ccs;
  ccs.reserve(sys.stages.size());
  for (const ModelPtr& st : sys.stages) ccs.push_back(CcModel::make(st, w));
  CcModel ccc = CcModel::make(sys.candidate, w);

  InductiveSystem out;
  out.name = sys.name + "/cc";
  for (const CcModel& c : ccs) out.stages.push_back(c.view());
  out.candidate = ccc.view();
  std::vector<AuditReport> audits;
  for (std::size_t i = 0; i + 1 < ccs.size(); ++i) {
    CcMapResult r = cc_map(ccs[i], ccs[i + 1], sys.steps[i]);
    out.steps.push_back(std::move(r.map));
    audits.push_back(std::move(r.audit));
  }
  for (std::size_t i = 0; i < ccs.size(); ++i) {
    CcMapResult r = cc_map(ccs[i], ccc, sys.cocones[i]);
    out.cocones.push_back(std::move(r.map));
    audits.push_back(std::move(r.audit));
  }
  return {std::move(ccs), std::move(ccc), std::move(out), std::move(audits)};
}

/// Pushes the pair through the steps until the inequality holds at some listed
/// stage; -1 when the list runs out. Hypotheses are the caller's business.
int escort_scan(const InductiveSystem& sys, std::size_t stage, Element sp, Element t) {
  for (std::size_t j = stage; j < sys.stages.size(); ++j) {
    if (sys.stages[j]->leq(sp, t)) return static_cast<int>(j);
    if (j + 1 < sys.stages.size()) {
      sp = sys.steps[j].apply(sp);
      t = sys.steps[j].apply(t);
    }
  }
  return -1;
}

/// Composable pairs whose functoriality the continuity check exercises:
/// consecutive steps and step-then-cocone. kind 0 = steps i, i+1;
/// kind 1 = step i then cocone i+1.
std::pair<const CuMap*, const CuMap*> composable_pair(const InductiveSystem& sys, long long i,
                                                      long long kind) {
  if (kind == 0) return {&sys.steps[static_cast<std::size_t>(i)],
                         &sys.steps[static_cast<std::size_t>(i) + 1]};
  return {&sys.steps[static_cast<std::size_t>(i)],
          &sys.cocones[static_cast<std::size_t>(i) + 1]};
}

}  // namespace

AuditReport verify_system(const InductiveSystem& sys, const Window& w) {
  require_shape(sys);

  PredicateResult morph;
  morph.predicate = "step-morphisms";
  const std::size_t nsteps = sys.steps.size();
  for (std::size_t idx = 0; idx < nsteps + sys.cocones.size(); ++idx) {
    const bool is_cocone = idx >= nsteps;
    const CuMap& f = is_cocone ? sys.cocones[idx - nsteps] : sys.steps[idx];
    AuditReport a = audit_morphism(f, w);
    ++morph.samples;
    if (a.status() == 0) continue;
    const PredicateResult* bad = nullptr;
    for (const auto& r : a.results)
      if (r.verdict == Verdict::Fail || (!bad && r.verdict == Verdict::Unknown)) {
        bad = &r;
        if (r.verdict == Verdict::Fail) break;
      }
    if (a.status() == 1) {
      morph.verdict = Verdict::Fail;
      morph.witness = "'" + f.name + "' fails '" + (bad ? bad->predicate : "?") + "': " +
                      (bad ? bad->witness : "");
      if (bad) morph.witness_elems = bad->witness_elems;
      morph.aux = {static_cast<long long>(is_cocone ? idx - nsteps : idx), is_cocone ? 1 : 0};
      break;
    }
    if (morph.verdict == Verdict::Pass) {
      morph.verdict = Verdict::Unknown;
      morph.note = "'" + f.name + "' audit exhausted at '" + (bad ? bad->predicate : "?") + "'";
    }
  }
  if (morph.verdict == Verdict::Pass)
    morph.note = "every step and cocone passes its morphism audit";

  PredicateResult coh;
  coh.predicate = "cocone-coherence";
  const CuModel& cand = *sys.candidate;
  for (std::size_t i = 0; i + 1 < sys.stages.size() && coh.verdict == Verdict::Pass; ++i) {
    for (const Element& x : sys.stages[i]->window_elements(w.bound)) {
      ++coh.samples;
      Element through = sys.cocones[i + 1].apply(sys.steps[i].apply(x));
      Element direct = sys.cocones[i].apply(x);
      if (!model_eq(cand, through, direct)) {
        coh.verdict = Verdict::Fail;
        coh.witness = "cocone(step(" + format_element(x) + ")) = " + format_element(through) +
                      " but cocone(" + format_element(x) + ") = " + format_element(direct) +
                      " at stage " + std::to_string(i);
        coh.witness_elems = {x};
        coh.aux = {static_cast<long long>(i)};
        break;
      }
    }
  }

  AuditReport rep;
  rep.subject = sys.name;
  rep.window = w;
  rep.results = {std::move(morph), std::move(coh)};
  return rep;
}

bool refutation_authoritative(const InductiveSystem& sys) {
  auto model_ok = [](const ModelPtr& m) { return m && m->g_search_complete(); };
  auto map_ok = [](const CuMap& f) {
    const auto* mm = std::get_if<MapMatrix>(&f.action);
    if (!mm) return false;
    for (const auto& row : mm->rows)
      for (const ExtScalar& e : row)
        if (!(e == ExtScalar(0) || e >= ExtScalar(1))) return false;
    return true;
  };
  for (const ModelPtr& st : sys.stages)
    if (!model_ok(st)) return false;
  if (!model_ok(sys.candidate)) return false;
  for (const CuMap& f : sys.steps)
    if (!map_ok(f)) return false;
  for (const CuMap& f : sys.cocones)
    if (!map_ok(f)) return false;
  return true;
}

L1Certificate l1_chain(const InductiveSystem& sys, const Element& s, const Window& w) {
  require_shape(sys);
  sys.candidate->check_sig(s);
  L1Tables t = l1_tables(sys, w);
  if (auto chain = l1_search(sys, t, s)) {
    std::vector<Element> elems;
    elems.reserve(chain->size());
    for (std::size_t i = 0; i < chain->size(); ++i) elems.push_back(t.wins[i][(*chain)[i]]);
    return {Verdict3::yes("stage chain " + list_elements(elems) +
                          "; images increase below the target and the last one equals it",
                          elems),
            elems};
  }
  if (refutation_authoritative(sys))
    return {Verdict3::no("no stage chain with step(s_i) <= s_{i+1} and cocone images "
                         "increasing to " +
                             format_element(s) + " exists within the window",
                         {s}),
            {}};
  return {Verdict3::open("window exhausted before a stage chain for " + format_element(s) +
                         " was found"),
          {}};
}

AuditReport verify_L1(const InductiveSystem& sys, const Window& w) {
  require_shape(sys);
  L1Tables t = l1_tables(sys, w);

  PredicateResult r;
  r.predicate = "L1";
  bool exhausted = false;
  Element first_open;
  for (const Element& s : sys.candidate->window_elements(w.bound)) {
    ++r.samples;
    if (l1_search(sys, t, s)) continue;
    if (refutation_authoritative(sys)) {
      r.verdict = Verdict::Fail;
      r.witness = "no stage chain reaches " + format_element(s) +
                  ": every window chain with increasing cocone images stays strictly below it";
      r.witness_elems = {s};
      break;
    }
    if (!exhausted) {
      exhausted = true;
      first_open = s;
    }
  }
  if (r.verdict == Verdict::Pass && exhausted) {
    r.verdict = Verdict::Unknown;
    r.note = "window exhausted before a stage chain for " + format_element(first_open) +
             " was found";
    r.witness_elems = {first_open};
  }
  if (r.verdict == Verdict::Pass)
    r.note = "every candidate window element is the supremum of a stage chain image";

  AuditReport rep;
  rep.subject = sys.name;
  rep.window = w;
  rep.results = {std::move(r)};
  return rep;
}

L2Certificate l2_escort(const InductiveSystem& sys, std::size_t stage, const Element& sp,
                        const Element& s, const Element& t, const Window& w) {
  require_shape(sys);
  if (stage >= sys.stages.size())
    throw std::invalid_argument("stage index " + std::to_string(stage) + " out of range");
  const CuModel& st = *sys.stages[stage];
  st.check_sig(sp);
  st.check_sig(s);
  st.check_sig(t);
  if (!st.way_below(sp, s))
    throw std::invalid_argument("escort hypothesis fails: " + format_element(sp) +
                                " is not way below " + format_element(s));
  if (!sys.candidate->leq(sys.cocones[stage].apply(s), sys.cocones[stage].apply(t)))
    throw std::invalid_argument("escort hypothesis fails: cocone images of " +
                                format_element(s) + " and " + format_element(t) +
                                " are not comparable");

  (void)w;
  if (int j = escort_scan(sys, stage, sp, t); j >= 0)
    return {Verdict3::yes("pushed inequality holds at stage " + std::to_string(j)), j};
  if (refutation_authoritative(sys))
    return {Verdict3::no("no listed stage j >= " + std::to_string(stage) + " pushes " +
                             format_element(sp) + " below " + format_element(t),
                         {sp, s, t}),
            -1};
  return {Verdict3::open("listed stages exhausted before the pushed inequality held"), -1};
}

AuditReport verify_L2(const InductiveSystem& sys, const Window& w) {
  require_shape(sys);

  PredicateResult r;
  r.predicate = "L2";
  long long max_shift = 0;
  bool exhausted = false;
  std::string open_note;
  const bool authoritative = refutation_authoritative(sys);
  for (std::size_t i = 0; i < sys.stages.size() && r.verdict != Verdict::Fail; ++i) {
    const CuModel& st = *sys.stages[i];
    std::vector<Element> win = st.window_elements(w.bound);
    std::vector<Element> images;
    images.reserve(win.size());
    for (const Element& x : win) images.push_back(sys.cocones[i].apply(x));
    for (std::size_t a = 0; a < win.size() && r.verdict != Verdict::Fail; ++a) {
      for (std::size_t p = 0; p < win.size(); ++p) {
        if (!st.way_below(win[p], win[a])) continue;
        for (std::size_t b = 0; b < win.size(); ++b) {
          if (!sys.candidate->leq(images[a], images[b])) continue;
          ++r.samples;
          int j = escort_scan(sys, i, win[p], win[b]);
          if (j >= 0) {
            max_shift = std::max(max_shift, static_cast<long long>(j) - static_cast<long long>(i));
            continue;
          }
          if (authoritative) {
            r.verdict = Verdict::Fail;
            r.witness = "cocone images compare but no listed stage pushes the pair: " +
                        format_element(win[p]) + " way below " + format_element(win[a]) +
                        ", target " + format_element(win[b]) + " at stage " + std::to_string(i);
            r.witness_elems = {win[p], win[a], win[b]};
            r.aux = {static_cast<long long>(i)};
            break;
          }
          if (!exhausted) {
            exhausted = true;
            open_note = "listed stages exhausted for the triple (" + format_element(win[p]) +
                        ", " + format_element(win[a]) + ", " + format_element(win[b]) +
                        ") at stage " + std::to_string(i);
          }
        }
        if (r.verdict == Verdict::Fail) break;
      }
    }
  }
  if (r.verdict == Verdict::Pass) {
    if (exhausted) {
      r.verdict = Verdict::Unknown;
      r.note = open_note;
    } else {
      r.note = "largest stage shift needed: " + std::to_string(max_shift);
      r.aux = {max_shift};
    }
  }

  AuditReport rep;
  rep.subject = sys.name;
  rep.window = w;
  rep.results = {std::move(r)};
  return rep;
}

InductiveSystem cc_system(const InductiveSystem& sys, const Window& w) {
  return cc_bundle(sys, w).induced;
}

AuditReport verify_cc_continuity(const InductiveSystem& sys, const Window& w) {
  CcBundle b = cc_bundle(sys, w);

  PredicateResult morph;
  morph.predicate = "cc-morphisms";
  for (std::size_t idx = 0; idx < b.map_audits.size(); ++idx) {
    const AuditReport& a = b.map_audits[idx];
    ++morph.samples;
    if (a.status() == 0) continue;
    const bool is_cocone = idx >= b.induced.steps.size();
    const CuMap& f = is_cocone ? b.induced.cocones[idx - b.induced.steps.size()]
                               : b.induced.steps[idx];
    const PredicateResult* bad = nullptr;
    for (const auto& pr : a.results)
      if (pr.verdict == Verdict::Fail || (!bad && pr.verdict == Verdict::Unknown)) {
        bad = &pr;
        if (pr.verdict == Verdict::Fail) break;
      }
    if (a.status() == 1) {
      morph.verdict = Verdict::Fail;
      morph.witness = "induced map '" + f.name + "' fails '" + (bad ? bad->predicate : "?") +
                      "': " + (bad ? bad->witness : "");
      if (bad) morph.witness_elems = bad->witness_elems;
      morph.aux = {static_cast<long long>(is_cocone ? idx - b.induced.steps.size() : idx),
                   is_cocone ? 1 : 0};
      break;
    }
    if (morph.verdict == Verdict::Pass) {
      morph.verdict = Verdict::Unknown;
      morph.note = "audit of induced map '" + f.name + "' exhausted";
    }
  }
  if (morph.verdict == Verdict::Pass)
    morph.note = "every induced step and cocone passes its morphism audit";

  PredicateResult fun;
  fun.predicate = "cc-functorial";
  long long skipped = 0;
  const long long npairs_steps =
      sys.steps.size() >= 2 ? static_cast<long long>(sys.steps.size()) - 1 : 0;
  const long long npairs_cocone =
      static_cast<long long>(sys.steps.size());  // step i then cocone i+1
  for (long long kind = 0; kind <= 1 && fun.verdict == Verdict::Pass; ++kind) {
    const long long npairs = kind == 0 ? npairs_steps : npairs_cocone;
    for (long long i = 0; i < npairs && fun.verdict == Verdict::Pass; ++i) {
      auto [first, second] = composable_pair(sys, i, kind);
      if (!std::holds_alternative<MapMatrix>(first->action) ||
          !std::holds_alternative<MapMatrix>(second->action)) {
        ++skipped;
        continue;
      }
      CuMap composite = compose_matrix(*second, *first);
      const CcModel& ccsrc = b.stages[static_cast<std::size_t>(i)];
      const CcModel& cctgt = kind == 0 ? b.stages[static_cast<std::size_t>(i) + 2] : b.candidate;
      CuMap cc_composite = cc_map(ccsrc, cctgt, composite).map;
      auto [ccA, ccB] = composable_pair(b.induced, i, kind);
      const CuModel& tgt_view = *cc_composite.target;
      for (const Element& x : ccsrc.view()->window_elements(w.bound)) {
        ++fun.samples;
        Element through = ccB->apply(ccA->apply(x));
        Element direct = cc_composite.apply(x);
        if (!model_eq(tgt_view, through, direct)) {
          fun.verdict = Verdict::Fail;
          fun.witness = "induced(" + second->name + ") o induced(" + first->name + ") sends " +
                        format_element(x) + " to " + format_element(through) +
                        " but the induced composite gives " + format_element(direct);
          fun.witness_elems = {x};
          fun.aux = {i, kind};
          break;
        }
      }
    }
  }
  if (fun.verdict == Verdict::Pass) {
    fun.note = fun.samples == 0
                   ? "no composable matrix pairs to compare"
                   : "induced maps compose as the induced composites on the window";
    if (skipped > 0) fun.note += "; " + std::to_string(skipped) + " non-matrix pairs skipped";
  }

  AuditReport l1 = verify_L1(b.induced, w);
  AuditReport l2 = verify_L2(b.induced, w);
  PredicateResult r1 = l1.results.at(0);
  r1.predicate = "cc-L1";
  PredicateResult r2 = l2.results.at(0);
  r2.predicate = "cc-L2";

  AuditReport rep;
  rep.subject = sys.name + "/cc";
  rep.window = w;
  rep.results = {std::move(morph), std::move(fun), std::move(r1), std::move(r2)};
  return rep;
}

bool reevaluate(const InductiveSystem& sys, const PredicateResult& r, const Window& w) {
  if (r.verdict != Verdict::Fail && r.verdict != Verdict::ExpectedFail)
    throw std::invalid_argument("reevaluate expects a fail verdict for '" + r.predicate + "'");

  if (r.predicate == "L1") {
    if (r.witness_elems.empty()) return false;
    return l1_chain(sys, r.witness_elems[0], w).verdict.is_false();
  }
  if (r.predicate == "L2") {
    if (r.witness_elems.size() < 3 || r.aux.empty()) return false;
    return l2_escort(sys, static_cast<std::size_t>(r.aux[0]), r.witness_elems[0],
                     r.witness_elems[1], r.witness_elems[2], w)
        .verdict.is_false();
  }
  if (r.predicate == "cocone-coherence") {
    if (r.witness_elems.empty() || r.aux.empty()) return false;
    const std::size_t i = static_cast<std::size_t>(r.aux[0]);
    if (i + 1 >= sys.stages.size()) return false;
    const Element& x = r.witness_elems[0];
    Element through = sys.cocones[i + 1].apply(sys.steps[i].apply(x));
    Element direct = sys.cocones[i].apply(x);
    return !model_eq(*sys.candidate, through, direct);
  }
  if (r.predicate == "step-morphisms") {
    if (r.aux.size() < 2) return false;
    const std::size_t idx = static_cast<std::size_t>(r.aux[0]);
    const bool is_cocone = r.aux[1] != 0;
    const CuMap& f = is_cocone ? sys.cocones.at(idx) : sys.steps.at(idx);
    return audit_morphism(f, w).status() == 1;
  }
  if (r.predicate == "cc-L1" || r.predicate == "cc-L2") {
    PredicateResult inner = r;
    inner.predicate = r.predicate.substr(3);
    return reevaluate(cc_system(sys, w), inner, w);
  }
  if (r.predicate == "cc-morphisms") {
    if (r.aux.size() < 2) return false;
    CcBundle b = cc_bundle(sys, w);
    const std::size_t idx = static_cast<std::size_t>(r.aux[0]);
    const bool is_cocone = r.aux[1] != 0;
    const std::size_t flat = is_cocone ? b.induced.steps.size() + idx : idx;
    return b.map_audits.at(flat).status() == 1;
  }
  if (r.predicate == "cc-functorial") {
    if (r.witness_elems.empty() || r.aux.size() < 2) return false;
    CcBundle b = cc_bundle(sys, w);
    auto [first, second] = composable_pair(sys, r.aux[0], r.aux[1]);
    CuMap composite = compose_matrix(*second, *first);
    const CcModel& ccsrc = b.stages[static_cast<std::size_t>(r.aux[0])];
    const CcModel& cctgt =
        r.aux[1] == 0 ? b.stages[static_cast<std::size_t>(r.aux[0]) + 2] : b.candidate;
    CuMap cc_composite = cc_map(ccsrc, cctgt, composite).map;
    auto [ccA, ccB] = composable_pair(b.induced, r.aux[0], r.aux[1]);
    const Element& x = r.witness_elems[0];
    return !model_eq(*cc_composite.target, ccB->apply(ccA->apply(x)), cc_composite.apply(x));
  }
  throw std::invalid_argument("no re-evaluation recipe for predicate '" + r.predicate + "'");
}

}  // namespace cusemi
