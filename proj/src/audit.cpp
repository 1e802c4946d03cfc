#include "cusemi/audit.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cusemi {

namespace {

constexpr std::size_t kConfigBudget = 20000;
constexpr std::size_t kO3Pairs = 2000;

struct SplitMix64 {
  std::uint64_t s;
  std::uint64_t next() {
    s += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// Number of tail terms inspected per chain. Generous enough that integer
/// ramps provably pass any window element below their supremum, including
/// glued carriers whose hat map can offset a ramp by several window bounds.
std::size_t term_cap(const Window& w) {
  return std::max<std::size_t>(8, 6 * static_cast<std::size_t>(w.bound) + 6);
}

/// Visits index tuples of a product space: exhaustively when it fits in the
/// budget, otherwise by seeded deterministic draws. fn returns false to stop.
void product_sweep(const std::vector<std::size_t>& sizes, std::size_t budget, std::uint64_t seed,
                   const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::size_t total = 1;
  bool over = false;
  for (std::size_t s : sizes) {
    if (s == 0) return;
    if (total > budget / s) {
      over = true;
      break;
    }
    total *= s;
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  if (!over && total <= budget) {
    for (;;) {
      if (!fn(idx)) return;
      std::size_t d = 0;
      while (d < sizes.size()) {
        if (++idx[d] < sizes[d]) break;
        idx[d++] = 0;
      }
      if (d == sizes.size()) return;
    }
  }
  SplitMix64 rng{seed};
  for (std::size_t n = 0; n < budget; ++n) {
    for (std::size_t d = 0; d < sizes.size(); ++d) idx[d] = rng.next() % sizes[d];
    if (!fn(idx)) return;
  }
}

using EV = std::vector<Element>;

std::string tuple_str(std::initializer_list<std::pair<const char*, const Element*>> parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, e] : parts) {
    if (!first) os << ", ";
    os << n << " = " << format_element(*e);
    first = false;
  }
  return os.str();
}

PredicateResult pred(const char* name) {
  PredicateResult r;
  r.predicate = name;
  return r;
}

void set_fail(PredicateResult& r, std::string witness, EV elems, std::vector<long long> aux = {},
              std::string note = "") {
  r.verdict = Verdict::Fail;
  r.witness = std::move(witness);
  r.witness_elems = std::move(elems);
  r.aux = std::move(aux);
  r.note = std::move(note);
}

std::vector<std::pair<std::size_t, std::size_t>> wb_pairs(const CuModel& m, const EV& W) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j)
      if (m.way_below(W[i], W[j])) out.emplace_back(i, j);
  return out;
}

PredicateResult check_reflexive(const CuModel& m, const EV& W) {
  PredicateResult r = pred("order-reflexive");
  for (const Element& a : W) {
    ++r.samples;
    if (!m.leq(a, a)) {
      set_fail(r, tuple_str({{"a", &a}}), {a});
      break;
    }
  }
  return r;
}

PredicateResult check_transitive(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("order-transitive");
  product_sweep({W.size(), W.size(), W.size()}, kConfigBudget, w.seed ^ 0x01,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]], &c = W[ix[2]];
                  if (!m.leq(a, b) || !m.leq(b, c)) return true;
                  ++r.samples;
                  if (m.leq(a, c)) return true;
                  set_fail(r, tuple_str({{"a", &a}, {"b", &b}, {"c", &c}}), {a, b, c});
                  return false;
                });
  return r;
}

PredicateResult check_antisymmetric(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("order-antisymmetric");
  product_sweep({W.size(), W.size()}, kConfigBudget, w.seed ^ 0x02,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]];
                  if (!m.leq(a, b) || !m.leq(b, a)) return true;
                  ++r.samples;
                  if (m.canonical(a) == m.canonical(b)) return true;
                  set_fail(r, tuple_str({{"a", &a}, {"b", &b}}), {a, b});
                  return false;
                });
  return r;
}

PredicateResult check_monoid(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("monoid-laws");
  Element z = m.zero();
  for (const Element& a : W) {
    ++r.samples;
    if (!(m.canonical(m.add(a, z)) == m.canonical(a))) {
      set_fail(r, tuple_str({{"a", &a}}), {a}, {0}, "zero not neutral");
      return r;
    }
  }
  product_sweep({W.size(), W.size()}, kConfigBudget / 2, w.seed ^ 0x03,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]];
                  ++r.samples;
                  if (m.canonical(m.add(a, b)) == m.canonical(m.add(b, a))) return true;
                  set_fail(r, tuple_str({{"a", &a}, {"b", &b}}), {a, b}, {1}, "not commutative");
                  return false;
                });
  if (r.verdict != Verdict::Pass) return r;
  product_sweep({W.size(), W.size(), W.size()}, kConfigBudget / 2, w.seed ^ 0x04,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]], &c = W[ix[2]];
                  ++r.samples;
                  if (m.canonical(m.add(m.add(a, b), c)) == m.canonical(m.add(a, m.add(b, c))))
                    return true;
                  set_fail(r, tuple_str({{"a", &a}, {"b", &b}, {"c", &c}}), {a, b, c}, {2},
                           "not associative");
                  return false;
                });
  return r;
}

PredicateResult check_wb_leq(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("wb-implies-leq");
  product_sweep({W.size(), W.size()}, kConfigBudget, w.seed ^ 0x05,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]];
                  if (!m.way_below(a, b)) return true;
                  ++r.samples;
                  if (m.leq(a, b)) return true;
                  set_fail(r, tuple_str({{"a", &a}, {"b", &b}}), {a, b});
                  return false;
                });
  return r;
}

PredicateResult check_wb_compose(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("wb-compose");
  product_sweep({W.size(), W.size(), W.size()}, kConfigBudget, w.seed ^ 0x06,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]], &c = W[ix[2]];
                  if (m.way_below(a, b) && m.leq(b, c)) {
                    ++r.samples;
                    if (!m.way_below(a, c)) {
                      set_fail(r, tuple_str({{"a", &a}, {"b", &b}, {"c", &c}}), {a, b, c}, {0},
                               "a << b <= c but not a << c");
                      return false;
                    }
                  }
                  if (m.leq(a, b) && m.way_below(b, c)) {
                    ++r.samples;
                    if (!m.way_below(a, c)) {
                      set_fail(r, tuple_str({{"a", &a}, {"b", &b}, {"c", &c}}), {a, b, c}, {1},
                               "a <= b << c but not a << c");
                      return false;
                    }
                  }
                  return true;
                });
  return r;
}

PredicateResult check_o0(const CuModel& m) {
  PredicateResult r = pred("O0");
  r.samples = 1;
  Element z = m.zero();
  if (!m.way_below(z, z)) set_fail(r, tuple_str({{"zero", &z}}), {}, {}, "zero is not compact");
  return r;
}

/// Chains audited by O1/O3/M1: approximant chains of window elements plus
/// ramps between comparable window pairs. tag 0 = approximant(elems[0]),
/// tag 1 = ramp(elems[0] -> elems[1]); reevaluation rebuilds from the tag.
struct ChainSpec {
  int tag;
  EV elems;
  Chain chain;
};

std::vector<ChainSpec> sample_chains(const CuModel& m, const EV& W, const Window& w) {
  std::vector<ChainSpec> out;
  std::size_t cap = std::max(4, w.chain_samples);
  std::size_t stride = std::max<std::size_t>(1, W.size() / (cap / 2 + 1));
  for (std::size_t i = 0; i < W.size() && out.size() < cap / 2; i += stride)
    out.push_back({0, {W[i]}, m.approximant_chain(W[i])});
  product_sweep({W.size(), W.size()}, kConfigBudget, w.seed ^ 0x07,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[ix[0]], &b = W[ix[1]];
                  if (!(a == b) && m.leq(a, b)) out.push_back({1, {a, b}, ramp_chain(a, b)});
                  return out.size() < cap;
                });
  return out;
}

PredicateResult check_o1(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("O1");
  std::size_t M = term_cap(w);
  for (const ChainSpec& cs : sample_chains(m, W, w)) {
    ++r.samples;
    Element s;
    try {
      s = sup_chain(m, cs.chain);
    } catch (const std::invalid_argument& e) {
      set_fail(r, "chain rejected: " + std::string(e.what()), cs.elems, {cs.tag, 0, 0});
      break;
    }
    Element prev = chain_term(m, cs.chain, 0);
    bool bad = false;
    for (std::size_t n = 1; n <= M && !bad; ++n) {
      Element t = chain_term(m, cs.chain, n);
      if (!m.leq(prev, t)) {
        set_fail(r, "terms " + std::to_string(n - 1) + "," + std::to_string(n) + " not increasing",
                 cs.elems, {cs.tag, 1, static_cast<long long>(n)});
        bad = true;
      } else if (!m.leq(t, s)) {
        set_fail(r, "term " + std::to_string(n) + " above the supremum", cs.elems,
                 {cs.tag, 2, static_cast<long long>(n)});
        bad = true;
      }
      prev = t;
    }
    if (bad) break;
  }
  return r;
}

PredicateResult check_o2(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("O2");
  std::size_t M = term_cap(w);
  for (const Element& x : W) {
    ++r.samples;
    Chain c = m.approximant_chain(x);
    Element s = sup_chain(m, c);
    if (!(m.canonical(s) == m.canonical(x))) {
      set_fail(r, tuple_str({{"x", &x}, {"sup", &s}}), {x}, {0}, "approximant supremum misses x");
      return r;
    }
    Element prev = chain_term(m, c, 0);
    for (std::size_t n = 0; n <= M; ++n) {
      Element t = chain_term(m, c, n);
      if (!m.way_below(t, x)) {
        set_fail(r, tuple_str({{"x", &x}, {"term", &t}}), {x}, {0},
                 "approximant term not way below x");
        return r;
      }
      if (n > 0 && !m.way_below(prev, t)) {
        set_fail(r, tuple_str({{"x", &x}, {"from", &prev}, {"to", &t}}), {x}, {0},
                 "approximant chain not way-below increasing");
        return r;
      }
      prev = t;
    }
    if (m.declared_soft(x) && m.way_below(x, x)) {
      set_fail(r, tuple_str({{"x", &x}}), {x}, {1},
               "x stands in for a soft element, but integer tables under x stabilize: no "
               "strictly increasing chain has supremum x");
      if (m.non_axiom_exact()) r.verdict = Verdict::ExpectedFail;
      return r;
    }
  }
  return r;
}

PredicateResult check_o3(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("O3");
  std::size_t M = term_cap(w);
  product_sweep(
      {W.size(), W.size()}, kO3Pairs, w.seed ^ 0x08, [&](const std::vector<std::size_t>& ix) {
        const Element &x = W[ix[0]], &y = W[ix[1]];
        Chain cx = m.approximant_chain(x);
        Chain cy = m.approximant_chain(y);
        Element s = m.add(x, y);
        std::vector<Element> sums;
        sums.reserve(M + 1);
        for (std::size_t n = 0; n <= M; ++n)
          sums.push_back(m.add(chain_term(m, cx, n), chain_term(m, cy, n)));
        for (std::size_t n = 0; n + 1 <= M; ++n) {
          ++r.samples;
          if (!m.leq(sums[n], sums[n + 1]) || !m.leq(sums[n], s)) {
            set_fail(r, tuple_str({{"x", &x}, {"y", &y}}), {x, y, sums[n]}, {},
                     "termwise sum chain not increasing under x+y");
            return false;
          }
        }
        for (const Element& v : W) {
          if (!m.way_below(v, s)) continue;
          ++r.samples;
          bool reached = false;
          for (std::size_t n = 0; n <= M && !reached; ++n) reached = m.leq(v, sums[n]);
          if (!reached) {
            set_fail(r, tuple_str({{"x", &x}, {"y", &y}, {"v", &v}}), {x, y, v}, {},
                     "v << x+y never dominated by termwise sums");
            return false;
          }
        }
        return true;
      });
  return r;
}

PredicateResult check_o4(const CuModel& m, const EV& W,
                         const std::vector<std::pair<std::size_t, std::size_t>>& wb,
                         const Window& w) {
  PredicateResult r = pred("O4");
  product_sweep({wb.size(), wb.size()}, kConfigBudget, w.seed ^ 0x09,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &a = W[wb[ix[0]].first], &b = W[wb[ix[0]].second];
                  const Element &c = W[wb[ix[1]].first], &d = W[wb[ix[1]].second];
                  ++r.samples;
                  if (m.way_below(m.add(a, c), m.add(b, d))) return true;
                  set_fail(r, tuple_str({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}),
                           {a, b, c, d});
                  return false;
                });
  return r;
}

bool o5_sweep_finds(const CuModel& m, const EV& W, const Element& xp, const Element& x,
                    const Element& y, const Element& wp) {
  for (const Element& z : W)
    if (m.leq(m.add(xp, z), y) && m.leq(y, m.add(x, z)) && m.way_below(wp, z)) return true;
  return false;
}

PredicateResult check_o5(const CuModel& m, const EV& W,
                         const std::vector<std::pair<std::size_t, std::size_t>>& wb,
                         const Window& w, bool full_form) {
  PredicateResult r = pred(full_form ? "O5-full" : "O5");
  Element zero = m.zero();
  bool unknown_seen = false;
  std::string first_unknown;
  auto body = [&](const Element& xp, const Element& x, const Element& y, const Element& ww,
                  const Element& wp) {
    if (!m.leq(x, y)) return true;
    if (!m.leq(m.add(x, ww), y)) return true;
    ++r.samples;
    DecideAnswer d = m.o5_decide(xp, x, y, ww, wp);
    if (d.kind == DecideAnswer::Kind::Witness) {
      const Element& z = d.witness;
      if (m.leq(m.add(xp, z), y) && m.leq(y, m.add(x, z)) && m.way_below(wp, z)) return true;
      set_fail(r,
               tuple_str({{"x'", &xp}, {"x", &x}, {"y", &y}, {"w", &ww}, {"w'", &wp}, {"z", &z}}),
               {xp, x, y, ww, wp}, {}, "model produced a bad complement witness");
      return false;
    }
    if (d.kind == DecideAnswer::Kind::NoWitness) {
      set_fail(r, tuple_str({{"x'", &xp}, {"x", &x}, {"y", &y}, {"w", &ww}, {"w'", &wp}}),
               {xp, x, y, ww, wp}, {}, d.certificate);
      return false;
    }
    if (o5_sweep_finds(m, W, xp, x, y, wp)) return true;
    if (!unknown_seen) {
      unknown_seen = true;
      first_unknown = tuple_str({{"x'", &xp}, {"x", &x}, {"y", &y}, {"w", &ww}, {"w'", &wp}});
    }
    return true;
  };
  if (full_form) {
    product_sweep({wb.size(), W.size(), wb.size()}, kConfigBudget, w.seed ^ 0x0a,
                  [&](const std::vector<std::size_t>& ix) {
                    return body(W[wb[ix[0]].first], W[wb[ix[0]].second], W[ix[1]],
                                W[wb[ix[2]].second], W[wb[ix[2]].first]);
                  });
  } else {
    product_sweep({wb.size(), W.size()}, kConfigBudget, w.seed ^ 0x0b,
                  [&](const std::vector<std::size_t>& ix) {
                    return body(W[wb[ix[0]].first], W[wb[ix[0]].second], W[ix[1]], zero, zero);
                  });
  }
  if (r.verdict == Verdict::Pass && unknown_seen) {
    r.verdict = Verdict::Unknown;
    r.note = "no window complement for " + first_unknown + "; search bound exhausted";
  }
  return r;
}

PredicateResult check_weak_cancellation(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("weak-cancellation");
  product_sweep({W.size(), W.size(), W.size()}, kConfigBudget, w.seed ^ 0x0c,
                [&](const std::vector<std::size_t>& ix) {
                  const Element &x = W[ix[0]], &y = W[ix[1]], &z = W[ix[2]];
                  if (!m.way_below(m.add(x, z), m.add(y, z))) return true;
                  ++r.samples;
                  if (m.leq(x, y)) return true;
                  set_fail(r, tuple_str({{"x", &x}, {"y", &y}, {"z", &z}}), {x, y, z});
                  return false;
                });
  return r;
}

PredicateResult check_unperforation(const CuModel& m, const EV& W, const Window& w) {
  PredicateResult r = pred("almost-unperforated");
  product_sweep({W.size(), W.size(), static_cast<std::size_t>(std::max(1, w.kmax))},
                kConfigBudget, w.seed ^ 0x0d, [&](const std::vector<std::size_t>& ix) {
                  const Element &x = W[ix[0]], &y = W[ix[1]];
                  long long k = static_cast<long long>(ix[2]) + 1;
                  if (!m.leq(m.nsum(x, k + 1), m.nsum(y, k))) return true;
                  ++r.samples;
                  if (m.leq(x, y)) return true;
                  set_fail(r, tuple_str({{"x", &x}, {"y", &y}}) + ", k = " + std::to_string(k),
                           {x, y}, {k});
                  return false;
                });
  return r;
}

PredicateResult check_divisibility(const CuModel& m, const EV& W,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& wb,
                                   const Window& w) {
  PredicateResult r = pred("almost-divisible");
  bool unknown_seen = false;
  std::string first_unknown;
  product_sweep(
      {wb.size(), static_cast<std::size_t>(std::max(1, w.kmax))}, kConfigBudget, w.seed ^ 0x0e,
      [&](const std::vector<std::size_t>& ix) {
        const Element &xp = W[wb[ix[0]].first], &x = W[wb[ix[0]].second];
        int n = static_cast<int>(ix[1]) + 1;
        ++r.samples;
        auto ok = [&](const Element& y) {
          return m.leq(m.nsum(y, n), x) && m.leq(xp, m.nsum(y, n + 1));
        };
        DecideAnswer d = m.divisibility_decide(xp, x, n);
        if (d.kind == DecideAnswer::Kind::Witness) {
          if (ok(d.witness)) return true;
          set_fail(r, tuple_str({{"x'", &xp}, {"x", &x}}) + ", n = " + std::to_string(n), {xp, x},
                   {n}, "model produced a bad division witness");
          return false;
        }
        if (d.kind == DecideAnswer::Kind::NoWitness) {
          set_fail(r, tuple_str({{"x'", &xp}, {"x", &x}}) + ", n = " + std::to_string(n), {xp, x},
                   {n}, d.certificate);
          return false;
        }
        for (const Element& y : W)
          if (ok(y)) return true;
        if (!unknown_seen) {
          unknown_seen = true;
          first_unknown = tuple_str({{"x'", &xp}, {"x", &x}}) + ", n = " + std::to_string(n);
        }
        return true;
      });
  if (r.verdict == Verdict::Pass && unknown_seen) {
    r.verdict = Verdict::Unknown;
    r.note = "no window divisor for " + first_unknown + "; search bound exhausted";
  }
  return r;
}

PredicateResult check_positive_order(const CuModel& m, const EV& W) {
  PredicateResult r = pred("positively-ordered");
  Element z = m.zero();
  for (const Element& a : W) {
    ++r.samples;
    if (!m.leq(z, a)) {
      set_fail(r, tuple_str({{"a", &a}}), {a}, {}, "element below zero");
      break;
    }
  }
  return r;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::ExpectedFail:
      return "expected-fail";
    default:
      return "unknown";
  }
}

const PredicateResult* AuditReport::find(const std::string& predicate) const {
  for (const auto& r : results)
    if (r.predicate == predicate) return &r;
  return nullptr;
}

bool AuditReport::any(Verdict v) const {
  return std::any_of(results.begin(), results.end(),
                     [&](const PredicateResult& r) { return r.verdict == v; });
}

int AuditReport::status() const {
  if (any(Verdict::Fail)) return 1;
  if (any(Verdict::Unknown)) return 2;
  return 0;
}

AuditReport audit_axioms(const ModelPtr& mp, const Window& w) {
  const CuModel& m = *mp;
  EV W = m.window_elements(w.bound);
  auto wb = wb_pairs(m, W);
  AuditReport rep{m.name(), w, {}};
  rep.results.push_back(check_reflexive(m, W));
  rep.results.push_back(check_transitive(m, W, w));
  rep.results.push_back(check_antisymmetric(m, W, w));
  rep.results.push_back(check_monoid(m, W, w));
  rep.results.push_back(check_wb_leq(m, W, w));
  rep.results.push_back(check_wb_compose(m, W, w));
  rep.results.push_back(check_o0(m));
  rep.results.push_back(check_o1(m, W, w));
  rep.results.push_back(check_o2(m, W, w));
  rep.results.push_back(check_o3(m, W, w));
  rep.results.push_back(check_o4(m, W, wb, w));
  rep.results.push_back(check_o5(m, W, wb, w, false));
  rep.results.push_back(check_o5(m, W, wb, w, true));
  rep.results.push_back(check_weak_cancellation(m, W, w));
  rep.results.push_back(check_unperforation(m, W, w));
  rep.results.push_back(check_divisibility(m, W, wb, w));
  rep.results.push_back(check_positive_order(m, W));
  return rep;
}

AuditReport audit_morphism(const CuMap& f, const Window& w) {
  const CuModel& src = *f.source;
  const CuModel& dst = *f.target;
  EV WS = src.window_elements(w.bound);
  EV WD = dst.window_elements(w.bound);
  std::size_t M = term_cap(w);
  AuditReport rep{f.name, w, {}};

  {
    PredicateResult r = pred("zero-preserving");
    r.samples = 1;
    Element z = f.apply(src.zero());
    if (!(dst.canonical(z) == dst.canonical(dst.zero())))
      set_fail(r, tuple_str({{"f(0)", &z}}), {}, {}, "zero not preserved");
    rep.results.push_back(r);
  }
  {
    PredicateResult r = pred("additive");
    product_sweep({WS.size(), WS.size()}, kConfigBudget, w.seed ^ 0x20,
                  [&](const std::vector<std::size_t>& ix) {
                    const Element &a = WS[ix[0]], &b = WS[ix[1]];
                    ++r.samples;
                    Element lhs = f.apply(src.add(a, b));
                    Element rhs = dst.add(f.apply(a), f.apply(b));
                    if (dst.canonical(lhs) == dst.canonical(rhs)) return true;
                    set_fail(r, tuple_str({{"a", &a}, {"b", &b}}), {a, b});
                    return false;
                  });
    rep.results.push_back(r);
  }
  {
    PredicateResult r = pred("order-preserving");
    product_sweep({WS.size(), WS.size()}, kConfigBudget, w.seed ^ 0x21,
                  [&](const std::vector<std::size_t>& ix) {
                    const Element &a = WS[ix[0]], &b = WS[ix[1]];
                    if (!src.leq(a, b)) return true;
                    ++r.samples;
                    if (dst.leq(f.apply(a), f.apply(b))) return true;
                    set_fail(r, tuple_str({{"a", &a}, {"b", &b}}), {a, b});
                    return false;
                  });
    rep.results.push_back(r);
  }
  {
    PredicateResult r = pred("M2");
    product_sweep({WS.size(), WS.size()}, kConfigBudget, w.seed ^ 0x22,
                  [&](const std::vector<std::size_t>& ix) {
                    const Element &a = WS[ix[0]], &b = WS[ix[1]];
                    if (!src.way_below(a, b)) return true;
                    ++r.samples;
                    if (dst.way_below(f.apply(a), f.apply(b))) return true;
                    set_fail(r, tuple_str({{"a", &a}, {"b", &b}}), {a, b});
                    return false;
                  });
    rep.results.push_back(r);
  }
  {
    PredicateResult r = pred("M1");
    for (const ChainSpec& cs : sample_chains(src, WS, w)) {
      Element s = sup_chain(src, cs.chain);
      Element fs = f.apply(s);
      std::vector<Element> img;
      img.reserve(M + 1);
      for (std::size_t n = 0; n <= M; ++n) img.push_back(f.apply(chain_term(src, cs.chain, n)));
      bool done = false;
      for (std::size_t n = 0; n <= M && !done; ++n) {
        ++r.samples;
        if (!dst.leq(img[n], fs)) {
          EV elems = cs.elems;
          set_fail(r, "image term " + std::to_string(n) + " above f(sup)", std::move(elems),
                   {cs.tag, 0, static_cast<long long>(n)});
          done = true;
        }
      }
      if (done) break;
      for (const Element& v : WD) {
        if (!dst.way_below(v, fs)) continue;
        ++r.samples;
        bool reached = false;
        for (std::size_t n = 0; n <= M && !reached; ++n) reached = dst.leq(v, img[n]);
        if (!reached) {
          EV elems = cs.elems;
          elems.push_back(v);
          set_fail(r,
                   "v = " + format_element(v) + " way below f(sup) = " + format_element(fs) +
                       " but never under an image term",
                   std::move(elems), {cs.tag, 1, 0});
          done = true;
          break;
        }
      }
      if (done) break;
    }
    rep.results.push_back(r);
  }
  return rep;
}

Verdict is_full(const CuModel& m, const Element& x) {
  auto top = m.max_element();
  if (!top) return Verdict::Unknown;
  auto s = m.sup_of_multiples(x);
  if (!s) return Verdict::Unknown;
  return m.canonical(*s) == m.canonical(*top) ? Verdict::Pass : Verdict::Fail;
}

bool reevaluate(const ModelPtr& mp, const PredicateResult& r) {
  const CuModel& m = *mp;
  const EV& e = r.witness_elems;
  const std::string& p = r.predicate;
  Window w;  // default window for sweeps; witnesses must violate independently
  if (p == "order-reflexive") return !m.leq(e[0], e[0]);
  if (p == "order-transitive") return m.leq(e[0], e[1]) && m.leq(e[1], e[2]) && !m.leq(e[0], e[2]);
  if (p == "order-antisymmetric")
    return m.leq(e[0], e[1]) && m.leq(e[1], e[0]) && !(m.canonical(e[0]) == m.canonical(e[1]));
  if (p == "monoid-laws") {
    if (r.aux[0] == 0) return !(m.canonical(m.add(e[0], m.zero())) == m.canonical(e[0]));
    if (r.aux[0] == 1) return !(m.canonical(m.add(e[0], e[1])) == m.canonical(m.add(e[1], e[0])));
    return !(m.canonical(m.add(m.add(e[0], e[1]), e[2])) ==
             m.canonical(m.add(e[0], m.add(e[1], e[2]))));
  }
  if (p == "wb-implies-leq") return m.way_below(e[0], e[1]) && !m.leq(e[0], e[1]);
  if (p == "wb-compose") {
    if (r.aux[0] == 0)
      return m.way_below(e[0], e[1]) && m.leq(e[1], e[2]) && !m.way_below(e[0], e[2]);
    return m.leq(e[0], e[1]) && m.way_below(e[1], e[2]) && !m.way_below(e[0], e[2]);
  }
  if (p == "O0") return !m.way_below(m.zero(), m.zero());
  if (p == "O1" || p == "O2") {
    const Element& x = e[0];
    if (p == "O2" && r.aux.size() == 1 && r.aux[0] == 1)
      return m.declared_soft(x) && m.way_below(x, x);
    Chain c = (p == "O2" || r.aux[0] == 0) ? m.approximant_chain(x) : ramp_chain(e[0], e[1]);
    Element s;
    try {
      s = sup_chain(m, c);
    } catch (const std::invalid_argument&) {
      return true;
    }
    if (p == "O2" && !(m.canonical(s) == m.canonical(x))) return true;
    std::size_t M = term_cap(w);
    Element prev = chain_term(m, c, 0);
    if (p == "O2" && !m.way_below(prev, x)) return true;
    for (std::size_t n = 1; n <= M; ++n) {
      Element t = chain_term(m, c, n);
      if (!m.leq(prev, t) || !m.leq(t, s)) return true;
      if (p == "O2" && (!m.way_below(t, x) || !m.way_below(prev, t))) return true;
      prev = t;
    }
    return false;
  }
  if (p == "O3") {
    const Element &x = e[0], &y = e[1], &v = e[2];
    Element s = m.add(x, y);
    if (!m.way_below(v, s)) return false;
    Chain cx = m.approximant_chain(x);
    Chain cy = m.approximant_chain(y);
    for (std::size_t n = 0; n <= term_cap(w); ++n)
      if (m.leq(v, m.add(chain_term(m, cx, n), chain_term(m, cy, n)))) return false;
    return true;
  }
  if (p == "O4")
    return m.way_below(e[0], e[1]) && m.way_below(e[2], e[3]) &&
           !m.way_below(m.add(e[0], e[2]), m.add(e[1], e[3]));
  if (p == "O5" || p == "O5-full") {
    const Element &xp = e[0], &x = e[1], &y = e[2], &ww = e[3], &wp = e[4];
    if (!m.way_below(xp, x) || !m.leq(x, y)) return false;
    if (!m.way_below(wp, ww) || !m.leq(m.add(x, ww), y)) return false;
    DecideAnswer d = m.o5_decide(xp, x, y, ww, wp);
    if (d.kind == DecideAnswer::Kind::Witness) return false;
    return !o5_sweep_finds(m, m.window_elements(w.bound), xp, x, y, wp);
  }
  if (p == "weak-cancellation")
    return m.way_below(m.add(e[0], e[2]), m.add(e[1], e[2])) && !m.leq(e[0], e[1]);
  if (p == "almost-unperforated") {
    long long k = r.aux[0];
    return m.leq(m.nsum(e[0], k + 1), m.nsum(e[1], k)) && !m.leq(e[0], e[1]);
  }
  if (p == "almost-divisible") {
    int n = static_cast<int>(r.aux[0]);
    if (!m.way_below(e[0], e[1])) return false;
    DecideAnswer d = m.divisibility_decide(e[0], e[1], n);
    if (d.kind == DecideAnswer::Kind::Witness) return false;
    for (const Element& y : m.window_elements(w.bound))
      if (m.leq(m.nsum(y, n), e[1]) && m.leq(e[0], m.nsum(y, n + 1))) return false;
    return true;
  }
  if (p == "positively-ordered") return !m.leq(m.zero(), e[0]);
  throw std::invalid_argument("no reevaluation rule for predicate " + p);
}

bool reevaluate(const CuMap& f, const PredicateResult& r) {
  const CuModel& src = *f.source;
  const CuModel& dst = *f.target;
  const EV& e = r.witness_elems;
  const std::string& p = r.predicate;
  Window w;
  if (p == "zero-preserving")
    return !(dst.canonical(f.apply(src.zero())) == dst.canonical(dst.zero()));
  if (p == "additive")
    return !(dst.canonical(f.apply(src.add(e[0], e[1]))) ==
             dst.canonical(dst.add(f.apply(e[0]), f.apply(e[1]))));
  if (p == "order-preserving")
    return src.leq(e[0], e[1]) && !dst.leq(f.apply(e[0]), f.apply(e[1]));
  if (p == "M2") return src.way_below(e[0], e[1]) && !dst.way_below(f.apply(e[0]), f.apply(e[1]));
  if (p == "M1") {
    Chain c = r.aux[0] == 0 ? src.approximant_chain(e[0]) : ramp_chain(e[0], e[1]);
    Element fs = f.apply(sup_chain(src, c));
    std::size_t M = term_cap(w);
    if (r.aux[1] == 0) {
      Element t = f.apply(chain_term(src, c, static_cast<std::size_t>(r.aux[2])));
      return !dst.leq(t, fs);
    }
    const Element& v = e.back();
    if (!dst.way_below(v, fs)) return false;
    for (std::size_t n = 0; n <= M; ++n)
      if (dst.leq(v, f.apply(chain_term(src, c, n)))) return false;
    return true;
  }
  throw std::invalid_argument("no reevaluation rule for predicate " + p);
}

}  // namespace cusemi
