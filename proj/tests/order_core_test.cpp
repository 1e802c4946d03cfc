#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cusemi/audit.hpp"
#include "cusemi/cumap.hpp"
#include "cusemi/vector_model.hpp"

using namespace cusemi;

namespace {

const ExtScalar kInf = ExtScalar::infinity();

Verdict verdict_of(const AuditReport& r, const std::string& p) {
  const PredicateResult* res = r.find(p);
  REQUIRE(res != nullptr);
  return res->verdict;
}

}  // namespace

TEST_CASE("componentwise order on scalar vectors") {
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CHECK(n2->leq(n2->make({1, kInf}), n2->make({2, kInf})));

  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  CHECK_FALSE(n1->leq(n1->make({kInf}), n1->make({5})));

  auto i3 = VectorModel::ext_power(CoordKind::Int, 3);
  CHECK_FALSE(i3->leq(i3->make({0, -1, kInf}), i3->make({0, 0, 3})));
}

TEST_CASE("way-below agrees with the brute-force chain check") {
  // Frozen from tests/oracle/axiom_search_bruteforce.py: over extended
  // naturals the definitional quantifier collapses to "finite and <=".
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  std::vector<ExtScalar> window = {0, 1, 2, 3, 4, kInf};
  for (const auto& a : window)
    for (const auto& b : window) {
      bool expect = a.is_finite() && a <= b;
      CHECK(n1->way_below(n1->make({a}), n1->make({b})) == expect);
    }
  CHECK(n1->way_below(n1->make({3}), n1->make({3})));
  CHECK_FALSE(n1->way_below(n1->make({kInf}), n1->make({kInf})));

  // Ray coordinates approximate strictly: the first coordinate of (1,2)
  // never climbs past 1 along a strict chain toward (1,3).
  auto r2 = VectorModel::ext_power(CoordKind::RealRay, 2);
  CHECK_FALSE(r2->way_below(r2->make({1, 2}), r2->make({1, 3})));
  CHECK(r2->way_below(r2->make({1, 2}), r2->make({2, 3})));
  CHECK(r2->way_below(r2->zero(), r2->zero()));
}

TEST_CASE("chain suprema come from the tail rule") {
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  Chain ramp;
  ramp.prefix = {n1->make({1}), n1->make({2}), n1->make({3})};
  ramp.tail = ChainTailRamp{n1->make({3}), n1->make({kInf})};
  CHECK(sup_chain(*n1, ramp) == n1->make({kInf}));

  auto i2 = VectorModel::ext_power(CoordKind::Int, 2);
  Chain flat = constant_chain(i2->make({4, -1}));
  CHECK(sup_chain(*i2, flat) == i2->make({4, -1}));

  auto r1 = VectorModel::ext_power(CoordKind::RealRay, 1);
  Chain real_ramp = ramp_chain(r1->make({1}), r1->make({2}));
  CHECK(sup_chain(*r1, real_ramp) == r1->make({2}));
  // Terms strictly increase toward the target.
  Element t0 = chain_term(*r1, real_ramp, 1);
  Element t1 = chain_term(*r1, real_ramp, 5);
  CHECK(r1->leq(t0, t1));
  CHECK_FALSE(t0 == t1);
  CHECK(r1->way_below(t1, r1->make({2})));
}

TEST_CASE("approximant chains witness their supremum") {
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  for (const auto& x : n2->window_elements(3)) {
    Chain c = n2->approximant_chain(x);
    for (std::size_t i = 0; i < 8; ++i) CHECK(n2->way_below(chain_term(*n2, c, i), x));
    CHECK(sup_chain(*n2, c) == x);
  }
}

TEST_CASE("way-below composes with the order") {
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  auto win = n2->window_elements(2);
  for (const auto& a : win)
    for (const auto& b : win)
      for (const auto& c : win) {
        if (n2->way_below(a, b) && n2->leq(b, c)) CHECK(n2->way_below(a, c));
        if (n2->leq(a, b) && n2->way_below(b, c)) CHECK(n2->way_below(a, c));
      }
}

TEST_CASE("axiom audit passes on free scalar powers") {
  Window w;
  for (int k = 1; k <= 3; ++k) {
    auto nat = VectorModel::ext_power(CoordKind::Nat, k);
    AuditReport rn = audit_axioms(nat, w);
    auto ints = VectorModel::ext_power(CoordKind::Int, k);
    AuditReport ri = audit_axioms(ints, w);
    for (const char* p : {"O0", "O1", "O2", "O3", "O4", "O5", "O5-full"}) {
      CHECK_MESSAGE(verdict_of(rn, p) == Verdict::Pass, "ext-nat^", k, " ", p);
      CHECK_MESSAGE(verdict_of(ri, p) == Verdict::Pass, "ext-int^", k, " ", p);
    }
    CHECK(verdict_of(rn, "positively-ordered") == Verdict::Pass);
    // Signed carriers order below zero, so positivity genuinely fails.
    CHECK(verdict_of(ri, "positively-ordered") == Verdict::Fail);
  }
}

TEST_CASE("every failure report re-evaluates") {
  auto ints = VectorModel::ext_power(CoordKind::Int, 1);
  Window w;
  AuditReport r = audit_axioms(ints, w);
  for (const auto& res : r.results)
    if (res.verdict == Verdict::Fail) CHECK_MESSAGE(reevaluate(ints, res), res.predicate);
}

TEST_CASE("morphism audit: identity, doubling, collapse") {
  Window w;
  auto i2 = VectorModel::ext_power(CoordKind::Int, 2);
  AuditReport rid = audit_morphism(identity_map(i2), w);
  for (const auto& res : rid.results) CHECK_MESSAGE(res.verdict == Verdict::Pass, res.predicate);

  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  CuMap dbl = matrix_map(n1, n1, std::vector<std::vector<long long>>{{2}}, "doubling");
  AuditReport rdb = audit_morphism(dbl, w);
  for (const auto& res : rdb.results) CHECK_MESSAGE(res.verdict == Verdict::Pass, res.predicate);

  // Finite values to zero, infinity to infinity: suprema are not preserved,
  // witnessed by any ramp whose supremum is infinite.
  CuMap crush = collapse_map(n1, "crush");
  AuditReport rc = audit_morphism(crush, w);
  const PredicateResult* m1 = rc.find("M1");
  REQUIRE(m1 != nullptr);
  CHECK(m1->verdict == Verdict::Fail);
  CHECK(reevaluate(crush, *m1));
}

TEST_CASE("fullness against the maximum element") {
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  CHECK(is_full(*n1, n1->make({1})) == Verdict::Pass);
  CHECK(is_full(*n1, n1->zero()) == Verdict::Fail);
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CHECK(is_full(*n2, n2->make({1, 0})) == Verdict::Fail);
  CHECK(is_full(*n2, n2->make({1, 1})) == Verdict::Pass);
}
