#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cusemi/cc.hpp"
#include "cusemi/poset.hpp"

using namespace cusemi;

namespace {

const ExtScalar kInf = ExtScalar::infinity();

// All expected truth values in this file are frozen from
// tests/oracle/diff_order_bruteforce.py, which implements the definitional
// relation with an independent integer arithmetic.

CcModel make_nat_cc(CcStrategy s, int bound = 6) {
  Window w;
  w.bound = bound;
  return CcModel::make(VectorModel::ext_power(CoordKind::Nat, 1), w, s);
}

}  // namespace

TEST_CASE("gate refuses unfit bases") {
  Window w;
  auto ints = VectorModel::ext_power(CoordKind::Int, 1);
  bool threw = false;
  try {
    (void)CcModel::make(ints, w);
  } catch (const std::invalid_argument& e) {
    threw = true;
    CHECK(std::string(e.what()).find("positively-ordered") != std::string::npos);
  }
  CHECK(threw);

  auto sier = VectorModel::lsc_poset(FinitePoset::chain(2), CoordKind::Nat);
  CHECK_THROWS_AS((void)CcModel::make(sier, w), std::invalid_argument);

  auto nat = VectorModel::ext_power(CoordKind::Nat, 1);
  CcModel cc = CcModel::make(nat, w);
  CHECK(cc.gate_report().find("O5")->verdict == Verdict::Pass);
  CHECK(cc.gate_report().find("positively-ordered")->verdict == Verdict::Pass);
  CHECK(cc.closed_form());
  CHECK(cc.strategy() == CcStrategy::ClosedForm);
}

TEST_CASE("difference order on frozen examples") {
  for (CcStrategy s : {CcStrategy::ClosedForm, CcStrategy::BoundedSearch}) {
    CAPTURE(cc_strategy_name(s));
    CcModel cc = make_nat_cc(s);
    auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
    auto P = [&](long long x, long long e) { return cc.pair(n1->make({x}), n1->make({e})); };
    auto Pinf = [&](long long e) { return cc.pair(n1->make({kInf}), n1->make({e})); };

    CHECK(cc.below(P(3, 2), P(5, 4)).is_true());
    CHECK(cc.below(Pinf(0), P(7, 0)).is_false());
    CHECK(cc.below(P(0, 0), P(0, 0)).is_true());
    CHECK(cc.eq(P(5, 2), P(4, 1)).is_true());
    CHECK(cc.eq(Pinf(0), Pinf(5)).is_true());
  }
}

TEST_CASE("closed form and bounded search agree on every window pair") {
  CcModel closed = make_nat_cc(CcStrategy::ClosedForm);
  CcModel bounded = make_nat_cc(CcStrategy::BoundedSearch);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);

  std::vector<FormalDifference> pairs;
  for (const auto& x : n1->window_elements(6))
    for (const auto& e : n1->compact_window(6)) pairs.push_back(closed.pair(x, e));

  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      Verdict3 vc = closed.below(a, b);
      Verdict3 vb = bounded.below(a, b);
      REQUIRE_FALSE(vb.is_unknown());
      CHECK(vc.value == vb.value);
    }
}

TEST_CASE("two-coordinate bases agree as well") {
  Window w;
  w.bound = 2;
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CcModel closed = CcModel::make(n2, w, CcStrategy::ClosedForm);
  CcModel bounded = CcModel::make(n2, w, CcStrategy::BoundedSearch, 1, false);

  std::vector<FormalDifference> pairs;
  for (const auto& x : n2->window_elements(2))
    for (const auto& e : n2->compact_window(2)) pairs.push_back(closed.pair(x, e));

  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      Verdict3 vc = closed.below(a, b);
      Verdict3 vb = bounded.below(a, b);
      REQUIRE_FALSE(vb.is_unknown());
      CHECK(vc.value == vb.value);
    }
}

TEST_CASE("the construction over extended naturals is the signed line") {
  CcModel cc = make_nat_cc(CcStrategy::ClosedForm);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  auto view = cc.view();
  REQUIRE(view);

  std::vector<FormalDifference> pairs;
  for (const auto& x : n1->window_elements(6))
    for (const auto& e : n1->compact_window(6)) pairs.push_back(cc.pair(x, e));

  // Order embedding into the signed window...
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      bool want = view->leq(*cc.class_vector(a), *cc.class_vector(b));
      CHECK(cc.below(a, b).is_true() == want);
    }
  // ... additive ...
  for (std::size_t i = 0; i < pairs.size(); i += 7)
    for (std::size_t j = 0; j < pairs.size(); j += 5) {
      Element lhs = *cc.class_vector(cc.add(pairs[i], pairs[j]));
      Element rhs = view->add(*cc.class_vector(pairs[i]), *cc.class_vector(pairs[j]));
      CHECK(lhs == rhs);
    }
  // ... and onto: every signed window value is a class.
  for (const auto& target : view->window_elements(6)) {
    bool hit = false;
    for (const auto& a : pairs)
      if (*cc.class_vector(a) == target) {
        hit = true;
        break;
      }
    CHECK_MESSAGE(hit, format_element(target));
  }
}

TEST_CASE("the relation is a preorder compatible with addition") {
  CcModel cc = make_nat_cc(CcStrategy::ClosedForm, 4);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  std::vector<FormalDifference> pairs;
  for (const auto& x : n1->window_elements(4))
    for (const auto& e : n1->compact_window(4)) pairs.push_back(cc.pair(x, e));

  for (const auto& a : pairs) CHECK(cc.below(a, a).is_true());
  for (const auto& a : pairs)
    for (const auto& b : pairs)
      for (const auto& c : pairs)
        if (cc.below(a, b).is_true() && cc.below(b, c).is_true())
          CHECK(cc.below(a, c).is_true());

  // Sums of equivalent pairs stay equivalent.
  auto P = [&](long long x, long long e) { return cc.pair(n1->make({x}), n1->make({e})); };
  FormalDifference a = P(5, 2), a2 = P(4, 1);
  REQUIRE(cc.eq(a, a2).is_true());
  for (const auto& c : pairs) CHECK(cc.eq(cc.add(a, c), cc.add(a2, c)).is_true());
}

TEST_CASE("classes inherit way-below and chain suprema") {
  CcModel cc = make_nat_cc(CcStrategy::ClosedForm);
  CcModel bounded = make_nat_cc(CcStrategy::BoundedSearch);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);

  for (const auto& x : n1->window_elements(4))
    for (const auto& y : n1->window_elements(4))
      if (n1->way_below(x, y)) {
        CHECK(cc.way_below(cc.pair_of(x), cc.pair_of(y)).is_true());
        CHECK(bounded.way_below(bounded.pair_of(x), bounded.pair_of(y)).is_true());
      }

  CHECK(cc.way_below(cc.pair_of(n1->make({3})), cc.pair_of(n1->make({3}))).is_true());
  CHECK(bounded.way_below(bounded.pair_of(n1->make({3})), bounded.pair_of(n1->make({3})))
            .is_true());
  CHECK(cc.way_below(cc.pair_of(n1->make({kInf})), cc.pair_of(n1->make({kInf}))).is_false());
}

TEST_CASE("suprema of class chains") {
  CcModel cc = make_nat_cc(CcStrategy::ClosedForm);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);

  // Classes of (n, 0) with a declared increasing tail land at infinity.
  CcChain ramp;
  for (long long n : {1, 2, 3}) ramp.prefix.push_back(cc.pair_of(n1->make({n})));
  ramp.increasing_tail = true;
  CcSupResult r = cc.sup(ramp);
  REQUIRE(r.verdict.is_true());
  CHECK(*cc.class_vector(r.sup) == cc.view()->make({kInf}));

  // Same for the classes of (2n, n), whose difference vectors are n.
  CcChain shifted;
  for (long long n : {1, 2, 3})
    shifted.prefix.push_back(cc.pair(n1->make({2 * n}), n1->make({n})));
  shifted.increasing_tail = true;
  CcSupResult r2 = cc.sup(shifted);
  REQUIRE(r2.verdict.is_true());
  CHECK(*cc.class_vector(r2.sup) == cc.view()->make({kInf}));

  // The generic recursion reproduces the prefix supremum and owns up to
  // truncation when a tail is declared.
  CcModel bounded = make_nat_cc(CcStrategy::BoundedSearch);
  CcChain plain;
  for (long long n : {1, 2, 3}) plain.prefix.push_back(bounded.pair(n1->make({2 * n}), n1->make({n})));
  CcSupResult rg = bounded.sup(plain);
  REQUIRE(rg.verdict.is_true());
  CHECK(rg.zchain.size() == 3);
  CHECK(bounded.eq(rg.sup, plain.prefix.back()).is_true());

  plain.increasing_tail = true;
  CHECK(bounded.sup(plain).verdict.is_unknown());

  // Base approximant chains push forward to class chains with the same sup.
  Element target = n1->make({kInf});
  Chain base_chain = n1->approximant_chain(target);
  CcChain image;
  for (std::size_t i = 0; i < 4; ++i)
    image.prefix.push_back(cc.pair_of(chain_term(*n1, base_chain, i)));
  image.increasing_tail = true;
  CHECK(*cc.class_vector(cc.sup(image).sup) == *cc.class_vector(cc.pair_of(target)));
}

TEST_CASE("positive classes lift to the base") {
  CcModel cc = make_nat_cc(CcStrategy::ClosedForm);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);

  Verdict3 l1 = cc.positive_lift(cc.pair(n1->make({5}), n1->make({2})));
  REQUIRE(l1.is_true());
  CHECK(l1.witness.front() == n1->make({3}));

  Verdict3 l2 = cc.positive_lift(cc.pair_of(n1->make({7})));
  REQUIRE(l2.is_true());
  CHECK(l2.witness.front() == n1->make({7}));

  CHECK_THROWS_AS((void)cc.positive_lift(cc.pair(n1->make({2}), n1->make({5}))),
                  std::invalid_argument);

  Window w2;
  w2.bound = 4;
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CcModel cc2 = CcModel::make(n2, w2);
  Verdict3 l3 = cc2.positive_lift(cc2.pair(n2->make({kInf, 4}), n2->make({0, 1})));
  REQUIRE(l3.is_true());
  CHECK(l3.witness.front() == n2->make({kInf, 3}));

  // The generic search agrees.
  CcModel bounded = make_nat_cc(CcStrategy::BoundedSearch);
  Verdict3 l4 = bounded.positive_lift(bounded.pair(n1->make({5}), n1->make({2})));
  REQUIRE(l4.is_true());
  CHECK(l4.witness.front() == n1->make({3}));
}

TEST_CASE("chain lifts hold their approximant") {
  CcModel cc = make_nat_cc(CcStrategy::BoundedSearch);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);

  Verdict3 z = cc.chain_lift(n1->make({2}), n1->make({3}), n1->make({5}));
  REQUIRE(z.is_true());
  CHECK(z.witness.front() == n1->make({5}));

  Verdict3 z0 = cc.chain_lift(n1->zero(), n1->make({3}), n1->make({4}));
  REQUIRE(z0.is_true());
  CHECK(cc.eq(cc.pair_of(z0.witness.front()), cc.pair_of(n1->make({4}))).is_true());

  Window w2;
  w2.bound = 4;
  w2.search_bound = 8;
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CcModel cc2 = CcModel::make(n2, w2, CcStrategy::BoundedSearch);
  Verdict3 z2 = cc2.chain_lift(n2->make({1, 0}), n2->make({2, 0}), n2->make({2, 7}));
  REQUIRE(z2.is_true());
  CHECK(z2.witness.front() == n2->make({2, 7}));
}

TEST_CASE("stable-rank shortcut at rank one") {
  CcModel cc = make_nat_cc(CcStrategy::ClosedForm);
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  auto P = [&](ExtScalar x, long long e) { return cc.pair(n1->make({x}), n1->make({e})); };

  CHECK(cc.srm_decide(1, P(3, 0), P(5, 0)));
  CHECK_FALSE(cc.srm_decide(1, P(kInf, 0), P(5, 0)));
  CHECK(cc.srm_decide(1, P(0, 0), P(0, 0)));

  std::vector<FormalDifference> pairs;
  for (const auto& x : n1->window_elements(6))
    for (const auto& e : n1->compact_window(6)) pairs.push_back(cc.pair(x, e));
  for (const auto& a : pairs)
    for (const auto& b : pairs) CHECK(cc.srm_decide(1, a, b) == cc.below(a, b).is_true());

  CcModel srm = CcModel::make(n1, cc.window(), CcStrategy::StableRank, 1, false);
  CHECK(srm.below(pairs.front(), pairs.front()).is_true());
}

TEST_CASE("base morphisms act on difference vectors") {
  Window w;
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CcModel c1 = CcModel::make(n1, w);
  CcModel c2 = CcModel::make(n2, w);

  CcMapResult dbl = cc_map(c1, c1, matrix_map(n1, n1, std::vector<std::vector<long long>>{{2}},
                                              "doubling"));
  CHECK(dbl.audit.status() == 0);
  CHECK(dbl.map.apply(c1.view()->make({-3})) == c1.view()->make({-6}));
  CHECK(dbl.map.apply(c1.view()->make({kInf})) == c1.view()->make({kInf}));

  CcMapResult ident = cc_map(c1, c1, identity_map(n1));
  CHECK(ident.audit.status() == 0);
  for (const auto& v : c1.view()->window_elements(3)) CHECK(ident.map.apply(v) == v);

  CcMapResult proj = cc_map(c2, c1, matrix_map(n2, n1, std::vector<std::vector<long long>>{{1, 0}},
                                               "first coordinate"));
  CHECK(proj.audit.status() == 0);
  CHECK(proj.map.apply(c2.view()->make({-2, 5})) == c1.view()->make({-2}));

  CHECK_THROWS_AS((void)cc_map(c1, c1, collapse_map(n1, "crush")), std::invalid_argument);
}
