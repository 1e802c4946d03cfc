#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusemi/augmented.hpp"
#include "cusemi/glued.hpp"
#include "cusemi/poset.hpp"
#include "cusemi/presentation.hpp"
#include "cusemi/vector_model.hpp"

using namespace cusemi;

namespace {

const ExtScalar kInf = ExtScalar::infinity();
using Rows = std::vector<std::vector<long long>>;

Verdict verdict_of(const AuditReport& r, const std::string& p) {
  const PredicateResult* res = r.find(p);
  REQUIRE(res != nullptr);
  return res->verdict;
}

/// Kernel over the pointed free power: k ideal coordinates plus the basepoint.
AugmentedModel make_pointed_kernel(int k, int bound) {
  Window w;
  w.bound = bound;
  CcModel cc = CcModel::make(VectorModel::pointed_power(k), w);
  CuMap rank = basepoint_rank(cc);
  return kernel_model(build_ranked(std::move(cc), std::move(rank)));
}

ScalarVec kvec(const AugmentedModel& m, const FormalDifference& d) {
  std::optional<Element> e = m.kernel_elem(d);
  REQUIRE(e.has_value());
  return e->scalars();
}

}  // namespace

TEST_CASE("build_ranked audits the rank map") {
  Window w;
  CcModel cc = CcModel::make(VectorModel::pointed_power(1), w);
  CuMap rank = basepoint_rank(cc);
  CHECK(rank.source->sig() == cc.view()->sig());
  CHECK(rank.apply(cc.view()->make({3, -2})).scalars()[0] == ExtScalar(-2));

  RankedCc ranked = build_ranked(cc, rank);
  CHECK(ranked.rank_audit.status() == 0);

  // A map from the wrong carrier and a non-monotone row are both rejected.
  CuMap off = matrix_map(VectorModel::ext_power(CoordKind::Int, 3),
                         VectorModel::ext_power(CoordKind::Int, 1), Rows{{1, 0, 0}}, "off");
  CHECK_THROWS_AS(build_ranked(cc, off), std::invalid_argument);
  CuMap neg = matrix_map(cc.view(), VectorModel::ext_power(CoordKind::Int, 1), Rows{{-1, 0}},
                         "neg");
  CHECK_THROWS_AS(build_ranked(cc, neg), std::invalid_argument);

  // The construction must carry difference vectors.
  Window wb;
  wb.bound = 3;
  CcModel bounded = CcModel::make(VectorModel::ext_power(CoordKind::Nat, 1), wb,
                                  CcStrategy::BoundedSearch);
  CHECK_THROWS_AS(build_ranked(bounded, rank), std::invalid_argument);
}

TEST_CASE("kernel of the pointed line is the signed line") {
  AugmentedModel aug = make_pointed_kernel(1, 6);
  REQUIRE(aug.kernel_view() != nullptr);
  CHECK(aug.kernel_view()->dims() == 2);
  CHECK(aug.kernel_view()->zero_coords() == std::vector<int>{1});

  std::vector<FormalDifference> members = aug.window_members(6);
  CHECK(members.size() == 14);  // {-6..6, inf}

  auto zline = VectorModel::ext_power(CoordKind::Int, 1);
  for (const FormalDifference& a : members)
    for (const FormalDifference& b : members) {
      Element za = zline->make({kvec(aug, a)[0]});
      Element zb = zline->make({kvec(aug, b)[0]});
      CHECK(aug.below(a, b).is_true() == zline->leq(za, zb));
      CHECK(aug.way_below(a, b).is_true() == zline->way_below(za, zb));
      CHECK(kvec(aug, aug.add(a, b))[0] == zline->add(za, zb).scalars()[0]);
    }

  // Same carrier as the kernel presentation over the pointed one-point space.
  auto pres = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(1));
  auto wk = aug.kernel_view()->window_elements(3);
  auto wp = pres->window_elements(3);
  REQUIRE(wk.size() == wp.size());
  for (std::size_t i = 0; i < wk.size(); ++i)
    for (std::size_t j = 0; j < wk.size(); ++j) {
      CHECK(aug.kernel_view()->leq(wk[i], wk[j]) == pres->leq(wp[i], wp[j]));
      CHECK(aug.kernel_view()->add(wk[i], wk[j]).scalars() == pres->add(wp[i], wp[j]).scalars());
    }

  // Membership is the rank-zero predicate on classes.
  auto base = VectorModel::pointed_power(1);
  CHECK(aug.member({base->make({3, 1}), base->make({0, 1})}));
  CHECK_FALSE(aug.member({base->make({0, 1}), base->make({0, 0})}));
  CHECK(aug.rank_of({base->make({0, 1}), base->make({0, 0})}) == ExtScalar(1));
}

TEST_CASE("q reaches every positive class") {
  AugmentedModel aug = make_pointed_kernel(2, 4);
  auto base = VectorModel::pointed_power(2);

  FormalDifference z = aug.q(base->zero());
  CHECK(aug.cc().eq(z, aug.cc().pair_of(base->zero())).is_true());

  FormalDifference d = aug.q(base->make({3, 1, 0}));
  CHECK(kvec(aug, d) == ScalarVec{ExtScalar(3), ExtScalar(1), ExtScalar(0)});

  CHECK_THROWS_AS(aug.q(base->make({3, 1, 2})), std::invalid_argument);

  Verdict3 sur = aug.q_surjective(4);
  CHECK(sur.is_true());
  // (B+2)^2 positive classes at B = 4, counted in the oracle script.
  CHECK(sur.detail.find("36") != std::string::npos);
}

TEST_CASE("absorbers and complements follow the recipe") {
  AugmentedModel aug = make_pointed_kernel(2, 4);
  FormalDifference zero = aug.cc().pair_of(VectorModel::pointed_power(2)->zero());

  FormalDifference x = aug.class_from_vector({ExtScalar(-1), ExtScalar(2), ExtScalar(0)});
  FindResult ab = aug.find_positive_absorber(x);
  CHECK(ab.verdict.is_true());
  CHECK(kvec(aug, ab.z) == ScalarVec{ExtScalar(1), ExtScalar(0), ExtScalar(0)});
  CHECK(kvec(aug, aug.cc().add(x, ab.z)) == ScalarVec{ExtScalar(0), ExtScalar(2), ExtScalar(0)});

  FormalDifference pos = aug.class_from_vector({ExtScalar(2), ExtScalar(0), ExtScalar(0)});
  FindResult ab0 = aug.find_positive_absorber(pos);
  CHECK(ab0.verdict.is_true());
  CHECK(aug.cc().eq(ab0.z, zero).is_true());

  // Frozen from tests/oracle/augmented_bruteforce.py: N = 2, w = 0, z = -2*1.
  FormalDifference xp = aug.class_from_vector({ExtScalar(1), ExtScalar(2), ExtScalar(0)});
  FormalDifference xx = aug.class_from_vector({ExtScalar(2), ExtScalar(3), ExtScalar(0)});
  FindResult fc = aug.find_complement(xp, xx);
  REQUIRE(fc.verdict.is_true());
  CHECK(kvec(aug, fc.z) == ScalarVec{ExtScalar(-2), ExtScalar(-2), ExtScalar(0)});
  CHECK(aug.below(aug.add(xp, fc.z), zero).is_true());
  CHECK(aug.below(zero, aug.add(xx, fc.z)).is_true());
  CHECK(fc.verdict.detail.find("z = w - 2*1") != std::string::npos);

  // The refinement: the same z dominates any y' below a counterweight of x.
  FormalDifference y = aug.class_from_vector({ExtScalar(-2), ExtScalar(-3), ExtScalar(0)});
  FormalDifference ypp = aug.class_from_vector({ExtScalar(-3), ExtScalar(-4), ExtScalar(0)});
  FindResult fcm = aug.find_complement(xp, xx, std::make_pair(ypp, y));
  REQUIRE(fcm.verdict.is_true());
  CHECK(aug.below(ypp, fcm.z).is_true());

  CHECK_THROWS_AS(aug.find_complement(xx, xp), std::invalid_argument);
}

TEST_CASE("weak cancellation on kernels and raw carriers") {
  AugmentedModel aug = make_pointed_kernel(2, 3);
  Window w;
  w.bound = 3;
  AuditReport rep = check_weak_cancellation(aug, w);
  const PredicateResult* r = rep.find("weak-cancellation");
  REQUIRE(r != nullptr);
  CHECK(r->verdict == Verdict::Pass);
  CHECK(r->samples > 0);

  auto sph = PresentationModel::sphere();
  Window wp;
  wp.bound = 2;
  AuditReport bad = check_weak_cancellation(ModelPtr(sph), wp);
  const PredicateResult* rb = bad.find("weak-cancellation");
  REQUIRE(rb != nullptr);
  CHECK(rb->verdict == Verdict::Fail);
  REQUIRE(rb->witness_elems.size() == 3);
  CHECK(reevaluate(ModelPtr(sph), *rb));

  auto glued = GluedModel::simple_pure(1, 1, {{Rat(1)}});
  AuditReport ok = check_weak_cancellation(ModelPtr(glued), wp);
  CHECK(verdict_of(ok, "weak-cancellation") == Verdict::Pass);
}

TEST_CASE("window compacts form a group") {
  AugmentedModel line = make_pointed_kernel(1, 4);
  Window w;
  w.bound = 4;
  K0Data zdata{1, [](const std::vector<long long>& v) { return v[0] >= 0; }, "Z"};
  CompactGroupReport cg = compact_group(line, w, zdata);
  CHECK(cg.group_rank == 1);
  CHECK(cg.compact_classes.size() == 9);  // {-4..4}
  for (const char* p : {"compact-cancellation", "compact-inverses", "summand-closed", "k0-iso"})
    CHECK(verdict_of(cg.audit, p) == Verdict::Pass);

  // Frozen from the oracle: 49 window compacts over two ideal coordinates.
  AugmentedModel plane = make_pointed_kernel(2, 3);
  Window w3;
  w3.bound = 3;
  K0Data z2{2, [](const std::vector<long long>& v) { return v[0] >= 0 && v[1] >= 0; }, "Z^2"};
  CompactGroupReport cg2 = compact_group(plane, w3, z2);
  CHECK(cg2.group_rank == 2);
  CHECK(cg2.compact_classes.size() == 49);
  for (const char* p : {"compact-cancellation", "compact-inverses", "summand-closed", "k0-iso"})
    CHECK(verdict_of(cg2.audit, p) == Verdict::Pass);

  // Mismatched order data fails and the mismatch re-runs.
  K0Data flipped{1, [](const std::vector<long long>& v) { return v[0] <= 0; }, "Z-flipped"};
  CompactGroupReport bad = compact_group(line, w, flipped);
  const PredicateResult* rk = bad.audit.find("k0-iso");
  REQUIRE(rk != nullptr);
  CHECK(rk->verdict == Verdict::Fail);
  CHECK(reevaluate(line, *rk, flipped));

  // The simple-pure model with trivial compact rank: the one-element group.
  auto triv = GluedModel::simple_pure(0, 1, {});
  K0Data k0triv{0, [](const std::vector<long long>&) { return true; }, "0"};
  CompactGroupReport cg0 = compact_group(ModelPtr(triv), w, k0triv);
  CHECK(cg0.compact_elements.size() == 1);
  CHECK(cg0.group_rank == 0);
  for (const char* p : {"compact-cancellation", "compact-inverses", "summand-closed", "k0-iso"})
    CHECK(verdict_of(cg0.audit, p) == Verdict::Pass);
}

TEST_CASE("soft against compact on simple carriers") {
  auto rz = GluedModel::razak();
  Window w;
  w.bound = 3;

  SoftReport s = classify_soft_compact(ModelPtr(rz), rz->soft({ExtScalar::rational(5, 2)}), w);
  CHECK(s.kind == SoftKind::Soft);
  SoftReport c = classify_soft_compact(ModelPtr(rz), rz->zero(), w);
  CHECK(c.kind == SoftKind::Compact);

  // The dichotomy across the window: softs are soft, the only compact is 0.
  for (const Element& e : rz->window_elements(2)) {
    SoftReport r = classify_soft_compact(ModelPtr(rz), e, w);
    if (rz->way_below(e, e))
      CHECK(r.kind == SoftKind::Compact);
    else
      CHECK(r.kind == SoftKind::Soft);
  }

  auto g = GluedModel::simple_pure(1, 1, {{Rat(1)}});
  SoftReport gc = classify_soft_compact(ModelPtr(g), g->compact({1}), w);
  CHECK(gc.kind == SoftKind::Compact);

  // Free powers with two coordinates have non-full elements.
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  CHECK_THROWS_AS(classify_soft_compact(ModelPtr(n2), n2->make({1, 1}), w),
                  std::invalid_argument);
}

TEST_CASE("full comparison finds the minimal window n") {
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  Window w;
  w.bound = 6;
  FullComparisonResult fc = full_comparison(n1, n1->make({2}), n1->make({3}), n1->make({3}),
                                            n1->make({1}), w);
  CHECK(fc.verdict.is_true());
  CHECK(fc.n == 0);
  CHECK(fc.yp == n1->make({2}));
  CHECK(n1->way_below(fc.yp, n1->make({3})));

  FullComparisonResult fc5 = full_comparison(n1, n1->make({5}), n1->make({5}), n1->make({5}),
                                             n1->make({1}), w);
  CHECK(fc5.verdict.is_true());
  CHECK(fc5.n == 0);
  CHECK(fc5.yp == n1->make({5}));

  // Window case that genuinely needs n >= 1: the predecessor exceeds every
  // window approximant of y, and only the full element absorbs it.
  Window w4;
  w4.bound = 4;
  Element big = n1->make({12});
  Element inf = n1->make({kInf});
  for (const Element& e : n1->window_elements(4))
    if (n1->way_below(e, inf)) CHECK_FALSE(n1->leq(big, e));
  FullComparisonResult fcw = full_comparison(n1, big, big, inf, inf, w4);
  CHECK(fcw.verdict.is_true());
  CHECK(fcw.n == 1);
  CHECK(fcw.yp == n1->make({0}));

  CHECK_THROWS_AS(full_comparison(n1, big, big, inf, n1->make({0}), w4),
                  std::invalid_argument);

  // Sphere: the twisted class sits beside the untwisted one only after the
  // full table absorbs both.
  auto sph = PresentationModel::sphere();
  Window ws;
  ws.bound = 2;
  Element x = sph->vclass({1, 1});
  Element y = sph->vclass({1, 0});
  Element z = sph->table({kInf, kInf, kInf});
  REQUIRE(cc_below_raw(*sph, {x, sph->zero()}, {y, sph->zero()}, ws).is_true());
  FullComparisonResult fcs = full_comparison(sph, x, x, y, z, ws);
  CHECK(fcs.verdict.is_true());
  CHECK(fcs.n == 1);
  CHECK(sph->leq(sph->add(x, z), sph->add(fcs.yp, z)));
  CHECK(sph->way_below(fcs.yp, y));
}

TEST_CASE("exact sequences over the split pointed triple") {
  auto ki = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(2));
  auto ka = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(3));
  auto kq = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(1));

  CuMap inc = matrix_map(ki, ka, Rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
                         "ideal-inclusion");
  CuMap quo = matrix_map(ka, kq, Rows{{0, 0, 1, 0}, {0, 0, 0, 0}}, "quotient-projection");

  Window w;
  w.bound = 2;
  AuditReport rep = verify_exact_sequence(inc, quo, w);
  for (const char* p : {"composite-zero", "im-equals-ker", "order-embedding",
                        "quotient-surjective"})
    CHECK(verdict_of(rep, p) == Verdict::Pass);
  // 36 kernel classes and 6 quotient classes at B = 2, per the oracle script.
  CHECK(rep.find("im-equals-ker")->samples == 36);
  CHECK(rep.find("quotient-surjective")->samples == 6);

  // A quotient that also reads an ideal coordinate breaks exactness.
  CuMap skew = matrix_map(ka, kq, Rows{{0, 1, 1, 0}, {0, 0, 0, 0}}, "skewed-projection");
  AuditReport bad = verify_exact_sequence(inc, skew, w);
  const PredicateResult* rz = bad.find("composite-zero");
  REQUIRE(rz != nullptr);
  CHECK(rz->verdict == Verdict::Fail);
  CHECK(reevaluate(inc, skew, *rz));
  const PredicateResult* rik = bad.find("im-equals-ker");
  REQUIRE(rik != nullptr);
  CHECK(rik->verdict == Verdict::Fail);
  CHECK(reevaluate(inc, skew, *rik));

  // Trivial ideal: image and kernel are both {0}.
  auto k0 = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(0));
  CuMap zinc = matrix_map(k0, ka, Rows{{0}, {0}, {0}, {0}}, "zero-inclusion");
  CuMap idq = identity_map(ka);
  AuditReport triv = verify_exact_sequence(zinc, idq, w);
  for (const char* p : {"composite-zero", "im-equals-ker", "order-embedding",
                        "quotient-surjective"})
    CHECK(verdict_of(triv, p) == Verdict::Pass);
  CHECK(triv.find("im-equals-ker")->samples == 1);
}

TEST_CASE("direct sums join along free coordinates") {
  auto ki = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(2));
  auto kq = VectorModel::pointed_kernel_presentation(FinitePoset::pointed_antichain(1));
  Window w;
  w.bound = 2;
  IsoResult iso = direct_sum_iso(ki, kq, w);
  CHECK(iso.audit.status() == 0);
  CHECK(verdict_of(iso.audit, "window-bijection") == Verdict::Pass);
  CHECK(verdict_of(iso.audit, "order-iso") == Verdict::Pass);

  auto src = std::dynamic_pointer_cast<const VectorModel>(iso.map.source);
  REQUIRE(src != nullptr);
  Element joined = iso.map.apply(src->make({2, -1, 0, 3, 0}));
  CHECK(joined.scalars() == ScalarVec{ExtScalar(2), ExtScalar(-1), ExtScalar(3)});
}

TEST_CASE("kernel structure is closed and agrees with the ambient order") {
  AugmentedModel aug = make_pointed_kernel(1, 4);

  FormalDifference a = aug.class_from_vector({ExtScalar(2), ExtScalar(0)});
  FormalDifference b = aug.class_from_vector({ExtScalar(-3), ExtScalar(0)});
  CHECK(aug.member(aug.add(a, b)));

  CcChain chain;
  chain.prefix = {aug.class_from_vector({ExtScalar(-2), ExtScalar(0)}),
                  aug.class_from_vector({ExtScalar(0), ExtScalar(0)}),
                  aug.class_from_vector({ExtScalar(1), ExtScalar(0)})};
  CcSupResult sup = aug.sup(chain);
  CHECK(sup.verdict.is_true());
  CHECK(aug.member(sup.sup));

  chain.increasing_tail = true;
  CcSupResult ext = aug.sup(chain);
  CHECK(ext.verdict.is_true());
  CHECK(aug.member(ext.sup));
  CHECK(kvec(aug, ext.sup)[0].is_infinite());

  // Way-below inside the kernel is the ambient relation restricted to it.
  std::vector<FormalDifference> members = aug.window_members(3);
  for (const FormalDifference& p : members)
    for (const FormalDifference& q : members) {
      Element kp = *aug.kernel_elem(p);
      Element kq = *aug.kernel_elem(q);
      CHECK(aug.way_below(p, q).is_true() == aug.kernel_view()->way_below(kp, kq));
      CHECK(aug.below(p, q).is_true() == aug.kernel_view()->leq(kp, kq));
    }

  // The greatest member absorbs additively; reported from the view's maximum.
  std::optional<FormalDifference> omega = aug.omega();
  REQUIRE(omega.has_value());
  CHECK(kvec(aug, *omega)[0].is_infinite());
  for (const FormalDifference& p : members)
    CHECK(aug.cc().eq(aug.add(p, *omega), *omega).is_true());

  CHECK_THROWS_AS(aug.below(a, {VectorModel::pointed_power(1)->make({0, 1}),
                               VectorModel::pointed_power(1)->zero()}),
                  std::invalid_argument);
}
