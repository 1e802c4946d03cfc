#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cusemi/functionals.hpp"
#include "cusemi/glued.hpp"
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

AugmentedModel make_pointed_kernel(int k, int bound) {
  Window w;
  w.bound = bound;
  CcModel cc = CcModel::make(VectorModel::pointed_power(k), w);
  CuMap rank = basepoint_rank(cc);
  return kernel_model(build_ranked(std::move(cc), std::move(rank)));
}

/// Kernel with the zero rank: the whole construction, over an unpointed base.
AugmentedModel make_full_kernel(int bound) {
  Window w;
  w.bound = bound;
  CcModel cc = CcModel::make(VectorModel::ext_power(CoordKind::Nat, 1), w);
  CuMap rank = matrix_map(cc.view(), VectorModel::ext_power(CoordKind::Int, 1), Rows{{0}},
                          "zero-rank");
  return kernel_model(build_ranked(std::move(cc), std::move(rank)));
}

}  // namespace

TEST_CASE("evaluate weights the ray coordinates") {
  auto n2 = VectorModel::ext_power(CoordKind::Nat, 2);
  Functional f{{ExtScalar(1), ExtScalar(2)}, true, "f12"};
  CHECK(evaluate(f, n2, n2->make({3, 1})) == ExtScalar(5));
  CHECK(evaluate(f, n2, n2->zero()) == ExtScalar(0));
  CHECK(evaluate(f, n2, n2->make({kInf, 0})) == kInf);

  // The measure convention: an infinite weight sees nothing on a zero entry.
  Functional inf0{{kInf, ExtScalar(0)}, false, "inf0"};
  CHECK(evaluate(inf0, n2, n2->make({0, 3})) == ExtScalar(0));
  CHECK(evaluate(inf0, n2, n2->make({1, 0})) == kInf);

  Functional narrow{{ExtScalar(1)}, true, "narrow"};
  CHECK_THROWS_AS(evaluate(narrow, n2, n2->zero()), std::invalid_argument);
  Functional neg{{ExtScalar(-1), ExtScalar(0)}, true, "neg"};
  CHECK_THROWS_AS(evaluate(neg, n2, n2->zero()), std::invalid_argument);

  auto z1 = VectorModel::ext_power(CoordKind::Int, 1);
  Functional one{{ExtScalar(1)}, true, "one"};
  CHECK_THROWS_AS(evaluate(one, z1, z1->make({-1})), std::invalid_argument);

  auto sph = PresentationModel::sphere();
  CHECK_THROWS_AS(evaluate(one, ModelPtr(sph), sph->zero()), std::invalid_argument);
}

TEST_CASE("extend follows the difference recipe on kernels") {
  AugmentedModel line = make_pointed_kernel(1, 6);
  Functional id{{ExtScalar(1), ExtScalar(0)}, true, "id"};
  for (long long n = 1; n <= 6; ++n) {
    ExtendResult e = extend(id, line, line.class_from_vector({ExtScalar(-n), ExtScalar(0)}));
    REQUIRE(e.verdict.is_true());
    CHECK(e.value == ExtScalar(-n));
    CHECK(e.verdict.detail.find("absorber-independent") != std::string::npos);
  }
  ExtendResult pos = extend(id, line, line.class_from_vector({ExtScalar(3), ExtScalar(0)}));
  CHECK(pos.verdict.is_true());
  CHECK(pos.value == ExtScalar(3));
  ExtendResult top = extend(id, line, *line.omega());
  CHECK(top.verdict.is_true());
  CHECK(top.value == kInf);

  // Frozen from tests/oracle/functionals_bruteforce.py: every admissible
  // absorber for (-1, 2, 0) gives 1 under the weights (1, 1, 0).
  AugmentedModel plane = make_pointed_kernel(2, 4);
  Functional w11{{ExtScalar(1), ExtScalar(1), ExtScalar(0)}, true, "w11"};
  ExtendResult mix =
      extend(w11, plane, plane.class_from_vector({ExtScalar(-1), ExtScalar(2), ExtScalar(0)}));
  REQUIRE(mix.verdict.is_true());
  CHECK(mix.value == ExtScalar(1));

  Functional w12{{ExtScalar(1), ExtScalar(2), ExtScalar(0)}, true, "w12"};
  ExtendResult skew =
      extend(w12, plane, plane.class_from_vector({ExtScalar(-1), ExtScalar(2), ExtScalar(0)}));
  REQUIRE(skew.verdict.is_true());
  CHECK(skew.value == ExtScalar(3));
}

TEST_CASE("extend on signed carriers uses the model absorber") {
  auto rz = GluedModel::razak();
  Functional ray{{ExtScalar(1)}, true, "ray"};

  ExtendResult neg = extend(ray, ModelPtr(rz), rz->soft({ExtScalar(-3)}));
  REQUIRE(neg.verdict.is_true());
  CHECK(neg.value == ExtScalar(-3));

  ExtendResult half = extend(ray, ModelPtr(rz), rz->soft({ExtScalar::rational(5, 2)}));
  REQUIRE(half.verdict.is_true());
  CHECK(half.value == ExtScalar::rational(5, 2));

  CHECK(extend(ray, ModelPtr(rz), rz->zero()).value == ExtScalar(0));

  ScalarVec h = hat_vector({ray}, ModelPtr(rz), rz->soft({ExtScalar(2)}));
  REQUIRE(h.size() == 1);
  CHECK(h[0] == ExtScalar(2));

  // Additivity across the sign: soft(-3) + soft(5) lands on soft(2).
  Element sum = rz->add(rz->soft({ExtScalar(-3)}), rz->soft({ExtScalar(5)}));
  CHECK(extend(ray, ModelPtr(rz), sum).value == ExtScalar(2));

  auto g = GluedModel::simple_pure(1, 1, {{Rat(1)}});
  CHECK(evaluate(ray, ModelPtr(g), g->compact({1})) == ExtScalar(1));
}

TEST_CASE("factor_check descends along q") {
  AugmentedModel full = make_full_kernel(4);
  Window w;
  w.bound = 4;
  auto base = VectorModel::ext_power(CoordKind::Nat, 1);
  Functional one{{ExtScalar(1)}, true, "one"};
  FactorResult fr = factor_check(one, full, base->make({1}), w);
  REQUIRE(fr.verdict.is_true());
  REQUIRE(fr.factored.has_value());
  CHECK(fr.factored->name == "one~");
  CHECK(fr.verdict.detail.find("window positives checked") != std::string::npos);
  ExtendResult p = pairing(fr, full, full.class_from_vector({ExtScalar(-2)}));
  CHECK(p.value == ExtScalar(-2));

  AugmentedModel line = make_pointed_kernel(1, 4);
  auto pbase = VectorModel::pointed_power(1);
  Functional fid{{ExtScalar(1), ExtScalar(0)}, true, "fid"};
  FactorResult fr2 = factor_check(fid, line, pbase->make({1, 1}), w);
  REQUIRE(fr2.verdict.is_true());
  CHECK(fr2.factored->weights == ScalarVec{ExtScalar(1), ExtScalar(0)});

  // Frozen from the oracle: the basepoint weight sees the fibre of q over the
  // zero class, so it cannot descend.
  Functional fbad{{ExtScalar(0), ExtScalar(1)}, true, "unit-weight"};
  FactorResult bad = factor_check(fbad, line, pbase->make({1, 1}), w);
  REQUIRE(bad.verdict.is_false());
  CHECK_FALSE(bad.factored.has_value());
  REQUIRE(bad.verdict.witness.size() == 2);
  CHECK(reevaluate(fbad, line, bad));
  CHECK_THROWS_AS(pairing(bad, line, line.class_from_vector({ExtScalar(0), ExtScalar(0)})),
                  std::invalid_argument);

  CHECK_THROWS_AS(factor_check(fid, line, pbase->make({0, 1}), w), std::invalid_argument);
  Functional finf{{kInf, ExtScalar(0)}, true, "finf"};
  CHECK_THROWS_AS(factor_check(finf, line, pbase->make({1, 1}), w), std::invalid_argument);
}

TEST_CASE("the functional audit targets the unforced properties") {
  AugmentedModel line = make_pointed_kernel(1, 4);
  Window w;
  w.bound = 4;

  Functional id{{ExtScalar(1), ExtScalar(0)}, true, "id"};
  AuditReport rep = audit_functional(id, line, w);
  for (const char* p : {"densely-finite", "absorber-independent", "extension-additive",
                        "extension-monotone", "extension-sup-preserving"}) {
    CHECK_MESSAGE(verdict_of(rep, p) == Verdict::Pass, p);
    CHECK(rep.find(p)->samples > 0);
  }

  AugmentedModel plane = make_pointed_kernel(2, 3);
  Window w3;
  w3.bound = 3;
  Functional w11{{ExtScalar(1), ExtScalar(1), ExtScalar(0)}, true, "w11"};
  AuditReport rep2 = audit_functional(w11, plane, w3);
  for (const char* p : {"densely-finite", "absorber-independent", "extension-additive",
                        "extension-monotone", "extension-sup-preserving"})
    CHECK_MESSAGE(verdict_of(rep2, p) == Verdict::Pass, p);

  // A weight of infinity on the line blows up on way-below-bounded classes.
  Functional torrid{{kInf, ExtScalar(0)}, true, "torrid"};
  AuditReport hot = audit_functional(torrid, line, w);
  const PredicateResult* dense = hot.find("densely-finite");
  REQUIRE(dense != nullptr);
  CHECK(dense->verdict == Verdict::Fail);
  CHECK(reevaluate(torrid, line, *dense));

  Functional declared{{kInf, ExtScalar(0)}, false, "declared"};
  AuditReport ok = audit_functional(declared, line, w);
  CHECK(verdict_of(ok, "densely-finite") == Verdict::Pass);
  CHECK(ok.find("densely-finite")->note.find("confirms") != std::string::npos);
}

TEST_CASE("convergence follows the tail rule") {
  auto n1 = VectorModel::ext_power(CoordKind::Nat, 1);
  Window w;
  w.bound = 4;
  Functional one{{ExtScalar(1)}, true, "one"};
  Functional two{{ExtScalar(2)}, true, "two"};

  FunctionalSequence constant{{one}, TailRule::Constant, std::nullopt, 1, "constant"};
  AuditReport c = check_convergence(constant, one, ModelPtr(n1), w);
  CHECK(verdict_of(c, "functional-convergence") == Verdict::Pass);
  CHECK(c.find("functional-convergence")->samples > 0);

  FunctionalSequence harmonic{{Functional{{ExtScalar(2)}, true, "h1"},
                               Functional{{ExtScalar::rational(3, 2)}, true, "h2"},
                               Functional{{ExtScalar::rational(4, 3)}, true, "h3"}},
                              TailRule::Limit,
                              one,
                              1,
                              "harmonic"};
  AuditReport h = check_convergence(harmonic, one, ModelPtr(n1), w);
  CHECK(verdict_of(h, "functional-convergence") == Verdict::Pass);

  // Frozen from the oracle: the alternating tail violates the limsup bound.
  FunctionalSequence alt{{one, two}, TailRule::Periodic, std::nullopt, 2, "alternating"};
  AuditReport a = check_convergence(alt, one, ModelPtr(n1), w);
  const PredicateResult* r = a.find("functional-convergence");
  REQUIRE(r != nullptr);
  CHECK(r->verdict == Verdict::Fail);
  REQUIRE(r->witness_elems.size() == 2);
  CHECK(reevaluate(alt, one, ModelPtr(n1), *r));

  FunctionalSequence lame{{one}, TailRule::Limit, std::nullopt, 1, "no-limit"};
  CHECK_THROWS_AS(check_convergence(lame, one, ModelPtr(n1), w), std::invalid_argument);
  FunctionalSequence wide{{one}, TailRule::Periodic, std::nullopt, 4, "bad-period"};
  CHECK_THROWS_AS(check_convergence(wide, one, ModelPtr(n1), w), std::invalid_argument);
}

TEST_CASE("convergence of pairings over the kernel") {
  AugmentedModel line = make_pointed_kernel(1, 3);
  Window w;
  w.bound = 3;
  Functional id{{ExtScalar(1), ExtScalar(0)}, true, "id"};
  Functional dbl{{ExtScalar(2), ExtScalar(0)}, true, "dbl"};

  FunctionalSequence constant{{id}, TailRule::Constant, std::nullopt, 1, "constant"};
  AuditReport c = check_convergence(constant, id, line, w);
  CHECK(verdict_of(c, "functional-convergence") == Verdict::Pass);
  CHECK(verdict_of(c, "hat-lsc") == Verdict::Pass);
  CHECK(c.find("hat-lsc")->samples > 0);

  FunctionalSequence alt{{id, dbl}, TailRule::Periodic, std::nullopt, 2, "alternating"};
  AuditReport a = check_convergence(alt, id, line, w);
  const PredicateResult* r = a.find("functional-convergence");
  REQUIRE(r != nullptr);
  CHECK(r->verdict == Verdict::Fail);
  CHECK(reevaluate(alt, id, line, *r));
  CHECK(verdict_of(a, "hat-lsc") == Verdict::Unknown);
}
