#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cusemi/audit.hpp"
#include "cusemi/cc.hpp"
#include "cusemi/cumap.hpp"
#include "cusemi/model.hpp"

namespace cusemi {

/// A finite inductive system with a candidate limit: stages, one connecting
/// map per consecutive pair, and a cocone map from every stage into the
/// candidate. The verifiers certify the candidate against the listed data;
/// nothing is completed or constructed.
struct InductiveSystem {
  std::vector<ModelPtr> stages;
  std::vector<CuMap> steps;    // steps[i]: stages[i] -> stages[i+1]
  ModelPtr candidate;
  std::vector<CuMap> cocones;  // cocones[i]: stages[i] -> candidate
  std::string name = "system";
};

/// Type invariants: the maps chain up, every step and cocone is a morphism on
/// the window, and the cocones commute with the steps.
AuditReport verify_system(const InductiveSystem& sys, const Window& w);

/// Window refutations are authoritative only when every carrier declares its
/// compact search complete and every map is a matrix whose entries are 0 or
/// at least 1, so preimages of window elements stay inside the window.
bool refutation_authoritative(const InductiveSystem& sys);

struct L1Certificate {
  Verdict3 verdict;
  std::vector<Element> chain;  // one element per stage when found
};

/// Stagewise approximation of one candidate element: a chain s_i with
/// step(s_i) <= s_{i+1}, increasing cocone images below s, and the final
/// image equal to s.
L1Certificate l1_chain(const InductiveSystem& sys, const Element& s, const Window& w);

struct L2Certificate {
  Verdict3 verdict;
  int j = -1;  // first listed stage where the pushed inequality holds
};

/// Eventual comparison for one triple at one stage: given cocone(s) <=
/// cocone(t) and sp way below s, the first j >= stage with the inequality
/// pushed forward.
L2Certificate l2_escort(const InductiveSystem& sys, std::size_t stage, const Element& sp,
                        const Element& s, const Element& t, const Window& w);

/// L1 over every window element of the candidate.
AuditReport verify_L1(const InductiveSystem& sys, const Window& w);

/// L2 over every window triple of every stage.
AuditReport verify_L2(const InductiveSystem& sys, const Window& w);

/// Applies the formal-difference construction to every carrier and map, checks
/// functoriality of the induced maps on composable pairs, then re-runs L1 and
/// L2 on the induced system. Predicates: cc-morphisms, cc-functorial, cc-L1,
/// cc-L2. Throws when a stage fails the construction gate.
AuditReport verify_cc_continuity(const InductiveSystem& sys, const Window& w);

/// The induced system on difference-vector views. Exposed for re-evaluation
/// and tests; verify_cc_continuity builds the same thing.
InductiveSystem cc_system(const InductiveSystem& sys, const Window& w);

bool reevaluate(const InductiveSystem& sys, const PredicateResult& r, const Window& w);

}  // namespace cusemi
