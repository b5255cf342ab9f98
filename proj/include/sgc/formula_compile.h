#ifndef SGC_FORMULA_COMPILE_H
#define SGC_FORMULA_COMPILE_H

#include <string>
#include <vector>

#include "sgc/negation.h"
#include "sgc/task.h"

namespace sgc {

/*
  Zero-cost evaluation action staged by formula lowering. The end-mode gate
  is implied: the main compilation adds the end-mode fluent to every staged
  precondition when it assembles the compiled task, so evaluation runs in
  the same phase as collect/forgo.
*/
struct StagedAction {
    std::string name;
    std::vector<FluentId> pre;
    std::vector<FluentId> add;
    std::vector<FluentId> del;
};

/*
  Result of lowering formula utilities to fluent utilities. The task's
  formula_utilities is empty; for every formula k a fluent sgc--formula-<k>
  carries the (absolute) utility, derivable in the end phase exactly when
  the formula holds in the plan's final state. Complements required by
  negated literals (and by the formula fluents themselves, for forgo) are
  already present and maintained.
*/
struct LoweredTask {
    SoftGoalTask task;
    std::vector<StagedAction> eval_actions;
    std::vector<std::string> formula_fluents;  // sgc--formula-<k>, declaration order
    ComplementTable complements;
};

Formula negate_formula_checked(const Formula& formula);

// u > 0: new fluent p_A with utility u, achievable at zero cost from any
// end state satisfying A (DNF: one action per term; CNF: per-clause fluents
// plus a collecting action).
void lower_positive(LoweredTask& lowered, const Formula& formula, Fixed utility);

// u < 0: positive utility -u on the De Morgan negation of A.
void lower_negative(LoweredTask& lowered, const Formula& formula, Fixed utility);

// Lowers every formula utility of the task, in declaration order. Rejects
// reserved-prefix names in the input (this is the compilation pipeline's
// entry point for user tasks).
LoweredTask lower_all(const SoftGoalTask& task);

}  // namespace sgc

#endif
