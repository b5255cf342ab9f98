#include "sgc/formula_compile.h"

#include <algorithm>

#include "sgc/errors.h"
#include "sgc/names.h"

using namespace std;

namespace sgc {

Formula negate_formula_checked(const Formula& formula) {
    return negate_formula(formula);
}

namespace {

// Precondition fluent for a literal: the fluent itself, or its complement
// (created on demand and maintained by the base actions) when negated.
FluentId literal_precondition(LoweredTask& lowered, const Literal& lit) {
    GroundTask& base = lowered.task.base;
    if (!lit.negated)
        return lit.fluent;
    const string name = base.fluent_name(lit.fluent);
    if (!lowered.complements.has(name)) {
        auto [completed, table] = complete_negations(base, {lit.fluent});
        base = std::move(completed);
        lowered.complements.by_fluent.insert(table.by_fluent.begin(), table.by_fluent.end());
    }
    return base.require_fluent(lowered.complements.of(name));
}

int next_formula_index(const LoweredTask& lowered) {
    return static_cast<int>(lowered.formula_fluents.size());
}

}  // namespace

void lower_positive(LoweredTask& lowered, const Formula& formula, Fixed utility) {
    if (utility <= Fixed())
        throw ZeroOrNegativeUtility("positive formula lowering needs utility > 0, got " +
                                    utility.str());
    GroundTask& base = lowered.task.base;
    const int k = next_formula_index(lowered);

    // p_A plus its complement; evaluation actions delete the complement so
    // forgo(p_A) keeps the shared-pending mutual exclusion of Def. 3.
    const string fluent_name = names::formula_fluent(k);
    FluentId p_a = base.add_fluent(fluent_name);
    const string complement_name = names::complement(fluent_name);
    FluentId p_a_bar = base.add_fluent(complement_name);
    base.init.insert(p_a_bar);  // p_A is never initially true
    lowered.complements.by_fluent.emplace(fluent_name, complement_name);
    lowered.formula_fluents.push_back(fluent_name);
    lowered.task.add_fluent_utility(p_a, utility);

    auto stage = [&](string name, vector<FluentId> pre, vector<FluentId> add,
                     vector<FluentId> del) {
        lowered.eval_actions.push_back(
            {std::move(name), std::move(pre), std::move(add), std::move(del)});
    };

    if (formula.shape() == Formula::Shape::cnf) {
        vector<FluentId> clause_fluents;
        for (size_t i = 0; i < formula.groups().size(); ++i) {
            FluentId p_i = base.add_fluent(names::clause_fluent(k, static_cast<int>(i)));
            clause_fluents.push_back(p_i);
            const auto& clause = formula.groups()[i];
            for (size_t j = 0; j < clause.size(); ++j) {
                FluentId pre = literal_precondition(lowered, clause[j]);
                stage(names::eval_clause_action(k, static_cast<int>(i), static_cast<int>(j)),
                      {pre}, {p_i}, {});
            }
        }
        stage(names::eval_top_action(k), clause_fluents, {p_a}, {p_a_bar});
        return;
    }

    // literal = degenerate single-term DNF
    for (size_t i = 0; i < formula.groups().size(); ++i) {
        vector<FluentId> pre;
        for (const Literal& lit : formula.groups()[i])
            pre.push_back(literal_precondition(lowered, lit));
        stage(names::eval_term_action(k, static_cast<int>(i)), std::move(pre), {p_a}, {p_a_bar});
    }
}

void lower_negative(LoweredTask& lowered, const Formula& formula, Fixed utility) {
    if (utility >= Fixed())
        throw ZeroOrPositiveUtility("negative formula lowering needs utility < 0, got " +
                                    utility.str());
    lower_positive(lowered, negate_formula(formula), -utility);
}

LoweredTask lower_all(const SoftGoalTask& task) {
    for (const string& name : task.base.fluent_names)
        if (names::is_reserved(name))
            throw NameCollision(name);
    for (const GroundAction& action : task.base.actions)
        if (names::is_reserved(action.name))
            throw NameCollision(action.name);

    LoweredTask lowered;
    lowered.task = task;
    lowered.task.formula_utilities.clear();
    for (const auto& [formula, utility] : task.formula_utilities) {
        if (utility > Fixed())
            lower_positive(lowered, formula, utility);
        else
            lower_negative(lowered, formula, utility);
    }
    return lowered;
}

}  // namespace sgc
