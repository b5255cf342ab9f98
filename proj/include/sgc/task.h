#ifndef SGC_TASK_H
#define SGC_TASK_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgc/fixed.h"
#include "sgc/formula.h"

namespace sgc {

using FluentId = int;

/*
  Set of fluents as a growable bitset. States, preconditions, add/delete
  lists and goals all use this representation. The set has no fixed
  universe: ids stay valid when a transformation appends fluents to a task,
  and trailing zero words are ignored by comparison and hashing.
*/
class FluentSet {
public:
    FluentSet() = default;

    bool contains(FluentId f) const;
    void insert(FluentId f);
    void erase(FluentId f);

    bool subset_of(const FluentSet& other) const;
    bool intersects(const FluentSet& other) const;
    void unite(const FluentSet& other);
    void subtract(const FluentSet& other);

    int count() const;
    bool empty() const;
    std::vector<FluentId> elements() const;  // ascending ids

    bool operator==(const FluentSet& other) const;
    std::size_t hash() const;

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

struct FluentSetHash {
    std::size_t operator()(const FluentSet& s) const { return s.hash(); }
};

struct GroundAction {
    std::string name;                     // unique within a task
    std::vector<std::string> name_parts;  // tokens for IPC plan files; {name} if atomic
    FluentSet pre;
    FluentSet neg_pre;                    // only populated in negative-preconditions mode
    FluentSet add;
    FluentSet del;
    Fixed cost;
};

// Plans are sequences of action names; they are resolved against a task
// when executed or validated.
using Plan = std::vector<std::string>;

/*
  A grounded STRIPS task with action costs. Fluents are interned: each name
  maps to a dense id, and all sets are bitsets over those ids. The struct is
  open for the transformation passes; check() verifies the representation
  invariants (unique non-empty names, init/goal/action references within F,
  disjoint add/delete lists, non-negative costs).
*/
struct GroundTask {
    std::vector<std::string> fluent_names;
    std::unordered_map<std::string, FluentId> fluent_index;
    FluentSet init;
    FluentSet goal;
    std::vector<GroundAction> actions;
    std::unordered_map<std::string, int> action_index;

    int num_fluents() const { return static_cast<int>(fluent_names.size()); }
    const std::string& fluent_name(FluentId f) const { return fluent_names.at(f); }
    std::optional<FluentId> find_fluent(const std::string& name) const;
    FluentId require_fluent(const std::string& name) const;  // throws UnknownFluent
    FluentId add_fluent(const std::string& name);            // throws on duplicates/empty

    const GroundAction* find_action(const std::string& name) const;
    void add_action(GroundAction action);

    std::vector<std::string> fluent_names_of(const FluentSet& set) const;
    void check() const;
};

/*
  A ground task plus soft goals: a partial utility function over fluents
  (strictly positive values, declaration order preserved) and signed
  utilities on DNF/CNF formulas.
*/
struct SoftGoalTask {
    GroundTask base;
    std::vector<std::pair<FluentId, Fixed>> fluent_utilities;
    std::vector<std::pair<Formula, Fixed>> formula_utilities;

    // Sums repeated entries for the same fluent; rejects non-positive values.
    void add_fluent_utility(FluentId fluent, Fixed utility);
    // Sums utilities of structurally equal formulas; drops entries summing to zero.
    void add_formula_utility(const Formula& formula, Fixed utility);
    std::optional<Fixed> utility_of(FluentId fluent) const;
    void check() const;
};

struct Trajectory {
    std::vector<FluentSet> states;  // states.size() == plan.size() + 1
    Plan plan;

    const FluentSet& final_state() const { return states.back(); }
};

// --- execution semantics ---

// s' = s + Add(a) - Del(a); throws PreconditionViolation if Pre(a) does not
// hold in state. The input state is not mutated.
FluentSet apply(const GroundTask& task, const FluentSet& state, const GroundAction& action);

bool applicable(const FluentSet& state, const GroundAction& action);

// Full state trajectory; throws InapplicableAt at the first failing step,
// UnknownAction for names the task does not define.
Trajectory run(const GroundTask& task, const Plan& plan);

// True iff the plan is applicable and the final state contains every hard
// goal. Inapplicable or unresolvable sequences yield false, not an error.
bool is_plan(const GroundTask& task, const Plan& plan);

// Exact sum of step costs; throws InapplicablePlan if the plan does not run.
Fixed plan_cost(const GroundTask& task, const Plan& plan);

// Sum of utilities of soft goals true in the final state, plus utilities of
// formulas satisfied by it, minus plan cost. Throws InapplicablePlan /
// HardGoalUnsatisfied.
Fixed plan_utility(const SoftGoalTask& task, const Plan& plan);

// Utility a given final state earns (soft fluents + formula terms), gross of
// any plan cost.
Fixed state_utility(const SoftGoalTask& task, const FluentSet& state);

}  // namespace sgc

#endif
