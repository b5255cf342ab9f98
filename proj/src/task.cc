#include "sgc/task.h"

#include <algorithm>
#include <bit>

#include "sgc/errors.h"

using namespace std;

namespace sgc {

// --- FluentSet ---

bool FluentSet::contains(FluentId f) const {
    size_t word = static_cast<size_t>(f) / 64;
    if (f < 0 || word >= words_.size())
        return false;
    return (words_[word] >> (f % 64)) & 1;
}

void FluentSet::insert(FluentId f) {
    size_t word = static_cast<size_t>(f) / 64;
    if (word >= words_.size())
        words_.resize(word + 1, 0);
    words_[word] |= uint64_t{1} << (f % 64);
}

void FluentSet::erase(FluentId f) {
    size_t word = static_cast<size_t>(f) / 64;
    if (word < words_.size()) {
        words_[word] &= ~(uint64_t{1} << (f % 64));
        trim();
    }
}

bool FluentSet::subset_of(const FluentSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~theirs)
            return false;
    }
    return true;
}

bool FluentSet::intersects(const FluentSet& other) const {
    size_t n = min(words_.size(), other.words_.size());
    for (size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

void FluentSet::unite(const FluentSet& other) {
    if (other.words_.size() > words_.size())
        words_.resize(other.words_.size(), 0);
    for (size_t i = 0; i < other.words_.size(); ++i)
        words_[i] |= other.words_[i];
}

void FluentSet::subtract(const FluentSet& other) {
    size_t n = min(words_.size(), other.words_.size());
    for (size_t i = 0; i < n; ++i)
        words_[i] &= ~other.words_[i];
    trim();
}

int FluentSet::count() const {
    int total = 0;
    for (uint64_t w : words_)
        total += popcount(w);
    return total;
}

bool FluentSet::empty() const {
    return words_.empty();
}

vector<FluentId> FluentSet::elements() const {
    vector<FluentId> result;
    for (size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w) {
            int bit = countr_zero(w);
            result.push_back(static_cast<FluentId>(i * 64 + bit));
            w &= w - 1;
        }
    }
    return result;
}

bool FluentSet::operator==(const FluentSet& other) const {
    // Both sets keep no trailing zero words, so word vectors compare directly.
    return words_ == other.words_;
}

size_t FluentSet::hash() const {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

void FluentSet::trim() {
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

// --- GroundTask ---

optional<FluentId> GroundTask::find_fluent(const string& name) const {
    auto it = fluent_index.find(name);
    if (it == fluent_index.end())
        return nullopt;
    return it->second;
}

FluentId GroundTask::require_fluent(const string& name) const {
    auto it = fluent_index.find(name);
    if (it == fluent_index.end())
        throw UnknownFluent(name);
    return it->second;
}

FluentId GroundTask::add_fluent(const string& name) {
    if (name.empty())
        throw Error("fluent names must be non-empty");
    if (fluent_index.count(name))
        throw Error("duplicate fluent name: " + name);
    FluentId id = num_fluents();
    fluent_names.push_back(name);
    fluent_index.emplace(name, id);
    return id;
}

const GroundAction* GroundTask::find_action(const string& name) const {
    auto it = action_index.find(name);
    if (it == action_index.end())
        return nullptr;
    return &actions[it->second];
}

void GroundTask::add_action(GroundAction action) {
    if (action.name.empty())
        throw Error("action names must be non-empty");
    if (action_index.count(action.name))
        throw Error("duplicate action name: " + action.name);
    if (action.add.intersects(action.del))
        throw Error("action '" + action.name + "' both adds and deletes a fluent");
    if (action.cost.is_negative())
        throw NegativeCost("action '" + action.name + "' has negative cost " + action.cost.str());
    if (action.name_parts.empty())
        action.name_parts = {action.name};
    action_index.emplace(action.name, static_cast<int>(actions.size()));
    actions.push_back(std::move(action));
}

vector<string> GroundTask::fluent_names_of(const FluentSet& set) const {
    vector<string> result;
    for (FluentId f : set.elements())
        result.push_back(fluent_name(f));
    return result;
}

namespace {
void check_in_universe(const GroundTask& task, const FluentSet& set, const string& what) {
    for (FluentId f : set.elements())
        if (f < 0 || f >= task.num_fluents())
            throw Error(what + " references fluent id outside the task");
}
}  // namespace

void GroundTask::check() const {
    if (fluent_index.size() != fluent_names.size())
        throw Error("fluent name/index tables out of sync");
    check_in_universe(*this, init, "init");
    check_in_universe(*this, goal, "goal");
    for (const GroundAction& a : actions) {
        check_in_universe(*this, a.pre, "action " + a.name);
        check_in_universe(*this, a.neg_pre, "action " + a.name);
        check_in_universe(*this, a.add, "action " + a.name);
        check_in_universe(*this, a.del, "action " + a.name);
        if (a.add.intersects(a.del))
            throw Error("action '" + a.name + "' both adds and deletes a fluent");
        if (a.cost.is_negative())
            throw NegativeCost("action '" + a.name + "' has negative cost");
    }
}

// --- SoftGoalTask ---

void SoftGoalTask::add_fluent_utility(FluentId fluent, Fixed utility) {
    if (utility <= Fixed())
        throw Error("soft-goal utility must be strictly positive, got " + utility.str() +
                    " for " + base.fluent_name(fluent));
    for (auto& [f, u] : fluent_utilities) {
        if (f == fluent) {
            u += utility;
            return;
        }
    }
    fluent_utilities.emplace_back(fluent, utility);
}

void SoftGoalTask::add_formula_utility(const Formula& formula, Fixed utility) {
    if (utility.is_zero())
        throw Error("formula utility must be nonzero");
    for (size_t i = 0; i < formula_utilities.size(); ++i) {
        if (formula_utilities[i].first == formula) {
            formula_utilities[i].second += utility;
            if (formula_utilities[i].second.is_zero())
                formula_utilities.erase(formula_utilities.begin() + i);
            return;
        }
    }
    formula_utilities.emplace_back(formula, utility);
}

optional<Fixed> SoftGoalTask::utility_of(FluentId fluent) const {
    for (const auto& [f, u] : fluent_utilities)
        if (f == fluent)
            return u;
    return nullopt;
}

void SoftGoalTask::check() const {
    base.check();
    for (const auto& [f, u] : fluent_utilities) {
        if (f < 0 || f >= base.num_fluents())
            throw Error("soft goal references fluent id outside the task");
        if (u <= Fixed())
            throw Error("soft-goal utility must be strictly positive");
    }
    for (const auto& [formula, u] : formula_utilities) {
        if (u.is_zero())
            throw Error("formula utility must be nonzero");
        for (const auto& group : formula.groups())
            for (const Literal& lit : group)
                if (lit.fluent < 0 || lit.fluent >= base.num_fluents())
                    throw Error("formula references fluent id outside the task");
    }
}

// --- execution semantics ---

bool applicable(const FluentSet& state, const GroundAction& action) {
    return action.pre.subset_of(state) && !action.neg_pre.intersects(state);
}

FluentSet apply(const GroundTask& task, const FluentSet& state, const GroundAction& action) {
    if (!applicable(state, action)) {
        vector<string> missing;
        for (FluentId f : action.pre.elements())
            if (!state.contains(f))
                missing.push_back(task.fluent_name(f));
        for (FluentId f : action.neg_pre.elements())
            if (state.contains(f))
                missing.push_back("(not " + task.fluent_name(f) + ")");
        throw PreconditionViolation(action.name, std::move(missing));
    }
    FluentSet next = state;
    next.unite(action.add);
    next.subtract(action.del);
    return next;
}

Trajectory run(const GroundTask& task, const Plan& plan) {
    Trajectory trajectory;
    trajectory.plan = plan;
    trajectory.states.push_back(task.init);
    for (size_t i = 0; i < plan.size(); ++i) {
        const GroundAction* action = task.find_action(plan[i]);
        if (!action)
            throw UnknownAction(plan[i]);
        try {
            trajectory.states.push_back(apply(task, trajectory.states.back(), *action));
        } catch (const PreconditionViolation& e) {
            throw InapplicableAt(static_cast<int>(i), action->name, e.missing);
        }
    }
    return trajectory;
}

bool is_plan(const GroundTask& task, const Plan& plan) {
    try {
        Trajectory t = run(task, plan);
        return task.goal.subset_of(t.final_state());
    } catch (const InapplicableAt&) {
        return false;
    } catch (const UnknownAction&) {
        return false;
    }
}

Fixed plan_cost(const GroundTask& task, const Plan& plan) {
    try {
        run(task, plan);
    } catch (const InapplicableAt& e) {
        throw InapplicablePlan(e.what());
    }
    Fixed total;
    for (const string& name : plan)
        total += task.find_action(name)->cost;
    return total;
}

Fixed state_utility(const SoftGoalTask& task, const FluentSet& state) {
    Fixed total;
    for (const auto& [fluent, utility] : task.fluent_utilities)
        if (state.contains(fluent))
            total += utility;
    for (const auto& [formula, utility] : task.formula_utilities)
        if (eval_formula(formula, state))
            total += utility;
    return total;
}

Fixed plan_utility(const SoftGoalTask& task, const Plan& plan) {
    Trajectory trajectory;
    try {
        trajectory = run(task.base, plan);
    } catch (const InapplicableAt& e) {
        throw InapplicablePlan(e.what());
    }
    if (!task.base.goal.subset_of(trajectory.final_state())) {
        vector<string> missing;
        for (FluentId g : task.base.goal.elements())
            if (!trajectory.final_state().contains(g))
                missing.push_back(task.base.fluent_name(g));
        throw HardGoalUnsatisfied(std::move(missing));
    }
    return state_utility(task, trajectory.final_state()) - plan_cost(task.base, plan);
}

}  // namespace sgc
