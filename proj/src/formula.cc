#include "sgc/formula.h"

#include <algorithm>

#include "sgc/errors.h"
#include "sgc/task.h"

using namespace std;

namespace sgc {

Formula::Formula(Shape shape, vector<vector<Literal>> groups)
    : shape_(shape), groups_(std::move(groups)) {
    if (groups_.empty())
        throw Error("formula must have at least one term/clause");
    for (const auto& group : groups_) {
        if (group.empty())
            throw Error("formula term/clause must be non-empty");
        for (const Literal& lit : group) {
            Literal flipped{lit.fluent, !lit.negated};
            if (find(group.begin(), group.end(), flipped) != group.end())
                throw Error("formula term/clause contains a literal and its negation");
        }
    }
}

Formula Formula::literal(Literal lit) {
    return Formula(Shape::literal, {{lit}});
}

Formula Formula::dnf(vector<vector<Literal>> terms) {
    return Formula(Shape::dnf, std::move(terms));
}

Formula Formula::cnf(vector<vector<Literal>> clauses) {
    return Formula(Shape::cnf, std::move(clauses));
}

namespace {
bool literal_true(const Literal& lit, const FluentSet& state) {
    return state.contains(lit.fluent) != lit.negated;
}
}  // namespace

bool eval_formula(const Formula& formula, const FluentSet& state) {
    switch (formula.shape()) {
    case Formula::Shape::literal:
        return literal_true(formula.groups()[0][0], state);
    case Formula::Shape::dnf:
        for (const auto& term : formula.groups()) {
            bool all = true;
            for (const Literal& lit : term)
                all = all && literal_true(lit, state);
            if (all)
                return true;
        }
        return false;
    case Formula::Shape::cnf:
        for (const auto& clause : formula.groups()) {
            bool any = false;
            for (const Literal& lit : clause)
                any = any || literal_true(lit, state);
            if (!any)
                return false;
        }
        return true;
    }
    return false;
}

Formula negate_formula(const Formula& formula) {
    vector<vector<Literal>> negated;
    negated.reserve(formula.groups().size());
    for (const auto& group : formula.groups()) {
        vector<Literal> flipped;
        flipped.reserve(group.size());
        for (const Literal& lit : group)
            flipped.push_back({lit.fluent, !lit.negated});
        negated.push_back(std::move(flipped));
    }
    switch (formula.shape()) {
    case Formula::Shape::literal:
        return Formula::literal(negated[0][0]);
    case Formula::Shape::dnf:
        return Formula::cnf(std::move(negated));
    case Formula::Shape::cnf:
        return Formula::dnf(std::move(negated));
    }
    throw Error("unreachable formula shape");
}

}  // namespace sgc
