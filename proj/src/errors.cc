#include "sgc/errors.h"

#include <sstream>

using namespace std;

namespace sgc {

namespace {
string join(const vector<string>& items, const string& sep) {
    string result;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i)
            result += sep;
        result += items[i];
    }
    return result;
}
}  // namespace

PreconditionViolation::PreconditionViolation(string action_name, vector<string> missing_fluents)
    : Error("precondition of '" + action_name + "' violated; missing: " +
            join(missing_fluents, ", ")),
      action(std::move(action_name)),
      missing(std::move(missing_fluents)) {}

InapplicableAt::InapplicableAt(int step_index, string action_name, vector<string> missing_fluents)
    : Error("plan inapplicable at step " + to_string(step_index) + " ('" + action_name +
            "'); missing: " + join(missing_fluents, ", ")),
      index(step_index),
      action(std::move(action_name)),
      missing(std::move(missing_fluents)) {}

HardGoalUnsatisfied::HardGoalUnsatisfied(vector<string> missing_goals)
    : Error("hard goals unsatisfied: " + join(missing_goals, ", ")),
      missing(std::move(missing_goals)) {}

UnknownAction::UnknownAction(const string& action_name)
    : Error("unknown action: '" + action_name + "'"), name(action_name) {}

UnknownFluent::UnknownFluent(const string& fluent_name)
    : Error("unknown fluent: '" + fluent_name + "'"), name(fluent_name) {}

SyntaxError::SyntaxError(const string& msg, int line_no, int column_no)
    : Error("syntax error at " + to_string(line_no) + ":" + to_string(column_no) + ": " + msg),
      line(line_no),
      column(column_no) {}

UnsupportedFeature::UnsupportedFeature(const string& construct_name)
    : Error("unsupported construct: " + construct_name), construct(construct_name) {}

UndeclaredFluent::UndeclaredFluent(const string& fluent_name)
    : Error("undeclared fluent: '" + fluent_name + "'"), name(fluent_name) {}

NameCollision::NameCollision(const string& colliding_name)
    : Error("name uses the reserved prefix: '" + colliding_name + "'"), name(colliding_name) {}

}  // namespace sgc
