#include "sgc/plan_io.h"

#include "sgc/errors.h"
#include "sgc/sexpr.h"

using namespace std;

namespace sgc {

PlanSteps parse_plan(string_view text) {
    PlanSteps steps;
    for (const SExpr& expr : parse_sexprs(text)) {
        if (!expr.is_list || expr.items.empty())
            throw SyntaxError("expected (action-name arg*)", expr.line, expr.column);
        vector<string> tokens;
        for (const SExpr& item : expr.items) {
            if (!item.is_atom())
                throw SyntaxError("plan steps must be flat", item.line, item.column);
            tokens.push_back(item.atom);
        }
        steps.push_back(std::move(tokens));
    }
    return steps;
}

namespace {
string joined_name(const vector<string>& tokens) {
    string name = tokens[0];
    for (size_t i = 1; i < tokens.size(); ++i)
        name += "--" + tokens[i];
    return name;
}
}  // namespace

Plan resolve_plan_steps(const GroundTask& task, const PlanSteps& steps) {
    Plan plan;
    for (const auto& tokens : steps) {
        string name = joined_name(tokens);
        if (!task.find_action(name))
            throw UnknownAction(name);
        plan.push_back(std::move(name));
    }
    return plan;
}

Plan parse_plan_against(const GroundTask& task, string_view text) {
    return resolve_plan_steps(task, parse_plan(text));
}

string write_plan(const GroundTask& task, const Plan& plan) {
    string out;
    for (const string& name : plan) {
        const GroundAction* action = task.find_action(name);
        vector<string> parts = action ? action->name_parts : vector<string>{name};
        out += '(';
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += ' ';
            out += parts[i];
        }
        out += ")\n";
    }
    return out;
}

}  // namespace sgc
