#include "sgc/native.h"

#include <unordered_set>

#include "sgc/errors.h"
#include "sgc/names.h"
#include "sgc/sexpr.h"

using namespace std;

namespace sgc {

namespace {

[[noreturn]] void fail(const SExpr& at, const string& msg) {
    throw SyntaxError(msg, at.line, at.column);
}

string expect_atom(const SExpr& e, const string& what) {
    if (!e.is_atom())
        fail(e, "expected " + what);
    return e.atom;
}

FluentId lookup_fluent(const GroundTask& task, const SExpr& e) {
    string name = expect_atom(e, "fluent name");
    auto id = task.find_fluent(name);
    if (!id)
        throw UndeclaredFluent(name);
    return *id;
}

FluentSet read_fluent_list(const GroundTask& task, const SExpr& e) {
    if (!e.is_list)
        fail(e, "expected a fluent list");
    FluentSet set;
    for (const SExpr& item : e.items)
        set.insert(lookup_fluent(task, item));
    return set;
}

Literal read_literal(const GroundTask& task, const SExpr& e) {
    if (e.is_atom())
        return {lookup_fluent(task, e), false};
    if (e.head() == "not" && e.size() == 2)
        return {lookup_fluent(task, e.at(1)), true};
    fail(e, "expected a literal (fluent or (not fluent))");
}

vector<vector<Literal>> read_groups(const GroundTask& task, const SExpr& e) {
    if (!e.is_list)
        fail(e, "expected a list of literal groups");
    vector<vector<Literal>> groups;
    for (const SExpr& group : e.items) {
        if (!group.is_list)
            fail(group, "expected a literal group");
        vector<Literal> literals;
        for (const SExpr& lit : group.items)
            literals.push_back(read_literal(task, lit));
        groups.push_back(std::move(literals));
    }
    return groups;
}

Fixed read_number(const SExpr& e) {
    return Fixed::parse(expect_atom(e, "a number"));
}

// Consumes ":key value" pairs from a clause tail.
struct KeywordArgs {
    vector<pair<string, const SExpr*>> pairs;

    static KeywordArgs parse(const SExpr& clause, size_t start) {
        KeywordArgs args;
        size_t i = start;
        while (i < clause.size()) {
            string key = expect_atom(clause.at(i), "a :keyword");
            if (key.empty() || key[0] != ':')
                fail(clause.at(i), "expected a :keyword, got '" + key + "'");
            if (i + 1 >= clause.size())
                fail(clause.at(i), "keyword '" + key + "' is missing a value");
            args.pairs.emplace_back(key, &clause.at(i + 1));
            i += 2;
        }
        return args;
    }

    const SExpr* find(const string& key) const {
        for (const auto& [k, v] : pairs)
            if (k == key)
                return v;
        return nullptr;
    }
};

void read_action(SoftGoalTask& task, const SExpr& clause) {
    if (clause.size() < 2 || !clause.at(1).is_atom())
        fail(clause, "action needs a name");
    GroundAction action;
    action.name = clause.at(1).atom;
    action.name_parts = {action.name};
    KeywordArgs args = KeywordArgs::parse(clause, 2);
    for (const auto& [key, value] : args.pairs) {
        if (key == ":pre")
            action.pre = read_fluent_list(task.base, *value);
        else if (key == ":neg-pre")
            action.neg_pre = read_fluent_list(task.base, *value);
        else if (key == ":add")
            action.add = read_fluent_list(task.base, *value);
        else if (key == ":del")
            action.del = read_fluent_list(task.base, *value);
        else if (key == ":cost")
            action.cost = read_number(*value);
        else
            fail(clause, "unknown action keyword '" + key + "'");
    }
    if (action.cost.is_negative())
        throw NegativeCost("action '" + action.name + "' has negative cost " +
                           action.cost.str());
    task.base.add_action(std::move(action));
}

void read_soft(SoftGoalTask& task, const SExpr& clause) {
    for (size_t i = 1; i < clause.size(); ++i) {
        const SExpr& entry = clause.at(i);
        if (!entry.is_list || entry.size() != 2)
            fail(entry, "expected (fluent utility)");
        FluentId fluent = lookup_fluent(task.base, entry.at(0));
        Fixed utility = read_number(entry.at(1));
        if (utility <= Fixed())
            throw Error("soft-goal utility must be strictly positive, got " + utility.str());
        task.add_fluent_utility(fluent, utility);
    }
}

void read_soft_formula(SoftGoalTask& task, const SExpr& clause) {
    KeywordArgs args = KeywordArgs::parse(clause, 1);
    const SExpr* utility_expr = args.find(":utility");
    if (!utility_expr)
        fail(clause, "soft-formula needs :utility");
    Fixed utility = read_number(*utility_expr);
    if (utility.is_zero())
        throw Error("soft-formula utility must be nonzero");

    optional<Formula> formula;
    if (const SExpr* e = args.find(":dnf"))
        formula = Formula::dnf(read_groups(task.base, *e));
    else if (const SExpr* e = args.find(":cnf"))
        formula = Formula::cnf(read_groups(task.base, *e));
    else if (const SExpr* e = args.find(":literal"))
        formula = Formula::literal(read_literal(task.base, *e));
    if (!formula)
        fail(clause, "soft-formula needs one of :dnf, :cnf, :literal");
    task.add_formula_utility(*formula, utility);
}

}  // namespace

SoftGoalTask read_native(string_view text, const NativeReadOptions& options) {
    SExpr root = parse_sexpr(text);
    if (root.head() != "task")
        fail(root, "expected (task ...)");

    SoftGoalTask task;
    bool saw_fluents = false;
    for (size_t i = 1; i < root.size(); ++i) {
        const SExpr& clause = root.at(i);
        string head = clause.head();
        if (head == "fluents") {
            for (size_t j = 1; j < clause.size(); ++j)
                task.base.add_fluent(expect_atom(clause.at(j), "fluent name"));
            saw_fluents = true;
        } else if (head == "init") {
            if (!saw_fluents)
                fail(clause, "(fluents ...) must come before (init ...)");
            for (size_t j = 1; j < clause.size(); ++j)
                task.base.init.insert(lookup_fluent(task.base, clause.at(j)));
        } else if (head == "goal") {
            for (size_t j = 1; j < clause.size(); ++j)
                task.base.goal.insert(lookup_fluent(task.base, clause.at(j)));
        } else if (head == "action") {
            read_action(task, clause);
        } else if (head == "soft") {
            read_soft(task, clause);
        } else if (head == "soft-formula") {
            read_soft_formula(task, clause);
        } else {
            fail(clause, "unknown task clause '" + head + "'");
        }
    }
    if (!options.allow_reserved_names) {
        for (const string& name : task.base.fluent_names)
            if (names::is_reserved(name))
                throw NameCollision(name);
        for (const GroundAction& action : task.base.actions)
            if (names::is_reserved(action.name))
                throw NameCollision(action.name);
    }
    task.check();
    return task;
}

namespace {

string fluent_list(const GroundTask& task, const FluentSet& set) {
    string out = "(";
    bool first = true;
    for (FluentId f : set.elements()) {
        if (!first)
            out += ' ';
        out += task.fluent_name(f);
        first = false;
    }
    return out + ")";
}

string literal_text(const GroundTask& task, const Literal& lit) {
    if (lit.negated)
        return "(not " + task.fluent_name(lit.fluent) + ")";
    return task.fluent_name(lit.fluent);
}

string groups_text(const GroundTask& task, const Formula& formula) {
    string out = "(";
    for (size_t i = 0; i < formula.groups().size(); ++i) {
        if (i)
            out += ' ';
        out += '(';
        const auto& group = formula.groups()[i];
        for (size_t j = 0; j < group.size(); ++j) {
            if (j)
                out += ' ';
            out += literal_text(task, group[j]);
        }
        out += ')';
    }
    return out + ")";
}

void write_base(const GroundTask& task, string& out) {
    out += "(task\n  (fluents";
    for (const string& name : task.fluent_names)
        out += " " + name;
    out += ")\n  (init";
    for (FluentId f : task.init.elements())
        out += " " + task.fluent_name(f);
    out += ")\n  (goal";
    for (FluentId f : task.goal.elements())
        out += " " + task.fluent_name(f);
    out += ")\n";
    for (const GroundAction& action : task.actions) {
        out += "  (action " + action.name;
        out += " :pre " + fluent_list(task, action.pre);
        if (!action.neg_pre.empty())
            out += " :neg-pre " + fluent_list(task, action.neg_pre);
        out += " :add " + fluent_list(task, action.add);
        out += " :del " + fluent_list(task, action.del);
        out += " :cost " + action.cost.str() + ")\n";
    }
}

}  // namespace

string write_native(const SoftGoalTask& task) {
    string out;
    write_base(task.base, out);
    if (!task.fluent_utilities.empty()) {
        out += "  (soft";
        for (const auto& [fluent, utility] : task.fluent_utilities)
            out += " (" + task.base.fluent_name(fluent) + " " + utility.str() + ")";
        out += ")\n";
    }
    for (const auto& [formula, utility] : task.formula_utilities) {
        out += "  (soft-formula ";
        switch (formula.shape()) {
        case Formula::Shape::literal:
            out += ":literal " + literal_text(task.base, formula.groups()[0][0]);
            break;
        case Formula::Shape::dnf:
            out += ":dnf " + groups_text(task.base, formula);
            break;
        case Formula::Shape::cnf:
            out += ":cnf " + groups_text(task.base, formula);
            break;
        }
        out += " :utility " + utility.str() + ")\n";
    }
    out += ")\n";
    return out;
}

string write_native(const GroundTask& task) {
    string out;
    write_base(task, out);
    out += ")\n";
    return out;
}

}  // namespace sgc
