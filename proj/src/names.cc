#include "sgc/names.h"

using namespace std;

namespace sgc::names {

bool is_reserved(const string& name) {
    return name.rfind(kReservedPrefix, 0) == 0;
}

string complement(const string& fluent) {
    return "sgc--not-" + fluent;
}

string done(const string& fluent) {
    return "sgc--done-" + fluent;
}

string pending(const string& fluent) {
    return "sgc--pending-" + fluent;
}

string collect(const string& fluent) {
    return "sgc--collect-" + fluent;
}

string forgo(const string& fluent) {
    return "sgc--forgo-" + fluent;
}

string formula_fluent(int k) {
    return "sgc--formula-" + to_string(k);
}

string clause_fluent(int k, int i) {
    return formula_fluent(k) + "-clause-" + to_string(i);
}

string eval_term_action(int k, int i) {
    return "sgc--eval-formula-" + to_string(k) + "-term-" + to_string(i);
}

string eval_clause_action(int k, int i, int j) {
    return "sgc--eval-formula-" + to_string(k) + "-clause-" + to_string(i) + "-lit-" +
           to_string(j);
}

string eval_top_action(int k) {
    return "sgc--eval-formula-" + to_string(k);
}

}  // namespace sgc::names
