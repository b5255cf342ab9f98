#ifndef SGC_NAMES_H
#define SGC_NAMES_H

#include <string>

namespace sgc::names {

// Every fluent and action generated by the transformations carries this
// prefix. User input fed into the compilation pipeline must not use it.
inline constexpr const char* kReservedPrefix = "sgc--";

inline constexpr const char* kNormalMode = "sgc--normal-mode";
inline constexpr const char* kEndMode = "sgc--end-mode";
inline constexpr const char* kEndAction = "sgc--end";

bool is_reserved(const std::string& name);

std::string complement(const std::string& fluent);      // sgc--not-<f>
std::string done(const std::string& fluent);            // sgc--done-<f>
std::string pending(const std::string& fluent);         // sgc--pending-<f>
std::string collect(const std::string& fluent);         // sgc--collect-<f>
std::string forgo(const std::string& fluent);           // sgc--forgo-<f>

std::string formula_fluent(int k);                      // sgc--formula-<k>
std::string clause_fluent(int k, int i);                // sgc--formula-<k>-clause-<i>
std::string eval_term_action(int k, int i);             // sgc--eval-formula-<k>-term-<i>
std::string eval_clause_action(int k, int i, int j);    // sgc--eval-formula-<k>-clause-<i>-lit-<j>
std::string eval_top_action(int k);                     // sgc--eval-formula-<k>

}  // namespace sgc::names

#endif
