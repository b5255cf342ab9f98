#ifndef SGC_ERRORS_H
#define SGC_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace sgc {

// Root of everything this library throws on bad input. Anything escaping a
// parser or validator that is not an Error is a bug (the fuzz tests enforce
// this).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- execution semantics ---

class PreconditionViolation : public Error {
public:
    PreconditionViolation(std::string action, std::vector<std::string> missing_fluents);
    std::string action;
    std::vector<std::string> missing;
};

class InapplicableAt : public Error {
public:
    InapplicableAt(int index, std::string action, std::vector<std::string> missing_fluents);
    int index;
    std::string action;
    std::vector<std::string> missing;
};

class InapplicablePlan : public Error {
public:
    explicit InapplicablePlan(const std::string& msg) : Error(msg) {}
};

class HardGoalUnsatisfied : public Error {
public:
    explicit HardGoalUnsatisfied(std::vector<std::string> missing_goals);
    std::vector<std::string> missing;
};

class NotAPlan : public Error {
public:
    explicit NotAPlan(const std::string& msg) : Error(msg) {}
};

class UnknownAction : public Error {
public:
    explicit UnknownAction(const std::string& name);
    std::string name;
};

class UnknownFluent : public Error {
public:
    explicit UnknownFluent(const std::string& name);
    std::string name;
};

// --- input formats ---

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, int line, int column);
    int line;
    int column;
};

class UnsupportedFeature : public Error {
public:
    explicit UnsupportedFeature(const std::string& construct);
    std::string construct;
};

class DanglingPreference : public Error {
public:
    explicit DanglingPreference(const std::string& msg) : Error(msg) {}
};

class UndeclaredFluent : public Error {
public:
    explicit UndeclaredFluent(const std::string& name);
    std::string name;
};

class NegativeCost : public Error {
public:
    explicit NegativeCost(const std::string& msg) : Error(msg) {}
};

class UngroundablePreference : public Error {
public:
    explicit UngroundablePreference(const std::string& msg) : Error(msg) {}
};

// --- compilation ---

class FormulaNotLowered : public Error {
public:
    FormulaNotLowered() : Error("task still carries formula utilities; lower them first") {}
};

class NameCollision : public Error {
public:
    explicit NameCollision(const std::string& name);
    std::string name;
};

class ZeroOrNegativeUtility : public Error {
public:
    explicit ZeroOrNegativeUtility(const std::string& msg) : Error(msg) {}
};

class ZeroOrPositiveUtility : public Error {
public:
    explicit ZeroOrPositiveUtility(const std::string& msg) : Error(msg) {}
};

// --- search ---

class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& msg) : Error(msg) {}
};

}  // namespace sgc

#endif
