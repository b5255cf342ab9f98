#ifndef SGC_FORMULA_H
#define SGC_FORMULA_H

#include <vector>

namespace sgc {

class FluentSet;

struct Literal {
    int fluent = -1;
    bool negated = false;

    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

/*
  Preference formula over fluent literals, restricted to the three shapes
  the transformations handle: a single literal, a DNF (disjunction of
  conjunctive terms) or a CNF (conjunction of disjunctive clauses). Groups
  are the terms resp. clauses; a literal formula has one singleton group.
*/
class Formula {
public:
    enum class Shape { literal, dnf, cnf };

    static Formula literal(Literal lit);
    static Formula dnf(std::vector<std::vector<Literal>> terms);
    static Formula cnf(std::vector<std::vector<Literal>> clauses);

    Shape shape() const { return shape_; }
    const std::vector<std::vector<Literal>>& groups() const { return groups_; }

    bool operator==(const Formula&) const = default;

private:
    Formula(Shape shape, std::vector<std::vector<Literal>> groups);

    Shape shape_ = Shape::literal;
    std::vector<std::vector<Literal>> groups_;
};

// Truth of the formula in a state (negated literal = fluent absent).
bool eval_formula(const Formula& formula, const FluentSet& state);

// De Morgan dual: DNF terms become CNF clauses of negated literals and vice
// versa; a literal just flips polarity. Involution up to structure.
Formula negate_formula(const Formula& formula);

}  // namespace sgc

#endif
