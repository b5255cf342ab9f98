#ifndef SGC_SEXPR_H
#define SGC_SEXPR_H

#include <string>
#include <string_view>
#include <vector>

namespace sgc {

/*
  Parsed s-expression node. Both the PDDL subset and the native ground
  format are s-expressions; the format parsers walk this tree. Atoms are
  lower-cased (symbols are case-insensitive in both formats) and carry the
  source position for error reporting.
*/
struct SExpr {
    bool is_list = false;
    std::string atom;
    std::vector<SExpr> items;
    int line = 0;
    int column = 0;

    bool is_atom() const { return !is_list; }
    const SExpr& at(std::size_t i) const;  // throws SyntaxError when out of range
    std::size_t size() const { return items.size(); }
    // Head atom of a list, or "" if not a list / empty / non-atom head.
    std::string head() const;
};

// Parses a whole document into a sequence of top-level expressions.
// Iterative (no recursion), so arbitrary byte input cannot overflow the
// stack; every malformed input raises SyntaxError with a position.
std::vector<SExpr> parse_sexprs(std::string_view text);

// Like parse_sexprs but requires exactly one top-level expression.
SExpr parse_sexpr(std::string_view text);

std::string print_sexpr(const SExpr& expr);

}  // namespace sgc

#endif
