#include "sgc/sexpr.h"

#include <cctype>

#include "sgc/errors.h"

using namespace std;

namespace sgc {

const SExpr& SExpr::at(size_t i) const {
    if (!is_list || i >= items.size())
        throw SyntaxError("expression too short", line, column);
    return items[i];
}

string SExpr::head() const {
    if (!is_list || items.empty() || !items[0].is_atom())
        return "";
    return items[0].atom;
}

namespace {

struct Cursor {
    string_view text;
    size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }
    void skip_blank() {
        while (!done()) {
            char c = peek();
            if (c == ';') {
                while (!done() && peek() != '\n')
                    advance();
            } else if (isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }
};

bool atom_char(char c) {
    return !isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ';';
}

}  // namespace

vector<SExpr> parse_sexprs(string_view text) {
    Cursor cur{text};
    vector<SExpr> roots;
    // Stack of unfinished lists; depth-unbounded input stays iterative.
    vector<SExpr> stack;

    auto emit = [&](SExpr&& node) {
        if (stack.empty())
            roots.push_back(std::move(node));
        else
            stack.back().items.push_back(std::move(node));
    };

    while (true) {
        cur.skip_blank();
        if (cur.done())
            break;
        char c = cur.peek();
        if (c == '(') {
            SExpr list;
            list.is_list = true;
            list.line = cur.line;
            list.column = cur.column;
            stack.push_back(std::move(list));
            cur.advance();
        } else if (c == ')') {
            if (stack.empty())
                throw SyntaxError("unmatched ')'", cur.line, cur.column);
            cur.advance();
            SExpr finished = std::move(stack.back());
            stack.pop_back();
            emit(std::move(finished));
        } else {
            SExpr atom;
            atom.line = cur.line;
            atom.column = cur.column;
            while (!cur.done() && atom_char(cur.peek())) {
                atom.atom += static_cast<char>(tolower(static_cast<unsigned char>(cur.peek())));
                cur.advance();
            }
            if (atom.atom.empty())
                throw SyntaxError("unexpected character", cur.line, cur.column);
            emit(std::move(atom));
        }
    }
    if (!stack.empty())
        throw SyntaxError("unclosed '('", stack.back().line, stack.back().column);
    return roots;
}

SExpr parse_sexpr(string_view text) {
    vector<SExpr> roots = parse_sexprs(text);
    if (roots.empty())
        throw SyntaxError("empty input", 1, 1);
    if (roots.size() > 1)
        throw SyntaxError("expected a single expression", roots[1].line, roots[1].column);
    return std::move(roots[0]);
}

namespace {
void print_node(const SExpr& expr, string& out) {
    // Iterative with an explicit work stack; mirrors the parser's bound.
    struct Frame {
        const SExpr* node;
        size_t next = 0;
    };
    vector<Frame> stack{{&expr}};
    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (frame.node->is_atom()) {
            out += frame.node->atom;
            stack.pop_back();
            continue;
        }
        if (frame.next == 0)
            out += '(';
        if (frame.next < frame.node->items.size()) {
            if (frame.next > 0)
                out += ' ';
            const SExpr* child = &frame.node->items[frame.next++];
            stack.push_back({child});
        } else {
            out += ')';
            stack.pop_back();
        }
    }
}
}  // namespace

string print_sexpr(const SExpr& expr) {
    string out;
    print_node(expr, out);
    return out;
}

}  // namespace sgc
