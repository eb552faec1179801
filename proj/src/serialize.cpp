#include "fano/serialize.hpp"

#include <cctype>
#include <vector>

namespace fano {

namespace {

std::string join_weight(const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

bool all_zero(const Weight& w) {
    for (int x : w)
        if (x != 0) return false;
    return true;
}

} // namespace

std::string atom_to_string(const IrredBundle& e) {
    // Extract the twist so the printed U*-block ends in 0.
    const int t = e.a.empty() ? 0 : e.a.back();
    Weight a = e.a;
    for (auto& x : a) x -= t;

    std::vector<std::string> parts;
    if (!all_zero(a)) parts.push_back("S[" + join_weight(a) + "]U*");
    if (!all_zero(e.b)) parts.push_back("S[" + join_weight(e.b) + "]Q");
    if (t != 0 || parts.empty()) parts.push_back(t == 0 ? "O" : "O(" + std::to_string(t) + ")");

    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += " ⊗ ";
        s += parts[i];
    }
    return s;
}

std::string expr_to_string(const BundleExpr& e) {
    if (e.atoms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [atom, mult] : e.atoms) {
        if (!first) s += " ⊕ ";
        first = false;
        std::string a = atom_to_string(atom);
        if (mult > 1) {
            const bool multi = a.find(" ⊗ ") != std::string::npos;
            s += (multi ? "(" + a + ")" : a) + "^" + std::to_string(mult);
        } else {
            s += a;
        }
    }
    return s;
}

namespace {

struct Lexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw Error("parse_expr: expected integer at '" + std::string(text.substr(start)) + "'");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error("parse_expr: " + what + " near '" + std::string(text.substr(pos, 24)) + "'");
    }
};

Weight parse_bracket_weight(Lexer& lx) {
    if (!lx.eat("[")) lx.fail("expected '['");
    Weight w;
    w.push_back(lx.integer());
    while (lx.eat(",")) w.push_back(lx.integer());
    if (!lx.eat("]")) lx.fail("expected ']'");
    return w;
}

// factor := S[..]U* | S[..]Q | O | O(t)
IrredBundle parse_factor(Lexer& lx, GrSpec gr) {
    if (lx.eat("S")) {
        Weight w = parse_bracket_weight(lx);
        if (lx.eat("U*")) {
            if (static_cast<int>(w.size()) != gr.k) lx.fail("U*-block length != k");
            IrredBundle e{gr, w, Weight(static_cast<size_t>(gr.qrank()), 0)};
            e.canonicalize();
            return e;
        }
        if (lx.eat("Q")) {
            if (static_cast<int>(w.size()) != gr.qrank()) lx.fail("Q-block length != n-k");
            IrredBundle e{gr, Weight(static_cast<size_t>(gr.k), 0), w};
            e.canonicalize();
            return e;
        }
        lx.fail("expected U* or Q after Schur block");
    }
    if (lx.eat("O")) {
        int t = 0;
        if (lx.eat("(")) {
            t = lx.integer();
            if (!lx.eat(")")) lx.fail("expected ')'");
        }
        return make_line(gr, t);
    }
    lx.fail("expected factor");
}

BundleExpr parse_term(Lexer& lx, GrSpec gr) {
    bool paren = lx.eat("(");
    BundleExpr term = BundleExpr::single(parse_factor(lx, gr));
    while (lx.eat("⊗")) term = tensor(term, BundleExpr::single(parse_factor(lx, gr)));
    if (paren && !lx.eat(")")) lx.fail("expected ')'");
    if (lx.eat("^")) {
        const int m = lx.integer();
        if (m < 1) lx.fail("multiplicity must be >= 1");
        BundleExpr scaled = BundleExpr::zero(gr);
        for (const auto& [a, c] : term.atoms) scaled.add(a, c * m);
        return scaled;
    }
    return term;
}

} // namespace

BundleExpr parse_expr(GrSpec gr, const std::string& text) {
    Lexer lx{text};
    if (lx.eat("0") && lx.done()) return BundleExpr::zero(gr);
    lx.pos = 0;
    BundleExpr e = parse_term(lx, gr);
    while (lx.eat("⊕")) e += parse_term(lx, gr);
    if (!lx.done()) lx.fail("trailing input");
    return e;
}

} // namespace fano
