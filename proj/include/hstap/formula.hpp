/* formula.hpp -- LTLf formula AST, parsing, finite-trace evaluation,
 * Boolean simplification, and formula progression. */

#ifndef HSTAP_FORMULA_HPP
#define HSTAP_FORMULA_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hstap {

// A symbol is a set of proposition names, kept sorted and unique.
using Symbol = std::vector<std::string>;
// A finite word: sequence of symbols. Nonempty wherever evaluation happens.
using Word = std::vector<Symbol>;

inline Symbol make_symbol(std::initializer_list<std::string> props) {
    Symbol s(props);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline Symbol make_symbol(std::vector<std::string> props) {
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    return props;
}

inline bool symbol_has(const Symbol& s, std::string_view name) {
    return std::binary_search(s.begin(), s.end(), name,
                              [](std::string_view a, std::string_view b) { return a < b; });
}

enum class Op : std::uint8_t {
    True,
    False,
    Prop,
    // Internal nullary marker used by end-aware progression: holds iff the
    // remaining suffix is nonempty. Consuming any symbol discharges it.
    MoreSteps,
    Not,
    And,
    Or,
    Implies,
    Next,
    Until,
    Eventually,
    Always,
};

inline bool op_is_binary(Op op) {
    return op == Op::And || op == Op::Or || op == Op::Implies || op == Op::Until;
}

inline bool op_is_unary(Op op) {
    return op == Op::Not || op == Op::Next || op == Op::Eventually || op == Op::Always;
}

// Immutable formula with shared structure. Copying is cheap; all operations
// are pure, so formulas can be shared freely across threads.
class Formula {
  public:
    Formula() : node_(true_node()) {}

    static Formula True() { return Formula(true_node()); }
    static Formula False() { return Formula(false_node()); }
    static Formula MoreSteps() { return Formula(more_node()); }
    static Formula Prop(std::string name) {
        return Formula(std::make_shared<const Node>(Op::Prop, std::move(name), nullptr, nullptr));
    }
    static Formula Not(Formula f) { return unary(Op::Not, std::move(f)); }
    static Formula Next(Formula f) { return unary(Op::Next, std::move(f)); }
    static Formula Eventually(Formula f) { return unary(Op::Eventually, std::move(f)); }
    static Formula Always(Formula f) { return unary(Op::Always, std::move(f)); }
    static Formula And(Formula a, Formula b) { return binary(Op::And, std::move(a), std::move(b)); }
    static Formula Or(Formula a, Formula b) { return binary(Op::Or, std::move(a), std::move(b)); }
    static Formula Implies(Formula a, Formula b) {
        return binary(Op::Implies, std::move(a), std::move(b));
    }
    static Formula Until(Formula a, Formula b) {
        return binary(Op::Until, std::move(a), std::move(b));
    }

    Op op() const { return node_->op; }
    const std::string& name() const { return node_->name; }
    Formula left() const { return Formula(node_->left); }
    Formula right() const { return Formula(node_->right); }
    Formula child() const { return Formula(node_->left); }

    std::size_t hash() const { return node_->hash; }

    friend bool operator==(const Formula& a, const Formula& b) {
        return node_equal(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    // Total structural order; used for deterministic containers.
    static int compare(const Formula& a, const Formula& b) {
        return node_compare(a.node_.get(), b.node_.get());
    }
    friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

  private:
    struct Node {
        Op op;
        std::string name;
        std::shared_ptr<const Node> left, right;
        std::size_t hash;

        Node(Op o, std::string n, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r)
            : op(o), name(std::move(n)), left(std::move(l)), right(std::move(r)), hash(0) {
            std::size_t h = static_cast<std::size_t>(op) * 0x9e3779b97f4a7c15ull;
            for (char c : name) h = h * 131 + static_cast<unsigned char>(c);
            if (left) h = h * 0x100000001b3ull + left->hash;
            if (right) h = h * 0x100000001b3ull + right->hash;
            hash = h;
        }
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static Formula unary(Op op, Formula f) {
        return Formula(std::make_shared<const Node>(op, "", std::move(f.node_), nullptr));
    }
    static Formula binary(Op op, Formula a, Formula b) {
        return Formula(std::make_shared<const Node>(op, "", std::move(a.node_), std::move(b.node_)));
    }

    static const std::shared_ptr<const Node>& true_node() {
        static const std::shared_ptr<const Node> n =
            std::make_shared<const Node>(Op::True, "", nullptr, nullptr);
        return n;
    }
    static const std::shared_ptr<const Node>& false_node() {
        static const std::shared_ptr<const Node> n =
            std::make_shared<const Node>(Op::False, "", nullptr, nullptr);
        return n;
    }
    static const std::shared_ptr<const Node>& more_node() {
        static const std::shared_ptr<const Node> n =
            std::make_shared<const Node>(Op::MoreSteps, "", nullptr, nullptr);
        return n;
    }

    static bool node_equal(const Node* a, const Node* b) {
        if (a == b) return true;
        if (!a || !b) return false;
        if (a->hash != b->hash || a->op != b->op || a->name != b->name) return false;
        return node_equal(a->left.get(), b->left.get()) &&
               node_equal(a->right.get(), b->right.get());
    }

    static int node_compare(const Node* a, const Node* b) {
        if (a == b) return 0;
        if (!a) return -1;
        if (!b) return 1;
        if (a->op != b->op) return a->op < b->op ? -1 : 1;
        if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
        if (int c = node_compare(a->left.get(), b->left.get())) return c;
        return node_compare(a->right.get(), b->right.get());
    }

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + msg),
          line(l), column(c) {}
};

// ---------------------------------------------------------------------------
// Parsing. Grammar:
//   formula := "true" | "false" | ident | "!" formula | formula bin formula
//            | "X" formula | "F" formula | "G" formula | "(" formula ")"
//   bin := "&&" | "||" | "->" | "U"
// Precedence: unary > U > && > || > "->"; U and "->" are right-associative,
// && and || left-associative. Unicode aliases for all operators are accepted.
// ---------------------------------------------------------------------------

namespace detail {

enum class Tok { Ident, True, False, Not, AndOp, OrOp, ImpliesOp, NextOp, EvOp, AlwOp, UntilOp, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int l = line_, c = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", l, c});
                break;
            }
            char ch = src_[pos_];
            if (ch == '(') { advance(); out.push_back({Tok::LParen, "(", l, c}); continue; }
            if (ch == ')') { advance(); out.push_back({Tok::RParen, ")", l, c}); continue; }
            if (ch == '!') { advance(); out.push_back({Tok::Not, "!", l, c}); continue; }
            if (ch == '&') {
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '&') {
                    advance(); advance();
                    out.push_back({Tok::AndOp, "&&", l, c});
                    continue;
                }
                throw ParseError(l, c, "unknown operator token '&'");
            }
            if (ch == '|') {
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '|') {
                    advance(); advance();
                    out.push_back({Tok::OrOp, "||", l, c});
                    continue;
                }
                throw ParseError(l, c, "unknown operator token '|'");
            }
            if (ch == '-') {
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    advance(); advance();
                    out.push_back({Tok::ImpliesOp, "->", l, c});
                    continue;
                }
                throw ParseError(l, c, "unknown operator token '-'");
            }
            if (static_cast<unsigned char>(ch) >= 0x80) {
                out.push_back(unicode_token(l, c));
                continue;
            }
            if (is_ident_start(ch)) {
                std::string word;
                while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                    word.push_back(src_[pos_]);
                    advance();
                }
                out.push_back(classify(std::move(word), l, c));
                continue;
            }
            throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
        }
        return out;
    }

  private:
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

    Token classify(std::string word, int l, int c) {
        if (word == "true") return {Tok::True, word, l, c};
        if (word == "false") return {Tok::False, word, l, c};
        if (word == "U") return {Tok::UntilOp, word, l, c};
        if (word == "X") return {Tok::NextOp, word, l, c};
        if (word == "F") return {Tok::EvOp, word, l, c};
        if (word == "G") return {Tok::AlwOp, word, l, c};
        return {Tok::Ident, std::move(word), l, c};
    }

    Token unicode_token(int l, int c) {
        struct Alias { const char* utf8; Tok kind; const char* ascii; };
        static const Alias aliases[] = {
            {"◇", Tok::EvOp, "F"},       // white diamond
            {"⋄", Tok::EvOp, "F"},       // diamond operator
            {"□", Tok::AlwOp, "G"},      // white square
            {"◯", Tok::NextOp, "X"},     // large circle
            {"○", Tok::NextOp, "X"},     // white circle
            {"∧", Tok::AndOp, "&&"},     // logical and
            {"∨", Tok::OrOp, "||"},      // logical or
            {"¬", Tok::Not, "!"},        // not sign
            {"⇒", Tok::ImpliesOp, "->"}, // rightwards double arrow
            {"→", Tok::ImpliesOp, "->"}, // rightwards arrow
        };
        for (const auto& a : aliases) {
            std::string_view pat(a.utf8);
            if (src_.substr(pos_, pat.size()) == pat) {
                for (std::size_t i = 0; i < pat.size(); ++i) advance();
                return {a.kind, a.ascii, l, c};
            }
        }
        throw ParseError(l, c, "unknown operator token (unrecognized non-ASCII sequence)");
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; }
            else if (c == ' ' || c == '\t' || c == '\r') advance();
            else break;
        }
    }
    void advance() { ++pos_; ++col_; }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula run() {
        Formula f = parse_implies();
        if (peek().kind != Tok::End)
            throw ParseError(peek().line, peek().column,
                             "unexpected token '" + peek().text + "'");
        return f;
    }

  private:
    const Token& peek() const { return toks_[idx_]; }
    Token take() { return toks_[idx_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) { ++idx_; return true; }
        return false;
    }

    Formula parse_implies() {
        Formula l = parse_or();
        if (accept(Tok::ImpliesOp)) return Formula::Implies(std::move(l), parse_implies());
        return l;
    }
    Formula parse_or() {
        Formula l = parse_and();
        while (accept(Tok::OrOp)) l = Formula::Or(std::move(l), parse_and());
        return l;
    }
    Formula parse_and() {
        Formula l = parse_until();
        while (accept(Tok::AndOp)) l = Formula::And(std::move(l), parse_until());
        return l;
    }
    Formula parse_until() {
        Formula l = parse_unary();
        if (accept(Tok::UntilOp)) return Formula::Until(std::move(l), parse_until());
        return l;
    }
    Formula parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not: take(); return Formula::Not(parse_unary());
            case Tok::NextOp: take(); return Formula::Next(parse_unary());
            case Tok::EvOp: take(); return Formula::Eventually(parse_unary());
            case Tok::AlwOp: take(); return Formula::Always(parse_unary());
            default: return parse_atom();
        }
    }
    Formula parse_atom() {
        Token t = take();
        switch (t.kind) {
            case Tok::True: return Formula::True();
            case Tok::False: return Formula::False();
            case Tok::Ident: return Formula::Prop(std::move(t.text));
            case Tok::LParen: {
                Formula f = parse_implies();
                if (!accept(Tok::RParen))
                    throw ParseError(peek().line, peek().column, "expected ')'");
                return f;
            }
            case Tok::End:
                throw ParseError(t.line, t.column, "unexpected end of input");
            default:
                throw ParseError(t.line, t.column, "unexpected token '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

} // namespace detail

inline Formula parse_formula(std::string_view text) {
    return detail::Parser(detail::Lexer(text).run()).run();
}

// ---------------------------------------------------------------------------
// Rendering. render(parse(t)) reparses to a structurally equal AST.
// ---------------------------------------------------------------------------

namespace detail {

inline int precedence(Op op) {
    switch (op) {
        case Op::Implies: return 1;
        case Op::Or: return 2;
        case Op::And: return 3;
        case Op::Until: return 4;
        case Op::Not:
        case Op::Next:
        case Op::Eventually:
        case Op::Always: return 5;
        default: return 6;
    }
}

inline void render_into(const Formula& f, std::string& out, int parent_prec, bool right_side) {
    int p = precedence(f.op());
    bool parens = false;
    if (p < parent_prec) parens = true;
    else if (p == parent_prec && p != 6) {
        // Equal precedence: && and || are left-associative, U and -> right.
        bool right_assoc = (f.op() == Op::Until || f.op() == Op::Implies);
        parens = right_assoc ? !right_side : right_side;
    }
    if (parens) out.push_back('(');
    switch (f.op()) {
        case Op::True: out += "true"; break;
        case Op::False: out += "false"; break;
        case Op::MoreSteps: out += "@more"; break;
        case Op::Prop: out += f.name(); break;
        case Op::Not:
            out.push_back('!');
            render_into(f.child(), out, p, false);
            break;
        case Op::Next:
        case Op::Eventually:
        case Op::Always:
            out.push_back(f.op() == Op::Next ? 'X' : (f.op() == Op::Eventually ? 'F' : 'G'));
            out.push_back(' ');
            render_into(f.child(), out, p, false);
            break;
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Until: {
            render_into(f.left(), out, p, false);
            out += f.op() == Op::And ? " && " : f.op() == Op::Or ? " || "
                 : f.op() == Op::Implies ? " -> " : " U ";
            render_into(f.right(), out, p, true);
            break;
        }
    }
    if (parens) out.push_back(')');
}

} // namespace detail

inline std::string render(const Formula& f) {
    std::string out;
    detail::render_into(f, out, 0, false);
    return out;
}

// ---------------------------------------------------------------------------
// Finite-trace evaluation, instant i of word w (0 <= i <= h, w nonempty).
// ---------------------------------------------------------------------------

inline bool evaluate(const Formula& f, std::span<const Symbol> w, std::size_t i) {
    if (w.empty()) throw std::out_of_range("evaluate: empty word");
    if (i >= w.size()) throw std::out_of_range("evaluate: instant out of range");
    switch (f.op()) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::MoreSteps: return true; // any valid instant has a nonempty suffix
        case Op::Prop: return symbol_has(w[i], f.name());
        case Op::Not: return !evaluate(f.child(), w, i);
        case Op::And: return evaluate(f.left(), w, i) && evaluate(f.right(), w, i);
        case Op::Or: return evaluate(f.left(), w, i) || evaluate(f.right(), w, i);
        case Op::Implies: return !evaluate(f.left(), w, i) || evaluate(f.right(), w, i);
        case Op::Next: return i + 1 < w.size() && evaluate(f.child(), w, i + 1);
        case Op::Eventually:
            for (std::size_t j = i; j < w.size(); ++j)
                if (evaluate(f.child(), w, j)) return true;
            return false;
        case Op::Always:
            for (std::size_t j = i; j < w.size(); ++j)
                if (!evaluate(f.child(), w, j)) return false;
            return true;
        case Op::Until:
            for (std::size_t j = i; j < w.size(); ++j) {
                if (evaluate(f.right(), w, j)) {
                    bool ok = true;
                    for (std::size_t k = i; k < j && ok; ++k) ok = evaluate(f.left(), w, k);
                    if (ok) return true;
                }
            }
            return false;
    }
    return false;
}

inline bool evaluate(const Formula& f, const Word& w, std::size_t i) {
    return evaluate(f, std::span<const Symbol>(w.data(), w.size()), i);
}

// ---------------------------------------------------------------------------
// Boolean simplification: True/False absorption, idempotence, double
// negation, complementary literal pairs. Sound local rewrites only.
// ---------------------------------------------------------------------------

namespace detail {

inline void flatten(Op op, const Formula& f, std::vector<Formula>& out) {
    if (f.op() == op) {
        flatten(op, f.left(), out);
        flatten(op, f.right(), out);
    } else {
        out.push_back(f);
    }
}

inline bool contains_formula(const std::vector<Formula>& v, const Formula& f) {
    for (const auto& x : v)
        if (x == f) return true;
    return false;
}

inline Formula rebuild(Op op, const std::vector<Formula>& parts) {
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;)
        acc = op == Op::And ? Formula::And(parts[i], acc) : Formula::Or(parts[i], acc);
    return acc;
}

} // namespace detail

inline Formula simplify(const Formula& f) {
    switch (f.op()) {
        case Op::True:
        case Op::False:
        case Op::MoreSteps:
        case Op::Prop:
            return f;
        case Op::Not: {
            Formula c = simplify(f.child());
            if (c.op() == Op::True) return Formula::False();
            if (c.op() == Op::False) return Formula::True();
            if (c.op() == Op::Not) return c.child();
            return Formula::Not(c);
        }
        case Op::And:
        case Op::Or: {
            const bool conj = f.op() == Op::And;
            std::vector<Formula> raw;
            detail::flatten(f.op(), f, raw);
            std::vector<Formula> parts;
            for (const auto& r : raw) {
                Formula s = simplify(r);
                if (s.op() == (conj ? Op::False : Op::True))
                    return conj ? Formula::False() : Formula::True();
                if (s.op() == (conj ? Op::True : Op::False)) continue;
                if (s.op() == f.op()) {
                    std::vector<Formula> nested;
                    detail::flatten(f.op(), s, nested);
                    for (const auto& n : nested)
                        if (!detail::contains_formula(parts, n)) parts.push_back(n);
                } else if (!detail::contains_formula(parts, s)) {
                    parts.push_back(s);
                }
            }
            for (const auto& p : parts) {
                Formula neg = p.op() == Op::Not ? p.child() : Formula::Not(p);
                if (detail::contains_formula(parts, neg) && p.op() == Op::Not)
                    return conj ? Formula::False() : Formula::True();
            }
            if (parts.empty()) return conj ? Formula::True() : Formula::False();
            if (parts.size() == 1) return parts[0];
            return detail::rebuild(f.op(), parts);
        }
        case Op::Implies: {
            Formula a = simplify(f.left()), b = simplify(f.right());
            if (a.op() == Op::True) return b;
            if (a.op() == Op::False) return Formula::True();
            if (b.op() == Op::True) return Formula::True();
            if (b.op() == Op::False) return simplify(Formula::Not(a));
            if (a == b) return Formula::True();
            return Formula::Implies(a, b);
        }
        case Op::Next: {
            Formula c = simplify(f.child());
            // X false === false; X true is *not* true on finite traces.
            if (c.op() == Op::False) return Formula::False();
            return Formula::Next(c);
        }
        case Op::Eventually: {
            Formula c = simplify(f.child());
            if (c.op() == Op::True) return Formula::True();
            if (c.op() == Op::False) return Formula::False();
            if (c.op() == Op::Eventually) return c;
            return Formula::Eventually(c);
        }
        case Op::Always: {
            Formula c = simplify(f.child());
            if (c.op() == Op::True) return Formula::True();
            if (c.op() == Op::False) return Formula::False();
            if (c.op() == Op::Always) return c;
            return Formula::Always(c);
        }
        case Op::Until: {
            Formula a = simplify(f.left()), b = simplify(f.right());
            if (b.op() == Op::True) return Formula::True();
            if (b.op() == Op::False) return Formula::False();
            if (a.op() == Op::False) return b;
            if (a.op() == Op::True) return Formula::Eventually(b);
            return Formula::Until(a, b);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Progression (Bacchus-Kabanza rules), Boolean-simplified. The end-aware
// variant used by the automaton translation emits a MoreSteps guard for
// Next so that acceptance at the end of the word is decided exactly.
// ---------------------------------------------------------------------------

namespace detail {

inline Formula progress_raw(const Formula& f, const Symbol& s, bool end_aware) {
    switch (f.op()) {
        case Op::True:
        case Op::False:
            return f;
        case Op::MoreSteps:
            return Formula::True();
        case Op::Prop:
            return symbol_has(s, f.name()) ? Formula::True() : Formula::False();
        case Op::Not:
            return Formula::Not(progress_raw(f.child(), s, end_aware));
        case Op::And:
            return Formula::And(progress_raw(f.left(), s, end_aware),
                                progress_raw(f.right(), s, end_aware));
        case Op::Or:
            return Formula::Or(progress_raw(f.left(), s, end_aware),
                               progress_raw(f.right(), s, end_aware));
        case Op::Implies:
            return Formula::Implies(progress_raw(f.left(), s, end_aware),
                                    progress_raw(f.right(), s, end_aware));
        case Op::Next:
            return end_aware ? Formula::And(Formula::MoreSteps(), f.child()) : f.child();
        case Op::Until:
            return Formula::Or(progress_raw(f.right(), s, end_aware),
                               Formula::And(progress_raw(f.left(), s, end_aware), f));
        case Op::Eventually:
            return Formula::Or(progress_raw(f.child(), s, end_aware), f);
        case Op::Always:
            return Formula::And(progress_raw(f.child(), s, end_aware), f);
    }
    return f;
}

} // namespace detail

inline Formula progress(const Formula& f, const Symbol& s) {
    return simplify(detail::progress_raw(f, s, false));
}

// Residual after consuming one symbol, tracking whether obligations require
// further symbols. States of the translated automaton live in this form.
inline Formula progress_end_aware(const Formula& f, const Symbol& s) {
    return simplify(detail::progress_raw(f, s, true));
}

// Whether a residual holds when no further symbols remain: existential
// obligations (propositions, Next, Until, Eventually) fail over the empty
// suffix, universal ones (Always) hold vacuously.
inline bool empty_suffix_accepts(const Formula& f) {
    switch (f.op()) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Prop: return false;
        case Op::MoreSteps: return false;
        case Op::Not: return !empty_suffix_accepts(f.child());
        case Op::And: return empty_suffix_accepts(f.left()) && empty_suffix_accepts(f.right());
        case Op::Or: return empty_suffix_accepts(f.left()) || empty_suffix_accepts(f.right());
        case Op::Implies:
            return !empty_suffix_accepts(f.left()) || empty_suffix_accepts(f.right());
        case Op::Next: return false;
        case Op::Until: return false;
        case Op::Eventually: return false;
        case Op::Always: return true;
    }
    return false;
}

inline void collect_propositions(const Formula& f, std::set<std::string>& out) {
    switch (f.op()) {
        case Op::Prop: out.insert(f.name()); break;
        case Op::Not:
        case Op::Next:
        case Op::Eventually:
        case Op::Always:
            collect_propositions(f.child(), out);
            break;
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Until:
            collect_propositions(f.left(), out);
            collect_propositions(f.right(), out);
            break;
        default: break;
    }
}

inline std::set<std::string> propositions(const Formula& f) {
    std::set<std::string> out;
    collect_propositions(f, out);
    return out;
}

} // namespace hstap

#endif // HSTAP_FORMULA_HPP
