#include "morava/relation.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "morava/common.hpp"

namespace morava::dsl {

namespace {

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw SyntaxError(std::string("expected ") + what, pos);
    }

    std::string ident() {
        skip_ws();
        if (pos >= text.size() || !ident_start(text[pos]))
            throw SyntaxError("expected identifier", pos);
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    long long integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError("expected integer", pos);
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1ll << 40)) throw SyntaxError("integer literal too large", pos);
            ++pos;
        }
        return v;
    }

    // ---- integer (exponent) expressions ----

    IntExprPtr int_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            IntExprPtr e = int_chain();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<IntExpr>();
            e->kind = IntExpr::Kind::constant;
            e->value = integer();
            return e;
        }
        if (ident_start(c)) {
            auto e = std::make_shared<IntExpr>();
            e->kind = IntExpr::Kind::name;
            e->name = ident();
            return e;
        }
        throw SyntaxError("expected exponent expression", pos);
    }

    static int int_prec(char op) { return op == '^' ? 3 : op == '*' ? 2 : 1; }

    IntExprPtr int_chain(int min_prec = 1) {
        IntExprPtr lhs = int_atom();
        for (;;) {
            char op = peek();
            if (op != '+' && op != '-' && op != '*' && op != '^') break;
            int prec = int_prec(op);
            if (prec < min_prec) break;
            ++pos;
            // '^' is right-associative, the rest left-associative
            IntExprPtr rhs = int_chain(op == '^' ? prec : prec + 1);
            auto e = std::make_shared<IntExpr>();
            e->kind = op == '+'   ? IntExpr::Kind::add
                      : op == '-' ? IntExpr::Kind::sub
                      : op == '*' ? IntExpr::Kind::mul
                                  : IntExpr::Kind::pow;
            e->lhs = lhs;
            e->rhs = rhs;
            lhs = e;
        }
        return lhs;
    }

    // exponent in factor position: int, ident, or parenthesized chain
    IntExprPtr expo() {
        char c = peek();
        if (c == '(') {
            ++pos;
            IntExprPtr e = int_chain();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = std::make_shared<IntExpr>();
            e->kind = IntExpr::Kind::constant;
            e->value = integer();
            return e;
        }
        if (ident_start(c)) {
            auto e = std::make_shared<IntExpr>();
            e->kind = IntExpr::Kind::name;
            e->name = ident();
            return e;
        }
        throw SyntaxError("expected exponent", pos);
    }

    // ---- relation expressions ----

    NodePtr base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            NodePtr e = expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::int_const;
            n->value = integer();
            return n;
        }
        if (ident_start(c)) {
            std::size_t save = pos;
            std::string name = ident();
            if (name == "sum" && peek() == '(') {
                ++pos;
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::sum;
                n->name = ident();
                expect('=', "'='");
                n->lo = sum_bound();
                expect('.', "'..'");
                expect('.', "'..'");
                n->hi = sum_bound();
                expect(',', "','");
                n->kids.push_back(expr());
                expect(')', "')'");
                return n;
            }
            pos = save;
            name = ident();
            auto n = std::make_shared<Node>();
            if (name == "s" || name == "p") {
                n->kind = Node::Kind::param;
                n->name = name;
            } else {
                n->kind = Node::Kind::var;
                n->name = name;
            }
            return n;
        }
        throw SyntaxError("expected variable, integer, '(' or sum", pos);
    }

    bool at_dotdot() {
        skip_ws();
        return pos + 1 < text.size() && text[pos] == '.' && text[pos + 1] == '.';
    }

    // sum bounds accept a bare operator chain, stopping at '..' or ','
    IntExprPtr sum_bound(int min_prec = 1) {
        IntExprPtr lhs = int_atom();
        for (;;) {
            if (at_dotdot()) break;
            char op = peek();
            if (op != '+' && op != '-' && op != '*' && op != '^') break;
            int prec = int_prec(op);
            if (prec < min_prec) break;
            ++pos;
            IntExprPtr rhs = sum_bound(op == '^' ? prec : prec + 1);
            auto e = std::make_shared<IntExpr>();
            e->kind = op == '+'   ? IntExpr::Kind::add
                      : op == '-' ? IntExpr::Kind::sub
                      : op == '*' ? IntExpr::Kind::mul
                                  : IntExpr::Kind::pow;
            e->lhs = lhs;
            e->rhs = rhs;
            lhs = e;
        }
        return lhs;
    }

    NodePtr factor() {
        NodePtr b = base();
        if (peek() == '^') {
            ++pos;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::pow;
            n->kids.push_back(b);
            n->expo = expo();
            return n;
        }
        return b;
    }

    NodePtr term() {
        NodePtr first = factor();
        if (peek() != '*') return first;
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::mul;
        n->kids.push_back(first);
        while (eat('*')) n->kids.push_back(factor());
        return n;
    }

    NodePtr expr() {
        NodePtr first = term();
        char c = peek();
        if (c != '+' && c != '-') return first;
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::add;
        n->kids.push_back(first);
        for (;;) {
            c = peek();
            if (c == '+') {
                ++pos;
                n->kids.push_back(term());
            } else if (c == '-') {
                ++pos;
                auto neg = std::make_shared<Node>();
                neg->kind = Node::Kind::neg;
                neg->kids.push_back(term());
                n->kids.push_back(neg);
            } else {
                break;
            }
        }
        return n;
    }
};

// ---- printing ----

void print_int(std::ostream& os, const IntExpr& e, int parent_prec);

int int_expr_prec(const IntExpr& e) {
    switch (e.kind) {
        case IntExpr::Kind::add:
        case IntExpr::Kind::sub: return 1;
        case IntExpr::Kind::mul: return 2;
        case IntExpr::Kind::pow: return 3;
        default: return 4;
    }
}

void print_int(std::ostream& os, const IntExpr& e, int parent_prec) {
    int prec = int_expr_prec(e);
    bool wrap = prec < parent_prec;
    if (wrap) os << '(';
    switch (e.kind) {
        case IntExpr::Kind::constant: os << e.value; break;
        case IntExpr::Kind::name: os << e.name; break;
        case IntExpr::Kind::add:
            print_int(os, *e.lhs, prec);
            os << '+';
            print_int(os, *e.rhs, prec + 1);
            break;
        case IntExpr::Kind::sub:
            print_int(os, *e.lhs, prec);
            os << '-';
            print_int(os, *e.rhs, prec + 1);
            break;
        case IntExpr::Kind::mul:
            print_int(os, *e.lhs, prec);
            os << '*';
            print_int(os, *e.rhs, prec + 1);
            break;
        case IntExpr::Kind::pow:
            print_int(os, *e.lhs, prec + 1);
            os << '^';
            print_int(os, *e.rhs, prec);
            break;
    }
    if (wrap) os << ')';
}

void print_expo(std::ostream& os, const IntExpr& e) {
    // factor-position exponent: bare when atomic, parenthesized chain else
    if (e.kind == IntExpr::Kind::constant && e.value >= 0) {
        os << e.value;
    } else if (e.kind == IntExpr::Kind::name) {
        os << e.name;
    } else {
        os << '(';
        print_int(os, e, 0);
        os << ')';
    }
}

enum class Level { expr, term, factor };

void print_node(std::ostream& os, const Node& n, Level level) {
    auto wrapped = [&](bool wrap, auto&& body) {
        if (wrap) os << '(';
        body();
        if (wrap) os << ')';
    };
    switch (n.kind) {
        case Node::Kind::var:
        case Node::Kind::param: os << n.name; break;
        case Node::Kind::int_const: os << n.value; break;
        case Node::Kind::add:
            wrapped(level != Level::expr, [&] {
                for (std::size_t i = 0; i < n.kids.size(); ++i) {
                    if (n.kids[i]->kind == Node::Kind::neg) {
                        os << '-';
                        print_node(os, *n.kids[i]->kids[0], Level::term);
                    } else {
                        if (i > 0) os << '+';
                        print_node(os, *n.kids[i], Level::term);
                    }
                }
            });
            break;
        case Node::Kind::neg:
            // only reachable as a bare root; inside add it is folded above
            os << "0-";
            print_node(os, *n.kids[0], Level::term);
            break;
        case Node::Kind::mul:
            wrapped(level == Level::factor, [&] {
                for (std::size_t i = 0; i < n.kids.size(); ++i) {
                    if (i > 0) os << '*';
                    print_node(os, *n.kids[i], Level::factor);
                }
            });
            break;
        case Node::Kind::pow:
            print_node(os, *n.kids[0], Level::factor);
            os << '^';
            print_expo(os, *n.expo);
            break;
        case Node::Kind::sum:
            os << "sum(" << n.name << '=';
            print_int(os, *n.lo, 0);
            os << "..";
            print_int(os, *n.hi, 0);
            os << ',';
            print_node(os, *n.kids[0], Level::expr);
            os << ')';
            break;
    }
}

// ---- instantiation ----

struct Env {
    const fp::CoefficientSpec& spec;
    const fp::RingPtr& ring;
    std::map<std::string, long long> indices;
};

long long eval_int(const IntExpr& e, const Env& env) {
    switch (e.kind) {
        case IntExpr::Kind::constant: return e.value;
        case IntExpr::Kind::name: {
            if (e.name == "s") return env.spec.s;
            if (e.name == "p") return env.spec.p;
            auto it = env.indices.find(e.name);
            if (it == env.indices.end())
                throw UnknownName("unknown name '" + e.name + "' in exponent");
            return it->second;
        }
        case IntExpr::Kind::add: return eval_int(*e.lhs, env) + eval_int(*e.rhs, env);
        case IntExpr::Kind::sub: return eval_int(*e.lhs, env) - eval_int(*e.rhs, env);
        case IntExpr::Kind::mul: return eval_int(*e.lhs, env) * eval_int(*e.rhs, env);
        case IntExpr::Kind::pow: {
            long long b = eval_int(*e.lhs, env);
            long long x = eval_int(*e.rhs, env);
            if (x < 0) throw NegativeExponent("negative exponent in integer expression");
            long long r = 1;
            for (long long k = 0; k < x; ++k) {
                r *= b;
                if (r > (1ll << 40) || r < -(1ll << 40))
                    throw SizeLimit("exponent expression overflow");
            }
            return r;
        }
    }
    throw Error("unreachable");
}

fp::Polynomial eval_node(const Node& n, Env& env) {
    using fp::Polynomial;
    switch (n.kind) {
        case Node::Kind::var: {
            // a bound sum index may not collide with a ring variable
            if (env.indices.count(n.name))
                throw UnknownName("sum index '" + n.name + "' used in ring position");
            int idx = env.ring->var_index(n.name);
            if (idx < 0) throw UnknownName("unknown variable '" + n.name + "'");
            return Polynomial::variable(env.ring, static_cast<std::size_t>(idx));
        }
        case Node::Kind::int_const: {
            long long v = n.value % env.spec.p;
            if (v < 0) v += env.spec.p;
            return Polynomial::constant(env.ring, static_cast<std::uint32_t>(v));
        }
        case Node::Kind::param: {
            long long v = (n.name == "s" ? env.spec.s : env.spec.p) % env.spec.p;
            return Polynomial::constant(env.ring, static_cast<std::uint32_t>(v));
        }
        case Node::Kind::add: {
            Polynomial acc = Polynomial::zero(env.ring);
            for (const NodePtr& k : n.kids) acc += eval_node(*k, env);
            return acc;
        }
        case Node::Kind::neg: {
            Polynomial v = eval_node(*n.kids[0], env);
            return v.times_term({fp::Monomial::one(env.ring->nvars()), env.ring->neg(1)});
        }
        case Node::Kind::mul: {
            Polynomial acc = Polynomial::constant(env.ring, 1);
            for (const NodePtr& k : n.kids) acc = acc * eval_node(*k, env);
            return acc;
        }
        case Node::Kind::pow: {
            long long e = eval_int(*n.expo, env);
            if (e < 0)
                throw NegativeExponent("exponent evaluates to " + std::to_string(e));
            if (e > 1'000'000)
                throw SizeLimit("exponent " + std::to_string(e) + " too large to expand");
            return eval_node(*n.kids[0], env).pow(static_cast<std::uint64_t>(e));
        }
        case Node::Kind::sum: {
            if (env.ring->var_index(n.name) >= 0)
                throw UnknownName("sum index '" + n.name + "' shadows a ring variable");
            long long lo = eval_int(*n.lo, env);
            long long hi = eval_int(*n.hi, env);
            Polynomial acc = Polynomial::zero(env.ring);
            for (long long v = lo; v <= hi; ++v) { // empty when lo > hi
                env.indices[n.name] = v;
                acc += eval_node(*n.kids[0], env);
            }
            env.indices.erase(n.name);
            return acc;
        }
    }
    throw Error("unreachable");
}

std::size_t count_kind(const Node& n, Node::Kind kind) {
    std::size_t c = n.kind == kind ? 1 : 0;
    for (const NodePtr& k : n.kids) c += count_kind(*k, kind);
    return c;
}

} // namespace

RelationTemplate RelationTemplate::parse(std::string_view text) {
    Parser p{text};
    NodePtr root = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
    return RelationTemplate(std::move(root));
}

std::string RelationTemplate::print() const {
    std::ostringstream os;
    print_node(os, *root_, Level::expr);
    return os.str();
}

fp::Polynomial RelationTemplate::instantiate(const fp::CoefficientSpec& spec,
                                             const fp::RingPtr& ring) const {
    Env env{spec, ring, {}};
    return eval_node(*root_, env);
}

std::size_t RelationTemplate::count(Node::Kind kind) const { return count_kind(*root_, kind); }

} // namespace morava::dsl
