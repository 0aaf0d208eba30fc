#ifndef MORAVA_RELATION_HPP
#define MORAVA_RELATION_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "morava/poly.hpp"

namespace morava::dsl {

// Integer expressions appearing in exponent position and in sum bounds:
// arithmetic over constants, the parameters s and p, and bound sum indices.
struct IntExpr;
using IntExprPtr = std::shared_ptr<const IntExpr>;
struct IntExpr {
    enum class Kind { constant, name, add, sub, mul, pow };
    Kind kind;
    long long value = 0; // constant
    std::string name;    // parameter or sum index
    IntExprPtr lhs, rhs;
};

// Relation AST. `neg` encodes the '-' of the surface syntax; it folds to
// multiplication by p-1 at instantiation time.
struct Node;
using NodePtr = std::shared_ptr<const Node>;
struct Node {
    enum class Kind { var, int_const, param, add, mul, pow, sum, neg };
    Kind kind;
    std::string name;           // var name / param name / sum index
    long long value = 0;        // int_const
    std::vector<NodePtr> kids;  // add, mul children; pow: [base]; sum: [body]; neg: [child]
    IntExprPtr expo;            // pow exponent
    IntExprPtr lo, hi;          // sum bounds
};

// Parsed parameterized relation. Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' expo]
//   base   := ident | int | '(' expr ')'
//           | 'sum' '(' ident '=' bound '..' bound ',' expr ')'
//   expo   := int | ident | '(' chain ')'     chain := expo (op expo)*
// with op in {+,-,*,^}; chains evaluate with the usual precedence, '^'
// binding tightest and right-associative. Sum bounds accept a bare chain.
// Identifiers are [a-z][a-z0-9]*; 's' and 'p' denote the parameters.
class RelationTemplate {
public:
    static RelationTemplate parse(std::string_view text);

    std::string print() const;

    // Expand sums, evaluate exponents, and map onto `ring`. Unknown
    // identifiers raise UnknownName here, not at parse time.
    fp::Polynomial instantiate(const fp::CoefficientSpec& spec, const fp::RingPtr& ring) const;

    const NodePtr& root() const { return root_; }
    std::size_t count(Node::Kind kind) const;

private:
    explicit RelationTemplate(NodePtr root) : root_(std::move(root)) {}
    NodePtr root_;
};

} // namespace morava::dsl

#endif
