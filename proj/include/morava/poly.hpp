#ifndef MORAVA_POLY_HPP
#define MORAVA_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morava/common.hpp"

namespace morava::fp {

// Coefficient-ring bookkeeping for the periodic theories this toolkit
// serves: prime p, height s >= 2, and the grading of the periodicity
// variable v, deg(v) = -2(p^s - 1).
struct CoefficientSpec {
    std::uint32_t p;
    std::uint32_t s;

    CoefficientSpec(std::uint32_t prime, std::uint32_t height);
    std::int64_t v_degree() const;
};

bool is_prime(std::uint32_t n);

enum class MonomialOrder { grevlex, lex };

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Variable context shared by all polynomials of one computation.
// Variable position doubles as order significance: vars[0] is largest.
// `degrees` is the integer weight grading (may be negative, e.g. for v);
// the monomial order itself always uses the plain exponent sum.
class PolyRing {
public:
    static constexpr std::size_t max_vars = 12;

    static RingPtr make(std::uint32_t p,
                        std::vector<std::string> vars,
                        std::vector<std::int64_t> degrees,
                        MonomialOrder order = MonomialOrder::grevlex);

    std::uint32_t p() const { return p_; }
    MonomialOrder order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    int var_index(const std::string& name) const; // -1 if absent

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const; // Fermat

private:
    PolyRing() = default;
    std::uint32_t p_ = 2;
    std::vector<std::string> vars_;
    std::vector<std::int64_t> degrees_;
    MonomialOrder order_ = MonomialOrder::grevlex;
};

// Exponent vector with cached exponent sum. Fixed small capacity keeps
// monomials trivially copyable; PolyRing::make enforces the cap.
struct Monomial {
    std::array<std::uint16_t, PolyRing::max_vars> e{};
    std::uint16_t n = 0;     // arity (= ring nvars)
    std::uint32_t total = 0; // exponent sum

    static Monomial one(std::size_t nvars);
    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t exp = 1);

    bool is_one() const { return total == 0; }
    bool operator==(const Monomial& o) const;
    std::size_t hash() const;
};

bool divides(const Monomial& a, const Monomial& b);   // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// three-way compare under `order`: >0 if a > b
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
    Monomial mon;
    std::uint32_t coef;
};

// Sparse polynomial over F_p. Terms are kept sorted descending under the
// ring's monomial order with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, std::uint32_t c);
    static Polynomial variable(RingPtr ring, std::size_t i, std::uint32_t exp = 1);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms); // normalizes
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mon; }

    bool operator==(const Polynomial& o) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

    Polynomial times_term(const Term& t) const;    // order-preserving fast path
    Polynomial pow(std::uint64_t e) const;
    Polynomial monic() const;

    // weight grading (uses ring degrees, v included)
    std::int64_t weighted_degree(const Monomial& m) const;
    bool is_homogeneous() const;
    std::optional<std::int64_t> homogeneous_degree() const; // nullopt: zero or mixed

    // simultaneous substitution; a warning is appended per binding whose
    // value is not homogeneous of the bound variable's declared degree
    Polynomial substitute(const std::map<std::size_t, Polynomial>& bindings,
                          std::vector<std::string>* warnings = nullptr) const;

    // set one variable to a constant (e.g. v := 1), staying in this ring
    Polynomial specialize(std::size_t var, std::uint32_t value) const;

    // move to a ring holding a subset/superset of the variables (matched by
    // name); throws UnknownName if a used variable is absent from `target`
    Polynomial change_ring(const RingPtr& target) const;

    std::string to_string() const; // relation-DSL syntax

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace morava::fp

#endif
