#ifndef MORAVA_GROEBNER_HPP
#define MORAVA_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "morava/poly.hpp"

namespace morava::fp {

struct BuchbergerLimits {
    std::uint64_t max_reduction_steps = 1'000'000;
    std::size_t max_basis = 10'000;
};

// Reduced Groebner basis: monic generators, leading terms pairwise
// non-divisible, every generator fully reduced against the others.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

// Buchberger with the product (coprime) and chain criteria; S-pairs are
// processed by ascending lcm exponent sum, ties broken by pair creation
// index, so the run is deterministic for a fixed input order.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, BuchbergerLimits limits = {});

// remainder of division by an arbitrary polynomial list (not necessarily
// a Groebner basis); deterministic: divisors tried in list order
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& reducers,
                     std::uint64_t* step_counter = nullptr,
                     std::uint64_t max_steps = BuchbergerLimits{}.max_reduction_steps);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

enum class Kernel { serial, parallel };

// Number of standard monomials (monomials outside the leading-term ideal),
// nullopt when infinite (some variable has no pure power among the leading
// terms). `kernel` selects the OpenMP scan or the serial reference.
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& gb,
                                                Kernel kernel = Kernel::parallel);

// The standard monomials themselves (for diagnostics); throws SizeLimit
// past `cap`, and Error when the quotient is infinite.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t cap = 1 << 20);

// Solve var = equation(var, others) by reduction-stabilized iteration:
// iterate x_{k+1} = reduce(E(x_k), reducers) from x_0 = reduce(E(0)) until
// the iterate repeats. The reducers must not involve `var`. Postcondition
// checked by the caller: reduce(solution - E(solution)) == 0.
Polynomial solve_fixed_point(const Polynomial& equation, std::size_t var,
                             const std::vector<Polynomial>& reducers,
                             unsigned max_iter);

} // namespace morava::fp

#endif
