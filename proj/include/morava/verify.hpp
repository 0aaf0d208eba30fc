#ifndef MORAVA_VERIFY_HPP
#define MORAVA_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "morava/groebner.hpp"
#include "morava/group.hpp"
#include "morava/poly.hpp"

namespace morava::verify {

// A parameterized quotient-ring presentation: graded variables, relation
// templates in the DSL, implicit definitions to eliminate by fixed-point
// iteration, and the group whose commuting-tuple counts the quotient rank
// is checked against. The parameter domain is: p fixed, s >= 2.
struct RingPresentation {
    std::string name;
    std::uint32_t p = 2;
    std::vector<std::pair<std::string, std::int64_t>> variables; // quotient-ring vars
    struct Implicit {
        std::string var;
        std::int64_t degree;
        std::string equation; // var = <equation>, var occurring on the right
    };
    std::vector<Implicit> implicit;
    std::vector<std::string> relations;
    std::vector<std::size_t> reducer_indices; // relations used to reduce iterates
    std::vector<std::string> extra_relations; // expected members of the ideal
    grp::GroupSpec group;
};

// the order-32 group number 36 in the Hall-Senior list, with its quotient
// ring presentation at p = 2
RingPresentation g36_presentation();
grp::GroupSpec g36_group_spec();

struct IdealBuild {
    fp::RingPtr elim_ring; // quotient vars + implicit vars + v
    fp::RingPtr main_ring; // quotient vars only, v specialized to 1
    std::vector<fp::Polynomial> fixed_points; // per implicit, in elim_ring
    std::vector<bool> fixed_point_homogeneous;
    std::vector<bool> fixed_point_residual_zero; // reduce(sol - E(sol)) == 0
    std::vector<bool> residual_homogeneous;      // sol - E(sol) before reduction
    std::vector<fp::Polynomial> generators;      // concrete ideal, in main_ring
    std::vector<bool> relation_homogeneous;      // after substitution, with v
};

IdealBuild build_ideal(const RingPresentation& pres, std::uint32_t s,
                       fp::MonomialOrder order = fp::MonomialOrder::grevlex);

struct VerifyOptions {
    fp::MonomialOrder order = fp::MonomialOrder::grevlex;
    // 0 = auto: the stock cap at s = 2, scaled to 2e8 steps for s >= 3
    fp::BuchbergerLimits limits{0, 0};
    grp::ChiOptions chi{};
    bool check_extra_relations = true;
    std::size_t mismatch_monomial_cap = 1u << 14;
    fp::Kernel kernel = fp::Kernel::parallel;
};

struct VerificationReport {
    std::string presentation;
    std::uint32_t p = 2, s = 2;
    std::vector<std::pair<std::string, std::string>> fixed_points; // var, solution
    std::vector<bool> relation_homogeneous;
    std::vector<bool> fixed_point_homogeneous;
    std::vector<bool> residual_homogeneous;
    std::vector<bool> fixed_point_residual_zero;
    bool all_homogeneous = false;
    std::size_t groebner_basis_size = 0;
    bool quotient_finite = false;
    std::uint64_t quotient_dimension = 0;
    std::uint64_t chi = 0;
    bool match = false;
    std::vector<std::pair<std::string, bool>> extra_relations;
    bool all_extra_in_ideal = true;
    std::vector<std::string> standard_monomials; // only reported on mismatch
    bool verified() const {
        return match && all_homogeneous && all_extra_in_ideal &&
               std::all_of(fixed_point_residual_zero.begin(), fixed_point_residual_zero.end(),
                           [](bool b) { return b; });
    }
    // timings in ms, segregated from the compared payload
    double t_build = 0, t_groebner = 0, t_dimension = 0, t_chi = 0;
};

// Build the ideal, run Buchberger, count standard monomials, and compare
// with the commuting-tuple class count of the attached group. A mismatch
// is reported verbatim (with the standard monomials when finite), never
// reconciled.
VerificationReport verify_rank(const RingPresentation& pres, std::uint32_t s,
                               const VerifyOptions& opts = {});

// normal form of each extra relation against the Groebner basis of the
// ideal; true = member
std::vector<bool> verify_extra_relations(const RingPresentation& pres, std::uint32_t s,
                                         const VerifyOptions& opts = {});

// Example-family classification: enumerate the valid order-2 actions on
// C_{2^n} x C_{2^n}, bucket by fingerprint, resolve by exact isomorphism.
struct FamilyClass {
    std::array<std::uint32_t, 4> representative; // lexicographically first
    std::uint32_t members = 0;
};
struct FamilyClassification {
    unsigned n = 1;
    std::uint64_t valid_actions = 0;
    std::vector<FamilyClass> classes;
};
FamilyClassification classify_family(unsigned n, unsigned max_n = 3);

} // namespace morava::verify

#endif
