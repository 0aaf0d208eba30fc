#ifndef MORAVA_CPMOD_HPP
#define MORAVA_CPMOD_HPP

#include <cstdint>
#include <vector>

#include "morava/common.hpp"

namespace morava::cpmod {

// A finite-dimensional F_p vector space with an order-p operator: the
// action of the generator t of C_p, as a dim x dim matrix (row-major).
struct CpModule {
    std::uint32_t p = 2;
    std::uint32_t dim = 0;
    std::vector<std::uint32_t> action;

    std::uint32_t at(std::uint32_t r, std::uint32_t c) const {
        return action[std::size_t(r) * dim + c];
    }
};

CpModule trivial_module(std::uint32_t p, std::uint32_t dim);
CpModule free_module(std::uint32_t p, std::uint32_t rank); // rank copies of F_p[C_p]
CpModule direct_sum(const CpModule& a, const CpModule& b);
// change of basis: action -> g^-1 action g (throws when g is singular)
CpModule conjugate_by(const CpModule& m, const std::vector<std::uint32_t>& basis);

// Jordan structure of the generator: block sizes lie in 1..p since the
// action has order p. Derived from ranks of powers of (t - 1).
struct Decomposition {
    std::uint32_t p = 2;
    std::uint32_t dim = 0;
    std::vector<std::uint32_t> block_count; // [k-1] = number of size-k blocks
    std::uint32_t trivial_rank() const { return block_count.front(); }
    std::uint32_t free_rank() const { return block_count.back(); }
    std::vector<std::uint32_t> blocks() const; // expanded multiset, descending
};

// throws NotOrderP unless action^p = 1
Decomposition decompose(const CpModule& m);

// H^i(BC_p, M) dimensions for i = 0..max_degree. H^0 is the fixed space;
// above that the dimensions alternate ker N / im(t-1) and ker(t-1) / im N
// where N = 1 + t + ... + t^{p-1} is the trace operator.
std::vector<std::uint32_t> cohomology_dims(const CpModule& m, std::uint32_t max_degree);

// rank of the trace operator N (equals the number of size-p blocks)
std::uint32_t trace_rank(const CpModule& m);

// diagonal action on the tensor product (Kronecker product of the actions)
CpModule tensor_diagonal(const CpModule& a, const CpModule& b);

// mod-p shadow of the permutation-module condition: all blocks of size 1 or p
bool is_permutation_module(const CpModule& m);

// F_p linear algebra helpers
std::uint32_t matrix_rank(std::uint32_t p, std::uint32_t dim, std::vector<std::uint32_t> mat);
std::vector<std::uint32_t> matrix_mul(std::uint32_t p, std::uint32_t dim,
                                      const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b);

} // namespace morava::cpmod

#endif
