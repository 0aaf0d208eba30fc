#include "morava/cpmod.hpp"

#include <algorithm>

namespace morava::cpmod {

namespace {

std::vector<std::uint32_t> identity_matrix(std::uint32_t dim) {
    std::vector<std::uint32_t> m(std::size_t(dim) * dim, 0);
    for (std::uint32_t i = 0; i < dim; ++i) m[std::size_t(i) * dim + i] = 1;
    return m;
}

void check_order_p(const CpModule& m) {
    if (m.action.size() != std::size_t(m.dim) * m.dim)
        throw InputError("action matrix has wrong shape");
    for (std::uint32_t v : m.action)
        if (v >= m.p) throw InputError("matrix entry out of F_p range");
    auto power = identity_matrix(m.dim);
    for (std::uint32_t k = 0; k < m.p; ++k) power = matrix_mul(m.p, m.dim, power, m.action);
    if (power != identity_matrix(m.dim))
        throw NotOrderP("action matrix does not satisfy t^p = 1");
}

// t - 1 over F_p
std::vector<std::uint32_t> nilpotent_part(const CpModule& m) {
    auto n = m.action;
    for (std::uint32_t i = 0; i < m.dim; ++i) {
        auto& d = n[std::size_t(i) * m.dim + i];
        d = (d + m.p - 1) % m.p;
    }
    return n;
}

// N = 1 + t + ... + t^{p-1}
std::vector<std::uint32_t> trace_operator(const CpModule& m) {
    auto acc = identity_matrix(m.dim);
    auto power = identity_matrix(m.dim);
    for (std::uint32_t k = 1; k < m.p; ++k) {
        power = matrix_mul(m.p, m.dim, power, m.action);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = (acc[i] + power[i]) % m.p;
    }
    return acc;
}

} // namespace

std::vector<std::uint32_t> matrix_mul(std::uint32_t p, std::uint32_t dim,
                                      const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> c(std::size_t(dim) * dim, 0);
    for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t k = 0; k < dim; ++k) {
            std::uint64_t aik = a[std::size_t(i) * dim + k];
            if (aik == 0) continue;
            for (std::uint32_t j = 0; j < dim; ++j)
                c[std::size_t(i) * dim + j] = static_cast<std::uint32_t>(
                    (c[std::size_t(i) * dim + j] + aik * b[std::size_t(k) * dim + j]) % p);
        }
    return c;
}

std::uint32_t matrix_rank(std::uint32_t p, std::uint32_t dim, std::vector<std::uint32_t> mat) {
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < dim && rank < dim; ++col) {
        std::uint32_t pivot = dim;
        for (std::uint32_t r = rank; r < dim; ++r)
            if (mat[std::size_t(r) * dim + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == dim) continue;
        for (std::uint32_t j = 0; j < dim; ++j)
            std::swap(mat[std::size_t(rank) * dim + j], mat[std::size_t(pivot) * dim + j]);
        // normalize pivot row
        std::uint32_t inv = 1, base = mat[std::size_t(rank) * dim + col] % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = static_cast<std::uint32_t>(std::uint64_t(inv) * base % p);
            base = static_cast<std::uint32_t>(std::uint64_t(base) * base % p);
            e >>= 1;
        }
        for (std::uint32_t j = 0; j < dim; ++j)
            mat[std::size_t(rank) * dim + j] = static_cast<std::uint32_t>(
                std::uint64_t(mat[std::size_t(rank) * dim + j]) * inv % p);
        for (std::uint32_t r = 0; r < dim; ++r) {
            if (r == rank) continue;
            std::uint32_t f = mat[std::size_t(r) * dim + col];
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < dim; ++j) {
                auto& cell = mat[std::size_t(r) * dim + j];
                cell = static_cast<std::uint32_t>(
                    (cell + std::uint64_t(p - f) * mat[std::size_t(rank) * dim + j]) % p);
            }
        }
        ++rank;
    }
    return rank;
}

CpModule trivial_module(std::uint32_t p, std::uint32_t dim) {
    return CpModule{p, dim, identity_matrix(dim)};
}

CpModule free_module(std::uint32_t p, std::uint32_t rank) {
    // regular representation per summand: cyclic permutation of p basis vectors
    CpModule m;
    m.p = p;
    m.dim = rank * p;
    m.action.assign(std::size_t(m.dim) * m.dim, 0);
    for (std::uint32_t blk = 0; blk < rank; ++blk)
        for (std::uint32_t i = 0; i < p; ++i) {
            std::uint32_t row = blk * p + (i + 1) % p;
            std::uint32_t col = blk * p + i;
            m.action[std::size_t(row) * m.dim + col] = 1;
        }
    return m;
}

CpModule direct_sum(const CpModule& a, const CpModule& b) {
    if (a.p != b.p) throw InputError("direct sum across different primes");
    CpModule m;
    m.p = a.p;
    m.dim = a.dim + b.dim;
    m.action.assign(std::size_t(m.dim) * m.dim, 0);
    for (std::uint32_t i = 0; i < a.dim; ++i)
        for (std::uint32_t j = 0; j < a.dim; ++j)
            m.action[std::size_t(i) * m.dim + j] = a.at(i, j);
    for (std::uint32_t i = 0; i < b.dim; ++i)
        for (std::uint32_t j = 0; j < b.dim; ++j)
            m.action[std::size_t(a.dim + i) * m.dim + (a.dim + j)] = b.at(i, j);
    return m;
}

CpModule conjugate_by(const CpModule& m, const std::vector<std::uint32_t>& basis) {
    if (basis.size() != m.action.size()) throw InputError("basis matrix has wrong shape");
    if (matrix_rank(m.p, m.dim, basis) != m.dim) throw InputError("basis matrix is singular");

    // invert by Gauss-Jordan on [basis | I]
    const std::uint32_t n = m.dim, p = m.p;
    std::vector<std::uint32_t> a = basis, inv = identity_matrix(n);
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t pivot = n;
        for (std::uint32_t r = col; r < n; ++r)
            if (a[std::size_t(r) * n + col] != 0) {
                pivot = r;
                break;
            }
        for (std::uint32_t j = 0; j < n; ++j) {
            std::swap(a[std::size_t(col) * n + j], a[std::size_t(pivot) * n + j]);
            std::swap(inv[std::size_t(col) * n + j], inv[std::size_t(pivot) * n + j]);
        }
        std::uint32_t d = a[std::size_t(col) * n + col], e = p - 2, dinv = 1;
        while (e > 0) {
            if (e & 1) dinv = static_cast<std::uint32_t>(std::uint64_t(dinv) * d % p);
            d = static_cast<std::uint32_t>(std::uint64_t(d) * d % p);
            e >>= 1;
        }
        for (std::uint32_t j = 0; j < n; ++j) {
            a[std::size_t(col) * n + j] =
                static_cast<std::uint32_t>(std::uint64_t(a[std::size_t(col) * n + j]) * dinv % p);
            inv[std::size_t(col) * n + j] = static_cast<std::uint32_t>(
                std::uint64_t(inv[std::size_t(col) * n + j]) * dinv % p);
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == col) continue;
            std::uint32_t f = a[std::size_t(r) * n + col];
            if (f == 0) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                a[std::size_t(r) * n + j] = static_cast<std::uint32_t>(
                    (a[std::size_t(r) * n + j] +
                     std::uint64_t(p - f) * a[std::size_t(col) * n + j]) %
                    p);
                inv[std::size_t(r) * n + j] = static_cast<std::uint32_t>(
                    (inv[std::size_t(r) * n + j] +
                     std::uint64_t(p - f) * inv[std::size_t(col) * n + j]) %
                    p);
            }
        }
    }
    CpModule out = m;
    out.action = matrix_mul(p, n, matrix_mul(p, n, inv, m.action), basis);
    return out;
}

Decomposition decompose(const CpModule& m) {
    check_order_p(m);
    const std::uint32_t p = m.p;

    // r_k = rank (t-1)^k; blocks of size >= k: r_{k-1} - r_k
    std::vector<std::uint32_t> ranks{m.dim};
    auto n1 = nilpotent_part(m);
    auto power = identity_matrix(m.dim);
    for (std::uint32_t k = 1; k <= p; ++k) {
        power = matrix_mul(p, m.dim, power, n1);
        ranks.push_back(matrix_rank(p, m.dim, power));
    }
    if (ranks[p] != 0) throw NotOrderP("(t-1)^p does not vanish");

    Decomposition d;
    d.p = p;
    d.dim = m.dim;
    d.block_count.assign(p, 0);
    for (std::uint32_t k = 1; k <= p; ++k) {
        std::uint32_t at_least_k = ranks[k - 1] - ranks[k];
        std::uint32_t at_least_k1 = k < p ? ranks[k] - ranks[k + 1] : 0;
        d.block_count[k - 1] = at_least_k - at_least_k1;
    }
    return d;
}

std::vector<std::uint32_t> Decomposition::blocks() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = static_cast<std::uint32_t>(block_count.size()); k-- > 0;)
        for (std::uint32_t c = 0; c < block_count[k]; ++c) out.push_back(k + 1);
    return out;
}

std::uint32_t trace_rank(const CpModule& m) {
    return matrix_rank(m.p, m.dim, trace_operator(m));
}

std::vector<std::uint32_t> cohomology_dims(const CpModule& m, std::uint32_t max_degree) {
    check_order_p(m);
    const std::uint32_t rank_t1 = matrix_rank(m.p, m.dim, nilpotent_part(m));
    const std::uint32_t rank_n = trace_rank(m);

    std::vector<std::uint32_t> dims;
    dims.push_back(m.dim - rank_t1); // H^0 = fixed points
    for (std::uint32_t i = 1; i <= max_degree; ++i) {
        // odd: ker N / im(t-1); even: ker(t-1) / im N -- equal dimensions
        std::uint32_t d = i % 2 == 1 ? (m.dim - rank_n) - rank_t1
                                     : (m.dim - rank_t1) - rank_n;
        dims.push_back(d);
    }
    return dims;
}

CpModule tensor_diagonal(const CpModule& a, const CpModule& b) {
    if (a.p != b.p) throw InputError("tensor across different primes");
    check_order_p(a);
    check_order_p(b);
    CpModule m;
    m.p = a.p;
    const std::uint64_t dim = std::uint64_t(a.dim) * b.dim;
    if (dim > 4096) throw SizeLimit("tensor product dimension too large");
    m.dim = static_cast<std::uint32_t>(dim);
    m.action.assign(std::size_t(m.dim) * m.dim, 0);
    for (std::uint32_t i1 = 0; i1 < a.dim; ++i1)
        for (std::uint32_t j1 = 0; j1 < a.dim; ++j1) {
            std::uint32_t v1 = a.at(i1, j1);
            if (v1 == 0) continue;
            for (std::uint32_t i2 = 0; i2 < b.dim; ++i2)
                for (std::uint32_t j2 = 0; j2 < b.dim; ++j2) {
                    std::uint32_t v2 = b.at(i2, j2);
                    if (v2 == 0) continue;
                    std::uint32_t row = i1 * b.dim + i2;
                    std::uint32_t col = j1 * b.dim + j2;
                    m.action[std::size_t(row) * m.dim + col] =
                        static_cast<std::uint32_t>(std::uint64_t(v1) * v2 % m.p);
                }
        }
    return m;
}

bool is_permutation_module(const CpModule& m) {
    Decomposition d = decompose(m);
    for (std::uint32_t k = 2; k < m.p; ++k)
        if (d.block_count[k - 1] != 0) return false;
    return true;
}

} // namespace morava::cpmod
