#include <algorithm>
#include <exception>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "morava/verify.hpp"

namespace morava::verify {

FamilyClassification classify_family(unsigned n, unsigned max_n) {
    if (n < 1) throw InputError("family parameter n must be at least 1");
    if (n > max_n)
        throw SizeLimit("family classification capped at n = " + std::to_string(max_n));

    const std::uint32_t m = 1u << n;
    std::vector<std::array<std::uint32_t, 4>> actions;
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            for (std::uint32_t k = 0; k < m; ++k)
                for (std::uint32_t l = 0; l < m; ++l)
                    if (grp::family_action_valid(n, {i, j, k, l}))
                        actions.push_back({i, j, k, l});

    log_info("family n=" + std::to_string(n) + ": " + std::to_string(actions.size()) +
             " valid actions");
    std::vector<grp::GroupPtr> groups(actions.size());
    std::vector<grp::Fingerprint> prints(actions.size());
    std::exception_ptr worker_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(actions.size()); ++idx) {
        try {
            groups[idx] = grp::build_family_group(n, actions[idx]);
            prints[idx] = grp::fingerprint(*groups[idx]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            worker_error = std::current_exception();
        }
    }
    if (worker_error) std::rethrow_exception(worker_error);

    // bucket by fingerprint, then resolve each bucket by exact isomorphism;
    // scanning in lexicographic action order keeps representatives minimal
    FamilyClassification out;
    out.n = n;
    out.valid_actions = actions.size();
    std::vector<grp::GroupPtr> class_reps;
    std::map<grp::Fingerprint, std::vector<std::size_t>> bucket_classes; // class indices
    for (std::size_t idx = 0; idx < actions.size(); ++idx) {
        auto& classes = bucket_classes[prints[idx]];
        bool placed = false;
        for (std::size_t cls : classes) {
            if (grp::is_isomorphic(*class_reps[cls], *groups[idx])) {
                ++out.classes[cls].members;
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back(out.classes.size());
            out.classes.push_back({actions[idx], 1});
            class_reps.push_back(groups[idx]);
        }
    }
    return out;
}

} // namespace morava::verify
