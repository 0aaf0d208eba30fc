#ifndef MORAVA_GROUP_HPP
#define MORAVA_GROUP_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morava/common.hpp"

namespace morava::grp {

// Power-conjugate style presentation: an ordered generator chain where each
// conjugation rule rewrites an earlier generator by a later one,
//   actor^-1 * acted * actor = image (a word in generators before actor),
// and an optional power rule gen^order = word handles non-split extensions.
// Words use the syntax  name^int  joined by '*' ("b^3", "a^2*b", "1").
struct GenSpec {
    std::string name;
    std::uint32_t order;
};
struct ConjRule {
    std::string acted, actor;
    std::string image;
};
struct PowerRule {
    std::string gen;
    std::string image;
};
struct GroupSpec {
    std::vector<GenSpec> generators;
    std::vector<ConjRule> conjugations;
    std::vector<PowerRule> powers;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group materialized as a Cayley table. Index 0 is the identity.
// Immutable once built; all analysis below works off the table alone.
class Group {
public:
    std::uint32_t order() const { return order_; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
        return table_[std::size_t(x) * order_ + y];
    }
    std::uint32_t inverse(std::uint32_t x) const { return inverse_[x]; }
    std::uint32_t conjugate(std::uint32_t x, std::uint32_t t) const {
        return mul(mul(inverse_[t], x), t);
    }
    std::uint32_t power(std::uint32_t x, std::int64_t e) const;
    std::uint32_t element_order(std::uint32_t x) const;
    bool is_abelian() const;
    std::uint32_t exponent() const;

    // normal-form exponent vector, empty for derived groups without one
    bool has_names() const { return !names_.empty(); }
    const std::vector<std::uint16_t>& element_name(std::uint32_t x) const;
    std::string element_string(std::uint32_t x) const;
    const std::vector<std::pair<std::string, std::uint32_t>>& generators() const {
        return generators_;
    }
    int generator_element(const std::string& name) const; // element index or -1

    // construction entry point used by the builders; verifies the group
    // axioms (identity, inverses, associativity - exhaustive for order
    // <= 512, one million random triples above)
    static GroupPtr from_table(std::vector<std::uint16_t> table, std::uint32_t order,
                               std::vector<std::vector<std::uint16_t>> names,
                               std::vector<std::pair<std::string, std::uint32_t>> generators);

private:
    Group() = default;
    std::uint32_t order_ = 1;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inverse_;
    std::vector<std::vector<std::uint16_t>> names_;
    std::vector<std::pair<std::string, std::uint32_t>> generators_;
};

inline constexpr std::uint32_t default_product_cap = 1u << 13;
inline constexpr std::uint32_t default_iso_cap = 256;
inline constexpr std::uint64_t default_chi_budget = 100'000'000;

GroupPtr build_group(const GroupSpec& spec);
// the action matrix [[i,j],[k,l]] mod 2^n must be invertible of order <= 2
bool family_action_valid(unsigned n, const std::array<std::uint32_t, 4>& action);
GroupPtr build_family_group(unsigned n, std::array<std::uint32_t, 4> action);
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2,
                        std::uint32_t max_order = default_product_cap);
GroupPtr cyclic_group(std::uint32_t order, const std::string& gen_name = "g");

std::vector<std::vector<std::uint16_t>> conjugacy_classes(const Group& g);

struct Subgroup {
    GroupPtr parent;
    std::vector<std::uint16_t> elements;   // sorted, contains 0
    std::vector<std::uint16_t> coset_reps; // minimal element per left coset
    bool contains(std::uint32_t x) const;
    int position_of(std::uint32_t x) const;
    std::uint32_t index() const {
        return parent->order() / static_cast<std::uint32_t>(elements.size());
    }
    bool is_abelian() const;
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::uint32_t>& elems);
Subgroup centralizer(const GroupPtr& g, std::uint32_t x);
Subgroup center(const GroupPtr& g);
bool is_normal(const Subgroup& sub);

// relabeled copies (no element names)
GroupPtr subgroup_as_group(const Subgroup& sub);
GroupPtr quotient_group(const Subgroup& normal_sub);

// elementary divisors as prime powers, descending; throws InvalidAction on
// a non-abelian input
std::vector<std::uint32_t> abelian_type(const Group& g);

// chi: conjugation-orbit count of pairwise-commuting s-tuples.
// The serial kernel is the reference implementation; the parallel one is
// the OpenMP scan of the same tuple space; `chained` recurses through
// centralizers (chi_s = sum over class reps of chi_{s-1} of centralizer)
// and is the automatic fallback when |G|^s exceeds the budget.
enum class ChiStrategy { automatic, naive_serial, naive_parallel, chained };
struct ChiOptions {
    std::uint64_t budget = default_chi_budget;
    ChiStrategy strategy = ChiStrategy::automatic;
};
std::uint64_t commuting_tuple_class_count(const Group& g, unsigned s, ChiOptions opts = {});

struct Character {
    Subgroup sub;
    std::uint32_t value_order;             // m: values are zeta_m^exponent
    std::vector<std::uint32_t> exponents;  // aligned with sub.elements
    std::uint32_t exponent_at(std::uint32_t parent_element) const;
};

// Build a character from exponents on a generating set of the subgroup;
// throws InconsistentPresentation when the assignment is not multiplicative
// and InputError when the elements do not generate the subgroup.
Character character_from_generators(
    const Subgroup& sub,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& generator_exponents,
    std::uint32_t value_order);

// Exact class-function values as formal sums of m-th roots of unity;
// comparisons reduce modulo the cyclotomic polynomial (prime-power m).
struct ClassFunction {
    GroupPtr group;
    std::uint32_t value_order;
    std::vector<std::vector<std::int64_t>> counts; // per element, length m
    std::vector<std::int64_t> canonical(std::uint32_t x) const;
    bool values_equal(std::uint32_t x, std::uint32_t y) const;
    std::optional<std::int64_t> integer_value(std::uint32_t x) const;
};

ClassFunction induce_character(const Character& chi);

struct Fingerprint {
    std::uint32_t order = 1;
    std::uint32_t exponent = 1;
    std::vector<std::uint32_t> abelianization; // prime-power type, descending
    std::vector<std::uint32_t> center_type;
    bool central_quotient_abelian = true;
    // abelian type of G/Z when abelian, else (order, class count, order
    // histogram flattened) of the quotient
    std::vector<std::uint32_t> central_quotient;
    std::vector<std::uint32_t> class_sizes; // ascending multiset
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order_histogram;
    std::uint32_t squaring_image_size = 1;

    auto operator<=>(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const Group& g);

// exact backtracking over generator images, pruned by element invariants
// and incremental partial-homomorphism closure
bool is_isomorphic(const Group& g1, const Group& g2,
                   std::uint32_t max_order = default_iso_cap);

std::vector<std::uint32_t> small_generating_set(const Group& g);

} // namespace morava::grp

#endif
