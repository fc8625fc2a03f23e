#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincensus/arf_types.hpp"
#include "spincensus/klein_surface.hpp"

namespace spincensus {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int r);

// Thrown when an enumeration would exceed the configured tuple budget.
// Carries the exact size of the space that was requested.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(BigInt estimate, std::uint64_t budget)
        : std::runtime_error("enumeration of " + estimate.str() +
                             " tuples exceeds budget of " +
                             std::to_string(budget)),
          estimate_(std::move(estimate)) {}

    const BigInt& estimate() const { return estimate_; }

private:
    BigInt estimate_;
};

// Number of real m-Arf functions of topological type t, by closed formula.
// Exact integer arithmetic throughout; any division in the formulas is
// checked to be exact.  Accepts types that differ from a valid one only in
// delta_tilde (those count 0); anything else malformed throws
// std::invalid_argument.
BigInt closed_count(const ArfTopologicalType& t, int m);

// Number of pairs (alpha, beta) in (Z/mZ)^{2*g_tilde} whose Arf sum
// sum((1-alpha_i)(1-beta_i)) is even:  2^(gt-1) * (2^gt + 1) * (m/2)^(2*gt).
// Even m, g_tilde >= 1.
BigInt count_even_arf_pairs(int g_tilde, int m);
// The complementary count, with (2^gt - 1) in place of (2^gt + 1).
BigInt count_odd_arf_pairs(int g_tilde, int m);

struct OracleOptions {
    std::uint64_t budget = 1'000'000'000;  // max tuples to enumerate
    std::uint64_t chunk_size = 16384;      // handle-value points per work item
    int threads = 1;
};

using TypeTally = std::map<ArfTopologicalType, std::uint64_t>;

// Brute-force tally of real m-Arf functions by type: enumerates every
// admissible value tuple for the given decomposition and classifies it with
// extract_type.  Separating even-m tuples are tallied once per choice of
// the distinguished similarity class (two choices per tuple; both select
// the same normalized type, so a swap-symmetric partition counts twice).
// The work is split into chunks over the handle-value space and merged
// associatively, so results are identical for any thread count.
TypeTally oracle_count(const SurfaceType& s, int m, const DecompositionParams& d,
                       const OracleOptions& opts = {});

struct CountResult {
    ArfTopologicalType arf_type;
    int m = 2;
    BigInt count;                                // closed-form value
    std::optional<std::uint64_t> oracle_tally;   // absent if not run/over budget
    int dimension = 0;                           // moduli dimension 3g-3
    SurfaceType base;                            // covering base surface
};

struct CensusGroup {
    SurfaceType surface;
    std::vector<CountResult> entries;
    BigInt total = 0;
};

struct CensusReport {
    int g = 2;
    int m = 2;
    std::vector<CensusGroup> groups;      // epsilon descending, k ascending
    std::vector<SurfaceType> skipped;     // geometric genus 0, out of scope
};

// Full classification for genus g and modulus m: every surface type of
// genus g in scope gets a group with one entry per type (including the
// explicit zero rows next to forced invariant values), sorted by type
// tuple.  With with_oracle set, each nonempty group is cross-checked by
// enumeration using the smallest admissible decomposition; a group whose
// enumeration would exceed the budget gets entries without oracle tallies.
CensusReport census(int g, int m, bool with_oracle,
                    const OracleOptions& opts = {});

}  // namespace spincensus
