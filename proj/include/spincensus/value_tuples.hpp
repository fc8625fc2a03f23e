#pragma once

#include <compare>
#include <vector>

#include "spincensus/arf_types.hpp"
#include "spincensus/klein_surface.hpp"

namespace spincensus {

// Values of a real m-Arf function on a symmetric generating set adapted to a
// decomposition into n invariant curves and two half surfaces of genus
// g_tilde.  alpha/beta hold the handle values of one half (the other half is
// forced by symmetry), gamma the values on the n-1 stored invariant curves
// (ovals first, then twists, which are always 0), delta_vals the values on
// the bridges.  The value on the last invariant curve is determined by the
// others; see derived_boundary_value.  All residues are stored in [0, m).
struct ValueTuple {
    int m = 2;
    SurfaceType surface;
    DecompositionParams decomp;
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;
    std::vector<int> delta_vals;
};

// Number of ovals among the n-1 stored invariant curves: k for
// non-separating surfaces, k-1 for separating ones (the last oval is the
// derived curve).
int stored_oval_count(const ValueTuple& v);

// Value on the last invariant curve: 0 for non-separating surfaces (a
// twist), (1 - g - sum(gamma)) mod m for separating ones.
int derived_boundary_value(const ValueTuple& v);

// True iff the stored values are realizable by a real m-Arf function:
// oval values lie in {0, m/2} (all 0 for odd m, which also needs
// g = 1 mod m), twists are 0, and the oval value sum condition holds.
// Structural defects (length mismatches, residues out of range, invalid
// surface/decomposition) raise std::invalid_argument instead.
bool validate_tuple(const ValueTuple& v);

// Arf invariant sum((1-gamma_i)(1-delta_i)) mod 2 over the stored invariant
// curves.  Even m only.
int arf_invariant_sum(const ValueTuple& v);

// Invariant of the restriction to a half surface.  For half genus >= 2 and
// even m: 0 if any boundary value is even, else the Arf sum of the handle
// values.  For half genus 1: gcd(m, alpha_1, beta_1, boundary values + 1).
// For odd m: 0 when the half genus is >= 2, 1 when it is 1.
int half_surface_invariant(const ValueTuple& v);

struct SimilarityCounts {
    int k00 = 0;
    int k01 = 0;
    int k10 = 0;
    int k11 = 0;

    friend auto operator<=>(const SimilarityCounts&,
                            const SimilarityCounts&) = default;
};

// Partition of the ovals by similarity class and value for a separating
// surface with even m.  The class containing the last oval is class 0
// (its bridge value is taken to be odd by convention); any other oval is in
// class 0 iff its bridge value is odd.  Throws std::invalid_argument for
// odd m or a non-separating surface.
SimilarityCounts similarity_partition(const ValueTuple& v);

// Topological type of the function with these values.  Separating results
// are normalized with normalize_swap.
ArfTopologicalType extract_type(const ValueTuple& v);

// A concrete tuple realizing the given type under the given decomposition.
// The surface is recovered from the type (for odd-m types, from whether
// n = k).  Throws std::invalid_argument when the decomposition is not
// admissible or the type is not valid for the surface.
ValueTuple canonical_tuple(const ArfTopologicalType& t, int m,
                           const DecompositionParams& d);

}  // namespace spincensus
