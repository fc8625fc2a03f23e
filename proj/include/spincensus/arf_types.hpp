#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "spincensus/klein_surface.hpp"

namespace spincensus {

// Topological type of a real m-Arf function for odd m: the Arf data is
// trivial, only (g, k) remains.
struct OddType {
    int g = 2;
    int k = 0;

    friend auto operator<=>(const OddType&, const OddType&) = default;
};

// Even m, non-separating surface: delta is the Arf invariant in {0,1},
// k0/k1 the numbers of ovals with value 0 and m/2.
struct NonSepEvenType {
    int g = 2;
    int delta = 0;
    int k0 = 0;
    int k1 = 0;

    friend auto operator<=>(const NonSepEvenType&,
                            const NonSepEvenType&) = default;
};

// Even m, separating surface: delta_tilde is the invariant of the
// restriction to a half surface (0/1 when the half genus is >= 2, a gcd
// value in {1,2} when it is 1), kIJ counts ovals in similarity class I with
// value J*m/2.  The two classes are unlabeled, so types are considered up
// to swapping (k00,k01) with (k10,k11).
struct SepEvenType {
    int g = 2;
    int delta_tilde = 0;
    int k00 = 0;
    int k01 = 0;
    int k10 = 0;
    int k11 = 0;

    friend auto operator<=>(const SepEvenType&, const SepEvenType&) = default;
};

using ArfTopologicalType = std::variant<OddType, NonSepEvenType, SepEvenType>;

int genus_of(const ArfTopologicalType& t);
int oval_count_of(const ArfTopologicalType& t);
std::string to_string(const ArfTopologicalType& t);

// The same type with the two similarity classes relabeled.
SepEvenType swap_classes(const SepEvenType& t);

// Canonical representative of a type modulo class relabeling: whichever of
// (k00,k01,k10,k11) and (k10,k11,k00,k01) is lexicographically smaller.
SepEvenType normalize_swap(const SepEvenType& t);

// True iff t is realized by some real m-Arf function on a surface of type s.
// Throws std::invalid_argument when t is malformed for (m, s): wrong variant
// for the parity of m or for epsilon, mismatched genus, negative counts,
// oval counts not summing to s.k, or invariants outside their domain.
// Throws OutsideScopeError when s has geometric genus 0.
bool validate_arf_type(const ArfTopologicalType& t, int m, const SurfaceType& s);

// All valid types for (s, m) in ascending tuple order (normalized
// representatives for separating types, no duplicates).
std::vector<ArfTopologicalType> enumerate_arf_types(const SurfaceType& s, int m);

// Arf invariant of the full function recovered from a separating type's
// class counts: k00 mod 2 when m = 2 (mod 4), (k00 + k01) mod 2 when
// m = 0 (mod 4).  Throws std::invalid_argument for odd m or when the paired
// congruence (k00 = k10, resp. k00+k01 = k10+k11, mod 2) fails, which no
// valid type does.
int global_arf_invariant(const SepEvenType& t, int m);

}  // namespace spincensus
