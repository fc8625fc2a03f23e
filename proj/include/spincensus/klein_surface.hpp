#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincensus {

// Thrown when a genus below 2 is supplied; such surfaces carry no hyperbolic
// metric and every operation in this library assumes one.
class NonHyperbolicError : public std::invalid_argument {
public:
    explicit NonHyperbolicError(int g)
        : std::invalid_argument("genus " + std::to_string(g) +
                                " is not hyperbolic (need g >= 2)") {}
};

// Thrown for surfaces of zero geometric genus: they are well-formed
// topological types, but the classification and counting results used here
// do not cover them.
class OutsideScopeError : public std::domain_error {
public:
    explicit OutsideScopeError(const std::string& what)
        : std::domain_error(what) {}
};

// Topological type of a compact Klein surface: genus g of the orienting
// double cover, number k of ovals (fixed curves of the involution), and
// epsilon = 1 if the oval complement is disconnected (separating case),
// 0 otherwise.
struct SurfaceType {
    int g = 2;
    int k = 0;
    int epsilon = 0;

    friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

std::string to_string(const SurfaceType& s);

// True iff (g,k,epsilon) is realizable: separating needs 1 <= k <= g+1 and
// k = g+1 (mod 2); non-separating needs 0 <= k <= g.  Throws
// NonHyperbolicError for g < 2 and std::invalid_argument for epsilon
// outside {0,1}.
bool validate_surface_type(int g, int k, int epsilon);
bool validate_surface_type(const SurfaceType& s);

// Genus of the quotient surface P/tau.  Requires a valid type.
int geometric_genus(const SurfaceType& s);

// Whether the quotient genus is positive; only such surfaces are in scope
// for type enumeration and counting.
bool has_positive_geometric_genus(const SurfaceType& s);

// All valid surface types of the given genus, separating first, k ascending
// within each class.
std::vector<SurfaceType> enumerate_surface_types(int g);

// A choice of invariant curve system cutting the surface: n curves, half
// surface of genus g_tilde, with g = 2*g_tilde + n - 1.
struct DecompositionParams {
    int n = 0;
    int g_tilde = 0;

    friend auto operator<=>(const DecompositionParams&,
                            const DecompositionParams&) = default;
};

// Admissible decompositions for a surface of positive geometric genus, n
// ascending.  Separating surfaces admit exactly one (n = k); non-separating
// ones admit every n with k+1 <= n <= g-1 and n = g-1 (mod 2).  Throws
// OutsideScopeError when the geometric genus is zero.
std::vector<DecompositionParams> decomposition_choices(const SurfaceType& s);

bool is_valid_decomposition(const SurfaceType& s, const DecompositionParams& d);

// Real dimension of the moduli space of hyperbolic structures for any
// surface of genus g; also the dimension reported per census entry.
constexpr int moduli_dimension(int g) { return 3 * g - 3; }

}  // namespace spincensus
