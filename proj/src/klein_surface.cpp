#include "spincensus/klein_surface.hpp"

namespace spincensus {

std::string to_string(const SurfaceType& s) {
    return "(" + std::to_string(s.g) + "," + std::to_string(s.k) + "," +
           std::to_string(s.epsilon) + ")";
}

bool validate_surface_type(int g, int k, int epsilon) {
    if (g < 2) throw NonHyperbolicError(g);
    if (epsilon != 0 && epsilon != 1)
        throw std::invalid_argument("epsilon must be 0 or 1, got " +
                                    std::to_string(epsilon));
    if (k < 0) return false;
    if (epsilon == 1)
        return k >= 1 && k <= g + 1 && (k % 2) == ((g + 1) % 2);
    return k <= g;
}

bool validate_surface_type(const SurfaceType& s) {
    return validate_surface_type(s.g, s.k, s.epsilon);
}

static void require_valid(const SurfaceType& s) {
    if (!validate_surface_type(s))
        throw std::invalid_argument("invalid surface type " + to_string(s));
}

int geometric_genus(const SurfaceType& s) {
    require_valid(s);
    if (s.epsilon == 1) return (s.g + 1 - s.k) / 2;
    return (s.g - s.k) / 2;
}

bool has_positive_geometric_genus(const SurfaceType& s) {
    return geometric_genus(s) > 0;
}

std::vector<SurfaceType> enumerate_surface_types(int g) {
    if (g < 2) throw NonHyperbolicError(g);
    std::vector<SurfaceType> out;
    // separating: k = g+1 (mod 2), 1 <= k <= g+1
    for (int k = 2 - ((g + 1) % 2); k <= g + 1; k += 2)
        out.push_back({g, k, 1});
    for (int k = 0; k <= g; ++k) out.push_back({g, k, 0});
    return out;
}

std::vector<DecompositionParams> decomposition_choices(const SurfaceType& s) {
    require_valid(s);
    if (!has_positive_geometric_genus(s))
        throw OutsideScopeError("surface " + to_string(s) +
                                " has geometric genus 0: outside scope");
    std::vector<DecompositionParams> out;
    if (s.epsilon == 1) {
        out.push_back({s.k, (s.g + 1 - s.k) / 2});
        return out;
    }
    int n = s.k + 1;
    if ((n % 2) != ((s.g - 1) % 2)) ++n;
    for (; n <= s.g - 1; n += 2) out.push_back({n, (s.g + 1 - n) / 2});
    return out;
}

bool is_valid_decomposition(const SurfaceType& s, const DecompositionParams& d) {
    require_valid(s);
    if (!has_positive_geometric_genus(s)) return false;
    if (d.g_tilde < 1 || d.n < 1) return false;
    if (2 * d.g_tilde + d.n - 1 != s.g) return false;
    if (s.epsilon == 1) return d.n == s.k;
    return d.n >= s.k + 1 && d.n <= s.g - 1;
}

}  // namespace spincensus
