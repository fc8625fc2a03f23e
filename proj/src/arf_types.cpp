#include "spincensus/arf_types.hpp"

#include <algorithm>
#include <set>

namespace spincensus {

namespace {

int mod_reduce(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

// Residue of 1-g mod m; the total oval value sum must hit this.
int oval_sum_target(int g, int m) { return mod_reduce(1LL - g, m); }

// Whether k1 ovals of value m/2 can satisfy the value-sum congruence.
bool k1_admissible(int g, int k1, int m) {
    return mod_reduce(static_cast<long long>(k1) * (m / 2), m) ==
           oval_sum_target(g, m);
}

// Admissible half-surface invariants for a separating type, given the
// branch data.  g >= k+1 always holds for surfaces in scope.
std::vector<int> admissible_delta_tilde(int g, int k, int k0, int m) {
    const bool forced = (m % 4 == 0) || (k0 != 0);
    if (g > k + 1) return forced ? std::vector<int>{0} : std::vector<int>{0, 1};
    return forced ? std::vector<int>{1} : std::vector<int>{1, 2};
}

void require_modulus(int m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
}

}  // namespace

int genus_of(const ArfTopologicalType& t) {
    return std::visit([](const auto& x) { return x.g; }, t);
}

int oval_count_of(const ArfTopologicalType& t) {
    struct {
        int operator()(const OddType& x) const { return x.k; }
        int operator()(const NonSepEvenType& x) const { return x.k0 + x.k1; }
        int operator()(const SepEvenType& x) const {
            return x.k00 + x.k01 + x.k10 + x.k11;
        }
    } k;
    return std::visit(k, t);
}

std::string to_string(const ArfTopologicalType& t) {
    struct {
        std::string operator()(const OddType& x) const {
            return std::to_string(x.g) + "," + std::to_string(x.k);
        }
        std::string operator()(const NonSepEvenType& x) const {
            return std::to_string(x.g) + "," + std::to_string(x.delta) + "," +
                   std::to_string(x.k0) + "," + std::to_string(x.k1);
        }
        std::string operator()(const SepEvenType& x) const {
            return std::to_string(x.g) + "," + std::to_string(x.delta_tilde) +
                   "," + std::to_string(x.k00) + "," + std::to_string(x.k01) +
                   "," + std::to_string(x.k10) + "," + std::to_string(x.k11);
        }
    } fmt;
    return std::visit(fmt, t);
}

SepEvenType swap_classes(const SepEvenType& t) {
    return {t.g, t.delta_tilde, t.k10, t.k11, t.k00, t.k01};
}

SepEvenType normalize_swap(const SepEvenType& t) {
    SepEvenType s = swap_classes(t);
    return std::min(t, s);
}

bool validate_arf_type(const ArfTopologicalType& t, int m, const SurfaceType& s) {
    require_modulus(m);
    if (!validate_surface_type(s))
        throw std::invalid_argument("invalid surface type " + to_string(s));
    if (!has_positive_geometric_genus(s))
        throw OutsideScopeError("surface " + to_string(s) +
                                " has geometric genus 0: outside scope");

    if (const auto* o = std::get_if<OddType>(&t)) {
        if (m % 2 == 0)
            throw std::invalid_argument("odd-m type used with even m");
        if (o->g != s.g) throw std::invalid_argument("genus mismatch");
        if (o->k != s.k) throw std::invalid_argument("oval count mismatch");
        return mod_reduce(o->g - 1LL, m) == 0;
    }
    if (const auto* ns = std::get_if<NonSepEvenType>(&t)) {
        if (m % 2 != 0)
            throw std::invalid_argument("even-m type used with odd m");
        if (s.epsilon != 0)
            throw std::invalid_argument(
                "non-separating type used with separating surface");
        if (ns->g != s.g) throw std::invalid_argument("genus mismatch");
        if (ns->k0 < 0 || ns->k1 < 0)
            throw std::invalid_argument("negative oval count");
        if (ns->k0 + ns->k1 != s.k)
            throw std::invalid_argument("oval counts do not sum to k");
        if (ns->delta != 0 && ns->delta != 1)
            throw std::invalid_argument("delta must be 0 or 1");
        return k1_admissible(ns->g, ns->k1, m);
    }
    const auto& se = std::get<SepEvenType>(t);
    if (m % 2 != 0) throw std::invalid_argument("even-m type used with odd m");
    if (s.epsilon != 1)
        throw std::invalid_argument(
            "separating type used with non-separating surface");
    if (se.g != s.g) throw std::invalid_argument("genus mismatch");
    if (se.k00 < 0 || se.k01 < 0 || se.k10 < 0 || se.k11 < 0)
        throw std::invalid_argument("negative oval count");
    const int k = se.k00 + se.k01 + se.k10 + se.k11;
    if (k != s.k) throw std::invalid_argument("oval counts do not sum to k");
    if (se.delta_tilde < 0 || se.delta_tilde > 2)
        throw std::invalid_argument("delta_tilde must be in {0,1,2}");
    const int k1 = se.k01 + se.k11;
    if (!k1_admissible(se.g, k1, m)) return false;
    const int k0 = se.k00 + se.k10;
    auto adm = admissible_delta_tilde(se.g, k, k0, m);
    return std::find(adm.begin(), adm.end(), se.delta_tilde) != adm.end();
}

std::vector<ArfTopologicalType> enumerate_arf_types(const SurfaceType& s, int m) {
    require_modulus(m);
    if (!validate_surface_type(s))
        throw std::invalid_argument("invalid surface type " + to_string(s));
    if (!has_positive_geometric_genus(s))
        throw OutsideScopeError("surface " + to_string(s) +
                                " has geometric genus 0: outside scope");

    std::vector<ArfTopologicalType> out;
    if (m % 2 != 0) {
        if (mod_reduce(s.g - 1LL, m) == 0) out.push_back(OddType{s.g, s.k});
        return out;
    }
    if (s.epsilon == 0) {
        for (int k1 = 0; k1 <= s.k; ++k1) {
            if (!k1_admissible(s.g, k1, m)) continue;
            for (int delta = 0; delta <= 1; ++delta)
                out.push_back(NonSepEvenType{s.g, delta, s.k - k1, k1});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::set<SepEvenType> seen;
    for (int k1 = 0; k1 <= s.k; ++k1) {
        if (!k1_admissible(s.g, k1, m)) continue;
        const int k0 = s.k - k1;
        for (int dt : admissible_delta_tilde(s.g, s.k, k0, m))
            for (int k00 = 0; k00 <= k0; ++k00)
                for (int k01 = 0; k01 <= k1; ++k01)
                    seen.insert(normalize_swap(
                        SepEvenType{s.g, dt, k00, k01, k0 - k00, k1 - k01}));
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

int global_arf_invariant(const SepEvenType& t, int m) {
    require_modulus(m);
    if (m % 2 != 0)
        throw std::invalid_argument("global Arf invariant needs even m");
    if (m % 4 == 2) {
        if ((t.k00 - t.k10) % 2 != 0)
            throw std::invalid_argument(
                "class counts inconsistent: k00 and k10 differ mod 2");
        return t.k00 % 2;
    }
    if ((t.k00 + t.k01 - t.k10 - t.k11) % 2 != 0)
        throw std::invalid_argument(
            "class counts inconsistent: class sizes differ mod 2");
    return (t.k00 + t.k01) % 2;
}

}  // namespace spincensus
