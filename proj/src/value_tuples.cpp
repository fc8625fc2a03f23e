#include "spincensus/value_tuples.hpp"

#include <algorithm>
#include <numeric>

namespace spincensus {

namespace {

int mod_reduce(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

int parity(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

void require_well_formed(const ValueTuple& v) {
    if (v.m < 2)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(v.m));
    if (!validate_surface_type(v.surface))
        throw std::invalid_argument("invalid surface type " + to_string(v.surface));
    if (!is_valid_decomposition(v.surface, v.decomp))
        throw std::invalid_argument("decomposition (n=" + std::to_string(v.decomp.n) +
                                    ",g_tilde=" + std::to_string(v.decomp.g_tilde) +
                                    ") not admissible for " + to_string(v.surface));
    const auto gt = static_cast<size_t>(v.decomp.g_tilde);
    const auto n1 = static_cast<size_t>(v.decomp.n - 1);
    if (v.alpha.size() != gt || v.beta.size() != gt)
        throw std::invalid_argument("handle value count does not match g_tilde");
    if (v.gamma.size() != n1 || v.delta_vals.size() != n1)
        throw std::invalid_argument("boundary/bridge value count does not match n-1");
    auto in_range = [&](int x) { return x >= 0 && x < v.m; };
    for (int x : v.alpha)
        if (!in_range(x)) throw std::invalid_argument("alpha value out of range");
    for (int x : v.beta)
        if (!in_range(x)) throw std::invalid_argument("beta value out of range");
    for (int x : v.gamma)
        if (!in_range(x)) throw std::invalid_argument("gamma value out of range");
    for (int x : v.delta_vals)
        if (!in_range(x)) throw std::invalid_argument("delta value out of range");
}

int stored_ovals_unchecked(const ValueTuple& v) {
    return v.surface.epsilon == 1 ? v.surface.k - 1 : v.surface.k;
}

int derived_unchecked(const ValueTuple& v) {
    if (v.surface.epsilon == 0) return 0;
    long long sum = std::accumulate(v.gamma.begin(), v.gamma.end(), 0LL);
    return mod_reduce(1LL - v.surface.g - sum, v.m);
}

int arf_sum_unchecked(const ValueTuple& v) {
    long long acc = 0;
    for (size_t i = 0; i < v.gamma.size(); ++i)
        acc += (1LL - v.gamma[i]) * (1LL - v.delta_vals[i]);
    return parity(acc);
}

int half_inv_unchecked(const ValueTuple& v) {
    // Boundary of the half surface: the stored invariant curves plus the
    // derived one (a twist, value 0, in the non-separating case).
    const int last = derived_unchecked(v);
    if (v.decomp.g_tilde >= 2) {
        bool any_even = (last % 2 == 0);
        for (int x : v.gamma)
            if (x % 2 == 0) any_even = true;
        if (any_even) return 0;
        long long acc = 0;
        for (size_t i = 0; i < v.alpha.size(); ++i)
            acc += (1LL - v.alpha[i]) * (1LL - v.beta[i]);
        return parity(acc);
    }
    int r = std::gcd(v.m, v.alpha[0]);
    r = std::gcd(r, v.beta[0]);
    for (int x : v.gamma) r = std::gcd(r, x + 1);
    return std::gcd(r, last + 1);
}

SimilarityCounts partition_unchecked(const ValueTuple& v) {
    const int half = v.m / 2;
    auto value_index = [&](int gamma) {
        if (gamma == 0) return 0;
        if (gamma == half) return 1;
        throw std::invalid_argument("oval value must be 0 or m/2, got " +
                                    std::to_string(gamma));
    };
    SimilarityCounts c;
    auto tally = [&](int cls, int val) {
        if (cls == 0)
            val == 0 ? ++c.k00 : ++c.k01;
        else
            val == 0 ? ++c.k10 : ++c.k11;
    };
    const int stored = stored_ovals_unchecked(v);
    for (int i = 0; i < stored; ++i)
        tally(v.delta_vals[i] % 2 == 1 ? 0 : 1, value_index(v.gamma[i]));
    // The last oval shares a class with itself; its bridge value counts as
    // odd, putting it in class 0.
    tally(0, value_index(derived_unchecked(v)));
    return c;
}

}  // namespace

int stored_oval_count(const ValueTuple& v) {
    require_well_formed(v);
    return stored_ovals_unchecked(v);
}

int derived_boundary_value(const ValueTuple& v) {
    require_well_formed(v);
    return derived_unchecked(v);
}

bool validate_tuple(const ValueTuple& v) {
    require_well_formed(v);
    const int g = v.surface.g;
    if (v.m % 2 != 0) {
        for (int x : v.gamma)
            if (x != 0) return false;
        return mod_reduce(g - 1LL, v.m) == 0;
    }
    const int half = v.m / 2;
    const int stored = stored_ovals_unchecked(v);
    for (size_t i = 0; i < v.gamma.size(); ++i) {
        if (static_cast<int>(i) < stored) {
            if (v.gamma[i] != 0 && v.gamma[i] != half) return false;
        } else if (v.gamma[i] != 0) {
            return false;  // twists carry value 0
        }
    }
    if (v.surface.epsilon == 1) {
        const int last = derived_unchecked(v);
        return last == 0 || last == half;
    }
    long long sum = 0;
    for (int i = 0; i < stored; ++i) sum += v.gamma[i];
    return mod_reduce(sum - (1LL - g), v.m) == 0;
}

int arf_invariant_sum(const ValueTuple& v) {
    require_well_formed(v);
    if (v.m % 2 != 0)
        throw std::invalid_argument("Arf invariant sum needs even m");
    return arf_sum_unchecked(v);
}

int half_surface_invariant(const ValueTuple& v) {
    require_well_formed(v);
    return half_inv_unchecked(v);
}

SimilarityCounts similarity_partition(const ValueTuple& v) {
    require_well_formed(v);
    if (v.m % 2 != 0)
        throw std::invalid_argument("similarity classes need even m");
    if (v.surface.epsilon != 1)
        throw std::invalid_argument("similarity classes need a separating surface");
    return partition_unchecked(v);
}

ArfTopologicalType extract_type(const ValueTuple& v) {
    require_well_formed(v);
    const int g = v.surface.g;
    const int k = v.surface.k;
    if (v.m % 2 != 0) return OddType{g, k};
    if (v.surface.epsilon == 0) {
        const int half = v.m / 2;
        int k1 = 0;
        for (int i = 0; i < k; ++i)
            if (v.gamma[i] == half) ++k1;
        return NonSepEvenType{g, arf_sum_unchecked(v), k - k1, k1};
    }
    const SimilarityCounts c = partition_unchecked(v);
    return normalize_swap(
        SepEvenType{g, half_inv_unchecked(v), c.k00, c.k01, c.k10, c.k11});
}

ValueTuple canonical_tuple(const ArfTopologicalType& t, int m,
                           const DecompositionParams& d) {
    if (m < 2)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
    const int g = genus_of(t);
    const int k = oval_count_of(t);
    int eps;
    if (std::holds_alternative<SepEvenType>(t))
        eps = 1;
    else if (std::holds_alternative<NonSepEvenType>(t))
        eps = 0;
    else
        eps = (d.n == k) ? 1 : 0;
    const SurfaceType s{g, k, eps};
    if (!validate_surface_type(s))
        throw std::invalid_argument("type " + to_string(t) +
                                    " matches no valid surface");
    if (!is_valid_decomposition(s, d))
        throw std::invalid_argument("decomposition (n=" + std::to_string(d.n) +
                                    ",g_tilde=" + std::to_string(d.g_tilde) +
                                    ") not admissible for " + to_string(s));
    if (!validate_arf_type(t, m, s))
        throw std::invalid_argument("type " + to_string(t) +
                                    " is not realizable for m=" +
                                    std::to_string(m));

    ValueTuple v;
    v.m = m;
    v.surface = s;
    v.decomp = d;
    const int gt = d.g_tilde;
    v.alpha.assign(gt, 0);
    v.beta.assign(gt, 0);
    v.gamma.assign(d.n - 1, 0);
    v.delta_vals.assign(d.n - 1, 0);

    const bool sep_even = (eps == 1 && m % 2 == 0);
    int dt = 0;
    if (sep_even) dt = std::get<SepEvenType>(t).delta_tilde;

    // Handle values: one marked handle carries the half-surface invariant,
    // the rest are inert (value 1 pairs contribute nothing).
    if (gt >= 2) {
        for (int i = 1; i < gt; ++i) {
            v.alpha[i] = 1;
            v.beta[i] = 1;
        }
        v.alpha[0] = 0;
        v.beta[0] = mod_reduce(1 - (sep_even ? dt : 0), m);
    } else {
        v.alpha[0] = sep_even ? mod_reduce(dt, m) : 1;
        v.beta[0] = 0;
    }

    if (m % 2 != 0) return v;  // all boundary and bridge values stay 0

    const int half = m / 2;
    if (eps == 0) {
        const auto& ns = std::get<NonSepEvenType>(t);
        for (int i = 0; i < ns.k1; ++i) v.gamma[ns.k0 + i] = half;
        // With every bridge value set to 1-delta the Arf sum lands on delta;
        // the surviving coefficient sum is odd whenever the type is valid.
        std::fill(v.delta_vals.begin(), v.delta_vals.end(),
                  mod_reduce(1 - ns.delta, m));
        return v;
    }

    // Separating: the derived oval must sit in class 0, so work with a
    // representative whose class 0 is populated accordingly.
    SepEvenType w = std::get<SepEvenType>(t);
    const int k1 = w.k01 + w.k11;
    if (k1 >= 1 ? w.k01 < 1 : w.k00 < 1) w = swap_classes(w);
    const int k0 = w.k00 + w.k10;

    if (k1 >= 1) {
        // stored ovals: k0 zeros, then k1-1 halves; derived value is half
        for (int i = 0; i < k1 - 1; ++i) v.gamma[k0 + i] = half;
        for (int i = 0; i < k0; ++i) v.delta_vals[i] = (i < w.k10) ? 0 : 1;
        for (int i = 0; i < k1 - 1; ++i)
            v.delta_vals[k0 + i] = (i < w.k11) ? 0 : 1;
    } else {
        // all ovals carry value 0; derived value is 0
        for (int i = 0; i < k - 1; ++i) v.delta_vals[i] = (i < w.k10) ? 0 : 1;
    }
    return v;
}

}  // namespace spincensus
