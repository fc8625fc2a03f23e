#include "spincensus/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "spincensus/value_tuples.hpp"

namespace spincensus {

namespace {

int mod_reduce(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

BigInt pow2(int e) { return BigInt(1) << e; }

BigInt ipow(int base, int exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("count formula division is not exact");
    return q;
}

// Residue the oval values must sum to.
int oval_sum_target(int g, int m) { return mod_reduce(1LL - g, m); }

bool k1_admissible(int g, int k1, int m) {
    return mod_reduce(static_cast<long long>(k1) * (m / 2), m) ==
           oval_sum_target(g, m);
}

void require_positive_options(const OracleOptions& opts) {
    if (opts.budget < 1 || opts.chunk_size < 1 || opts.threads < 1)
        throw std::invalid_argument("oracle budget, chunk size and thread "
                                    "count must all be positive");
}

int stored_ovals(const SurfaceType& s) {
    return s.epsilon == 1 ? s.k - 1 : s.k;
}

// Number of admissible oval value assignments, computed without
// materializing them so the budget check can run first.
BigInt admissible_pattern_count(const SurfaceType& s, int m) {
    if (m % 2 != 0) return mod_reduce(s.g - 1LL, m) == 0 ? 1 : 0;
    const int half = m / 2;
    const int target = oval_sum_target(s.g, m);
    const int stored = stored_ovals(s);
    BigInt total = 0;
    for (int j = 0; j <= stored; ++j) {
        bool ok;
        if (s.epsilon == 0) {
            ok = mod_reduce(static_cast<long long>(j) * half - target, m) == 0;
        } else {
            const int last =
                mod_reduce(target - static_cast<long long>(j) * half, m);
            ok = (last == 0 || last == half);
        }
        if (ok) total += binomial(stored, j);
    }
    return total;
}

std::vector<std::vector<int>> materialize_patterns(const SurfaceType& s, int m,
                                                   const DecompositionParams& d) {
    const int n1 = d.n - 1;
    std::vector<std::vector<int>> out;
    if (m % 2 != 0) {
        if (mod_reduce(s.g - 1LL, m) == 0) out.emplace_back(n1, 0);
        return out;
    }
    const int half = m / 2;
    const int target = oval_sum_target(s.g, m);
    const int stored = stored_ovals(s);
    if (stored >= 63)
        throw std::logic_error("oval pattern space too large to iterate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << stored); ++mask) {
        const int j = std::popcount(mask);
        bool ok;
        if (s.epsilon == 0) {
            ok = mod_reduce(static_cast<long long>(j) * half - target, m) == 0;
        } else {
            const int last =
                mod_reduce(target - static_cast<long long>(j) * half, m);
            ok = (last == 0 || last == half);
        }
        if (!ok) continue;
        std::vector<int> gamma(n1, 0);
        for (int i = 0; i < stored; ++i)
            if (mask >> i & 1) gamma[i] = half;
        out.push_back(std::move(gamma));
    }
    return out;
}

}  // namespace

BigInt binomial(int n, int r) {
    if (n < 0) throw std::invalid_argument("binomial needs n >= 0");
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc *= n - r + i;
        acc /= i;  // exact: product of i consecutive integers
    }
    return acc;
}

BigInt closed_count(const ArfTopologicalType& t, int m) {
    if (m < 2)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));

    if (const auto* o = std::get_if<OddType>(&t)) {
        if (m % 2 == 0)
            throw std::invalid_argument("odd-m type used with even m");
        if (o->g < 2) throw NonHyperbolicError(o->g);
        const bool sep_ok = o->k >= 1 && o->k <= o->g - 1 &&
                            (o->k % 2) == ((o->g + 1) % 2);
        const bool nonsep_ok = o->k >= 0 && o->k <= o->g - 2;
        if (!sep_ok && !nonsep_ok)
            throw std::invalid_argument("no in-scope surface matches type " +
                                        to_string(t));
        if (mod_reduce(o->g - 1LL, m) != 0)
            throw std::invalid_argument("type needs g = 1 (mod m)");
        return ipow(m, o->g);
    }

    if (const auto* ns = std::get_if<NonSepEvenType>(&t)) {
        if (m % 2 != 0)
            throw std::invalid_argument("even-m type used with odd m");
        if (ns->g < 2) throw NonHyperbolicError(ns->g);
        if (ns->k0 < 0 || ns->k1 < 0)
            throw std::invalid_argument("negative oval count");
        if (ns->delta != 0 && ns->delta != 1)
            throw std::invalid_argument("delta must be 0 or 1");
        const int k = ns->k0 + ns->k1;
        if (k > ns->g - 2)
            throw std::invalid_argument("no in-scope surface matches type " +
                                        to_string(t));
        if (!k1_admissible(ns->g, ns->k1, m))
            throw std::invalid_argument("oval value sum condition fails");
        return exact_div(binomial(k, ns->k1) * ipow(m, ns->g), 2);
    }

    const auto& se = std::get<SepEvenType>(t);
    if (m % 2 != 0) throw std::invalid_argument("even-m type used with odd m");
    if (se.g < 2) throw NonHyperbolicError(se.g);
    if (se.k00 < 0 || se.k01 < 0 || se.k10 < 0 || se.k11 < 0)
        throw std::invalid_argument("negative oval count");
    if (se.delta_tilde < 0 || se.delta_tilde > 2)
        throw std::invalid_argument("delta_tilde must be in {0,1,2}");
    const int k0 = se.k00 + se.k10;
    const int k1 = se.k01 + se.k11;
    const int k = k0 + k1;
    if (!(k >= 1 && k <= se.g - 1 && (k % 2) == ((se.g + 1) % 2)))
        throw std::invalid_argument("no in-scope surface matches type " +
                                    to_string(t));
    if (!k1_admissible(se.g, k1, m))
        throw std::invalid_argument("oval value sum condition fails");

    const BigInt M = binomial(k, k0) * binomial(k0, se.k00) * binomial(k1, se.k01);
    const bool forced = (m % 4 == 0) || (k0 != 0);
    if (se.g > k + 1) {
        if (forced) {
            if (se.delta_tilde != 0) return 0;
            return exact_div(ipow(m, se.g) * M, pow2(k - 1));
        }
        if (se.delta_tilde == 2) return 0;
        const BigInt base = ipow(m / 2, se.g) * M;
        const int e1 = se.g - k;
        const int e2 = (se.g - k - 1) / 2;
        if (se.delta_tilde == 0) return (pow2(e1) + pow2(e2)) * base;
        return (pow2(e1) - pow2(e2)) * base;
    }
    // g == k + 1
    if (forced) {
        if (se.delta_tilde != 1) return 0;
        return exact_div(ipow(m, k + 1) * M, pow2(k - 1));
    }
    if (se.delta_tilde == 0) return 0;
    const BigInt base = ipow(m / 2, k + 1) * M;
    return se.delta_tilde == 1 ? 3 * base : base;
}

BigInt count_even_arf_pairs(int g_tilde, int m) {
    if (g_tilde < 1)
        throw std::invalid_argument("g_tilde must be >= 1");
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("even m required");
    return pow2(g_tilde - 1) * (pow2(g_tilde) + 1) * ipow(m / 2, 2 * g_tilde);
}

BigInt count_odd_arf_pairs(int g_tilde, int m) {
    if (g_tilde < 1)
        throw std::invalid_argument("g_tilde must be >= 1");
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("even m required");
    return pow2(g_tilde - 1) * (pow2(g_tilde) - 1) * ipow(m / 2, 2 * g_tilde);
}

TypeTally oracle_count(const SurfaceType& s, int m, const DecompositionParams& d,
                       const OracleOptions& opts) {
    if (m < 2)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
    if (!validate_surface_type(s))
        throw std::invalid_argument("invalid surface type " + to_string(s));
    if (!has_positive_geometric_genus(s))
        throw OutsideScopeError("surface " + to_string(s) +
                                " has geometric genus 0: outside scope");
    if (!is_valid_decomposition(s, d))
        throw std::invalid_argument("decomposition (n=" + std::to_string(d.n) +
                                    ",g_tilde=" + std::to_string(d.g_tilde) +
                                    ") not admissible for " + to_string(s));
    require_positive_options(opts);

    const BigInt n_patterns = admissible_pattern_count(s, m);
    if (n_patterns == 0) return {};
    const BigInt space = n_patterns * ipow(m, s.g);
    if (space > opts.budget) throw BudgetExceededError(space, opts.budget);

    const auto patterns = materialize_patterns(s, m, d);
    const int gt = d.g_tilde;
    const int n1 = d.n - 1;
    std::uint64_t ab_size = 1;
    for (int i = 0; i < 2 * gt; ++i) ab_size *= static_cast<std::uint64_t>(m);
    std::uint64_t d_size = 1;
    for (int i = 0; i < n1; ++i) d_size *= static_cast<std::uint64_t>(m);

    // Keep the task list bounded no matter how small the requested chunk is.
    const std::uint64_t combined = ab_size * patterns.size();
    const std::uint64_t chunk =
        std::max(opts.chunk_size, combined / (std::uint64_t{1} << 20) + 1);

    struct Task {
        std::size_t pattern;
        std::uint64_t begin;
        std::uint64_t end;
    };
    std::vector<Task> tasks;
    for (std::size_t p = 0; p < patterns.size(); ++p)
        for (std::uint64_t b = 0; b < ab_size; b += chunk)
            tasks.push_back({p, b, std::min(ab_size, b + chunk)});

    // One count per choice of the distinguished similarity class: the two
    // choices land on the same normalized key, so a tuple whose partition is
    // swap-symmetric tallies twice.
    const bool weighted = (s.epsilon == 1 && m % 2 == 0);
    auto run_task = [&](const Task& task, TypeTally& tally) {
        ValueTuple v;
        v.m = m;
        v.surface = s;
        v.decomp = d;
        v.alpha.assign(gt, 0);
        v.beta.assign(gt, 0);
        v.gamma = patterns[task.pattern];
        v.delta_vals.assign(n1, 0);
        std::uint64_t idx = task.begin;
        for (int i = 0; i < gt; ++i) {
            v.alpha[i] = static_cast<int>(idx % m);
            idx /= m;
        }
        for (int i = 0; i < gt; ++i) {
            v.beta[i] = static_cast<int>(idx % m);
            idx /= m;
        }
        for (std::uint64_t a = task.begin; a < task.end; ++a) {
            std::fill(v.delta_vals.begin(), v.delta_vals.end(), 0);
            for (std::uint64_t j = 0; j < d_size; ++j) {
                ArfTopologicalType key = extract_type(v);
                std::uint64_t w = 1;
                if (weighted) {
                    const auto& se = std::get<SepEvenType>(key);
                    if (se.k00 == se.k10 && se.k01 == se.k11) w = 2;
                }
                tally[key] += w;
                for (int i = 0; i < n1; ++i) {
                    if (++v.delta_vals[i] < m) break;
                    v.delta_vals[i] = 0;
                }
            }
            int i = 0;
            for (; i < gt; ++i) {
                if (++v.alpha[i] < m) break;
                v.alpha[i] = 0;
            }
            if (i == gt)
                for (i = 0; i < gt; ++i) {
                    if (++v.beta[i] < m) break;
                    v.beta[i] = 0;
                }
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(opts.threads), tasks.size());
    if (workers <= 1) {
        TypeTally out;
        for (const Task& task : tasks) run_task(task, out);
        return out;
    }
    std::vector<TypeTally> partial(workers);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                run_task(tasks[i], partial[w]);
            }
        });
    for (auto& th : pool) th.join();
    TypeTally out;
    for (const auto& part : partial)
        for (const auto& [key, cnt] : part) out[key] += cnt;
    return out;
}

CensusReport census(int g, int m, bool with_oracle, const OracleOptions& opts) {
    if (m < 2)
        throw std::invalid_argument("m must be >= 2, got " + std::to_string(m));
    CensusReport rep;
    rep.g = g;
    rep.m = m;
    for (const SurfaceType& s : enumerate_surface_types(g)) {
        if (!has_positive_geometric_genus(s)) {
            rep.skipped.push_back(s);
            continue;
        }
        CensusGroup grp;
        grp.surface = s;
        const auto types = enumerate_arf_types(s, m);
        std::vector<ArfTopologicalType> rows = types;
        // Forced-invariant branches come with an explicit zero row for the
        // companion value.
        for (const auto& t : types)
            if (const auto* se = std::get_if<SepEvenType>(&t)) {
                if (m % 4 == 0 || se->k00 + se->k10 != 0) {
                    SepEvenType z = *se;
                    z.delta_tilde = (se->g > s.k + 1) ? 1 : 2;
                    rows.push_back(normalize_swap(z));
                }
            }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

        std::optional<TypeTally> tally;
        if (with_oracle && !rows.empty()) {
            try {
                tally = oracle_count(s, m, decomposition_choices(s).front(), opts);
            } catch (const BudgetExceededError&) {
                tally.reset();
            }
        }
        for (const auto& t : rows) {
            CountResult r;
            r.arf_type = t;
            r.m = m;
            r.count = closed_count(t, m);
            r.dimension = moduli_dimension(g);
            r.base = s;
            if (tally) {
                const auto it = tally->find(t);
                r.oracle_tally = it == tally->end() ? 0 : it->second;
            }
            grp.total += r.count;
            grp.entries.push_back(std::move(r));
        }
        rep.groups.push_back(std::move(grp));
    }
    return rep;
}

}  // namespace spincensus
