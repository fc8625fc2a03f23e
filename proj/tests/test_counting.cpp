#include <doctest.h>

#include <algorithm>
#include <map>

#include "spincensus/counting.hpp"
#include "spincensus/value_tuples.hpp"

using namespace spincensus;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("closed counts reproduce the worked genus-3 example") {
    CHECK(closed_count(SepEvenType{3, 1, 1, 1, 0, 0}, 4) == 64);
    CHECK(closed_count(SepEvenType{3, 1, 1, 0, 0, 1}, 4) == 64);
    CHECK(closed_count(NonSepEvenType{3, 0, 0, 1}, 4) == 32);
    CHECK(closed_count(NonSepEvenType{3, 1, 0, 1}, 4) == 32);
    // companion rows of a forced invariant count zero
    CHECK(closed_count(SepEvenType{3, 2, 1, 1, 0, 0}, 4) == 0);
    CHECK(closed_count(SepEvenType{3, 0, 1, 1, 0, 0}, 4) == 0);
}

TEST_CASE("closed counts for the unforced separating branches") {
    // g > k+1, m = 2 mod 4, no zero-valued ovals: the two halves split
    CHECK(closed_count(SepEvenType{5, 0, 0, 1, 0, 1}, 2) == 20);
    CHECK(closed_count(SepEvenType{5, 1, 0, 1, 0, 1}, 2) == 12);
    CHECK(closed_count(SepEvenType{5, 0, 0, 0, 0, 2}, 2) == 10);
    CHECK(closed_count(SepEvenType{5, 1, 0, 0, 0, 2}, 2) == 6);
    CHECK(closed_count(SepEvenType{5, 2, 0, 0, 0, 2}, 2) == 0);
    // zero-valued ovals force the invariant
    CHECK(closed_count(SepEvenType{5, 0, 0, 0, 2, 0}, 2) == 16);
    CHECK(closed_count(SepEvenType{5, 0, 1, 0, 1, 0}, 2) == 32);
    CHECK(closed_count(SepEvenType{5, 1, 1, 0, 1, 0}, 2) == 0);
    // g = k+1 unforced: 3:1 split between the two invariant values
    CHECK(closed_count(SepEvenType{2, 1, 0, 0, 0, 1}, 2) == 3);
    CHECK(closed_count(SepEvenType{2, 2, 0, 0, 0, 1}, 2) == 1);
}

TEST_CASE("closed counts for odd moduli") {
    CHECK(closed_count(OddType{4, 1}, 3) == 81);
    CHECK(closed_count(OddType{4, 3}, 3) == 81);
    CHECK(closed_count(OddType{6, 5}, 5) == 15625);
    CHECK_THROWS_AS(closed_count(OddType{5, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(closed_count(OddType{4, 1}, 4), std::invalid_argument);
}

TEST_CASE("closed count rejects malformed input") {
    CHECK_THROWS_AS(closed_count(NonSepEvenType{3, 2, 0, 1}, 4),
                    std::invalid_argument);  // delta outside {0,1}
    CHECK_THROWS_AS(closed_count(NonSepEvenType{3, 0, 2, 1}, 4),
                    std::invalid_argument);  // k too large for any surface
    CHECK_THROWS_AS(closed_count(NonSepEvenType{3, 0, 1, 0}, 4),
                    std::invalid_argument);  // oval sum condition fails
    CHECK_THROWS_AS(closed_count(SepEvenType{3, 1, 1, 1, 1, 0}, 4),
                    std::invalid_argument);  // k has the wrong parity
    CHECK_THROWS_AS(closed_count(NonSepEvenType{1, 0, 0, 0}, 2),
                    NonHyperbolicError);
    CHECK_THROWS_AS(closed_count(NonSepEvenType{3, 0, 0, 1}, 1),
                    std::invalid_argument);
}

TEST_CASE("parity pair counts") {
    CHECK(count_even_arf_pairs(1, 2) == 3);
    CHECK(count_odd_arf_pairs(1, 2) == 1);
    CHECK(count_even_arf_pairs(2, 2) == 10);
    CHECK(count_odd_arf_pairs(2, 2) == 6);
    CHECK(count_even_arf_pairs(1, 4) == 12);
    CHECK(count_odd_arf_pairs(1, 4) == 4);
    for (int gt = 1; gt <= 4; ++gt)
        for (int m : {2, 4, 6, 8}) {
            BigInt total = 1;
            for (int i = 0; i < 2 * gt; ++i) total *= m;
            CHECK(count_even_arf_pairs(gt, m) + count_odd_arf_pairs(gt, m) ==
                  total);
        }
    CHECK_THROWS_AS(count_even_arf_pairs(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_even_arf_pairs(1, 3), std::invalid_argument);
}

TEST_CASE("oracle reproduces the worked examples") {
    {
        const TypeTally t = oracle_count({3, 1, 0}, 4, {2, 1});
        REQUIRE(t.size() == 2);
        CHECK(t.at(NonSepEvenType{3, 0, 0, 1}) == 32);
        CHECK(t.at(NonSepEvenType{3, 1, 0, 1}) == 32);
    }
    {
        const TypeTally t = oracle_count({3, 2, 1}, 4, {2, 1});
        REQUIRE(t.size() == 2);
        CHECK(t.at(normalize_swap(SepEvenType{3, 1, 1, 1, 0, 0})) == 64);
        CHECK(t.at(normalize_swap(SepEvenType{3, 1, 1, 0, 0, 1})) == 64);
    }
    {
        const TypeTally t = oracle_count({4, 1, 0}, 3, {3, 1});
        REQUIRE(t.size() == 1);
        CHECK(t.at(OddType{4, 1}) == 81);
    }
    {
        const TypeTally t = oracle_count({2, 1, 1}, 2, {1, 1});
        REQUIRE(t.size() == 2);
        CHECK(t.at(SepEvenType{2, 1, 0, 0, 0, 1}) == 3);
        CHECK(t.at(SepEvenType{2, 2, 0, 0, 0, 1}) == 1);
    }
}

TEST_CASE("oracle tally for a genus-5 separating surface") {
    const TypeTally t = oracle_count({5, 2, 1}, 2, {2, 2});
    REQUIRE(t.size() == 6);
    CHECK(t.at(SepEvenType{5, 0, 0, 0, 0, 2}) == 10);
    CHECK(t.at(SepEvenType{5, 1, 0, 0, 0, 2}) == 6);
    CHECK(t.at(SepEvenType{5, 0, 0, 1, 0, 1}) == 20);
    CHECK(t.at(SepEvenType{5, 1, 0, 1, 0, 1}) == 12);
    CHECK(t.at(SepEvenType{5, 0, 0, 0, 2, 0}) == 16);
    CHECK(t.at(SepEvenType{5, 0, 1, 0, 1, 0}) == 32);

    const TypeTally u = oracle_count({5, 2, 1}, 4, {2, 2});
    REQUIRE(u.size() == 4);
    CHECK(u.at(SepEvenType{5, 0, 0, 0, 2, 0}) == 512);
    CHECK(u.at(SepEvenType{5, 0, 1, 0, 1, 0}) == 1024);
    CHECK(u.at(SepEvenType{5, 0, 0, 0, 0, 2}) == 512);
    CHECK(u.at(SepEvenType{5, 0, 0, 1, 0, 1}) == 1024);
}

TEST_CASE("oracle agrees with the closed form at small size") {
    for (int g = 2; g <= 4; ++g)
        for (const SurfaceType& s : enumerate_surface_types(g)) {
            if (!has_positive_geometric_genus(s)) continue;
            for (int m : {2, 3, 4, 6}) {
                const auto d = decomposition_choices(s).front();
                const TypeTally tally = oracle_count(s, m, d);
                const auto types = enumerate_arf_types(s, m);
                std::uint64_t sum = 0;
                for (const auto& [key, cnt] : tally) {
                    // every tallied key is a listed type
                    CHECK(std::find(types.begin(), types.end(), key) !=
                          types.end());
                    sum += cnt;
                }
                BigInt expected_total = 0;
                for (const auto& t : types) {
                    const BigInt want = closed_count(t, m);
                    const auto it = tally.find(t);
                    const BigInt got =
                        it == tally.end() ? BigInt(0) : BigInt(it->second);
                    CHECK(want == got);
                    expected_total += want;
                }
                CHECK(BigInt(sum) == expected_total);
            }
        }
}

TEST_CASE("oracle is independent of decomposition, threads and chunking") {
    const TypeTally base = oracle_count({5, 1, 0}, 4, {2, 2});
    CHECK(base == oracle_count({5, 1, 0}, 4, {4, 1}));

    OracleOptions opts;
    for (int threads : {1, 2, 4})
        for (std::uint64_t chunk : {std::uint64_t{1}, std::uint64_t{7},
                                    std::uint64_t{16384}}) {
            opts.threads = threads;
            opts.chunk_size = chunk;
            CHECK(base == oracle_count({5, 1, 0}, 4, {2, 2}, opts));
        }

    const TypeTally a = oracle_count({6, 1, 0}, 2, {3, 2});
    CHECK(a == oracle_count({6, 1, 0}, 2, {5, 1}));
}

TEST_CASE("oracle budget") {
    OracleOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(oracle_count({3, 2, 1}, 4, {2, 1}, opts),
                    BudgetExceededError);
    try {
        oracle_count({3, 2, 1}, 4, {2, 1}, opts);
    } catch (const BudgetExceededError& e) {
        CHECK(e.estimate() == 128);  // 2 oval patterns * 4^3
    }
    opts.budget = 0;
    CHECK_THROWS_AS(oracle_count({3, 2, 1}, 4, {2, 1}, opts),
                    std::invalid_argument);
}

TEST_CASE("oracle rejects bad input") {
    CHECK_THROWS_AS(oracle_count({3, 2, 1}, 4, {4, 0}), std::invalid_argument);
    CHECK_THROWS_AS(oracle_count({3, 4, 1}, 4, {4, 0}), OutsideScopeError);
    CHECK_THROWS_AS(oracle_count({1, 0, 0}, 4, {1, 0}), NonHyperbolicError);
}

TEST_CASE("census reproduces the genus-3 modulus-4 classification") {
    const CensusReport rep = census(3, 4, true);
    CHECK(rep.g == 3);
    CHECK(rep.m == 4);
    REQUIRE(rep.groups.size() == 3);

    const CensusGroup& sep = rep.groups[0];
    CHECK(sep.surface == SurfaceType{3, 2, 1});
    REQUIRE(sep.entries.size() == 4);  // two live rows, two companion zeros
    int live = 0, zero = 0;
    for (const CountResult& e : sep.entries) {
        CHECK(e.dimension == 6);
        CHECK(e.base == SurfaceType{3, 2, 1});
        REQUIRE(e.oracle_tally.has_value());
        CHECK(BigInt(*e.oracle_tally) == e.count);
        if (e.count == 64)
            ++live;
        else if (e.count == 0)
            ++zero;
    }
    CHECK(live == 2);
    CHECK(zero == 2);
    CHECK(sep.total == 128);

    CHECK(rep.groups[1].surface == SurfaceType{3, 0, 0});
    CHECK(rep.groups[1].entries.empty());
    CHECK(rep.groups[1].total == 0);

    const CensusGroup& ns = rep.groups[2];
    CHECK(ns.surface == SurfaceType{3, 1, 0});
    REQUIRE(ns.entries.size() == 2);
    for (const CountResult& e : ns.entries) {
        CHECK(e.count == 32);
        REQUIRE(e.oracle_tally.has_value());
        CHECK(*e.oracle_tally == 32);
    }
    CHECK(ns.total == 64);

    const std::vector<SurfaceType> skipped = {{3, 4, 1}, {3, 2, 0}, {3, 3, 0}};
    CHECK(rep.skipped == skipped);
}

TEST_CASE("census for odd and empty moduli") {
    const CensusReport odd = census(4, 3, false);
    for (const CensusGroup& grp : odd.groups) {
        REQUIRE(grp.entries.size() == 1);
        CHECK(grp.entries[0].count == 81);
        CHECK(grp.entries[0].arf_type ==
              ArfTopologicalType{OddType{4, grp.surface.k}});
        CHECK_FALSE(grp.entries[0].oracle_tally.has_value());
    }
    CHECK(odd.groups.size() == 5);  // (1,1),(3,1),(0,0),(1,0),(2,0)

    const CensusReport empty = census(2, 5, false);
    for (const CensusGroup& grp : empty.groups) CHECK(grp.entries.empty());
}

TEST_CASE("census keeps going when the oracle budget is too small") {
    OracleOptions opts;
    opts.budget = 1;
    const CensusReport rep = census(3, 4, true, opts);
    for (const CensusGroup& grp : rep.groups)
        for (const CountResult& e : grp.entries)
            CHECK_FALSE(e.oracle_tally.has_value());
    // closed-form values are unaffected
    CHECK(rep.groups[0].total == 128);
}
