// Command line front end: classify and count real m-spin structures on
// hyperbolic Klein surfaces.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
// 3 empty result, 4 oracle budget exceeded under --require-oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spincensus/arf_types.hpp"
#include "spincensus/counting.hpp"
#include "spincensus/klein_surface.hpp"
#include "spincensus/report.hpp"
#include "spincensus/value_tuples.hpp"

namespace {

using namespace spincensus;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitBudget = 4;

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw CLI::ValidationError("--format", "must be table, json or csv");
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("SPINCENSUS_BUDGET")) {
        try {
            const long long v = std::stoll(env);
            if (v >= 1) return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(
            "SPINCENSUS_BUDGET must be a positive integer");
    }
    return OracleOptions{}.budget;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

json type_json(const ArfTopologicalType& t) {
    struct {
        json operator()(const OddType& x) const {
            return json::array({x.g, x.k});
        }
        json operator()(const NonSepEvenType& x) const {
            return json::array({x.g, x.delta, x.k0, x.k1});
        }
        json operator()(const SepEvenType& x) const {
            return json::array({x.g, x.delta_tilde, x.k00, x.k01, x.k10, x.k11});
        }
    } fmt;
    return std::visit(fmt, t);
}

struct TypesArgs {
    int g = 2;
    int m = 2;
    std::optional<int> k;
    std::optional<int> eps;
    std::string format = "table";
};

int cmd_types(const TypesArgs& a) {
    const OutputFormat fmt = parse_format(a.format);
    std::vector<SurfaceType> surfaces;
    if (a.k || a.eps) {
        if (!(a.k && a.eps))
            throw std::invalid_argument("--k and --eps must be given together");
        SurfaceType s{a.g, *a.k, *a.eps};
        if (!validate_surface_type(s))
            throw std::invalid_argument("no surface of type " + to_string(s));
        if (!has_positive_geometric_genus(s))
            throw OutsideScopeError("surface " + to_string(s) +
                                    " has geometric genus 0: outside scope");
        surfaces.push_back(s);
    } else {
        for (const SurfaceType& s : enumerate_surface_types(a.g))
            if (has_positive_geometric_genus(s)) surfaces.push_back(s);
    }

    struct Row {
        SurfaceType s;
        ArfTopologicalType t;
    };
    std::vector<Row> rows;
    for (const SurfaceType& s : surfaces)
        for (const ArfTopologicalType& t : enumerate_arf_types(s, a.m))
            rows.push_back({s, t});

    const int dim = moduli_dimension(a.g);
    if (fmt == OutputFormat::json) {
        json items = json::array();
        for (const Row& r : rows)
            items.push_back({{"k", r.s.k},
                             {"eps", r.s.epsilon},
                             {"type", type_json(r.t)},
                             {"dim", dim}});
        json doc = {{"g", a.g}, {"m", a.m}, {"types", items}};
        std::cout << doc.dump(2) << "\n";
    } else if (fmt == OutputFormat::csv) {
        std::cout << "g,m,k,eps,type,dim\n";
        for (const Row& r : rows)
            std::cout << a.g << "," << a.m << "," << r.s.k << "," << r.s.epsilon
                      << ",\"" << to_string(r.t) << "\"," << dim << "\n";
    } else {
        std::cout << "types g=" << a.g << " m=" << a.m << "\n";
        for (const Row& r : rows)
            std::cout << "k=" << r.s.k << " eps=" << r.s.epsilon
                      << " type=" << to_string(r.t) << " dim=" << dim << "\n";
    }
    return rows.empty() ? kExitEmpty : kExitOk;
}

struct CensusArgs {
    int g = 2;
    int m = 2;
    bool oracle = false;
    bool require_oracle = false;
    OracleOptions opts;
    std::string format = "table";
};

int cmd_census(const CensusArgs& a) {
    const OutputFormat fmt = parse_format(a.format);
    const bool with_oracle = a.oracle || a.require_oracle;
    const CensusReport rep = census(a.g, a.m, with_oracle, a.opts);
    std::cout << render_census(rep, fmt);
    if (a.require_oracle)
        for (const CensusGroup& grp : rep.groups)
            for (const CountResult& e : grp.entries)
                if (!e.oracle_tally) {
                    std::cerr << "error: oracle budget exceeded for surface "
                              << to_string(grp.surface) << "\n";
                    return kExitBudget;
                }
    return kExitOk;
}

struct CanonicalArgs {
    int m = 2;
    std::string odd_spec;
    std::string nonsep_spec;
    std::string sep_spec;
    std::optional<int> n;
    std::optional<int> eps;
    std::string format = "table";
};

int cmd_canonical(const CanonicalArgs& a) {
    const OutputFormat fmt = parse_format(a.format);
    const int given = (!a.odd_spec.empty()) + (!a.nonsep_spec.empty()) +
                      (!a.sep_spec.empty());
    if (given != 1)
        throw std::invalid_argument(
            "exactly one of --odd, --nonsep, --sep is required");

    ArfTopologicalType t;
    int eps;
    if (!a.odd_spec.empty()) {
        const auto v = parse_int_list(a.odd_spec);
        if (v.size() != 2)
            throw std::invalid_argument("--odd expects g,k");
        t = OddType{v[0], v[1]};
        if (a.eps) {
            if (*a.eps != 0 && *a.eps != 1)
                throw std::invalid_argument("--eps must be 0 or 1");
            eps = *a.eps;
        } else {
            // prefer the non-separating surface when it is in scope
            SurfaceType cand{v[0], v[1], 0};
            eps = (validate_surface_type(cand) &&
                   has_positive_geometric_genus(cand))
                      ? 0
                      : 1;
        }
    } else if (!a.nonsep_spec.empty()) {
        const auto v = parse_int_list(a.nonsep_spec);
        if (v.size() != 4)
            throw std::invalid_argument("--nonsep expects g,delta,k0,k1");
        t = NonSepEvenType{v[0], v[1], v[2], v[3]};
        eps = 0;
    } else {
        const auto v = parse_int_list(a.sep_spec);
        if (v.size() != 6)
            throw std::invalid_argument(
                "--sep expects g,delta_tilde,k00,k01,k10,k11");
        t = SepEvenType{v[0], v[1], v[2], v[3], v[4], v[5]};
        eps = 1;
    }

    const SurfaceType s{genus_of(t), oval_count_of(t), eps};
    if (!validate_surface_type(s))
        throw std::invalid_argument("no surface of type " + to_string(s));
    DecompositionParams d;
    if (a.n) {
        d.n = *a.n;
        d.g_tilde = (s.g + 1 - *a.n) / 2;
        if (!is_valid_decomposition(s, d))
            throw std::invalid_argument("n=" + std::to_string(*a.n) +
                                        " is not admissible for " + to_string(s));
    } else {
        d = decomposition_choices(s).front();
    }

    const ValueTuple v = canonical_tuple(t, a.m, d);
    auto seq = [](const std::vector<int>& xs) {
        std::string out = "[";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(xs[i]);
        }
        return out + "]";
    };
    if (fmt == OutputFormat::json) {
        json doc = {{"m", a.m},
                    {"surface", json::array({s.g, s.k, s.epsilon})},
                    {"n", d.n},
                    {"g_tilde", d.g_tilde},
                    {"alpha", v.alpha},
                    {"beta", v.beta},
                    {"gamma", v.gamma},
                    {"delta", v.delta_vals},
                    {"derived", derived_boundary_value(v)}};
        std::cout << doc.dump(2) << "\n";
    } else if (fmt == OutputFormat::csv) {
        std::cout << "m,g,k,eps,n,g_tilde,alpha,beta,gamma,delta,derived\n";
        auto bare = [&seq](const std::vector<int>& xs) {
            std::string out = seq(xs);
            return out.substr(1, out.size() - 2);
        };
        std::cout << a.m << "," << s.g << "," << s.k << "," << s.epsilon << ","
                  << d.n << "," << d.g_tilde << ",\"" << bare(v.alpha) << "\",\""
                  << bare(v.beta) << "\",\"" << bare(v.gamma) << "\",\""
                  << bare(v.delta_vals) << "\"," << derived_boundary_value(v)
                  << "\n";
    } else {
        std::cout << "canonical m=" << a.m << " surface=" << to_string(s)
                  << " n=" << d.n << " g_tilde=" << d.g_tilde << "\n";
        std::cout << "alpha=" << seq(v.alpha) << " beta=" << seq(v.beta)
                  << " gamma=" << seq(v.gamma) << " delta=" << seq(v.delta_vals)
                  << "\n";
        std::cout << "derived=" << derived_boundary_value(v) << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    int g_max = 2;
    std::string m_list = "2,3,4,6";
    bool all_n = false;
    bool corrupt = false;
    OracleOptions opts;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.g_max < 2) throw NonHyperbolicError(a.g_max);
    const std::vector<int> ms = parse_int_list(a.m_list);
    if (ms.empty()) throw std::invalid_argument("--m list is empty");
    for (int m : ms)
        if (m < 2) throw std::invalid_argument("every m must be >= 2");

    int checked = 0, failed = 0, skipped = 0;
    for (int g = 2; g <= a.g_max; ++g)
        for (int m : ms)
            for (const SurfaceType& s : enumerate_surface_types(g)) {
                if (!has_positive_geometric_genus(s)) continue;
                const auto ds = decomposition_choices(s);
                const std::size_t use = a.all_n ? ds.size() : 1;
                std::vector<TypeTally> tallies;
                for (std::size_t i = 0; i < use; ++i) {
                    const DecompositionParams& d = ds[i];
                    TypeTally tally;
                    try {
                        tally = oracle_count(s, m, d, a.opts);
                    } catch (const BudgetExceededError& e) {
                        std::cout << "check g=" << g << " k=" << s.k
                                  << " eps=" << s.epsilon << " m=" << m
                                  << " n=" << d.n << " SKIP (" << e.estimate()
                                  << " tuples over budget)\n";
                        ++skipped;
                        continue;
                    }
                    const auto types = enumerate_arf_types(s, m);
                    bool ok = true;
                    std::uint64_t tuples = 0;
                    for (const auto& [key, cnt] : tally) {
                        tuples += cnt;
                        if (std::find(types.begin(), types.end(), key) ==
                            types.end())
                            ok = false;  // tally key is not a valid type
                    }
                    for (const ArfTopologicalType& t : types) {
                        BigInt expect = closed_count(t, m);
                        if (a.corrupt) expect += 1;
                        const auto it = tally.find(t);
                        const BigInt got =
                            it == tally.end() ? BigInt(0) : BigInt(it->second);
                        if (expect != got) ok = false;
                    }
                    std::cout << "check g=" << g << " k=" << s.k
                              << " eps=" << s.epsilon << " m=" << m
                              << " n=" << d.n << " types=" << types.size()
                              << " tallied=" << tuples
                              << (ok ? " PASS" : " FAIL") << "\n";
                    ++checked;
                    if (!ok) ++failed;
                    tallies.push_back(std::move(tally));
                }
                if (a.all_n && tallies.size() > 1) {
                    bool same = true;
                    for (std::size_t i = 1; i < tallies.size(); ++i)
                        if (tallies[i] != tallies[0]) same = false;
                    std::cout << "check g=" << g << " k=" << s.k
                              << " eps=" << s.epsilon << " m=" << m
                              << " n-independence"
                              << (same ? " PASS" : " FAIL") << "\n";
                    ++checked;
                    if (!same) ++failed;
                }
            }
    std::cout << "verify: " << checked << " checks, " << failed << " failed, "
              << skipped << " skipped\n";
    return failed == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classify and count real m-spin structures on hyperbolic "
                 "Klein surfaces"};
    app.require_subcommand(1);

    TypesArgs types_args;
    CensusArgs census_args;
    CanonicalArgs canon_args;
    VerifyArgs verify_args;

    CLI::App* types = app.add_subcommand(
        "types", "list the admissible topological types for one genus");
    types->add_option("--g", types_args.g, "genus of the double cover")
        ->required();
    types->add_option("--m", types_args.m, "spin modulus")->required();
    types->add_option("--k", types_args.k, "restrict to k ovals");
    types->add_option("--eps", types_args.eps,
                      "restrict to separating (1) or not (0)");
    types->add_option("--format", types_args.format, "table, json or csv");

    CLI::App* cen = app.add_subcommand(
        "census", "count structures per type for one genus and modulus");
    cen->add_option("--g", census_args.g, "genus of the double cover")
        ->required();
    cen->add_option("--m", census_args.m, "spin modulus")->required();
    cen->add_flag("--oracle", census_args.oracle,
                  "cross-check counts by enumeration");
    cen->add_flag("--require-oracle", census_args.require_oracle,
                  "fail (exit 4) if any enumeration exceeds the budget");
    cen->add_option("--budget", census_args.opts.budget,
                    "max tuples per enumeration");
    cen->add_option("--threads", census_args.opts.threads,
                    "worker threads for enumeration");
    cen->add_option("--chunk", census_args.opts.chunk_size,
                    "enumeration work item size");
    cen->add_option("--format", census_args.format, "table, json or csv");

    CLI::App* canon = app.add_subcommand(
        "canonical", "print a representative value tuple for one type");
    canon->add_option("--m", canon_args.m, "spin modulus")->required();
    canon->add_option("--odd", canon_args.odd_spec, "odd-m type: g,k");
    canon->add_option("--nonsep", canon_args.nonsep_spec,
                      "non-separating type: g,delta,k0,k1");
    canon->add_option("--sep", canon_args.sep_spec,
                      "separating type: g,delta_tilde,k00,k01,k10,k11");
    canon->add_option("--n", canon_args.n, "number of decomposition curves");
    canon->add_option("--eps", canon_args.eps,
                      "surface class for --odd (default: 0 when in scope)");
    canon->add_option("--format", canon_args.format, "table, json or csv");

    CLI::App* ver = app.add_subcommand(
        "verify", "compare closed-form counts against enumeration");
    ver->add_option("--g-max", verify_args.g_max, "largest genus to sweep")
        ->required();
    ver->add_option("--m", verify_args.m_list,
                    "comma-separated moduli (default 2,3,4,6)");
    ver->add_flag("--all-n", verify_args.all_n,
                  "exercise every admissible decomposition");
    ver->add_option("--budget", verify_args.opts.budget,
                    "max tuples per enumeration");
    ver->add_option("--threads", verify_args.opts.threads,
                    "worker threads for enumeration");
    ver->add_option("--chunk", verify_args.opts.chunk_size,
                    "enumeration work item size");
    ver->add_flag("--corrupt-closed-form", verify_args.corrupt,
                  "perturb the closed form (test hook)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }

    try {
        const std::uint64_t env_budget = default_budget();
        if (!cen->count("--budget")) census_args.opts.budget = env_budget;
        if (!ver->count("--budget")) verify_args.opts.budget = env_budget;
        if (types->parsed()) return cmd_types(types_args);
        if (cen->parsed()) return cmd_census(census_args);
        if (canon->parsed()) return cmd_canonical(canon_args);
        return cmd_verify(verify_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }
}
