#include "spincensus/report.hpp"

#include <json.hpp>
#include <sstream>

namespace spincensus {

namespace {

using nlohmann::json;

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

json census_json(const CensusReport& r) {
    json groups = json::array();
    for (const CensusGroup& grp : r.groups) {
        json entries = json::array();
        for (const CountResult& e : grp.entries) {
            entries.push_back({
                {"type", type_json(e.arf_type)},
                {"N", e.count.str()},
                {"oracle", e.oracle_tally ? json(std::to_string(*e.oracle_tally))
                                          : json(nullptr)},
                {"dim", e.dimension},
            });
        }
        groups.push_back({{"k", grp.surface.k},
                          {"eps", grp.surface.epsilon},
                          {"entries", entries}});
    }
    json skipped = json::array();
    for (const SurfaceType& s : r.skipped)
        skipped.push_back(json::array({s.g, s.k, s.epsilon}));
    return {{"g", r.g}, {"m", r.m}, {"groups", groups}, {"skipped", skipped}};
}

std::string render_table(const CensusReport& r) {
    std::ostringstream out;
    out << "census g=" << r.g << " m=" << r.m << " dim=" << moduli_dimension(r.g)
        << "\n";
    for (const CensusGroup& grp : r.groups) {
        out << "group k=" << grp.surface.k << " eps=" << grp.surface.epsilon
            << " total=" << grp.total << "\n";
        if (grp.entries.empty()) {
            out << "  (no admissible types)\n";
            continue;
        }
        for (const CountResult& e : grp.entries) {
            out << "  type=" << to_string(e.arf_type) << " N=" << e.count
                << " oracle=";
            if (e.oracle_tally)
                out << *e.oracle_tally;
            else
                out << "-";
            out << " dim=" << e.dimension << "\n";
        }
    }
    for (const SurfaceType& s : r.skipped)
        out << "skipped k=" << s.k << " eps=" << s.epsilon << "\n";
    return out.str();
}

std::string render_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "row,g,m,k,eps,type,N,oracle,dim\n";
    for (const CensusGroup& grp : r.groups)
        for (const CountResult& e : grp.entries) {
            out << "entry," << r.g << "," << r.m << "," << grp.surface.k << ","
                << grp.surface.epsilon << ",\"" << to_string(e.arf_type)
                << "\"," << e.count << ",";
            if (e.oracle_tally) out << *e.oracle_tally;
            out << "," << e.dimension << "\n";
        }
    for (const SurfaceType& s : r.skipped)
        out << "skipped," << r.g << "," << r.m << "," << s.k << "," << s.epsilon
            << ",,,,\n";
    return out.str();
}

}  // namespace

std::string render_census(const CensusReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json:
            return census_json(r).dump(2) + "\n";
        case OutputFormat::csv:
            return render_csv(r);
        case OutputFormat::table:
        default:
            return render_table(r);
    }
}

}  // namespace spincensus
