#include "collabmkt/collab.hpp"

#include "collabmkt/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace collabmkt::collab {

std::vector<UcCollab> enumerate_uc(const Dataset& ds) {
    std::vector<UcCollab> out;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const Publication& pub = ds.publications()[p];
        for (const std::size_t u : ds.publication_universities(p)) {
            const University& univ = ds.universities()[u];
            for (const std::size_t s : ds.publication_sites(p)) {
                const CompanySite& site = ds.sites()[s];
                out.push_back(UcCollab{pub.id, univ.id, site.id,
                                       great_circle_km(univ.location, site.location)});
            }
        }
    }
    return out;
}

std::vector<ScCollab> enumerate_sc(const Dataset& ds) {
    std::vector<ScCollab> out;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const Publication& pub = ds.publications()[p];
        for (const auto& [u, sds] : ds.publication_sectors(p)) {
            const University& univ = ds.universities()[u];
            for (const std::size_t s : ds.publication_sites(p)) {
                const CompanySite& site = ds.sites()[s];
                out.push_back(ScCollab{pub.id, univ.id, ds.sds()[sds].code, site.id,
                                       great_circle_km(univ.location, site.location)});
            }
        }
    }
    return out;
}

SummaryCounts summary(const Dataset& ds) {
    SummaryCounts counts;
    counts.publications = static_cast<long>(ds.publications().size());
    std::set<std::pair<std::size_t, std::size_t>> uc_pairs;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> sc_pairs;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const auto sites = ds.publication_sites(p);
        const long n_sites = static_cast<long>(sites.size());
        counts.uc_collaborations +=
            static_cast<long>(ds.publication_universities(p).size()) * n_sites;
        counts.sc_collaborations +=
            static_cast<long>(ds.publication_sectors(p).size()) * n_sites;
        for (const std::size_t u : ds.publication_universities(p)) {
            for (const std::size_t s : sites) uc_pairs.emplace(u, s);
        }
        for (const auto& [u, sds] : ds.publication_sectors(p)) {
            for (const std::size_t s : sites) sc_pairs.emplace(u, sds, s);
        }
    }
    counts.uc_pairs = static_cast<long>(uc_pairs.size());
    counts.sc_pairs = static_cast<long>(sc_pairs.size());
    return counts;
}

long FrequencyGrid::total_publications() const {
    long total = 0;
    for (const auto& [key, cell] : cells) total += cell.publications;
    return total;
}

long FrequencyGrid::total_uc_collaborations() const {
    long total = 0;
    for (const auto& [key, cell] : cells) {
        total += cell.publications * key.first * key.second;
    }
    return total;
}

FrequencyGrid frequency_grids(const Dataset& ds) {
    FrequencyGrid grid;
    std::map<std::pair<int, int>, std::pair<long, long>> acc; // count, sds_total sum
    long overall_sum = 0;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const int n_companies = static_cast<int>(ds.publication_sites(p).size());
        const int n_universities = static_cast<int>(ds.publication_universities(p).size());
        const long sds_total = static_cast<long>(ds.publication_sectors(p).size());
        auto& [count, sum] = acc[{n_companies, n_universities}];
        count += 1;
        sum += sds_total;
        overall_sum += sds_total;
    }
    for (const auto& [key, sums] : acc) {
        grid.cells[key] = GridCell{sums.first,
                                   static_cast<double>(sums.second) /
                                       static_cast<double>(sums.first)};
    }
    if (!ds.publications().empty()) {
        grid.overall_mean_sds_total = static_cast<double>(overall_sum) /
                                      static_cast<double>(ds.publications().size());
    }
    return grid;
}

IntensityTotals intensity_totals(std::span<const IntensityRow> rows) {
    IntensityTotals totals;
    for (const IntensityRow& row : rows) {
        totals.entities += row.entity_count;
        totals.collaborations += row.subtotal;
    }
    return totals;
}

IntensityReport company_intensity(const Dataset& ds, GroupBy group_by) {
    // Collaboration count per entity; entities that never collaborate do
    // not appear (the report covers collaborating companies only).
    std::map<std::string, long> per_entity;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const long m = static_cast<long>(ds.publication_universities(p).size());
        for (const std::size_t s : ds.publication_sites(p)) {
            const CompanySite& site = ds.sites()[s];
            per_entity[group_by == GroupBy::site ? site.id : site.company_id] += m;
        }
    }
    std::map<long, long> entities_by_count;
    for (const auto& [entity, count] : per_entity) entities_by_count[count] += 1;

    IntensityReport report;
    report.group_by = group_by;
    for (const auto& [count, entities] : entities_by_count) {
        report.rows.push_back(IntensityRow{count, entities, count * entities});
    }
    report.totals = intensity_totals(report.rows);
    return report;
}

Histogram distance_histogram(std::span<const double> distances_km, double bin_km) {
    if (!(bin_km > 0.0)) throw DataError("histogram bin width must be positive");
    Histogram hist;
    hist.bin_km = bin_km;
    hist.total = static_cast<long>(distances_km.size());
    if (distances_km.empty()) return hist;

    double sum = 0.0;
    double max = distances_km.front();
    for (const double d : distances_km) {
        const auto bin = static_cast<std::size_t>(d / bin_km);
        if (bin >= hist.counts.size()) hist.counts.resize(bin + 1, 0);
        hist.counts[bin] += 1;
        sum += d;
        max = std::max(max, d);
    }
    hist.mean_km = sum / static_cast<double>(distances_km.size());
    hist.max_km = max;
    return hist;
}

std::vector<double> distances(const std::vector<UcCollab>& collabs) {
    std::vector<double> out;
    out.reserve(collabs.size());
    for (const UcCollab& c : collabs) out.push_back(c.distance_km);
    return out;
}

std::vector<double> distances(const std::vector<ScCollab>& collabs) {
    std::vector<double> out;
    out.reserve(collabs.size());
    for (const ScCollab& c : collabs) out.push_back(c.distance_km);
    return out;
}

} // namespace collabmkt::collab
