#pragma once

#include "collabmkt/dataset.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace collabmkt::collab {

/// University-company collaboration: one (publication, university, site)
/// triple. A publication with m universities and n sites yields m*n.
struct UcCollab {
    std::string publication_id;
    std::string university_id;
    std::string site_id;
    double distance_km = 0.0;
};

/// SDS-company collaboration: one (publication, university, SDS, site)
/// tuple, one per disciplinary sector the academic side brings in.
struct ScCollab {
    std::string publication_id;
    std::string university_id;
    std::string sds_code;
    std::string site_id;
    double distance_km = 0.0;
};

/// All UC collaborations, ordered by (publication, university, site) id.
std::vector<UcCollab> enumerate_uc(const Dataset& ds);

/// All SC collaborations, ordered by (publication, university, sds, site).
std::vector<ScCollab> enumerate_sc(const Dataset& ds);

/// Headline counts. Pairs are distinct (university, site) and
/// (university, SDS, site) sets; pairs <= collaborations always.
struct SummaryCounts {
    long publications = 0;
    long uc_collaborations = 0;
    long uc_pairs = 0;
    long sc_collaborations = 0;
    long sc_pairs = 0;
};

SummaryCounts summary(const Dataset& ds);

/// Publication counts and mean SDS-totals cross-tabulated by how many
/// companies and universities co-author. The SDS-total of a publication is
/// its number of distinct (university, SDS) author pairs.
struct GridCell {
    long publications = 0;
    double mean_sds_total = 0.0;
};

struct FrequencyGrid {
    // key: (number of company sites, number of universities)
    std::map<std::pair<int, int>, GridCell> cells;
    std::optional<double> overall_mean_sds_total;

    long total_publications() const;

    /// Marginal identity: sum of publications * companies * universities
    /// over the cells equals the UC collaboration count.
    long total_uc_collaborations() const;
};

FrequencyGrid frequency_grids(const Dataset& ds);

/// How many UC collaborations each company entity accumulates. Entities
/// are individual sites or whole companies (sites grouped by company_id).
enum class GroupBy { site, company };

struct IntensityRow {
    long collab_count = 0;  // collaborations per entity in this bucket
    long entity_count = 0;  // entities with exactly that many
    long subtotal = 0;      // collab_count * entity_count
};

/// Column sums used by the report and checkable against external tables.
struct IntensityTotals {
    long entities = 0;
    long collaborations = 0;
};

IntensityTotals intensity_totals(std::span<const IntensityRow> rows);

struct IntensityReport {
    GroupBy group_by = GroupBy::site;
    std::vector<IntensityRow> rows; // ascending collab_count
    IntensityTotals totals;
};

IntensityReport company_intensity(const Dataset& ds, GroupBy group_by);

/// Left-closed right-open distance bins of width bin_km: bin k covers
/// [k*bin_km, (k+1)*bin_km). Empty input yields no bins and no mean/max.
struct Histogram {
    double bin_km = 0.0;
    std::vector<long> counts;
    long total = 0;
    std::optional<double> mean_km;
    std::optional<double> max_km;
};

Histogram distance_histogram(std::span<const double> distances_km, double bin_km);

std::vector<double> distances(const std::vector<UcCollab>& collabs);
std::vector<double> distances(const std::vector<ScCollab>& collabs);

} // namespace collabmkt::collab
