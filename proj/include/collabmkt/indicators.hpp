#pragma once

#include "collabmkt/dataset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace collabmkt::indicators {

/// Mid-rank percentile of the journal's impact factor within its own
/// category: (strictly below + half of the ties, self included) / size.
/// Always in (0, 1); a singleton category gives 0.5.
double if_percentile(const Dataset& ds, std::string_view journal_id);

/// Percentile per journal, aligned with ds.journals().
std::vector<double> journal_percentiles(const Dataset& ds);

/// Scientific Strength of one (university, SDS): the sum over publications
/// with at least one author in that pair of the journal's IF percentile.
double university_strength(const Dataset& ds, std::string_view university_id,
                           std::string_view sds_code);

/// Scientific Strength of one scientist: same sum over the publications
/// they author.
double scientist_strength(const Dataset& ds, std::string_view scientist_id);

/// Qualitative Productivity: strength over research staff head count.
/// Throws UndefinedQpError when the pair has zero staff.
double qualitative_productivity(const Dataset& ds, std::string_view university_id,
                                std::string_view sds_code);

/// Per-university profile of one SDS: everyone with staff there, their
/// mass, strength, and productivity. Ordered by university id.
struct SectorProfile {
    std::string university_id;
    std::string sds_code;
    long mass = 0;
    double ss = 0.0;
    double qp = 0.0;
};

std::vector<SectorProfile> sector_profiles(const Dataset& ds, std::string_view sds_code);

struct ScientistStrength {
    std::string scientist_id;
    std::string university_id;
    bool stable = true;
    double ss = 0.0;
};

/// Scientists of the SDS with their strengths, ordered by scientist id.
/// stable_only keeps only stable-affiliation researchers.
std::vector<ScientistStrength> scientist_strengths(const Dataset& ds,
                                                   std::string_view sds_code,
                                                   bool stable_only);

struct RankEntry {
    std::string entity_id;
    double score = 0.0;
    int rank = 0; // 1-based position, descending score, ties by ascending id
};

struct Ranking {
    std::string sds_code;
    std::vector<RankEntry> entries;
};

/// Universities active in the SDS ranked by Qualitative Productivity.
/// Throws EmptySectorError when nobody staffs the sector.
Ranking rank_universities(const Dataset& ds, std::string_view sds_code);

/// Scientists of the SDS ranked by Scientific Strength. stable_only
/// restricts the field to stable-affiliation researchers.
Ranking rank_scientists(const Dataset& ds, std::string_view sds_code, bool stable_only);

} // namespace collabmkt::indicators
