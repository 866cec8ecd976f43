#pragma once

#include "collabmkt/dataset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collabmkt::efficiency {

enum class Level { university, scientist };

enum class IneligibleReason {
    multi_company,   // more than one company site co-authors
    unstable_author, // scientist-level only: a co-author lacks a stable seat
};

/// Could the company have found a strictly better partner, and a strictly
/// better one strictly closer to its site? Counts are present only for
/// eligible publications.
struct CounterfactualResult {
    std::string publication_id;
    bool eligible = false;
    std::optional<IneligibleReason> reason;
    std::string benchmark_id; // best co-authoring university or scientist
    std::string benchmark_sds;
    double benchmark_score = 0.0;
    std::optional<long> better_count;
    std::optional<long> better_and_closer_count;
};

/// University-level counterfactual for one publication. Eligible iff
/// exactly one company site co-authors. The benchmark is the co-authoring
/// university best ranked by Qualitative Productivity in its own SDS;
/// "better" means strictly higher QP there, "closer" strictly smaller
/// great-circle distance to the site.
CounterfactualResult university_counterfactual(const Dataset& ds,
                                               std::string_view publication_id);

/// Scientist-level counterfactual. Eligible iff exactly one company site
/// AND every academic co-author has a stable affiliation. The benchmark is
/// the co-author with the highest Scientific Strength; comparisons run
/// over the stable scientists of the benchmark's SDS, each sitting at
/// their university's distance from the site.
CounterfactualResult scientist_counterfactual(const Dataset& ds,
                                              std::string_view publication_id);

struct EfficiencyReport {
    Level level = Level::university;
    long total_publications = 0;
    long eligible_count = 0;
    long better_exists_count = 0;     // eligible with better_count > 0
    long better_and_closer_count = 0; // eligible with better_and_closer_count > 0
    std::optional<double> better_exists_share;       // over eligible
    std::optional<double> bc_share_of_eligible;      // over eligible
    std::optional<double> bc_share_of_better_exists; // over the better-exists subset
    std::optional<double> mean_better_count;         // over eligible
    std::optional<double> mean_better_and_closer;    // over eligible
    std::vector<CounterfactualResult> results;       // one per publication, id order
};

/// Counterfactuals for every publication plus the aggregate shares. Zero
/// eligible publications leaves every share and mean absent.
EfficiencyReport efficiency_report(const Dataset& ds, Level level);

/// Universities active in the SDS ordered by descending Qualitative
/// Productivity (ties by id), each with its distance from `from`, cut to
/// the top_n best. Throws EmptySectorError for an unstaffed SDS.
struct Recommendation {
    std::string university_id;
    double qp = 0.0;
    double distance_km = 0.0;
    int rank = 0;
};

std::vector<Recommendation> recommend(const Dataset& ds, const GeoPoint& from,
                                      std::string_view sds_code, int top_n);

} // namespace collabmkt::efficiency
