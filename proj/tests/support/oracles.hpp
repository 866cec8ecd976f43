#pragma once

#include "collabmkt/dataset.hpp"
#include "collabmkt/geo.hpp"

#include <optional>
#include <string>

namespace collabmkt::testing::oracle {

// Great-circle distance via the atan2 form of the spherical law, computed in
// long double. A different formula from the library's haversine, so it acts
// as an independent numerical check (agreement expected to 1e-9 relative).
double sphere_distance_km(const GeoPoint& a, const GeoPoint& b);

// Haversine re-derived from the formula, written separately from the library
// implementation. Used by the counterfactual and reference-distance oracles,
// where strict less-than comparisons must agree with the library exactly:
// mirrored algebra (absolute-value deltas) keeps constructed ties exact.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

// Set-based recount of collaboration records and distinct pairs straight from
// the raw record vectors, with no shared enumeration code.
struct CollabCounts {
    long uc_collaborations = 0;
    long uc_pairs = 0;
    long sc_collaborations = 0;
    long sc_pairs = 0;
};
CollabCounts collaboration_counts(const Dataset& ds);

// Per-publication record counts by brute-force cross product.
long uc_count(const Dataset& ds, const Publication& pub);
long sc_count(const Dataset& ds, const Publication& pub);

// Mid-rank percentile by direct counting over the journal's category.
double if_percentile(const Dataset& ds, const std::string& journal_id);

// Scientific strength by direct loops over every publication.
double university_ss(const Dataset& ds, const std::string& university_id,
                     const std::string& sds_code);
double scientist_ss(const Dataset& ds, const std::string& scientist_id);

long staff_count(const Dataset& ds, const std::string& university_id,
                 const std::string& sds_code);

// Reference distances straight from their defining formulas. ssbd is absent
// when the sector's total strength is zero.
struct RefDistances {
    double expected = 0.0;
    double mbd = 0.0;
    std::optional<double> ssbd;
};
RefDistances reference_distances(const Dataset& ds, const std::string& site_id,
                                 const std::string& sds_code);

// Counterfactual recount by full enumeration. nullopt means ineligible.
struct CfOutcome {
    std::string benchmark_id;
    std::string benchmark_sds;
    long better = 0;
    long better_and_closer = 0;
};
std::optional<CfOutcome> university_cf(const Dataset& ds, const Publication& pub);
std::optional<CfOutcome> scientist_cf(const Dataset& ds, const Publication& pub);

} // namespace collabmkt::testing::oracle
