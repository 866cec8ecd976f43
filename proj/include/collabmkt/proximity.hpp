#pragma once

#include "collabmkt/dataset.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace collabmkt::proximity {

/// Weighted mean of `values`; weights must not sum to zero.
double weighted_mean(std::span<const double> values, std::span<const double> weights);

/// Unweighted mean distance from the site to every university staffed in
/// the SDS. Throws EmptySectorError when no university qualifies.
double expected_distance_km(const Dataset& ds, std::string_view site_id,
                            std::string_view sds_code);

/// Mass-barycentric distance: staff-weighted mean of the same distances.
double mass_barycentric_km(const Dataset& ds, std::string_view site_id,
                           std::string_view sds_code);

/// Strength-barycentric distance: Scientific-Strength-weighted mean.
/// Throws ZeroStrengthError when the staffed SDS has zero total SS, a
/// different failure from the empty sector.
double ss_barycentric_km(const Dataset& ds, std::string_view site_id,
                         std::string_view sds_code);

/// One SDS-company collaboration compared against the three references.
/// ssbd_km is absent when the SDS has zero total strength; such rows are
/// excluded from the SSBD average and counted separately.
struct ProximityRow {
    std::string publication_id;
    std::string university_id;
    std::string sds_code;
    std::string site_id;
    double real_km = 0.0;
    double expected_km = 0.0;
    double mbd_km = 0.0;
    std::optional<double> ssbd_km;
    bool expected_gt_real = false;
    bool mbd_gt_real = false;
    std::optional<bool> ssbd_gt_real;
};

struct ProximityReport {
    std::vector<ProximityRow> rows;
    long n_rows = 0;
    double real_avg_km = 0.0;
    double expected_avg_km = 0.0;
    double mbd_avg_km = 0.0;
    std::optional<double> ssbd_avg_km; // over rows where SSBD exists
    double expected_ratio = 0.0;       // each average over the real average
    double mbd_ratio = 0.0;
    std::optional<double> ssbd_ratio;
    long expected_gt_real_count = 0; // strict inequalities
    long mbd_gt_real_count = 0;
    long ssbd_gt_real_count = 0;
    long ssbd_excluded_count = 0;
};

/// One row per SC collaboration, in enumeration order, plus the averages,
/// ratios, and strict expected-beats-real counts.
/// Throws DataError when the dataset has no SC collaborations.
ProximityReport proximity_report(const Dataset& ds);

} // namespace collabmkt::proximity
