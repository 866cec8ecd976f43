#include "collabmkt/proximity.hpp"

#include "collabmkt/collab.hpp"
#include "collabmkt/indicators.hpp"

#include <unordered_map>

namespace collabmkt::proximity {

double weighted_mean(std::span<const double> values, std::span<const double> weights) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        num += weights[i] * values[i];
        den += weights[i];
    }
    if (den == 0.0) throw DataError("weighted mean over zero total weight");
    return num / den;
}

namespace {

const CompanySite& site_or_throw(const Dataset& ds, std::string_view site_id) {
    const auto idx = ds.site_index(site_id);
    if (!idx) throw DataError("unknown site '" + std::string(site_id) + "'");
    return ds.sites()[*idx];
}

std::span<const Dataset::SectorStaff> staff_or_throw(const Dataset& ds,
                                                     std::string_view sds_code) {
    const auto staff = ds.sector_staff(sds_code);
    if (staff.empty()) {
        throw EmptySectorError("SDS '" + std::string(sds_code) + "' has no staffed university");
    }
    return staff;
}

std::vector<double> staff_distances(const Dataset& ds, const CompanySite& site,
                                    std::span<const Dataset::SectorStaff> staff) {
    std::vector<double> out;
    out.reserve(staff.size());
    for (const Dataset::SectorStaff& entry : staff) {
        out.push_back(great_circle_km(ds.universities()[entry.university].location,
                                      site.location));
    }
    return out;
}

} // namespace

double expected_distance_km(const Dataset& ds, std::string_view site_id,
                            std::string_view sds_code) {
    const CompanySite& site = site_or_throw(ds, site_id);
    const auto staff = staff_or_throw(ds, sds_code);
    const auto dists = staff_distances(ds, site, staff);
    double sum = 0.0;
    for (const double d : dists) sum += d;
    return sum / static_cast<double>(dists.size());
}

double mass_barycentric_km(const Dataset& ds, std::string_view site_id,
                           std::string_view sds_code) {
    const CompanySite& site = site_or_throw(ds, site_id);
    const auto staff = staff_or_throw(ds, sds_code);
    const auto dists = staff_distances(ds, site, staff);
    std::vector<double> weights;
    weights.reserve(staff.size());
    for (const Dataset::SectorStaff& entry : staff) {
        weights.push_back(static_cast<double>(entry.staff));
    }
    return weighted_mean(dists, weights);
}

double ss_barycentric_km(const Dataset& ds, std::string_view site_id,
                         std::string_view sds_code) {
    const CompanySite& site = site_or_throw(ds, site_id);
    const auto staff = staff_or_throw(ds, sds_code);
    const auto profiles = indicators::sector_profiles(ds, sds_code);
    double total_ss = 0.0;
    for (const auto& p : profiles) total_ss += p.ss;
    if (total_ss == 0.0) {
        throw ZeroStrengthError("SDS '" + std::string(sds_code) +
                                "' has zero total Scientific Strength");
    }
    const auto dists = staff_distances(ds, site, staff);
    std::vector<double> weights;
    weights.reserve(profiles.size());
    for (const auto& p : profiles) weights.push_back(p.ss); // same order: id-sorted
    return weighted_mean(dists, weights);
}

ProximityReport proximity_report(const Dataset& ds) {
    const auto collabs = collab::enumerate_sc(ds);
    if (collabs.empty()) {
        throw DataError("dataset has no SDS-company collaborations");
    }

    // Per-SDS strength profile and per-(SDS, site) reference distances,
    // built once each.
    struct SectorRefs {
        std::vector<double> masses;
        std::vector<double> strengths;
        double total_ss = 0.0;
    };
    struct RefValues {
        double expected = 0.0;
        double mbd = 0.0;
        std::optional<double> ssbd;
    };
    std::unordered_map<std::string, SectorRefs> sector_cache;
    std::unordered_map<std::string, RefValues> value_cache; // key: sds '\n' site

    ProximityReport report;
    report.rows.reserve(collabs.size());

    double real_sum = 0.0;
    double expected_sum = 0.0;
    double mbd_sum = 0.0;
    double ssbd_sum = 0.0;
    long ssbd_rows = 0;

    for (const collab::ScCollab& c : collabs) {
        auto sector_it = sector_cache.find(c.sds_code);
        if (sector_it == sector_cache.end()) {
            SectorRefs refs;
            const auto profiles = indicators::sector_profiles(ds, c.sds_code);
            refs.masses.reserve(profiles.size());
            refs.strengths.reserve(profiles.size());
            for (const auto& p : profiles) {
                refs.masses.push_back(static_cast<double>(p.mass));
                refs.strengths.push_back(p.ss);
                refs.total_ss += p.ss;
            }
            sector_it = sector_cache.emplace(c.sds_code, std::move(refs)).first;
        }

        const std::string key = c.sds_code + '\n' + c.site_id;
        auto value_it = value_cache.find(key);
        if (value_it == value_cache.end()) {
            const CompanySite& site = ds.sites()[*ds.site_index(c.site_id)];
            const auto staff = ds.sector_staff(c.sds_code);
            const SectorRefs& refs = sector_it->second;
            const auto dists = staff_distances(ds, site, staff);
            RefValues values;
            double sum = 0.0;
            for (const double d : dists) sum += d;
            values.expected = sum / static_cast<double>(dists.size());
            values.mbd = weighted_mean(dists, refs.masses);
            if (refs.total_ss > 0.0) {
                values.ssbd = weighted_mean(dists, refs.strengths);
            }
            value_it = value_cache.emplace(key, values).first;
        }

        const RefValues& v = value_it->second;
        ProximityRow row;
        row.publication_id = c.publication_id;
        row.university_id = c.university_id;
        row.sds_code = c.sds_code;
        row.site_id = c.site_id;
        row.real_km = c.distance_km;
        row.expected_km = v.expected;
        row.mbd_km = v.mbd;
        row.ssbd_km = v.ssbd;
        row.expected_gt_real = v.expected > c.distance_km;
        row.mbd_gt_real = v.mbd > c.distance_km;
        if (v.ssbd) row.ssbd_gt_real = *v.ssbd > c.distance_km;

        real_sum += row.real_km;
        expected_sum += row.expected_km;
        mbd_sum += row.mbd_km;
        if (row.ssbd_km) {
            ssbd_sum += *row.ssbd_km;
            ++ssbd_rows;
        } else {
            ++report.ssbd_excluded_count;
        }
        if (row.expected_gt_real) ++report.expected_gt_real_count;
        if (row.mbd_gt_real) ++report.mbd_gt_real_count;
        if (row.ssbd_gt_real && *row.ssbd_gt_real) ++report.ssbd_gt_real_count;
        report.rows.push_back(std::move(row));
    }

    report.n_rows = static_cast<long>(report.rows.size());
    const double n = static_cast<double>(report.n_rows);
    report.real_avg_km = real_sum / n;
    report.expected_avg_km = expected_sum / n;
    report.mbd_avg_km = mbd_sum / n;
    if (ssbd_rows > 0) {
        report.ssbd_avg_km = ssbd_sum / static_cast<double>(ssbd_rows);
    }
    report.expected_ratio = report.expected_avg_km / report.real_avg_km;
    report.mbd_ratio = report.mbd_avg_km / report.real_avg_km;
    if (report.ssbd_avg_km) {
        report.ssbd_ratio = *report.ssbd_avg_km / report.real_avg_km;
    }
    return report;
}

} // namespace collabmkt::proximity
