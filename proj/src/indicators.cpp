#include "collabmkt/indicators.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace collabmkt::indicators {

namespace {

/// Impact factors per category, sorted, for binary-search rank counting.
std::unordered_map<std::string, std::vector<double>> category_ifs(const Dataset& ds) {
    std::unordered_map<std::string, std::vector<double>> by_category;
    for (const Journal& j : ds.journals()) {
        by_category[j.category].push_back(j.impact_factor);
    }
    for (auto& [category, ifs] : by_category) {
        std::sort(ifs.begin(), ifs.end());
    }
    return by_category;
}

double mid_rank(const std::vector<double>& sorted_ifs, double value) {
    const auto lo = std::lower_bound(sorted_ifs.begin(), sorted_ifs.end(), value);
    const auto hi = std::upper_bound(lo, sorted_ifs.end(), value);
    const double below = static_cast<double>(lo - sorted_ifs.begin());
    const double ties = static_cast<double>(hi - lo); // includes the journal itself
    return (below + 0.5 * ties) / static_cast<double>(sorted_ifs.size());
}

} // namespace

double if_percentile(const Dataset& ds, std::string_view journal_id) {
    const auto idx = ds.journal_index(journal_id);
    if (!idx) throw DataError("unknown journal '" + std::string(journal_id) + "'");
    const Journal& j = ds.journals()[*idx];
    const auto by_category = category_ifs(ds);
    return mid_rank(by_category.at(j.category), j.impact_factor);
}

std::vector<double> journal_percentiles(const Dataset& ds) {
    const auto by_category = category_ifs(ds);
    std::vector<double> out;
    out.reserve(ds.journals().size());
    for (const Journal& j : ds.journals()) {
        out.push_back(mid_rank(by_category.at(j.category), j.impact_factor));
    }
    return out;
}

namespace {

/// Accumulates strength per (university, SDS) pair across publications in
/// id order, so floating-point sums are reproducible.
std::map<std::pair<std::size_t, std::size_t>, double> sector_strengths(const Dataset& ds) {
    const auto percentiles = journal_percentiles(ds);
    std::map<std::pair<std::size_t, std::size_t>, double> ss;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const auto journal = ds.journal_index(ds.publications()[p].journal_id);
        if (!journal) continue;
        const double pct = percentiles[*journal];
        for (const auto& sector : ds.publication_sectors(p)) {
            ss[sector] += pct;
        }
    }
    return ss;
}

} // namespace

double university_strength(const Dataset& ds, std::string_view university_id,
                           std::string_view sds_code) {
    const auto univ = ds.university_index(university_id);
    const auto sds = ds.sds_index(sds_code);
    if (!univ || !sds) return 0.0;
    const auto percentiles = journal_percentiles(ds);
    const std::pair<std::size_t, std::size_t> key{*univ, *sds};
    double ss = 0.0;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const auto sectors = ds.publication_sectors(p);
        if (!std::binary_search(sectors.begin(), sectors.end(), key)) continue;
        const auto journal = ds.journal_index(ds.publications()[p].journal_id);
        if (journal) ss += percentiles[*journal];
    }
    return ss;
}

double scientist_strength(const Dataset& ds, std::string_view scientist_id) {
    const auto sci = ds.scientist_index(scientist_id);
    if (!sci) throw DataError("unknown scientist '" + std::string(scientist_id) + "'");
    const auto percentiles = journal_percentiles(ds);
    double ss = 0.0;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const auto authors = ds.publication_authors(p);
        if (!std::binary_search(authors.begin(), authors.end(), *sci)) continue;
        const auto journal = ds.journal_index(ds.publications()[p].journal_id);
        if (journal) ss += percentiles[*journal];
    }
    return ss;
}

double qualitative_productivity(const Dataset& ds, std::string_view university_id,
                                std::string_view sds_code) {
    const long mass = ds.staff_count(university_id, sds_code);
    if (mass == 0) {
        throw UndefinedQpError("(" + std::string(university_id) + ", " +
                               std::string(sds_code) + ") has no research staff");
    }
    return university_strength(ds, university_id, sds_code) / static_cast<double>(mass);
}

std::vector<SectorProfile> sector_profiles(const Dataset& ds, std::string_view sds_code) {
    const auto staff = ds.sector_staff(sds_code);
    if (staff.empty()) {
        throw EmptySectorError("SDS '" + std::string(sds_code) + "' has no staffed university");
    }
    const auto sds = *ds.sds_index(sds_code);
    const auto ss = sector_strengths(ds);
    std::vector<SectorProfile> profiles;
    profiles.reserve(staff.size());
    for (const Dataset::SectorStaff& entry : staff) {
        SectorProfile profile;
        profile.university_id = ds.universities()[entry.university].id;
        profile.sds_code = std::string(sds_code);
        profile.mass = entry.staff;
        const auto it = ss.find({entry.university, sds});
        profile.ss = it == ss.end() ? 0.0 : it->second;
        profile.qp = profile.ss / static_cast<double>(profile.mass);
        profiles.push_back(std::move(profile));
    }
    return profiles;
}

std::vector<ScientistStrength> scientist_strengths(const Dataset& ds,
                                                   std::string_view sds_code,
                                                   bool stable_only) {
    const auto percentiles = journal_percentiles(ds);
    std::unordered_map<std::size_t, double> ss;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        const auto journal = ds.journal_index(ds.publications()[p].journal_id);
        if (!journal) continue;
        const double pct = percentiles[*journal];
        for (const std::size_t a : ds.publication_authors(p)) {
            ss[a] += pct;
        }
    }
    std::vector<ScientistStrength> out;
    for (const std::size_t idx : ds.sector_scientists(sds_code)) {
        const Scientist& s = ds.scientists()[idx];
        if (stable_only && !s.stable_affiliation) continue;
        const auto it = ss.find(idx);
        out.push_back(ScientistStrength{s.id, s.university_id, s.stable_affiliation,
                                        it == ss.end() ? 0.0 : it->second});
    }
    return out;
}

namespace {

Ranking rank_entries(std::string_view sds_code, std::vector<RankEntry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const RankEntry& a, const RankEntry& b) {
                         if (a.score != b.score) return a.score > b.score;
                         return a.entity_id < b.entity_id;
                     });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        entries[i].rank = static_cast<int>(i + 1);
    }
    return Ranking{std::string(sds_code), std::move(entries)};
}

} // namespace

Ranking rank_universities(const Dataset& ds, std::string_view sds_code) {
    const auto profiles = sector_profiles(ds, sds_code); // throws on empty sector
    std::vector<RankEntry> entries;
    entries.reserve(profiles.size());
    for (const SectorProfile& p : profiles) {
        entries.push_back(RankEntry{p.university_id, p.qp, 0});
    }
    return rank_entries(sds_code, std::move(entries));
}

Ranking rank_scientists(const Dataset& ds, std::string_view sds_code, bool stable_only) {
    const auto strengths = scientist_strengths(ds, sds_code, stable_only);
    if (strengths.empty()) {
        throw EmptySectorError("SDS '" + std::string(sds_code) + "' has no " +
                               (stable_only ? "stable scientists" : "scientists"));
    }
    std::vector<RankEntry> entries;
    entries.reserve(strengths.size());
    for (const ScientistStrength& s : strengths) {
        entries.push_back(RankEntry{s.scientist_id, s.ss, 0});
    }
    return rank_entries(sds_code, std::move(entries));
}

} // namespace collabmkt::indicators
