#include "collabmkt/efficiency.hpp"

#include "collabmkt/indicators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace collabmkt::efficiency {

namespace {

/// Shared lookups for counterfactual evaluation: strengths accumulated in
/// one publication pass, per-SDS university tables and site distances
/// built lazily.
struct Ctx {
    const Dataset& ds;
    std::map<std::pair<std::size_t, std::size_t>, double> sector_ss; // (univ, sds)
    std::vector<double> scientist_ss;

    struct UniTable {
        std::vector<std::size_t> universities; // id order, aligned with qp
        std::vector<double> qp;
        std::vector<std::size_t> position; // 1-based QP rank per slot
        std::unordered_map<std::size_t, std::size_t> slot; // university -> slot
    };
    std::unordered_map<std::size_t, UniTable> uni_tables; // by sds index
    std::unordered_map<std::uint64_t, double> site_dist;  // (site, university)

    explicit Ctx(const Dataset& dataset) : ds(dataset) {
        const auto percentiles = indicators::journal_percentiles(ds);
        scientist_ss.assign(ds.scientists().size(), 0.0);
        for (std::size_t p = 0; p < ds.publications().size(); ++p) {
            const auto journal = ds.journal_index(ds.publications()[p].journal_id);
            if (!journal) continue;
            const double pct = percentiles[*journal];
            for (const auto& sector : ds.publication_sectors(p)) sector_ss[sector] += pct;
            for (const std::size_t a : ds.publication_authors(p)) scientist_ss[a] += pct;
        }
    }

    const UniTable& uni_table(std::size_t sds) {
        const auto it = uni_tables.find(sds);
        if (it != uni_tables.end()) return it->second;

        UniTable table;
        const auto staff = ds.sector_staff(ds.sds()[sds].code);
        table.universities.reserve(staff.size());
        table.qp.reserve(staff.size());
        for (const Dataset::SectorStaff& entry : staff) {
            const auto ss_it = sector_ss.find({entry.university, sds});
            const double ss = ss_it == sector_ss.end() ? 0.0 : ss_it->second;
            table.slot.emplace(entry.university, table.universities.size());
            table.universities.push_back(entry.university);
            table.qp.push_back(ss / static_cast<double>(entry.staff));
        }
        // rank order: descending QP, ties by ascending university id
        std::vector<std::size_t> order(table.universities.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (table.qp[a] != table.qp[b]) return table.qp[a] > table.qp[b];
            return a < b; // slots are already in university-id order
        });
        table.position.assign(order.size(), 0);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            table.position[order[pos]] = pos + 1;
        }
        return uni_tables.emplace(sds, std::move(table)).first->second;
    }

    double distance(std::size_t site, std::size_t university) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(site) << 32) | static_cast<std::uint64_t>(university);
        const auto it = site_dist.find(key);
        if (it != site_dist.end()) return it->second;
        const double d = great_circle_km(ds.sites()[site].location,
                                         ds.universities()[university].location);
        site_dist.emplace(key, d);
        return d;
    }
};

std::size_t pub_or_throw(const Dataset& ds, std::string_view publication_id) {
    const auto idx = ds.publication_index(publication_id);
    if (!idx) throw DataError("unknown publication '" + std::string(publication_id) + "'");
    return *idx;
}

CounterfactualResult university_cf(Ctx& ctx, std::size_t pub) {
    const Dataset& ds = ctx.ds;
    CounterfactualResult result;
    result.publication_id = ds.publications()[pub].id;

    const auto sites = ds.publication_sites(pub);
    if (sites.size() != 1) {
        result.reason = IneligibleReason::multi_company;
        return result;
    }
    const std::size_t site = sites.front();

    // Benchmark: the (university, SDS) author pair whose university sits
    // highest in its sector's QP ranking; ties fall to the first pair in
    // (sds, university) id order.
    const auto sectors = ds.publication_sectors(pub);
    if (sectors.empty()) {
        throw DataError("publication '" + result.publication_id + "' has no resolvable authors");
    }
    bool have_best = false;
    std::size_t best_pos = 0;
    std::size_t best_univ = 0;
    std::size_t best_sds = 0;
    for (const auto& [univ, sds] : sectors) {
        const Ctx::UniTable& table = ctx.uni_table(sds);
        const std::size_t pos = table.position[table.slot.at(univ)];
        const bool wins =
            !have_best ||
            pos < best_pos ||
            (pos == best_pos &&
             std::pair(ds.sds()[sds].code, ds.universities()[univ].id) <
                 std::pair(ds.sds()[best_sds].code, ds.universities()[best_univ].id));
        if (wins) {
            have_best = true;
            best_pos = pos;
            best_univ = univ;
            best_sds = sds;
        }
    }

    const Ctx::UniTable& table = ctx.uni_table(best_sds);
    const double benchmark_qp = table.qp[table.slot.at(best_univ)];
    const double benchmark_dist = ctx.distance(site, best_univ);
    long better = 0;
    long better_and_closer = 0;
    for (std::size_t slot = 0; slot < table.universities.size(); ++slot) {
        if (table.qp[slot] <= benchmark_qp) continue;
        ++better;
        if (ctx.distance(site, table.universities[slot]) < benchmark_dist) {
            ++better_and_closer;
        }
    }

    result.eligible = true;
    result.benchmark_id = ds.universities()[best_univ].id;
    result.benchmark_sds = ds.sds()[best_sds].code;
    result.benchmark_score = benchmark_qp;
    result.better_count = better;
    result.better_and_closer_count = better_and_closer;
    return result;
}

CounterfactualResult scientist_cf(Ctx& ctx, std::size_t pub) {
    const Dataset& ds = ctx.ds;
    CounterfactualResult result;
    result.publication_id = ds.publications()[pub].id;

    const auto sites = ds.publication_sites(pub);
    if (sites.size() != 1) {
        result.reason = IneligibleReason::multi_company;
        return result;
    }
    const std::size_t site = sites.front();

    const auto authors = ds.publication_authors(pub);
    if (authors.empty()) {
        throw DataError("publication '" + result.publication_id + "' has no resolvable authors");
    }
    for (const std::size_t a : authors) {
        if (!ds.scientists()[a].stable_affiliation) {
            result.reason = IneligibleReason::unstable_author;
            return result;
        }
    }

    // Benchmark: the co-author with the highest Scientific Strength; ties
    // fall to the smallest scientist id (= smallest index).
    std::size_t best = authors.front();
    for (const std::size_t a : authors) {
        if (ctx.scientist_ss[a] > ctx.scientist_ss[best]) best = a;
    }
    const Scientist& benchmark = ds.scientists()[best];
    const double benchmark_ss = ctx.scientist_ss[best];
    const auto benchmark_univ = ds.university_index(benchmark.university_id);
    if (!benchmark_univ) {
        throw DataError("scientist '" + benchmark.id + "' has no resolvable university");
    }
    const double benchmark_dist = ctx.distance(site, *benchmark_univ);

    // Compare against the stable scientists of the benchmark's SDS, each
    // at their own university's distance from the site.
    long better = 0;
    long better_and_closer = 0;
    for (const std::size_t c : ds.sector_scientists(benchmark.sds_code)) {
        const Scientist& candidate = ds.scientists()[c];
        if (!candidate.stable_affiliation) continue;
        if (ctx.scientist_ss[c] <= benchmark_ss) continue;
        ++better;
        const auto univ = ds.university_index(candidate.university_id);
        if (univ && ctx.distance(site, *univ) < benchmark_dist) {
            ++better_and_closer;
        }
    }

    result.eligible = true;
    result.benchmark_id = benchmark.id;
    result.benchmark_sds = benchmark.sds_code;
    result.benchmark_score = benchmark_ss;
    result.better_count = better;
    result.better_and_closer_count = better_and_closer;
    return result;
}

} // namespace

CounterfactualResult university_counterfactual(const Dataset& ds,
                                               std::string_view publication_id) {
    Ctx ctx(ds);
    return university_cf(ctx, pub_or_throw(ds, publication_id));
}

CounterfactualResult scientist_counterfactual(const Dataset& ds,
                                              std::string_view publication_id) {
    Ctx ctx(ds);
    return scientist_cf(ctx, pub_or_throw(ds, publication_id));
}

EfficiencyReport efficiency_report(const Dataset& ds, Level level) {
    Ctx ctx(ds);
    EfficiencyReport report;
    report.level = level;
    report.total_publications = static_cast<long>(ds.publications().size());

    long better_sum = 0;
    long bc_sum = 0;
    for (std::size_t p = 0; p < ds.publications().size(); ++p) {
        CounterfactualResult result =
            level == Level::university ? university_cf(ctx, p) : scientist_cf(ctx, p);
        if (result.eligible) {
            ++report.eligible_count;
            if (*result.better_count > 0) ++report.better_exists_count;
            if (*result.better_and_closer_count > 0) ++report.better_and_closer_count;
            better_sum += *result.better_count;
            bc_sum += *result.better_and_closer_count;
        }
        report.results.push_back(std::move(result));
    }

    if (report.eligible_count > 0) {
        const double eligible = static_cast<double>(report.eligible_count);
        report.better_exists_share = static_cast<double>(report.better_exists_count) / eligible;
        report.bc_share_of_eligible =
            static_cast<double>(report.better_and_closer_count) / eligible;
        report.mean_better_count = static_cast<double>(better_sum) / eligible;
        report.mean_better_and_closer = static_cast<double>(bc_sum) / eligible;
        if (report.better_exists_count > 0) {
            report.bc_share_of_better_exists =
                static_cast<double>(report.better_and_closer_count) /
                static_cast<double>(report.better_exists_count);
        }
    }
    return report;
}

std::vector<Recommendation> recommend(const Dataset& ds, const GeoPoint& from,
                                      std::string_view sds_code, int top_n) {
    if (top_n <= 0) throw std::invalid_argument("top_n must be positive");
    const auto profiles = indicators::sector_profiles(ds, sds_code); // throws on empty
    std::vector<Recommendation> out;
    out.reserve(profiles.size());
    for (const indicators::SectorProfile& p : profiles) {
        const std::size_t univ = *ds.university_index(p.university_id);
        out.push_back(Recommendation{
            p.university_id, p.qp,
            great_circle_km(from, ds.universities()[univ].location), 0});
    }
    std::sort(out.begin(), out.end(), [](const Recommendation& a, const Recommendation& b) {
        if (a.qp != b.qp) return a.qp > b.qp;
        return a.university_id < b.university_id;
    });
    if (out.size() > static_cast<std::size_t>(top_n)) {
        out.resize(static_cast<std::size_t>(top_n));
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].rank = static_cast<int>(i + 1);
    }
    return out;
}

} // namespace collabmkt::efficiency
