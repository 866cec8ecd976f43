#include "collabmkt/dataset.hpp"

#include "collabmkt/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace collabmkt {

// ===========================================================================
// Dataset::build
// ===========================================================================

namespace {

template <typename T>
void sort_by_id(std::vector<T>& records) {
    std::sort(records.begin(), records.end(),
              [](const T& a, const T& b) { return a.id < b.id; });
}

template <typename T>
std::unordered_map<std::string, std::size_t> index_by_id(const std::vector<T>& records) {
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        index.emplace(records[i].id, i); // first occurrence wins on duplicates
    }
    return index;
}

std::optional<std::size_t> find_in(const std::unordered_map<std::string, std::size_t>& index,
                                   std::string_view key) {
    const auto it = index.find(std::string(key));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

Dataset Dataset::build(std::vector<University> universities,
                       std::vector<CompanySite> sites,
                       std::vector<Scientist> scientists,
                       std::vector<Journal> journals,
                       std::vector<Publication> publications) {
    Dataset ds;
    ds.universities_ = std::move(universities);
    ds.sites_ = std::move(sites);
    ds.scientists_ = std::move(scientists);
    ds.journals_ = std::move(journals);
    ds.publications_ = std::move(publications);

    sort_by_id(ds.universities_);
    sort_by_id(ds.sites_);
    sort_by_id(ds.scientists_);
    sort_by_id(ds.journals_);
    for (Publication& p : ds.publications_) {
        // id lists are sets: canonical order, duplicates kept for validate()
        std::sort(p.academic_author_ids.begin(), p.academic_author_ids.end());
        std::sort(p.company_site_ids.begin(), p.company_site_ids.end());
    }
    sort_by_id(ds.publications_);

    ds.university_by_id_ = index_by_id(ds.universities_);
    ds.site_by_id_ = index_by_id(ds.sites_);
    ds.scientist_by_id_ = index_by_id(ds.scientists_);
    ds.journal_by_id_ = index_by_id(ds.journals_);
    ds.publication_by_id_ = index_by_id(ds.publications_);

    // SDS records derive from the scientists file: first scientist (by id)
    // naming a code fixes its macro area.
    for (const Scientist& s : ds.scientists_) {
        if (!ds.sds_by_code_.contains(s.sds_code)) {
            ds.sds_by_code_.emplace(s.sds_code, 0); // placeholder, renumbered below
            ds.sds_.push_back(Sds{s.sds_code, s.macro_area});
        }
    }
    std::sort(ds.sds_.begin(), ds.sds_.end(),
              [](const Sds& a, const Sds& b) { return a.code < b.code; });
    for (std::size_t i = 0; i < ds.sds_.size(); ++i) {
        ds.sds_by_code_[ds.sds_[i].code] = i;
    }

    // Staff and membership per SDS. A scientist with an unresolvable
    // university has no seat and joins neither index.
    ds.staff_by_sds_.resize(ds.sds_.size());
    ds.scientists_by_sds_.resize(ds.sds_.size());
    std::vector<std::map<std::size_t, long>> staff_counts(ds.sds_.size());
    for (std::size_t i = 0; i < ds.scientists_.size(); ++i) {
        const Scientist& s = ds.scientists_[i];
        const auto univ = find_in(ds.university_by_id_, s.university_id);
        if (!univ) continue;
        const std::size_t sds = ds.sds_by_code_.at(s.sds_code);
        staff_counts[sds][*univ] += 1;
        ds.scientists_by_sds_[sds].push_back(i);
    }
    for (std::size_t sds = 0; sds < ds.sds_.size(); ++sds) {
        for (const auto& [univ, count] : staff_counts[sds]) {
            ds.staff_by_sds_[sds].push_back(SectorStaff{univ, count});
        }
    }

    // Per-publication resolved reference sets, distinct, in id order.
    const std::size_t n_pubs = ds.publications_.size();
    ds.pub_universities_.resize(n_pubs);
    ds.pub_sectors_.resize(n_pubs);
    ds.pub_sites_.resize(n_pubs);
    ds.pub_authors_.resize(n_pubs);
    for (std::size_t p = 0; p < n_pubs; ++p) {
        const Publication& pub = ds.publications_[p];
        for (const std::string& aid : pub.academic_author_ids) {
            const auto sci = find_in(ds.scientist_by_id_, aid);
            if (!sci) continue;
            ds.pub_authors_[p].push_back(*sci);
            const Scientist& s = ds.scientists_[*sci];
            const auto univ = find_in(ds.university_by_id_, s.university_id);
            if (!univ) continue;
            const std::size_t sds = ds.sds_by_code_.at(s.sds_code);
            ds.pub_universities_[p].push_back(*univ);
            ds.pub_sectors_[p].emplace_back(*univ, sds);
        }
        for (const std::string& sid : pub.company_site_ids) {
            const auto site = find_in(ds.site_by_id_, sid);
            if (site) ds.pub_sites_[p].push_back(*site);
        }
        sort_unique(ds.pub_authors_[p]);
        sort_unique(ds.pub_universities_[p]);
        sort_unique(ds.pub_sectors_[p]);
        sort_unique(ds.pub_sites_[p]);
    }
    return ds;
}

std::optional<std::size_t> Dataset::university_index(std::string_view id) const {
    return find_in(university_by_id_, id);
}
std::optional<std::size_t> Dataset::site_index(std::string_view id) const {
    return find_in(site_by_id_, id);
}
std::optional<std::size_t> Dataset::scientist_index(std::string_view id) const {
    return find_in(scientist_by_id_, id);
}
std::optional<std::size_t> Dataset::journal_index(std::string_view id) const {
    return find_in(journal_by_id_, id);
}
std::optional<std::size_t> Dataset::sds_index(std::string_view code) const {
    return find_in(sds_by_code_, code);
}
std::optional<std::size_t> Dataset::publication_index(std::string_view id) const {
    return find_in(publication_by_id_, id);
}

std::span<const Dataset::SectorStaff> Dataset::sector_staff(std::string_view sds_code) const {
    const auto sds = sds_index(sds_code);
    if (!sds) return {};
    return staff_by_sds_[*sds];
}

std::span<const std::size_t> Dataset::sector_scientists(std::string_view sds_code) const {
    const auto sds = sds_index(sds_code);
    if (!sds) return {};
    return scientists_by_sds_[*sds];
}

long Dataset::staff_count(std::string_view university_id, std::string_view sds_code) const {
    const auto univ = university_index(university_id);
    if (!univ) return 0;
    for (const SectorStaff& s : sector_staff(sds_code)) {
        if (s.university == *univ) return s.staff;
    }
    return 0;
}

std::span<const std::size_t> Dataset::publication_universities(std::size_t pub) const {
    return pub_universities_.at(pub);
}
std::span<const std::pair<std::size_t, std::size_t>>
Dataset::publication_sectors(std::size_t pub) const {
    return pub_sectors_.at(pub);
}
std::span<const std::size_t> Dataset::publication_sites(std::size_t pub) const {
    return pub_sites_.at(pub);
}
std::span<const std::size_t> Dataset::publication_authors(std::size_t pub) const {
    return pub_authors_.at(pub);
}

bool Dataset::operator==(const Dataset& other) const {
    return universities_ == other.universities_ && sites_ == other.sites_ &&
           scientists_ == other.scientists_ && journals_ == other.journals_ &&
           publications_ == other.publications_;
}

// ===========================================================================
// Loading
// ===========================================================================

namespace {

[[noreturn]] void load_fail(const std::filesystem::path& file, std::size_t row,
                            std::string_view field, std::string_view what) {
    throw DataError(file.string() + ": row " + std::to_string(row) + ", field '" +
                    std::string(field) + "': " + std::string(what));
}

double parse_double_field(const std::filesystem::path& file, std::size_t row,
                          std::string_view field, const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        load_fail(file, row, field, "not a number: '" + text + "'");
    }
    return value;
}

int parse_int_field(const std::filesystem::path& file, std::size_t row,
                    std::string_view field, const std::string& text) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        load_fail(file, row, field, "not an integer: '" + text + "'");
    }
    return value;
}

bool parse_bool_field(const std::filesystem::path& file, std::size_t row,
                      std::string_view field, const std::string& text) {
    std::string low;
    for (char c : text) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "true" || low == "1") return true;
    if (low == "false" || low == "0") return false;
    load_fail(file, row, field, "not a boolean: '" + text + "'");
}

GeoPoint parse_point(const std::filesystem::path& file, std::size_t row,
                     const std::string& lat, const std::string& lon) {
    GeoPoint p{parse_double_field(file, row, "lat", lat),
               parse_double_field(file, row, "lon", lon)};
    if (!(std::isfinite(p.lat) && p.lat >= -90.0 && p.lat <= 90.0)) {
        load_fail(file, row, "lat", "latitude out of range: '" + lat + "'");
    }
    if (!(std::isfinite(p.lon) && p.lon >= -180.0 && p.lon <= 180.0)) {
        load_fail(file, row, "lon", "longitude out of range: '" + lon + "'");
    }
    return p;
}

/// Reads one CSV file, checks the exact header, and hands each data row to
/// `consume(row_number, cells)`. Row numbers are 1-based with the header
/// as row 1 (blank lines do not count).
template <typename Fn>
void load_rows(const std::filesystem::path& file, const std::vector<std::string>& header,
               Fn&& consume) {
    const auto rows = csv::read_file(file);
    if (rows.empty()) {
        throw DataError(file.string() + ": missing header row");
    }
    if (rows.front() != header) {
        std::string want;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) want += ',';
            want += header[i];
        }
        throw DataError(file.string() + ": unexpected header (want '" + want + "')");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != header.size()) {
            load_fail(file, i + 1, "-",
                      "expected " + std::to_string(header.size()) + " fields, got " +
                          std::to_string(rows[i].size()));
        }
        consume(i + 1, rows[i]);
    }
}

std::string require_id(const std::filesystem::path& file, std::size_t row,
                       std::string_view field, const std::string& text,
                       std::set<std::string>& seen) {
    if (text.empty()) load_fail(file, row, field, "empty id");
    if (!seen.insert(text).second) load_fail(file, row, field, "duplicate id '" + text + "'");
    return text;
}

std::vector<std::string> split_id_list(const std::filesystem::path& file, std::size_t row,
                                       std::string_view field, const std::string& text) {
    std::vector<std::string> ids;
    std::string current;
    std::set<std::string> seen;
    auto push = [&] {
        if (current.empty()) load_fail(file, row, field, "empty id in list");
        if (!seen.insert(current).second) {
            load_fail(file, row, field, "id '" + current + "' listed twice");
        }
        ids.push_back(std::move(current));
        current.clear();
    };
    if (text.empty()) load_fail(file, row, field, "list must not be empty");
    for (char c : text) {
        if (c == ';') {
            push();
        } else {
            current += c;
        }
    }
    push();
    return ids;
}

} // namespace

PathSet PathSet::in_dir(const std::filesystem::path& dir) {
    return PathSet{dir / "universities.csv", dir / "sites.csv", dir / "scientists.csv",
                   dir / "journals.csv", dir / "publications.csv"};
}

Dataset load_dataset(const PathSet& paths) {
    std::vector<University> universities;
    std::vector<CompanySite> sites;
    std::vector<Scientist> scientists;
    std::vector<Journal> journals;
    std::vector<Publication> publications;
    std::set<std::string> seen;

    seen.clear();
    load_rows(paths.universities, {"id", "name", "lat", "lon"},
              [&](std::size_t row, const csv::Row& r) {
                  universities.push_back(University{
                      require_id(paths.universities, row, "id", r[0], seen), r[1],
                      parse_point(paths.universities, row, r[2], r[3])});
              });

    seen.clear();
    load_rows(paths.sites, {"id", "company_id", "lat", "lon"},
              [&](std::size_t row, const csv::Row& r) {
                  if (r[1].empty()) load_fail(paths.sites, row, "company_id", "empty id");
                  sites.push_back(CompanySite{require_id(paths.sites, row, "id", r[0], seen),
                                              r[1], parse_point(paths.sites, row, r[2], r[3])});
              });

    seen.clear();
    std::vector<std::size_t> scientist_rows;
    load_rows(paths.scientists, {"id", "university_id", "sds_code", "macro_area", "stable"},
              [&](std::size_t row, const csv::Row& r) {
                  if (r[1].empty()) load_fail(paths.scientists, row, "university_id", "empty id");
                  if (r[2].empty()) load_fail(paths.scientists, row, "sds_code", "empty code");
                  scientists.push_back(
                      Scientist{require_id(paths.scientists, row, "id", r[0], seen), r[1], r[2],
                                r[3], parse_bool_field(paths.scientists, row, "stable", r[4])});
                  scientist_rows.push_back(row);
              });

    seen.clear();
    load_rows(paths.journals, {"id", "category", "impact_factor"},
              [&](std::size_t row, const csv::Row& r) {
                  if (r[1].empty()) load_fail(paths.journals, row, "category", "empty category");
                  const double impact = parse_double_field(paths.journals, row, "impact_factor", r[2]);
                  if (!std::isfinite(impact) || impact < 0.0) {
                      load_fail(paths.journals, row, "impact_factor",
                                "must be a finite non-negative number");
                  }
                  journals.push_back(
                      Journal{require_id(paths.journals, row, "id", r[0], seen), r[1], impact});
              });

    seen.clear();
    std::vector<std::size_t> publication_rows;
    load_rows(paths.publications,
              {"id", "year", "journal_id", "academic_author_ids", "company_site_ids"},
              [&](std::size_t row, const csv::Row& r) {
                  if (r[2].empty()) load_fail(paths.publications, row, "journal_id", "empty id");
                  publications.push_back(Publication{
                      require_id(paths.publications, row, "id", r[0], seen),
                      parse_int_field(paths.publications, row, "year", r[1]), r[2],
                      split_id_list(paths.publications, row, "academic_author_ids", r[3]),
                      split_id_list(paths.publications, row, "company_site_ids", r[4])});
                  publication_rows.push_back(row);
              });

    // Cross-file reference and consistency checks, with row context.
    std::set<std::string> university_ids, site_ids, scientist_ids, journal_ids;
    for (const auto& u : universities) university_ids.insert(u.id);
    for (const auto& s : sites) site_ids.insert(s.id);
    for (const auto& s : scientists) scientist_ids.insert(s.id);
    for (const auto& j : journals) journal_ids.insert(j.id);

    std::map<std::string, std::pair<std::string, std::size_t>> macro_by_sds;
    for (std::size_t i = 0; i < scientists.size(); ++i) {
        const Scientist& s = scientists[i];
        const std::size_t row = scientist_rows[i];
        if (!university_ids.contains(s.university_id)) {
            load_fail(paths.scientists, row, "university_id",
                      "unknown university '" + s.university_id + "'");
        }
        const auto [it, fresh] = macro_by_sds.emplace(s.sds_code, std::pair{s.macro_area, row});
        if (!fresh && it->second.first != s.macro_area) {
            load_fail(paths.scientists, row, "macro_area",
                      "SDS '" + s.sds_code + "' already has macro area '" + it->second.first +
                          "' (row " + std::to_string(it->second.second) + ")");
        }
    }
    for (std::size_t i = 0; i < publications.size(); ++i) {
        const Publication& p = publications[i];
        const std::size_t row = publication_rows[i];
        if (!journal_ids.contains(p.journal_id)) {
            load_fail(paths.publications, row, "journal_id",
                      "unknown journal '" + p.journal_id + "'");
        }
        for (const std::string& a : p.academic_author_ids) {
            if (!scientist_ids.contains(a)) {
                load_fail(paths.publications, row, "academic_author_ids",
                          "unknown scientist '" + a + "'");
            }
        }
        for (const std::string& s : p.company_site_ids) {
            if (!site_ids.contains(s)) {
                load_fail(paths.publications, row, "company_site_ids",
                          "unknown site '" + s + "'");
            }
        }
    }

    return Dataset::build(std::move(universities), std::move(sites), std::move(scientists),
                          std::move(journals), std::move(publications));
}

Dataset load_dataset(const std::filesystem::path& dir) {
    return load_dataset(PathSet::in_dir(dir));
}

// ===========================================================================
// Serialization
// ===========================================================================

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ';';
        out += ids[i];
    }
    return out;
}

} // namespace

void save_dataset(const Dataset& ds, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const PathSet paths = PathSet::in_dir(dir);

    std::vector<csv::Row> rows;
    rows.push_back({"id", "name", "lat", "lon"});
    for (const University& u : ds.universities()) {
        rows.push_back({u.id, u.name, csv::format_double(u.location.lat),
                        csv::format_double(u.location.lon)});
    }
    csv::write_file_atomic(paths.universities, csv::to_string(rows));

    rows.clear();
    rows.push_back({"id", "company_id", "lat", "lon"});
    for (const CompanySite& s : ds.sites()) {
        rows.push_back({s.id, s.company_id, csv::format_double(s.location.lat),
                        csv::format_double(s.location.lon)});
    }
    csv::write_file_atomic(paths.sites, csv::to_string(rows));

    rows.clear();
    rows.push_back({"id", "university_id", "sds_code", "macro_area", "stable"});
    for (const Scientist& s : ds.scientists()) {
        rows.push_back({s.id, s.university_id, s.sds_code, s.macro_area,
                        s.stable_affiliation ? "true" : "false"});
    }
    csv::write_file_atomic(paths.scientists, csv::to_string(rows));

    rows.clear();
    rows.push_back({"id", "category", "impact_factor"});
    for (const Journal& j : ds.journals()) {
        rows.push_back({j.id, j.category, csv::format_double(j.impact_factor)});
    }
    csv::write_file_atomic(paths.journals, csv::to_string(rows));

    rows.clear();
    rows.push_back({"id", "year", "journal_id", "academic_author_ids", "company_site_ids"});
    for (const Publication& p : ds.publications()) {
        rows.push_back({p.id, std::to_string(p.year), p.journal_id,
                        join_ids(p.academic_author_ids), join_ids(p.company_site_ids)});
    }
    csv::write_file_atomic(paths.publications, csv::to_string(rows));
}

// ===========================================================================
// Validation
// ===========================================================================

std::string_view to_string(FindingKind kind) {
    switch (kind) {
    case FindingKind::geometry: return "geometry";
    case FindingKind::reference: return "reference";
    case FindingKind::duplicate: return "duplicate";
    case FindingKind::completeness: return "completeness";
    case FindingKind::consistency: return "consistency";
    }
    return "unknown";
}

namespace {

void check_point(std::vector<Finding>& out, const std::string& entity, const GeoPoint& p) {
    if (!(std::isfinite(p.lat) && p.lat >= -90.0 && p.lat <= 90.0)) {
        out.push_back({FindingKind::geometry, entity, "lat",
                       "latitude out of range: " + csv::format_double(p.lat)});
    }
    if (!(std::isfinite(p.lon) && p.lon >= -180.0 && p.lon <= 180.0)) {
        out.push_back({FindingKind::geometry, entity, "lon",
                       "longitude out of range: " + csv::format_double(p.lon)});
    }
}

template <typename T>
void check_duplicate_ids(std::vector<Finding>& out, const std::vector<T>& records,
                         std::string_view kind) {
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].id == records[i - 1].id) {
            out.push_back({FindingKind::duplicate, std::string(kind) + " " + records[i].id,
                           "id", "duplicate id"});
        }
    }
}

} // namespace

ValidationReport validate(const Dataset& ds) {
    ValidationReport report;
    auto& out = report.findings;

    check_duplicate_ids(out, ds.universities(), "university");
    check_duplicate_ids(out, ds.sites(), "site");
    check_duplicate_ids(out, ds.scientists(), "scientist");
    check_duplicate_ids(out, ds.journals(), "journal");
    check_duplicate_ids(out, ds.publications(), "publication");

    for (const University& u : ds.universities()) {
        check_point(out, "university " + u.id, u.location);
    }
    for (const CompanySite& s : ds.sites()) {
        const std::string entity = "site " + s.id;
        check_point(out, entity, s.location);
        if (s.company_id.empty()) {
            out.push_back({FindingKind::completeness, entity, "company_id", "empty company id"});
        }
    }

    std::map<std::string, std::string> macro_by_sds;
    for (const Scientist& s : ds.scientists()) {
        const std::string entity = "scientist " + s.id;
        if (s.sds_code.empty()) {
            out.push_back({FindingKind::completeness, entity, "sds_code", "empty SDS code"});
        }
        if (!ds.university_index(s.university_id)) {
            out.push_back({FindingKind::reference, entity, "university_id",
                           "unknown university '" + s.university_id + "'"});
        }
        const auto [it, fresh] = macro_by_sds.emplace(s.sds_code, s.macro_area);
        if (!fresh && it->second != s.macro_area) {
            out.push_back({FindingKind::consistency, entity, "macro_area",
                           "SDS '" + s.sds_code + "' already has macro area '" + it->second + "'"});
        }
    }

    for (const Journal& j : ds.journals()) {
        const std::string entity = "journal " + j.id;
        if (j.category.empty()) {
            out.push_back({FindingKind::completeness, entity, "category", "empty category"});
        }
        if (!std::isfinite(j.impact_factor) || j.impact_factor < 0.0) {
            out.push_back({FindingKind::consistency, entity, "impact_factor",
                           "must be finite and non-negative"});
        }
    }

    for (const Publication& p : ds.publications()) {
        const std::string entity = "publication " + p.id;
        if (p.academic_author_ids.empty()) {
            out.push_back({FindingKind::completeness, entity, "academic_author_ids",
                           "publication has no academic authors"});
        }
        if (p.company_site_ids.empty()) {
            out.push_back({FindingKind::completeness, entity, "company_site_ids",
                           "publication has no company sites"});
        }
        for (std::size_t i = 1; i < p.academic_author_ids.size(); ++i) {
            if (p.academic_author_ids[i] == p.academic_author_ids[i - 1]) {
                out.push_back({FindingKind::duplicate, entity, "academic_author_ids",
                               "author '" + p.academic_author_ids[i] + "' listed twice"});
            }
        }
        for (std::size_t i = 1; i < p.company_site_ids.size(); ++i) {
            if (p.company_site_ids[i] == p.company_site_ids[i - 1]) {
                out.push_back({FindingKind::duplicate, entity, "company_site_ids",
                               "site '" + p.company_site_ids[i] + "' listed twice"});
            }
        }
        if (!ds.journal_index(p.journal_id)) {
            out.push_back({FindingKind::reference, entity, "journal_id",
                           "unknown journal '" + p.journal_id + "'"});
        }
        for (const std::string& a : p.academic_author_ids) {
            if (!ds.scientist_index(a)) {
                out.push_back({FindingKind::reference, entity, "academic_author_ids",
                               "unknown scientist '" + a + "'"});
            }
        }
        for (const std::string& s : p.company_site_ids) {
            if (!ds.site_index(s)) {
                out.push_back({FindingKind::reference, entity, "company_site_ids",
                               "unknown site '" + s + "'"});
            }
        }
    }

    // Derived index agreement: staff counts recomputed from the records
    // must match sector_staff exactly.
    std::map<std::pair<std::string, std::string>, long> staff;
    for (const Scientist& s : ds.scientists()) {
        if (ds.university_index(s.university_id)) {
            staff[{s.sds_code, s.university_id}] += 1;
        }
    }
    long indexed_pairs = 0;
    for (const Sds& sds : ds.sds()) {
        for (const Dataset::SectorStaff& entry : ds.sector_staff(sds.code)) {
            ++indexed_pairs;
            const auto it = staff.find({sds.code, ds.universities()[entry.university].id});
            if (it == staff.end() || it->second != entry.staff) {
                out.push_back({FindingKind::consistency, "sds " + sds.code, "staff",
                               "derived staff index disagrees with scientist records"});
            }
        }
    }
    if (indexed_pairs != static_cast<long>(staff.size())) {
        out.push_back({FindingKind::consistency, "dataset", "staff",
                       "derived staff index size disagrees with scientist records"});
    }

    return report;
}

} // namespace collabmkt
