#pragma once

#include "collabmkt/errors.hpp"
#include "collabmkt/geo.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace collabmkt {

// ===========================================================================
// Records. One snapshot of the research market: universities, company
// sites, research staff, journals, and co-authored publications.
// ===========================================================================

struct University {
    std::string id;
    std::string name;
    GeoPoint location;

    bool operator==(const University&) const = default;
};

/// One company location. Multi-site companies share a company_id; every
/// analysis that talks about "companies" can group by either field.
struct CompanySite {
    std::string id;
    std::string company_id;
    GeoPoint location;

    bool operator==(const CompanySite&) const = default;
};

/// Academic researcher. Each scientist sits in exactly one university and
/// one SDS (disciplinary sector) in a snapshot.
struct Scientist {
    std::string id;
    std::string university_id;
    std::string sds_code;
    std::string macro_area;
    bool stable_affiliation = true;

    bool operator==(const Scientist&) const = default;
};

struct Journal {
    std::string id;
    std::string category;
    double impact_factor = 0.0;

    bool operator==(const Journal&) const = default;
};

/// Disciplinary sector. Derived from the scientists file: one record per
/// distinct sds_code, with the macro_area seen on its first scientist.
struct Sds {
    std::string code;
    std::string macro_area;

    bool operator==(const Sds&) const = default;
};

/// University-industry co-authored publication. Both id lists are sets:
/// no duplicates, order irrelevant (stored sorted).
struct Publication {
    std::string id;
    int year = 0;
    std::string journal_id;
    std::vector<std::string> academic_author_ids;
    std::vector<std::string> company_site_ids;

    bool operator==(const Publication&) const = default;
};

// ===========================================================================
// Dataset: the immutable snapshot plus derived indexes. build() sorts every
// collection by id and resolves cross-references where possible, but does
// not reject bad data; validate() reports problems, load_dataset() rejects
// them with file/row context.
// ===========================================================================

class Dataset {
  public:
    Dataset() = default;

    static Dataset build(std::vector<University> universities,
                         std::vector<CompanySite> sites,
                         std::vector<Scientist> scientists,
                         std::vector<Journal> journals,
                         std::vector<Publication> publications);

    const std::vector<University>& universities() const { return universities_; }
    const std::vector<CompanySite>& sites() const { return sites_; }
    const std::vector<Scientist>& scientists() const { return scientists_; }
    const std::vector<Journal>& journals() const { return journals_; }
    const std::vector<Sds>& sds() const { return sds_; }
    const std::vector<Publication>& publications() const { return publications_; }

    std::optional<std::size_t> university_index(std::string_view id) const;
    std::optional<std::size_t> site_index(std::string_view id) const;
    std::optional<std::size_t> scientist_index(std::string_view id) const;
    std::optional<std::size_t> journal_index(std::string_view id) const;
    std::optional<std::size_t> sds_index(std::string_view code) const;
    std::optional<std::size_t> publication_index(std::string_view id) const;

    struct SectorStaff {
        std::size_t university; // index into universities()
        long staff;             // scientists of this university in the SDS
    };

    /// Universities with at least one scientist in the SDS, ordered by
    /// university id. Empty span for an unknown code.
    std::span<const SectorStaff> sector_staff(std::string_view sds_code) const;

    /// Scientist indexes for the SDS, ordered by scientist id.
    std::span<const std::size_t> sector_scientists(std::string_view sds_code) const;

    /// Staff head count of one (university, SDS) pair; 0 when unstaffed.
    long staff_count(std::string_view university_id, std::string_view sds_code) const;

    // Per-publication resolved reference sets, distinct and ordered by the
    // referenced id. Unresolvable references are skipped (validate() flags
    // them); a loaded dataset never has any.
    std::span<const std::size_t> publication_universities(std::size_t pub) const;
    std::span<const std::pair<std::size_t, std::size_t>>
    publication_sectors(std::size_t pub) const; // (university, sds) pairs
    std::span<const std::size_t> publication_sites(std::size_t pub) const;
    std::span<const std::size_t> publication_authors(std::size_t pub) const;

    /// Record-wise equality (indexes are derived, so records suffice).
    bool operator==(const Dataset& other) const;

  private:
    std::vector<University> universities_;
    std::vector<CompanySite> sites_;
    std::vector<Scientist> scientists_;
    std::vector<Journal> journals_;
    std::vector<Sds> sds_;
    std::vector<Publication> publications_;

    std::unordered_map<std::string, std::size_t> university_by_id_;
    std::unordered_map<std::string, std::size_t> site_by_id_;
    std::unordered_map<std::string, std::size_t> scientist_by_id_;
    std::unordered_map<std::string, std::size_t> journal_by_id_;
    std::unordered_map<std::string, std::size_t> sds_by_code_;
    std::unordered_map<std::string, std::size_t> publication_by_id_;

    std::vector<std::vector<SectorStaff>> staff_by_sds_;
    std::vector<std::vector<std::size_t>> scientists_by_sds_;
    std::vector<std::vector<std::size_t>> pub_universities_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pub_sectors_;
    std::vector<std::vector<std::size_t>> pub_sites_;
    std::vector<std::vector<std::size_t>> pub_authors_;
};

// ===========================================================================
// Loading, serialization, validation.
// ===========================================================================

struct PathSet {
    std::filesystem::path universities;
    std::filesystem::path sites;
    std::filesystem::path scientists;
    std::filesystem::path journals;
    std::filesystem::path publications;

    /// The conventional five file names inside one directory.
    static PathSet in_dir(const std::filesystem::path& dir);
};

/// Strict load: any parse error, duplicate id, dangling reference, or
/// structural defect throws DataError naming file, row, and field.
Dataset load_dataset(const PathSet& paths);
Dataset load_dataset(const std::filesystem::path& dir);

/// Writes the five CSV files into `dir` (created if missing). Reals are
/// rendered shortest-round-trip, so load(save(ds)) == ds.
void save_dataset(const Dataset& ds, const std::filesystem::path& dir);

enum class FindingKind { geometry, reference, duplicate, completeness, consistency };

std::string_view to_string(FindingKind kind);

/// One validation problem. Findings are data, not exceptions.
struct Finding {
    FindingKind kind;
    std::string entity; // e.g. "university U12"
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool ok() const { return findings.empty(); }
};

/// Full invariant sweep over an in-memory dataset: coordinate ranges,
/// duplicate ids, dangling references, empty reference sets, SDS macro-area
/// consistency, and derived-index agreement with the records.
ValidationReport validate(const Dataset& ds);

} // namespace collabmkt
