#include "collabmkt/synth.hpp"

#include "collabmkt/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace collabmkt::synth {

// ===========================================================================
// Deterministic randomness. mt19937_64 is pinned by the standard; the
// distributions are hand-rolled because the std:: ones are not, and the
// same seed must reproduce the same dataset everywhere.
// ===========================================================================

namespace {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    long uniform_long(long lo, long hi) { // inclusive; modulo bias is irrelevant here
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    double uniform_real(double lo, double hi) { return lo + (hi - lo) * unit(); }

    double normal() { // Box-Muller, cosine branch
        const double u1 = unit();
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(1.0 - u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

    std::size_t weighted_pick(const std::vector<double>& weights, double total) {
        const double r = unit() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (r < acc) return i;
        }
        return weights.size() - 1; // rounding spill lands on the last entry
    }

  private:
    std::mt19937_64 engine_;
};

std::string padded(std::string_view prefix, long value, int width) {
    std::string digits = std::to_string(value);
    std::string out(prefix);
    for (int i = static_cast<int>(digits.size()); i < width; ++i) out += '0';
    out += digits;
    return out;
}

int digits_of(long n) {
    int width = 1;
    while (n >= 10) {
        n /= 10;
        ++width;
    }
    return width;
}

} // namespace

// ===========================================================================
// Config file
// ===========================================================================

namespace {

[[noreturn]] void config_fail(std::string_view source, std::size_t line,
                              std::string_view what) {
    throw ConfigError(std::string(source) + ":" + std::to_string(line) + ": " +
                      std::string(what));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

long parse_config_long(std::string_view source, std::size_t line, std::string_view value) {
    try {
        std::size_t used = 0;
        const long v = std::stol(std::string(value), &used);
        if (used != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        config_fail(source, line, "not an integer: '" + std::string(value) + "'");
    }
}

double parse_config_double(std::string_view source, std::size_t line, std::string_view value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(std::string(value), &used);
        if (used != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        config_fail(source, line, "not a number: '" + std::string(value) + "'");
    }
}

Range parse_config_range(std::string_view source, std::size_t line, std::string_view value) {
    const auto sep = value.find("..");
    if (sep == std::string_view::npos) {
        const long v = parse_config_long(source, line, value);
        return Range{v, v};
    }
    return Range{parse_config_long(source, line, trim(value.substr(0, sep))),
                 parse_config_long(source, line, trim(value.substr(sep + 2)))};
}

std::vector<GeoPoint> parse_config_points(std::string_view source, std::size_t line,
                                          std::string_view value) {
    std::vector<GeoPoint> points;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t end = value.find(';', start);
        if (end == std::string_view::npos) end = value.size();
        const std::string_view item = trim(value.substr(start, end - start));
        if (!item.empty()) {
            const auto comma = item.find(',');
            if (comma == std::string_view::npos) {
                config_fail(source, line, "point must be 'lat,lon': '" + std::string(item) + "'");
            }
            points.push_back(
                GeoPoint{parse_config_double(source, line, trim(item.substr(0, comma))),
                         parse_config_double(source, line, trim(item.substr(comma + 1)))});
        }
        start = end + 1;
    }
    return points;
}

} // namespace

SynthConfig parse_config_text(std::string_view text, std::string_view source) {
    SynthConfig config;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            config_fail(source, line_no, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_config_long(source, line_no, value));
        } else if (key == "universities") {
            config.universities = parse_config_long(source, line_no, value);
        } else if (key == "sites") {
            config.sites = parse_config_long(source, line_no, value);
        } else if (key == "sds_count") {
            config.sds_count = parse_config_long(source, line_no, value);
        } else if (key == "scientists_per_sds") {
            config.scientists_per_sds = parse_config_range(source, line_no, value);
        } else if (key == "journal_categories") {
            config.journal_categories = parse_config_long(source, line_no, value);
        } else if (key == "journals_per_category") {
            config.journals_per_category = parse_config_long(source, line_no, value);
        } else if (key == "publications") {
            config.publications = parse_config_long(source, line_no, value);
        } else if (key == "geography") {
            if (value == "bbox") {
                config.geography = GeographyMode::bbox;
            } else if (value == "points") {
                config.geography = GeographyMode::points;
            } else {
                config_fail(source, line_no, "geography must be bbox or points");
            }
        } else if (key == "lat_range") {
            const auto sep = value.find("..");
            if (sep == std::string_view::npos) config_fail(source, line_no, "expected lo..hi");
            config.lat_min = parse_config_double(source, line_no, trim(value.substr(0, sep)));
            config.lat_max = parse_config_double(source, line_no, trim(value.substr(sep + 2)));
        } else if (key == "lon_range") {
            const auto sep = value.find("..");
            if (sep == std::string_view::npos) config_fail(source, line_no, "expected lo..hi");
            config.lon_min = parse_config_double(source, line_no, trim(value.substr(0, sep)));
            config.lon_max = parse_config_double(source, line_no, trim(value.substr(sep + 2)));
        } else if (key == "university_points") {
            config.university_points = parse_config_points(source, line_no, value);
        } else if (key == "site_points") {
            config.site_points = parse_config_points(source, line_no, value);
        } else if (key == "if_lognormal_mu") {
            config.if_mu = parse_config_double(source, line_no, value);
        } else if (key == "if_lognormal_sigma") {
            config.if_sigma = parse_config_double(source, line_no, value);
        } else if (key == "choice_model") {
            if (value == "uniform") {
                config.model = ChoiceModel::uniform;
            } else if (value == "proximity") {
                config.model = ChoiceModel::proximity;
            } else if (value == "mass") {
                config.model = ChoiceModel::mass;
            } else if (value == "quality") {
                config.model = ChoiceModel::quality;
            } else {
                config_fail(source, line_no,
                            "choice_model must be uniform, proximity, mass, or quality");
            }
        } else if (key == "proximity_lambda_km") {
            config.lambda_km = parse_config_double(source, line_no, value);
        } else if (key == "year_range") {
            config.years = parse_config_range(source, line_no, value);
        } else {
            config_fail(source, line_no, "unknown key '" + key + "'");
        }
    }
    validate_config(config);
    return config;
}

SynthConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

void validate_config(const SynthConfig& config) {
    auto require = [](bool ok, std::string_view what) {
        if (!ok) throw ConfigError(std::string(what));
    };
    if (config.geography == GeographyMode::points) {
        require(!config.university_points.empty(), "points geography needs university_points");
        require(!config.site_points.empty(), "points geography needs site_points");
        for (const GeoPoint& p : config.university_points) {
            require(geo_point_valid(p), "university point out of range");
        }
        for (const GeoPoint& p : config.site_points) {
            require(geo_point_valid(p), "site point out of range");
        }
    } else {
        require(config.universities > 0, "universities must be positive");
        require(config.sites > 0, "sites must be positive");
        require(geo_point_valid(GeoPoint{config.lat_min, config.lon_min}) &&
                    geo_point_valid(GeoPoint{config.lat_max, config.lon_max}),
                "bounding box out of range");
        require(config.lat_min <= config.lat_max && config.lon_min <= config.lon_max,
                "bounding box is inverted");
    }
    require(config.sds_count > 0, "sds_count must be positive");
    require(config.scientists_per_sds.lo >= 1,
            "scientists_per_sds must not allow an SDS with zero scientists");
    require(config.scientists_per_sds.lo <= config.scientists_per_sds.hi,
            "scientists_per_sds range is inverted");
    require(config.journal_categories > 0, "journal_categories must be positive");
    require(config.journals_per_category > 0, "journals_per_category must be positive");
    require(config.publications > 0, "publications must be positive");
    require(std::isfinite(config.if_mu), "if_lognormal_mu must be finite");
    require(std::isfinite(config.if_sigma) && config.if_sigma >= 0.0,
            "if_lognormal_sigma must be finite and non-negative");
    if (config.model == ChoiceModel::proximity) {
        require(std::isfinite(config.lambda_km) && config.lambda_km > 0.0,
                "proximity_lambda_km must be positive");
    }
    require(config.years.lo <= config.years.hi, "year_range is inverted");
}

// ===========================================================================
// Generation
// ===========================================================================

Dataset generate(const SynthConfig& config) {
    validate_config(config);
    Rng rng(config.seed);

    // Universities and sites.
    std::vector<University> universities;
    std::vector<CompanySite> sites;
    const long n_univ = config.geography == GeographyMode::points
                            ? static_cast<long>(config.university_points.size())
                            : config.universities;
    const long n_sites = config.geography == GeographyMode::points
                             ? static_cast<long>(config.site_points.size())
                             : config.sites;
    const int uw = digits_of(n_univ);
    for (long i = 0; i < n_univ; ++i) {
        const GeoPoint at = config.geography == GeographyMode::points
                                ? config.university_points[static_cast<std::size_t>(i)]
                                : GeoPoint{rng.uniform_real(config.lat_min, config.lat_max),
                                           rng.uniform_real(config.lon_min, config.lon_max)};
        const std::string id = padded("U", i + 1, uw);
        universities.push_back(University{id, "University " + std::to_string(i + 1), at});
    }
    const int sw = digits_of(n_sites);
    for (long i = 0; i < n_sites; ++i) {
        const GeoPoint at = config.geography == GeographyMode::points
                                ? config.site_points[static_cast<std::size_t>(i)]
                                : GeoPoint{rng.uniform_real(config.lat_min, config.lat_max),
                                           rng.uniform_real(config.lon_min, config.lon_max)};
        sites.push_back(CompanySite{padded("C", i + 1, sw), padded("F", i + 1, sw), at});
    }

    // Staff: per SDS, a total head count spread uniformly over universities.
    const int dw = digits_of(config.sds_count);
    std::vector<std::string> sds_codes;
    std::vector<std::vector<std::vector<std::size_t>>> staff_lists; // sds -> univ -> scientists
    std::vector<long> sds_staff(static_cast<std::size_t>(config.sds_count), 0);
    for (long s = 0; s < config.sds_count; ++s) {
        sds_codes.push_back(padded("S", s + 1, dw));
        sds_staff[static_cast<std::size_t>(s)] =
            rng.uniform_long(config.scientists_per_sds.lo, config.scientists_per_sds.hi);
    }
    long total_staff = 0;
    for (const long n : sds_staff) total_staff += n;

    std::vector<Scientist> scientists;
    staff_lists.assign(static_cast<std::size_t>(config.sds_count),
                       std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(n_univ)));
    const int rw = digits_of(total_staff);
    long next_scientist = 1;
    for (long s = 0; s < config.sds_count; ++s) {
        const std::string macro = "A" + std::to_string(s % 4 + 1);
        for (long k = 0; k < sds_staff[static_cast<std::size_t>(s)]; ++k) {
            const long univ = rng.uniform_long(0, n_univ - 1);
            const std::size_t idx = scientists.size();
            scientists.push_back(Scientist{padded("R", next_scientist++, rw),
                                           universities[static_cast<std::size_t>(univ)].id,
                                           sds_codes[static_cast<std::size_t>(s)], macro, true});
            staff_lists[static_cast<std::size_t>(s)][static_cast<std::size_t>(univ)].push_back(idx);
        }
    }

    // Journals.
    std::vector<Journal> journals;
    const long n_journals = config.journal_categories * config.journals_per_category;
    const int jw = digits_of(n_journals);
    const int cw = digits_of(config.journal_categories);
    long next_journal = 1;
    for (long c = 0; c < config.journal_categories; ++c) {
        const std::string category = padded("CAT", c + 1, cw);
        for (long j = 0; j < config.journals_per_category; ++j) {
            journals.push_back(Journal{padded("J", next_journal++, jw), category,
                                       rng.lognormal(config.if_mu, config.if_sigma)});
        }
    }

    // Quality priors, drawn once per (SDS, university) slot in fixed order.
    std::vector<std::vector<double>> quality_priors;
    if (config.model == ChoiceModel::quality) {
        quality_priors.assign(static_cast<std::size_t>(config.sds_count),
                              std::vector<double>(static_cast<std::size_t>(n_univ), 0.0));
        for (long s = 0; s < config.sds_count; ++s) {
            for (long u = 0; u < n_univ; ++u) {
                quality_priors[static_cast<std::size_t>(s)][static_cast<std::size_t>(u)] =
                    rng.lognormal(0.0, 1.0);
            }
        }
    }

    // Publications: one site, one SDS, one university by model weight, one
    // scientist. The candidate set is the SDS's staffed universities.
    std::vector<Publication> publications;
    const int pw = digits_of(config.publications);
    std::vector<double> weights;
    std::vector<std::size_t> candidates;
    for (long p = 0; p < config.publications; ++p) {
        const long site = rng.uniform_long(0, n_sites - 1);
        const long sds = rng.uniform_long(0, config.sds_count - 1);

        candidates.clear();
        weights.clear();
        double total = 0.0;
        for (long u = 0; u < n_univ; ++u) {
            const auto& members = staff_lists[static_cast<std::size_t>(sds)][static_cast<std::size_t>(u)];
            if (members.empty()) continue;
            double w = 1.0;
            switch (config.model) {
            case ChoiceModel::uniform:
                w = 1.0;
                break;
            case ChoiceModel::proximity:
                w = std::exp(-great_circle_km(universities[static_cast<std::size_t>(u)].location,
                                              sites[static_cast<std::size_t>(site)].location) /
                             config.lambda_km);
                break;
            case ChoiceModel::mass:
                w = static_cast<double>(members.size());
                break;
            case ChoiceModel::quality:
                w = quality_priors[static_cast<std::size_t>(sds)][static_cast<std::size_t>(u)];
                break;
            }
            candidates.push_back(static_cast<std::size_t>(u));
            weights.push_back(w);
            total += w;
        }
        const std::size_t univ = candidates[rng.weighted_pick(weights, total)];
        const auto& members = staff_lists[static_cast<std::size_t>(sds)][univ];
        const std::size_t author =
            members[static_cast<std::size_t>(rng.uniform_long(0, static_cast<long>(members.size()) - 1))];
        const long journal = rng.uniform_long(0, n_journals - 1);
        const int year = static_cast<int>(rng.uniform_long(config.years.lo, config.years.hi));

        publications.push_back(Publication{padded("P", p + 1, pw), year,
                                           journals[static_cast<std::size_t>(journal)].id,
                                           {scientists[author].id},
                                           {sites[static_cast<std::size_t>(site)].id}});
    }

    return Dataset::build(std::move(universities), std::move(sites), std::move(scientists),
                          std::move(journals), std::move(publications));
}

} // namespace collabmkt::synth
