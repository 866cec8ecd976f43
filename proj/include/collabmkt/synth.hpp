#pragma once

#include "collabmkt/dataset.hpp"

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace collabmkt::synth {

enum class ChoiceModel {
    uniform,   // every staffed university equally likely
    proximity, // weight exp(-distance / lambda_km)
    mass,      // weight proportional to staff count in the SDS
    quality,   // weight proportional to a per-(university, SDS) prior
};

enum class GeographyMode { bbox, points };

struct Range {
    long lo = 0;
    long hi = 0; // inclusive
};

/// Declarative generator configuration. Parsed from a key = value file;
/// see parse_config for the key list.
struct SynthConfig {
    std::uint64_t seed = 1;

    long universities = 10;
    long sites = 5;
    long sds_count = 4;
    Range scientists_per_sds{2, 8}; // total staff per SDS, spread over universities
    long journal_categories = 3;
    long journals_per_category = 4;
    long publications = 100;

    GeographyMode geography = GeographyMode::bbox;
    double lat_min = 36.0, lat_max = 46.0; // bbox bounds, degrees
    double lon_min = 7.0, lon_max = 18.0;
    std::vector<GeoPoint> university_points; // points mode; sizes fix the counts
    std::vector<GeoPoint> site_points;

    double if_mu = 0.4; // log-normal parameters of journal impact factors
    double if_sigma = 0.8;

    ChoiceModel model = ChoiceModel::uniform;
    double lambda_km = 100.0; // proximity decay length

    Range years{2001, 2003};
};

/// Reads a key = value config file ('#' comments, blank lines ignored).
/// Unknown keys and malformed values throw ConfigError.
SynthConfig parse_config(const std::filesystem::path& path);
SynthConfig parse_config_text(std::string_view text, std::string_view source = "<config>");

/// Throws ConfigError on non-positive counts, inverted ranges or bounding
/// boxes, a non-positive proximity decay, or an SDS staffing range that
/// allows zero scientists.
void validate_config(const SynthConfig& config);

/// Deterministic generation: the same config (seed included) produces a
/// byte-identical dataset under save_dataset. Every publication couples
/// one scientist with one company site.
Dataset generate(const SynthConfig& config);

} // namespace collabmkt::synth
