#pragma once

#include "collabmkt/dataset.hpp"

#include <filesystem>

namespace collabmkt::testing {

// Tiny hand-checked dataset used across the test suite: three universities
// strung along the equator, one company site at the origin, one SDS with four
// stable scientists, two journals in one category, two publications. Every
// golden value asserted against it was derived by hand from these rows.
Dataset micro_dataset();

// Writes the same dataset as literal CSV text (not through save_dataset) so
// loader tests parse independently authored files.
void write_micro_csvs(const std::filesystem::path& dir);

// Scratch directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

// Comparison helper matching the acceptance tolerance for real-valued
// checks: relative 1e-9, treated as absolute below 1.0.
bool close_rel(double a, double b, double rel = 1e-9);

} // namespace collabmkt::testing
