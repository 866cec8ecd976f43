#include "support/fixtures.hpp"

#include "collabmkt/csv.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

namespace collabmkt::testing {

Dataset micro_dataset() {
    std::vector<University> universities = {
        {"U1", "Uni One", {0.0, 0.0}},
        {"U2", "Uni Two", {0.0, 1.0}},
        {"U3", "Uni Three", {0.0, 3.0}},
    };
    std::vector<CompanySite> sites = {
        {"C1", "F1", {0.0, 0.0}},
    };
    std::vector<Scientist> scientists = {
        {"s1", "U1", "MAT/01", "01", true},
        {"s2", "U2", "MAT/01", "01", true},
        {"s3", "U2", "MAT/01", "01", true},
        {"s4", "U3", "MAT/01", "01", true},
    };
    std::vector<Journal> journals = {
        {"J1", "X", 2.0},
        {"J2", "X", 1.0},
    };
    std::vector<Publication> publications = {
        {"P1", 2001, "J1", {"s2"}, {"C1"}},
        {"P2", 2002, "J2", {"s4"}, {"C1"}},
    };
    return Dataset::build(std::move(universities), std::move(sites), std::move(scientists),
                          std::move(journals), std::move(publications));
}

void write_micro_csvs(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto write = [&dir](const char* name, const std::string& text) {
        csv::write_file_atomic((dir / name).string(), text);
    };
    write("universities.csv",
          "id,name,lat,lon\n"
          "U1,Uni One,0,0\n"
          "U2,Uni Two,0,1\n"
          "U3,Uni Three,0,3\n");
    write("sites.csv",
          "id,company_id,lat,lon\n"
          "C1,F1,0,0\n");
    write("scientists.csv",
          "id,university_id,sds_code,macro_area,stable\n"
          "s1,U1,MAT/01,01,true\n"
          "s2,U2,MAT/01,01,true\n"
          "s3,U2,MAT/01,01,true\n"
          "s4,U3,MAT/01,01,true\n");
    write("journals.csv",
          "id,category,impact_factor\n"
          "J1,X,2\n"
          "J2,X,1\n");
    write("publications.csv",
          "id,year,journal_id,academic_author_ids,company_site_ids\n"
          "P1,2001,J1,s2,C1\n"
          "P2,2002,J2,s4,C1\n");
}

TempDir::TempDir() {
    static std::atomic<unsigned long> counter{0};
    const auto stamp = static_cast<unsigned long>(
        std::chrono::steady_clock::now().time_since_epoch().count());
    path_ = std::filesystem::temp_directory_path() /
            ("collabmkt_test_" + std::to_string(stamp) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

bool close_rel(double a, double b, double rel) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(a - b) <= rel * scale;
}

} // namespace collabmkt::testing
