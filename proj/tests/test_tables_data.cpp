#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dqm/errors.hpp"
#include "dqm/reference_tables.hpp"

using namespace dqm;

namespace {

std::vector<std::vector<double>> load_csv(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("table,", 0) == 0) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_CASE("in-code tables and the shipped csv agree cell for cell") {
    const auto csv = load_csv(DQM_DATA_FILE);

    std::vector<ReferenceRow> all;
    for (int t : {1, 2, 3}) {
        const auto& rows = reference_table(t);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    REQUIRE(csv.size() == all.size());

    for (size_t i = 0; i < all.size(); ++i) {
        const ReferenceRow& r = all[i];
        const std::vector<double>& c = csv[i];
        REQUIRE(c.size() == 10);
        CHECK(c[0] == r.table);
        CHECK(c[1] == r.n);
        CHECK(c[2] == r.alpha);
        CHECK(c[3] == r.param1);
        CHECK(c[4] == r.param2);
        CHECK(c[5] == r.B);
        CHECK(c[6] == r.phi);
        CHECK(c[7] == r.s_r);
        CHECK(c[8] == r.s_p);
        CHECK(c[9] == r.s_total);
    }
}

TEST_CASE("table shapes and internal consistency") {
    CHECK(reference_table(1).size() == 36);
    CHECK(reference_table(2).size() == 45);
    CHECK(reference_table(3).size() == 36);
    CHECK_THROWS_AS(reference_table(0), DomainError);
    CHECK_THROWS_AS(reference_table(4), DomainError);

    int gross_misprints = 0;
    for (int t : {1, 2, 3})
        for (const ReferenceRow& r : reference_table(t)) {
            CHECK(r.table == t);
            CHECK(r.n >= 0);
            CHECK(r.alpha > 0.0);
            CHECK(r.alpha <= 1.0);
            // printed sums should match their addends to print precision;
            // the source carries exactly one row whose total column was
            // copied from a different row, kept verbatim here
            if (std::abs(r.s_total - (r.s_r + r.s_p)) > 2.5e-5) ++gross_misprints;
        }
    CHECK(gross_misprints == 1);
}
