// antimagic/figure2.hpp - the bundled (1,1)-antimagic example labelings on 20 vertices

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antimagic/forest.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

struct Fixture {
    std::string name;
    std::string graph;  // component grammar, e.g. "S(1,2)+5*P3"
    Forest forest;
    Labeling labeling;
    std::vector<std::string> figure_sum_discrepancies;
};

std::string default_fixture_dir();

// Every *.json in dir, ordered by file name. Throws io_error / parse_error.
std::vector<Fixture> load_fixtures(const std::string& dir = default_fixture_dir());

struct FixtureCheck {
    std::string name;
    bool shape_matches = false;  // edges form the forest named by graph
    VerificationReport report;
    std::optional<Progression> ad;

    bool passed() const { return shape_matches && report.antimagic && ad && ad->initial == 1 && ad->difference == 1; }
};

FixtureCheck check_fixture(const Fixture& fixture);

}  // namespace antimagic
