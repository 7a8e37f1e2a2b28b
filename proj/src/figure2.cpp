// figure2.cpp

#include "antimagic/figure2.hpp"

#include <algorithm>
#include <filesystem>

#include "antimagic/error.hpp"
#include "antimagic/io.hpp"
#include "antimagic/tree_canon.hpp"

namespace antimagic {

std::string default_fixture_dir() {
#ifdef ANTIMAGIC_DATA_DIR
    return std::string(ANTIMAGIC_DATA_DIR) + "/figure2";
#else
    return "data/figure2";
#endif
}

std::vector<Fixture> load_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::io_error, "fixture directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    std::vector<Fixture> out;
    for (const auto& path : files) {
        const auto doc = read_json_file(path.string());
        try {
            auto [forest, labeling] = labeling_from_json(doc);
            Fixture fx;
            fx.name = doc.value("name", path.stem().string());
            fx.graph = doc.at("graph").get<std::string>();
            fx.forest = std::move(forest);
            fx.labeling = std::move(labeling);
            if (doc.contains("figure_sum_discrepancies")) {
                fx.figure_sum_discrepancies = doc.at("figure_sum_discrepancies").get<std::vector<std::string>>();
            }
            out.push_back(std::move(fx));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
        }
    }
    return out;
}

FixtureCheck check_fixture(const Fixture& fixture) {
    FixtureCheck r;
    r.name = fixture.name;
    r.shape_matches = forest_canonical_form(parse_forest(fixture.graph)) == forest_canonical_form(fixture.forest);
    r.report = is_antimagic(fixture.forest, fixture.labeling);
    r.ad = r.report.ad_progression;
    return r;
}

}  // namespace antimagic
