#include <cstdio>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "permagic/fixtures.h"
#include "permagic/pipeline.h"

using namespace permagic;

namespace {

std::string temp_file(const std::string &name, const std::string &content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

}  // namespace

TEST(Pipeline, ConstructionChoices) {
    EXPECT_EQ(constructions_for(5, "tensor"), (std::vector<Construction>{Construction::direct}));
    EXPECT_EQ(constructions_for(6, "both"), (std::vector<Construction>{Construction::direct, Construction::tensor}));
    EXPECT_EQ(constructions_for(7, "both"), (std::vector<Construction>{Construction::direct}));
    EXPECT_THROW(constructions_for(4, "sideways"), std::invalid_argument);
}

TEST(Pipeline, FixturesLoad) {
    const Fixtures &f = default_fixtures();
    EXPECT_EQ(f.table2.size(), 24u);
    EXPECT_EQ(f.matrices.size(), 18u);
    EXPECT_EQ(f.matrix("w3_strange").d, 3u);
    EXPECT_EQ(f.matrix("w3_strange").state, (CVector{0, 1, -1}));
    EXPECT_THROW(f.matrix("missing"), std::out_of_range);
}

TEST(Pipeline, BadFixtures) {
    EXPECT_THROW(load_fixtures("/nonexistent/fixtures.json"), FixtureError);
    auto bad = temp_file("permagic_bad.json", "{ not json");
    EXPECT_THROW(load_fixtures(bad), FixtureError);
    auto wrong = temp_file("permagic_schema.json", R"({"schema": 99})");
    EXPECT_THROW(load_fixtures(wrong), FixtureError);
    std::remove(bad.c_str());
    std::remove(wrong.c_str());
}

TEST(Pipeline, StateVectors) {
    SymbolTable s;
    EXPECT_EQ(state_vector("(0,1,-1)"), (CVector{0, 1, -1}));
    EXPECT_EQ(state_vector("strange"), (CVector{0, 1, -1}));
    EXPECT_THROW(state_vector("(0,1,"), std::exception);
}

TEST(Pipeline, PrintedMatricesAtThree) {
    const Fixtures &f = default_fixtures();
    for (const char *id : {"w3_norrell", "w3_strange"}) {
        const PrintedMatrix &m = f.matrix(id);
        WignerMatrix w = wigner_function(m.state, phase_points(3, Construction::direct));
        for (size_t q = 0; q < 3; q++) {
            for (size_t p = 0; p < 3; p++) {
                EXPECT_EQ(w.at(q, p), m.at(q, p)) << id;
            }
        }
    }
}

TEST(Pipeline, Table2SmallDimensions) {
    Table2Report r = run_table2(default_fixtures(), {3, 4, 5}, "both");
    EXPECT_TRUE(r.all_matched());
    EXPECT_FALSE(r.rows.empty());
    for (const auto &row : r.rows) {
        // the direct operators are not Hermitian at even composite d, so those rows may error
        if (row.d != 4 || row.construction != "direct") {
            EXPECT_TRUE(row.error.empty()) << row.label << ": " << row.error;
        }
    }
    auto it = r.matching_constructions.find(4);
    ASSERT_NE(it, r.matching_constructions.end());
    EXPECT_EQ(it->second, (std::vector<std::string>{"tensor"}));
    EXPECT_EQ(r.matching_constructions.at(5), (std::vector<std::string>{"direct"}));
}

TEST(Pipeline, Table2Csv) {
    Table2Report r = run_table2(default_fixtures(), {3}, "direct");
    std::string csv = table2_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')).find("d,"), 0u);
    EXPECT_EQ((size_t)std::count(csv.begin(), csv.end(), '\n'), r.rows.size() + 1);
}

TEST(Pipeline, PropsAtPrimeAndComposite) {
    PropsResult p5 = run_props(5, Construction::direct, 5, 1);
    EXPECT_TRUE(p5.properties.hermitian);
    EXPECT_TRUE(p5.properties.trace_orthogonal);
    EXPECT_EQ(p5.reconstruction_failures, 0u);
    EXPECT_EQ(p5.reconstruction_trials, 5u);

    PropsResult p6 = run_props(6, Construction::direct, 3, 1);
    EXPECT_FALSE(p6.properties.hermitian);
    EXPECT_EQ(p6.reconstruction_failures, 3u);

    PropsResult t6 = run_props(6, Construction::tensor, 3, 1);
    EXPECT_TRUE(t6.properties.hermitian);
    EXPECT_TRUE(t6.properties.trace_orthogonal);
    EXPECT_EQ(t6.reconstruction_failures, 0u);
}

TEST(Pipeline, JsonIsDeterministic) {
    ClassifyOptions o;
    auto a = to_json(run_classify(named_group("S3"), o)).dump();
    auto b = to_json(run_classify(named_group("S3"), o)).dump();
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j.at("context").at("pentagons").size(), 3u);
}

TEST(Pipeline, RandomRaysAreSeeded) {
    std::mt19937_64 a(7), b(7);
    EXPECT_EQ(random_ray(5, a), random_ray(5, b));
}
