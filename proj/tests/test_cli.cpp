#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"

using testing_support::run_cli;

TEST(Cli, CoconjugatePrintsSpec) {
    const auto r = run_cli("coconjugate --rational \"p: 1,0,1 ; q: 0,1\" --mobius 0,1,1,0 --print-spec");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "p: 0,1 ; q: 1,0,1\n");
}

TEST(Cli, ZerosTextAndJson) {
    const auto text = run_cli("zeros --rational \"p: 1,0,1 ; q: 0,1\"");
    EXPECT_EQ(text.exit_code, 0);
    EXPECT_NE(text.out.find("2 zeros"), std::string::npos);

    const auto js = run_cli("zeros --rational \"p: 1,0,1 ; q: 0,1\" --json");
    ASSERT_EQ(js.exit_code, 0);
    const auto doc = nlohmann::json::parse(js.out);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["zeros"].size(), 2u);
    EXPECT_EQ(doc["zeros"][0]["sense"], "preserving");
}

TEST(Cli, ZerosFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "hz_cli_spec.txt";
    std::ofstream(path) << "p: 0,1 ; q: 1,0,1\n";
    const auto r = run_cli("zeros --rational @" + path.string());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("3 zeros"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyFamilyPasses) {
    const auto r = run_cli("verify --family rhie --n 4 --a 0.67 --eps 0.04");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("20/20 zeros, at cap, regular"), std::string::npos);
}

TEST(Cli, VerifyRandomJson) {
    const auto r = run_cli("verify --random 5 --degree 3 --seed 7 --json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["instances"].size(), 5u);
}

TEST(Cli, VerifyMigration) {
    const auto r = run_cli("verify --rational \"p: 1,0,1 ; q: 0,1\" --migration 1e-3,1e-5");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("migration"), std::string::npos);
}

TEST(Cli, WindingJson) {
    const auto r = run_cli("winding --rational \"p: 1,0,1 ; q: 0,1\" --radius 3 --json");
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["value"], 1);
}

TEST(Cli, PortraitWritesPpm) {
    const auto path = std::filesystem::temp_directory_path() / "hz_cli_portrait.ppm";
    const auto r = run_cli("portrait --rational \"p: 0,1 ; q: -0.25,0,1\" --resolution 40x30 --out " + path.string());
    ASSERT_EQ(r.exit_code, 0);
    std::ifstream in(path, std::ios::binary);
    std::string magic(2, '\0');
    in.read(magic.data(), 2);
    EXPECT_EQ(magic, "P6");
    EXPECT_EQ(std::filesystem::file_size(path), std::string("P6\n40 30\n255\n").size() + 40u * 30u * 3u);
    std::filesystem::remove(path);
}

TEST(Cli, SweepCsvToStdout) {
    const auto r = run_cli("sweep --family mpw --n 2 --a 0.1:0.3:0.1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "family,n,a,eps,zero_count,n_plus,n_minus,n_singular_flagged,status\n"
              "mpw,2,0.1,0,5,3,2,0,ok\nmpw,2,0.2,0,5,3,2,0,ok\nmpw,2,0.3,0,5,3,2,0,ok\n");
}

TEST(Cli, GalleryDumpAndCensus) {
    const auto dump = run_cli("gallery --dump intro_F");
    EXPECT_EQ(dump.exit_code, 0);
    EXPECT_EQ(dump.out, "p: 0,1 ; q: 1,0,1\n");
    const auto census = run_cli("gallery --census");
    EXPECT_EQ(census.exit_code, 0);
    EXPECT_NE(census.out.find("rhie_n4_coconj"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("zeros --rational garbage").exit_code, 2);
    EXPECT_EQ(run_cli("zeros --rational @/nonexistent/spec.txt").exit_code, 2);
    EXPECT_EQ(run_cli("zeros --rational \"p: 1 ; q: 0,1\"").exit_code, 3);
    EXPECT_EQ(run_cli("verify --rational \"p: 0,2\"").exit_code, 2);
    EXPECT_EQ(run_cli("coconjugate --rational \"p: 1,0,1 ; q: 0,1\" --mobius 1,2,2,4").exit_code, 2);
}
