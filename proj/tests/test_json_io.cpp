#include "cycloschur/json_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace cycloschur;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("cycloschur_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(JsonIo, IntegerRoundTrip) {
    const Integer big("-123456789012345678901234567890");
    EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
    EXPECT_EQ(integer_from_json(Json(42)), 42);
    EXPECT_EQ(integer_from_json(Json(-7)), -7);
    EXPECT_THROW((void)integer_from_json(Json("1.5")), JsonInputError);
    EXPECT_THROW((void)integer_from_json(Json(true)), JsonInputError);
}

TEST(JsonIo, MatrixRoundTrip) {
    RationalMatrix m = RationalMatrix::from_rows({{1, -1, 0}, {0, 1, 1}});
    m(0, 2) = Rational(3, 7);
    const Json j = matrix_to_json(m);
    EXPECT_EQ(j[0][2], "3/7");
    EXPECT_EQ(matrix_from_json(j), m);
    EXPECT_EQ(matrix_from_json(parse_json_text("[[1, \"-2\"], [3, 4]]")), RationalMatrix::from_rows({{1, -2}, {3, 4}}));
    EXPECT_EQ(matrix_from_json(parse_json_text("[]")).rows(), 0u);
}

TEST(JsonIo, MatrixShapeErrors) {
    EXPECT_THROW((void)matrix_from_json(parse_json_text("{\"a\": 1}")), JsonInputError);
    EXPECT_THROW((void)matrix_from_json(parse_json_text("[[1, 2], [3]]")), JsonInputError);
    EXPECT_THROW((void)matrix_from_json(parse_json_text("[[1, \"x\"]]")), JsonInputError);
}

TEST(JsonIo, ParseErrorsCarryLines) {
    try {
        (void)parse_json_text("[\n[1, 2],\n[3, 4\n");
        FAIL() << "expected a parse error";
    } catch (const JsonInputError& e) {
        EXPECT_GE(e.line(), 3u);
    }
}

TEST(JsonIo, FileRowErrorsPointAtTheRow) {
    const auto path = write_temp("rows.json", "[\n  [1, 0],\n  [0, 1],\n  [1]\n]\n");
    try {
        (void)read_matrix_file(path);
        FAIL() << "expected a row error";
    } catch (const JsonInputError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
    const auto good = write_temp("good.json", "[[1, 1], [-1, 1]]");
    EXPECT_EQ(read_matrix_file(good), RationalMatrix::from_rows({{1, 1}, {-1, 1}}));
    EXPECT_THROW((void)read_matrix_file("/nonexistent/matrix.json"), JsonInputError);
}

TEST(JsonIo, NetworkRoundTrip) {
    const auto built = bipartite_construction(2, 2);
    const Json j = network_to_json(built.network);
    EXPECT_EQ(network_from_json(j), built.network);
    EXPECT_EQ(network_from_json(parse_json_text(j.dump())), built.network);
    EXPECT_THROW((void)network_from_json(parse_json_text("{\"vertices\": [\"a\"], \"tree\": []}")), JsonInputError);
    EXPECT_THROW((void)network_from_json(parse_json_text("{\"vertices\": [\"a\", \"b\"], \"tree\": [[\"a\"]], \"edges\": []}")),
                 JsonInputError);
}

TEST(JsonIo, PolynomialAndRows) {
    EXPECT_EQ(polynomial_to_json(cyclotomic_poly(12)).dump(), "[1,0,-1,0,1]");
    EXPECT_EQ(coefficients_to_json({Integer("100000000000000000000")}).dump(), "[\"100000000000000000000\"]");
    EXPECT_EQ(schur_row_to_json(105, Partition::column(7), 2).dump(), "{\"n\":105,\"lambda\":[1,1,1,1,1,1,1],\"value\":2}");
}

TEST(JsonIo, VerdictSchema) {
    const Json pass = verdict_to_json(verify_theorem(15, 4));
    EXPECT_EQ(pass["schema"], "1");
    EXPECT_EQ(pass["n"], 15);
    EXPECT_EQ(pass["star"], true);
    EXPECT_EQ(pass["direct"]["pass"], true);
    EXPECT_FALSE(pass["direct"].contains("counterexample"));
    EXPECT_EQ(pass["structural"]["mode"], "exhaustive");
    EXPECT_EQ(pass["structural"]["a"], "1");
    EXPECT_EQ(pass["consistent"], true);

    const Json fail = verdict_to_json(verify_theorem(105, 7));
    EXPECT_EQ(fail["star"], false);
    EXPECT_EQ(fail["direct"]["counterexample"]["value"], 2);
    EXPECT_EQ(fail["structural"]["mode"], "sampled");
    EXPECT_TRUE(fail["structural"]["a"].is_null());
    EXPECT_TRUE(fail["structural"].contains("witness"));
    // Deterministic for fixed options.
    EXPECT_EQ(fail.dump(), verdict_to_json(verify_theorem(105, 7)).dump());
}
