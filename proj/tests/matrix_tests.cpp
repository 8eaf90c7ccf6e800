#include "allmatch/matrix.hpp"
#include "allmatch/errors.hpp"
#include "allmatch/rng.hpp"

#include <nlohmann/json.hpp>

#include "doctest.h"

using namespace allmatch;

namespace {
const ZeroOneMatrix I2 = make_matrix({{1, 0}, {0, 1}});
const ZeroOneMatrix K22 = make_matrix({{1, 1}, {1, 1}});
}

TEST_CASE("make_matrix shapes and validation") {
    CHECK(I2.rows() == 2);
    CHECK(I2.cols() == 2);
    CHECK(I2.at(1, 1) == 1);
    CHECK(I2.at(1, 2) == 0);
    CHECK(I2.at(2, 1) == 0);
    CHECK(I2.at(2, 2) == 1);

    const ZeroOneMatrix empty = make_matrix({});
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);

    CHECK_THROWS_WITH_AS(make_matrix({{1, 0}, {0, 1, 1}}), "ragged row 2",
                         ValidationError);
    CHECK_THROWS_AS(make_matrix({{1, 2}}), ValidationError);
    try {
        make_matrix({{0, 0}, {0, 7}});
        CHECK(false);
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 2") != std::string::npos);
        CHECK(msg.find("column 2") != std::string::npos);
    }
}

TEST_CASE("ColumnSet basics") {
    const ColumnSet w = first_row_support(make_matrix({{1, 0, 1}}));
    CHECK(w.size() == 2);
    CHECK(w.contains(1));
    CHECK(!w.contains(2));
    CHECK(w.contains(3));
    CHECK(w.columns() == std::vector<int>{1, 3});
    CHECK(w.nth(0) == 1);
    CHECK(w.nth(1) == 3);

    CHECK(first_row_support(make_matrix({{0, 0}})).empty());
    CHECK(first_row_support(make_matrix({{1, 1}})).columns() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(first_row_support(make_matrix({})), ValidationError);
}

TEST_CASE("remove_first_row") {
    CHECK(remove_first_row(make_matrix({{1, 1}, {0, 1}})) == make_matrix({{0, 1}}));

    const ZeroOneMatrix r = remove_first_row(make_matrix({{1}}));
    CHECK(r.rows() == 0);
    CHECK(r.cols() == 1);

    CHECK_THROWS_AS(remove_first_row(make_matrix({})), ValidationError);
}

TEST_CASE("remove_first_row_and_column") {
    CHECK(remove_first_row_and_column(I2, 1) == make_matrix({{1}}));
    CHECK(remove_first_row_and_column(K22, 2) == make_matrix({{1}}));

    const ZeroOneMatrix r = remove_first_row_and_column(make_matrix({{1}}), 1);
    CHECK(r.rows() == 0);
    CHECK(r.cols() == 0);

    CHECK_THROWS_AS(remove_first_row_and_column(K22, 0), ValidationError);
    CHECK_THROWS_AS(remove_first_row_and_column(K22, 3), ValidationError);
}

TEST_CASE("remove_first_row_and_column equals remove_first_row then column delete") {
    // property over every 3x3 matrix and every column
    for (unsigned bits = 0; bits < 512; ++bits) {
        std::vector<std::vector<int>> rows(3, std::vector<int>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rows[i][j] = (bits >> (3 * i + j)) & 1;
        const ZeroOneMatrix a = make_matrix(rows);
        for (int j = 1; j <= 3; ++j)
            CHECK(remove_first_row_and_column(a, j) ==
                  remove_column(remove_first_row(a), j));
    }
}

TEST_CASE("extend_transform block structure") {
    CHECK(extend_transform(make_matrix({{1}})) == K22);

    const ZeroOneMatrix e = extend_transform(I2);
    CHECK(e == make_matrix({{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}));

    const ZeroOneMatrix f = extend_transform(make_matrix({{1, 1}, {0, 1}}));
    CHECK(f.at(1, 1) == 1);
    CHECK(f.at(1, 2) == 1);
    CHECK(f.at(2, 1) == 0);
    CHECK(f.at(2, 2) == 1);

    CHECK_THROWS_AS(extend_transform(make_matrix({{1, 0}})), ValidationError);

    // ones(B) = ones(A) + n + 2n^2 for a few random square matrices
    SplitMix64 rng(31);
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (auto& r : rows)
            for (auto& v : r) v = static_cast<int>(rng.next() & 1);
        const ZeroOneMatrix a = make_matrix(rows);
        CHECK(extend_transform(a).ones() ==
              a.ones() + n + 2L * n * n);
    }
}

TEST_CASE("text serialization") {
    CHECK(write_matrix_text(I2) == "10\n01\n");
    CHECK(read_matrix_text("10\n01\n") == I2);
    CHECK(read_matrix_text("") == make_matrix({}));
    CHECK(read_matrix_text("10\n01") == I2); // tolerate missing final newline

    CHECK_THROWS_WITH_AS(read_matrix_text("10\n011\n"), "ragged row 2",
                         ValidationError);
    CHECK_THROWS_AS(read_matrix_text("12\n"), ValidationError);
    CHECK_THROWS_AS(read_matrix_text("1 0\n"), ValidationError);

    SplitMix64 rng(77);
    for (int t = 0; t < 50; ++t) {
        const int m = 1 + static_cast<int>(rng.next_below(5));
        const int n = 1 + static_cast<int>(rng.next_below(6));
        std::vector<std::vector<int>> rows(m, std::vector<int>(n));
        for (auto& r : rows)
            for (auto& v : r) v = static_cast<int>(rng.next() & 1);
        const ZeroOneMatrix a = make_matrix(rows);
        CHECK(read_matrix_text(write_matrix_text(a)) == a);
    }
}

TEST_CASE("json serialization") {
    const nlohmann::json j = {{"rows", 2}, {"cols", 2}, {"data", {"10", "01"}}};
    CHECK(read_matrix_json(j) == I2);
    CHECK(read_matrix_json(write_matrix_json(K22)) == K22);

    // 0 x 2 survives the JSON form even though the text form cannot hold it
    const ZeroOneMatrix zr = remove_first_row(make_matrix({{1, 1}}));
    CHECK(read_matrix_json(write_matrix_json(zr)) == zr);

    nlohmann::json bad = j;
    bad["data"] = {"10", "011"};
    CHECK_THROWS_AS(read_matrix_json(bad), ValidationError);
    bad["data"] = {"10", "0x"};
    CHECK_THROWS_AS(read_matrix_json(bad), ValidationError);
}

TEST_CASE("parse_matrix sniffs the format") {
    CHECK(parse_matrix("11\n11\n") == K22);
    CHECK(parse_matrix(R"({"rows":2,"cols":2,"data":["11","11"]})") == K22);
}
