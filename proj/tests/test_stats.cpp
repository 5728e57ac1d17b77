#include <doctest.h>

#include <celebnet/errors.hpp>
#include <celebnet/rng.hpp>
#include <celebnet/stats.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace celebnet;
using testutil::TempDir;

namespace {

FeatureMatrix small_matrix() {
    FeatureMatrix matrix;
    matrix.handles = {"a", "b", "c", "d"};
    matrix.feature_names = {"up", "down", "flat", "noisy"};
    matrix.values = {
        {1.0, 4.0, 9.0, 2.0},
        {2.0, 3.0, 9.0, 9.0},
        {3.0, 2.0, 9.0, 1.0},
        {4.0, 1.0, 9.0, 5.0},
    };
    return matrix;
}

} // namespace

TEST_CASE("rank_values assigns descending average ranks") {
    CHECK(rank_values({3.0, 1.0, 2.0}) == std::vector<double>{1.0, 3.0, 2.0});
    // Tied leaders split ranks 1 and 2.
    CHECK(rank_values({5.0, 5.0, 2.0}) == std::vector<double>{1.5, 1.5, 3.0});
    CHECK(rank_values({7.0, 7.0, 7.0}) == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(rank_values({1.0}) == std::vector<double>{1.0});
    CHECK(rank_values({}).empty());
    // A three-way middle tie spans ranks 2..4.
    CHECK(rank_values({9.0, 4.0, 4.0, 4.0, 1.0}) ==
          std::vector<double>{1.0, 3.0, 3.0, 3.0, 5.0});
}

TEST_CASE("rank pairs entries with their ranks in input order") {
    const RankList list = rank({{"a", 10.0}, {"b", 30.0}, {"c", 20.0}});
    REQUIRE(list.entries.size() == 3);
    CHECK(list.entries[0].first == "a");
    CHECK(list.ranks == std::vector<double>{3.0, 1.0, 2.0});
}

TEST_CASE("spearman hits the exact endpoints") {
    std::vector<double> ascending{1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
    std::vector<double> shifted{11.0, 22.0, 33.0, 44.0, 55.0, 66.0};
    CHECK(spearman_values(ascending, shifted) == 1.0);

    std::vector<double> reversed{6.0, 5.0, 4.0, 3.0, 2.0, 1.0};
    CHECK(spearman_values(ascending, reversed) == -1.0);

    // Monotone transforms leave rho untouched.
    std::vector<double> squared;
    for (double v : ascending) squared.push_back(v * v);
    CHECK(spearman_values(ascending, squared) == 1.0);
}

TEST_CASE("spearman matches the extended-precision oracle on random pairs") {
    Rng rng(777001);
    for (int trial = 0; trial < 200; ++trial) {
        CAPTURE(trial);
        const std::size_t n = 2 + rng.below(29);
        std::vector<double> x(n);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            // below(6) plants plenty of ties.
            x[i] = static_cast<double>(rng.below(6));
            y[i] = static_cast<double>(rng.below(6));
        }
        // Skip the degenerate draws the library rejects.
        const bool x_const = std::all_of(x.begin(), x.end(),
                                         [&](double v) { return v == x.front(); });
        const bool y_const = std::all_of(y.begin(), y.end(),
                                         [&](double v) { return v == y.front(); });
        if (x_const || y_const) {
            continue;
        }
        const double rho = spearman_values(x, y);
        const long double oracle = testutil::spearman_oracle(x, y);
        CHECK(std::abs(rho - static_cast<double>(oracle)) <= 1e-12);
        CHECK(rho <= 1.0);
        CHECK(rho >= -1.0);
    }
}

TEST_CASE("spearman aligns rank lists by handle") {
    const RankList x = rank({{"a", 1.0}, {"b", 2.0}, {"c", 3.0}});
    const RankList y = rank({{"c", 30.0}, {"a", 10.0}, {"b", 20.0}});
    CHECK(spearman(x, y) == 1.0);
}

TEST_CASE("spearman rejects malformed inputs") {
    const RankList abc = rank({{"a", 1.0}, {"b", 2.0}, {"c", 3.0}});
    const RankList ab = rank({{"a", 1.0}, {"b", 2.0}});
    const RankList abd = rank({{"a", 1.0}, {"b", 2.0}, {"d", 3.0}});
    CHECK_THROWS_AS(spearman(abc, ab), ValidationError);
    CHECK_THROWS_AS(spearman(abc, abd), ValidationError);

    const RankList dup = rank({{"a", 1.0}, {"a", 2.0}, {"b", 3.0}});
    CHECK_THROWS_AS(spearman(dup, abc), ValidationError);
    CHECK_THROWS_AS(spearman(abc, dup), ValidationError);

    const RankList one = rank({{"a", 1.0}});
    CHECK_THROWS_AS(spearman(one, one), ValidationError);

    CHECK_THROWS_AS(spearman_values({1.0, 2.0}, {1.0}), ValidationError);
    CHECK_THROWS_AS(spearman_values({}, {}), ValidationError);
    // Constant lists have no defined rank correlation.
    CHECK_THROWS_AS(spearman_values({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), UndefinedError);
}

TEST_CASE("correlation_report sorts by correlation strength") {
    const FeatureMatrix matrix = small_matrix();
    const std::vector<double> target{10.0, 20.0, 30.0, 40.0};
    const auto entries = correlation_report(matrix, target);

    // "flat" never varies and is dropped.
    REQUIRE(entries.size() == 3);
    // Exact-magnitude tie between "up" (+1) and "down" (-1): name order.
    CHECK(entries[0].feature == "down");
    CHECK(entries[0].rho == -1.0);
    CHECK(entries[1].feature == "up");
    CHECK(entries[1].rho == 1.0);
    CHECK(entries[2].feature == "noisy");
    CHECK(std::abs(entries[2].rho) < 1.0);
}

TEST_CASE("correlation_report validates the target") {
    const FeatureMatrix matrix = small_matrix();
    CHECK_THROWS_AS(correlation_report(matrix, {1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(correlation_report(matrix, {2.0, 2.0, 2.0, 2.0}), UndefinedError);

    FeatureMatrix tiny = matrix;
    tiny.handles = {"a"};
    tiny.values = {{1.0, 2.0, 3.0, 4.0}};
    CHECK_THROWS_AS(correlation_report(tiny, {1.0}), ValidationError);
}

TEST_CASE("aggregate_by_bucket averages rows per bucket") {
    FeatureMatrix matrix;
    matrix.handles = {"a", "b", "c"};
    matrix.feature_names = {"f1", "f2"};
    matrix.values = {{1.0, 10.0}, {3.0, 30.0}, {100.0, 0.5}};
    const std::vector<BucketLabel> labels = {
        {"a", Bucket::High}, {"b", Bucket::High}, {"c", Bucket::Low}};

    const auto means = aggregate_by_bucket(matrix, labels);
    REQUIRE(means.size() == 2);
    CHECK(means.at(Bucket::High).at("f1") == doctest::Approx(2.0));
    CHECK(means.at(Bucket::High).at("f2") == doctest::Approx(20.0));
    CHECK(means.at(Bucket::Low).at("f1") == doctest::Approx(100.0));
    CHECK(means.count(Bucket::Mid) == 0);
}

TEST_CASE("aggregate_by_bucket requires a label for every row") {
    FeatureMatrix matrix;
    matrix.handles = {"a", "b"};
    matrix.feature_names = {"f"};
    matrix.values = {{1.0}, {2.0}};
    const std::vector<BucketLabel> labels = {{"a", Bucket::High}};
    CHECK_THROWS_AS(aggregate_by_bucket(matrix, labels), ValidationError);
}

TEST_CASE("correlations csv golden file") {
    TempDir dir;
    write_correlations_csv(dir.file("rho.csv"),
                           {{"rt_c_deg", 0.5}, {"liwc_posemo", -0.25}});
    CHECK(testutil::read_file(dir.file("rho.csv")) ==
          "feature,rho\n"
          "rt_c_deg,0.5\n"
          "liwc_posemo,-0.25\n");
}

TEST_CASE("markdown tables render correlations and bucket means") {
    // Cells pad to the widest entry of their column.
    CHECK(markdown_correlation_table({{"ff", 0.5}}) ==
          "| Feature | Spearman rho |\n"
          "| ------- | ------------ |\n"
          "| ff      | 0.5000       |\n");

    std::map<Bucket, std::map<std::string, double>> aggregates;
    aggregates[Bucket::High] = {{"f1", 1.0}, {"f2", 2.0}};
    aggregates[Bucket::Low] = {{"f1", 0.5}};
    const std::string bucket_table = markdown_bucket_table(aggregates, {"f1", "f2"});
    CHECK(bucket_table ==
          "| Bucket | f1     | f2     |\n"
          "| ------ | ------ | ------ |\n"
          "| HIGH   | 1.0000 | 2.0000 |\n"
          "| LOW    | 0.5000 | -      |\n");
}
