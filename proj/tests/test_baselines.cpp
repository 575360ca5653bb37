#include <doctest.h>

#include "fairclust/baselines.hpp"
#include "fairclust/fixtures.hpp"
#include "test_support.hpp"

using namespace fairclust;
using tests::line_metric;

TEST_CASE("objective_cost frozen cases") {
    const MetricInstance metric = line_metric({0.0, 1.0, 10.0, 11.0});
    const Clustering singletons = Clustering::from_clusters(4, 4, {{0}, {1}, {2}, {3}});
    CHECK(objective_cost(singletons, metric) == 0.0);

    const MetricInstance pair = line_metric({0.0, 1.0});
    const Clustering one = Clustering::from_clusters(2, 1, {{0, 1}});
    CHECK(objective_cost(one, pair) == doctest::Approx(1.0));  // ordered pairs: 2 * 1 / 2

    const Clustering split = Clustering::from_clusters(4, 2, {{0, 1}, {2, 3}});
    CHECK(objective_cost(split, metric) == doctest::Approx(2.0));
}

TEST_CASE("objective_kmeans frozen cases and the centroid identity") {
    const MetricInstance pair = line_metric({0.0, 1.0});
    const Clustering one = Clustering::from_clusters(2, 1, {{0, 1}});
    CHECK(objective_kmeans(one, pair) == doctest::Approx(1.0));
    CHECK(objective_kmeans_centroid(one, {{0.0}, {1.0}}) == doctest::Approx(0.5));

    const MetricInstance spread = line_metric({0.0, 2.0});
    CHECK(objective_kmeans(one, spread) == doctest::Approx(4.0));

    const Clustering singles = Clustering::from_clusters(2, 2, {{0}, {1}});
    CHECK(objective_kmeans(singles, spread) == 0.0);
}

TEST_CASE("objective_kmeans pairwise form equals twice the centroid form") {
    Rng rng(21);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 3 + rng.next_int(10);
        const int k = 1 + rng.next_int(std::min(n, 4));
        const auto rows = tests::random_rows(rng, n, 1 + rng.next_int(3), -3.0, 3.0);
        const MetricInstance metric = metric_from_points(rows);
        const Clustering c = tests::random_clustering(rng, n, k);
        const double pairwise = objective_kmeans(c, metric);
        const double centroid = objective_kmeans_centroid(c, rows);
        CHECK(pairwise == doctest::Approx(2.0 * centroid).epsilon(1e-9));
    }
}

TEST_CASE("objective_kmedoids frozen cases") {
    const MetricInstance abc = line_metric({0.0, 1.0, 3.0});
    const Clustering one = Clustering::from_clusters(3, 1, {{0, 1, 2}});
    CHECK(objective_kmedoids(one, abc) == doctest::Approx(3.0));  // medoid at 1

    const MetricInstance pair = line_metric({0.0, 10.0});
    const Clustering both = Clustering::from_clusters(2, 1, {{0, 1}});
    CHECK(objective_kmedoids(both, pair) == doctest::Approx(10.0));

    const Clustering singles = Clustering::from_clusters(2, 2, {{0}, {1}});
    CHECK(objective_kmedoids(singles, pair) == 0.0);
}

TEST_CASE("objectives scale as c, c^2, c under metric scaling") {
    Rng rng(31);
    const auto rows = tests::random_rows(rng, 8, 2, 0.0, 5.0);
    const MetricInstance metric = metric_from_points(rows);
    const MetricInstance scaled = metric.scaled(3.0);
    const Clustering c = tests::random_clustering(rng, 8, 3);
    CHECK(objective_cost(c, scaled) == doctest::Approx(3.0 * objective_cost(c, metric)));
    CHECK(objective_kmeans(c, scaled) == doctest::Approx(9.0 * objective_kmeans(c, metric)));
    CHECK(objective_kmedoids(c, scaled) == doctest::Approx(3.0 * objective_kmedoids(c, metric)));
}

TEST_CASE("kmeans_pp degenerate cases") {
    const std::vector<std::vector<double>> rows = {{0.0}, {2.0}, {5.0}, {9.0}};
    SUBCASE("k = n puts every point in its own cluster") {
        const Clustering c = kmeans_pp(rows, 4, SeededRun{7});
        CHECK(c.num_nonempty() == 4);
        CHECK(objective_kmeans_centroid(c, rows) == 0.0);
    }
    SUBCASE("k = 1 is the whole set") {
        const Clustering c = kmeans_pp(rows, 1, SeededRun{7});
        CHECK(c.cluster(0) == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("k > n is rejected") {
        CHECK_THROWS_AS(kmeans_pp(rows, 5, SeededRun{7}), std::invalid_argument);
    }
}

TEST_CASE("kmeans_pp separates well-separated colocated groups for any seed") {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 6; ++i) rows.push_back({0.0, 0.0});
    for (int i = 0; i < 6; ++i) rows.push_back({100.0, 0.0});
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 3ULL, 17ULL, 123456789ULL}) {
        const Clustering c = kmeans_pp(rows, 2, SeededRun{seed});
        const int first = c.cluster_of(0);
        for (int i = 0; i < 6; ++i) CHECK(c.cluster_of(i) == first);
        for (int i = 6; i < 12; ++i) CHECK(c.cluster_of(i) == 1 - first);
    }
}

TEST_CASE("kmedoids degenerate and separated cases") {
    const MetricInstance metric = line_metric({0.0, 2.0, 5.0, 9.0});
    SUBCASE("k = n") {
        const Clustering c = kmedoids(metric, 4, SeededRun{5});
        CHECK(c.num_nonempty() == 4);
        CHECK(objective_kmedoids(c, metric) == 0.0);
    }
    SUBCASE("k = 1") {
        const Clustering c = kmedoids(metric, 1, SeededRun{5});
        CHECK(c.cluster(0) == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("separated groups") {
        const MetricInstance split = line_metric({0.0, 0.0, 0.0, 50.0, 50.0, 50.0});
        for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 9ULL}) {
            const Clustering c = kmedoids(split, 2, SeededRun{seed});
            const int first = c.cluster_of(0);
            for (int i = 0; i < 3; ++i) CHECK(c.cluster_of(i) == first);
            for (int i = 3; i < 6; ++i) CHECK(c.cluster_of(i) == 1 - first);
        }
    }
}

TEST_CASE("baseline runs are deterministic in the seed") {
    Rng rng(41);
    const auto rows = tests::random_rows(rng, 14, 2, 0.0, 10.0);
    const MetricInstance metric = metric_from_points(rows);
    for (std::uint64_t seed : {1ULL, 2ULL, 42ULL}) {
        const Clustering a = kmeans_pp(rows, 3, SeededRun{seed});
        const Clustering b = kmeans_pp(rows, 3, SeededRun{seed});
        CHECK(a.assignment() == b.assignment());
        const Clustering c = kmedoids(metric, 3, SeededRun{seed});
        const Clustering d = kmedoids(metric, 3, SeededRun{seed});
        CHECK(c.assignment() == d.assignment());
    }
}

TEST_CASE("kmedoids tolerates infinite distances") {
    // Three colocated groups, one pair a finite step apart, the rest detached.
    const FixtureInstance fx = gen_incompatibility(12, 2);
    for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
        const Clustering c = kmedoids(fx.metric, 2, SeededRun{seed});
        CHECK(c.num_agents() == 12);
        int covered = 0;
        for (const auto& members : c.clusters()) covered += static_cast<int>(members.size());
        CHECK(covered == 12);
    }
}

TEST_CASE("baselines always return valid clusterings") {
    Rng rng(51);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 4 + rng.next_int(12);
        const int k = 1 + rng.next_int(std::min(n, 5));
        auto rows = tests::random_rows(rng, n, 2, 0.0, 10.0);
        if (rep % 3 == 0) rows[1] = rows[0];  // duplicates exercise the repair path
        const MetricInstance metric = metric_from_points(rows);

        const Clustering a = kmeans_pp(rows, k, SeededRun{rng.next_u64()});
        const Clustering b = kmedoids(metric, k, SeededRun{rng.next_u64()});
        for (const Clustering* c : {&a, &b}) {
            CHECK(c->num_agents() == n);
            int covered = 0;
            for (const auto& members : c->clusters()) covered += static_cast<int>(members.size());
            CHECK(covered == n);
        }
    }
}
