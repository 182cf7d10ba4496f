#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace kfn;

namespace {

WowaMeasure gini2() { return WowaMeasure(WeightVector::normalized({1, 3})); }

FnQuery pair_query(double s) {
    return FnQuery({Vector{0, 0}, Vector{2, 0}}, gini2(), SearchRadius::bounded(s));
}

}  // namespace

TEST(FnQuery, Validation) {
    EXPECT_THROW(FnQuery({}, gini2()), UsageError);
    EXPECT_THROW(FnQuery({Vector{0.0}}, gini2()), UsageError);
    EXPECT_THROW(FnQuery({Vector{0.0}, std::string("a")}, gini2()), UsageError);
    EXPECT_THROW(FnQuery({Vector{0.0}, Vector{0.0, 1.0}}, gini2()), UsageError);
    // Decreasing weights are a fairness measure, not an unfairness one.
    EXPECT_THROW(FnQuery({Vector{0.0}, Vector{1.0}}, WowaMeasure(WeightVector({0.75, 0.25}))),
                 UsageError);
    EXPECT_FALSE(FnQuery({Vector{0.0}, Vector{1.0}}, gini2()).radius().is_bounded());
    EXPECT_THROW(SearchRadius::bounded(-1.0), UsageError);
}

TEST(Score, Examples) {
    auto q = pair_query(1.0);
    DistanceCounter c;
    EXPECT_DOUBLE_EQ(score(q, Vector{1, 0}, c), 1.0);
    EXPECT_EQ(c.count(), 2u);
    EXPECT_DOUBLE_EQ(score(q, Vector{0, 0}, c), 1.5);
    EXPECT_EQ(c.count(), 4u);

    FnQuery single({Vector{3, 4}}, WowaMeasure(WeightVector({1.0})));
    EXPECT_DOUBLE_EQ(score(single, Vector{0, 0}, c), 5.0);
    EXPECT_EQ(c.count(), 5u);
    EXPECT_THROW(score(q, std::string("x"), c), UsageError);
}

TEST(BallOverlap, Examples) {
    auto q = FnQuery({Vector{0.0}, Vector{1.0}}, gini2(), SearchRadius::bounded(5.0));
    EXPECT_FALSE(ball_overlap(q, std::vector<double>{5, 7}, 1.0));
    q.set_radius(SearchRadius::bounded(5.5));
    EXPECT_TRUE(ball_overlap(q, std::vector<double>{5, 7}, 1.0));
    q.set_radius(SearchRadius::bounded(0.0));
    EXPECT_TRUE(ball_overlap(q, std::vector<double>{5, 7}, 7.0));
    EXPECT_TRUE(ball_overlap(q, std::vector<double>{5, 7}, 9.0));
}

TEST(QueryInsideBall, Examples) {
    auto q = FnQuery({Vector{0.0}, Vector{1.0}}, gini2());
    const std::vector<double> x{1, 3};
    EXPECT_FALSE(query_inside_ball(q, x, 1e9, ContainmentMode::weak));
    EXPECT_FALSE(query_inside_ball(q, x, 1e9, ContainmentMode::strong));

    q.set_radius(SearchRadius::bounded(3.9));
    EXPECT_FALSE(query_inside_ball(q, x, 6.0, ContainmentMode::weak));  // 6 - 2.5 = 3.5
    EXPECT_TRUE(query_inside_ball(q, x, 6.0, ContainmentMode::strong));  // 6 - 1.5 = 4.5

    const std::vector<double> same{2, 2};
    q.set_radius(SearchRadius::bounded(4.0));
    EXPECT_TRUE(query_inside_ball(q, same, 6.0, ContainmentMode::weak));
    EXPECT_TRUE(query_inside_ball(q, same, 6.0, ContainmentMode::strong));
    q.set_radius(SearchRadius::bounded(4.0 + 1e-9));
    EXPECT_FALSE(query_inside_ball(q, same, 6.0, ContainmentMode::weak));
    EXPECT_FALSE(query_inside_ball(q, same, 6.0, ContainmentMode::strong));
}

TEST(SinglePivot, ReducesToTextbookRules) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    FnQuery q({Vector{0.0}}, WowaMeasure(WeightVector({1.0})));
    for (int i = 0; i < 1000; ++i) {
        const double d = u(rng), r = u(rng), s = u(rng);
        q.set_radius(SearchRadius::bounded(s));
        const std::vector<double> x{d};
        EXPECT_EQ(ball_overlap(q, x, r), d - r <= s);
        EXPECT_EQ(query_inside_ball(q, x, r, ContainmentMode::weak), r - d >= s);
        EXPECT_EQ(query_inside_ball(q, x, r, ContainmentMode::strong), r - d >= s);
    }
}

// Randomized brute-force checks of the region predicates against actual points.
class PredicateSafety : public ::testing::Test {
protected:
    struct Config {
        std::vector<Point> data;
        FnQuery query;
        Point center;
        double r;
        std::vector<double> x;
        std::vector<double> scores;
    };

    Config random_config(std::mt19937_64& rng) {
        std::uniform_int_distribution<std::size_t> mdist(1, 3), ddist(1, 4);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const std::size_t m = mdist(rng), d = ddist(rng);
        auto data = gen_uniform(60, d, rng());
        auto queries = gen_uniform(m, d, rng());
        const auto p = reference::random_weights(rng, m, false);
        const auto w = reference::random_weights(rng, m, true);
        FnQuery query(queries, WowaMeasure(ImportanceVector(p), WeightVector(w)));
        Point center = gen_uniform(1, d, rng()).front();
        std::vector<double> scores;
        for (const auto& o : data) {
            std::vector<double> xo;
            for (const auto& q : queries) xo.push_back(reference::naive_distance(q, o));
            scores.push_back(reference::naive_wowa(xo, p, w));
        }
        // s somewhere among the actual scores so both outcomes occur.
        auto sorted = scores;
        std::sort(sorted.begin(), sorted.end());
        query.set_radius(SearchRadius::bounded(sorted[std::uniform_int_distribution<std::size_t>(
            0, sorted.size() - 1)(rng)]));
        const double r = u(rng) * std::sqrt(static_cast<double>(d));
        std::vector<double> x;
        for (const auto& q : queries) x.push_back(reference::naive_distance(q, center));
        return {std::move(data), std::move(query), std::move(center), r, std::move(x),
                std::move(scores)};
    }
};

TEST_F(PredicateSafety, OverlapHasNoFalseNegatives) {
    std::mt19937_64 rng(21);
    int positives = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto cfg = random_config(rng);
        const double s = cfg.query.radius().value();
        bool witness = false;
        for (std::size_t i = 0; i < cfg.data.size(); ++i) {
            if (reference::naive_distance(cfg.center, cfg.data[i]) <= cfg.r && cfg.scores[i] <= s) {
                witness = true;
            }
        }
        if (witness) {
            ++positives;
            EXPECT_TRUE(ball_overlap(cfg.query, cfg.x, cfg.r)) << "trial " << trial;
        }
    }
    EXPECT_GT(positives, 100);
}

TEST_F(PredicateSafety, ContainmentIsSafeAndStrongDominatesWeak) {
    std::mt19937_64 rng(22);
    int strong_true = 0, weak_true = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        auto cfg = random_config(rng);
        const double s = cfg.query.radius().value();
        const bool weak = query_inside_ball(cfg.query, cfg.x, cfg.r, ContainmentMode::weak);
        const bool strong = query_inside_ball(cfg.query, cfg.x, cfg.r, ContainmentMode::strong);
        if (weak) EXPECT_TRUE(strong) << "trial " << trial;
        strong_true += strong;
        weak_true += weak;
        if (!strong) continue;
        for (std::size_t i = 0; i < cfg.data.size(); ++i) {
            if (cfg.scores[i] <= s) {
                EXPECT_LE(reference::naive_distance(cfg.center, cfg.data[i]), cfg.r)
                    << "trial " << trial << " point " << i;
            }
        }
    }
    EXPECT_GT(strong_true, weak_true);
    EXPECT_GT(weak_true, 0);
}

TEST_F(PredicateSafety, UpperCornerAcceptIsSound) {
    std::mt19937_64 rng(23);
    int accepted = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto cfg = random_config(rng);
        if (!ball_inside_query(cfg.query, cfg.x, cfg.r)) continue;
        ++accepted;
        for (std::size_t i = 0; i < cfg.data.size(); ++i) {
            if (reference::naive_distance(cfg.center, cfg.data[i]) <= cfg.r) {
                EXPECT_LE(cfg.scores[i], cfg.query.radius().value() + 1e-12);
            }
        }
    }
    EXPECT_GT(accepted, 0);
}
