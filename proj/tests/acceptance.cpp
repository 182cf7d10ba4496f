// Acceptance suite: one PASS/FAIL/SKIP line per criterion, nonzero exit on any FAIL.
//
// SISAP corpora are optional; point these variables at local copies to enable
// the real-world criterion:
//   KFN_COLORS, KFN_NASA   vector files (plain by default, KFN_SISAP_FORMAT=headered)
//   KFN_LISTERIA           one string per line

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "support/oracles.hpp"

using namespace kfn;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
    Verdict verdict;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome exactness_suite() {
    const auto start = Clock::now();
    std::mt19937_64 rng(2024);
    std::size_t trials = 0, mismatches = 0;
    std::string first_failure;

    auto run_trial = [&](std::vector<Point> pts, std::vector<Point> queries, std::size_t k,
                         const std::string& tag) {
        const std::size_t m = queries.size();
        const auto p = reference::random_weights(rng, m, false);
        const auto w = reference::random_weights(rng, m, true);
        auto data = std::make_shared<const Dataset>(std::move(pts));
        const auto index = build_lc_index(data, {});
        const FnQuery query(std::move(queries), WowaMeasure(ImportanceVector(p), WeightVector(w)));
        const auto got = kfn_search(index, query, k);
        const auto want = linear_scan_kfn(*data, query, k);
        ++trials;
        bool same = got.hits.size() == want.hits.size();
        for (std::size_t i = 0; same && i < got.hits.size(); ++i) {
            same = got.hits[i].id == want.hits[i].id &&
                   std::abs(got.hits[i].score - want.hits[i].score) <= 1e-9;
        }
        if (!same) {
            ++mismatches;
            if (first_failure.empty()) first_failure = tag;
        }
    };

    for (int rep = 0; rep < 4; ++rep) {
        for (bool clustered : {false, true}) {
            for (std::size_t n : {1000u, 5000u}) {
                for (std::size_t d : {2u, 4u, 8u}) {
                    for (std::size_t m : {2u, 3u}) {
                        for (std::size_t k : {1u, 5u}) {
                            std::vector<Point> pts, qs;
                            if (clustered) {
                                ClusteredGenerator gen(n / 100, d, 1.0, rng());
                                pts = gen.members(100);
                                qs = gen.sample(m, rng());
                            } else {
                                pts = gen_uniform(n, d, rng());
                                qs = gen_uniform(m, d, rng());
                            }
                            std::ostringstream tag;
                            tag << (clustered ? "clustered" : "uniform") << " N=" << n
                                << " D=" << d << " m=" << m << " k=" << k;
                            run_trial(std::move(pts), std::move(qs), k, tag.str());
                        }
                    }
                }
            }
        }
        for (std::size_t m : {2u, 3u}) {
            for (std::size_t k : {1u, 5u}) {
                run_trial(reference::random_strings(rng, 1000, 16),
                          reference::random_strings(rng, m, 16), k,
                          "strings m=" + std::to_string(m) + " k=" + std::to_string(k));
            }
        }
    }
    const double secs = seconds_since(start);
    std::ostringstream detail;
    detail << trials << " trials, " << mismatches << " mismatches, " << secs << " s";
    if (!first_failure.empty()) detail << "; first mismatch: " << first_failure;
    const bool ok = trials >= 200 && mismatches == 0 && secs < 120.0;
    return {ok ? Verdict::pass : Verdict::fail, detail.str()};
}

Outcome reversal_identity() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> mdist(1, 8);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t m = mdist(rng);
        const ImportanceVector p(reference::random_weights(rng, m, false));
        const WeightVector w(reference::random_weights(rng, m, false));
        std::vector<double> x(m), complement(m);
        for (std::size_t i = 0; i < m; ++i) {
            x[i] = u(rng);
            complement[i] = 1.0 - x[i];
        }
        const double lhs = wowa(x, WowaMeasure(p, w.reversed()));
        const double rhs = 1.0 - wowa(complement, WowaMeasure(p, w));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    std::ostringstream detail;
    detail << "10000 samples, max deviation " << worst;
    return {worst <= 1e-12 ? Verdict::pass : Verdict::fail, detail.str()};
}

Outcome facet_extremality() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::uniform_int_distribution<std::size_t> mdist(1, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = mdist(rng);
        const auto p = reference::random_weights(rng, m, false);
        const auto w = reference::random_weights(rng, m, true);
        std::vector<double> x(m);
        for (auto& v : x) v = u(rng);
        const WowaMeasure measure{ImportanceVector(p), WeightVector(w)};
        const auto [hi, lo] = reference::facet_extremes(x, p, w);
        worst = std::max(worst, std::abs(wowa_facet(x, measure, FacetOrder::ascending) - hi));
        worst = std::max(worst, std::abs(wowa_facet(x, measure, FacetOrder::descending) - lo));
    }
    std::ostringstream detail;
    detail << "1000 samples, m <= 6, max deviation from enumeration " << worst;
    return {worst <= 1e-12 ? Verdict::pass : Verdict::fail, detail.str()};
}

Outcome bound_strength() {
    ExperimentConfig config;
    config.corpus.kind = CorpusKind::clustered;
    config.corpus.dim = 4;
    config.corpus.n = 20000;
    const auto corpus = build_corpus(config);
    const auto measure = measure_from(config);
    auto data = std::make_shared<const Dataset>(corpus.database);
    const auto index = build_lc_index(data, {});

    std::size_t count_violations = 0, pairs_earlier = 0;
    std::uint64_t strong_total = 0, weak_total = 0;
    for (const auto& group : corpus.query_groups) {
        const FnQuery query(group, measure);
        bool earlier = false;
        for (std::size_t k = 1; k <= config.k_max; ++k) {
            const auto strong = kfn_search(index, query, k, {ContainmentMode::strong});
            const auto weak = kfn_search(index, query, k, {ContainmentMode::weak});
            if (strong.distance_count > weak.distance_count) ++count_violations;
            if (strong.clusters_visited < weak.clusters_visited) earlier = true;
            strong_total += strong.distance_count;
            weak_total += weak.distance_count;
        }
        pairs_earlier += earlier;
    }
    const double share = static_cast<double>(pairs_earlier) /
                         static_cast<double>(corpus.query_groups.size());
    std::ostringstream detail;
    detail << count_violations << " runs where strong cost more; strong halts earlier for "
           << pairs_earlier << "/" << corpus.query_groups.size() << " pairs; total counts strong "
           << strong_total << " vs weak " << weak_total;
    return {count_violations == 0 && share >= 0.01 ? Verdict::pass : Verdict::fail, detail.str()};
}

Outcome table_structure() {
    const auto start = Clock::now();
    std::vector<ResultRow> rows;
    std::size_t bad_cells = 0;
    std::ostringstream detail;
    for (auto kind : {CorpusKind::uniform, CorpusKind::clustered}) {
        for (std::size_t d : {4u, 10u}) {
            ExperimentConfig config;
            config.corpus.kind = kind;
            config.corpus.dim = d;
            config.corpus.n = 20000;
            const auto result = run_experiment(config);
            const auto& row = result.row;
            for (std::size_t k = 0; k < config.k_max; ++k) {
                const double dbl = row.double_speedup[k], comb = row.combined_speedup[k];
                if (!(comb > dbl && dbl > 1.0)) ++bad_cells;
            }
            detail << row.label << "-" << d << " k=1 double " << row.double_speedup[0]
                   << " combined " << row.combined_speedup[0] << "; ";
            rows.push_back(row);
        }
    }
    const auto summary = summarize(rows);
    const double secs = seconds_since(start);
    detail << bad_cells << " cells out of order; geometric-mean combined/double "
           << summary.combined_over_double << "; " << secs << " s";
    const bool ok = bad_cells == 0 && summary.combined_over_double <= 0.7 && secs < 600.0;
    return {ok ? Verdict::pass : Verdict::fail, detail.str()};
}

Outcome sisap_counts() {
    struct Corpus {
        const char* env;
        const char* label;
        bool strings;
        std::uint64_t scan;
        double published_k1;
    };
    const Corpus corpora[] = {{"KFN_COLORS", "Colors", false, 225162, 5.55},
                              {"KFN_NASA", "NASA", false, 80098, 2.64},
                              {"KFN_LISTERIA", "Listeria", true, 41118, 1.28}};
    const char* fmt = std::getenv("KFN_SISAP_FORMAT");
    const bool headered = fmt && std::string(fmt) == "headered";

    std::ostringstream detail;
    std::size_t present = 0, failures = 0;
    for (const auto& c : corpora) {
        const char* path = std::getenv(c.env);
        if (!path || !std::filesystem::exists(path)) continue;
        ++present;
        ExperimentConfig config;
        config.corpus.kind = c.strings ? CorpusKind::strings_file : CorpusKind::vectors_file;
        config.corpus.path = path;
        config.corpus.vector_format = headered ? VectorFormat::headered : VectorFormat::plain;
        config.corpus.label = c.label;
        config.k_max = 1;
        const auto result = run_experiment(config);
        const double got = result.row.combined_speedup[0];
        const bool ok = result.row.scan_count == c.scan && got >= 0.6 * c.published_k1 &&
                        got <= 1.4 * c.published_k1;
        failures += !ok;
        detail << c.label << " scan " << result.row.scan_count << " (want " << c.scan
               << "), combined k=1 " << got << " (published " << c.published_k1 << "); ";
    }
    if (present == 0) {
        return {Verdict::skip, "no SISAP files supplied (set KFN_COLORS, KFN_NASA, KFN_LISTERIA)"};
    }
    return {failures == 0 ? Verdict::pass : Verdict::fail, detail.str()};
}

Outcome property_suites() {
    std::mt19937_64 rng(99);
    std::size_t violations = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const auto v = gen_uniform(3, 1 + trial % 8, rng());
        const auto s = reference::random_strings(rng, 3, 12, "abc");
        for (const auto* pts : {&v, &s}) {
            const auto& a = (*pts)[0];
            const auto& b = (*pts)[1];
            const auto& c = (*pts)[2];
            const double tol = pts == &v ? 1e-9 : 0.0;
            const double ab = distance(a, b), bc = distance(b, c), ac = distance(a, c);
            violations += !(ab >= 0.0);
            violations += distance(a, a) != 0.0;
            violations += ab != distance(b, a);
            violations += ac > ab + bc + tol;
        }
    }
    std::size_t roundtrip_failures = 0;
    std::uniform_real_distribution<double> wide(-1e9, 1e9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 30; ++i) {
            Vector x(1 + trial % 5);
            for (auto& e : x) e = std::ldexp(wide(rng), trial % 60 - 30);
            pts.emplace_back(std::move(x));
        }
        for (auto f : {VectorFormat::plain, VectorFormat::headered}) {
            std::stringstream buf;
            write_vectors(buf, pts, f);
            roundtrip_failures += read_vectors(buf, f) != pts;
        }
        std::vector<Point> strs;
        for (auto& p : reference::random_strings(rng, 30, 15, "acgtXYZ ")) {
            if (!std::get<std::string>(p).empty()) strs.push_back(std::move(p));
        }
        std::stringstream sbuf;
        write_strings(sbuf, strs);
        roundtrip_failures += read_strings(sbuf) != strs;
    }
    std::ostringstream detail;
    detail << violations << " metric-axiom violations over 4000 triples; " << roundtrip_failures
           << " loader round-trip failures";
    return {violations == 0 && roundtrip_failures == 0 ? Verdict::pass : Verdict::fail,
            detail.str()};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"exactness: kfn_search equals linear scan", exactness_suite},
        {"reversal identity WOWA(x;p,w') = 1 - WOWA(1-x;p,w)", reversal_identity},
        {"facet extremality vs m! enumeration", facet_extremality},
        {"strong containment never costlier, halts earlier", bound_strength},
        {"desk-scale table ordering and proportion", table_structure},
        {"SISAP scan counts and speedups", sisap_counts},
        {"metric axioms and loader round trip", property_suites},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome out;
        try {
            out = check();
        } catch (const std::exception& e) {
            out = {Verdict::fail, std::string("exception: ") + e.what()};
        }
        const char* tag = out.verdict == Verdict::pass   ? "PASS"
                          : out.verdict == Verdict::skip ? "SKIP"
                                                         : "FAIL";
        failures += out.verdict == Verdict::fail;
        std::cout << "[" << tag << "] " << name << ": " << out.detail << std::endl;
    }
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
