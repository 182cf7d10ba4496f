#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kfn/datasets.hpp"
#include "kfn/fn_query.hpp"
#include "kfn/lc_index.hpp"

namespace kfn {

enum class CorpusKind { uniform, clustered, vectors_file, strings_file };

struct CorpusSpec {
    CorpusKind kind = CorpusKind::uniform;
    std::filesystem::path path;  ///< file corpora only
    VectorFormat vector_format = VectorFormat::plain;
    std::size_t dim = 4;            ///< synthetic only
    std::size_t n = 20000;          ///< synthetic database size
    std::size_t per_cluster = 100;  ///< clustered: n / per_cluster centers
    double sigma = 1.0;             ///< clustered noise scale
    std::string label;              ///< defaults to the kind or the file stem
};

struct ExperimentConfig {
    CorpusSpec corpus;
    std::size_t bucket_size = 20;
    CenterSelection selection = CenterSelection::max_sum_distance;
    std::vector<double> weights{1.0, 3.0};  ///< raw; normalized on use
    std::vector<double> importance;         ///< raw; empty means uniform
    std::size_t k_max = 5;
    ContainmentMode containment = ContainmentMode::strong;
    std::uint64_t seed = 1;
    std::size_t n_groups = 100;
    bool verify = false;  ///< check every combined result against a linear scan
};

/// One line of the results table. Speedup = scan count / mean distance count.
struct ResultRow {
    std::string label;
    std::optional<std::size_t> dim;
    std::uint64_t scan_count = 0;
    std::vector<double> double_speedup;    ///< index k-1
    std::vector<double> combined_speedup;  ///< index k-1
};

struct ExperimentResult {
    ResultRow row;
    std::size_t database_size = 0;
    std::uint64_t build_distance_count = 0;
    /// [k-1][group] distance counts.
    std::vector<std::vector<std::uint64_t>> combined_counts;
    std::vector<std::vector<std::uint64_t>> double_counts;
};

/// Measure from the raw config weights; throws UsageError when invalid.
WowaMeasure measure_from(const ExperimentConfig& config);

ExperimentCorpus build_corpus(const ExperimentConfig& config);

/// Builds the corpus and index once, then for every k in 1..k_max runs the
/// combined kFN search and the separate-query baseline on every query group
/// and averages the distance counts.
ExperimentResult run_experiment(const ExperimentConfig& config);

enum class TableFormat { csv, markdown };

/// Columns: data set, dim, scan, double 1..K, combined 1..K. CSV keeps full
/// precision; markdown rounds speedups to two decimals. k_columns is used
/// only when rows is empty.
std::string emit_table(std::span<const ResultRow> rows, TableFormat format,
                       std::size_t k_columns = 5);

/// Reads back the CSV produced by emit_table.
std::vector<ResultRow> parse_csv_table(const std::string& text);

/// Geometric means over every (row, k) cell of combined/double and
/// combined/scan distance-count proportions.
struct ProportionSummary {
    double combined_over_double = 0.0;
    double combined_over_scan = 0.0;
};
ProportionSummary summarize(std::span<const ResultRow> rows);

}  // namespace kfn
