#include "kfn/experiment.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "kfn/baselines.hpp"
#include "kfn/errors.hpp"

namespace kfn {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string default_label(const CorpusSpec& spec) {
    if (!spec.label.empty()) return spec.label;
    switch (spec.kind) {
        case CorpusKind::uniform: return "Uniform";
        case CorpusKind::clustered: return "Clustered";
        default: return spec.path.stem().string();
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

template <typename T>
T parse_field(const std::string& s, std::size_t line) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("bad CSV field '" + s + "'", line);
    }
    return v;
}

}  // namespace

WowaMeasure measure_from(const ExperimentConfig& config) {
    auto w = WeightVector::normalized(config.weights);
    auto p = config.importance.empty() ? ImportanceVector::uniform(w.size())
                                       : ImportanceVector::normalized(config.importance);
    WowaMeasure measure(std::move(p), std::move(w));
    if (!measure.is_unfairness()) throw UsageError("weights must be nondecreasing");
    return measure;
}

ExperimentCorpus build_corpus(const ExperimentConfig& config) {
    const auto& spec = config.corpus;
    const std::size_t m = config.weights.size();
    const std::size_t sources = config.n_groups + m - 1;
    ExperimentCorpus corpus;
    switch (spec.kind) {
        case CorpusKind::uniform:
            corpus = make_corpus(gen_uniform(spec.n, spec.dim, config.seed),
                                 gen_uniform(sources, spec.dim, config.seed + 1), config.n_groups,
                                 m);
            corpus.dim = spec.dim;
            break;
        case CorpusKind::clustered: {
            if (spec.per_cluster < 1 || spec.n < spec.per_cluster) {
                throw UsageError("clustered corpus needs n >= per_cluster >= 1");
            }
            ClusteredGenerator gen(spec.n / spec.per_cluster, spec.dim, spec.sigma, config.seed);
            corpus = make_corpus(gen.members(spec.per_cluster), gen.sample(sources, config.seed + 1),
                                 config.n_groups, m);
            corpus.dim = spec.dim;
            break;
        }
        case CorpusKind::vectors_file:
            corpus = make_corpus(load_vectors(spec.path, spec.vector_format), config.n_groups, m);
            corpus.dim = std::get<Vector>(corpus.database.front()).size();
            break;
        case CorpusKind::strings_file:
            corpus = make_corpus(load_strings(spec.path), config.n_groups, m);
            break;
    }
    corpus.label = default_label(spec);
    return corpus;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    if (config.k_max < 1) throw UsageError("k_max must be at least 1");
    if (config.weights.size() < 2) {
        throw UsageError("the separate-query baseline needs at least two query objects");
    }
    const WowaMeasure measure = measure_from(config);
    ExperimentCorpus corpus = build_corpus(config);

    auto data = std::make_shared<const Dataset>(std::move(corpus.database));
    BuildOptions build_options;
    build_options.bucket_size = config.bucket_size;
    build_options.selection = config.selection;
    const LcIndex index = build_lc_index(data, build_options);
    const SearchOptions search_options{config.containment};

    ExperimentResult result;
    result.database_size = data->size();
    result.build_distance_count = index.build_distance_count();
    result.combined_counts.assign(config.k_max, {});
    result.double_counts.assign(config.k_max, {});

    for (const auto& group : corpus.query_groups) {
        const FnQuery query(group, measure);
        const KfnOracle oracle(*data, query);
        for (std::size_t k = 1; k <= config.k_max; ++k) {
            const auto combined = kfn_search(index, query, k, search_options);
            if (config.verify) {
                const auto reference = linear_scan_kfn(*data, query, k);
                if (combined.hits != reference.hits) {
                    throw std::logic_error("verify: combined search differs from linear scan");
                }
            }
            const auto separate = separate_queries(index, query, k, oracle, search_options);
            result.combined_counts[k - 1].push_back(combined.distance_count);
            result.double_counts[k - 1].push_back(separate.result.distance_count);
        }
    }

    auto& row = result.row;
    row.label = corpus.label;
    row.dim = corpus.dim;
    row.scan_count = static_cast<std::uint64_t>(measure.arity()) * data->size();
    auto speedup = [&](const std::vector<std::uint64_t>& counts) {
        double sum = 0.0;
        for (auto c : counts) sum += static_cast<double>(c);
        return static_cast<double>(row.scan_count) / (sum / static_cast<double>(counts.size()));
    };
    for (std::size_t k = 0; k < config.k_max; ++k) {
        row.double_speedup.push_back(speedup(result.double_counts[k]));
        row.combined_speedup.push_back(speedup(result.combined_counts[k]));
    }
    return result;
}

std::string emit_table(std::span<const ResultRow> rows, TableFormat format, std::size_t k_columns) {
    const std::size_t k = rows.empty() ? k_columns : rows.front().combined_speedup.size();
    for (const auto& r : rows) {
        if (r.double_speedup.size() != k || r.combined_speedup.size() != k) {
            throw UsageError("emit_table: rows disagree on the number of k columns");
        }
    }
    std::ostringstream out;
    if (format == TableFormat::csv) {
        out << "dataset,dim,scan";
        for (std::size_t i = 1; i <= k; ++i) out << ",double_" << i;
        for (std::size_t i = 1; i <= k; ++i) out << ",combined_" << i;
        out << '\n';
        for (const auto& r : rows) {
            out << r.label << ',' << (r.dim ? std::to_string(*r.dim) : "") << ',' << r.scan_count;
            for (double s : r.double_speedup) out << ',' << shortest(s);
            for (double s : r.combined_speedup) out << ',' << shortest(s);
            out << '\n';
        }
        return out.str();
    }

    out << "| Data set | Dim. | Scan |";
    for (std::size_t i = 1; i <= k; ++i) out << " Double " << i << " |";
    for (std::size_t i = 1; i <= k; ++i) out << " Combined " << i << " |";
    out << "\n|---|---:|---:|";
    for (std::size_t i = 0; i < 2 * k; ++i) out << "---:|";
    out << '\n';
    for (const auto& r : rows) {
        out << "| " << r.label << " | " << (r.dim ? std::to_string(*r.dim) : "---") << " | "
            << r.scan_count << " |";
        for (double s : r.double_speedup) out << ' ' << fixed2(s) << " |";
        for (double s : r.combined_speedup) out << ' ' << fixed2(s) << " |";
        out << '\n';
    }
    return out.str();
}

std::vector<ResultRow> parse_csv_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty table", 1);
    const auto header = split_csv(line);
    if (header.size() < 3 || (header.size() - 3) % 2 != 0 || header[0] != "dataset") {
        throw ParseError("unrecognized table header", 1);
    }
    const std::size_t k = (header.size() - 3) / 2;
    std::vector<ResultRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != header.size()) throw ParseError("wrong number of CSV fields", line_no);
        ResultRow r;
        r.label = f[0];
        if (!f[1].empty()) r.dim = parse_field<std::size_t>(f[1], line_no);
        r.scan_count = parse_field<std::uint64_t>(f[2], line_no);
        for (std::size_t i = 0; i < k; ++i) {
            r.double_speedup.push_back(parse_field<double>(f[3 + i], line_no));
            r.combined_speedup.push_back(parse_field<double>(f[3 + k + i], line_no));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

ProportionSummary summarize(std::span<const ResultRow> rows) {
    double log_vs_double = 0.0;
    double log_vs_scan = 0.0;
    std::size_t cells = 0;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.combined_speedup.size(); ++i) {
            // count ratio = inverse speedup ratio
            log_vs_double += std::log(r.double_speedup[i] / r.combined_speedup[i]);
            log_vs_scan += std::log(1.0 / r.combined_speedup[i]);
            ++cells;
        }
    }
    if (cells == 0) return {};
    return {std::exp(log_vs_double / static_cast<double>(cells)),
            std::exp(log_vs_scan / static_cast<double>(cells))};
}

}  // namespace kfn
