#include "kfn/datasets.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "kfn/errors.hpp"

namespace kfn {

namespace {

// Separates the member stream from the center stream of one generator seed.
constexpr std::uint64_t kMemberStream = 0x9e3779b97f4a7c15ULL;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

double parse_real(std::string_view token, std::size_t line) {
    double v = 0.0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
        throw ParseError("not a finite real: '" + std::string(token) + "'", line);
    }
    return v;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("not a nonnegative integer: '" + std::string(token) + "'", line);
    }
    return v;
}

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::vector<Point> gen_uniform(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 1 || d < 1) throw UsageError("gen_uniform: n and d must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector v(d);
        for (auto& c : v) c = unit(rng);
        points.emplace_back(std::move(v));
    }
    return points;
}

ClusteredGenerator::ClusteredGenerator(std::size_t n_centers, std::size_t d, double sigma,
                                       std::uint64_t seed)
    : sigma_(sigma), seed_(seed) {
    if (n_centers < 1 || d < 1) throw UsageError("clustered: counts must be at least 1");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw UsageError("clustered: sigma must be > 0");
    for (auto& p : gen_uniform(n_centers, d, seed)) centers_.push_back(std::get<Vector>(std::move(p)));
}

std::vector<Point> ClusteredGenerator::members(std::size_t per_cluster) const {
    if (per_cluster < 1) throw UsageError("clustered: per_cluster must be at least 1");
    std::mt19937_64 rng(seed_ ^ kMemberStream);
    std::normal_distribution<double> noise(0.0, sigma_);
    std::vector<Point> points;
    points.reserve(centers_.size() * per_cluster);
    for (const auto& c : centers_) {
        for (std::size_t j = 0; j < per_cluster; ++j) {
            Vector v(c);
            for (auto& x : v) x += noise(rng);
            points.emplace_back(std::move(v));
        }
    }
    return points;
}

std::vector<Point> ClusteredGenerator::sample(std::size_t n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, centers_.size() - 1);
    std::normal_distribution<double> noise(0.0, sigma_);
    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector v(centers_[pick(rng)]);
        for (auto& x : v) x += noise(rng);
        points.emplace_back(std::move(v));
    }
    return points;
}

std::vector<Point> gen_clustered(std::size_t n_centers, std::size_t per_cluster, std::size_t d,
                                 double sigma, std::uint64_t seed) {
    return ClusteredGenerator(n_centers, d, sigma, seed).members(per_cluster);
}

std::vector<Point> read_vectors(std::istream& in, VectorFormat format) {
    std::vector<Point> points;
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> expected_count;

    if (format == VectorFormat::headered) {
        if (!std::getline(in, line)) throw ParseError("missing 'D N' header", 1);
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.size() != 2) throw ParseError("header must be 'D N'", line_no);
        dim = parse_count(tokens[0], line_no);
        expected_count = parse_count(tokens[1], line_no);
        if (*dim == 0) throw ParseError("dimension must be positive", line_no);
    }

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (!dim) dim = tokens.size();
        if (tokens.size() != *dim) {
            throw ParseError("expected " + std::to_string(*dim) + " values, found " +
                                 std::to_string(tokens.size()),
                             line_no);
        }
        if (expected_count && points.size() == *expected_count) {
            throw ParseError("more rows than the header's count " + std::to_string(*expected_count),
                             line_no);
        }
        Vector v;
        v.reserve(tokens.size());
        for (auto t : tokens) v.push_back(parse_real(t, line_no));
        points.emplace_back(std::move(v));
    }
    if (expected_count && points.size() != *expected_count) {
        throw ParseError("header announces " + std::to_string(*expected_count) + " rows, found " +
                             std::to_string(points.size()),
                         line_no);
    }
    return points;
}

std::vector<Point> load_vectors(const std::filesystem::path& path, VectorFormat format) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_vectors(in, format);
}

std::vector<Point> read_strings(std::istream& in) {
    std::vector<Point> points;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        points.emplace_back(std::move(line));
    }
    return points;
}

std::vector<Point> load_strings(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return read_strings(in);
}

void write_vectors(std::ostream& out, const std::vector<Point>& points, VectorFormat format) {
    if (format == VectorFormat::headered) {
        const std::size_t d = points.empty() ? 0 : std::get<Vector>(points.front()).size();
        out << d << ' ' << points.size() << '\n';
    }
    for (const auto& p : points) {
        const auto& v = std::get<Vector>(p);
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << shortest(v[i]);
        out << '\n';
    }
}

void write_strings(std::ostream& out, const std::vector<Point>& points) {
    for (const auto& p : points) out << std::get<std::string>(p) << '\n';
}

ExperimentCorpus make_corpus(std::vector<Point> points, std::size_t n_groups,
                             std::size_t group_size) {
    if (n_groups < 1 || group_size < 1) throw UsageError("make_corpus: need at least one group");
    const std::size_t sources = n_groups + group_size - 1;
    if (points.size() <= sources) {
        throw UsageError("make_corpus: " + std::to_string(points.size()) +
                         " points cannot supply " + std::to_string(sources) +
                         " query sources and a nonempty database");
    }
    ExperimentCorpus corpus;
    std::vector<Point> query_sources(std::make_move_iterator(points.begin()),
                                     std::make_move_iterator(points.begin() +
                                                             static_cast<std::ptrdiff_t>(sources)));
    points.erase(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(sources));
    corpus.database = std::move(points);
    for (std::size_t j = 0; j < n_groups; ++j) {
        corpus.query_groups.emplace_back(query_sources.begin() + static_cast<std::ptrdiff_t>(j),
                                         query_sources.begin() +
                                             static_cast<std::ptrdiff_t>(j + group_size));
    }
    return corpus;
}

ExperimentCorpus make_corpus(std::vector<Point> points, std::vector<Point> query_sources,
                             std::size_t n_groups, std::size_t group_size) {
    if (n_groups < 1 || group_size < 1) throw UsageError("make_corpus: need at least one group");
    if (points.empty()) throw UsageError("make_corpus: database is empty");
    if (query_sources.size() < n_groups + group_size - 1) {
        throw UsageError("make_corpus: too few generated query sources");
    }
    ExperimentCorpus corpus;
    corpus.database = std::move(points);
    for (std::size_t j = 0; j < n_groups; ++j) {
        corpus.query_groups.emplace_back(query_sources.begin() + static_cast<std::ptrdiff_t>(j),
                                         query_sources.begin() +
                                             static_cast<std::ptrdiff_t>(j + group_size));
    }
    return corpus;
}

}  // namespace kfn
