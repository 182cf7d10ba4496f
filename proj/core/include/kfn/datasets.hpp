#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kfn/metric.hpp"

namespace kfn {

/// n i.i.d. points from the unit cube [0,1)^d.
std::vector<Point> gen_uniform(std::size_t n, std::size_t d, std::uint64_t seed);

/// Gaussian blobs around uniformly placed centers.
///
/// Centers are uniform in [0,1)^d; every member adds independent N(0, sigma^2)
/// noise per coordinate to its center. Points are emitted cluster by cluster.
class ClusteredGenerator {
public:
    ClusteredGenerator(std::size_t n_centers, std::size_t d, double sigma, std::uint64_t seed);

    const std::vector<Vector>& centers() const noexcept { return centers_; }
    /// per_cluster members for every center, in center order.
    std::vector<Point> members(std::size_t per_cluster) const;
    /// n points, each around a uniformly chosen center.
    std::vector<Point> sample(std::size_t n, std::uint64_t seed) const;

private:
    std::vector<Vector> centers_;
    double sigma_;
    std::uint64_t seed_;
};

std::vector<Point> gen_clustered(std::size_t n_centers, std::size_t per_cluster, std::size_t d,
                                 double sigma, std::uint64_t seed);

enum class VectorFormat {
    plain,     ///< one whitespace-separated vector per line
    headered,  ///< first line "D N", then N lines of D reals
};

std::vector<Point> read_vectors(std::istream& in, VectorFormat format);
std::vector<Point> load_vectors(const std::filesystem::path& path, VectorFormat format);
/// One string per line; empty lines are skipped and a trailing '\r' is dropped.
std::vector<Point> read_strings(std::istream& in);
std::vector<Point> load_strings(const std::filesystem::path& path);

/// Writes shortest round-trip decimals, so read_vectors reproduces the input exactly.
void write_vectors(std::ostream& out, const std::vector<Point>& points, VectorFormat format);
void write_strings(std::ostream& out, const std::vector<Point>& points);

/// A database plus groups of consecutive query objects (pairs when m = 2).
struct ExperimentCorpus {
    std::string label;
    std::optional<std::size_t> dim;
    std::vector<Point> database;
    std::vector<std::vector<Point>> query_groups;
};

/// Real-world protocol: the first n_groups + m - 1 points become query
/// sources and are removed from the database; group j holds sources j..j+m-1.
ExperimentCorpus make_corpus(std::vector<Point> points, std::size_t n_groups,
                             std::size_t group_size = 2);

/// Synthetic protocol: queries come from separately generated sources and
/// the database is left untouched.
ExperimentCorpus make_corpus(std::vector<Point> points, std::vector<Point> query_sources,
                             std::size_t n_groups, std::size_t group_size = 2);

}  // namespace kfn
