#include "kfn/index_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "kfn/errors.hpp"

namespace kfn {

namespace {

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::istringstream next(const char* expecting) {
        std::string line;
        if (!std::getline(in_, line)) {
            throw ParseError(std::string("unexpected end of index file, expected ") + expecting,
                             line_ + 1);
        }
        ++line_;
        return std::istringstream(line);
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

template <typename T>
T read_keyed(LineReader& reader, const char* key) {
    auto ls = reader.next(key);
    std::string k;
    T value{};
    if (!(ls >> k >> value) || k != key) {
        throw ParseError(std::string("expected '") + key + " <value>'", reader.line());
    }
    return value;
}

}  // namespace

void save_index(const LcIndex& index, std::ostream& out) {
    const Dataset& d = index.data();
    out << "kfn-lc-index 1\n";
    out << "points " << d.size() << ' ' << (d.form() == PointForm::vector ? "vector" : "string")
        << ' ' << d.dim() << '\n';
    out << "bucket_size " << index.bucket_size() << '\n';
    out << "build_distances " << index.build_distance_count() << '\n';
    out << "clusters " << index.clusters().size() << '\n';
    for (const auto& c : index.clusters()) {
        out << c.center << ' ' << shortest(c.covering_radius) << ' ' << c.bucket.size();
        for (PointId id : c.bucket) out << ' ' << id;
        out << '\n';
    }
}

void save_index(const LcIndex& index, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    save_index(index, out);
    if (!out) throw IoError("failed writing " + path.string());
}

LcIndex load_index(std::istream& in, std::shared_ptr<const Dataset> data) {
    if (!data) throw UsageError("load_index: null dataset");
    LineReader reader(in);
    {
        auto ls = reader.next("header");
        std::string magic;
        int version = 0;
        if (!(ls >> magic >> version) || magic != "kfn-lc-index") {
            throw ParseError("not a kfn-lc-index file", reader.line());
        }
        if (version != 1) {
            throw ParseError("unsupported index version " + std::to_string(version), reader.line());
        }
    }
    {
        auto ls = reader.next("points");
        std::string key, form;
        std::size_t n = 0, dim = 0;
        if (!(ls >> key >> n >> form >> dim) || key != "points") {
            throw ParseError("expected 'points <N> <form> <dim>'", reader.line());
        }
        const bool form_ok = (form == "vector" && data->form() == PointForm::vector) ||
                             (form == "string" && data->form() == PointForm::string);
        if (n != data->size() || !form_ok || dim != data->dim()) {
            throw UsageError("load_index: index was built for a different dataset");
        }
    }
    const auto bucket_size = read_keyed<std::size_t>(reader, "bucket_size");
    const auto build_distances = read_keyed<std::uint64_t>(reader, "build_distances");
    const auto n_clusters = read_keyed<std::size_t>(reader, "clusters");

    std::vector<Cluster> clusters;
    clusters.reserve(n_clusters);
    for (std::size_t i = 0; i < n_clusters; ++i) {
        auto ls = reader.next("cluster line");
        Cluster c;
        std::string radius;
        std::size_t members = 0;
        if (!(ls >> c.center >> radius >> members)) {
            throw ParseError("malformed cluster line", reader.line());
        }
        auto [ptr, ec] = std::from_chars(radius.data(), radius.data() + radius.size(),
                                         c.covering_radius);
        if (ec != std::errc{} || ptr != radius.data() + radius.size()) {
            throw ParseError("bad covering radius '" + radius + "'", reader.line());
        }
        c.bucket.resize(members);
        for (auto& id : c.bucket) {
            if (!(ls >> id)) throw ParseError("cluster line has too few member ids", reader.line());
        }
        std::string extra;
        if (ls >> extra) throw ParseError("cluster line has trailing tokens", reader.line());
        clusters.push_back(std::move(c));
    }
    return LcIndex(std::move(data), std::move(clusters), bucket_size, build_distances);
}

LcIndex load_index(const std::filesystem::path& path, std::shared_ptr<const Dataset> data) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return load_index(in, std::move(data));
}

}  // namespace kfn
