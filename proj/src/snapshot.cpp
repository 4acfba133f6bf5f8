#include "pae/snapshot.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "pae/csv.hpp"

namespace pae {
namespace {

constexpr std::string_view kMagic = "# pa-edgestep-log v1";

bool has_gz_suffix(const std::string& path) {
    return path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw SnapshotError("snapshot line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T parse_unsigned(std::string_view token, std::size_t line_no, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(line_no, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

double parse_decimal(std::string_view token, std::size_t line_no, const char* what) {
    double value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(line_no, std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

std::string_view expect_key(std::string_view token, std::string_view key,
                            std::size_t line_no) {
    if (token.size() < key.size() + 1 || token.substr(0, key.size()) != key ||
        token[key.size()] != '=') {
        fail(line_no, "expected " + std::string(key) + "=<value>, got '" +
                          std::string(token) + "'");
    }
    return token.substr(key.size() + 1);
}

std::string read_file_possibly_gz(const std::string& path) {
    if (has_gz_suffix(path)) {
        gzFile f = gzopen(path.c_str(), "rb");
        if (f == nullptr) throw SnapshotError("cannot open " + path);
        std::string content;
        char buf[1 << 16];
        int n;
        while ((n = gzread(f, buf, sizeof(buf))) > 0) content.append(buf, n);
        const bool bad = n < 0;
        gzclose(f);
        if (bad) throw SnapshotError("gzip read error in " + path);
        return content;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SnapshotError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

void write_snapshot(const StepLog& log, std::ostream& out) {
    out << kMagic << '\n';
    out << "p=" << format_double(log.header.p) << " seed=" << log.header.seed
        << " t=" << log.t() << '\n';
    for (const StepRecord& rec : log.records) {
        if (rec.is_vertex_step()) {
            out << "V " << rec.a << '\n';
        } else {
            out << "E " << rec.a << ' ' << rec.b << '\n';
        }
    }
    if (!out) throw SnapshotError("write failed");
}

void write_snapshot(const StepLog& log, const std::string& path) {
    std::ostringstream ss;
    write_snapshot(log, ss);
    const std::string content = ss.str();
    if (has_gz_suffix(path)) {
        gzFile f = gzopen(path.c_str(), "wb");
        if (f == nullptr) throw SnapshotError("cannot open " + path + " for writing");
        const int written =
            gzwrite(f, content.data(), static_cast<unsigned>(content.size()));
        const int rc = gzclose(f);
        if (written != static_cast<int>(content.size()) || rc != Z_OK) {
            throw SnapshotError("gzip write error in " + path);
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SnapshotError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw SnapshotError("write failed: " + path);
}

Trajectory read_snapshot(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) fail(1, "empty input");
    ++line_no;
    if (line != kMagic) fail(line_no, "bad magic, expected '" + std::string(kMagic) + "'");

    if (!std::getline(in, line)) fail(2, "missing header");
    ++line_no;
    std::istringstream header(line);
    std::string tok_p, tok_seed, tok_t, extra;
    if (!(header >> tok_p >> tok_seed >> tok_t) || (header >> extra)) {
        fail(line_no, "header must be 'p=<decimal> seed=<u64> t=<u64>'");
    }
    ModelParams params;
    params.p = parse_decimal(expect_key(tok_p, "p", line_no), line_no, "p");
    params.seed =
        parse_unsigned<std::uint64_t>(expect_key(tok_seed, "seed", line_no), line_no, "seed");
    params.t_max =
        parse_unsigned<Step>(expect_key(tok_t, "t", line_no), line_no, "t");
    if (!(params.p >= 0.0 && params.p <= 1.0)) fail(line_no, "p outside [0,1]");
    if (params.t_max < 1 || params.t_max > kMaxHorizon) fail(line_no, "t outside [1, 2^31-1]");

    Trajectory result{GrowthGraph::initial(), StepLog{}};
    result.log.header = params;
    result.log.records.reserve(params.t_max - 1);
    result.graph.reserve(params.t_max);

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && result.graph.t() == params.t_max) break;  // trailing newline
        if (result.graph.t() >= params.t_max) {
            fail(line_no, "more records than the declared t=" +
                              std::to_string(params.t_max));
        }
        std::string_view sv(line);
        if (sv.size() < 2 || sv[1] != ' ') fail(line_no, "malformed record '" + line + "'");
        const char tag = sv[0];
        sv.remove_prefix(2);
        const Step step = result.graph.t() + 1;
        if (tag == 'V') {
            const auto target = parse_unsigned<VertexId>(sv, line_no, "vertex id");
            if (!result.graph.is_alive(target)) {
                fail(line_no, "endpoint id " + std::to_string(target) +
                                  " not alive at step " + std::to_string(step) + " (" +
                                  std::to_string(result.graph.num_vertices()) +
                                  " vertices)");
            }
            result.graph.add_vertex_step(target);
            result.log.records.push_back({target, 0});
        } else if (tag == 'E') {
            const auto sep = sv.find(' ');
            if (sep == std::string_view::npos) fail(line_no, "edge record needs two ids");
            const auto u = parse_unsigned<VertexId>(sv.substr(0, sep), line_no, "vertex id");
            const auto w = parse_unsigned<VertexId>(sv.substr(sep + 1), line_no, "vertex id");
            if (!result.graph.is_alive(u) || !result.graph.is_alive(w)) {
                fail(line_no, "endpoint id " +
                                  std::to_string(result.graph.is_alive(u) ? w : u) +
                                  " not alive at step " + std::to_string(step) + " (" +
                                  std::to_string(result.graph.num_vertices()) +
                                  " vertices)");
            }
            result.graph.add_edge_step(u, w);
            result.log.records.push_back({u, w});
        } else {
            fail(line_no, std::string("unknown record tag '") + tag + "'");
        }
    }
    if (result.graph.t() != params.t_max) {
        fail(line_no + 1, "expected " + std::to_string(params.t_max - 1) +
                              " records for t=" + std::to_string(params.t_max) +
                              ", got " + std::to_string(result.log.records.size()));
    }
    return result;
}

Trajectory read_snapshot(const std::string& path) {
    std::istringstream in(read_file_possibly_gz(path));
    return read_snapshot(in);
}

}  // namespace pae
