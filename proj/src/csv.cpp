#include "pae/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <type_traits>

namespace pae {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return {buf, ptr};
}

namespace {

template <typename T>
T parse_number(std::string_view token, const char* field) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("csv: bad " + std::string(field) + " '" +
                                    std::string(token) + "'");
    }
    return value;
}

template <typename T>
std::optional<T> parse_optional(std::string_view token, const char* field) {
    if (token.empty()) return std::nullopt;
    return parse_number<T>(token, field);
}

template <typename T>
void append_optional(std::string& row, const std::optional<T>& v) {
    row.push_back(',');
    if (!v.has_value()) return;
    if constexpr (std::is_same_v<T, double>) {
        row += format_double(*v);
    } else {
        row += std::to_string(*v);
    }
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::string to_csv_row(const ObservableRecord& rec) {
    std::string row = format_double(rec.p);
    row += ',' + std::to_string(rec.seed);
    row += ',' + std::to_string(rec.t);
    row += ',' + std::to_string(rec.n_vertices);
    row += ',' + std::to_string(rec.n_edges);
    append_optional(row, rec.max_degree);
    append_optional(row, rec.cherries_simple);
    append_optional(row, rec.cherries_multi);
    append_optional(row, rec.triangles);
    append_optional(row, rec.tau);
    append_optional(row, rec.clique_lb);
    append_optional(row, rec.clique_exact);
    append_optional(row, rec.gamma_t_1);
    append_optional(row, rec.wall_millis);
    return row;
}

ObservableRecord parse_csv_row(std::string_view line) {
    const auto f = split_fields(line);
    if (f.size() != 14) {
        throw std::invalid_argument("csv: expected 14 fields, got " +
                                    std::to_string(f.size()) + " in '" +
                                    std::string(line) + "'");
    }
    ObservableRecord rec;
    rec.p = parse_number<double>(f[0], "p");
    rec.seed = parse_number<std::uint64_t>(f[1], "seed");
    rec.t = parse_number<std::uint64_t>(f[2], "t");
    rec.n_vertices = parse_number<std::uint64_t>(f[3], "n_vertices");
    rec.n_edges = parse_number<std::uint64_t>(f[4], "n_edges");
    rec.max_degree = parse_optional<std::uint64_t>(f[5], "max_degree");
    rec.cherries_simple = parse_optional<std::uint64_t>(f[6], "cherries_simple");
    rec.cherries_multi = parse_optional<std::uint64_t>(f[7], "cherries_multi");
    rec.triangles = parse_optional<std::uint64_t>(f[8], "triangles");
    rec.tau = parse_optional<double>(f[9], "tau");
    rec.clique_lb = parse_optional<std::uint64_t>(f[10], "clique_lb");
    rec.clique_exact = parse_optional<std::uint64_t>(f[11], "clique_exact");
    rec.gamma_t_1 = parse_optional<std::uint64_t>(f[12], "gamma_t_1");
    rec.wall_millis = parse_optional<std::uint64_t>(f[13], "wall_millis");
    return rec;
}

void write_records_csv(const std::vector<ObservableRecord>& records,
                       std::ostream& out) {
    out << kObservableCsvHeader << '\n';
    for (const auto& rec : records) out << to_csv_row(rec) << '\n';
}

void write_records_csv(const std::vector<ObservableRecord>& records,
                       const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_records_csv(records, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ObservableRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("csv: empty records file");
    }
    if (line != kObservableCsvHeader) {
        throw std::invalid_argument("csv: unexpected header '" + line + "'");
    }
    std::vector<ObservableRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(parse_csv_row(line));
    }
    return records;
}

std::vector<ObservableRecord> read_records_csv_if_exists(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    return read_records_csv(in);
}

}  // namespace pae
