#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pae/observables.hpp"

namespace pae {

// The exact record schema; every reader and writer checks it verbatim.
inline constexpr std::string_view kObservableCsvHeader =
    "p,seed,t,n_vertices,n_edges,max_degree,cherries_simple,cherries_multi,"
    "triangles,tau,clique_lb,clique_exact,gamma_t_1,wall_millis";

std::string to_csv_row(const ObservableRecord& rec);
ObservableRecord parse_csv_row(std::string_view line);  // throws on malformed rows

void write_records_csv(const std::vector<ObservableRecord>& records,
                       std::ostream& out);
void write_records_csv(const std::vector<ObservableRecord>& records,
                       const std::string& path);

// Reads a records file (header required). A missing file yields an empty
// vector so resumable runs can start cold.
std::vector<ObservableRecord> read_records_csv(std::istream& in);
std::vector<ObservableRecord> read_records_csv_if_exists(const std::string& path);

// Shortest round-trip decimal formatting; parse(format(x)) == x bit-exactly,
// which the (p, seed, t) dedup key relies on.
std::string format_double(double x);

}  // namespace pae
