#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pae/generate.hpp"
#include "pae/model.hpp"

namespace pae {

// Parse or I/O failure; the message carries the offending line number.
struct SnapshotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented text format:
//   # pa-edgestep-log v1
//   p=<decimal> seed=<u64> t=<u64>
//   V <target>   |   E <u> <w>      (one line per step s = 2..t)
// A path ending in .gz reads/writes the gzip-compressed variant with
// identical contents.
void write_snapshot(const StepLog& log, const std::string& path);
void write_snapshot(const StepLog& log, std::ostream& out);

// Parses, validates every record against the vertices alive at that step,
// and replays. read(write(log)) == log, including the header bits of p.
Trajectory read_snapshot(const std::string& path);
Trajectory read_snapshot(std::istream& in);

}  // namespace pae
