#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pae/generate.hpp"
#include "pae/snapshot.hpp"

using namespace pae;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

Trajectory parse(const std::string& text) {
    std::istringstream in(text);
    return read_snapshot(in);
}

}  // namespace

TEST_CASE("snapshot roundtrip at t = 1000") {
    const Trajectory traj = generate({0.3, 1000, 909});
    std::ostringstream out;
    write_snapshot(traj.log, out);
    std::istringstream in(out.str());
    const Trajectory back = read_snapshot(in);
    CHECK(back.log == traj.log);
    CHECK(back.graph == traj.graph);
}

TEST_CASE("snapshot roundtrip through files, plain and gzip") {
    const Trajectory traj = generate({0.1, 300, 5150});
    for (const char* name : {"pae_snap_test.log", "pae_snap_test.log.gz"}) {
        const std::string path = temp_path(name);
        write_snapshot(traj.log, path);
        const Trajectory back = read_snapshot(path);
        CHECK(back.log == traj.log);
        CHECK(back.graph == traj.graph);
        std::filesystem::remove(path);
    }
}

TEST_CASE("header p survives the text roundtrip bit-exactly") {
    for (double p : {0.1, 0.2567891234, 1.0 / 3.0, 0.0, 1.0}) {
        const Trajectory traj = generate({p, 20, 8});
        std::ostringstream out;
        write_snapshot(traj.log, out);
        std::istringstream in(out.str());
        CHECK(read_snapshot(in).log.header.p == p);
    }
}

TEST_CASE("record referencing an unborn vertex names its line") {
    const std::string text =
        "# pa-edgestep-log v1\n"
        "p=0.5 seed=1 t=4\n"
        "V 1\n"
        "E 5 2\n"
        "V 1\n";
    CHECK_THROWS_WITH_AS(parse(text),
                         doctest::Contains("line 4"), SnapshotError);
}

TEST_CASE("header p outside [0,1] is rejected") {
    CHECK_THROWS_WITH_AS(parse("# pa-edgestep-log v1\np=1.5 seed=1 t=1\n"),
                         doctest::Contains("p outside [0,1]"), SnapshotError);
}

TEST_CASE("malformed inputs are rejected with line numbers") {
    CHECK_THROWS_AS(parse("not a log\n"), SnapshotError);
    CHECK_THROWS_WITH_AS(
        parse("# pa-edgestep-log v1\np=0.5 seed=1 t=3\nV 1\nX 1\n"),
        doctest::Contains("unknown record tag 'X'"), SnapshotError);
    // declared t larger than record count
    CHECK_THROWS_AS(parse("# pa-edgestep-log v1\np=0.5 seed=1 t=5\nV 1\n"),
                    SnapshotError);
    // more records than declared
    CHECK_THROWS_AS(
        parse("# pa-edgestep-log v1\np=0.5 seed=1 t=2\nV 1\nV 1\n"),
        SnapshotError);
    // garbage endpoint
    CHECK_THROWS_AS(parse("# pa-edgestep-log v1\np=0.5 seed=1 t=2\nV abc\n"),
                    SnapshotError);
    // missing second edge endpoint
    CHECK_THROWS_AS(parse("# pa-edgestep-log v1\np=0.5 seed=1 t=2\nE 1\n"),
                    SnapshotError);
}

TEST_CASE("t = 1 snapshot has no records") {
    const Trajectory traj = generate({0.5, 1, 0});
    std::ostringstream out;
    write_snapshot(traj.log, out);
    std::istringstream in(out.str());
    const Trajectory back = read_snapshot(in);
    CHECK(back.graph.t() == 1);
    CHECK(back.log.records.empty());
}
