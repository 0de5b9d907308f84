#include "tropmod/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    for (auto& a : args)
        if (a.rfind("@/", 0) == 0)
            a = std::string(TROPMOD_TEST_DATA) + a.substr(1);
    std::ostringstream out, err;
    const int code = tropmod::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: graph commands")
{
    CHECK(run({"graph", "genus", "@/theta.graph"}).out == "2\n");
    CHECK(run({"graph", "bridges", "@/path2.graph"}).out == "0 1\n");
    CHECK(run({"graph", "bridges", "@/theta.graph"}).out == "\n");
    CHECK(run({"graph", "components", "@/two_components.graph"}).out == "0 1\n2\n");
    CHECK(run({"graph", "valency", "@/loop.graph"}).out == "0 2\n");
    CHECK(run({"graph", "valency", "@/theta.graph", "--vertex", "1"}).out == "3\n");
    CHECK(run({"graph", "component-data", "@/two_components.graph"}).out == "0 {2}\n1 {1,3}\n");
    CHECK(run({"graph", "isometric", "@/cycle_013.graph", "@/cycle_053.graph"}).out == "true\n");
    CHECK(run({"graph", "isometric", "@/cycle_013.graph", "@/cycle_023.graph"}).out == "false\n");
    CHECK(run({"graph", "neighborhood", "@/loop.graph", "@/loop_long.graph", "--eps", "3/10"}).out == "true\n");
    CHECK(run({"graph", "neighborhood", "@/loop.graph", "@/loop6.graph", "--eps", "3/10"}).out == "false\n");
    CHECK(run({"graph", "neighborhood", "@/loop.graph", "@/loop_pendant_short.graph", "--eps", "3/10"}).out == "true\n");
    CHECK(run({"graph", "tm", "@/cycle_013.graph", "--variant", "tmb"}).out == "true\n");
    CHECK(run({"graph", "retract", "@/loop_pendant.graph", "--t", "1/2"}).out ==
          "graph g\nv 0\nv 1\ne 0 0 0 3\ne 1 0 1 2\nmark 1 v 1\nmark 2 e 1 1/2\n");
    CHECK(run({"graph", "shrink", "@/path2.graph", "--edges", "0,1"}).out == "graph g\nv 3\n");
}

TEST_CASE("cli: strata commands")
{
    CHECK(run({"strata", "dim", "@/loop_edge.stratum"}).out == "2\n");
    CHECK(run({"strata", "boundary", "@/loop_edge.stratum", "--closure"}).out == "1\n# dim 1\ngraph b1\nv 0\ne 0 0 0\nmark 1 v 0\n");
    CHECK(run({"strata", "boundary", "@/edge_slot.stratum"}).out.rfind("2\n", 0) == 0);
}

TEST_CASE("cli: xq commands")
{
    CHECK(run({"xq", "cells", "--m", "3"}).out == "8 12 12 4\n");
    CHECK(run({"xq", "cells", "--m", "2", "--space", "torus"}).out == "4 8 4\n");
    CHECK(run({"xq", "betti", "--m", "3", "--coeff", "z2"}).out == "1 0 4 1\n");
    CHECK(run({"xq", "betti", "--m", "3", "--coeff", "int"}).out == "Z 0 Z^3+Z_2 0\n");
    CHECK(run({"xq", "link", "--m", "3", "--vertex", "+,+,+"}).out == "3 6 4\n1 1 1\n");
    CHECK(run({"xq", "link", "--m", "3", "--vertex", "-,+,-"}).out == "3 6 4\n1 1 1\n");
    CHECK(run({"xq", "sigma", "--m", "2", "--subset", "1"}).out == "sigma (i+,+) + (i-,+)\nboundary 0\nq 0\n");
    const auto formula = run({"xq", "check-formula", "--max-m", "4"});
    CHECK(formula.code == 0);
    CHECK(formula.out.substr(formula.out.size() - 3) == "ok\n");
    CHECK(run({"xq", "check-recursion", "--max-m", "4"}).out.find("FAIL") == std::string::npos);
    CHECK(run({"xq", "conjecture", "--m", "3"}).out == "reduced z2 0 0 4 1\nreduced z 0 0 Z^3+Z_2 0\nuct consistent\npattern holds\n");

    const auto path = (std::filesystem::temp_directory_path() / "tropmod_cli_export.txt").string();
    CHECK(run({"xq", "export", "--m", "3", "--space", "xq", "--ring", "z", "--out", path}).code == 0);
    CHECK(run({"xq", "homology", "--in", path, "--coeff", "int"}).out == "Z 0 Z^3+Z_2 0\n");
    CHECK(run({"xq", "homology", "--in", path}).out == "1 0 4 1\n");
    std::filesystem::remove(path);
    CHECK(run({"xq", "export", "--m", "1", "--space", "torus", "--ring", "z2", "--out", "-"}).out ==
          "chaincomplex torus m=1 ring=z2\ndim 0 cells=2\ncell 0 0 +\ncell 0 1 -\ndim 1 cells=2\ncell 1 0 i+\ncell 1 1 i-\n"
          "bnd 1 0 0 1\nbnd 1 1 0 1\nbnd 1 0 1 1\nbnd 1 1 1 1\n");
}

TEST_CASE("cli: exit codes")
{
    const auto bad = run({"graph", "genus", "@/bad_syntax.graph"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(run({"graph", "genus", "@/bad_length.graph"}).code == 1);
    CHECK(run({"graph", "genus", "@/missing.graph"}).code == 1);
    CHECK(run({"graph", "retract", "@/loop.graph", "--t", "3/2"}).code == 1);
    CHECK(run({"graph", "neighborhood", "@/loop.graph", "@/loop.graph", "--eps", "3"}).code == 1);
    CHECK(run({"xq", "betti", "--m", "13"}).code == 2);
    CHECK(run({"xq", "betti", "--m", "9", "--coeff", "int"}).code == 2);
    CHECK(run({"xq", "betti", "--m", "4", "--max-m", "3"}).code == 2);
    CHECK(run({"xq", "check-formula", "--max-m", "13"}).code == 2);
    CHECK(run({"xq", "link", "--m", "3", "--vertex", "i+,+,+"}).code == 1);
    CHECK(run({"xq", "sigma", "--m", "2", "--subset", "4"}).code == 1);
    CHECK(run({"xq", "frobnicate"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
