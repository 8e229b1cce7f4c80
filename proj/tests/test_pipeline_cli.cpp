#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "boxdim/errors.hpp"
#include "boxdim/pipeline.hpp"
#include "boxdim/synth.hpp"
#include "boxdim/xyz.hpp"
#include "testutil.hpp"

using namespace boxdim;

namespace {

Structure octahedron(int order) {
    ShapeSpec spec;
    spec.kind = ShapeKind::FccOctahedron;
    spec.order = order;
    return generateStructure(spec);
}

// A configuration light enough for unit tests but exercising both
// representations end to end.
RunConfig quickConfig() {
    RunConfig c;
    c.numPoints = 500;
    c.gridNum = 128;
    c.numCPUs = 2;
    return c;
}

bool sameFit(const FitResult& a, const FitResult& b) {
    return a.dBox == b.dBox && a.ciLow == b.ciLow && a.ciHigh == b.ciHigh && a.r2 == b.r2 &&
           a.intercept == b.intercept && a.lMin == b.lMin && a.lMax == b.lMax &&
           a.pointsUsed == b.pointsUsed;
}

bool sameSeries(const BoxCountSeries& a, const BoxCountSeries& b) {
    return a.lengths == b.lengths && a.counts == b.counts;
}

int runCli(const std::string& args, const std::string& outFile) {
    const std::string cmd =
        std::string(BOXDIM_CLI_PATH) + " " + args + " > " + outFile + " 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("both representations run end to end on a small cluster") {
    const Structure s = octahedron(4);
    const RunReport report = runBoxCnt(quickConfig(), s);

    CHECK(report.atomCount == 44);
    CHECK(report.surfaceAtomCount > 0);
    CHECK(report.surfaceAtomCount < 44);

    REQUIRE(report.voxel.has_value());
    REQUIRE(report.exact.has_value());
    for (const PipelineResult* res : {&*report.voxel, &*report.exact}) {
        CHECK(res->fit.pointsUsed >= 6);
        CHECK(res->fit.dBox > 0.5);
        CHECK(res->fit.dBox < 3.5);
        CHECK(res->fit.ciLow <= res->fit.dBox);
        CHECK(res->fit.ciHigh >= res->fit.dBox);
        CHECK(res->series.size() >= 6);
    }
    CHECK(report.stageSeconds("voxel.") > 0.0);
    CHECK(report.stageSeconds("exact.") > 0.0);
    CHECK(report.stageSeconds("") > 0.0);

    const std::string kv = reportKeyValueBlock(report);
    CHECK(kv.find("atomCount=44\n") != std::string::npos);
    CHECK(kv.find("voxel.dBox=") != std::string::npos);
    CHECK(kv.find("exact.dBox=") != std::string::npos);
    CHECK(kv.find("exact.lengths=") != std::string::npos);
}

TEST_CASE("disabling interior removal keeps every atom") {
    RunConfig c = quickConfig();
    c.rmInSurf = false;
    c.numPoints = 200;
    c.gridNum = 64;
    const RunReport report = runBoxCnt(c, octahedron(4));
    CHECK(report.surfaceAtomCount == report.atomCount);
}

TEST_CASE("a single disabled representation leaves the other intact") {
    RunConfig c = quickConfig();
    c.voxelSurf = false;
    const RunReport report = runBoxCnt(c, octahedron(4));
    CHECK(!report.voxel.has_value());
    REQUIRE(report.exact.has_value());
    CHECK(report.stageSeconds("voxel.") == 0.0);
}

TEST_CASE("configuration validation rejects inconsistent settings") {
    const Structure s = octahedron(2);
    auto expectConfigError = [&s](RunConfig c) {
        CHECK_THROWS_AS(runBoxCnt(c, s), ConfigError);
    };

    RunConfig c = quickConfig();
    c.voxelSurf = false;
    c.exactSurf = false;
    expectConfigError(c);

    c = quickConfig(); c.radMult = 0.0; expectConfigError(c);
    c = quickConfig(); c.numCPUs = 0; expectConfigError(c);
    c = quickConfig(); c.minSample = 2; expectConfigError(c);
    c = quickConfig(); c.confLvl = 0.0; expectConfigError(c);
    c = quickConfig(); c.confLvl = 100.0; expectConfigError(c);
    c = quickConfig(); c.numPoints = 0; expectConfigError(c);
    c = quickConfig(); c.gridNum = 1; expectConfigError(c);
    c = quickConfig(); c.numBoxLen = 1; expectConfigError(c);
    c = quickConfig(); c.minLenMult = 0.0; expectConfigError(c);
    c = quickConfig(); c.maxLenMult = 0.0; expectConfigError(c);
    c = quickConfig(); c.alphaMult = 0.0; expectConfigError(c);
}

TEST_CASE("file loading failures carry the stage name") {
    RunConfig c = quickConfig();
    CHECK_THROWS_AS(runBoxCnt(c), ConfigError); // no input file given

    c.inpFilePath = testutil::tempPath("does_not_exist.xyz").string();
    try {
        runBoxCnt(c);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("load:", 0) == 0);
    }
}

TEST_CASE("plot data is written completely and reproducibly") {
    RunConfig c = quickConfig();
    c.numPoints = 200;
    c.gridNum = 64;
    const RunReport report = runBoxCnt(c, octahedron(2));

    const std::string dirA = testutil::tempPath("plotA").string();
    const std::string dirB = testutil::tempPath("plotB").string();
    emitPlotData(report, dirA);
    emitPlotData(report, dirB);

    for (const char* name : {"voxel_counts.csv", "exact_counts.csv", "fits.csv", "report.txt"}) {
        const std::string a = testutil::readFile(dirA + "/" + name);
        const std::string b = testutil::readFile(dirB + "/" + name);
        CHECK(!a.empty());
        CHECK(a == b);
    }

    const std::string counts = testutil::readFile(dirA + "/voxel_counts.csv");
    CHECK(counts.rfind("log10_length,log10_count,in_fit_window\n", 0) == 0);
    const std::string fits = testutil::readFile(dirA + "/fits.csv");
    CHECK(fits.rfind("representation,dBox,ciLow,ciHigh,r2,intercept,lMin,lMax,pointsUsed\n", 0) ==
          0);
    CHECK(fits.find("\nvoxel,") != std::string::npos);
    CHECK(fits.find("\nexact,") != std::string::npos);
    const std::string rpt = testutil::readFile(dirA + "/report.txt");
    CHECK(rpt.find("voxel.dBox=") != std::string::npos);
}

TEST_CASE("results do not depend on the worker-thread count") {
    const Structure s = octahedron(4);
    std::vector<RunReport> reports;
    for (int threads : {1, 4, 8}) {
        RunConfig c = quickConfig();
        c.numCPUs = threads;
        reports.push_back(runBoxCnt(c, s));
    }
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CHECK(reports[i].surfaceAtomCount == reports[0].surfaceAtomCount);
        REQUIRE(reports[i].voxel.has_value());
        REQUIRE(reports[i].exact.has_value());
        CHECK(sameSeries(reports[i].voxel->series, reports[0].voxel->series));
        CHECK(sameSeries(reports[i].exact->series, reports[0].exact->series));
        CHECK(sameFit(reports[i].voxel->fit, reports[0].voxel->fit));
        CHECK(sameFit(reports[i].exact->fit, reports[0].exact->fit));
    }
}

TEST_CASE("bench times both representations per shape") {
    RunConfig base = quickConfig();
    base.numPoints = 150;
    base.gridNum = 64;

    CHECK_THROWS_AS(bench({ShapeSpec{}}, 2, base), ConfigError);
    CHECK_THROWS_AS(bench({}, 3, base), ConfigError);

    ShapeSpec shape;
    shape.kind = ShapeKind::FccOctahedron;
    shape.order = 2;
    const std::vector<BenchRow> rows = bench({shape}, 3, base);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].label == "octahedron-2");
    CHECK(rows[0].pipeline == "voxel");
    CHECK(rows[1].pipeline == "exact");
    for (const BenchRow& r : rows) {
        CHECK(r.atoms == 6);
        CHECK(r.repeats == 3);
        CHECK(r.kept >= 1);
        CHECK(r.kept <= 3);
        CHECK(r.meanSeconds > 0.0);
        CHECK(r.medianSeconds > 0.0);
    }

    const std::string csv = testutil::tempPath("bench.csv").string();
    writeBenchCsv(rows, csv);
    CHECK(testutil::readFile(csv).rfind("label,atoms,pipeline,repeats,kept,mean_s,median_s\n",
                                        0) == 0);
}

TEST_CASE("command line: synth, run, and the exit-code contract") {
    namespace fs = std::filesystem;
    const std::string xyz = testutil::tempPath("cli_oct2.xyz").string();
    const std::string out = testutil::tempPath("cli_out.txt").string();

    SUBCASE("synth writes a loadable cluster") {
        CHECK(runCli("synth --shape octahedron --order 2 -o " + xyz, out) == 0);
        CHECK(testutil::readFile(out).find("wrote") != std::string::npos);
        CHECK(loadXyz(xyz, RadiusType::Atomic).size() == 6);
    }

    SUBCASE("run prints both estimates and writes the output directory") {
        REQUIRE(runCli("synth --shape octahedron --order 2 -o " + xyz, out) == 0);
        const std::string dir = testutil::tempPath("cli_run_out").string();
        CHECK(runCli("run " + xyz + " --grid-num 64 --num-points 300 --num-cpus 2 --out-dir " +
                         dir,
                     out) == 0);
        const std::string text = testutil::readFile(out);
        CHECK(text.find("voxel.dBox=") != std::string::npos);
        CHECK(text.find("exact.dBox=") != std::string::npos);
        CHECK(fs::exists(dir + "/fits.csv"));
        CHECK(fs::exists(dir + "/report.txt"));
    }

    SUBCASE("verbose run reports stage timings") {
        REQUIRE(runCli("synth --shape octahedron --order 2 -o " + xyz, out) == 0);
        CHECK(runCli("run " + xyz + " --grid-num 64 --num-points 200 --verbose", out) == 0);
        CHECK(testutil::readFile(out).find("time.voxel.count=") != std::string::npos);
    }

    SUBCASE("a missing input file exits with the parse-error code") {
        CHECK(runCli("run " + testutil::tempPath("nope.xyz").string(), out) == 3);
        CHECK(testutil::readFile(out).rfind("error: load:", 0) == 0);
    }

    SUBCASE("an invalid configuration exits with the config-error code") {
        REQUIRE(runCli("synth --shape octahedron --order 2 -o " + xyz, out) == 0);
        CHECK(runCli("run " + xyz + " --grid-num 1", out) == 2);
        CHECK(runCli("run", out) == 2); // no input path at all
    }

    SUBCASE("bad command lines exit with the usage code") {
        CHECK(runCli("frobnicate", out) == 2);
        CHECK(runCli("run --no-such-flag", out) == 2);
        CHECK(runCli("synth --shape octahedron --order 2", out) == 2); // missing -o
    }

    SUBCASE("help exits cleanly") {
        CHECK(runCli("--help", out) == 0);
        CHECK(testutil::readFile(out).find("run") != std::string::npos);
    }

    SUBCASE("the effective configuration dump is stable") {
        CHECK(runCli("run --dump-config", out) == 0);
        const std::string expect = "inpFilePath=\n"
                                   "radType=atomic\n"
                                   "radMult=1.2\n"
                                   "findSurfAlg=alphaShape\n"
                                   "alphaMult=2\n"
                                   "trimLen=true\n"
                                   "minSample=6\n"
                                   "confLvl=95\n"
                                   "rmInSurf=true\n"
                                   "voxelSurf=true\n"
                                   "numPoints=10000\n"
                                   "gridNum=1024\n"
                                   "exactSurf=true\n"
                                   "minLenMult=0.25\n"
                                   "maxLenMult=1\n"
                                   "numCPUs=8\n"
                                   "numBoxLen=10\n"
                                   "numNeighThreshold=12\n";
        CHECK(testutil::readFile(out) == expect);

        CHECK(runCli("run --rad-type metallic --no-trim-len --num-cpus 3 --dump-config", out) ==
              0);
        const std::string overridden = testutil::readFile(out);
        CHECK(overridden.find("radType=metallic\n") != std::string::npos);
        CHECK(overridden.find("trimLen=false\n") != std::string::npos);
        CHECK(overridden.find("numCPUs=3\n") != std::string::npos);
    }

    SUBCASE("bench prints the timing table") {
        CHECK(runCli("bench --shape octahedron --orders 2 --repeats 3 --num-points 150 "
                     "--grid-num 64 --num-cpus 2",
                     out) == 0);
        const std::string text = testutil::readFile(out);
        CHECK(text.rfind("label,atoms,pipeline,repeats,kept,mean_s,median_s\n", 0) == 0);
        CHECK(text.find("octahedron-2,6,voxel,3,") != std::string::npos);
        CHECK(text.find("octahedron-2,6,exact,3,") != std::string::npos);
    }
}
