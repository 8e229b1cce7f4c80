#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxdim/fit.hpp"
#include "boxdim/radii.hpp"
#include "boxdim/series.hpp"
#include "boxdim/surface.hpp"
#include "boxdim/synth.hpp"
#include "boxdim/types.hpp"

namespace boxdim {

// Every knob of the estimator, with the documented defaults.
struct RunConfig {
    std::string inpFilePath;
    RadiusType radType = RadiusType::Atomic;
    double radMult = 1.2;
    SurfaceAlgorithm findSurfAlg = SurfaceAlgorithm::AlphaShape;
    double alphaMult = 2.0;
    bool trimLen = true;
    int minSample = 6;
    double confLvl = 95.0;
    bool rmInSurf = true;
    bool voxelSurf = true;
    int numPoints = 10000;
    int gridNum = 1024;
    bool exactSurf = true;
    double minLenMult = 0.25;
    double maxLenMult = 1.0;
    int numCPUs = 8;
    int numBoxLen = 10;
    int numNeighThreshold = 12;

    std::string outDir;             // write CSVs/report here when non-empty
    bool dumpSurfaceAtoms = false;  // XYZ of flagged atoms
    bool dumpSurfacePoints = false; // XYZ of the voxel pipeline's cloud
    bool verbose = false;           // per-stage timing on stdout
};

struct PipelineResult {
    BoxCountSeries series;
    FitResult fit;
};

struct StageTiming {
    std::string stage;
    double seconds = 0.0;
};

struct RunReport {
    RunConfig config;
    std::size_t atomCount = 0;
    std::size_t surfaceAtomCount = 0;
    std::optional<PipelineResult> voxel;
    std::optional<PipelineResult> exact;
    std::vector<StageTiming> timings;

    double stageSeconds(const std::string& prefix) const; // sum over matching stages
};

// Full estimation pipeline: load the structure, build neighbors and
// surface flags, run the enabled representations, fit each series.
// With rmInSurf off, surface detection is skipped entirely and every
// atom counts as a surface atom in both representations. Output files
// are written when outDir is set. Errors from the stages are
// rethrown with the stage name prefixed.
RunReport runBoxCnt(const RunConfig& config);

// Same pipeline on an already-loaded structure (used by bench and the
// tests; skips the load stage).
RunReport runBoxCnt(const RunConfig& config, const Structure& structure);

// Machine-readable key=value block: config echo plus per
// representation results.
std::string reportKeyValueBlock(const RunReport& report);
std::string configKeyValueBlock(const RunConfig& config);

// Write <out>/voxel_counts.csv, <out>/exact_counts.csv (log10 data
// with in-window flags) and <out>/fits.csv + <out>/report.txt. The
// CSVs carry no timing data, so reruns with one config are
// byte-identical.
void emitPlotData(const RunReport& report, const std::string& outDir);

struct BenchRow {
    std::string label;
    std::size_t atoms = 0;
    std::string pipeline; // "voxel" or "exact"
    int repeats = 0;
    int kept = 0; // after outlier trimming
    double meanSeconds = 0.0;
    double medianSeconds = 0.0;
};

// Time both enabled pipelines over the given shapes, `repeats` runs
// each; means are taken after 1.5*IQR outlier removal, medians over
// all repeats.
std::vector<BenchRow> bench(const std::vector<ShapeSpec>& shapes, int repeats,
                            const RunConfig& base);

void writeBenchCsv(const std::vector<BenchRow>& rows, const std::string& path);

} // namespace boxdim
