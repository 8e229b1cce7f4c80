#include "boxdim/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <type_traits>
#include <utility>

#include "boxdim/binary_grid.hpp"
#include "boxdim/errors.hpp"
#include "boxdim/exact_count.hpp"
#include "boxdim/grid_count.hpp"
#include "boxdim/neighbors.hpp"
#include "boxdim/point_cloud.hpp"
#include "boxdim/stats.hpp"
#include "boxdim/xyz.hpp"

namespace boxdim {

namespace {

void validateConfig(const RunConfig& c) {
    if (!c.voxelSurf && !c.exactSurf)
        throw ConfigError("both representations are disabled; enable voxelSurf or exactSurf");
    if (!(c.radMult > 0.0)) throw ConfigError("radMult must be positive");
    if (c.numCPUs < 1) throw ConfigError("numCPUs must be at least 1");
    if (c.minSample < 3) throw ConfigError("minSample must be at least 3");
    if (!(c.confLvl > 0.0 && c.confLvl < 100.0))
        throw ConfigError("confLvl must lie strictly between 0 and 100");
    if (c.voxelSurf) {
        if (c.numPoints < 1) throw ConfigError("numPoints must be at least 1");
        if (c.gridNum < 2) throw ConfigError("gridNum must be at least 2");
    }
    if (c.exactSurf) {
        if (c.numBoxLen < 2) throw ConfigError("numBoxLen must be at least 2");
        if (!(c.minLenMult > 0.0)) throw ConfigError("minLenMult must be positive");
        if (!(c.maxLenMult > 0.0)) throw ConfigError("maxLenMult must be positive");
    }
    if (c.rmInSurf && c.findSurfAlg == SurfaceAlgorithm::AlphaShape && !(c.alphaMult > 0.0))
        throw ConfigError("alphaMult must be positive");
}

[[noreturn]] void rethrowStaged(const std::string& stage) {
    try {
        throw;
    } catch (const ConfigError& e) {
        throw ConfigError(stage + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(stage + ": " + e.what());
    } catch (const UnknownElementError& e) {
        throw UnknownElementError(stage + ": " + e.what());
    } catch (const DegenerateInputError& e) {
        throw DegenerateInputError(stage + ": " + e.what());
    } catch (const NumericError& e) {
        throw NumericError(stage + ": " + e.what());
    }
}

template <typename F>
auto runStage(RunReport& report, const char* name, F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto record = [&] {
        const auto t1 = std::chrono::steady_clock::now();
        report.timings.push_back({name, std::chrono::duration<double>(t1 - t0).count()});
    };
    if constexpr (std::is_void_v<decltype(fn())>) {
        try {
            fn();
        } catch (...) {
            record();
            rethrowStaged(name);
        }
        record();
    } else {
        try {
            auto out = fn();
            record();
            return out;
        } catch (...) {
            record();
            rethrowStaged(name);
        }
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void dumpSurfacePointsXyz(const PointCloud& cloud, const Structure& structure,
                          const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << cloud.size() << "\n";
    out << "surface point cloud\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        char line[160];
        const Vec3& p = cloud.points[i];
        const std::size_t owner = static_cast<std::size_t>(cloud.ownerAtom[i]);
        std::snprintf(line, sizeof line, "%s %.10f %.10f %.10f\n",
                      structure[owner].element.c_str(), p.x(), p.y(), p.z());
        out << line;
    }
    if (!out.good()) throw ParseError("write to '" + path + "' failed");
}

void dumpSurfaceAtomsXyz(const Structure& structure, const SurfaceFlags& flags,
                         const std::string& path) {
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < structure.size(); ++i)
        if (flags.isSurface[i]) atoms.push_back(structure[i]);
    writeXyz(Structure(std::move(atoms)), path, "surface atoms");
}

void runPipelines(const RunConfig& config, const Structure& structure, RunReport& report) {
    report.atomCount = structure.size();

    const NeighborList neighbors = runStage(report, "neighbors", [&] {
        return buildNeighborList(structure, config.radMult, config.numCPUs);
    });

    // With rmInSurf off every atom is a surface atom and surface
    // detection is skipped entirely.
    const SurfaceFlags flags = runStage(report, "surface", [&] {
        if (!config.rmInSurf) {
            SurfaceFlags all;
            all.isSurface.assign(structure.size(), 1);
            all.algorithm = config.findSurfAlg;
            all.alphaMult = config.alphaMult;
            all.numNeighThreshold = config.numNeighThreshold;
            return all;
        }
        return findSurfaceAtoms(structure, neighbors, config.findSurfAlg, config.alphaMult,
                                config.numNeighThreshold);
    });
    report.surfaceAtomCount = flags.surfaceCount();

    if (config.voxelSurf) {
        const PointCloud cloud = runStage(report, "voxel.points", [&] {
            PointCloud c = genSurfacePoints(structure, neighbors, flags, config.numPoints,
                                            config.rmInSurf, config.numCPUs);
            if (c.size() == 0)
                throw NumericError("no surface points survived the overlap filters");
            return c;
        });
        if (config.dumpSurfacePoints && !config.outDir.empty()) {
            runStage(report, "voxel.dump", [&] {
                std::filesystem::create_directories(config.outDir);
                dumpSurfacePointsXyz(cloud, structure, config.outDir + "/surface_points.xyz");
            });
        }
        const BinaryGrid grid = runStage(report, "voxel.grid", [&] {
            return voxelise(cloud, config.gridNum, structure, config.numCPUs);
        });
        PipelineResult res;
        res.series = runStage(report, "voxel.count", [&] {
            // Count at the same scheduled box lengths as the exact
            // pipeline, snapped to whole-voxel multiples of this grid.
            const std::vector<double> lengths = lengthSchedule(
                structure, config.minLenMult, config.maxLenMult, config.numBoxLen);
            return countBoxesGrid(grid, snapScalesToLengths(lengths, grid));
        });
        res.fit = runStage(report, "voxel.fit", [&] {
            return dimensionFromCounts(res.series, config.minSample, config.confLvl,
                                       config.trimLen);
        });
        report.voxel = std::move(res);
    }

    if (config.exactSurf) {
        PipelineResult res;
        res.series = runStage(report, "exact.count", [&] {
            const std::vector<double> lengths = lengthSchedule(
                structure, config.minLenMult, config.maxLenMult, config.numBoxLen);
            return exactBoxSeries(structure, neighbors, flags, lengths, config.rmInSurf,
                                  config.numCPUs);
        });
        res.fit = runStage(report, "exact.fit", [&] {
            return dimensionFromCounts(res.series, config.minSample, config.confLvl,
                                       config.trimLen);
        });
        report.exact = std::move(res);
    }

    if (config.dumpSurfaceAtoms && !config.outDir.empty()) {
        runStage(report, "dump.surfaceAtoms", [&] {
            std::filesystem::create_directories(config.outDir);
            dumpSurfaceAtomsXyz(structure, flags, config.outDir + "/surface_atoms.xyz");
        });
    }
    if (!config.outDir.empty()) {
        runStage(report, "emit", [&] { emitPlotData(report, config.outDir); });
    }
}

void writeCountsCsv(const BoxCountSeries& series, const FitResult& fit,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << "log10_length,log10_count,in_fit_window\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double l = series.lengths[i];
        const int inWindow = (l <= fit.lMax && l >= fit.lMin) ? 1 : 0;
        out << fmt(std::log10(l)) << ","
            << fmt(std::log10(static_cast<double>(series.counts[i]))) << "," << inWindow
            << "\n";
    }
    if (!out.good()) throw ParseError("write to '" + path + "' failed");
}

} // namespace

double RunReport::stageSeconds(const std::string& prefix) const {
    double total = 0.0;
    for (const StageTiming& t : timings)
        if (t.stage.rfind(prefix, 0) == 0) total += t.seconds;
    return total;
}

RunReport runBoxCnt(const RunConfig& config) {
    validateConfig(config);
    if (config.inpFilePath.empty()) throw ConfigError("no input file given");
    RunReport report;
    report.config = config;
    const Structure structure = runStage(report, "load", [&] {
        return loadXyz(config.inpFilePath, config.radType);
    });
    runPipelines(config, structure, report);
    return report;
}

RunReport runBoxCnt(const RunConfig& config, const Structure& structure) {
    validateConfig(config);
    RunReport report;
    report.config = config;
    runPipelines(config, structure, report);
    return report;
}

std::string configKeyValueBlock(const RunConfig& c) {
    std::string s;
    auto kv = [&s](const std::string& k, const std::string& v) { s += k + "=" + v + "\n"; };
    auto onOff = [](bool b) { return b ? "true" : "false"; };
    kv("inpFilePath", c.inpFilePath);
    kv("radType", radiusTypeName(c.radType));
    kv("radMult", fmt(c.radMult));
    kv("findSurfAlg", surfaceAlgorithmName(c.findSurfAlg));
    kv("alphaMult", fmt(c.alphaMult));
    kv("trimLen", onOff(c.trimLen));
    kv("minSample", std::to_string(c.minSample));
    kv("confLvl", fmt(c.confLvl));
    kv("rmInSurf", onOff(c.rmInSurf));
    kv("voxelSurf", onOff(c.voxelSurf));
    kv("numPoints", std::to_string(c.numPoints));
    kv("gridNum", std::to_string(c.gridNum));
    kv("exactSurf", onOff(c.exactSurf));
    kv("minLenMult", fmt(c.minLenMult));
    kv("maxLenMult", fmt(c.maxLenMult));
    kv("numCPUs", std::to_string(c.numCPUs));
    kv("numBoxLen", std::to_string(c.numBoxLen));
    kv("numNeighThreshold", std::to_string(c.numNeighThreshold));
    return s;
}

namespace {

void appendFitBlock(std::string& s, const std::string& tag, const PipelineResult& res) {
    auto kv = [&s, &tag](const std::string& k, const std::string& v) {
        s += tag + "." + k + "=" + v + "\n";
    };
    kv("dBox", fmt(res.fit.dBox));
    kv("ciLow", fmt(res.fit.ciLow));
    kv("ciHigh", fmt(res.fit.ciHigh));
    kv("r2", fmt(res.fit.r2));
    kv("intercept", fmt(res.fit.intercept));
    kv("lMin", fmt(res.fit.lMin));
    kv("lMax", fmt(res.fit.lMax));
    kv("pointsUsed", std::to_string(res.fit.pointsUsed));
    std::string lens, counts;
    for (std::size_t i = 0; i < res.series.size(); ++i) {
        if (i) {
            lens += ",";
            counts += ",";
        }
        lens += fmt(res.series.lengths[i]);
        counts += std::to_string(res.series.counts[i]);
    }
    kv("lengths", lens);
    kv("counts", counts);
}

} // namespace

std::string reportKeyValueBlock(const RunReport& report) {
    std::string s = configKeyValueBlock(report.config);
    s += "atomCount=" + std::to_string(report.atomCount) + "\n";
    s += "surfaceAtomCount=" + std::to_string(report.surfaceAtomCount) + "\n";
    if (report.voxel) appendFitBlock(s, "voxel", *report.voxel);
    if (report.exact) appendFitBlock(s, "exact", *report.exact);
    return s;
}

void emitPlotData(const RunReport& report, const std::string& outDir) {
    std::filesystem::create_directories(outDir);
    if (report.voxel)
        writeCountsCsv(report.voxel->series, report.voxel->fit, outDir + "/voxel_counts.csv");
    if (report.exact)
        writeCountsCsv(report.exact->series, report.exact->fit, outDir + "/exact_counts.csv");

    {
        const std::string path = outDir + "/fits.csv";
        std::ofstream out(path);
        if (!out) throw ParseError("cannot open '" + path + "' for writing");
        out << "representation,dBox,ciLow,ciHigh,r2,intercept,lMin,lMax,pointsUsed\n";
        auto row = [&out](const char* tag, const FitResult& f) {
            out << tag << "," << fmt(f.dBox) << "," << fmt(f.ciLow) << "," << fmt(f.ciHigh)
                << "," << fmt(f.r2) << "," << fmt(f.intercept) << "," << fmt(f.lMin) << ","
                << fmt(f.lMax) << "," << f.pointsUsed << "\n";
        };
        if (report.voxel) row("voxel", report.voxel->fit);
        if (report.exact) row("exact", report.exact->fit);
        if (!out.good()) throw ParseError("write to '" + path + "' failed");
    }
    {
        const std::string path = outDir + "/report.txt";
        std::ofstream out(path);
        if (!out) throw ParseError("cannot open '" + path + "' for writing");
        out << reportKeyValueBlock(report);
        if (!out.good()) throw ParseError("write to '" + path + "' failed");
    }
}

std::vector<BenchRow> bench(const std::vector<ShapeSpec>& shapes, int repeats,
                            const RunConfig& base) {
    if (repeats < 3) throw ConfigError("bench needs at least 3 repeats");
    if (shapes.empty()) throw ConfigError("bench needs at least one shape");

    RunConfig config = base;
    config.inpFilePath.clear();
    config.outDir.clear();
    config.dumpSurfaceAtoms = false;
    config.dumpSurfacePoints = false;

    std::vector<BenchRow> rows;
    for (const ShapeSpec& spec : shapes) {
        const Structure structure = generateStructure(spec, config.radType);
        const std::string label =
            std::string(shapeKindName(spec.kind)) + "-" + std::to_string(spec.order);

        std::vector<double> voxelT, exactT;
        for (int r = 0; r < repeats; ++r) {
            const RunReport rep = runBoxCnt(config, structure);
            if (config.voxelSurf) voxelT.push_back(rep.stageSeconds("voxel."));
            if (config.exactSurf) exactT.push_back(rep.stageSeconds("exact."));
        }

        auto addRow = [&](const char* pipeline, const std::vector<double>& times) {
            if (times.empty()) return;
            const std::vector<double> kept = iqrFilter(times);
            BenchRow row;
            row.label = label;
            row.atoms = structure.size();
            row.pipeline = pipeline;
            row.repeats = repeats;
            row.kept = static_cast<int>(kept.size());
            row.meanSeconds = meanOf(kept);
            row.medianSeconds = medianOf(times);
            rows.push_back(std::move(row));
        };
        addRow("voxel", voxelT);
        addRow("exact", exactT);
    }
    return rows;
}

void writeBenchCsv(const std::vector<BenchRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << "label,atoms,pipeline,repeats,kept,mean_s,median_s\n";
    for (const BenchRow& r : rows)
        out << r.label << "," << r.atoms << "," << r.pipeline << "," << r.repeats << ","
            << r.kept << "," << fmt(r.meanSeconds) << "," << fmt(r.medianSeconds) << "\n";
    if (!out.good()) throw ParseError("write to '" + path + "' failed");
}

} // namespace boxdim
