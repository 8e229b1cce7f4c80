#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxdim/errors.hpp"
#include "boxdim/pipeline.hpp"
#include "boxdim/synth.hpp"
#include "boxdim/xyz.hpp"

namespace {

struct CliState {
    boxdim::RunConfig config;
    std::string radType = "atomic";
    std::string findSurfAlg = "alphaShape";
    bool dumpConfig = false;
};

void addConfigOptions(CLI::App& cmd, CliState& st) {
    boxdim::RunConfig& c = st.config;
    cmd.add_option("--rad-type", st.radType, "Radius convention: atomic or metallic")
        ->capture_default_str();
    cmd.add_option("--rad-mult", c.radMult, "Radius multiplier for sphere sizes and bonds")
        ->capture_default_str();
    cmd.add_option("--find-surf-alg", st.findSurfAlg,
                   "Surface atom detection: alphaShape, convexHull or numNeigh")
        ->capture_default_str();
    cmd.add_option("--alpha-mult", c.alphaMult, "Alpha = alphaMult * smallest radius")
        ->capture_default_str();
    cmd.add_flag("--trim-len,!--no-trim-len", c.trimLen,
                 "Pre-trim flat/steep ends of the count series");
    cmd.add_option("--min-sample", c.minSample, "Smallest fit window (points)")
        ->capture_default_str();
    cmd.add_option("--conf-lvl", c.confLvl, "Confidence level for the slope interval (%)")
        ->capture_default_str();
    cmd.add_flag("--rm-in-surf,!--no-rm-in-surf", c.rmInSurf,
                 "Detect surface atoms and drop inner-cavity surfaces");
    cmd.add_flag("--voxel-surf,!--no-voxel-surf", c.voxelSurf,
                 "Run the voxelised point-cloud representation");
    cmd.add_option("--num-points", c.numPoints, "Candidate points per atom sphere")
        ->capture_default_str();
    cmd.add_option("--grid-num", c.gridNum, "Voxel grid resolution per edge")
        ->capture_default_str();
    cmd.add_flag("--exact-surf,!--no-exact-surf", c.exactSurf,
                 "Run the exact sphere-union representation");
    cmd.add_option("--min-len-mult", c.minLenMult,
                   "Smallest box length = minLenMult * smallest radius")
        ->capture_default_str();
    cmd.add_option("--max-len-mult", c.maxLenMult,
                   "Largest box length = maxLenMult * largest radius")
        ->capture_default_str();
    cmd.add_option("--num-cpus", c.numCPUs, "Worker threads")->capture_default_str();
    cmd.add_option("--num-box-len", c.numBoxLen, "Box lengths in the exact schedule")
        ->capture_default_str();
    cmd.add_option("--num-neigh-threshold", c.numNeighThreshold,
                   "numNeigh: surface if fewer neighbors than this")
        ->capture_default_str();
}

void finishConfig(CliState& st) {
    st.config.radType = boxdim::parseRadiusType(st.radType);
    st.config.findSurfAlg = boxdim::parseSurfaceAlgorithm(st.findSurfAlg);
}

void printReport(const boxdim::RunReport& report) {
    std::fputs(boxdim::reportKeyValueBlock(report).c_str(), stdout);
    if (report.config.verbose) {
        for (const boxdim::StageTiming& t : report.timings)
            std::printf("time.%s=%.6f\n", t.stage.c_str(), t.seconds);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Box-counting fractal dimension of sphere-union surfaces"};
    app.require_subcommand(1);

    CliState st;

    CLI::App* run = app.add_subcommand("run", "Estimate the dimension of an xyz structure");
    std::string inputPath;
    run->add_option("input", inputPath, "Input .xyz file");
    addConfigOptions(*run, st);
    run->add_option("--out-dir", st.config.outDir, "Write counts/fits CSVs and report here");
    run->add_flag("--dump-surface-atoms", st.config.dumpSurfaceAtoms,
                  "Also write surface_atoms.xyz to --out-dir");
    run->add_flag("--dump-surface-points", st.config.dumpSurfacePoints,
                  "Also write surface_points.xyz to --out-dir");
    run->add_flag("--verbose", st.config.verbose, "Print per-stage timings");
    run->add_flag("--dump-config", st.dumpConfig,
                  "Print the effective configuration and exit");

    CLI::App* bench = app.add_subcommand("bench", "Time both representations on FCC shapes");
    std::string benchShape = "octahedron";
    std::vector<int> benchOrders = {4, 6, 9, 12};
    int benchRepeats = 5;
    std::string benchOut;
    bench->add_option("--shape", benchShape, "single, octahedron, cube or tetrahedron")
        ->capture_default_str();
    bench->add_option("--orders", benchOrders, "Shape orders to time")->capture_default_str();
    bench->add_option("--repeats", benchRepeats, "Runs per shape (at least 3)")
        ->capture_default_str();
    bench->add_option("--out", benchOut, "Also write the table to this CSV file");
    addConfigOptions(*bench, st);

    CLI::App* synth = app.add_subcommand("synth", "Generate an FCC test cluster as xyz");
    std::string synthShape = "octahedron";
    boxdim::ShapeSpec synthSpec;
    std::string synthOut;
    synth->add_option("--shape", synthShape, "single, octahedron, cube or tetrahedron")
        ->capture_default_str();
    synth->add_option("--order", synthSpec.order, "Shape order")->capture_default_str();
    synth->add_option("--element", synthSpec.element, "Element symbol")
        ->capture_default_str();
    synth->add_option("--lattice-const", synthSpec.latticeConstant,
                      "FCC lattice constant (angstrom)")
        ->capture_default_str();
    synth->add_option("-o,--out", synthOut, "Output .xyz path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            finishConfig(st);
            st.config.inpFilePath = inputPath;
            if (st.dumpConfig) {
                std::fputs(boxdim::configKeyValueBlock(st.config).c_str(), stdout);
                return 0;
            }
            printReport(boxdim::runBoxCnt(st.config));
        } else if (bench->parsed()) {
            finishConfig(st);
            std::vector<boxdim::ShapeSpec> shapes;
            for (int order : benchOrders) {
                boxdim::ShapeSpec spec;
                spec.kind = boxdim::parseShapeKind(benchShape);
                spec.order = order;
                shapes.push_back(spec);
            }
            const std::vector<boxdim::BenchRow> rows =
                boxdim::bench(shapes, benchRepeats, st.config);
            std::printf("label,atoms,pipeline,repeats,kept,mean_s,median_s\n");
            for (const boxdim::BenchRow& r : rows)
                std::printf("%s,%zu,%s,%d,%d,%.6g,%.6g\n", r.label.c_str(), r.atoms,
                            r.pipeline.c_str(), r.repeats, r.kept, r.meanSeconds,
                            r.medianSeconds);
            if (!benchOut.empty()) boxdim::writeBenchCsv(rows, benchOut);
        } else if (synth->parsed()) {
            synthSpec.kind = boxdim::parseShapeKind(synthShape);
            const boxdim::Structure structure = boxdim::generateStructure(synthSpec);
            const std::string comment = std::string(boxdim::shapeKindName(synthSpec.kind)) +
                                        "-" + std::to_string(synthSpec.order) + " fcc " +
                                        synthSpec.element;
            boxdim::writeXyz(structure, synthOut, comment);
            std::printf("wrote %s (%zu atoms)\n", synthOut.c_str(), structure.size());
        }
    } catch (const boxdim::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const boxdim::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const boxdim::UnknownElementError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const boxdim::NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const boxdim::DegenerateInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}
