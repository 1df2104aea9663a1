// Command-line front end: edge detection on PGM images, the synthetic
// noise-robustness benchmark, and the recognition experiment harness.
// Exit codes: 0 success, 1 runtime/IO failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ssg/baselines.hpp"
#include "ssg/errors.hpp"
#include "ssg/image.hpp"
#include "ssg/io.hpp"
#include "ssg/lst.hpp"
#include "ssg/methods.hpp"
#include "ssg/otsu.hpp"
#include "ssg/recognize.hpp"
#include "ssg/synthbench.hpp"

namespace {

namespace fs = std::filesystem;

ssg::Image to_image(const ssg::BinaryMap& map) {
    ssg::Image img(map.width, map.height);
    for (std::size_t i = 0; i < map.bits.size(); ++i) {
        img.pixels()[i] = map.bits[i] ? 255.0 : 0.0;
    }
    return img;
}

struct DetectArgs {
    std::string input;
    std::string output;
    std::string method = "lst";
    double k = 1.0;
    double floor = 1.0;
    std::string binarize_path;
    std::string raw_csv_path;
};

int run_detect(const DetectArgs& args) {
    const ssg::Image img = ssg::read_pgm(args.input);
    ssg::LstConfig cfg;
    cfg.k = args.k;
    cfg.epsilon_floor = args.floor;

    const ssg::ResponseMap resp = ssg::apply_method(args.method, img, cfg);
    ssg::write_pgm(resp.values, args.output, /*normalize=*/true);
    if (!args.binarize_path.empty()) {
        ssg::write_pgm(to_image(ssg::binarize(resp)), args.binarize_path,
                       /*normalize=*/false);
    }
    if (!args.raw_csv_path.empty()) {
        ssg::write_csv_matrix(resp.values, args.raw_csv_path);
    }
    return 0;
}

struct BenchArgs {
    std::vector<std::string> shapes{"step", "gaussian", "ramp"};
    std::vector<double> noise{0, 5, 10, 20};
    std::vector<std::string> methods = ssg::method_names();
    int seeds_per_cell = 50;
    int size = 64;
    double amplitude = 255.0;
    int tolerance = 2;
    std::uint64_t seed = 1;
    std::string out = "report.csv";
    std::string dump_dir;
};

int run_synth_bench(const BenchArgs& args) {
    std::vector<ssg::SyntheticSpec> specs;
    for (const std::string& shape : args.shapes) {
        for (double noise : args.noise) {
            ssg::SyntheticSpec spec;
            spec.shape = ssg::shape_from_name(shape);
            spec.size = args.size;
            spec.amplitude = args.amplitude;
            spec.noise_pct = noise;
            spec.seed = args.seed;
            specs.push_back(spec);
        }
    }

    ssg::BenchOptions options;
    options.tolerance_px = args.tolerance;
    if (!args.dump_dir.empty()) {
        fs::create_directories(args.dump_dir);
        options.dump_dir = args.dump_dir;
    }

    const ssg::BenchReport report =
        ssg::run_bench(args.methods, specs, args.seeds_per_cell, options);
    if (report.rows.empty()) {
        std::cerr << "every benchmark cell failed\n";
        return 1;
    }
    ssg::write_report_csv(report, args.out);

    std::cout << "method,shape,noise_pct,mean_rate,std_rate,mean_err,mean_contrast\n";
    for (const ssg::AggregateRow& agg : ssg::aggregate(report)) {
        std::cout << agg.method << ',' << ssg::shape_name(agg.shape) << ','
                  << ssg::format_double(agg.noise_pct) << ','
                  << ssg::format_double(agg.mean_rate) << ','
                  << ssg::format_double(agg.std_rate) << ','
                  << ssg::format_double(agg.mean_error) << ','
                  << ssg::format_double(agg.mean_contrast) << '\n';
    }
    return 0;
}

struct RecognizeArgs {
    std::string data;
    std::vector<std::string> methods{"lst", "sobel", "prewitt", "kirsch", "sis"};
    std::vector<double> train_frac{0.5};
    std::vector<double> noise{0};
    int seeds = 10;
    std::uint64_t seed = 1;
    int downsample = 4;
    int k = 1;
    std::string out = "results.csv";
};

int run_recognize(const RecognizeArgs& args) {
    const ssg::LabeledDataset dataset = ssg::ingest_dataset(args.data);

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw ssg::IoFailure("cannot open for writing: " + args.out);
    out << "method,train_frac,noise_pct,seed,accuracy,auc\n";

    for (const std::string& method : args.methods) {
        for (double frac : args.train_frac) {
            for (double noise : args.noise) {
                for (int i = 0; i < args.seeds; ++i) {
                    ssg::ExperimentOptions opt;
                    opt.method = method;
                    opt.train_fraction = frac;
                    opt.noise_pct = noise;
                    opt.seed = args.seed + static_cast<std::uint64_t>(i);
                    opt.downsample = args.downsample;
                    opt.k = args.k;
                    const double acc = ssg::accuracy_experiment(dataset, opt);
                    const double auc = ssg::roc_auc(dataset, opt);
                    out << method << ',' << ssg::format_double(frac) << ','
                        << ssg::format_double(noise) << ',' << opt.seed << ','
                        << ssg::format_double(acc) << ','
                        << ssg::format_double(auc) << '\n';
                }
            }
        }
    }
    if (!out) throw ssg::IoFailure("write failed: " + args.out);
    return 0;
}

struct MkdataArgs {
    std::string out;
    int classes = 5;
    int per_class = 10;
    int size = 64;
    std::uint64_t seed = 7;
};

int run_mkdata(const MkdataArgs& args) {
    ssg::write_dataset(
        ssg::make_texture_dataset(args.classes, args.per_class, args.size, args.seed),
        args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perceived-brightness edge detection, baselines and benchmarks"};
    app.require_subcommand(1);

    const auto method_check = CLI::IsMember(ssg::method_names());
    const auto open_unit = CLI::Validator(
        [](std::string& s) {
            const double v = std::stod(s);
            return v > 0.0 && v < 1.0
                       ? std::string{}
                       : std::string("must lie strictly between 0 and 1");
        },
        "FLOAT in (0,1)");

    DetectArgs detect;
    CLI::App* cmd_detect =
        app.add_subcommand("detect", "Run an edge operator on a PGM image");
    cmd_detect->add_option("--input", detect.input, "Input PGM (P2 or P5)")
        ->required();
    cmd_detect->add_option("--output", detect.output, "Normalized response PGM")
        ->required();
    cmd_detect->add_option("--method", detect.method, "Edge operator")
        ->check(method_check)
        ->capture_default_str();
    cmd_detect->add_option("--k", detect.k, "Brightness scaling constant")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_detect->add_option("--floor", detect.floor, "Intensity floor before log10")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_detect->add_option("--binarize", detect.binarize_path,
                           "Also write the Otsu-binarized edge map here");
    cmd_detect->add_option("--raw-csv", detect.raw_csv_path,
                           "Also dump the raw response as CSV here");

    BenchArgs bench;
    CLI::App* cmd_bench = app.add_subcommand(
        "synth-bench", "Noise-robustness benchmark on synthetic shapes");
    cmd_bench->add_option("--shapes", bench.shapes, "Shapes to generate")
        ->delimiter(',')
        ->check(CLI::IsMember({"step", "gaussian", "ramp"}))
        ->capture_default_str();
    cmd_bench->add_option("--noise", bench.noise, "Noise levels, % of image max")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 100.0))
        ->capture_default_str();
    cmd_bench->add_option("--methods", bench.methods, "Operators to benchmark")
        ->delimiter(',')
        ->check(method_check)
        ->capture_default_str();
    cmd_bench->add_option("--seeds-per-cell", bench.seeds_per_cell,
                          "Noise realizations per cell")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    cmd_bench->add_option("--size", bench.size, "Image side length")
        ->check(CLI::Range(16, 4096))
        ->capture_default_str();
    cmd_bench->add_option("--amplitude", bench.amplitude, "Peak intensity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_bench->add_option("--tolerance", bench.tolerance,
                          "Localization tolerance in pixels")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
    cmd_bench->add_option("--seed", bench.seed, "Base seed")
        ->capture_default_str();
    cmd_bench->add_option("--out", bench.out, "Per-cell CSV report path")
        ->capture_default_str();
    cmd_bench->add_option("--dump-dir", bench.dump_dir,
                          "Directory for per-cell response PGMs");

    RecognizeArgs recog;
    CLI::App* cmd_recog = app.add_subcommand(
        "recognize", "Nearest-neighbour recognition sweeps on a PGM dataset");
    cmd_recog->add_option("--data", recog.data, "Dataset root (class subdirs)")
        ->required();
    cmd_recog->add_option("--methods", recog.methods, "Feature operators")
        ->delimiter(',')
        ->check(method_check)
        ->capture_default_str();
    cmd_recog->add_option("--train-frac", recog.train_frac, "Training fractions")
        ->delimiter(',')
        ->check(open_unit)
        ->capture_default_str();
    cmd_recog->add_option("--noise", recog.noise, "Test-time noise levels, %")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 100.0))
        ->capture_default_str();
    cmd_recog->add_option("--seeds", recog.seeds, "Repetitions per cell")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    cmd_recog->add_option("--seed", recog.seed, "Base seed")
        ->capture_default_str();
    cmd_recog->add_option("--downsample", recog.downsample,
                          "Feature block-mean factor")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    cmd_recog->add_option("--k", recog.k, "Neighbours for the k-NN vote")
        ->check(CLI::Range(1, 999))
        ->capture_default_str();
    cmd_recog->add_option("--out", recog.out, "Results CSV path")
        ->capture_default_str();

    MkdataArgs mkdata;
    CLI::App* cmd_mkdata = app.add_subcommand(
        "mkdata", "Generate the synthetic texture dataset in ingest layout");
    cmd_mkdata->add_option("--out", mkdata.out, "Output dataset root")->required();
    cmd_mkdata->add_option("--classes", mkdata.classes, "Number of classes")
        ->check(CLI::Range(2, 512))
        ->capture_default_str();
    cmd_mkdata->add_option("--per-class", mkdata.per_class, "Images per class")
        ->check(CLI::Range(2, 10000))
        ->capture_default_str();
    cmd_mkdata->add_option("--size", mkdata.size, "Image side length")
        ->check(CLI::Range(16, 4096))
        ->capture_default_str();
    cmd_mkdata->add_option("--seed", mkdata.seed, "Generator seed")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_detect)) return run_detect(detect);
        if (app.got_subcommand(cmd_bench)) return run_synth_bench(bench);
        if (app.got_subcommand(cmd_recog)) return run_recognize(recog);
        if (app.got_subcommand(cmd_mkdata)) return run_mkdata(mkdata);
    } catch (const ssg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
