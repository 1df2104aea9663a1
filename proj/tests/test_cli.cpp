// End-to-end checks of the ssg executable: exit codes, file outputs and
// byte-level determinism. SSG_CLI_PATH is injected by the build.
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "ssg/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args, const fs::path& workdir) {
    const fs::path out = workdir / "stdout.txt";
    const fs::path err = workdir / "stderr.txt";
    const std::string cmd = std::string(SSG_CLI_PATH) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());

    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return std::move(ss).str();
    };
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string slurp_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

fs::path write_step_pgm(const fs::path& dir) {
    ssg::Image img(32, 32);
    for (int y = 0; y < 32; ++y) {
        for (int x = 0; x < 32; ++x) img.at(x, y) = x < 16 ? 0.0 : 255.0;
    }
    const fs::path p = dir / "step.pgm";
    ssg::write_pgm(img, p);
    return p;
}

}  // namespace

TEST_CASE("help exits zero for every subcommand") {
    testutil::TempDir dir("cli_help");
    CHECK(run_cli("--help", dir.path).exit_code == 0);
    for (const char* sub : {"detect", "synth-bench", "recognize", "mkdata"}) {
        const RunResult r = run_cli(std::string(sub) + " --help", dir.path);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("--help") != std::string::npos);
    }
}

TEST_CASE("detect writes deterministic outputs") {
    testutil::TempDir dir("cli_detect");
    const fs::path input = write_step_pgm(dir.path);
    const fs::path out = dir.path / "v.pgm";
    const fs::path bin = dir.path / "b.pgm";
    const fs::path csv = dir.path / "v.csv";

    const std::string args = "detect --input " + input.string() + " --method lst --output " +
                             out.string() + " --binarize " + bin.string() +
                             " --raw-csv " + csv.string();
    CHECK(run_cli(args, dir.path).exit_code == 0);
    REQUIRE(fs::exists(out));
    REQUIRE(fs::exists(bin));
    REQUIRE(fs::exists(csv));

    const std::string first = slurp_file(out) + slurp_file(bin) + slurp_file(csv);
    CHECK(run_cli(args, dir.path).exit_code == 0);
    CHECK(slurp_file(out) + slurp_file(bin) + slurp_file(csv) == first);
}

TEST_CASE("detect rejects unknown methods with the valid list") {
    testutil::TempDir dir("cli_badmethod");
    const fs::path input = write_step_pgm(dir.path);
    const RunResult r = run_cli(
        "detect --input " + input.string() + " --output " +
            (dir.path / "x.pgm").string() + " --method canny",
        dir.path);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("lst") != std::string::npos);
    CHECK(r.err.find("sobel") != std::string::npos);
}

TEST_CASE("detect reports missing inputs on stderr with exit 1") {
    testutil::TempDir dir("cli_missing");
    const RunResult r = run_cli(
        "detect --input /no/such.pgm --output " + (dir.path / "x.pgm").string(),
        dir.path);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("/no/such.pgm") != std::string::npos);
}

TEST_CASE("synth-bench rejects out-of-range noise") {
    testutil::TempDir dir("cli_badnoise");
    const RunResult r = run_cli("synth-bench --noise 150", dir.path);
    CHECK(r.exit_code == 2);
}

TEST_CASE("synth-bench writes byte-identical reruns") {
    testutil::TempDir dir("cli_bench");
    const fs::path csv = dir.path / "report.csv";
    const std::string args =
        "synth-bench --shapes step --methods lst,sobel --noise 0,10 "
        "--seeds-per-cell 2 --size 32 --out " + csv.string();
    CHECK(run_cli(args, dir.path).exit_code == 0);
    const std::string first = slurp_file(csv);
    // 2 methods x 1 shape x 2 noise x 2 seeds + header
    CHECK(std::count(first.begin(), first.end(), '\n') == 9);
    CHECK(first.rfind("method,shape,noise_pct,seed,loc_rate,mean_err,contrast\n",
                      0) == 0);

    CHECK(run_cli(args, dir.path).exit_code == 0);
    CHECK(slurp_file(csv) == first);
}

TEST_CASE("default synth-bench grid covers the full method/shape/noise matrix") {
    testutil::TempDir dir("cli_bench_full");
    const fs::path csv = dir.path / "report.csv";
    CHECK(run_cli("synth-bench --out " + csv.string(), dir.path).exit_code == 0);
    const std::string text = slurp_file(csv);
    // 7 methods x 3 shapes x 4 noise levels x 50 seeds + header
    CHECK(std::count(text.begin(), text.end(), '\n') == 7 * 3 * 4 * 50 + 1);
}

TEST_CASE("mkdata layout, determinism and argument contract") {
    testutil::TempDir dir("cli_mkdata");
    const fs::path data = dir.path / "data";
    const std::string args = "mkdata --out " + data.string() +
                             " --classes 3 --per-class 4 --size 32 --seed 5";
    CHECK(run_cli(args, dir.path).exit_code == 0);

    int dirs = 0, files = 0;
    for (const auto& cls : fs::directory_iterator(data)) {
        ++dirs;
        for ([[maybe_unused]] const auto& f : fs::directory_iterator(cls)) ++files;
    }
    CHECK(dirs == 3);
    CHECK(files == 12);

    const std::string sample =
        slurp_file(data / "class_1" / "img_002.pgm");
    const fs::path data2 = dir.path / "data2";
    CHECK(run_cli("mkdata --out " + data2.string() +
                      " --classes 3 --per-class 4 --size 32 --seed 5",
                  dir.path).exit_code == 0);
    CHECK(slurp_file(data2 / "class_1" / "img_002.pgm") == sample);

    CHECK(run_cli("mkdata --out " + (dir.path / "bad").string() + " --classes 1",
                  dir.path).exit_code == 2);
}

TEST_CASE("recognize sweeps the full grid deterministically") {
    testutil::TempDir dir("cli_recognize");
    const fs::path data = dir.path / "data";
    REQUIRE(run_cli("mkdata --out " + data.string() +
                        " --classes 3 --per-class 6 --size 32 --seed 5",
                    dir.path).exit_code == 0);

    const fs::path csv = dir.path / "results.csv";
    const std::string args = "recognize --data " + data.string() +
                             " --methods lst,sis --train-frac 0.5 --noise 0,10 "
                             "--seeds 2 --out " + csv.string();
    CHECK(run_cli(args, dir.path).exit_code == 0);
    const std::string first = slurp_file(csv);
    // 2 methods x 1 fraction x 2 noise x 2 seeds + header
    CHECK(std::count(first.begin(), first.end(), '\n') == 9);
    CHECK(first.rfind("method,train_frac,noise_pct,seed,accuracy,auc\n", 0) == 0);

    CHECK(run_cli(args, dir.path).exit_code == 0);
    CHECK(slurp_file(csv) == first);

    const RunResult missing =
        run_cli("recognize --data /no/such/dataset --out " + csv.string(), dir.path);
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("/no/such/dataset") != std::string::npos);
}
