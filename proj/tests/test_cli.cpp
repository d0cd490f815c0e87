#include "cli.hpp"
#include "doctest.h"
#include "nrshift/io.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace nrshift;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config(const char* name) { return std::string(NRSHIFT_CONFIG_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "nrshift_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int subprocess(const std::string& args) {
    const std::string cmd = std::string(NRSHIFT_TOOL) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("symbol command") {
    const Result r = run_cli({"symbol", config("two_factor.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("1,1: num=[1] den=[2,-1]") != std::string::npos);

    const Result at = run_cli({"symbol", config("two_factor.json"), "--at", "1,0"});
    CHECK(at.code == 0);
    CHECK(at.out == "1 0\n0 1\n");

    CHECK(run_cli({"symbol", write_scratch("empty.json", "{\"factors\":[]}")}).code == 2);
    CHECK(run_cli({"symbol", write_scratch("bad.json", "{\"factors\":[{\"a\":[2,0]")}).code == 2);
    CHECK(run_cli({"symbol", write_scratch("nob.json", "{\"factors\":[{\"a\":2,\"c\":-1,\"d\":0}]}")}).code == 2);
    CHECK(run_cli({"symbol", config("two_factor.json"), "--at", "1;0"}).code == 2);

    const Result broken = run_cli({"symbol", config("broken_factor.json")});
    CHECK(broken.code == 3);
    CHECK(broken.err.find("NotSingularOnTorus") != std::string::npos);
}

TEST_CASE("range command") {
    const Result r = run_cli({"range", config("two_factor.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "radius=1.000000000\n");

    CHECK(run_cli({"range", config("two_factor.json"), "--tau-samples", "8"}).code == 2);
    CHECK(run_cli({"range", config("two_factor.json"), "--format", "xml"}).code == 2);

    // one factor: the hull is the circle through 1 and 1/3
    const std::string single = write_scratch("single.json", "{\"factors\":[{\"a\":[2,0],\"b\":[-1,0],\"c\":[-1,0],\"d\":[0,0]}]}");
    const fs::path csv = scratch("single.csv");
    REQUIRE(run_cli({"range", single, "--out", csv.string()}).code == 0);
    std::ifstream in(csv);
    const CsvCurve curve = read_curve_csv(in);
    REQUIRE(curve.points.size() > 16);
    double worst = 0.0;
    for (const auto& p : curve.points) worst = std::max(worst, std::abs(std::hypot(p.x - 2.0 / 3.0, p.y) - 1.0 / 3.0));
    CHECK(worst <= 1e-6);

    const fs::path json = scratch("range.json");
    REQUIRE(run_cli({"range", config("two_factor.json"), "--tau-samples", "64", "--angle-samples", "64", "--format",
                     "json", "--out", json.string()})
                .code == 0);
    const std::string text = slurp(json);
    CHECK(text.rfind("{\"hull\":[[", 0) == 0);
    CHECK(text.find("\"radius\":1") != std::string::npos);
}

TEST_CASE("range output is byte-identical across runs and thread counts") {
    const fs::path a = scratch("det_a.csv"), b = scratch("det_b.csv"), c = scratch("det_c.csv");
    const std::vector<std::string> base{"range", config("three_factor.json"), "--tau-samples", "96", "--angle-samples", "48", "--dense"};
    auto with = [&](const fs::path& p, const char* threads) {
        auto v = base;
        v.insert(v.end(), {"--out", p.string(), "--threads", threads, "--seed", "5"});
        return run_cli(v).code;
    };
    REQUIRE(with(a, "1") == 0);
    REQUIRE(with(b, "1") == 0);
    REQUIRE(with(c, "4") == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));
}

TEST_CASE("boundary command") {
    const Result r = run_cli({"boundary", "--a", "2", "--c", "1", "--samples", "64"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("theta,x,y\n0,1,0\n", 0) == 0);

    const fs::path out = scratch("env.csv");
    const Result chk = run_cli({"boundary", "--a", "2", "--c", "1", "--check", "--inner", "--out", out.string()});
    CHECK(chk.code == 0);
    CHECK(chk.out.find("gap=0.049382716") != std::string::npos);
    CHECK(chk.out.find("convex=true") != std::string::npos);
    CHECK(fs::exists(scratch("env_inner.csv")));
    std::ifstream in(out);
    const CsvCurve curve = read_curve_csv(in);
    CHECK(curve.has_theta);
    CHECK(curve.points.size() == 1024);

    CHECK(run_cli({"boundary", "--a", "2", "--c", "0.5"}).code == 2);
    CHECK(run_cli({"boundary", "--a", "2"}).code == 2);
}

TEST_CASE("zero-test command") {
    CHECK(run_cli({"zero-test", "--c1", "1", "--c2", "0.5"}).out.rfind("verdict=Boundary\n", 0) == 0);
    CHECK(run_cli({"zero-test", "--c1", "0.9", "--c2", "0.9"}).out.rfind("verdict=Interior\n", 0) == 0);
    const Result no = run_cli({"zero-test", "--c1", "0.5", "--c2", "0.5"});
    CHECK(no.out.rfind("verdict=NotInterior\n", 0) == 0);
    CHECK(no.out.find("product=0.25") != std::string::npos);
    CHECK(no.out.find("witness_taus=0/360") != std::string::npos);

    const Result cfg = run_cli({"zero-test", "--config", config("two_factor.json")});
    CHECK(cfg.code == 0);
    CHECK(cfg.out.rfind("verdict=InteriorWitness\n", 0) == 0);

    CHECK(run_cli({"zero-test"}).code == 2);
    CHECK(run_cli({"zero-test", "--c1", "1"}).code == 2);
    CHECK(run_cli({"zero-test", "--c1", "abc", "--c2", "1"}).code == 2);
    CHECK(run_cli({"zero-test", "--config", config("three_factor.json")}).code == 2);
    CHECK(run_cli({"zero-test", "--c1", "-1", "--c2", "1"}).code == 3);
}

TEST_CASE("verify command") {
    const Result two = run_cli({"verify", config("two_factor.json")});
    CHECK(two.code == 0);
    CHECK(two.out.find("FAIL") == std::string::npos);
    CHECK(two.out.find("minor_axis max_dev=") != std::string::npos);
    CHECK(two.out.find("tmw_cross_oracle max_dev=") != std::string::npos);

    const Result three = run_cli({"verify", config("three_factor.json"), "--seed", "3"});
    CHECK(three.code == 0);
    CHECK(three.out.find("FAIL") == std::string::npos);

    CHECK(run_cli({"verify", config("broken_factor.json")}).code == 3);
}

TEST_CASE("plot command") {
    const fs::path env = scratch("plot_env.csv"), svg = scratch("plot.svg");
    REQUIRE(run_cli({"boundary", "--a", "2", "--c", "1", "--samples", "256", "--out", env.string()}).code == 0);
    REQUIRE(run_cli({"plot", env.string(), "-o", svg.string(), "--with-circles", "24"}).code == 0);
    const std::string text = slurp(svg);
    std::size_t circles = 0;
    for (auto pos = text.find("<circle"); pos != std::string::npos; pos = text.find("<circle", pos + 1)) ++circles;
    CHECK(circles == 24);
    CHECK(text.find("viewBox=\"-1.2 -1.2 2.4 2.4\"") != std::string::npos);
    const auto green = text.find("stroke=\"green\"");
    REQUIRE(green != std::string::npos);
    const auto path_start = text.rfind("<path", green);
    const std::string path = text.substr(path_start, green - path_start);
    CHECK(static_cast<std::size_t>(std::count(path.begin(), path.end(), 'L')) + 1 >= 256);
    CHECK(text.find("stroke=\"red\"") != std::string::npos);

    CHECK(run_cli({"plot", scratch("nope.csv").string(), "-o", svg.string()}).code == 2);
    CHECK(run_cli({"plot", write_scratch("junk.csv", "a,b\n1,2\n"), "-o", svg.string()}).code == 2);

    // range output feeds plot directly
    const fs::path hull = scratch("plot_hull.csv");
    REQUIRE(run_cli({"range", config("two_factor.json"), "--tau-samples", "32", "--angle-samples", "32", "--out", hull.string()}).code == 0);
    CHECK(run_cli({"plot", hull.string(), "-o", svg.string()}).code == 0);
}

TEST_CASE("CSV round trip is lossless") {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Point> pts;
    for (int i = 0; i < 500; ++i) pts.push_back({g(rng) * 1e-7, g(rng) * 1e5});
    std::stringstream ss;
    write_points_csv(ss, pts);
    const CsvCurve back = read_curve_csv(ss);
    CHECK(back.points == pts);
}

TEST_CASE("exit codes through a real process") {
    const std::string two = config("two_factor.json");
    CHECK(subprocess("symbol " + two) == 0);
    CHECK(subprocess("verify " + two) == 0);
    CHECK(subprocess("verify " + config("broken_factor.json")) == 3);
    CHECK(subprocess("range " + two + " --tau-samples 8") == 2);
    CHECK(subprocess("no-such-command") == 2);
    CHECK(subprocess("") == 2);
    CHECK(subprocess("--help") == 0);
}
