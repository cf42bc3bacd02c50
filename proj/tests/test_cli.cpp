#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PENDULUM_CLI) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe.get())) out += buf.data();
    const int raw = pclose(pipe.release());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("floquet --mu 0").status == 2);
    CHECK(run("floquet --equilibrium p3 --mu 0 --alpha 1 --eps 0").status == 2);
    CHECK(run("tongues --preset fig9").status == 2);
    CHECK(run("verify --depth medium").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("normalize prints exact tables and a JSON dump") {
    const Run r = run("normalize --equilibrium p1 --n 1 --order 3 --json -");
    CHECK(r.status == 0);
    CHECK(r.out.find("k20^(1) = 1/4 +1/2*a1") != std::string::npos);
    CHECK(r.out.find("k11^(3) = 0") != std::string::npos);
    CHECK(r.out.find("k20: alpha = (1 - mu)/4 - 1/2*eps^1 - 1/8*eps^2 + 1/32*eps^3") != std::string::npos);
    CHECK(r.out.find("\"branches\"") != std::string::npos);
}

TEST_CASE("floquet subcommand") {
    const Run r = run("floquet --equilibrium p1 --mu 0 --alpha 0.25 --eps 0");
    CHECK(r.status == 0);
    CHECK(r.out.find("trace -2") != std::string::npos);
    CHECK(r.out.find("verdict boundary") != std::string::npos);
    CHECK(run("floquet --equilibrium p1 --mu 0 --alpha 1 --eps 0 --steps 50").status == 2);
}

TEST_CASE("boundary subcommand") {
    const Run r = run("boundary --equilibrium p2 --n 2 --mu 20 --eps 0.2");
    CHECK(r.status == 0);
    CHECK(r.out.find("alpha0 4") != std::string::npos);
    CHECK(r.out.find("floquet") != std::string::npos);
}

TEST_CASE("simulate emits tau,x,y") {
    const Run r = run("simulate --alpha 1 --x0 0.1 --tau-end 1 --dt 0.1 --stride 5");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("tau,x,y\n0,0.1,0\n", 0) == 0);
    const Run s = run("simulate --alpha 1 --x0 0 --strobe 3 --method splitting");
    CHECK(s.status == 0);
    CHECK(s.out == "tau,x,y\n0,0,0\n6.28318530717959,0,0\n12.5663706143592,0,0\n18.8495559215388,0,0\n");
    CHECK(run("simulate --method euler").status == 2);
}

TEST_CASE("tongues writes deterministic CSV and an SVG") {
    const std::string cfg = "cli_chart.ini";
    {
        std::ofstream f(cfg);
        f << "equilibrium = p1\nmu = -0.5\nalpha_min = 0\nalpha_max = 1.5\nn_alpha = 25\nn_eps = 6\neps_max = 0.5\n"
             "overlay_orders = 1\nsteps = 1000\n";
    }
    const Run a = run("tongues --config " + cfg + " --out-csv cli_a.csv --out-svg cli_a.svg");
    const Run b = run("tongues --config " + cfg + " --n-alpha 25 --out-csv cli_b.csv");
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.out.find("tongue roots on eps=0: 0.375 1.125") != std::string::npos);
    auto slurp = [](const char* p) {
        std::ifstream f(p);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    CHECK(slurp("cli_a.csv") == slurp("cli_b.csv"));
    CHECK(slurp("cli_a.svg").find("</svg>") != std::string::npos);
    CHECK(run("tongues --config " + cfg + " --n-alpha 1").status == 2);
    CHECK(run("tongues").status == 2);
    for (const char* p : {"cli_a.csv", "cli_b.csv", "cli_a.svg", "cli_chart.ini"}) std::remove(p);
}

TEST_CASE("verify with a corrupted golden file names the failing criterion") {
    {
        std::ofstream f("broken_golden.json");
        f << "{ \"format\": 1, \"k_tables\": [ {\"equilibrium\": \"P1\"";
    }
    const Run r = run("verify --depth quick --golden broken_golden.json");
    CHECK(r.status == 1);
    CHECK(r.out.find("A1 FAIL") != std::string::npos);
    CHECK(r.out.find("golden data unusable") != std::string::npos);
    CHECK(run("verify --depth quick --golden no_such_file.json").status == 1);
    std::remove("broken_golden.json");
}
