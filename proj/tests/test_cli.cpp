#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "tutte_cli_out.txt";
    std::string cmd = std::string(TUTTE_BIN) + " " + args + " > " + tmp.string() +
                      " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("count --nmax 4 --simple --multi").code == 2);
    CHECK(run("count --level bogus --nmax 3").code == 2);
    CHECK(run("nonsense").code == 2);
}

TEST_CASE("count forest family") {
    RunResult r = run("count --family forest --nmax 5 --mmax 5");
    CHECK(r.code == 0);
    // 5^3 = 125 labelled trees on 5 vertices; row (5,4)
    CHECK(r.out.find("5,4,125") != std::string::npos);
    CHECK(r.out.find("# config:") != std::string::npos);
}

TEST_CASE("count planar totals and determinism") {
    fs::path dir = fs::temp_directory_path() / "tutte_cli_test";
    fs::create_directories(dir);
    fs::path a = dir / "a.csv", b = dir / "b.csv";
    std::string args = "count --family planar --nmax 5 --out ";
    CHECK(run(args + a.string()).code == 0);
    CHECK(run(args + b.string()).code == 0);
    std::string ca = slurp(a);
    CHECK(ca == slurp(b)); // byte-identical artifacts
    CHECK(ca.find("5,total,1023") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("decompose the theta graph") {
    fs::path dir = fs::temp_directory_path() / "tutte_cli_theta";
    fs::create_directories(dir);
    fs::path gf = dir / "theta.json";
    std::ofstream(gf) << R"({"n":5,"edges":[[1,3],[3,2],[1,4],[4,2],[1,5],[5,2]]})";
    RunResult r = run("decompose --graph " + gf.string() + " --point 1");
    CHECK(r.code == 0);
    size_t m_bricks = 0, r_bricks = 0, pos = 0;
    while ((pos = r.out.find("\"type\": \"M\"", pos)) != std::string::npos) {
        ++m_bricks;
        ++pos;
    }
    pos = 0;
    while ((pos = r.out.find("\"type\": \"R\"", pos)) != std::string::npos) {
        ++r_bricks;
        ++pos;
    }
    // theta: one M-brick and three triangles, listed once for the full tree
    // and once more (all of them) for the pole-pointed restriction
    CHECK(m_bricks == 2);
    CHECK(r_bricks == 6);
    CHECK(r.out.find("two_connected") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("series terminals round trip through a custom family") {
    fs::path dir = fs::temp_directory_path() / "tutte_cli_terms";
    fs::remove_all(dir);
    RunResult r =
        run("series --stage terminals --family planar --nmax 5 --mmax 9 --out " +
            dir.string());
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "g3.json"));
    CHECK(fs::exists(dir / "config.json"));
    RunResult c = run("count --family custom:" + dir.string() +
                      " --nmax 5 --mmax 9 --level three-connected");
    CHECK(c.code == 0);
    CHECK(c.out.find("4,6,1") != std::string::npos);
    CHECK(c.out.find("5,total,25") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("verify dissymmetry suite") {
    RunResult r = run("verify --suite dissymmetry --nmax 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify writes a JSON report") {
    fs::path dir = fs::temp_directory_path() / "tutte_cli_report";
    fs::create_directories(dir);
    fs::path rp = dir / "report.json";
    RunResult r = run("verify --suite double-routes --nmax 4 --report " + rp.string());
    CHECK(r.code == 0);
    std::string report = slurp(rp);
    CHECK(report.find("\"all_pass\": true") != std::string::npos);
    CHECK(report.find("half_edge_convention") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("environment variables sit between flags and defaults") {
    RunResult r = run("count --family forest --nmax 4 --mmax 4");
    CHECK(r.out.find("4,3,16") != std::string::npos);
    fs::path dir = fs::temp_directory_path() / "tutte_cli_env";
    fs::create_directories(dir);
    fs::path out = dir / "env.csv";
    int rc = std::system(("TUTTE_NMAX=4 TUTTE_MMAX=4 " + std::string(TUTTE_BIN) +
                          " count --family forest --out " + out.string())
                             .c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    std::string csv = slurp(out);
    CHECK(csv.find("nmax=4") != std::string::npos);
    CHECK(csv.find("4,3,16") != std::string::npos);
    fs::remove_all(dir);
}
