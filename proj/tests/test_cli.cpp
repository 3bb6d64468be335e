#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int afsolve(const std::string& args)
{
    const std::string cmd = std::string(AFSOLVE_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("afsolve_test_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("run writes the three output files")
{
    const fs::path dir = scratch("run");
    REQUIRE(afsolve("run --problem advection_sine --n 40 --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "averages.csv"));
    CHECK(fs::exists(dir / "points.csv"));
    std::ifstream meta(dir / "meta.json");
    const nlohmann::json j = nlohmann::json::parse(meta);
    CHECK(j["problem"] == "advection_sine");
    CHECK(j["n_cells"] == 40);
    CHECK(j["completed"] == true);
    std::ifstream pts(dir / "points.csv");
    std::string header;
    std::getline(pts, header);
    CHECK(header == "x,u");
    std::size_t lines = 0;
    for (std::string line; std::getline(pts, line);) ++lines;
    CHECK(lines == 41);
    fs::remove_all(dir);
}

TEST_CASE("configuration errors exit with status 1")
{
    CHECK(afsolve("run --problem no_such_problem") == 1);
    CHECK(afsolve("run --problem burgers_square --splitting vh --out " + scratch("vh").string()) == 1);
    CHECK(afsolve("run --problem advection --bp-average sometimes") == 1);
    CHECK(afsolve("frobnicate") == 1);
}

TEST_CASE("unlimited negativity exits with status 2 and records the reason")
{
    const fs::path dir = scratch("abort");
    CHECK(afsolve("run --problem double_rarefaction --no-limiters --out " + dir.string()) == 2);
    std::ifstream meta(dir / "meta.json");
    const nlohmann::json j = nlohmann::json::parse(meta);
    CHECK(j["completed"] == false);
    CHECK(j["abort_reason"].get<std::string>().find("pressure") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("verify subcommand")
{
    CHECK(afsolve("verify --suite ssprk3 --cases 100") == 0);
    CHECK(afsolve("verify --suite no_such_suite --cases 10") != 0);
}
