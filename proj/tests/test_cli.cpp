#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HEXSTATION_CLI_PATH) + " " + args +
                          " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("--help exits 0") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("eval --help") == 0);
  CHECK(run_cli("predict --help") == 0);
}

TEST_CASE("unknown flags are usage errors (exit 2)") {
  CHECK(run_cli("--frobnicate") == 2);
  CHECK(run_cli("eval --no-such-flag") == 2);
  CHECK(run_cli("") == 2);  // a subcommand is required
}

TEST_CASE("missing files are runtime errors (exit 1)") {
  CHECK(run_cli("eval --config missing.json --store /nonexistent "
                "--city x --out /tmp/hexstation_cli_test_out.csv") == 1);
  CHECK(run_cli("export --in /nonexistent/map.csv --out /tmp/x.geojson") == 1);
  CHECK(run_cli("stations --city x --store /tmp/hexstation_cli_test "
                "--in /nonexistent.csv") == 1);
}

TEST_CASE("fixture subcommand writes both demo cities") {
  const auto dir =
      std::filesystem::temp_directory_path() / "hexstation_cli_fixture";
  std::filesystem::remove_all(dir);
  CHECK(run_cli("fixture --out " + dir.string() + " --seed 42") == 0);
  CHECK(std::filesystem::exists(dir / "fixture_a" / "objects.jsonl"));
  CHECK(std::filesystem::exists(dir / "fixture_b" / "stations.csv"));
  std::filesystem::remove_all(dir);
}
