#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cli/cases.hpp"
#include "prefl/text_io.hpp"

namespace fs = std::filesystem;
using namespace prefl;

namespace {

struct InDataDir {
  fs::path previous = fs::current_path();
  InDataDir() { fs::current_path(PREFL_CLI_DATA); }
  ~InDataDir() { fs::current_path(previous); }
};

}  // namespace

TEST_CASE("golden transcripts") {
  InDataDir here;
  const bool update = std::getenv("PREFL_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cli_cases::all()) {
    CAPTURE(c.name);
    const auto first = cli_cases::run(c);
    const auto second = cli_cases::run(c);
    CHECK(first.text == second.text);
    CHECK(first.exit_code == c.exit_code);
    const fs::path golden = fs::path(PREFL_CLI_GOLDEN) / (c.name + ".out");
    if (update) {
      std::ofstream(golden, std::ios::binary) << first.text;
      continue;
    }
    REQUIRE(fs::exists(golden));
    CHECK(first.text == read_file(golden.string()));
  }
}

TEST_CASE("synthesize --emit writes a loadable structure") {
  InDataDir here;
  const fs::path out = fs::temp_directory_path() / "prefl_cli_emit.str";
  std::ostringstream o, e;
  REQUIRE(cli::run({"synthesize", "-m", "cycle.sel", "--emit", out.string()}, o, e) == 0);
  const std::string text = read_file(out.string());
  CHECK(text == "copies: 0:0 1:0\n0:0 < 1:0\n1:0 < 0:0\n");
  const auto s = parse_structure(text, out.string(), 2);
  CHECK(mu_of_structure(s, ModelSet(2, {0, 1})).empty());
  fs::remove(out);

  CHECK(cli::run({"synthesize", "-m", "cycle.sel", "--emit", "/nonexistent/dir/x.str"}, o, e) == 2);
}

TEST_CASE("help exits cleanly") {
  std::ostringstream o, e;
  CHECK(cli::run({"--help"}, o, e) == 0);
  CHECK(o.str().find("nml-entail") != std::string::npos);
}
