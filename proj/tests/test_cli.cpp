// Drives the installed binary as a subprocess; GM_CLI_PATH is injected by
// the build.  Checks the exit-code contract, the exact CSV header, error
// diagnostics, and the bit-exact JSON round trip.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct cli_result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

cli_result run_cli(const std::string& args, const std::string& env = "") {
    static int serial = 0;
    const std::string tag = std::to_string(++serial);
    const std::string out_p = "/tmp/gm_cli_out_" + tag;
    const std::string err_p = "/tmp/gm_cli_err_" + tag;
    const std::string cmd = env + (env.empty() ? "" : " ") + GM_CLI_PATH +
                            " " + args + " >" + out_p + " 2>" + err_p;
    const int raw = std::system(cmd.c_str());
    cli_result r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_p);
    r.err = slurp(err_p);
    std::remove(out_p.c_str());
    std::remove(err_p.c_str());
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("eval anchors and exit codes") {
    const auto g4 = run_cli("eval barnes-g --x 4 --format json");
    REQUIRE(g4.code == 0);
    const auto rows = json::parse(g4.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["value_re"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rows[0]["route"] == "series+recursion");

    const auto gam = run_cli("eval gamma --x 5 --format json");
    REQUIRE(gam.code == 0);
    CHECK(json::parse(gam.out)[0]["value_re"].get<double>() ==
          doctest::Approx(24.0).epsilon(1e-13));

    const auto gl = run_cli("eval glaisher --format json");
    REQUIRE(gl.code == 0);
    const auto glr = json::parse(gl.out)[0];
    CHECK(glr["value_re"].get<double>() ==
          doctest::Approx(1.2824271291006226).epsilon(1e-14));
    CHECK(glr["abs_error"].get<double>() > 0.0);
    CHECK(glr["abs_error"].get<double>() < 1e-12);

    const auto zero = run_cli("eval barnes-g --x 0");
    CHECK(zero.code == 1);
    CHECK(zero.err.find("ZeroError") != std::string::npos);
    CHECK(zero.out.empty());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("eval barnes-g --nonsense 1").code == 2);
    CHECK(run_cli("eval no-such-fn --x 1").code == 2);
    CHECK(run_cli("eval barnes-g").code == 2);      // missing --x
    CHECK(run_cli("eval gn --x 2").code == 2);      // missing --n
    CHECK(run_cli("eval barnes-g --x 1 --route warp").code == 2);
    CHECK(run_cli("").code == 2);                   // subcommand required
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("help enumerates functions and identities") {
    const auto h = run_cli("--help");
    REQUIRE(h.code == 0);
    for (const char* fn :
         {"gamma", "barnes-g", "phi", "kinkelin", "g2", "gn", "kn",
          "double-sine", "glaisher", "omega-tilde"})
        CHECK(h.out.find(fn) != std::string::npos);
    for (const char* id : {"FE_G", "S2_SHIFT", "KN_CONVERSION", "REFLECTION",
                           "GLAISHER_DEF"})
        CHECK(h.out.find(id) != std::string::npos);
    CHECK(h.out.find("GAMMAMORPHIC_MAX_QUAD_DEPTH") != std::string::npos);
}

TEST_CASE("csv table contract") {
    const auto t = run_cli(
        "table --fn barnes-g --re-start 1 --re-stop 2 --re-count 11");
    REQUIRE(t.code == 0);
    CHECK(t.out.rfind("arg_re,arg_im,value_re,value_im,abs_error,route\n",
                      0) == 0);
    CHECK(count_lines(t.out) == 12);
    // Endpoint-inclusive grid.
    CHECK(t.out.find("\n1,0,1,") != std::string::npos);
    CHECK(t.out.find("\n2,0,1,") != std::string::npos);
}

TEST_CASE("complex rectangle grid") {
    const auto t = run_cli("table --fn g2 --alpha 2 --re-start 1 --re-stop "
                           "2 --re-count 3 --im-start 0 --im-stop 1 "
                           "--im-count 3 --format json");
    REQUIRE(t.code == 0);
    const auto rows = json::parse(t.out);
    REQUIRE(rows.size() == 9);
    // Row order follows the grid: real axis fastest.
    CHECK(rows[0]["arg_re"].get<double>() == 1.0);
    CHECK(rows[1]["arg_re"].get<double>() == 1.5);
    CHECK(rows[2]["arg_im"].get<double>() == 0.0);
    CHECK(rows[3]["arg_im"].get<double>() == 0.5);
    for (const auto& row : rows) {
        CHECK(row.size() == 6);
        CHECK(row.contains("abs_error"));
        CHECK(row["route"] == "integral");
    }
}

TEST_CASE("singular grid point aborts without output") {
    const std::string out_file = "/tmp/gm_cli_partial.csv";
    std::remove(out_file.c_str());
    const auto t = run_cli("table --fn barnes-g --re-start 0 --re-stop 2 "
                           "--re-count 3 --out " + out_file);
    CHECK(t.code == 1);
    CHECK(t.err.find("ZeroError") != std::string::npos);
    CHECK(t.err.find("arg = (0, 0)") != std::string::npos);
    CHECK(t.out.empty());
    std::ifstream probe(out_file);
    CHECK(!probe.good()); // file never created
}

TEST_CASE("json round trip is bit exact") {
    const auto t = run_cli("table --fn barnes-g --re-start 1.1 --re-stop "
                           "2.9 --re-count 7 --format json");
    REQUIRE(t.code == 0);
    const auto rows = json::parse(t.out);
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        // Shortest round-trip text parses back to the same binary64, and
        // re-evaluating at the parsed argument reproduces the value bits.
        std::ostringstream arg;
        arg.precision(17);
        arg << row["arg_re"].get<double>();
        const auto again = run_cli("eval barnes-g --x " + arg.str() +
                                   " --format json");
        REQUIRE(again.code == 0);
        const auto re = json::parse(again.out)[0];
        CHECK(re["value_re"].get<double>() ==
              row["value_re"].get<double>());
        CHECK(re["value_im"].get<double>() ==
              row["value_im"].get<double>());
        CHECK(re["abs_error"].get<double>() ==
              row["abs_error"].get<double>());
        CHECK(re["route"] == row["route"]);
    }
}

TEST_CASE("manifest file mirrors flags") {
    const std::string man_path = "/tmp/gm_cli_manifest.json";
    {
        std::ofstream man(man_path);
        man << R"({"function": "kinkelin",
                   "grid": {"re_start": 1.0, "re_stop": 3.0, "re_count": 5},
                   "format": "csv"})";
    }
    const auto via_manifest = run_cli("table --manifest " + man_path);
    const auto via_flags = run_cli(
        "table --fn kinkelin --re-start 1 --re-stop 3 --re-count 5");
    REQUIRE(via_manifest.code == 0);
    CHECK(via_manifest.out == via_flags.out);
    std::remove(man_path.c_str());
}

TEST_CASE("manifest validation") {
    const std::string man_path = "/tmp/gm_cli_badman.json";
    {
        std::ofstream man(man_path);
        man << R"({"function": "kinkelin",
                   "grid": {"re_start": 1.0, "re_stop": 3.0, "re_count": 0},
                   "format": "csv"})";
    }
    CHECK(run_cli("table --manifest " + man_path).code == 2);
    {
        std::ofstream man(man_path);
        man << R"({"function": "kinkelin",
                   "grid": {"re_count": 3},
                   "format": "sideways"})";
    }
    CHECK(run_cli("table --manifest " + man_path).code == 2);
    CHECK(run_cli("table --manifest /tmp/gm_no_such_manifest.json").code ==
          2);
    std::remove(man_path.c_str());
}

TEST_CASE("error budget gate") {
    const auto t = run_cli("table --fn barnes-g --re-start 1 --re-stop 2 "
                           "--re-count 3 --tolerance 1e-30");
    CHECK(t.code == 1);
    CHECK(t.err.find("exceeds the requested tolerance") !=
          std::string::npos);
    CHECK(t.out.empty());
}

TEST_CASE("verify subcommand") {
    const auto ok = run_cli("verify --only FE_G,KINKELIN_FE --density small");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FE_G") != std::string::npos);
    CHECK(ok.out.find("KINKELIN_FE") != std::string::npos);
    CHECK(ok.out.find("verified failures = 0") != std::string::npos);

    CHECK(run_cli("verify --only NOPE").code == 2);
    CHECK(run_cli("verify --density extreme").code == 2);

    const auto js = run_cli("verify --only GLAISHER_DEF --json");
    REQUIRE(js.code == 0);
    const auto rows = json::parse(js.out);
    REQUIRE(rows.size() == 1);
    const char* keys[] = {"id",           "params",    "lhs",  "rhs",
                          "abs_residual", "rel_residual", "tolerance",
                          "pass",         "status",    "notes"};
    for (const char* k : keys) CHECK(rows[0].contains(k));
    CHECK(rows[0].size() == 10);
    CHECK(rows[0]["pass"].get<bool>());
}

TEST_CASE("constants") {
    const auto c = run_cli("constants --format csv");
    REQUIRE(c.code == 0);
    CHECK(c.out.rfind("name,value,abs_error,route\n", 0) == 0);
    CHECK(count_lines(c.out) == 5);
    CHECK(c.out.find("glaisher,1.2824271291006") != std::string::npos);
    CHECK(c.out.find("euler-gamma,0.5772156649015") != std::string::npos);
    CHECK(c.out.find("omega-tilde,1.392140216941") != std::string::npos);
}

TEST_CASE("quadrature depth env variable reaches the engine") {
    const auto shallow = run_cli("eval g2 --x 1.5 --alpha 2",
                                 "GAMMAMORPHIC_MAX_QUAD_DEPTH=3");
    CHECK(shallow.code == 1);
    CHECK(shallow.err.find("NonConvergence") != std::string::npos);
    const auto deep = run_cli("eval g2 --x 1.5 --alpha 2",
                              "GAMMAMORPHIC_MAX_QUAD_DEPTH=12");
    CHECK(deep.code == 0);
}
