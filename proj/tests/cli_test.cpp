#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freecons/cli.hpp"

#include <string>
#include <vector>

using freecons::run_cli;

namespace {

const std::string kConfigs = CONFIG_DIR;

std::string cfg(const char* name) { return kConfigs + "/" + name; }

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"reduce"}).exit_code == 2); // missing --config/--word
    CHECK(run_cli({"reduce", "--config", "/nonexistent.json",
                   "--word", "G:1"}).exit_code == 2);
}

TEST_CASE("reduce") {
    auto r = run_cli({"reduce", "--config", cfg("z2_z3.json"),
                      "--word", "G:1 H:1 H:2"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("length 1") != std::string::npos);
    auto bad = run_cli({"reduce", "--config", cfg("z2_z3.json"),
                        "--word", "Q:1"});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("reduce with finite-table indices") {
    auto r = run_cli({"reduce", "--config", cfg("s3_c2_s3.json"),
                      "--word", "G:1 H:2 H:2^-1 G:1"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("length 0") != std::string::npos);
}

TEST_CASE("classify") {
    auto ell = run_cli({"classify", "--config", cfg("z2_z3.json"),
                        "--word", "H:1 G:1 H:-1"});
    CHECK(ell.exit_code == 0);
    CHECK(ell.output.find("elliptic") != std::string::npos);
    auto hyp = run_cli({"classify", "--config", cfg("z2_z3.json"),
                        "--word", "G:1 H:1"});
    CHECK(hyp.exit_code == 0);
    CHECK(hyp.output.substr(0, 10) == "hyperbolic");
}

TEST_CASE("conjugate") {
    auto yes = run_cli({"conjugate", "--config", cfg("z2_z3.json"),
                        "--x", "G:1 H:1", "--y", "H:1 (G:1 H:1) H:-1"});
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("witness") != std::string::npos);
    auto no = run_cli({"conjugate", "--config", cfg("z2_z3.json"),
                       "--x", "G:1 H:1", "--y", "G:1 H:2"});
    CHECK(no.exit_code == 0);
    CHECK(no.output.find("not conjugate") != std::string::npos);
}

TEST_CASE("roots") {
    auto r = run_cli({"roots", "--config", cfg("z2_z3.json"),
                      "--word", "(G:1 H:1)^2", "-d", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1 root(s)") != std::string::npos);
    auto none = run_cli({"roots", "--config", cfg("z2_z3.json"),
                         "--word", "G:1 H:1", "-d", "2"});
    CHECK(none.exit_code == 0);
    CHECK(none.output.find("0 root(s)") != std::string::npos);
}

TEST_CASE("witness and verify") {
    auto w = run_cli({"witness", "--config", cfg("z2_z3.json"),
                      "-d", "2", "-n", "0"});
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("alpha") != std::string::npos);

    auto v = run_cli({"verify", "--config", cfg("z2_z3.json"),
                      "-d", "2", "-n", "0"});
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("\"pass\": true") != std::string::npos);
    CHECK(v.output.find("config_digest") != std::string::npos);

    // d = 1 is not a valid degree for the sweep.
    CHECK(run_cli({"verify", "--config", cfg("z2_z3.json"),
                   "-d", "1", "-n", "0"}).exit_code == 2);
}

TEST_CASE("degenerate instances exit 1") {
    auto v = run_cli({"verify", "--config", cfg("dihedral.json"),
                      "-d", "2", "-n", "0"});
    CHECK(v.exit_code == 1);
    auto w = run_cli({"witness", "--config", cfg("dihedral.json"),
                      "-d", "2", "-n", "0"});
    CHECK(w.exit_code == 1);
}

TEST_CASE("detect") {
    auto d = run_cli({"detect", "--config", cfg("dihedral.json")});
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("degenerate: yes") != std::string::npos);
    CHECK(d.output.find("dihedral") != std::string::npos);

    auto z = run_cli({"detect", "--config", cfg("z2_z3.json")});
    CHECK(z.exit_code == 0);
    CHECK(z.output.find("degenerate: no") != std::string::npos);
    CHECK(z.output.find("strong") != std::string::npos);

    auto s = run_cli({"detect", "--config", cfg("s3_c2_s3.json")});
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("degenerate: no") != std::string::npos);
    CHECK(s.output.find("weak") != std::string::npos);

    auto b = run_cli({"detect", "--config", cfg("bs_2_3.json")});
    CHECK(b.exit_code == 0);
    CHECK(b.output.find("non-ascending: yes") != std::string::npos);
}

TEST_CASE("census") {
    auto c = run_cli({"census", "--config", cfg("s3_c2_s3.json"),
                      "-d", "2", "--radius", "2"});
    CHECK(c.exit_code == 0);
    CHECK(c.output.find("\"s_observed\": 1") != std::string::npos);
}

TEST_CASE("generosity") {
    auto g = run_cli({"generosity", "--config", cfg("dihedral.json"),
                      "-m", "2", "-N", "6"});
    CHECK(g.exit_code == 0);
    CHECK(g.output.find("\"found\": false") != std::string::npos);
}

TEST_CASE("hnn CLI round trips") {
    auto r = run_cli({"reduce", "--config", cfg("bs_2_3.json"),
                      "--word", "t^-1 G:2 t"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("t-length 0") != std::string::npos);
    auto h = run_cli({"classify", "--config", cfg("bs_2_3.json"),
                      "--word", "G:1 t"});
    CHECK(h.exit_code == 0);
    CHECK(h.output.find("hyperbolic") != std::string::npos);
}

TEST_CASE("malformed config exits 2") {
    CHECK(run_cli({"detect", "--config", cfg("../README.md")}).exit_code == 2);
}
