#include "lt/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(LT_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lt_cli_" + name)).string();
}

}  // namespace

TEST_CASE("large check with a certificate round trip") {
    std::string set = tmp("x.txt"), cert = tmp("c.json");
    lt::write_file(set, lt::finset_to_text(lt::FinSet::interval(3, 38)));
    auto r = run("large check --set " + set + " --n 2 --k 1 --theta top --out " + cert);
    CHECK(r.code == 0);
    CHECK(run("large check --set " + set + " --n 2 --cert " + cert).code == 0);
    CHECK(run("large check --set " + set + " --n 1 --cert " + cert).code == 1);
    CHECK(run("large check --set-interval 3,37 --n 2").code == 1);
    auto j = lt::json::parse(run("--json large check --set-interval 3,6 --n 1").out);
    CHECK(j["large"] == true);
}

TEST_CASE("bounds table and lower bound") {
    auto r = run("bounds-table --n-max 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("\t8\t") != std::string::npos);
    CHECK(run("lowerbound verify --n 1").code == 0);
    CHECK(run("lowerbound tree --base 3 --rank 3").code == 0);
}

TEST_CASE("usage and domain errors exit 3") {
    CHECK(run("").code == 3);
    CHECK(run("large check --n 1").code == 3);
    CHECK(run("large check --set-interval 3,10 --theta 'forall z . x < z'").code == 3);
    CHECK(run("nonsense").code == 3);
}

TEST_CASE("grouping find and check") {
    lt::ColoringTable f(lt::FinSet::interval(3, 38), 2, 2);
    std::string col = tmp("f.json"), wit = tmp("w.json");
    lt::write_file(col, lt::to_json(f).dump());
    auto r = run("grouping find --set-interval 3,38 --coloring " + col + " --l0 large:1 --l1 card:2 --out " + wit);
    CHECK(r.code == 0);
    CHECK(run("grouping check --witness " + wit + " --l0 large:1 --l1 card:2").code == 0);
    CHECK(run("grouping check --witness " + wit + " --l0 large:1 --l1 card:40").code == 1);
}

TEST_CASE("formula commands") {
    CHECK(run("formula eval 'exists y < x + 1 . y = x' --env x=4").code == 0);
    CHECK(run("formula eval 'x < 2' --env x=4").code == 1);
    auto w = run("formula weaken 'exists x . forall y . exists z . x + y < z'");
    CHECK(w.code == 0);
    CHECK(w.out.find("exists x' < x") != std::string::npos);
}

TEST_CASE("gamma sampling is inconclusive without a counterexample") {
    CHECK(run("gamma large --set-interval 3,4 --r 0 --s 2 --sampled --trials 10").code == 2);
    CHECK(run("gamma large --set-interval 3,7 --r 1 --s 1").code == 1);
}
