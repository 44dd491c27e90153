#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = qweyl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) {
    return s.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("act") {
    CHECK(run({"act", "--n", "2", "--op", "e2", "--on", "x^(1,1)"}).out == "(q^2+2+q^-2) x^(1,2)\n");
    CHECK(run({"act", "--n", "2", "--op", "f2", "--on", "x^(1,1)"}).out == "-x^(1,0)\n");
    CHECK(run({"act", "--n", "2", "--op", "K2", "--on", "x^(1,1)"}).out == "q^3 x^(1,1)\n");
    const auto j = run({"act", "--n", "1", "--op", "x1", "--on", "x^(1)", "--format", "json"});
    CHECK(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["expression"] == "(q+q^-1) x^(2)");
}

TEST_CASE("normalize") {
    CHECK(run({"normalize", "--n", "1", "--op", "d1 x1"}).out == "q x1 d1 + s1^-1\n");
    CHECK(run({"normalize", "--n", "1", "--op", "x1 d1"}).out == "x1 d1\n");
    const auto checked = run({"normalize", "--n", "2", "--op", "x2 x1", "--check"});
    CHECK(checked.code == 0);
    CHECK(contains(checked.out, "check: pass"));
    const auto random = run({"normalize", "--n", "2", "--random", "100", "--check", "--degree", "4"});
    CHECK(random.code == 0);
    CHECK(contains(random.out, "random: 100 operators, 0 failures"));
}

TEST_CASE("verify") {
    const auto text = run({"verify", "serre", "--n", "1", "--degree", "4"});
    CHECK(text.code == 0);
    CHECK(contains(text.out, "result: pass"));
    const auto json = run({"verify", "serre", "--n", "2", "--degree", "3", "--format", "json"});
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["failed"] == 0);
    CHECK(parsed["rank_sl"] == 3);
    const auto all = run({"verify", "all", "--n", "1", "--degree", "3"});
    CHECK(all.code == 0);
    CHECK(contains(all.out, "skipped"));
}

TEST_CASE("rootvec") {
    const auto pos = run({"rootvec", "--n", "2", "--i", "1", "--j", "3"});
    CHECK(pos.code == 0);
    CHECK(contains(pos.out, "agreement on |beta| <= 6: pass"));
    const auto neg = run({"rootvec", "--n", "2", "--i", "3", "--j", "1", "--degree", "4"});
    CHECK(neg.code == 0);
    CHECK(contains(neg.out, "pass"));
}

TEST_CASE("usage errors exit 2") {
    const auto bad_n = run({"verify", "weyl", "--n", "0"});
    CHECK(bad_n.code == 2);
    CHECK(contains(bad_n.err, "n must be >= 1"));
    CHECK(run({"rootvec", "--n", "2", "--i", "2", "--j", "2"}).code == 2);
    const auto syntax = run({"act", "--n", "1", "--op", "x1 +", "--on", "x^(0)"});
    CHECK(syntax.code == 2);
    CHECK(contains(syntax.err, "offset 3"));
    CHECK(run({"verify", "nope"}).code == 2);
    CHECK(run({"verify", "gl", "--n", "1"}).code == 2);
    CHECK(run({"act", "--n", "2", "--op", "e1", "--on", "x^(1)"}).code == 2);
    CHECK(run({}).code == 2);
}
