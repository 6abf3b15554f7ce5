#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = monocurve::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r)
{
    return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("monocurve_test_" + name);
}

}  // namespace

TEST_CASE("analyze the sharp family")
{
    const auto r = run({"analyze", "--gens", "4,5,6,7"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "analyze");
    CHECK(j["field"] == "q");
    CHECK(j["results"][0]["betti"]["total"] == nlohmann::json({1, 6, 8, 3}));
    CHECK(j["summary"]["pass"] == true);
    for (const auto& c : j["results"][0]["checks"])
        if (c["bound"] == "conjecture")
            CHECK(c["status"] == "equal");
    CHECK(j["results"][0]["semigroup"]["frobenius"] == 3);
}

TEST_CASE("analyze reports input errors")
{
    const auto r = run({"analyze", "--gens", "4,6"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NonCofinite") != std::string::npos);
    CHECK(run({"analyze"}).code == 1);
    CHECK(run({"analyze", "--gens", "3,x"}).code == 1);
    CHECK(run({"analyze", "--gens", "3,4", "--field", "gf:10"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze over a prime field writes J")
{
    const auto path = temp_path("j.txt");
    const auto r = run({"analyze", "--gens", "7,9,10", "--field", "gf:32003", "--ideal-out", path.string()});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["field"] == "gf:32003");
    CHECK(j["results"][0]["betti"]["field"] == "gf:32003");
    CHECK(j["results"][0]["initial_ideal"]["colength"] == 7);

    const auto i = run({"ideal", path.string(), "--width", "3"});
    REQUIRE(i.code == 0);
    CHECK(parse(i)["results"][0]["colength"] == 7);
    std::filesystem::remove(path);
}

TEST_CASE("ideal command flags the Hilbert-Samuel constraint")
{
    const auto path = temp_path("cube.txt");
    {
        std::ofstream f(path);
        f << "n=2\n3 0\n2 1\n1 2\n0 3\n";
    }
    const auto r = run({"ideal", path.string(), "--width", "2"});
    CHECK(r.code == 2);
    CHECK(parse(r)["summary"]["violations"][0]["check"] == "hilbert_samuel_constraint");
    CHECK(run({"ideal", path.string()}).code == 0);
    std::filesystem::remove(path);
    CHECK(run({"ideal", path.string()}).code == 1);
}

TEST_CASE("sweep output")
{
    const auto r = run({"sweep", "--width", "3", "--mult", "4..12", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["results"][0]["generators"] == nlohmann::json({4, 5, 6, 7}));
    CHECK(j["results"][0]["betti"][1] == 6);
    bool found = false;
    for (const auto& e : j["summary"]["extremes"])
        if (e["w"] == 3 && e["i"] == 1) {
            CHECK(e["max"] == 6);
            found = true;
        }
    CHECK(found);

    const auto one = parse(run({"sweep", "--width", "1", "--mult", "2..10"}));
    CHECK(one["results"].size() == 9);
    for (const auto& row : one["results"])
        CHECK(row["betti"][1] == 1);

    const auto csv = run({"sweep", "--width", "4", "--mult", "2..2", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "generators,m,w,nu,mu_pass,conjecture_pass,multiplicity_pass,width_exponential_pass\r\n");

    const auto rows = run({"sweep", "--width", "2", "--mult", "3..3", "--format", "csv"});
    CHECK(rows.out.find("\"3,4,5\",3,2,2,3,2,true,true,true,true\r\n") != std::string::npos);
}

TEST_CASE("reports do not depend on the number of workers")
{
    const auto a = run({"sweep", "--width", "1..4", "--mult", "2..16", "--jobs", "1"});
    const auto b = run({"sweep", "--width", "1..4", "--mult", "2..16", "--jobs", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto c = run({"verify", "jtilde", "--mult", "5..14", "--jobs", "1"});
    const auto d = run({"verify", "jtilde", "--mult", "5..14", "--jobs", "5"});
    CHECK(c.out == d.out);
}

TEST_CASE("verify commands")
{
    auto p = run({"verify", "prop43"});
    CHECK(p.code == 0);
    CHECK(parse(p)["summary"]["rows"] == 109);

    auto t = run({"verify", "thm51"});
    CHECK(t.code == 0);
    CHECK(parse(t)["summary"]["exceptions"] == 0);

    auto r = run({"verify", "remark"});
    CHECK(r.code == 0);
    CHECK(parse(r)["summary"]["triples"] == 187);
    CHECK(parse(r)["summary"]["distinct_pairs"] == 155);

    // a range with exceptions is a verification failure
    auto bad = run({"verify", "thm51", "--width", "10..12"});
    CHECK(bad.code == 2);
    CHECK(!parse(bad)["summary"]["violations"].empty());

    auto j = run({"verify", "jtilde"});
    CHECK(j.code == 0);
    CHECK(parse(j)["summary"]["pairs"] == 231);

    CHECK(run({"verify", "nothing"}).code == 1);
    CHECK(run({"verify", "prop43", "--width", "1..5"}).code == 1);
}

TEST_CASE("shift scan")
{
    const auto r = run({"shift-scan", "--gens", "5,7,9", "--j-max", "30"});
    REQUIRE(r.code == 0);
    const auto j = parse(r);
    CHECK(j["results"].size() == 31);
    CHECK(j["results"][1]["sampled"] == false);
    CHECK(4 % j["summary"]["period"].get<int>() == 0);

    const auto e = run({"shift-scan", "--gens", "2,3", "--j-max", "2"});
    CHECK(e.code == 0);
    CHECK(run({"shift-scan", "--gens", "4,5,6,7", "--j-max", "5"}).code == 1);

    const auto csv = run({"shift-scan", "--gens", "4,5,6,7", "--j-max", "24", "--format", "csv"});
    CHECK(csv.code == 0);
    std::size_t lines = 0;
    for (char ch : csv.out)
        lines += ch == '\n';
    CHECK(lines == 26);
    CHECK(csv.out.rfind("j,sampled,generators,betti\r\n0,true,\"4,5,6,7\",\"1,6,8,3\"\r\n", 0) == 0);
}

TEST_CASE("text and file output")
{
    const auto path = temp_path("report.json");
    const auto r = run({"analyze", "--gens", "3,4,5", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(nlohmann::json::parse(buf.str())["results"][0]["betti"]["total"] == nlohmann::json({1, 3, 2}));
    std::filesystem::remove(path);

    const auto t = run({"analyze", "--gens", "3,4,5", "--format", "text"});
    CHECK(t.out.find("betti (1, 3, 2) over q") != std::string::npos);
    CHECK(t.out.find("PASS") != std::string::npos);
}
