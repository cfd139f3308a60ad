#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TWISTCX_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("twist of a core reports the shifted core") {
    auto r = run("twist --core 0 --vertex 0 --power 1 --n 4");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["command"] == "twist");
    CHECK(j["result"]["complex"]["summands"][0]["position"] == 3);
    CHECK(j["inputs_digest"].get<std::string>().size() == 16);
    CHECK_FALSE(j.contains("wall_time_s"));
    CHECK(json::parse(run("--timing twist --core 0 --vertex 0").out).contains("wall_time_s"));
}

TEST_CASE("validate accepts good documents and names the failing slot") {
    write("good.json", R"({"n": 3, "char": 0, "summands": [{"vertex": 0, "position": 0}, {"vertex": 1, "position": 0}],
        "differential": [{"from": 0, "to": 1, "basis": "p", "coeff": "1"}]})");
    CHECK(run("validate --in good.json").code == 0);

    write("bad.json", R"({"n": 3, "char": 0,
        "summands": [{"vertex": 1, "position": 1}, {"vertex": 0, "position": 0}, {"vertex": 1, "position": 0}],
        "differential": [{"from": 0, "to": 1, "basis": "q", "coeff": "1"},
                         {"from": 1, "to": 2, "basis": "p", "coeff": "1"}]})");
    auto r = run("validate --in bad.json");
    CHECK(r.code == 1);
    CHECK(r.out.find("V_1 -> V_0") != std::string::npos);

    write("broken.json", "{ nope");
    auto b = run("validate --in broken.json");
    CHECK(b.code == 2);
    CHECK(json::parse(b.out)["error"]["reason"] == "json");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("twist --core 0 --vertex 3").code == 2);
    CHECK(run("twist --core 0 --vertex 0 --n 2").code == 2);
    CHECK(run("validate --in does-not-exist.json").code == 2);
    CHECK(run("feasibility --betti 1,x,1").code == 2);
}

TEST_CASE("braid, normalize and equiv chain together") {
    REQUIRE(run("braid --core 0 --word \"s0 S1 s0\" --out orbit.json").code == 0);
    auto n = run("normalize --in orbit.json");
    REQUIRE(n.code == 0);
    auto cert = json::parse(n.out)["result"]["certificate"];
    CHECK(cert["multiplicity"] == 1);

    REQUIRE(run("twist --core 1 --vertex 1 --out t.json").code == 0);
    auto e = json::parse(run("equiv --a t.json --b t.json").out);
    CHECK(e["result"]["verdict"] == "yes");
}

TEST_CASE("cover commands") {
    REQUIRE(run("twist --core 1 --vertex 0 --char 2 --out cover.json").code == 0);
    CHECK(run("specialize --in cover.json --index 2 --char 2").code == 0);
    CHECK(run("specialize --in cover.json --index 3").code == 2);
    CHECK(run("decompose --in cover.json").code == 0);
    CHECK(run("fibre-rank --in cover.json --vertex 0").code == 0);
}

TEST_CASE("feasibility and tables") {
    auto f = run("feasibility --betti 1,0,2,0,1 --n 4");
    REQUIRE(f.code == 0);
    CHECK(json::parse(f.out)["result"]["feasible"] == false);
    auto s = json::parse(run("feasibility --betti 1,0,0,0,1").out);
    CHECK(s["result"]["note"] == "sphere: known twist");

    auto t = run("rank-table --k 3");
    REQUIRE(t.code == 0);
    CHECK(t.out.rfind("k,total_rank,ranks\n", 0) == 0);

    auto w = json::parse(run("orbit-witness").out);
    CHECK(w["result"]["word"] == "s1 s0");
}

TEST_CASE("the digest depends on the inputs") {
    auto a = json::parse(run("twist --core 0 --vertex 0").out)["inputs_digest"];
    auto b = json::parse(run("twist --core 0 --vertex 0").out)["inputs_digest"];
    auto c = json::parse(run("twist --core 0 --vertex 0 --n 5").out)["inputs_digest"];
    CHECK(a == b);
    CHECK(a != c);
}
