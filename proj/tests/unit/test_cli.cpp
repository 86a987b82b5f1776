#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#ifndef DIVLAT_CLI
#error "DIVLAT_CLI must name the command-line executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected in args.
Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" DIVLAT_CLI "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("divlat_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

}  // namespace

TEST_CASE("invariants") {
    const auto r = run("invariants --n 12");
    CHECK(r.status == 0);
    CHECK(r.out.find("signature 2.1\n") != std::string::npos);
    CHECK(r.out.find("EH        7\n") != std::string::npos);
    CHECK(r.out.find("PT        8\n") != std::string::npos);

    const auto j = nlohmann::json::parse(run("invariants --sig 3.2.1 --format json").out);
    CHECK(j["Delta"] == 5);
    CHECK(j["Wv"] == 6);
    CHECK(j["We"] == 12);
    CHECK(j["LI"] == 360);

    const auto one = nlohmann::json::parse(run("invariants --n 1 --format json").out);
    CHECK(one["signature"] == "0");
    CHECK(one["V"] == 1);
    CHECK(one["We"] == 0);

    CHECK(run("invariants --sig 1.2").status == 2);
    CHECK(run("invariants").status == 2);
    CHECK(run("invariants --n 4 --sig 2").status == 2);
    CHECK(run("invariants --sig 50 --dp-budget 10").status == 2);
}

TEST_CASE("sequence") {
    const auto csv = run("sequence --inv V --order natural --count 12 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out == "key,value\n1,1\n2,2\n3,2\n4,3\n5,2\n6,4\n7,2\n8,4\n9,3\n10,4\n11,2\n12,6\n");

    const auto j = nlohmann::json::parse(run("sequence --inv LI --order canonical --count 12 --format json").out);
    CHECK(j["entries"].back()["value"] == 210);

    CHECK(run("sequence --inv LI --order natural --count 5").status == 2);
    CHECK(run("sequence --inv nope").status == 2);
    CHECK(run("sequence --inv V --format xml").status == 2);
    CHECK(run("sequence --inv '|P^T|' --order colex --count 3 --format bfile").out == "0 1\n1 1\n2 2\n");
}

TEST_CASE("graph") {
    const auto dot = run("graph --n 20 --kind hasse --format dot");
    CHECK(dot.status == 0);
    CHECK(std::count(dot.out.begin(), dot.out.end(), '>') == 7);
    const auto closure = nlohmann::json::parse(run("graph --n 20 --kind closure --format json").out);
    CHECK(closure["nodes"].size() == 6);
    CHECK(closure["arcs"].size() == 12);
    CHECK(closure["shape"] == nlohmann::json::array({2, 1}));
    const auto one = nlohmann::json::parse(run("graph --n 1 --kind hasse --format json").out);
    CHECK(one["nodes"].size() == 1);
    CHECK(one["arcs"].empty());
    // Coordinates follow the prime order of n: 2^1 * 3^2.
    CHECK(nlohmann::json::parse(run("graph --n 18 --format json").out)["shape"] == nlohmann::json::array({1, 2}));

    CHECK(run("graph --sig 2.2.2 --node-budget 10").status == 2);
    CHECK(run("graph --sig 2.2.2", "DIVLAT_NODE_BUDGET=10").status == 2);
    CHECK(run("graph --sig 2.2.2 --node-budget 100", "DIVLAT_NODE_BUDGET=10").status == 0);
    CHECK(run("graph --sig 2 --kind tree").status == 2);
    CHECK(run("graph --sig 2", "DIVLAT_NODE_BUDGET=abc").status == 2);
}

TEST_CASE("compare") {
    TempDir dir;
    std::string good = "# tau(n)\n";
    for (int n = 1; n <= 100; ++n) {
        int c = 0;
        for (int d = 1; d <= n; ++d) c += n % d == 0;
        good += std::to_string(n) + " " + std::to_string(c) + "\n";
    }
    const auto good_path = dir.write("good.txt", good);
    const auto ok = run("compare --inv V --order natural --bfile '" + good_path + "'");
    CHECK(ok.status == 0);
    CHECK(nlohmann::json::parse(ok.out)["compared"] == 100);

    std::string bad = good;
    bad.replace(bad.find("\n12 6\n"), 6, "\n12 7\n");
    const auto bad_path = dir.write("bad.txt", bad);
    const auto mismatch = run("compare --inv V --bfile '" + bad_path + "'");
    CHECK(mismatch.status == 1);
    CHECK(nlohmann::json::parse(mismatch.out)["first_mismatch"]["key"] == 12);

    const auto broken = dir.write("broken.txt", "1 1\n2 two\n");
    CHECK(run("compare --inv V --bfile '" + broken + "'").status == 2);
    CHECK(run("compare --inv V --bfile '" + (dir.path / "missing.txt").string() + "'").status == 2);
}

TEST_CASE("conjectures") {
    const auto c1 = run("conjectures --id 1 --max-omega 8 --mode node");
    CHECK(c1.status == 0);
    const auto j1 = nlohmann::json::parse(c1.out);
    CHECK(j1["mode"] == "node");
    CHECK(j1["held"] == true);

    const auto both = nlohmann::json::parse(run("conjectures --id 1 --max-omega 5").out);
    REQUIRE(both.is_array());
    CHECK(both.size() == 2);
    CHECK(both[1]["mode"] == "arc");

    CHECK(run("conjectures --id 2 --max-n 100000").status == 0);
    CHECK(run("conjectures --id 3 --colex-count 200").status == 0);
    CHECK(run("conjectures --id 3 --colex-count 200 --threads 3").out ==
          run("conjectures --id 3 --colex-count 200").out);
    CHECK(nlohmann::json::parse(run("conjectures --id 2 --max-n 50 --timing").out).contains("elapsed_seconds"));

    CHECK(run("conjectures --id 4 --max-n 10").status == 2);
    CHECK(run("conjectures --id 2").status == 2);
    CHECK(run("conjectures --id 2 --max-n 10 --max-omega 3").status == 2);
    CHECK(run("conjectures --id 1 --max-omega 3 --mode both-ways").status == 2);
}

TEST_CASE("general behaviour") {
    CHECK(run("--help").status == 0);
    for (const char* sub : {"invariants", "sequence", "graph", "compare", "conjectures"}) {
        const auto r = run(std::string(sub) + " --help");
        CHECK(r.status == 0);
        CHECK(r.out.find("--") != std::string::npos);
    }
    CHECK(run("invariants --n 3 --verbose").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);

    TempDir dir;
    const auto path = (dir.path / "out.csv").string();
    CHECK(run("--output '" + path + "' sequence --inv V --count 3").out.empty());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "key,value\n1,1\n2,2\n3,2\n");

    CHECK(run("sequence --inv PT --order canonical --count 40 --format json").out ==
          run("sequence --inv PT --order canonical --count 40 --format json").out);
}
