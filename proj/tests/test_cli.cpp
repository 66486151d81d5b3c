#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr dropped; golden assertions only look at stdout
// and the exit code.
RunResult run(const std::string& args) {
    const std::string command = std::string(EPIWORD_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("christoffel command") {
    const auto ok = run("christoffel 2 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "aabab\n");

    const auto reject = run("christoffel 2 4");
    CHECK(reject.exit_code == 1);
    CHECK(reject.out.find("not-coprime") != std::string::npos);
}

TEST_CASE("epic-check command") {
    const auto yes = run("epic-check 5,10,16");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "yes\n");

    const auto no = run("epic-check 2,2,9");
    CHECK(no.exit_code == 1);
    CHECK(no.out == "no\n");

    const auto traced = run("epic-check 2,2,9 --trace");
    CHECK(traced.exit_code == 1);
    const std::size_t newline = traced.out.find('\n');
    REQUIRE(newline != std::string::npos);
    CHECK(traced.out.substr(0, newline) == "no");
    const json trace = json::parse(traced.out.substr(newline + 1));
    CHECK(trace["verdict"] == "reject");
    CHECK(trace["reason"] == "negative-entry");
    REQUIRE(trace["steps"].size() == 3);
    CHECK(trace["steps"][0]["before"] == json::array({2, 2, 9}));
    CHECK(trace["steps"][0]["after"] == json::array({2, 2, 5}));
    CHECK(trace["steps"][1]["after"] == json::array({2, 2, 1}));

    const auto usage = run("epic-check 2,x");
    CHECK(usage.exit_code == 2);
    CHECK(usage.out.empty());
}

TEST_CASE("epic-build command") {
    const auto built = run("epic-build 5,10,16 --alphabet abc");
    CHECK(built.exit_code == 0);
    CHECK(built.out ==
          "standard cbcacbcbcacbcbcacbcbcacbcbcacbc\n"
          "lyndon acbcbcacbcbcacbcbcacbcbcacbccbc\n");

    const auto rejected = run("epic-build 2,2,9");
    CHECK(rejected.exit_code == 1);
    CHECK(rejected.out.find("not-epichristoffel-vector") != std::string::npos);

    const auto as_json = run("epic-build 5,10,16 --json");
    CHECK(as_json.exit_code == 0);
    const json record = json::parse(as_json.out);
    CHECK(record["parikh"] == json::array({5, 10, 16}));
    CHECK(record["labels"] == "cbabbbb");
    CHECK(record["final"] == "c");
    CHECK(record["standard"] == "cbcacbcbcacbcbcacbcbcacbcbcacbc");
    CHECK(record["lyndon"] == "acbcbcacbcbcacbcbcacbcbcacbccbc");
    // round-trips through a parse/dump cycle
    CHECK(json::parse(record.dump()) == record);
}

TEST_CASE("epic-test command") {
    const auto lyndon = run("epic-test aabacab");
    CHECK(lyndon.exit_code == 0);
    CHECK(lyndon.out == "epichristoffel\n");

    const auto member = run("epic-test abaabac");
    CHECK(member.exit_code == 0);
    CHECK(member.out == "c-epichristoffel\n");

    const auto neither = run("epic-test abc");
    CHECK(neither.exit_code == 1);
    CHECK(neither.out == "neither\n");

    const auto longer = run("epic-test caabaacaabaaa");
    CHECK(longer.exit_code == 1);
    CHECK(longer.out == "neither\n");
}

TEST_CASE("pal and gen commands") {
    CHECK(run("pal ab").out == "aba\n");
    CHECK(run("pal abc").out == "abacaba\n");

    const auto prefix = run("gen 'abc*' --length 10");
    CHECK(prefix.exit_code == 0);
    CHECK(prefix.out == "abacabaaba\n");

    const auto exhausted = run("gen ab --length 10");
    CHECK(exhausted.exit_code == 1);
    CHECK(exhausted.out.find("directive-exhausted") != std::string::npos);

    const auto spun = run("gen 'ab*' --length 5 --spins 01");
    CHECK(spun.exit_code == 1);
    CHECK(spun.out.find("spin-not-supported") != std::string::npos);
}

TEST_CASE("morph command") {
    CHECK(run("morph 'a b a' c").out == "abaabac\n");
    CHECK(run("morph 'a~' b").out == "ba\n");
    CHECK(run("morph 'a/b' ab").out == "ba\n");

    const auto bad_token = run("morph 'a//' b");
    CHECK(bad_token.exit_code == 2);

    const auto bad_letter = run("morph 'a' xy --alphabet ab");
    CHECK(bad_letter.exit_code == 1);
    CHECK(bad_letter.out.find("letter-not-in-alphabet") != std::string::npos);
}

TEST_CASE("verify command") {
    const auto pass = run("verify aabacab");
    CHECK(pass.exit_code == 0);
    CHECK(pass.out ==
          "primitive: pass\n"
          "palindromic-split: pass\n"
          "reversal-closed: pass\n"
          "common-sequence: pass\n");

    const auto fail = run("verify aabc --props reversal-closed");
    CHECK(fail.exit_code == 1);
    CHECK(fail.out == "reversal-closed: fail\n");

    const auto unknown = run("verify ab --props no-such-prop");
    CHECK(unknown.exit_code == 2);

    const auto as_json = run("verify aabacab --props common-sequence --json");
    CHECK(as_json.exit_code == 0);
    const json report = json::parse(as_json.out);
    REQUIRE(report.size() == 1);
    CHECK(report[0]["prop"] == "common-sequence");
    CHECK(report[0]["pass"] == true);
    CHECK(report[0]["detail"]["conjugates"].size() == 7);
}

TEST_CASE("enumerate command") {
    const auto listing = run("enumerate --alphabet ab --max-len 4");
    CHECK(listing.exit_code == 0);
    CHECK(listing.out == "a\nb\nab\naab\nabb\naaab\nabbb\n");

    const auto as_json = run("enumerate --alphabet abc --max-len 2 --json");
    CHECK(as_json.exit_code == 0);
    const json records = json::parse(as_json.out);
    REQUIRE(records.size() == 6);
    CHECK(records[0]["lyndon"] == "a");
    CHECK(records[3]["lyndon"] == "ab");
}

TEST_CASE("identical invocations are byte-identical") {
    const auto first = run("enumerate --alphabet abc --max-len 8 --json");
    const auto second = run("enumerate --alphabet abc --max-len 8 --json");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("usage errors") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("epic-build").exit_code == 2);
    CHECK(run("gen 'ab*'").exit_code == 2);  // missing --length
    CHECK(run("epic-build 1,1 --alphabet abc").exit_code == 2);  // arity mismatch
}
