#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using lexidim::cli::run;
using json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json");
    Outcome o = call(args);
    CHECK(o.code == expected_code);
    return json::parse(o.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("dim") {
    json r = call_json({"dim", "--adj", "C6"});
    CHECK(r["command"] == "dim");
    CHECK(r["result"]["value"] == 2);
    CHECK(r["result"]["kind"] == "adjacency");
    CHECK(call_json({"dim", "K5"})["result"]["value"] == 4);

    json p7 = call_json({"dim", "P7"});
    CHECK(p7["result"]["value"] == 1);
    CHECK(p7["witness"] == json::array({0}));

    Outcome table = call({"dim", "P7"});
    CHECK(table.code == 0);
    CHECK(table.out.find("metric dimension: 1") != std::string::npos);

    json all = call_json({"dim", "--adj", "--all", "P3"});
    CHECK(all["result"]["bases"] == json::parse("[[0],[2]]"));
}

TEST_CASE("graph descriptors") {
    CHECK(call_json({"dim", "g6:C~"})["result"]["value"] == 3);
    CHECK(call_json({"dim", "4; 0-1,1-2,2-3"})["result"]["value"] == 1);
    auto g6 = temp_file("lexidim_test_k4.g6", "C~\n");
    CHECK(call_json({"dim", "@" + g6.string()})["result"]["value"] == 3);
    auto edges = temp_file("lexidim_test_p4.edges", "\n4; 0-1,1-2,2-3\n");
    CHECK(call_json({"dim", "--adj", "@" + edges.string()})["result"]["value"] == 2);
    std::filesystem::remove(g6);
    std::filesystem::remove(edges);
}

TEST_CASE("classify") {
    CHECK(call_json({"classify", "P3"})["case"] == "Case33");
    CHECK(call_json({"classify", "K2"})["case"] == "Case34");
    CHECK(call_json({"classify", "P4"})["case"] == "Case32");
    CHECK(call_json({"classify", "E2"})["case"] == "Case35");
    Outcome t = call({"classify", "P4"});
    CHECK(t.out.find("case: Case32") != std::string::npos);
}

TEST_CASE("lex and construct") {
    json r = call_json({"lex", "C5", "C6"});
    CHECK(r["result"]["formula_value"] == 10);
    CHECK(r["witness"].size() == 10);

    json v = call_json({"lex", "P4", "P3", "--verify"});
    CHECK(v["oracle"]["value"] == 4);
    CHECK(v["oracle"]["status"] == "PASS");
    CHECK(call_json({"lex", "K3", "K(2,2)"})["result"]["formula_value"] == 6);
    CHECK(call_json({"lex", "K2", "K(2,1)"})["result"]["formula_value"] == 3);
    CHECK(call_json({"lex", "join(E3,K1)", "E2"})["result"]["formula_value"] == 6);
    CHECK(call_json({"lex", "P4", "comp(P5)"})["result"]["formula_value"] == 8);

    Outcome c = call({"construct", "K2", "P3"});
    CHECK(c.code == 0);
    CHECK(c.out == "{0,3,4}\n");

    Outcome table = call({"lex", "P4", "P3", "--verify"});
    CHECK(table.out.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(call({"dim", "Q7"}).code == 1);
    CHECK(call({"dim", "3; 0-1,1-5"}).code == 1);
    CHECK(call({"dim", "E3"}).code == 1);  // metric on a disconnected graph
    CHECK(call({"lex", "E2", "P3"}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"dim", "P30"}).code == 3);
    CHECK(call({"dim", "P30", "--cap", "30"}).code == 0);
    CHECK(call({"dim", "P5", "--cap", "65"}).code == 1);
    CHECK(call({"lex", "P4", "P5", "--verify", "--cap", "16"}).code == 3);

    json e = call_json({"dim", "Q7"}, 1);
    CHECK(e["exit_code"] == 1);
    CHECK(e.contains("error"));
}

TEST_CASE("help") {
    Outcome h = call({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("survey") != std::string::npos);
}

TEST_CASE("survey") {
    Outcome s = call({"survey", "--labeled-upto", "4", "--quiet"});
    CHECK(s.code == 0);

    json j = call_json({"survey", "--labeled-upto", "4", "--check", "prop2.2,twin-identity"});
    CHECK(j["result"]["checks"] == json::array({"complement-invariance", "twin-identity"}));

    auto corpus = temp_file("lexidim_test_corpus.g6", "C~\nnot-a-graph\nCh\n");
    Outcome bad = call({"survey", corpus.string()});
    CHECK(bad.code == 1);
    CHECK((bad.out + bad.err).find("line 2") != std::string::npos);
    std::filesystem::remove(corpus);

    CHECK(call({"survey", "--pairs", "--g-upto", "3", "--h-upto", "2"}).code == 0);
    CHECK(call({"survey", "--labeled-upto", "3", "--check", "bogus"}).code == 1);
    CHECK(call({"survey"}).code == 1);
}
