#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "dmm/constructions.hpp"
#include "dmm/isomorphism.hpp"
#include "dmm/json_io.hpp"

using namespace dmm;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    json cert;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    if (r.out.rfind("{\n", 0) == 0) r.cert = json::parse(r.out);
    return r;
}

std::filesystem::path scratch() {
    const auto dir = std::filesystem::temp_directory_path() / "dmm_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string writeFile(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("version and usage errors") {
    const Run v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(cli::kVersion) != std::string::npos);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"check", "--corpus", "C4"}).code == 2);
    CHECK(run({"check", "--corpus", "--suite", "negcone", "--named", "negcone", "C4"}).code == 2);
    CHECK(run({"decompose", "--mode", "sideways", "--corpus", "C4"}).code == 2);
    CHECK(run({"classify", "--corpus", "nope"}).code == 2);
    CHECK(run({"classify", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("certificate shape") {
    const Run r = run({"validate", "--corpus", "C4"});
    REQUIRE(r.code == 0);
    CHECK(r.cert["command"] == json({"validate", "--corpus", "C4"}));
    CHECK(r.cert["subcommand"] == "validate");
    CHECK(r.cert["verdict"] == true);
    CHECK(r.cert["version"] == cli::kVersion);
    REQUIRE(r.cert["inputs"].size() == 1);
    CHECK(r.cert["inputs"][0]["corpus"] == "C4");
    CHECK(r.cert["inputs"][0]["sha256"] == cli::sha256Hex(dumpAlgebra(corpusAlgebra("C4"))));
}

TEST_CASE("sha256") {
    CHECK(cli::sha256Hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(cli::sha256Hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("file inputs are hashed and replayable") {
    const std::string text = dumpAlgebra(corpusAlgebra("S3o2"));
    const std::string path = writeFile("s3o2.json", text);
    const Run a = run({"classify", path});
    const Run b = run({"classify", path});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.cert["inputs"][0]["path"] == path);
    CHECK(a.cert["inputs"][0]["sha256"] == cli::sha256Hex(text));
    const Run replay = run(a.cert["command"].get<std::vector<std::string>>());
    CHECK(replay.out == a.out);
}

TEST_CASE("validate exit codes") {
    CHECK(run({"validate", writeFile("ok.json", dumpAlgebra(sugihara(3)))}).code == 0);
    const std::string notLattice = R"({"size":2,"le":[[1,1],[1,1]],"fusion":[[0,1],[1,1]],"e":0})";
    const Run bad = run({"validate", writeFile("bad.json", notLattice)});
    CHECK(bad.code == 1);
    CHECK(bad.cert["verdict"] == false);
    CHECK(run({"validate", writeFile("broken.json", "{\"size\":")}).code == 2);
}

TEST_CASE("construct output revalidates") {
    const std::vector<std::vector<std::string>> forms{
        {"construct", "sugihara", "5"},        {"construct", "oplus", "3"},
        {"construct", "ap", "3"},              {"construct", "ap+", "2"},
        {"construct", "named", "D4"},          {"construct", "named", "S3[C4]"},
        {"construct", "--corpus", "reflect", "2+"}, {"construct", "--corpus", "rext", "S3", "C4"},
    };
    for (const auto& args : forms) {
        CAPTURE(args.back());
        const Run r = run(args);
        REQUIRE(r.code == 0);
        const FiniteAlgebra a = parseAlgebra(r.out);
        const Run v = run({"validate", writeFile("constructed.json", r.out)});
        CHECK(v.code == 0);
        CHECK(a.size() > 0);
    }
    const Run r = run({"construct", "--corpus", "rext", "S3", "C4"});
    CHECK(isomorphism(parseAlgebra(r.out), corpusAlgebra("S3[C4]")).has_value());
    const std::string spec = writeFile("spec.json", R"({"base":"S3","sizes":[1,1,2]})");
    CHECK(parseAlgebra(run({"construct", "otimes", spec}).out).sameTables(corpusAlgebra("S3o2")));
    CHECK(run({"construct", "otimes", writeFile("spec2.json", R"({"base":"S3","sizes":[1]})")}).code == 2);
    CHECK(run({"construct", "sugihara", "zero"}).code == 2);
}

TEST_CASE("labels inherited from the corpus") {
    const std::string path = writeFile("S3o2.json", dumpAlgebra(corpusAlgebra("S3o2").withLabels({})));
    const Run r = run({"subalg", "--gens", "c", path});
    CHECK(r.code == 0);
    CHECK(r.err.find("{-1,0,c,1}") != std::string::npos);
}

TEST_CASE("equation and suite checks") {
    const Run neg = run({"check", "--corpus", "--suite", "negcone", "A3"});
    CHECK(neg.code == 1);
    CHECK(neg.cert["witnesses"]["counterexample"]["x"]["label"] == "2");
    CHECK(run({"check", "--corpus", "--suite", "negcone", "C4"}).code == 0);
    CHECK(run({"check", "--corpus", "--named", "sigma-sm", "S4"}).code == 0);
    CHECK(run({"check", "--corpus", "--equation", "x * y = y * x", "D4"}).code == 0);
    CHECK(run({"check", "--corpus", "--equation", "x^2 = x", "C4"}).code == 1);
    CHECK(run({"check", "--corpus", "--equation", "x^9 = x", "C4"}).code == 2);
    CHECK(run({"check", "--corpus", "--equation", "x = ", "C4"}).code == 2);
    CHECK(run({"check", "--corpus", "--suite", "negcone", "RS3"}).code == 2);
    CHECK(run({"check", "--corpus", "--suite", "bounds", "S5"}).code == 0);
    CHECK(run({"check", "--corpus", "--suite", "bounds", "--generators", "0", "S5"}).code == 2);
}

TEST_CASE("morphism commands") {
    const Run homs = run({"homs", "--corpus", "S4", "S3"});
    CHECK(homs.code == 0);
    CHECK(homs.cert["witnesses"]["count"] == 2);
    CHECK(run({"homs", "--corpus", "S3", "S4"}).code == 1);
    CHECK(run({"homs", "--corpus", "C4", "RS3"}).code == 2);

    CHECK(run({"epic", "--corpus", "--ambient", "S3o2", "--sub=-1,0,1", "--gens", "S3o2"}).code == 0);
    const Run notEpic = run({"epic", "--corpus", "--ambient", "S3o2", "--sub=-1,0,1", "--gens", "S3o2,S3o3"});
    CHECK(notEpic.code == 1);
    CHECK(notEpic.cert["witnesses"].contains("disagreement"));
    CHECK(run({"epic", "--corpus", "--ambient", "S3o2", "--sub", "c", "--gens", "S3o2"}).code == 2);

    const Run sep = run({"separate", "--corpus", "--ambient", "S3o2", "--sub=-1,0,1", "--element", "c"});
    CHECK(sep.code == 0);
    CHECK(run({"separate", "--corpus", "--ambient", "S3o2", "--sub=-1,0,1", "--element", "0"}).code == 2);
    CHECK(run({"separate", "--corpus", "--ambient", "S3o2", "--sub=-1,0,1", "--element", "zz"}).code == 2);
}

TEST_CASE("decompositions") {
    CHECK(run({"decompose", "--corpus", "--mode", "otimes", "S3o2"}).code == 0);
    CHECK(run({"decompose", "--corpus", "--mode", "dmm", "S3[C4]"}).code == 0);
    CHECK(run({"decompose", "--corpus", "--mode", "dmm", "S3"}).code == 2);
    CHECK(run({"decompose", "--corpus", "--mode", "reflect", "R(2+)"}).code == 0);
    CHECK(run({"decompose", "--corpus", "--mode", "reflect", "S3[C4]"}).code == 1);
}
