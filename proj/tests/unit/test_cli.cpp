#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kmb/cli/cli.hpp"

using namespace kmb;
using namespace kmb::cli;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "kmb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

Record record_of(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("record");
    const Invocation r = invoke(std::move(args));
    REQUIRE(r.code == kExitSuccess);
    return Record::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("inline and record matrix parsing") {
    const RawMatrix m = parse_inline_matrix(" [[1, (x_1 + 2)/3], [t^-1, 0]] ");
    CHECK(m.n == 2);
    CHECK(m.entries == std::vector<std::string>{"1", "(x_1 + 2)/3", "t^-1", "0"});
    CHECK_THROWS_AS(parse_inline_matrix("[[1, 2], [3]]"), UsageError);
    CHECK_THROWS_AS(parse_inline_matrix("[[1, 2], [3, 4]"), UsageError);
    CHECK_THROWS_AS(parse_inline_matrix("[[1, ], [3, 4]]"), UsageError);
    const RawMatrix r = parse_matrix_argument(R"({"n": 2, "ring": "Q", "entries": ["2", "3", "1", "2"]})");
    CHECK(r.ring == RingTag::rational);
    CHECK(r.entries.size() == 4);
    CHECK_THROWS_AS(parse_matrix_argument(R"({"n": 2, "entries": ["1"]})"), UsageError);
    CHECK_THROWS_AS(parse_matrix_argument(R"({"n": 2, "ring": "Z", "entries": ["1","0","0","1"]})"), UsageError);
    CHECK(parse_matrix_file("[[1,0],[0,1]]\n# comment\n\n[[t,0],[0,t^-1]]\n").size() == 2);
    CHECK(parse_matrix_file(R"([{"n":1,"entries":["1"]},{"n":1,"entries":["2"]}])").size() == 2);
}

TEST_CASE("matrix records round trip") {
    const Matrix<LaurentPolynomial> g{{LaurentPolynomial::t(2), LaurentPolynomial(RationalFunction::variable(-1))},
                                      {LaurentPolynomial(0), LaurentPolynomial::t(-2)}};
    const RawMatrix raw = parse_matrix_record(matrix_record(g, RingTag::laurent));
    CHECK(materialize<LaurentPolynomial>(raw, RingTag::laurent, [](const std::string& e) { return parse_laurent(e); }) == g);
    CHECK_THROWS_AS(
        materialize<Rational>(raw, RingTag::rational, [](const std::string& e) { return parse_rational(e); }),
        MathError);
}

TEST_CASE("probe with M = 5 lists witnesses of degree D") {
    const Record r = record_of({"probe", "--window", "5"});
    REQUIRE(r["witnesses"].size() == 5);
    for (int d = 1; d <= 5; ++d) {
        CHECK(r["witnesses"][d - 1]["target_degree"] == d);
        CHECK(r["witnesses"][d - 1]["witness_degree"] == d);
    }
    const Invocation text = invoke({"probe", "--window", "5"});
    CHECK(text.code == 0);
    CHECK(text.out.find("torus(x_5)") != std::string::npos);
    CHECK(record_of({"probe", "--window", "3", "--target-degree", "-3"})["witnesses"][0]["deg_tinv"] == 3);
    CHECK(invoke({"probe", "--window", "3", "--target-degree", "4"}).code == kExitDomainError);
}

TEST_CASE("growth on diag(t, t^-1) with L = 4") {
    const Record r = record_of({"growth", "[[t, 0], [0, t^-1]]", "--max-length", "4"});
    REQUIRE(r["rows"].size() == 4);
    for (int l = 1; l <= 4; ++l) {
        CHECK(r["rows"][l - 1]["max_abs_deg_t"] == l);
        CHECK(r["rows"][l - 1]["count"] == 2 * l + 1);
    }
    CHECK(r["cyclic"]["verdict"] == "UNBOUNDED");
    const Record plateau = record_of({"growth", "[[1, t + 2*t^-1], [0, 1]]", "--max-length", "3"});
    for (const auto& row : plateau["rows"]) CHECK(row["max_abs_deg_t"] == 0);
    CHECK(invoke({"growth", "[[2, 0], [0, 1]]"}).code == kExitDomainError);
}

TEST_CASE("bruhat on [[2,3],[1,2]]") {
    const Record r = record_of({"bruhat", "[[2,3],[1,2]]"});
    CHECK(r["length"] == 5);
    CHECK(r["verified"] == true);
    const Invocation text = invoke({"bruhat", "[[2,3],[1,2]]"});
    CHECK(text.out.find("verification  PASS") != std::string::npos);
    CHECK(record_of({"bruhat", "[[1, a], [0, 1]]", "--ring", "nf", "--min-poly", "-2,0,1"})["length"] == 1);
    CHECK(record_of({"bruhat", "[[x_1, 0], [0, 1/x_1]]", "--ring", "k"})["verified"] == true);
}

TEST_CASE("embed reports the image and its degree profile") {
    const Record r = record_of({"embed", "[[x_1, 0], [0, 1/x_1]]", "--window", "3"});
    CHECK(r["image"]["n"] == 4);
    CHECK(parse_laurent(r["vec_part"][2].get<std::string>()) ==
          LaurentPolynomial::term(RationalFunction::variable(1).inverse(), 1));
    CHECK(r["profile"]["deg_t"] == 1);
    CHECK(record_of({"embed", "[[1, x_1, 0], [0, 1, 0], [0, 0, 1]]", "--group-size", "3"})["image"]["n"] == 9);
    CHECK(invoke({"embed", "[[x_4, 0], [0, 1/x_4]]", "--window", "3"}).code == kExitDomainError);
}

TEST_CASE("decompose, primitive, vandermonde and double-embed") {
    const Record d = record_of({"decompose", "[[1, a/3], [0, 1]]", "--min-poly", "-2,0,1", "--level", "2"});
    REQUIRE(d["factors"].size() == 3);
    CHECK(d["factors"][1]["tag"] == "V_MEMBER");
    CHECK(d["factors"][1]["label"] == "u+(12*a)");
    CHECK(d["verified"] == true);

    CHECK(record_of({"primitive", "--min-poly", "1,0,1"})["y"] == "1 + a");
    CHECK(record_of({"primitive", "--min-poly", "-2,0,1"})["y"] == "1 + a");

    const Record v = record_of({"vandermonde", "--points", "1,2,3", "t"});
    CHECK(v["solution"][0]["coefficient"] == "5/4");
    CHECK(v["solution"][1]["coefficient"] == "-2");
    CHECK(v["solution"][2]["coefficient"] == "3/4");
    CHECK(v["verified"] == true);

    const Record moved = record_of({"double-embed", "[[1, a], [0, 1]]", "--min-poly", "-2,0,1"});
    CHECK(moved["verdict"] == "MOVES");
    CHECK(moved["images"][0] == Record({"1", "a", "1", "-a"}));
    CHECK(record_of({"double-embed", "[[2, 3], [1, 2]]", "--min-poly", "-2,0,1"})["verdict"] == "PRESERVES");
    CHECK(invoke({"double-embed", "[[1, a], [0, 1]]", "--min-poly", "-2,0,0,1"}).code == kExitDomainError);
}

TEST_CASE("input files") {
    const auto text = temp_file("kmb_cli_gens.txt", "[[t, 0], [0, t^-1]]\n");
    CHECK(record_of({"growth", "--input", text.string(), "--max-length", "2"})["rows"][1]["count"] == 5);
    const auto json = temp_file("kmb_cli_matrix.json", R"({"n": 2, "ring": "Q", "entries": ["0", "-1", "1", "0"]})");
    CHECK(record_of({"bruhat", "--input", json.string()})["length"] == 3);
    CHECK(invoke({"bruhat", "--input", "/nonexistent/file"}).code == kExitUsageError);
    std::filesystem::remove(text);
    std::filesystem::remove(json);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == kExitUsageError);
    CHECK(invoke({"frobnicate"}).code == kExitUsageError);
    CHECK(invoke({"probe", "--window", "zero"}).code == kExitUsageError);
    CHECK(invoke({"probe", "--window", "0"}).code == kExitUsageError);
    CHECK(invoke({"embed", "--bogus", "[[1,0],[0,1]]"}).code == kExitUsageError);
    CHECK(invoke({"bruhat"}).code == kExitUsageError);
    CHECK(invoke({"bruhat", "[[1, 2], [3]]"}).code == kExitUsageError);
    CHECK(invoke({"bruhat", "[[1, y], [0, 1]]"}).code == kExitUsageError);
    CHECK(invoke({"bruhat", "[[1, 1/0], [0, 1]]"}).code == kExitUsageError);
    CHECK(invoke({"bruhat", "[[2, 0], [0, 1]]"}).code == kExitDomainError);
    CHECK(invoke({"decompose", "[[1, 0], [0, 1]]"}).code == kExitUsageError);
    CHECK(invoke({"primitive", "--min-poly", "-1,0,1"}).code == kExitDomainError);
    CHECK(invoke({"vandermonde", "--points", "1,1", "t"}).code == kExitDomainError);
    CHECK(invoke({"--help"}).code == kExitSuccess);

    const Invocation bad = invoke({"bruhat", "[[2, 0], [0, 1]]"});
    CHECK(bad.err.find("[[2, 0], [0, 1]]") != std::string::npos);
    Command c{"bruhat", {}, {"[[2, 0], [0, 1]]"}};
    c.options.format = Format::record;
    const Report report = run_command(c);
    CHECK(report.exit_code == kExitDomainError);
    CHECK(report.record["status"] == "domain_error");
    CHECK(report.record["input"] == "[[2, 0], [0, 1]]");
}

TEST_CASE("validate rejects malformed commands before computing") {
    CHECK_THROWS_AS(validate(Command{"nope", {}, {}}), UsageError);
    Command c{"probe", {}, {}};
    c.options.group_size = 1;
    CHECK_THROWS_AS(validate(c), UsageError);
    c.options.group_size = 2;
    CHECK_NOTHROW(validate(c));
    c.arguments.push_back("[[1]]");
    CHECK_THROWS_AS(validate(c), UsageError);
    CHECK(command_names().size() == 8);
}

TEST_CASE("identical invocations produce identical reports") {
    const std::vector<std::vector<std::string>> invocations{
        {"growth", "[[t, 0], [0, t^-1]]", "[[1, t], [0, 1]]", "--max-length", "3", "--format", "record"},
        {"decompose", "[[1 + a, a], [1, 1 - a]]", "--min-poly", "-2,0,1"},
        {"embed", "[[x_1 + x_2, 1], [-1, 0]]", "--format", "record"},
        {"primitive", "--min-poly", "1,0,-10,0,1"}};
    for (const auto& args : invocations) {
        const Invocation a = invoke(args);
        const Invocation b = invoke(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("serialized scalars in reports re-parse to equal values") {
    const Record r = record_of({"embed", "[[x_1 + x_2, 1/x_-1], [-x_-1, 0]]"});
    for (const auto& e : r["ad_part"]["entries"]) {
        const std::string s = e.get<std::string>();
        CHECK(parse_rational_function(parse_rational_function(s).to_string()) == parse_rational_function(s));
    }
    for (const auto& e : r["image"]["entries"]) {
        const LaurentPolynomial f = parse_laurent(e.get<std::string>());
        CHECK(f.to_string() == e.get<std::string>());
    }
}
