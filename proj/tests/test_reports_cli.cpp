#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "szlab/cli.hpp"
#include "szlab/enumerate.hpp"
#include "szlab/families.hpp"
#include "szlab/graph6.hpp"
#include "szlab/indices.hpp"
#include "szlab/reports.hpp"
#include "szlab/transforms.hpp"

using namespace szlab;

TEST_SUITE_BEGIN("reports_cli");

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  RunResult r;
  r.code = run_cli(args, r.out, r.err);
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

Graph tail_graph() {
  return from_edge_list("5 5\n0 1\n1 2\n2 0\n2 3\n3 4\n");
}

}  // namespace

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("text") == Format::Text);
  CHECK(format_name(Format::Csv) == std::string("csv"));
  CHECK_THROWS_AS(parse_format("yaml"), Error);
}

TEST_CASE("exact values in json") {
  Json j = json_of(Q4::from_quarters(27));
  CHECK(j.at("q4") == "27/4");
  CHECK(j.at("decimal").get<double>() == doctest::Approx(6.75));
  CHECK(q4_from_json(j) == Q4::from_quarters(27));
  CHECK(q4_from_json(json_of(Q4::from_quarters(-95))) == Q4::from_quarters(-95));
  CHECK_THROWS_AS(q4_from_json(Json{{"q4", "3/5"}, {"decimal", 0.6}}), Error);
}

TEST_CASE("index suite and decomposition reports round trip") {
  Graph g = tail_graph();
  IndexSuite s = index_suite(g);
  IndexSuite s2 = index_suite_from_json(Json::parse(render(s, Format::Json)));
  CHECK(same_report(s, s2));
  s2.Sz_e += 1;
  CHECK_FALSE(same_report(s, s2));

  DecompositionReport d = decompose_unicyclic(spec_of_graph(g));
  DecompositionReport d2 = decomposition_from_json(json_of(d));
  CHECK(same_report(d, d2));
  CHECK(Json::parse(render(d, Format::Json)) == json_of(d));

  std::string csv = render(s, Format::Csv);
  CHECK(count_lines(csv) == 2);  // header + one row
  CHECK(csv.find("97/4") != std::string::npos);
  CHECK(render(s, Format::Text).find("Sz_e_star") != std::string::npos);
}

TEST_CASE("transform reports round trip, prediction flavours intact") {
  UnicyclicSpec host = g3_family(11, 0, 0, 3);
  TransformReport sign_rep = check(host, {"star_collapse_31i", {{"slot", 0}}});
  TransformReport pair_rep =
      check_pair({"g4_vs_g3_d_n3_62", {{"d", 14}}});  // carries a mismatch

  for (const TransformReport& r : {sign_rep, pair_rep}) {
    TransformReport back = transform_from_json(json_of(r));
    CHECK(same_report(r, back));
    CHECK(Json::parse(render(r, Format::Json)) == json_of(r));
    back.agrees = !back.agrees;
    CHECK_FALSE(same_report(r, back));
  }
  CHECK(json_of(sign_rep).at("predicted_delta").is_null());
  CHECK(json_of(pair_rep).at("predicted_sign").is_null());
  CHECK(json_of(pair_rep).at("predicted_delta").at("q4") == "69/4");
  CHECK(json_of(pair_rep).at("actual_delta").at("q4") == "68/4");
  CHECK(render(pair_rep, Format::Text).find("agrees           false") !=
        std::string::npos);
}

TEST_CASE("search reports round trip and agree across formats") {
  SearchReport r = minimize_index(8, 3, IndexKind::Sz_e_star, {1, ""});
  SearchReport back = search_from_json(Json::parse(render(r, Format::Json)));
  CHECK(same_report(r, back));
  back.examined += 1;
  CHECK_FALSE(same_report(r, back));

  std::string csv = render(r, Format::Csv);
  CHECK(count_lines(csv) == 3);  // header + one row per minimizer
  CHECK(csv.rfind("n,d,kind,examined,minimum,", 0) == 0);
  CHECK(csv.find("241/4") != std::string::npos);
  CHECK(render(r, Format::Text).find("241/4") != std::string::npos);

  // json and csv carry the same numbers
  Json j = Json::parse(render(r, Format::Json));
  CHECK(j.at("minimum").at("q4") == "241/4");
  CHECK(j.at("examined").get<std::uint64_t>() == 13);
  CHECK(j.at("minimizers").size() == 2);
}

TEST_CASE("verification report round trips with its honest failure") {
  VerificationReport v = verify_theorem1(16, 2);
  VerificationReport back =
      verification_from_json(Json::parse(render(v, Format::Json)));
  CHECK(same_report(v, back));
  back.rows[3].matched = !back.rows[3].matched;
  CHECK_FALSE(same_report(v, back));

  Json j = json_of(v);
  CHECK(j.at("pass") == false);
  CHECK(j.at("classes_examined").get<std::uint64_t>() == 311465);
  CHECK(j.at("rows").size() == 12);
  int mismatched = 0;
  for (const auto& row : j.at("rows"))
    if (!row.at("matched").get<bool>()) {
      ++mismatched;
      CHECK(row.at("d").get<int>() == 6);
      CHECK(row.at("minimum").at("q4") == "1124/4");
    }
  CHECK(mismatched == 1);
  CHECK(render(v, Format::Text).find("1124/4") != std::string::npos);
}

TEST_CASE("batches share a header in csv and form a json array") {
  std::vector<TransformReport> rs = {
      check_pair({"g3_vs_g4_d_n2_61", {{"d", 14}}}),
      check_pair({"g4_vs_g3_d_n3_62", {{"d", 15}}}),
  };
  std::string csv = render_batch(rs, Format::Csv);
  CHECK(count_lines(csv) == 3);
  Json arr = Json::parse(render_batch(rs, Format::Json));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[0] == json_of(rs[0]));
  std::string text = render_batch(rs, Format::Text);
  CHECK(text.find("g3_vs_g4_d_n2_61") != std::string::npos);
  CHECK(text.find("g4_vs_g3_d_n3_62") != std::string::npos);
}

TEST_CASE("error objects") {
  Error e(ErrorKind::EmptyClass, "no unicyclic graph has n=6, d=9");
  Json j = json_of(e);
  CHECK(j.at("error").at("kind") == "EmptyClass");
  CHECK(j.at("error").at("message") == "no unicyclic graph has n=6, d=9");
  CHECK(render_error(e, Format::Text) ==
        "error: EmptyClass: no unicyclic graph has n=6, d=9\n");
  CHECK(Json::parse(render_error(e, Format::Json)) == j);
}

TEST_CASE("cli: index") {
  RunResult r = run({"index", "--graph6", "Bw", "--format", "json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("W") == 3);
  CHECK(j.at("Sz_e_star").at("q4") == "27/4");

  RunResult missing = run({"index"});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("need an input graph") != std::string::npos);

  RunResult both = run({"index", "--graph6", "Bw", "--edges", "x"});
  CHECK(both.code != 0);
  CHECK(!both.err.empty());

  RunResult bad = run({"index", "--graph6", "B", "--format", "json"});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out).at("error").at("kind") == "ParseError");
}

TEST_CASE("cli: family") {
  RunResult t = run({"family", "extremal n=16 d=14", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out == "OhCGGE??G?_@?@??_?K@?\norder=16 diameter=14 girth=3\n");

  RunResult j = run({"family", "path n=5", "--format", "json"});
  CHECK(j.code == 0);
  Json pj = Json::parse(j.out);
  CHECK(pj.at("graph6") == "DhC");
  CHECK(pj.at("diameter") == 4);
  CHECK(pj.at("girth").is_null());

  RunResult c = run({"family", "cycle n=6", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("family,graph6,order,diameter,girth\n", 0) == 0);
  CHECK(count_lines(c.out) == 2);

  CHECK(run({"family", "nosuch n=3"}).code == 1);
}

TEST_CASE("cli: transform") {
  RunResult ok = run({"transform", "--pair", "g3_vs_g4_d_n2_61", "--param",
                      "d=14", "--format", "json"});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out).at("agrees") == true);

  RunResult off = run({"transform", "--pair", "g4_vs_g3_d_n3_62", "--param",
                       "d=14", "--format", "json"});
  CHECK(off.code == 1);
  Json oj = Json::parse(off.out);
  CHECK(oj.at("agrees") == false);
  CHECK(oj.at("actual_delta").at("q4") == "68/4");
  CHECK(oj.at("predicted_delta").at("q4") == "69/4");

  RunResult fixed = run({"transform", "--family", "g3 variant=11 l1=0 l2=0 a=3",
                         "--rewrite", "star_collapse_31i", "--param", "slot=0"});
  CHECK(fixed.code == 0);

  RunResult batch = run({"transform", "--rewrite", "star_collapse_31i",
                         "--random", "5", "--seed", "7", "--format", "csv"});
  CHECK(batch.code == 0);
  CHECK(count_lines(batch.out) == 6);

  CHECK(run({"transform", "--pair", "nope", "--format", "json"}).code == 1);
  CHECK(run({"transform", "--format", "json"}).code == 1);  // neither name
  CHECK(run({"transform", "--pair", "g3_rebalance_42", "--rewrite",
             "rotate_path_41"})
            .code == 1);  // both names
  CHECK(run({"transform", "--pair", "g3_rebalance_42", "--param", "l1"})
            .code == 1);  // not key=value
}

TEST_CASE("cli: search") {
  RunResult csv = run({"search", "--n", "8", "--d", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(count_lines(csv.out) == 3);
  CHECK(csv.out.find("241/4") != std::string::npos);

  RunResult empty = run({"search", "--n", "6", "--d", "9", "--format", "json"});
  CHECK(empty.code == 1);
  CHECK(Json::parse(empty.out).at("error").at("kind") == "EmptyClass");

  RunResult big = run({"search", "--n", "25", "--d", "5"});
  CHECK(big.code == 1);
  CHECK(big.out.find("--allow-large") != std::string::npos);
}

TEST_CASE("cli: verify and identities") {
  RunResult ids = run({"verify", "--identities", "--max-n", "8"});
  CHECK(ids.code == 0);
  CHECK(ids.out.size() >= 5);
  CHECK(ids.out.substr(ids.out.size() - 5) == "PASS\n");

  CHECK(run({"verify", "--theorem1", "--identities", "--n", "16"}).code == 1);
  CHECK(run({"verify"}).code == 1);
  CHECK(run({"verify", "--theorem1", "--n", "15", "--format", "json"}).code == 1);

  RunResult batch = run({"identities", "--n", "6", "--format", "json"});
  CHECK(batch.code == 0);
  Json arr = Json::parse(batch.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 13);
  for (const auto& rep : arr) CHECK(rep.at("all_agree") == true);

  RunResult single = run({"identities", "--graph6", "Bw", "--format", "json"});
  CHECK(single.code == 0);
  CHECK(Json::parse(single.out).at("all_agree") == true);

  CHECK(run({"identities", "--n", "6", "--graph6", "Bw"}).code == 1);
}

TEST_CASE("cli: output file, help, bad flags") {
  const std::string path = "/tmp/szlab_cli_out.json";
  std::remove(path.c_str());
  RunResult direct = run({"index", "--graph6", "Bw", "--format", "json"});
  RunResult filed =
      run({"index", "--graph6", "Bw", "--format", "json", "--out", path});
  CHECK(filed.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
  std::remove(path.c_str());

  RunResult badout = run({"index", "--graph6", "Bw", "--out",
                          "/nonexistent_dir/x.json"});
  CHECK(badout.code == 1);

  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  for (const char* sub : {"index", "family", "transform", "search", "verify"})
    CHECK(help.out.find(sub) != std::string::npos);

  CHECK(run({}).code != 0);
  CHECK(run({"index", "--bogus"}).code != 0);
  CHECK(run({"nosuchcmd"}).code != 0);
}

TEST_SUITE_END();
