#include "commands.hpp"
#include "doctest.h"
#include "sturmian/sturmian.hpp"

using namespace sturmian;
using nlohmann::json;

namespace {

cli::CommandResult run(std::vector<std::string> args) { return cli::dispatch(args); }

json payload_of(std::vector<std::string> args) {
  args.push_back("--json");
  const cli::CommandResult r = run(args);
  REQUIRE(r.exit_code == 0);
  // Round trip through the printed text.
  const json printed = json::parse(r.render());
  CHECK(printed["status"] == "ok");
  return printed["payload"];
}

IetParams params_from(const json& j) {
  IetParams p{parse_quad(j["l0"].get<std::string>()), parse_quad(j["l1"].get<std::string>()),
              parse_quad(j["rho"].get<std::string>()), parse_boundary(j["boundary"].get<std::string>())};
  p.validate();
  return p;
}

}  // namespace

TEST_CASE("normalize") {
  const cli::CommandResult r = run({"normalize", "aaBABBa"});
  CHECK(r.exit_code == 0);
  CHECK(r.render().find("aaBBBAa") != std::string::npos);
  const json j = payload_of({"normalize", "aa\xce\xb2\xce\xb1\xce\xb2\xce\xb2" "a"});
  CHECK(j["normalized"] == "aaBBBAa");
  CHECK(is_normalized(MorphismWord::parse(j["normalized"].get<std::string>())));
}

TEST_CASE("delta and orbit") {
  const json orbit = payload_of({"delta-orbit", "aaBBBAa"});
  CHECK(orbit["preperiod"] == 5);
  CHECK(orbit["period"] == 6);
  CHECK(orbit["words"].size() == 11);
  for (const auto& w : orbit["words"]) CHECK(is_normalized(MorphismWord::parse(w.get<std::string>())));
  CHECK(payload_of({"delta", "aaBBBAa", "--iterations", "2"})["result"] == "BBbbbBA");
  const std::string table = run({"delta-orbit", "aaBBBAa"}).render();
  CHECK(table.find("Delta^11(w) = ") != std::string::npos);
}

TEST_CASE("compose, apply and fixed points") {
  const json c = payload_of({"compose", "a", "B", "b"});
  CHECK(c["name"] == "aBb");
  CHECK(payload_of({"apply", "aBb", "0"})["image"] == "100");
  CHECK(payload_of({"fixed-point", "aBb", "--length", "19"})["prefix"] == "1001010010010010100");
  const json p = payload_of({"params", "abB"});
  const IetParams q = params_from(p);
  CHECK(q.l0 == parse_quad("-1+sqrt(3)"));
  CHECK(q.rho == parse_quad("3/2-1/2*sqrt(3)"));
  CHECK(payload_of({"params", "abB", "--theta-form"}).contains("theta"));
}

TEST_CASE("generate") {
  const json g = payload_of({"generate", "--l0", "-1+sqrt(3)", "--l1", "2-sqrt(3)", "--rho", "3/2-1/2*sqrt(3)",
                             "--length", "19"});
  CHECK(g["word"] == "0100010010001000100");
  const IetParams p = params_from(g["params"]);
  CHECK(generate(p, 19) == g["word"].get<std::string>());
}

TEST_CASE("derived words") {
  const json d = payload_of({"derive", "aBb", "--factor", "0", "--length", "11"});
  CHECK(d["derived_prefix"] == "01101010110");
  CHECK(d["return_words"] == json::array({"0", "01"}));
  const json e = payload_of({"derive", "abB", "--factor", "0", "--length", "11"});
  CHECK(e["matched_delta_power"] == 1);
  const json m = payload_of({"match-delta", "bB", "--prefix-len", "10", "--derive-len", "100"});
  CHECK(m["matches"].size() > 1);
}

TEST_CASE("closeability commands") {
  const json c = payload_of({"classify", "abB"});
  CHECK(c["closeable"] == false);
  CHECK(c["delta_class"] == "other");
  CHECK(run({"classify", "abB"}).render().find("closeable=false") != std::string::npos);
  CHECK(payload_of({"classify", "bB"})["closeable"] == true);
  for (const auto& p : payload_of({"classify", "aA"})["params"]) params_from(p);

  const json s = payload_of({"closed-set", "bA"});
  CHECK(s["members"].size() == 4);
  for (const auto& m : s["members"]) {
    const MorphismWord w = MorphismWord::parse(m["name"].get<std::string>());
    CHECK(is_normalized(w));
    CHECK(is_primitive(w));
  }

  const json v = payload_of({"verify", "bB", "--max-factor-len", "4", "--derive-len", "80"});
  CHECK(v["failures"] == 0);
  CHECK(v["total"] == v["checks"].size());

  CHECK(payload_of({"yasutomi", "--gamma", "-1/2+1/2*sqrt(3)", "--delta", "-1/2+sqrt(3)"})["fixed_by_primitive_morphism"] ==
        false);
  CHECK(payload_of({"yasutomi", "--theta", "-1/2+1/2*sqrt(5)", "--rho", "-1/2+1/2*sqrt(5)"})["fixed_by_primitive_morphism"] ==
        true);
}

TEST_CASE("errors and exit codes") {
  const cli::CommandResult usage = run({"frobnicate"});
  CHECK(usage.exit_code == 2);
  CHECK_FALSE(usage.ok);
  const cli::CommandResult missing = run({"derive", "abB"});
  CHECK(missing.exit_code == 2);
  const cli::CommandResult domain = run({"delta", "aA", "--iterations", "1", "--json"});
  CHECK(domain.exit_code == 1);
  const json j = json::parse(domain.render());
  CHECK(j["status"] == "error");
  CHECK(j["diagnostics"][0].get<std::string>().find("NoGreekLatinPivot") != std::string::npos);
  CHECK(run({"classify", "bb"}).exit_code == 1);
  CHECK(run({"generate", "--l0", "1", "--l1", "sqrt(2)", "--rho", "5", "--length", "3"}).exit_code == 1);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("seed is echoed") {
  const cli::CommandResult r = run({"normalize", "ab", "--seed", "7", "--json"});
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.render())["diagnostics"].dump().find("7") != std::string::npos);
}
