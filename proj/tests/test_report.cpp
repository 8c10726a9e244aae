#include "doctest.h"
#include "usl2/report.hpp"

using namespace usl2;

namespace {

Report single(const std::string& command, JobResult r) {
  Report rep;
  rep.command = command;
  rep.request = Json::object();
  rep.results.push_back(std::move(r));
  return rep;
}

}  // namespace

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_field("") == "");
}

TEST_CASE("character parsing") {
  CHECK(parse_character("zero", std::nullopt) == Character::zero());
  CHECK(parse_character("e", std::nullopt) == Character::nilpotent_e());
  CHECK(parse_character("regular", 2) == Character::regular(2));
  CHECK_THROWS_AS(parse_character("regular", std::nullopt), UsageError);
  CHECK_THROWS_AS(parse_character("regular", 0u), UsageError);
  CHECK_THROWS_AS(parse_character("h", std::nullopt), UsageError);
}

TEST_CASE("validation") {
  JobSpec s;
  s.p = 4;
  CHECK_THROWS_AS(validate(s), UsageError);
  s.p = 5;
  CHECK_NOTHROW(validate(s));
  s.omega = 3;
  CHECK_THROWS_AS(validate(s), UsageError);
  s.omega.reset();
  s.alpha = "2";   // a non-residue mod 5
  CHECK_THROWS_AS(validate(s), UsageError);
  s.alpha = "4";
  CHECK_NOTHROW(validate(s));
  s.alpha = "[1,2";
  CHECK_THROWS_AS(validate(s), UsageError);
  JobSpec r;
  r.p = 11;
  r.chi = Character::regular(1);
  CHECK_THROWS_AS(validate(r), UsageError);
  r.p = 5;
  r.chi = Character::regular(5);
  CHECK_THROWS_AS(validate(r), UsageError);
}

TEST_CASE("filtration job reproduces the reference rows") {
  JobSpec s;
  s.p = 5;
  s.omega = 1;
  s.kinds = {FiltrationKind::PF, FiltrationKind::INT};
  const auto r = run_filtration(s);
  REQUIRE(r.tables.size() == 2);
  CHECK(r.tables[0].cumulative == std::vector<std::size_t>{1, 4, 10, 20, 34, 49, 50, 50, 50, 50, 50, 50, 50});
  CHECK(r.ok());
  const auto md = render_markdown(single("filtration", r), false);
  CHECK(md.find("| pf omega=1 | 1 | 4 | 10 | 20 | 34 | 49 | 50 |") != std::string::npos);
  const auto js = Json::parse(render_json(single("filtration", r), false));
  CHECK(js["summary"]["ok"] == true);
  CHECK(js["results"][0]["tables"][1]["kind"] == "int");
  CHECK_FALSE(js["results"][0].contains("wall_ms"));
}

TEST_CASE("corrupted idempotent is reported by name") {
  JobSpec s;
  s.p = 3;
  s.corrupt_idempotent = true;
  const auto r = run_blocks(s);
  CHECK_FALSE(r.ok());
  bool named = false;
  for (const auto& c : r.checks) named = named || (c.name == "idempotent_square" && !c.pass);
  CHECK(named);
}

TEST_CASE("csv rows use CRLF and quote extension-field values") {
  JobSpec s;
  s.p = 3;
  s.chi = Character::regular(1);
  const auto csv = render_csv(single("blocks", run_blocks(s)), false);
  CHECK(csv.rfind("record,p,chi,block,name,value,expected,pass,basis\r\n", 0) == 0);
  CHECK(csv.find("\"alpha=[0,0,1]\"") != std::string::npos);
  CHECK(csv.find("\n") == csv.find("\r\n") + 1);
}

TEST_CASE("verify job at p = 3 passes every check") {
  for (auto chi : {Character::zero(), Character::nilpotent_e(), Character::regular(2)}) {
    JobSpec s;
    s.p = 3;
    s.chi = chi;
    const auto r = run_verify(s);
    CHECK(r.ok());
    CHECK(r.checks.size() > 10);
    for (const auto& c : r.checks) {
      INFO(c.name);
      CHECK((c.basis == "reference_table" || c.basis == "closed_form" || c.basis == "identity" ||
             c.basis == "oracle"));
    }
  }
}
