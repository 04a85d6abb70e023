#include <doctest.h>

#include <random>

#include "frobcore/errors.hpp"
#include "frobcore/quotient.hpp"
#include "report.hpp"
#include "support/util.hpp"

using namespace frobcore;
using namespace frobcore::cli;
using namespace testutil;

namespace {

Report run_text(const std::string& text, RunOptions opts = {}) { return run_scenario(parse_scenario(text, "t"), opts); }

const char* corpus_text(const std::string& name) {
  for (const auto& e : embedded_corpus())
    if (name == e.name) return e.text;
  FAIL("missing corpus entry " << name);
  return "";
}

const Block& block_at(const Report& r, int line) {
  for (const auto& b : r.blocks)
    if (b.line == line) return b;
  FAIL("no block at line " << line);
  return r.blocks.front();
}

}  // namespace

TEST_CASE("scenario parsing") {
  auto sc = parse_scenario("ring R vars=[x] p=2\npair P ring=R e=1 u=x\n");
  REQUIRE(sc.statements.size() == 2);
  CHECK(sc.statements[1].kind == "pair");
  CHECK(sc.statements[1].find("u")->value == "x");

  auto multi = parse_scenario("ring R vars=[x] p=2\npair P ring=R u=x + x^2  # comment\n");
  CHECK(multi.statements[1].find("u")->value == "x + x^2");

  CHECK_THROWS_AS(parse_scenario("pair P ring=R e=1 u=x\n"), UnknownName);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2\nideal I ring=Q gens=[x]\n"), UnknownName);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2\npair P ring=R u=x\nideal I ring=P gens=[x]\n"), TypeMismatch);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2\nring R vars=[y] p=2\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2 colour=red\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2 p=3\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x]\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=6\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("frobnicate R\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2\ncheck wobble pair=P\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2\npair P ring=R u=(x\n"), ParseError);
  // Literals are parsed in the ring they refer to.
  CHECK_THROWS_AS(parse_scenario("ring R vars=[x] p=2\npair P ring=R u=y\n"), ParseError);

  try {
    parse_scenario("ring R vars=[x] p=2\npair P ring=R u=x + z\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 21);  // the z
  }
}

TEST_CASE("the corpus runs and passes") {
  REQUIRE(embedded_corpus().size() >= 6);
  for (const auto& e : embedded_corpus()) {
    CAPTURE(e.name);
    Report r = run_scenario(parse_scenario(e.text, e.name));
    CHECK(r.ok());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("wild Artin-Schreier report") {
  Report r = run_scenario(parse_scenario(corpus_text("wild_artin_schreier"), "w"));
  bool saw_tame = false, saw_fibered = false;
  for (const auto& b : r.blocks) {
    if (b.command.rfind("check tame", 0) == 0) {
      saw_tame = true;
      CHECK(*b.verdict == "FAIL (expected)");
    }
    if (b.command.rfind("check fibered", 0) == 0) {
      saw_fibered = true;
      CHECK(*b.verdict == "FAIL (expected)");
      const auto& w = b.fields.at("witnesses");
      CHECK(std::find(w.begin(), w.end(), json("[x; y + 1]")) != w.end());
    }
  }
  CHECK(saw_tame);
  CHECK(saw_fibered);
}

TEST_CASE("verdicts and module errors") {
  Report r = run_text(
      "ring R vars=[x] p=2\n"
      "pair P ring=R u=x\n"
      "check f-pure pair=P expect=false\n"
      "check f-pure pair=P\n"
      "compute transpose pair=P ideal=[x] expect=[x]\n"
      "compute transpose pair=P ideal=[x] expect=[1]\n");
  CHECK(*block_at(r, 3).verdict == "PASS (unexpected)");
  CHECK(*block_at(r, 4).verdict == "PASS");
  CHECK(*block_at(r, 5).verdict == "PASS");
  CHECK(*block_at(r, 6).verdict == "FAIL");
  CHECK(r.checks == 4);
  CHECK(r.failures == 2);

  Report e = run_text(
      "ring N vars=[x, y] p=2 relations=[x*y]\n"
      "pair P ring=N u=x\n"
      "check f-pure pair=P\n");
  const Block& bad = block_at(e, 2);
  CHECK(bad.failed);
  CHECK(bad.fields.at("error").get<std::string>().rfind("NotCompatibleMultiplier:", 0) == 0);
  CHECK(block_at(e, 3).fields.at("error").get<std::string>().rfind("UnknownName:", 0) == 0);
  CHECK(!e.ok());
}

TEST_CASE("reports are deterministic") {
  for (const auto& e : embedded_corpus()) {
    CAPTURE(e.name);
    RunOptions opts{7, true};
    Report a = run_scenario(parse_scenario(e.text, e.name), opts);
    Report b = run_scenario(parse_scenario(e.text, e.name), opts);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a).dump() == render_json(b).dump());
    CHECK(a.dot == b.dot);
  }
}

TEST_CASE("json mirrors the text report") {
  for (const auto& e : embedded_corpus()) {
    Report r = run_scenario(parse_scenario(e.text, e.name));
    std::string text = render_text(r);
    json j = render_json(r);
    REQUIRE(j.at("blocks").size() == r.blocks.size());
    for (const auto& b : j.at("blocks")) {
      CHECK(text.find("[" + std::to_string(b.at("line").get<int>()) + "] " + b.at("command").get<std::string>()) !=
            std::string::npos);
      for (const auto& [k, v] : b.at("fields").items()) CHECK(text.find(k + ": ") != std::string::npos);
      if (!b.at("verdict").is_null()) CHECK(text.find("=> " + b.at("verdict").get<std::string>()) != std::string::npos);
    }
    CHECK(j.at("summary").at("failed") == r.failures);
  }
}

TEST_CASE("tame-random depends only on the seed") {
  const char* kummer = corpus_text("kummer_f3");
  auto primes = [&](std::uint64_t seed) {
    Report r = run_scenario(parse_scenario(kummer, "k"), RunOptions{seed, false});
    for (const auto& b : r.blocks)
      if (b.command.rfind("check tame-random", 0) == 0) return b.fields.at("primes").dump();
    return std::string();
  };
  CHECK(primes(1) == primes(1));
  CHECK(primes(1) != primes(2));
}

TEST_CASE("nodal lattice as DOT") {
  Report r = run_scenario(parse_scenario(corpus_text("nodal_curve"), "n"), RunOptions{1, true});
  auto count = [&](const std::string& s) {
    std::size_t n = 0;
    for (auto pos = r.dot.find(s); pos != std::string::npos; pos = r.dot.find(s, pos + 1)) ++n;
    return n;
  };
  CHECK(count("[label=") == 5);
  CHECK(count(" -> ") == 5);
  CHECK(count("style=dashed") == 1);
  CHECK(count("peripheries=2") == 3);
  Report quiet = run_scenario(parse_scenario(corpus_text("nodal_curve"), "n"));
  CHECK(quiet.dot.empty());
}

TEST_CASE("printed ideals parse back to the same ideal") {
  std::mt19937_64 rng(seed());
  for (std::uint32_t p : {2u, 3u, 5u, 7919u}) {
    Ring r(p, {"x", "y", "z"});
    QuotientRing R(r, Ideal(r, {P(r, "x*y - z^2")}));
    for (int i = 0; i < 60; ++i) {
      Ideal a = R.lift(random_ideal(rng, r, 2, 3, 3));
      CHECK(Ideal(r, parse_polynomial_list(r, a.to_string())) == a);
      // and through a scenario declaration
      Report rep = run_text("ring S vars=[x, y, z] p=" + std::to_string(p) + " relations=[x*y - z^2]\nideal I ring=S gens=" +
                            a.to_string() + "\n");
      CHECK(rep.blocks.back().fields.at("ideal").get<std::string>() == a.to_string());
    }
  }
}
