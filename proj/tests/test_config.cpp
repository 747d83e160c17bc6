#include <doctest.h>

#include <string>

#include "semicrossed/config.hpp"
#include "semicrossed/error.hpp"

using namespace semicrossed;

namespace {
Errc codeOf(const std::string& text, std::string* message = nullptr) {
  try {
    parseConfig(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  FAIL("expected an error");
  return Errc::BadInput;
}
}  // namespace

TEST_CASE("minimal config fills defaults") {
  const auto c = parseConfig("system { kind = circle; k = 2 }\n");
  CHECK(c.system.kind() == DynamicalSystem::Kind::CircleTimesK);
  CHECK(c.system.multiplier() == 2);
  CHECK(c.elements.empty());
  CHECK(c.budget.nMax == 256);
  CHECK(c.budget.gridSize == 256);
  CHECK(c.budget.window == 128);
  CHECK_FALSE(c.tolerance.has_value());
}

TEST_CASE("full config") {
  const auto c = parseConfig(R"(# golden mean
system {
  kind = sft
  matrix = 11 10
}
element F { form = semicrossed; expr = 1 + U*cyl(0:1, 1:2) }
element G { form = crossed; expr = U^-1 }
budgets { nmax = 32; grid = 16; window = 8; seed = 7; tolerance = 1e-3 }
)");
  CHECK(c.system.kind() == DynamicalSystem::Kind::Sft);
  CHECK(c.system.transition() == TransitionMatrix{{1, 1}, {1, 0}});
  REQUIRE(c.elements.size() == 2);
  REQUIRE(c.element("F") != nullptr);
  CHECK(c.element("F")->band() == 1);
  CHECK(c.element("G")->coeffs.count(-1) == 1);
  CHECK(c.element("H") == nullptr);
  CHECK(c.budget.nMax == 32);
  CHECK(c.budget.gridSize == 16);
  CHECK(c.budget.window == 8);
  CHECK(c.budget.seed == 7);
  CHECK(*c.tolerance == doctest::Approx(1e-3));
}

TEST_CASE("relation-2 elements") {
  const auto c = parseConfig("system { kind = perm; perm = 1 2 0 }\nelement R { form = relation2; expr = tab(1,2,3)*U }\n");
  CHECK(c.element("R")->form == Form::Right);
}

TEST_CASE("config errors carry line and field") {
  std::string msg;
  CHECK(codeOf("system { kind = sft; matrix = 10 10 }", &msg) == Errc::InvalidMatrix);
  CHECK(msg.find("column 1") != std::string::npos);
  CHECK(msg.find("line 1") != std::string::npos);

  CHECK(codeOf("system { kind = circle; k = 2 }\nelement F { form = semicrossed; expr = U^-1 }", &msg) ==
        Errc::NotSemicrossed);
  CHECK(msg.find("line 2") != std::string::npos);

  CHECK(codeOf("system { kind = circle; k = 2; colour = red }", &msg) == Errc::Parse);
  CHECK(msg.find("colour") != std::string::npos);
  CHECK(codeOf("widgets { }") == Errc::Parse);
  CHECK(codeOf("system { kind = circle; k = 2 }\nsystem { kind = circle; k = 3 }") == Errc::Parse);
  CHECK(codeOf("system { kind = circle; k = 2 }\nbudgets { nmax = lots }", &msg) == Errc::Parse);
  CHECK(msg.find("nmax") != std::string::npos);
  CHECK(codeOf("system { kind = circle; k = 2") == Errc::Parse);
}

TEST_CASE("loadConfig reports a missing file") { CHECK_THROWS_AS(loadConfig("/nonexistent/semicrossed.cfg"), Error); }
