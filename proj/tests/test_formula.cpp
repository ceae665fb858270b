// Copyright 2026 The ltltest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "error.hpp"
#include "parse.hpp"
#include "support/random_gen.hpp"

using namespace ltltest;

TEST_CASE("factory interns structurally equal formulas") {
  FormulaFactory f;
  FormulaId a1 = f.atom("a");
  FormulaId a2 = f.atom("a");
  CHECK(a1 == a2);
  CHECK(f.and_(a1, f.atom("b")) == f.and_(a2, f.atom("b")));
  CHECK(f.and_(a1, f.atom("b")) != f.and_(f.atom("b"), a1));
  CHECK_THROWS_AS(f.atom("0bad"), Error);
  CHECK_THROWS_AS(f.atom(""), Error);
}

TEST_CASE("parser builds the documented shapes") {
  FormulaFactory f;

  SUBCASE("running example") {
    FormulaId got = parse_ltl("p0 <-> (X G p1 | ! F p1)", f);
    FormulaId p0 = f.atom("p0"), p1 = f.atom("p1");
    FormulaId want =
        f.iff(p0, f.or_(f.next(f.always(p1)), f.not_(f.eventually(p1))));
    CHECK(got == want);
  }

  SUBCASE("until is left associative") {
    FormulaId got = parse_ltl("a U b U c", f);
    FormulaId want =
        f.until(f.until(f.atom("a"), f.atom("b")), f.atom("c"));
    CHECK(got == want);
  }

  SUBCASE("unary binds tighter than binary") {
    CHECK(parse_ltl("! a & b", f) ==
          f.and_(f.not_(f.atom("a")), f.atom("b")));
    CHECK(parse_ltl("X a U b", f) ==
          f.until(f.next(f.atom("a")), f.atom("b")));
  }

  SUBCASE("and binds tighter than or, until tighter than and") {
    CHECK(parse_ltl("a & b | c", f) ==
          f.or_(f.and_(f.atom("a"), f.atom("b")), f.atom("c")));
    CHECK(parse_ltl("a U b & c", f) ==
          f.and_(f.until(f.atom("a"), f.atom("b")), f.atom("c")));
  }

  SUBCASE("implication and iff are right associative") {
    CHECK(parse_ltl("a -> b -> c", f) ==
          f.implies(f.atom("a"), f.implies(f.atom("b"), f.atom("c"))));
    CHECK(parse_ltl("a <-> b <-> c", f) ==
          f.iff(f.atom("a"), f.iff(f.atom("b"), f.atom("c"))));
  }

  SUBCASE("constants") {
    CHECK(parse_ltl("true", f) == f.make_true());
    CHECK(parse_ltl("false U a", f) == f.until(f.make_false(), f.atom("a")));
  }
}

TEST_CASE("parser reports positions and rejects weak next") {
  FormulaFactory f;
  CHECK_THROWS_AS(parse_ltl("a &", f), ParseError);
  CHECK_THROWS_AS(parse_ltl("(a | b", f), ParseError);
  CHECK_THROWS_AS(parse_ltl("a b", f), ParseError);
  CHECK_THROWS_AS(parse_ltl("N a", f), ParseError);
  CHECK_THROWS_AS(parse_ltl("a < b", f), ParseError);

  try {
    parse_ltl("a &\n& b", f, 10, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 11);  // offsets propagate through newlines
    CHECK(e.column == 1);
  }
}

TEST_CASE("parse of pretty print is the identity") {
  FormulaFactory f;
  Rng rng(2026);
  for (int i = 0; i < 1000; ++i) {
    FormulaId id = testing::random_formula(f, rng, {"a", "b", "c"}, 4);
    CAPTURE(f.to_string(id));
    CHECK(parse_ltl(f.to_string(id), f) == id);
  }
}

TEST_CASE("parse_spec builds requirement conjunctions") {
  SUBCASE("running example") {
    Spec spec = parse_spec(
        ".inputs p0\n.outputs p1\n.req p0 <-> (X G p1 | ! F p1)\n");
    CHECK(spec.requirements.size() == 1);
    CHECK(spec.num_inputs == 1);
    CHECK(spec.num_outputs() == 1);
    CHECK(spec.ap->name(0) == "p0");
    CHECK(spec.ap->name(1) == "p1");
    CHECK(spec.conjunction == spec.requirements[0]);
  }

  SUBCASE("trivial requirement") {
    Spec spec = parse_spec(".inputs a\n.outputs b\n.req true\n");
    CHECK(spec.conjunction == spec.factory->make_true());
  }

  SUBCASE("conjunction is the left fold in file order") {
    Spec spec = parse_spec(
        ".inputs a\n.outputs b\n.req a\n.req b\n.req a & b\n");
    FormulaFactory& f = *spec.factory;
    CHECK(spec.conjunction ==
          f.and_(f.and_(spec.requirements[0], spec.requirements[1]),
                 spec.requirements[2]));
  }

  SUBCASE("comments, blank lines and ordering freedom") {
    Spec spec = parse_spec(
        "# heading\n\n.outputs o0 o1   # trailing\n.inputs i0\n"
        ".req G (i0 -> o0)\n");
    CHECK(spec.num_inputs == 1);
    CHECK(spec.num_outputs() == 2);
    CHECK(spec.ap->name(0) == "i0");  // inputs precede outputs in AP
  }
}

TEST_CASE("parsers reject junk without crashing") {
  Rng rng(17);
  const char alphabet[] = " \t\n.abUGFX()&|!<->=01#req";
  for (int i = 0; i < 400; ++i) {
    std::string junk;
    std::size_t len = rng.below(60);
    for (std::size_t j = 0; j < len; ++j)
      junk += alphabet[rng.below(sizeof alphabet - 1)];
    try {
      parse_spec(junk);
    } catch (const Error&) {
      // Expected for almost every input; only absence of crashes matters.
    }
    FormulaFactory f;
    try {
      parse_ltl(junk, f);
    } catch (const Error&) {
    }
  }
}

TEST_CASE("parse_spec rejects malformed inputs") {
  CHECK_THROWS_AS(parse_spec(".inputs a\n.outputs a\n.req a\n"), Error);
  CHECK_THROWS_AS(parse_spec(".inputs a a\n.outputs b\n.req a\n"), Error);
  CHECK_THROWS_AS(parse_spec(".inputs a\n.outputs b\n.req c\n"), ParseError);
  CHECK_THROWS_AS(parse_spec(".inputs a\n.req a\n"), ParseError);
  CHECK_THROWS_AS(parse_spec(".inputs a\n.outputs b\n"), Error);
  CHECK_THROWS_AS(parse_spec(".inputs a\n.inputs b\n.outputs c\n.req a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_spec("inputs a\n"), ParseError);
  CHECK_THROWS_AS(parse_spec(".inputs a\n.outputs b\n.req a &\n"),
                  ParseError);

  try {
    parse_spec(".inputs a\n.outputs b\n.req a |\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}
