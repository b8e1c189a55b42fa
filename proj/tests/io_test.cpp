#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "hcs/campaign.hpp"
#include "hcs/io.hpp"
#include "hcs/search.hpp"

using namespace hcs;

#ifndef HCS_FIXTURE_DIR
#define HCS_FIXTURE_DIR "tests/fixtures"
#endif

TEST_CASE("minimal structure file parses to the expected package") {
  std::string text =
      "kind = HomCoassoc\n"
      "field = Q\n"
      "dim C = 1\n"
      "map alpha C {\n"
      "  e1 -> e1\n"
      "}\n"
      "comap delta C -> (C,C) {\n"
      "  e1 -> (e1,e1)\n"
      "}\n";
  ParsedFile v = parse_structure_file(text);
  const auto& s = std::get<StructurePackage>(v);
  CHECK(s.kind == StructureKind::HomCoassoc);
  CHECK(s.comap("delta").at2(0, 0, 0) == Scalar::one(s.field));
  CHECK(emit_structure_file(s) == text);
}

TEST_CASE("non-prime modulus is rejected") {
  std::string text = "kind = HomCoassoc\nfield = Fp 4\ndim C = 1\n";
  try {
    parse_structure_file(text);
    FAIL("expected NonPrimeModulus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimeModulus);
  }
}

TEST_CASE("unknown keys and malformed rows are errors with line references") {
  auto expect_code = [](const std::string& text, Errc code) {
    try {
      parse_structure_file(text);
      FAIL_CHECK("expected error for:\n" << text);
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  std::string head = "kind = HomLie\nfield = Fp 5\ndim C = 2\n";
  std::string alpha = "map alpha C {\n  e1 -> e1\n  e2 -> e2\n}\n";
  std::string gamma = "comap gamma C -> (C,C) {\n  e1 -> (e1,e2) - (e2,e1)\n  e2 -> 0\n}\n";

  expect_code("kind = HomLie\nfrobnicate = 3\n" + head.substr(14) + alpha + gamma, Errc::SyntaxError);
  expect_code(head + alpha + gamma + "map extra C {\n  e1 -> 0\n  e2 -> 0\n}\n", Errc::SyntaxError);
  expect_code(head + alpha, Errc::SyntaxError);  // missing gamma block
  expect_code("kind = Widget\nfield = Q\ndim C = 1\n" +
                  std::string("map alpha C {\n  e1 -> e1\n}\n"),
              Errc::UnknownKind);
  expect_code(head + "map alpha C {\n  e1 -> e1\n  e1 -> e2\n  e2 -> 0\n}\n" + gamma,
              Errc::SyntaxError);  // duplicate row
  expect_code(head + "map alpha C {\n  e1 -> e3\n  e2 -> 0\n}\n" + gamma, Errc::DimMismatch);
  expect_code(head + "map alpha C {\n  e1 -> 1/0 e1\n  e2 -> 0\n}\n" + gamma, Errc::SyntaxError);
  expect_code(head + "map alpha C {\n  e1 -> e1\n" + gamma, Errc::SyntaxError);  // unterminated
  expect_code("field = Q\ndim C = 1\nmap alpha C {\n  e1 -> e1\n}\n", Errc::UnknownKind);
}

TEST_CASE("scalars, signs and comments round-trip") {
  std::string text =
      "# a comment\n"
      "kind = HomLie\n"
      "field = Q\n"
      "dim C = 2\n"
      "map alpha C {\n"
      "  e1 -> 2 e1 + -3 e2   # trailing comment\n"
      "  e2 -> 0\n"
      "}\n"
      "comap gamma C -> (C, C) {\n"
      "  e1 -> 1/2 (e1, e2) - 1/2 (e2,e1)\n"
      "  e2 -> 0\n"
      "}\n";
  const auto s = std::get<StructurePackage>(parse_structure_file(text));
  CHECK(s.alpha.at1(0, 1) == Scalar(s.field, -3));
  CHECK(s.comap("gamma").at2(0, 0, 1) == Scalar::ratio(s.field, 1, 2));
  // canonical emission is a fixpoint
  std::string canon = emit_structure_file(s);
  CHECK(emit_structure_file(std::get<StructurePackage>(parse_structure_file(canon))) == canon);
  CHECK(canon.find("- 1/2 (e2,e1)") != std::string::npos);
}

TEST_CASE("parse-emit round trip over searched witnesses of every shape") {
  std::mt19937_64 rng(3);
  // structures over F5 and Q
  for (auto k : all_structure_kinds()) {
    for (const auto& f : {FieldSpec::prime(5), FieldSpec::rationals()}) {
      for (const auto& w : builtin_structure_witnesses(k, f)) {
        std::string canon = emit_structure_file(w);
        ParsedFile v = parse_structure_file(canon);
        CHECK(std::get<StructurePackage>(v) == w);
        CHECK(emit_structure_file(std::get<StructurePackage>(v)) == canon);
      }
    }
  }
  // comodules
  CampaignConfig cfg;
  cfg.seed = 9;
  for (auto ck : {ComoduleKind::TridendComodule, ComoduleKind::PostHomLieComodule}) {
    auto pool = comodule_pool(ck, cfg, 6);
    REQUIRE(!pool.empty());
    for (const auto& cm : pool) {
      std::string canon = emit_structure_file(cm);
      ParsedFile v = parse_structure_file(canon);
      CHECK(std::get<ComodulePackage>(v) == cm);
      CHECK(emit_structure_file(std::get<ComodulePackage>(v)) == canon);
    }
  }
  // raw (not necessarily valid) packages round-trip too
  for (int trial = 0; trial < 20; ++trial) {
    StructurePackage s = random_raw_package(StructureKind::PostHomPoisson, 3, FieldSpec::prime(7), rng);
    std::string canon = emit_structure_file(s);
    CHECK(std::get<StructurePackage>(parse_structure_file(canon)) == s);
  }
}

TEST_CASE("algebra constants round-trip") {
  auto Q = FieldSpec::rationals();
  SpaceId c{"C", 2};
  AlgebraConstants a{Q, c, TensorMap::identity(Q, c), ProductTensor(Q, c), ProductTensor(Q, c),
                     ProductTensor(Q, c)};
  a.m_dot.set(0, 0, 0, Scalar::one(Q));
  a.m_left.set(1, 0, 1, Scalar::ratio(Q, -2, 3));
  std::string canon = emit_structure_file(a);
  ParsedFile v = parse_structure_file(canon);
  CHECK(std::get<AlgebraConstants>(v) == a);
  CHECK(emit_structure_file(std::get<AlgebraConstants>(v)) == canon);
}

TEST_CASE("check reports are deterministic and name the failing axiom") {
  auto F5 = FieldSpec::prime(5);
  StructurePackage s = make_zero_package(StructureKind::HomLie, F5, 2);
  TensorMap bad(F5, s.space, {s.space, s.space});
  int e11[2] = {0, 0};
  bad.set(0, e11, Scalar::one(F5));  // gamma(e1) = e1^e1 is not skew in odd characteristic
  s.comaps.at("gamma") = bad;
  CheckReport rep = check_structure(s);
  std::string text = emit_report(rep);
  CHECK(text == emit_report(check_structure(s)));
  CHECK(text.find("axiom skew FAIL first_failing_basis_index = 1") != std::string::npos);
  CHECK(text.find("passed = fail") != std::string::npos);
}

TEST_CASE("shipped fixture corpus parses, re-emits byte-identically and passes") {
  namespace fs = std::filesystem;
  fs::path dir(HCS_FIXTURE_DIR);
  REQUIRE(fs::exists(dir));
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".hcs") continue;
    if (name.rfind("err-", 0) == 0) {
      CHECK_THROWS_AS(parse_structure_file(read_text_file(entry.path().string())), Error);
      continue;
    }
    std::string text = read_text_file(entry.path().string());
    ParsedFile v = parse_structure_file(text);
    CHECK(emit_parsed(v) == text);
    if (name.rfind("fail-", 0) == 0) {
      CHECK_FALSE(check_structure(std::get<StructurePackage>(v)).passed);
    } else if (auto* s = std::get_if<StructurePackage>(&v)) {
      CHECK(passes_full_check(*s));
    } else if (auto* cm = std::get_if<ComodulePackage>(&v)) {
      CHECK(passes_full_check(*cm));
    }
    ++count;
  }
  CHECK(count >= 12);
}
