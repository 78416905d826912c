#include <doctest.h>

#include "magic/construct.hpp"
#include "magic/errors.hpp"
#include "magic/generators.hpp"
#include "magic/json_io.hpp"

using namespace magic;

TEST_CASE("labeling file round trip") {
  const MultiGraph k6 = complete_graph(6);
  const auto res = construct(k6, 8, 0);
  REQUIRE(res.labeling);
  const LabelingFile f{8, 0, *res.labeling, res.trace};
  const std::string text = labeling_to_json(f);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"c\"") < text.find("\"k\""));
  CHECK(text.find("\"k\"") < text.find("\"labels\""));
  const LabelingFile back = labeling_from_json(text);
  CHECK(back.k == 8);
  CHECK(back.c == 0);
  CHECK(back.labeling == *res.labeling);
  CHECK(replay(k6, 8, back.trace) == *res.labeling);
  CHECK(labeling_to_json(back) == text);
}

TEST_CASE("labeling file errors") {
  CHECK_THROWS_AS(labeling_from_json("{"), InvalidInput);
  CHECK_THROWS_AS(labeling_from_json(R"({"k": 3, "c": 2})"), InvalidInput);
  CHECK_THROWS_AS(labeling_from_json(R"({"k": 3, "c": 2, "labels": {"0": 1, "5": 1}})"), InvalidInput);
  CHECK_THROWS_AS(labeling_from_json(R"({"k": 3, "c": 2, "labels": {"x": 1}})"), InvalidInput);
  CHECK_THROWS_AS(labeling_from_json(R"({"k": 3, "c": 2, "labels": [1, 1]})"), InvalidInput);
  const auto ok = labeling_from_json(R"({"k": 3, "c": 2, "labels": {"1": 2, "0": 1}})");
  CHECK(ok.labeling.labels == std::vector<Label>{1, 2});
  CHECK(ok.trace.steps.empty());
}

TEST_CASE("spectrum report") {
  const auto s = predict_spectrum(complete_graph(5), 6);
  const std::string text = spectrum_to_json(s);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"complete\": false") != std::string::npos);
  const auto back = spectrum_from_json(text);
  CHECK(back.residues == s.residues);
  CHECK(back.provenance == s.provenance);
  CHECK(spectrum_to_json(back) == text);

  const auto z = predict_spectrum(petersen_graph(), 1);
  const std::string zt = spectrum_to_json(z);
  CHECK(zt.find("\"symbolic\": \"Z\"") != std::string::npos);
  CHECK(zt.find("\"spectrum\"") == std::string::npos);
  CHECK(spectrum_from_json(zt).symbolic == SymbolicSpectrum::Integers);
  CHECK_THROWS_AS(spectrum_from_json(R"({"k": 1, "symbolic": "Q"})"), InvalidInput);
}

TEST_CASE("factor decomposition") {
  const auto f = two_factorization(complete_graph(5));
  const std::string text = factors_to_json(f);
  CHECK(text.find("\"degrees\"") < text.find("\"parts\""));
  const auto back = factors_from_json(text);
  CHECK(back.parts == f.parts);
  CHECK(back.degrees == f.degrees);
  CHECK_THROWS_AS(factors_from_json(R"({"parts": 3})"), InvalidInput);
}
