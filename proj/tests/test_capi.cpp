#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "raney/raney.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  raney_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("generate and serialize") {
  raney_lattice* l = nullptr;
  REQUIRE(raney_lattice_generate("chain", 3, &l) == RANEY_OK);
  CHECK(raney_lattice_size(l) == 3);
  char* text = nullptr;
  REQUIRE(raney_lattice_to_json(l, &text) == RANEY_OK);
  const auto j = nlohmann::json::parse(take(text));
  CHECK(j.at("elements").size() == 3);
  CHECK(j.at("covers").size() == 2);
  raney_lattice_free(l);

  CHECK(raney_lattice_generate("nonsense", 3, &l) == RANEY_ERR_PRECONDITION);
  CHECK(std::string(raney_last_error()).find("nonsense") != std::string::npos);
}

TEST_CASE("parse errors map to status codes") {
  raney_lattice* l = nullptr;
  CHECK(raney_lattice_parse(R"({"elements":["b","l","r"],"covers":[[0,1],[0,2]]})", 64, &l) ==
        RANEY_ERR_NOT_A_LATTICE);
  CHECK(std::string(raney_last_error()).rfind("NotALattice", 0) == 0);
  CHECK(raney_lattice_parse("{", 64, &l) == RANEY_ERR_PARSE);
  CHECK(raney_lattice_parse(R"({"elements":["a","b"],"covers":[[0,1],[1,0]]})", 64, &l) ==
        RANEY_ERR_NOT_A_PARTIAL_ORDER);
  CHECK(raney_lattice_parse(nullptr, 64, &l) == RANEY_ERR_INVALID_ARGUMENT);
  CHECK(std::strcmp(raney_status_name(RANEY_ERR_CAP_EXCEEDED), "CapExceeded") == 0);
}

TEST_CASE("verify through the C interface") {
  raney_lattice* l = nullptr;
  REQUIRE(raney_lattice_generate("M", 5, &l) == RANEY_OK);
  raney_config cfg;
  raney_config_init(&cfg);
  CHECK(cfg.max_homset == 100000);
  CHECK(cfg.max_autodual == 2000);
  cfg.checks = "galois-law,dualizing-iff-cd";
  raney_report* r = nullptr;
  REQUIRE(raney_verify(l, "M5", &cfg, &r) == RANEY_OK);
  CHECK(raney_report_failed(r) == 0);
  CHECK(raney_report_skipped(r) == 0);
  char* out = nullptr;
  REQUIRE(raney_report_json(r, &out) == RANEY_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("summary").at("dualizing_count") == 0);
  REQUIRE(raney_report_text(r, &out) == RANEY_OK);
  CHECK(take(out).find("galois-law") != std::string::npos);
  raney_report_free(r);

  cfg.checks = "no-such-check";
  CHECK(raney_verify(l, "M5", &cfg, &r) == RANEY_ERR_INVALID_ARGUMENT);
  CHECK(raney_validate_checks("galois-law") == RANEY_OK);
  CHECK(raney_validate_checks(nullptr) == RANEY_OK);
  raney_lattice_free(l);
}

TEST_CASE("M5 quantale through the C interface") {
  raney_report* r = nullptr;
  REQUIRE(raney_verify_m5(nullptr, &r) == RANEY_OK);
  CHECK(raney_report_failed(r) == 0);
  char* out = nullptr;
  REQUIRE(raney_report_json(r, &out) == RANEY_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j.at("checks").size() == 6);
  raney_report_free(r);
}

TEST_CASE("null handles are tolerated") {
  raney_lattice_free(nullptr);
  raney_report_free(nullptr);
  raney_string_free(nullptr);
  CHECK(raney_lattice_size(nullptr) == 0);
  CHECK(raney_report_failed(nullptr) == 0);
  char* out = nullptr;
  CHECK(raney_report_json(nullptr, &out) == RANEY_ERR_INVALID_ARGUMENT);
}
