#include <catch2/catch_amalgamated.hpp>

#include "lerch/report.hpp"

using namespace lerch;

namespace {
identity_report sample_report() {
  identity_report r;
  r.kase.id = "T1";
  r.kase.params = {{"k", cplx(0.5, 0.3)}, {"m", cplx(0.1)}, {"z", cplx(2.0)}};
  r.kase.tol_abs = 1e-9;
  r.kase.tol_rel = 1e-9;
  r.lhs = cplx(0.12345678901234567, -3.14159);
  r.rhs = cplx(0.12345678901234568, -3.14159);
  r.abs_residual = 1e-17;
  r.rel_residual = 1e-17 / 3.14;
  r.pass = true;
  r.notes = "quote \"this\", comma, and\nnewline";
  return r;
}
}  // namespace

TEST_CASE("empty emissions") {
  CHECK(emit_json({}) == "[]\n");
  std::string csv = emit_csv({});
  CHECK(csv == "id,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,pass,notes\n");
}

TEST_CASE("json round trip is field-exact") {
  std::vector<identity_report> in{sample_report()};
  in.push_back(in[0]);
  in[1].kase.id = "P2";
  in[1].kase.params = {{"a", cplx(0.6)}, {"z", cplx(2.0)}};
  in[1].pass = false;
  in[1].notes = "";
  std::string text = emit_json(in);
  auto out = parse_reports_json(text);
  REQUIRE(out.size() == in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    CHECK(out[i].kase.id == in[i].kase.id);
    REQUIRE(out[i].kase.params.size() == in[i].kase.params.size());
    for (const auto& [k, v] : in[i].kase.params) {
      CHECK(out[i].kase.params.at(k).real() == v.real());  // bit-exact after %.17g
      CHECK(out[i].kase.params.at(k).imag() == v.imag());
    }
    CHECK(out[i].lhs.real() == in[i].lhs.real());
    CHECK(out[i].lhs.imag() == in[i].lhs.imag());
    CHECK(out[i].rhs.real() == in[i].rhs.real());
    CHECK(out[i].abs_residual == in[i].abs_residual);
    CHECK(out[i].rel_residual == in[i].rel_residual);
    CHECK(out[i].pass == in[i].pass);
    CHECK(out[i].notes == in[i].notes);
  }
}

TEST_CASE("serialization is deterministic") {
  std::vector<identity_report> reps{sample_report(), sample_report()};
  CHECK(emit_json(reps) == emit_json(reps));
  CHECK(emit_csv(reps) == emit_csv(reps));
}

TEST_CASE("csv layout") {
  auto r = sample_report();
  std::string csv = emit_csv({r});
  // header: id, then sorted param columns flattened re/im
  CHECK(csv.rfind("id,k_re,k_im,m_re,m_im,z_re,z_im,lhs_re,lhs_im,rhs_re,rhs_im,"
                  "abs_residual,rel_residual,pass,notes\n", 0) == 0);
  CHECK(csv.find("\n") != std::string::npos);
  CHECK(csv.back() == '\n');
  CHECK(csv.find("\r") == std::string::npos);  // LF only
  // quoted notes survive
  CHECK(csv.find("\"quote \"\"this\"\", comma, and\nnewline\"") != std::string::npos);
}

TEST_CASE("table1 csv has one line per row and passes") {
  auto rows = table1_rows();
  auto reports = table1_verify();
  std::string csv = emit_table1_csv(rows, reports);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + 10 rows
  CHECK(csv.find("1/sqrt(5)") != std::string::npos);
  CHECK(csv.find("false") == std::string::npos);
}

TEST_CASE("figure csv") {
  auto samples = figure_samples({cplx(1.0), cplx(2.0)});
  std::string csv = emit_figure_csv(samples);
  CHECK(csv.rfind("r_re,r_im,f_re,f_im,f_abs\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("suite config parsing") {
  auto cfg = parse_suite_config(R"({
    "version": 1,
    "identities": [
      {"id": "P2", "grid": {"a": [0.6, "1.4+0.1i"], "z": [2]}, "tol_rel": 1e-9},
      {"id": "GO1"}
    ]})");
  CHECK(cfg.version == 1);
  REQUIRE(cfg.grids.size() == 2);
  CHECK(cfg.grids[0].axes.at("a").size() == 2);
  CHECK(cfg.grids[0].axes.at("a")[1] == cplx(1.4, 0.1));
  CHECK(cfg.grids[0].tol_rel == 1e-9);
  CHECK(cfg.grids[1].axes.empty());

  auto cases = expand_cases(cfg);
  CHECK(cases.size() == 3);  // 2x1 grid + GO1 default

  CHECK_THROWS_AS(parse_suite_config("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(R"({"identities":[{"id":"XX"}]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(R"({"identities":[{"id":"P2","grid":{"a":["zz"]}}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_suite_config(R"({"version":1})"), std::invalid_argument);
}

TEST_CASE("suite run is deterministic and thread-count independent") {
  suite_config cfg = parse_suite_config(R"({
    "identities": [
      {"id": "P2", "grid": {"a": [0.6, 1.0], "z": [2, 4]}},
      {"id": "C2", "grid": {"z": [1, 2, 3]}},
      {"id": "TB1"}
    ]})");
  auto r1 = run_suite(cfg, 1);
  auto r2 = run_suite(cfg, 4);
  CHECK(emit_json(r1) == emit_json(r2));
  CHECK(emit_csv(r1) == emit_csv(r2));
}
