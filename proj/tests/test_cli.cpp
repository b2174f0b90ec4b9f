#include <doctest.h>

#include "pdc/cli.hpp"
#include "pdc/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pdc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDb {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "pdc_cli_test_db.json";
  TempDb() {
    std::filesystem::remove(path);
    setenv("PDC_DB", path.c_str(), 1);
  }
  ~TempDb() {
    unsetenv("PDC_DB");
    std::filesystem::remove(path);
  }
};

}  // namespace

TEST_CASE("documented examples") {
  auto fe = run({"fe-check", "--series", "tau5(1)", "--degree", "1"});
  CHECK(fe.code == 0);
  CHECK(fe.out == "PASS sign=-1 d_beta=4\n");
  auto vir = run({"virasoro-check", "--k", "1", "--D", "ch3(p)", "--degree", "1"});
  CHECK(vir.code == 0);
  CHECK(vir.out == "PASS: sum = 0\n");
}

TEST_CASE("evaluation and expansion") {
  auto lc = run({"eval", "local-curve", "--d", "1"});
  CHECK(lc.code == 0);
  CHECK(lc.out == "q/(1 + 2*q + q^2)\n");
  auto ex = run({"expand", "--series", "tau2(p)", "--degree", "1", "--order", "3"});
  CHECK(ex.out == "1/12*q - 5/6*q^2 + 1/12*q^3 + O(q^4)\n");
  auto u = run({"expand", "--function", "q/(1+q)^2", "--var", "u", "--order", "2"});
  CHECK(u.out == "u^-2 + 1/12 + 1/240*u^2 + O(u^3)\n");
  auto gw = run({"gw-expand", "--series", "tau0(p)^2", "--degree", "1", "--order", "4"});
  CHECK(gw.code == 0);
  CHECK(gw.out == "u^2 - 1/12*u^4 + O(u^5)\n");
  auto cap = run({"eval", "cap", "--d", "2"});
  CHECK(cap.code == 0);
  CHECK(cap.out.find("s1") != std::string::npos);
}

TEST_CASE("check verdicts and exit codes") {
  CHECK(run({"pole-check", "--function", "1/(1-q)", "--div", "1"}).code == 1);
  CHECK(run({"pole-check", "--function", "1/(1-q)", "--div", "2"}).code == 0);
  CHECK(run({"fe-check", "--function", "q", "--sign", "1", "--d-beta", "4"}).code == 1);
  CHECK(run({"fe-check", "--series", "tau9(1)", "--degree", "2"}).code == 0);
  CHECK(run({"fe-check", "--series", "tau3(p)", "--geometry", "P3_equivariant"}).code == 0);
  CHECK(run({"bracket-check", "--k", "0", "--m", "1"}).code == 0);
  CHECK(run({"bracket-check", "--k", "-2", "--m", "1"}).code == 2);
  CHECK(run({"virasoro-check", "--k", "0", "--D", "ch4(p)", "--degree", "1"}).code == 0);
  CHECK(run({"virasoro-check", "--k", "0", "--D", "ch3(L)*ch3(L)", "--degree", "1"}).code == 1);
  CHECK(run({"operator", "--k", "1", "--normalized"}).out == "R_1 + 2*ch2(p)*R_{-1} - 4*ch3(H)\n");
  CHECK(run({"bar", "--alpha", "1,1,1"}).out.find("(iu)^0") != std::string::npos);
}

TEST_CASE("usage and parse errors") {
  auto parse = run({"fe-check", "--function", "1+"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("1+\n  ^") != std::string::npos);
  auto desc = run({"virasoro-check", "--k", "1", "--D", "ch3(x)", "--degree", "1"});
  CHECK(desc.code == 2);
  CHECK(desc.err.find("^") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"expand"}).code == 2);
  CHECK(run({"expand", "--series", "tau2(p)", "--function", "q"}).code == 2);
  CHECK(run({"eval", "sphere", "--d", "1"}).code == 2);
  CHECK(run({"fe-check", "--function", "q", "--field", "R"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  auto unknown = run({"db", "show", "P3:1:ch5(p)"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("unknown series") != std::string::npos);
}

TEST_CASE("json output") {
  auto fe = run({"--json", "fe-check", "--series", "tau5(1)", "--degree", "1"});
  CHECK(fe.code == 0);
  auto j = pdc::Json::parse(fe.out);
  CHECK(j["pass"] == true);
  CHECK(j["sign"] == -1);
  CHECK(j["d_beta"] == 4);
  auto cap = pdc::Json::parse(run({"--json", "eval", "cap", "--d", "1"}).out);
  CHECK(pdc::record_from_json(cap).value == pdc::cap_series(1));
  auto checks = pdc::Json::parse(run({"--json", "check-all"}).out);
  REQUIRE(checks.is_array());
  CHECK(checks.size() == 9);
}

TEST_CASE("database import and export") {
  TempDb tmp;
  auto exported = run({"db", "export", "-"});
  CHECK(exported.code == 0);
  CHECK(pdc::import_records(exported.out).size() == 8);

  auto file = std::filesystem::temp_directory_path() / "pdc_cli_test_import.json";
  {
    std::ofstream f(file);
    f << pdc::export_records({{pdc::local_curve_key(3), pdc::local_curve_series(3), pdc::Provenance::evaluator}});
  }
  auto imported = run({"db", "import", file.string()});
  CHECK(imported.code == 0);
  CHECK(std::filesystem::exists(tmp.path));
  auto shown = run({"db", "show", "LocalCurve:3:1"});
  CHECK(shown.code == 0);
  CHECK(shown.out.find("evaluator") != std::string::npos);
  CHECK(run({"fe-check", "--series", "1", "--geometry", "LocalCurve", "--degree", "3"}).code == 0);
  CHECK(run({"db", "list"}).out.find("LocalCurve:3:1") != std::string::npos);
  std::filesystem::remove(file);
  CHECK(run({"db", "import", file.string()}).code == 1);

  unsetenv("PDC_DB");
  CHECK(run({"db", "show", "LocalCurve:3:1"}).code == 1);
}
