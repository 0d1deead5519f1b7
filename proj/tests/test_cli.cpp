#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "ringlab/catalog.hpp"
#include "ringlab/ring_io.hpp"

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so the
// tests pin stdout bytes exactly.
run_result run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(RINGLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  run_result r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct temp_dir {
  fs::path path;
  temp_dir(const char* tag) {
    path = fs::temp_directory_path() / tag;
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~temp_dir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("property check output and exit codes") {
  auto r = run_cli("check --ring builtin:Z4");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "ring Z4 property commutative verdict holds\n"
        "ring Z4 property duo verdict holds\n"
        "ring Z4 property left_duo verdict holds\n"
        "ring Z4 property right_duo verdict holds\n"
        "ring Z4 property semicommutative verdict holds\n"
        "ring Z4 property two_primal verdict holds\n"
        "ring Z4 property symmetric verdict holds\n"
        "ring Z4 property reversible verdict holds\n"
        "ring Z4 property abelian verdict holds\n"
        "ring Z4 property dedekind_finite verdict holds\n"
        "ring Z4 property reduced verdict fails witness a=2\n"
        "ring Z4 property armendariz verdict holds_up_to(2,2)\n"
        "ring Z4 property lin_armendariz verdict holds_up_to(1,1)\n"
        "ring Z4 property mccoy verdict holds_up_to(2,2)\n"
        "ring Z4 property right_mccoy verdict holds_up_to(2,2)\n"
        "ring Z4 property left_mccoy verdict holds_up_to(2,2)\n"
        "ring Z4 property lin_mccoy verdict holds_up_to(1,1)\n"
        "ring Z4 property right_lin_mccoy verdict holds_up_to(1,1)\n");

  auto one = run_cli("check --ring builtin:Z4 --property reduced");
  CHECK(one.exit_code == 0);
  CHECK(one.out == "ring Z4 property reduced verdict fails witness a=2\n");

  CHECK(run_cli("check --ring builtin:Z4 --property reduced --strict")
            .exit_code == 2);
  CHECK(run_cli("check --ring builtin:Z2 --strict").exit_code == 0);
  CHECK(run_cli("check --ring builtin:Z99").exit_code == 1);
  CHECK(run_cli("check --ring builtin:Z4 --property no_such").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("bound resolution: flag beats environment beats default") {
  auto def = run_cli("check --ring builtin:Z4 --property mccoy");
  CHECK(def.out == "ring Z4 property mccoy verdict holds_up_to(2,2)\n");
  auto env = run_cli("check --ring builtin:Z4 --property mccoy",
                     "RINGLAB_MCCOY_BOUND=3,3");
  CHECK(env.out == "ring Z4 property mccoy verdict holds_up_to(3,3)\n");
  auto flag = run_cli("check --ring builtin:Z4 --property mccoy --mccoy-bound 1,2",
                      "RINGLAB_MCCOY_BOUND=3,3");
  CHECK(flag.out == "ring Z4 property mccoy verdict holds_up_to(1,2)\n");
  CHECK(run_cli("check --ring builtin:Z4 --mccoy-bound 0,2").exit_code == 1);
  CHECK(run_cli("check --ring builtin:Z4 --mccoy-bound nope").exit_code == 1);
}

TEST_CASE("kernel backend override does not change results") {
  auto a = run_cli("check --ring builtin:M2Z2", "RINGLAB_KERNELS=scalar");
  auto b = run_cli("check --ring builtin:M2Z2", "RINGLAB_KERNELS=avx2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("annihilate: formula methods") {
  auto l1 = run_cli(
      "annihilate --ring builtin:Z8 --f 4,2 --g 4 --method lemma1");
  CHECK(l1.exit_code == 0);
  CHECK(l1.out ==
        "method lemma1\nring Z8\nf 4,2\ng 4\n"
        "left_annihilator first 4 is_zero=no\n"
        "left_annihilator second 2 is_zero=no\n");
  auto t3 = run_cli(
      "annihilate --ring builtin:Z8 --f 4,2 --g 4 --method thm3");
  CHECK(t3.exit_code == 0);
  CHECK(t3.out ==
        "method thm3\nring Z8\nf 4,2\ng 4\n"
        "right_annihilator first 0 is_zero=yes\n"
        "right_annihilator second 0 is_zero=yes\n");
}

TEST_CASE("annihilate: procedures and traces") {
  auto l2 = run_cli(
      "annihilate --ring builtin:Z4 --f 2,2 --g 2 --method lemma2");
  CHECK(l2.exit_code == 0);
  CHECK(l2.out ==
        "method lemma2\nring Z4\nf 2,2\ng 2\n"
        "step 0 strip_f f=2 g=2\n"
        "result 2\n");

  auto t1 = run_cli(
      "annihilate --ring builtin:Z4 --f 2,2 --g 2,2 --method thm1");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out ==
        "method thm1-alternative\nring Z4\nf 2,2\ng 2,2\nresult 2\n");
  auto t1i = run_cli("annihilate --ring builtin:Z4 --f 2,2 --g 2,2 "
                     "--method thm1 --variant induction");
  CHECK(t1i.out ==
        "method thm1-induction\nring Z4\nf 2,2\ng 2,2\nresult 2\n");

  CHECK(run_cli("annihilate --ring builtin:Z4 --f 1,1 --g 2 --method lemma2")
            .exit_code == 1); // product not zero
  CHECK(run_cli("annihilate --ring builtin:M2Z2 --f 2,1 --g 1,4 "
                "--method lemma2").exit_code == 1); // not right duo
}

TEST_CASE("annihilate: oracle lists the whole set") {
  auto ok = run_cli(
      "annihilate --ring builtin:Z4 --f 2,2 --g 2 --method oracle");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out ==
        "method oracle\nring Z4\nf 2,2\ng 2\n"
        "annihilators 0,2\n"
        "result 2\n");

  // a zero-divisor pair where no single ring element works: exit 3
  auto none = run_cli(
      "annihilate --ring builtin:M2Z2 --f 2,1 --g 1,4 --method oracle");
  CHECK(none.exit_code == 3);
  CHECK(none.out ==
        "method oracle\nring M2Z2\nf 2,1\ng 1,4\n"
        "annihilators 0\n"
        "failed no-nonzero-annihilator\n");
}

TEST_CASE("diagram over the builtin corpus") {
  auto rep = run_cli("diagram --corpus builtin --mccoy-bound 1,1");
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.substr(0, 10) == "bound 1,1\n");
  CHECK(rep.out.find("edge commutative -> duo consistent\n") !=
        std::string::npos);
  CHECK(rep.out.find("violated") == std::string::npos);

  auto again = run_cli("diagram --corpus builtin --mccoy-bound 1,1");
  CHECK(rep.out == again.out);
  auto jobs = run_cli("diagram --corpus builtin --mccoy-bound 1,1 --jobs 4");
  CHECK(rep.out == jobs.out);

  auto hunted =
      run_cli("diagram --corpus builtin --mccoy-bound 1,1 --hunt");
  CHECK(hunted.exit_code == 0);
  CHECK(hunted.out.find("nonedge two_primal -> reduced witness ring=Z4\n") !=
        std::string::npos);
}

TEST_CASE("diagram --output and --csv write the same bytes as stdout") {
  temp_dir dir("ringlab_cli_diagram");
  auto out_path = dir.path / "report.txt";
  auto csv_path = dir.path / "matrix.csv";
  auto rep = run_cli("diagram --corpus builtin --mccoy-bound 1,1 --csv " +
                     csv_path.string() + " --output " + out_path.string());
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.empty());
  auto direct = run_cli("diagram --corpus builtin --mccoy-bound 1,1");
  CHECK(slurp(out_path) == direct.out);
  std::string csv = slurp(csv_path);
  CHECK(csv.substr(0, 5) == "ring,");
  CHECK(csv.find("Z4,holds") != std::string::npos);
}

TEST_CASE("diagram over a corpus directory") {
  temp_dir dir("ringlab_cli_corpus");
  save_ring(make_zn(4), (dir.path / "a_z4.ring").string());
  save_ring(ringlab::testing::make_f2uv(), (dir.path / "b_f2uv.ring").string());
  auto rep = run_cli("diagram --corpus " + dir.path.string() +
                     " --mccoy-bound 1,1 --hunt");
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("ring F2uv property armendariz verdict fails") !=
        std::string::npos);
  CHECK(rep.out.find(
            "nonedge commutative -> armendariz witness ring=F2uv\n") !=
        std::string::npos);
}

TEST_CASE("check accepts ring files") {
  temp_dir dir("ringlab_cli_file");
  auto path = dir.path / "z6.ring";
  save_ring(make_zn(6), path.string());
  auto r = run_cli("check --ring " + path.string() + " --property reduced");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "ring Z6 property reduced verdict holds\n");
}

TEST_CASE("enumerate writes one file per class") {
  temp_dir dir("ringlab_cli_enum");
  auto out = dir.path / "rings";
  auto r = run_cli("enumerate --order 4 --output-dir " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count 4\n") != std::string::npos);
  std::vector<finite_ring> loaded;
  for (int i = 1; i <= 4; ++i) {
    auto p = out / ("order4_" + std::to_string(i) + ".ring");
    REQUIRE(fs::exists(p));
    loaded.push_back(load_ring(p.string()));
  }
  for (std::size_t i = 0; i < loaded.size(); ++i)
    for (std::size_t j = i + 1; j < loaded.size(); ++j)
      CHECK_FALSE(isomorphic(loaded[i], loaded[j]));

  CHECK(run_cli("enumerate --order 9 --output-dir " + out.string())
            .exit_code == 1);
}
