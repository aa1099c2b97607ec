#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

const std::string kBin = SPECBOX_CLI_PATH;

fs::path work_dir() {
  auto dir = fs::temp_directory_path() / "specbox_cli_test";
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args) {
  std::string cmd = kBin + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("spectrum of the oscillator") {
  auto out = work_dir() / "sho.txt";
  int rc = run("spectrum --coeffs 2:1 --bc periodic --parity both "
               "--n-basis 12 --half-width 8 --digits 30 --levels 3 -o " +
               out.string());
  CHECK(rc == 0);
  auto text = slurp(out);
  // E_0 = 1, E_1 = 3 to ten digits at this basis size
  CHECK(text.find("1.00000000") != std::string::npos);
  CHECK(text.find("3.00000000") != std::string::npos);
  CHECK(text.find("SD=") != std::string::npos);
}

TEST_CASE("json output shape") {
  auto out = work_dir() / "spec.json";
  int rc = run("spectrum --k 1 --lambda 0.1 --bc periodic --parity even "
               "--n-basis 10 --half-width 9 --digits 25 --levels 2 "
               "--format json -o " +
               out.string());
  CHECK(rc == 0);
  auto text = slurp(out);
  CHECK(text.find("\"eigenvalues\"") != std::string::npos);
  CHECK(text.find("\"energy\": \"") != std::string::npos);
  CHECK(text.find("\"half_width\": \"9") != std::string::npos);
  // energies serialize as decimal strings, never as json numbers
  CHECK(text.find("\"energy\": -") == std::string::npos);
}

TEST_CASE("byte identical reruns") {
  auto a = work_dir() / "run_a.csv";
  auto b = work_dir() / "run_b.csv";
  std::string args =
      "spectrum --k 1 --lambda 0.03 --bc dirichlet --parity both "
      "--n-basis 14 --half-width 12 --digits 30 --levels 4 --format csv -o ";
  CHECK(run(args + a.string()) == 0);
  CHECK(run(args + b.string()) == 0);
  auto ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta.rfind("n,energy,sd\n", 0) == 0);
}

TEST_CASE("scan emits the derivative columns") {
  auto out = work_dir() / "scan.csv";
  int rc = run("scan --coeffs 2:1 --bc periodic --parity even --n-basis 3 "
               "--l-min 2 --l-max 5 --points 12 --digits 25 -o " +
               out.string());
  CHECK(rc == 0);
  auto text = slurp(out);
  CHECK(text.rfind("L,E,dE_dL,d2E_dL2\n", 0) == 0);
  int lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 13);
}

TEST_CASE("optimize-l reports candidates") {
  auto out = work_dir() / "opt.txt";
  int rc = run("optimize-l --coeffs 2:1 --bc periodic --parity even "
               "--n-basis 2 --digits 25 -o " +
               out.string());
  CHECK(rc == 0);
  auto text = slurp(out);
  CHECK(text.find("L_hat = 2.52") != std::string::npos);
  CHECK(text.find("inflection") != std::string::npos);
}

TEST_CASE("scale prints the reduced-coupling map") {
  auto out = work_dir() / "scale.txt";
  int rc = run("scale --k 4 --lambda 0.08 --digits 30 -o " + out.string());
  CHECK(rc == 0);
  auto text = slurp(out);
  CHECK(text.find("beta = 0.01\n") != std::string::npos);
  CHECK(text.find("energy_factor = 2\n") != std::string::npos);
  CHECK(text.find("length_factor = 0.7071067811865475") != std::string::npos);
}

TEST_CASE("dump-matrix layout") {
  auto out = work_dir() / "mat.txt";
  int rc = run("dump-matrix --coeffs 2:1 --bc periodic --parity even "
               "--n-basis 3 --half-width 2 --digits 25 -o " +
               out.string());
  CHECK(rc == 0);
  std::istringstream in(slurp(out));
  int n = 0;
  in >> n;
  CHECK(n == 3);
  std::string tok;
  int values = 0;
  while (in >> tok) ++values;
  CHECK(values == 6);
}

TEST_CASE("verify subcommand cross-checks oracles") {
  auto out = work_dir() / "verify.txt";
  int rc = run("verify --what moment --j 4 --n 3 --half-width 2.5 "
               "--digits 30 -o " +
               out.string());
  CHECK(rc == 0);
  auto text = slurp(out);
  CHECK(text.find("closed_form") != std::string::npos);
  CHECK(text.find("quadrature") != std::string::npos);

  auto out2 = work_dir() / "verify_fd.txt";
  rc = run("verify --what fd --k 1 --lambda 0.1 --half-width 11 "
           "--grid-n 2001 --count 2 --n-basis 30 --digits 25 -o " +
           out2.string());
  CHECK(rc == 0);
  CHECK(slurp(out2).find("finite_difference") != std::string::npos);
}

TEST_CASE("configuration errors exit with code 2") {
  // missing basis size
  CHECK(run("spectrum --k 1 --lambda 0.1 --half-width 9") == 2);
  // half-width and optimize are mutually exclusive
  CHECK(run("spectrum --k 1 --lambda 0.1 --n-basis 5 --half-width 9 "
            "--optimize") == 2);
  // neither given
  CHECK(run("spectrum --k 1 --lambda 0.1 --n-basis 5") == 2);
  // unknown boundary family
  CHECK(run("spectrum --k 1 --lambda 0.1 --n-basis 5 --half-width 9 "
            "--bc neumann") == 2);
  // coeffs and k/lambda together
  CHECK(run("spectrum --k 1 --lambda 0.1 --coeffs 2:1 --n-basis 5 "
            "--half-width 9") == 2);
  // below the minimum precision
  CHECK(run("spectrum --k 1 --lambda 0.1 --n-basis 5 --half-width 9 "
            "--digits 8") == 2);
  // odd potential power
  CHECK(run("spectrum --coeffs 3:1 --n-basis 5 --half-width 9") == 2);
  // no subcommand at all
  CHECK(run("") == 2);
}
