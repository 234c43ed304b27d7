// Exercises the installed command surface of the CLI binary: exit codes,
// emitted files, and byte-determinism. Takes the binary path as argv[1].

#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

int run(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_contract <path-to-fliptoep>\n");
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = fs::temp_directory_path() / "fliptoep_cli_contract";
  fs::remove_all(work);
  fs::create_directories(work);
  const std::string out = " --out " + (work / "a").string();
  const std::string out2 = " --out " + (work / "b").string();

  check(run(cli + " analyze -s 1 --n 8" + out) == 0, "analyze of f=1 exits 0");
  check(fs::exists(work / "a" / "pairing_8.csv"), "pairing_8.csv written");
  check(fs::exists(work / "a" / "localize_8.json"), "localize_8.json written");
  {
    const std::string pairing = slurp(work / "a" / "pairing_8.csv");
    check(pairing.find("1,1,1,symmetric") != std::string::npos,
          "identity symbol pairs lamT=1 with lamH=1 at i=1");
    check(pairing.find("2,1,-1,skew") != std::string::npos,
          "identity symbol pairs lamT=1 with lamH=-1 at i=2");
  }
  {
    const std::string loc = slurp(work / "a" / "localize_8.json");
    check(loc.find("\"violations\": 0") != std::string::npos, "zero violations for f=1");
  }

  check(run(cli + " analyze -s 'cos((' --n 8" + out) == 2, "syntax error exits 2");
  check(run(cli + " analyze -s 1 --n 8,4" + out) == 2, "non-increasing n-list exits 2");
  check(run(cli + " pairing -s '2 + exp(i*1*t)' --full --n 8" + out) == 2,
        "pairing of a non-symmetric symbol exits 2");

  // Determinism: identical config twice gives byte-identical CSV bodies.
  check(run(cli + " match --preset e2 --n 8,16" + out) == 0, "match sweep exits 0");
  check(run(cli + " match --preset e2 --n 8,16" + out2) == 0, "match sweep again exits 0");
  check(slurp(work / "a" / "match_16.csv") == slurp(work / "b" / "match_16.csv"),
        "match_16.csv is byte-identical across runs");

  check(run(cli + " reproduce fig2" + out) == 0, "reproduce fig2 exits 0");
  {
    const std::string fig = slurp(work / "a" / "fig2.csv");
    const size_t line1 = fig.find('\n');
    const std::string first_row = fig.substr(line1 + 1, fig.find('\n', line1 + 1) - line1 - 1);
    const size_t comma = first_row.find(',');
    const double theta0 = std::atof(first_row.substr(0, comma).c_str());
    const double f0 = std::atof(first_row.substr(comma + 1).c_str());
    check(theta0 == 0.0 && std::abs(f0) <= 1e-12, "fig2.csv starts at f(0) = 0");
  }

  check(run(cli + " exact-grid --preset e2.5 --n 64" + out) == 0, "exact-grid exits 0");
  {
    const std::string j = slurp(work / "a" / "exactgrid_64.json");
    const size_t pos = j.find("\"m_Gn\": ");
    check(pos != std::string::npos, "exactgrid_64.json carries m_Gn");
    const double m = std::atof(j.c_str() + pos + 8);
    check(m >= 0.0403 / 2 && m <= 0.0403 * 2, "m(G_64) within slack of the reference value 0.0403");
  }

  check(run(cli + " minres -s '2 + exp(i*1*t)' --full --n 64" + out) == 0,
        "minres on the bidiagonal symbol converges (exit 0)");
  check(fs::exists(work / "a" / "trace_64.csv"), "trace_64.csv written");
  check(run(cli + " analyze -s '2 + exp(i*1*t)' --full --minres --n 32" + out) == 0,
        "analyze --minres of the nonsymmetric symbol exits 0");
  check(fs::exists(work / "a" / "trace_32.csv") &&
            fs::exists(work / "a" / "flipped_spectrum_32.csv"),
        "analyze emits the solve trace and flipped spectrum");
  check(run(cli + " minres -s 'exp(i*1*t)' --full --n 16" + out) == 1,
        "minres on the singular shift stagnates (exit 1)");

  check(run(cli + " match --preset e2 --n 8 --format json" + out) == 0,
        "match --format json exits 0");
  check(run(cli + " match --preset e2 --n 8 --format xml" + out) == 2,
        "unknown --format exits 2");

  check(run(cli + " coeffs --preset e2.5 --K 4" + out) == 0, "coeffs exits 0");
  check(run(cli + " spectrum -s '2*cos(t)' --n 8 --dump-matrix" + out) == 0,
        "spectrum --dump-matrix exits 0");
  check(fs::exists(work / "a" / "T_8.csv") && fs::exists(work / "a" / "T_8.json"),
        "matrix dump written");
  check(run(cli + " dist --preset e2.5 --n 16,32" + out) == 0, "dist exits 0");
  check(fs::exists(work / "a" / "dist.csv"), "dist.csv written");

  if (g_failures == 0) {
    std::printf("cli contract: all checks passed\n");
    return 0;
  }
  std::printf("cli contract: %d checks FAILED\n", g_failures);
  return 1;
}
