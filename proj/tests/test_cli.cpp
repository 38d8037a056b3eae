#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end exit-code contract: 0 all-pass, 1 violation, 2 bad input.
// Drives the real binary (path in LT_CLI).

namespace {

std::string cli() {
  const char* p = std::getenv("LT_CLI");
  return p ? p : "./lietorus";
}

int run(const std::string& args) {
  std::string cmd = cli() + " " + args + " > /tmp/lt_cli_out.txt 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

const char* kTensorSpec = R"({
  "type": "lietorus",
  "construction": "tensor",
  "g": {"builtin": "A", "rank": 1},
  "n": 1,
  "window": {"radius": 2}
})";

const char* kEalaSpec = R"({
  "type": "eala",
  "lietorus": {
    "construction": "tensor",
    "g": {"builtin": "A", "rank": 1},
    "n": 1
  },
  "D": {"kind": "degree_only", "U": [["1"]]},
  "kappa": "zero",
  "window": {"radius": 2}
})";

}  // namespace

TEST_CASE("build summarizes a valid spec") {
  write_file("/tmp/lt_tensor.json", kTensorSpec);
  CHECK(run("build --spec /tmp/lt_tensor.json") == 0);
  std::string out = slurp("/tmp/lt_cli_out.txt");
  CHECK(out.find("tensor(A1,1)") != std::string::npos);
}

TEST_CASE("build rejects an invalid quantum matrix with exit 2") {
  write_file("/tmp/lt_badq.json", R"({
    "type": "lietorus", "construction": "sl", "ell_plus_1": 4,
    "conductor": 4,
    "coordinates": {"family": "quantum", "rank": 2, "conductor": 4,
                     "q": [["1", "1*z^1"], ["1*z^1", "1"]]}
  })");
  CHECK(run("build --spec /tmp/lt_badq.json") == 2);
  CHECK(slurp("/tmp/lt_cli_out.txt").find("InvalidQuantumMatrix") != std::string::npos);
}

TEST_CASE("verify lietorus suite exits 0 on Tensor(sl2,1)") {
  write_file("/tmp/lt_tensor.json", kTensorSpec);
  CHECK(run("verify --suite lietorus --spec /tmp/lt_tensor.json --window 2") == 0);
}

TEST_CASE("involution suite: chevalley passes, identity fails with exit 1") {
  write_file("/tmp/lt_tensor.json", kTensorSpec);
  CHECK(run("verify --suite involution --spec /tmp/lt_tensor.json --window 2") == 0);
  std::string spec = kTensorSpec;
  spec.insert(spec.rfind('}'), R"(, "involution": "identity")");
  write_file("/tmp/lt_tensor_id.json", spec);
  CHECK(run("verify --suite involution --spec /tmp/lt_tensor_id.json --window 2 --format json "
            "--out /tmp/lt_rep.json") == 1);
  std::string rep = slurp("/tmp/lt_rep.json");
  CHECK(rep.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(rep.find("witness") != std::string::npos);
}

TEST_CASE("eala suite exits 0 and lift exits 0") {
  write_file("/tmp/lt_eala.json", kEalaSpec);
  CHECK(run("verify --suite eala --spec /tmp/lt_eala.json --window 2") == 0);
  CHECK(run("lift --spec /tmp/lt_eala.json --window 2") == 0);
}

TEST_CASE("corrupted structure table fails the lietorus suite with exit 1") {
  write_file("/tmp/lt_bad_table.json", R"({
    "type": "lietorus", "construction": "tensor", "n": 1,
    "g": {"table": {"dim": 3, "cartan": [0], "roots": [[0],[2],[-2]],
      "brackets": [
        {"i": 0, "j": 1, "terms": [{"k": 1, "c": "-2"}]},
        {"i": 0, "j": 2, "terms": [{"k": 2, "c": "-2"}]},
        {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]}],
      "skip_validation": true}}
  })");
  CHECK(run("verify --suite lietorus --spec /tmp/lt_bad_table.json --window 1 --format json "
            "--out /tmp/lt_rep2.json") == 1);
  std::string rep = slurp("/tmp/lt_rep2.json");
  CHECK(rep.find("fail") != std::string::npos);
  // without the testing hook the gate rejects the table outright
  std::string gated = slurp("/tmp/lt_bad_table.json");
  gated.replace(gated.find("\"skip_validation\": true"), 23, "\"skip_validation\": false");
  write_file("/tmp/lt_bad_table2.json", gated);
  CHECK(run("verify --suite lietorus --spec /tmp/lt_bad_table2.json") == 2);
}

TEST_CASE("kappa table with kappa(d,d) != 0 fails validate_cocycle with exit 1") {
  write_file("/tmp/lt_badkappa.json", R"({
    "type": "eala",
    "lietorus": {"construction": "tensor", "g": {"builtin": "A", "rank": 1}, "n": 2},
    "D": {"kind": "full_scder"},
    "kappa": {
      "generators": [{"mu": [2, 0], "theta": ["0", "1"]}],
      "table": [{"i": 0, "j": 0, "value": {"mu": [2, 0], "lambda": [0, 1], "coeff": "1"}}]
    },
    "window": {"radius": 2}
  })");
  CHECK(run("verify --suite eala --spec /tmp/lt_badkappa.json --window 2 --format json "
            "--out /tmp/lt_rep3.json") == 1);
  std::string rep = slurp("/tmp/lt_rep3.json");
  CHECK(rep.find("cocycle.alternating") != std::string::npos);
}

TEST_CASE("torus suite and the quantum spec example") {
  write_file("/tmp/lt_quant.json", R"({
    "type": "torus", "family": "quantum", "rank": 2, "conductor": 4,
    "q": [["1", "1*z^1"], ["-1*z^1", "1"]]
  })");
  CHECK(run("verify --suite torus --spec /tmp/lt_quant.json --window 2") == 0);
}

TEST_CASE("export is deterministic and counts atoms") {
  write_file("/tmp/lt_tensor.json", kTensorSpec);
  CHECK(run("export --spec /tmp/lt_tensor.json --window 1 --out /tmp/lt_exp1.json") == 0);
  CHECK(run("export --spec /tmp/lt_tensor.json --window 1 --out /tmp/lt_exp2.json") == 0);
  std::string a = slurp("/tmp/lt_exp1.json"), b = slurp("/tmp/lt_exp2.json");
  CHECK(a == b);
  CHECK(a.find("\"desc\"") != std::string::npos);
  // Tensor(sl2,1) at R=1: 3 x 3 = 9 atoms
  size_t count = 0, pos = 0;
  while ((pos = a.find("\"id\"", pos)) != std::string::npos) {
    ++count;
    pos += 4;
  }
  CHECK(count == 9);
}

TEST_CASE("multiloop preset spec") {
  write_file("/tmp/lt_ml.json", R"({
    "type": "lietorus", "construction": "multiloop",
    "g": {"builtin": "A", "rank": 1}, "preset": "sl2",
    "window": {"radius": 3}
  })");
  CHECK(run("verify --suite lietorus --spec /tmp/lt_ml.json") == 0);
  CHECK(run("verify --suite involution --spec /tmp/lt_ml.json") == 0);
}

TEST_CASE("tkk_c specs") {
  write_file("/tmp/lt_tkkc.json", R"({
    "type": "lietorus", "construction": "tkk_c", "variant": "hermitian",
    "ell": 2, "conductor": 2,
    "coordinates": {"family": "quantum", "rank": 2, "conductor": 2,
                    "q": [["1", "-1"], ["-1", "1"]]},
    "e": [1, 1], "window": {"radius": 2}
  })");
  CHECK(run("verify --suite lietorus --spec /tmp/lt_tkkc.json") == 0);
  write_file("/tmp/lt_redcliff.json", R"({
    "type": "lietorus", "construction": "tkk_c", "variant": "redcliff",
    "n": 1, "taus": [[0], [1]], "window": {"radius": 2}
  })");
  CHECK(run("verify --suite involution --spec /tmp/lt_redcliff.json") == 0);
  // octonion coordinates with the wrong rank are rejected
  write_file("/tmp/lt_oct.json", R"({
    "type": "lietorus", "construction": "tkk_c", "variant": "hermitian",
    "ell": 2, "coordinates": {"family": "octonion", "rank": 3}
  })");
  CHECK(run("build --spec /tmp/lt_oct.json") == 2);
  std::string out = slurp("/tmp/lt_cli_out.txt");
  CHECK(out.find("OctonionRankNot3") != std::string::npos);
}
