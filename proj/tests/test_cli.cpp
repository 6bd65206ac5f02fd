// End-to-end checks of the command-line tool. Shells out to the binary
// passed as argv[1] and inspects output and exit codes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ++failures;                                                          \
      std::cerr << "FAILED at line " << __LINE__ << ": " #cond << '\n';    \
    }                                                                      \
  } while (0)

std::string g_binary;
std::string g_dir;

void write_file(const std::string& name, const std::string& content) {
  std::ofstream out(g_dir + "/" + name);
  out << content;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_path = g_dir + "/out.txt";
  std::string cmd = g_binary + " " + args + " > " + out_path + " 2>" + g_dir + "/err.txt";
  int code = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(code), buf.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <orient-binary>\n";
    return 1;
  }
  g_binary = argv[1];
  char tmpl[] = "/tmp/orient_cli_XXXXXX";
  g_dir = mkdtemp(tmpl);

  write_file("t3.forb", "tournament 3\n1 2\n2 3\n1 3\n");
  write_file("c3.forb", "3:101\n");
  write_file("t4_tc4.forb", "4:111111\n4:110111\n");
  write_file("k3.g", "graph 3\n1 2\n2 3\n1 3\n");
  write_file("k4.g", "graph 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  write_file("k3_fixed.d", "digraph 3\n1 2\n2 3\n3 2\n1 3\n3 1\n");
  write_file("bad.g", "graph 3\n1 5\n");
  write_file("nae.cnf", "p nae 3 3 1\n1 2 3\n");
  write_file("d1.d", "digraph 3\n1 2\n2 1\n3 2\n2 3\n3 1\n");

  // classification with the documented verdicts
  RunResult r = run("classify --forbidden " + g_dir + "/t3.forb --problem completion");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "completion: PolyAffine"));
  r = run("--json classify --forbidden " + g_dir + "/c3.forb");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "\"TrivialAllOrientable\""));
  EXPECT(contains(r.out, "\"NPComplete\""));
  EXPECT(contains(r.out, "\"witness\""));
  EXPECT(contains(r.out, "\"equivalence_case\": 3"));

  // orientation of K_4 avoiding T_4 and TC_4, then an independent re-check
  r = run("orient --graph " + g_dir + "/k4.g --forbidden " + g_dir + "/t4_tc4.forb");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "feasible"));
  EXPECT(contains(r.out, "2^4"));
  {
    std::string digraph_part = r.out.substr(r.out.find("digraph"));
    write_file("k4_oriented.d", digraph_part);
    RunResult v = run("verify --digraph " + g_dir + "/k4.g --orientation " + g_dir +
                      "/k4_oriented.d --forbidden " + g_dir + "/t4_tc4.forb");
    EXPECT(v.exit_code == 0);
    EXPECT(contains(v.out, "valid"));
    // the same orientation violates {T_3}: every tournament on 4 vertices does
    RunResult v2 = run("verify --digraph " + g_dir + "/k4.g --orientation " + g_dir +
                       "/k4_oriented.d --forbidden " + g_dir + "/t3.forb");
    EXPECT(v2.exit_code == 1);
  }

  // completing K_3 with arc 1->2 fixed leaves the single cyclic completion
  r = run("complete --digraph " + g_dir + "/k3_fixed.d --forbidden " + g_dir + "/t3.forb");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "2^0"));
  EXPECT(contains(r.out, "2 3"));
  EXPECT(contains(r.out, "3 1"));

  // K_4 has no T_3-free orientation: infeasible is still exit 0
  r = run("orient --graph " + g_dir + "/k4.g --forbidden " + g_dir + "/t3.forb");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "infeasible"));

  // counting: affine exponent vs exact brute force
  r = run("count --graph " + g_dir + "/k3.g --forbidden " + g_dir + "/t3.forb");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "2^1"));
  r = run("count --graph " + g_dir + "/k3.g --forbidden " + g_dir + "/c3.forb");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "orientations (exhaustive): 6"));

  // enumeration
  r = run("enumerate-tournaments --n 4");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "non-isomorphic tournaments on 4 vertices: 4"));
  r = run("enumerate-tournaments --n 8");
  EXPECT(r.exit_code == 3);  // above the default cap
  r = run("enumerate-tournaments --n 3 --labeled");
  EXPECT(contains(r.out, "labeled tournaments on 3 vertices: 8"));

  // forcing check on the three-vertex gadget: (x,y)=(1,2) forces (u,v)=(3,2)
  r = run("forcing-check --digraph " + g_dir + "/d1.d --forbidden " + g_dir +
          "/c3.forb --pair 1 2 --pair2 3 2");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "forces"));
  EXPECT(!contains(r.out, "does not force"));
  r = run("forcing-check --digraph " + g_dir + "/d1.d --forbidden " + g_dir +
          "/c3.forb --pair 3 2 --pair2 1 2");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "does not force"));
  EXPECT(contains(r.out, "a completion with"));

  // the NAE gadget round-trips through the digraph format and is completable
  r = run("reduce-nae --formula " + g_dir + "/nae.cnf");
  EXPECT(r.exit_code == 0);
  EXPECT(contains(r.out, "digraph"));
  EXPECT(contains(r.out, "terminal map"));
  {
    std::string digraph_part = r.out.substr(r.out.find("digraph"), r.out.find("# terminal") -
                                                                      r.out.find("digraph"));
    write_file("gadget.d", digraph_part);
    RunResult c = run("complete --digraph " + g_dir + "/gadget.d --forbidden " + g_dir +
                      "/c3.forb --budget 67108864");
    EXPECT(c.exit_code == 0);
    EXPECT(contains(c.out, "feasible"));
  }

  // multi-clause gadgets exceed the library's default edge cap; the CLI
  // lifts it so --budget alone governs the search
  write_file("nae2.cnf", "p nae 3 2 2\n1 2 2\n1 1 -2\n");  // contradictory pair
  r = run("reduce-nae --formula " + g_dir + "/nae2.cnf");
  EXPECT(r.exit_code == 0);
  {
    std::string digraph_part = r.out.substr(r.out.find("digraph"), r.out.find("# terminal") -
                                                                       r.out.find("digraph"));
    write_file("gadget2.d", digraph_part);
    RunResult c = run("complete --digraph " + g_dir + "/gadget2.d --forbidden " + g_dir +
                      "/c3.forb --budget 67108864");
    EXPECT(c.exit_code == 0);
    EXPECT(contains(c.out, "infeasible"));
  }

  // emitted orientations re-parse to equal structures (JSON mirror)
  r = run("--json gen --n 6 --seed 9 --type digraph");
  EXPECT(r.exit_code == 0);
  write_file("gen.json", r.out);
  {
    RunResult c = run("complete --digraph " + g_dir + "/gen.json --forbidden " + g_dir +
                      "/t3.forb");
    EXPECT(c.exit_code == 0);
  }

  // deterministic: same command, same bytes; all report fields present
  RunResult a = run("--json classify --forbidden " + g_dir + "/t4_tc4.forb");
  RunResult b = run("--json classify --forbidden " + g_dir + "/t4_tc4.forb");
  EXPECT(a.out == b.out);
  for (const char* field : {"\"problem\"", "\"verdict\"", "\"nF\"", "\"kF\"", "\"mF\"",
                            "\"affine_dims\"", "\"equivalence_case\"", "\"status\""})
    EXPECT(contains(a.out, field));
  EXPECT(contains(a.out, "\"PolyAffine\""));

  // parse errors exit 2
  r = run("orient --graph " + g_dir + "/bad.g --forbidden " + g_dir + "/t3.forb");
  EXPECT(r.exit_code == 2);
  r = run("classify --forbidden " + g_dir + "/bad.g");
  EXPECT(r.exit_code == 2);

  // duplicate forbidden members are deduplicated with a warning
  write_file("dup.forb", "3:101\n3:010\n");
  r = run("classify --forbidden " + g_dir + "/dup.forb --problem completion");
  EXPECT(r.exit_code == 0);
  {
    std::ifstream err(g_dir + "/err.txt");
    std::ostringstream buf;
    buf << err.rdbuf();
    EXPECT(contains(buf.str(), "warning"));
  }

  if (failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cout << "test_cli: " << failures << " failures\n";
  return 1;
}
