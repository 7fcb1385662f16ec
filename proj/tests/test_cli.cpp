#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

// Drives the installed binary end to end. Paths come from the build system.

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(RENNER_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string data(const std::string& name) {
  return std::string(RENNER_DATA_DIR) + "/" + name;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("group elements lists the whole of A2") {
  auto r = run("group elements --matrix " + data("a2.txt") + " --cap 3");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 6);
  CHECK(r.output.find("e\n") != std::string::npos);
  CHECK(r.output.find("0 1 0") != std::string::npos);
}

TEST_CASE("group longest reports non-finiteness as a verdict") {
  auto r = run("group longest --matrix " + data("affine_a1.txt") + " --cap 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("not finite at cap 10") != std::string::npos);
}

TEST_CASE("group info") {
  auto r = run("group info --matrix " + data("a3_context.txt") + " --cap 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rank: 3") != std::string::npos);
  CHECK(r.output.find("24 elements") != std::string::npos);
}

TEST_CASE("malformed matrix file gives a diagnostic and exit 2") {
  auto r = run("group info --matrix " + data("bad_asym.txt"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("symmetric") != std::string::npos);
  CHECK(r.output.find("line") != std::string::npos);
}

TEST_CASE("order queries") {
  std::string base = "--matrix " + data("a3_context.txt");
  auto top = run("order \"e|e|e\" \"e|e|e\" " + base + " --sign ++");
  CHECK(top.exit_code == 0);
  CHECK(top.output.find("true") != std::string::npos);
  CHECK(top.output.find("u = e") != std::string::npos);
  CHECK(top.output.find("v = e") != std::string::npos);

  auto pos = run("order \"e|e|e\" \"e|0|e\" " + base + " --sign ++");
  CHECK(pos.exit_code == 0);
  CHECK(pos.output.find("true") != std::string::npos);
  CHECK(pos.output.find("l++(x) = 0") != std::string::npos);
  CHECK(pos.output.find("l++(y) = 1") != std::string::npos);

  // incomparable pair: negative query, exit 1
  auto neg = run("order \"e|0|e\" \"e|e|e\" " + base + " --sign ++");
  CHECK(neg.exit_code == 1);
  CHECK(neg.output.find("false") != std::string::npos);

  // a fixed non-auto variant answers the same
  auto var = run("order \"e|e|e\" \"e|0|e\" " + base + " --sign ++ --variant iii");
  CHECK(var.exit_code == 0);
  CHECK(var.output.find("true") != std::string::npos);

  // with N = S, C = {}, the query reproduces a plain Bruhat comparison
  std::string degen = "--matrix " + data("a3.txt") + " --N \"0 1 2\" --C \"\"";
  auto bruhat = run("order \"e|0 1|e\" \"e|0 1 0|e\" " + degen + " --sign=--");
  CHECK(bruhat.exit_code == 0);
  CHECK(bruhat.output.find("true") != std::string::npos);
  auto bruhat_neg = run("order \"e|0 1|e\" \"e|1 0|e\" " + degen + " --sign ++");
  CHECK(bruhat_neg.exit_code == 1);
}

TEST_CASE("interval command") {
  std::string base = "--matrix " + data("a3_context.txt");
  auto single = run("interval \"e|0|e\" \"e|0|e\" " + base + " --sign ++");
  CHECK(single.exit_code == 0);
  CHECK(count_lines(single.output) == 1);

  auto txt = run("interval \"e|e|e\" \"e|0|e\" " + base + " --sign ++");
  CHECK(txt.exit_code == 0);
  CHECK(txt.output.find("e|e|e\t0") != std::string::npos);
  CHECK(txt.output.find("er2") != std::string::npos);

  auto dot = run("interval \"e|e|e\" \"e|0|e\" " + base + " --sign ++ --dot -");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph") != std::string::npos);
  CHECK(dot.output.find("->") != std::string::npos);

  auto chains = run("interval \"e|e|e\" \"1|0|1\" " + base + " --sign=-+ --chains");
  CHECK(chains.exit_code == 0);
  CHECK(chains.output.find("maximal chains:") != std::string::npos);
  CHECK(chains.output.find("common length 3") != std::string::npos);

  auto nc = run("interval \"e|0|e\" \"e|e|e\" " + base + " --sign ++");
  CHECK(nc.exit_code == 1);

  // identical output for different job counts
  auto j1 = run("interval \"e|e|e\" \"1|0|1\" " + base + " --sign=-+ --jobs 1");
  auto j4 = run("interval \"e|e|e\" \"1|0|1\" " + base + " --sign=-+ --jobs 4");
  CHECK(j1.exit_code == 0);
  CHECK(j1.output == j4.output);
}

TEST_CASE("element inspector") {
  auto elt = run("element \"1 0 1\" --matrix " + data("a2.txt"));
  CHECK(elt.exit_code == 0);
  CHECK(elt.output.find("canonical: 0 1 0") != std::string::npos);
  CHECK(elt.output.find("length: 3") != std::string::npos);

  auto orb = run("element \"raw 0 ; e\" --matrix " + data("a3_context.txt"));
  CHECK(orb.exit_code == 0);
  CHECK(orb.output.find("normal form III: e|0|e") != std::string::npos);
  CHECK(orb.output.find("l++: 1") != std::string::npos);
  CHECK(orb.output.find("l+-: 1") != std::string::npos);
  CHECK(orb.output.find("involution: e|0|e") != std::string::npos);
}

TEST_CASE("transport command") {
  auto r = run("transport \"0\" \"0 1 0\" \"1\" --matrix " + data("a2.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("w- = ") != std::string::npos);
  CHECK(r.output.find("w+ = ") != std::string::npos);
  CHECK(r.output.find("postconditions: verified") != std::string::npos);

  // precondition a <= b violated: usage-grade failure
  auto bad = run("transport \"0 1 0\" \"0\" \"1\" --matrix " + data("a2.txt"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify command") {
  auto ok = run("verify all --matrix " + data("a3_context.txt") + " --cap 5");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[PASS]") != std::string::npos);
  CHECK(ok.output.find("[FAIL]") == std::string::npos);

  auto w0 = run("verify w0 --matrix " + data("affine_a1_context.txt") + " --cap 3");
  CHECK(w0.exit_code == 0);
  CHECK(w0.output.find("[SKIP]") != std::string::npos);
  CHECK(w0.output.find("not") != std::string::npos);

  auto unknown = run("verify nonsense --matrix " + data("a2.txt"));
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("order \"e|e|e\" \"e|e|e\"").exit_code == 2);  // no --matrix
}
