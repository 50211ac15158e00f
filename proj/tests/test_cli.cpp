#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("tail command") {
    RunResult r = run("tail --alt --s 1 --n 1 --prec 64 --digits 20");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0.69314718055994530941"));
    CHECK(contains(r.out, "truncated toward zero"));
    RunResult z2 = run("tail --riemann --s 2 --n 1 --prec 64 --digits 12");
    CHECK(z2.exit_code == 0);
    CHECK(contains(z2.out, "1.644934066848"));
}

TEST_CASE("usage errors exit 3") {
    CHECK(run("tail --alt --s 0 --n 1").exit_code == 3);
    CHECK(run("tail --s 1 --n 1").exit_code == 3);              // missing kind
    CHECK(run("tail --alt --riemann --s 1 --n 1").exit_code == 3);
    CHECK(run("tail --alt").exit_code == 3);                    // missing --s
    CHECK(run("floor --riemann --s 1/2 --n 1").exit_code == 3);
    CHECK(run("nonsense").exit_code == 3);
    CHECK(run("verify lemma --id s9-even").exit_code == 3);
    CHECK(run("verify theorem --id thm1 --n 5..2").exit_code == 3);
}

TEST_CASE("floor command") {
    RunResult r = run("floor --alt --s 1 --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "floor -4"));
    RunResult frac = run("floor --alt --s 1/2 --n 1");
    CHECK(frac.exit_code == 0);
    CHECK(contains(frac.out, "floor 1"));
    RunResult z3 = run("floor --riemann --s 3 --n 2");
    CHECK(z3.exit_code == 0);
    CHECK(contains(z3.out, "floor 4"));
}

TEST_CASE("verify lemma") {
    RunResult r = run("verify lemma --id s4-odd");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "threshold 6"));
    CHECK(contains(r.out, "certified"));
    RunResult all = run("verify lemma --id all");
    CHECK(all.exit_code == 0);
}

TEST_CASE("verify theorem and formula") {
    RunResult r = run("verify theorem --id thm2 --n 1..40 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n,parity,in_range,formula_value,oracle_value,match,bits_used"));
    CHECK(contains(r.out, "2,even,true,-6,-6,true,64"));
    RunResult j = run("verify formula --id kuha_fib --n 2..10 --format json");
    CHECK(j.exit_code == 0);
    CHECK(contains(j.out, "\"formula_value\": \"1\""));
    // below-threshold rows are reported but only in-range rows decide the exit
    RunResult t4 = run("verify theorem --id thm4 --n 1..20 --format csv");
    CHECK(t4.exit_code == 0);
    CHECK(contains(t4.out, "false"));
}

TEST_CASE("prove command") {
    RunResult ok = run("prove --poly \"-5,8,16\" --from 1");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "positive for all integers k >= 1"));
    RunResult cert = run("prove --poly \"22,99,-27,-922,-972,96\" --from 11");
    CHECK(cert.exit_code == 0);
    CHECK(contains(cert.out, "witness_shift"));
    CHECK(run("prove --poly \"22,99,-27,-922,-972,96\" --from 10").exit_code == 1);
    CHECK(run("prove --poly \"0,-1\" --from 1").exit_code == 1);
}

TEST_CASE("threshold command") {
    RunResult r = run("threshold --formula thm4 --parity even --cap 100");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "threshold 10"));
}

TEST_CASE("identical invocations are byte identical") {
    RunResult a = run("verify theorem --id thm3 --n 1..40 --format json");
    RunResult b = run("verify theorem --id thm3 --n 1..40 --format json");
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    RunResult c = run("tail --alt --s 2/3 --n 5 --prec 96");
    RunResult d = run("tail --alt --s 2/3 --n 5 --prec 96");
    CHECK(c.out == d.out);
}

TEST_CASE("precision cap environment variable") {
    RunResult r = run("floor --alt --s 1 --n 3");
    CHECK(r.exit_code == 0);
    std::string saved = g_cli;
    g_cli = "ZT_MAX_PREC=32 " + g_cli;
    RunResult capped = run("floor --alt --s 1 --n 3");
    g_cli = saved;
    CHECK(capped.exit_code == 0);  // 64-bit start already resolves it
}

int main_impl(int argc, char** argv) {
    doctest::Context ctx;
    int left = argc;
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_cli = argv[argc - 1];
        left = argc - 1;
    } else if (const char* env = std::getenv("ZTK_CLI")) {
        g_cli = env;
    }
    ctx.applyCommandLine(left, argv);
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli>\n");
        return 1;
    }
    return ctx.run();
}

int main(int argc, char** argv) { return main_impl(argc, argv); }
