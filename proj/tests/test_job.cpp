#include <doctest.h>

#include <random>

#include "eds/job.hpp"

using namespace eds;

namespace {

RationalFunction rf(const FieldSpec& f, std::vector<long long> c) {
  return RationalFunction(Polynomial::from_ints(f, c));
}

int error_column(const std::string& text) {
  try {
    parse_job(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -1;
}

}  // namespace

TEST_CASE("one key per line") {
  JobSpec j = parse_job("p=3\na4=t\na6=-t\nx=1\ny=1\n");
  const FieldSpec& f = FieldSpec::prime(3);
  CHECK(j.p == 3);
  CHECK(j.curve() == Curve(rf(f, {0}), rf(f, {0}), rf(f, {0}), rf(f, {0, 1}), rf(f, {0, -1})));
  CHECK(j.point() == FfPoint(rf(f, {1}), rf(f, {1})));
  CHECK(j.N == 12);
}

TEST_CASE("comma separated keys in any order") {
  JobSpec j = parse_job("a4 = t^3, a6 = t^4, x = 0, y = t^2, p = 3");
  const FieldSpec& f = FieldSpec::prime(3);
  CHECK(j.curve() == Curve(rf(f, {0}), rf(f, {0}), rf(f, {0}), rf(f, {0, 0, 0, 1}), rf(f, {0, 0, 0, 0, 1})));
  CHECK(j.point() == FfPoint(rf(f, {0}), rf(f, {0, 0, 1})));
}

TEST_CASE("expression grammar") {
  const FieldSpec& f = FieldSpec::prime(7);
  RationalFunction t = RationalFunction::variable(f);
  RationalFunction one = rf(f, {1});
  CHECK(parse_expression("2*t^2 - (t + 1)/t", f) == t * t * rf(f, {2}) - (t + one) / t);
  CHECK(parse_expression("-t^2", f) == -(t * t));
  CHECK(parse_expression("t^-2", f) == one / (t * t));
  CHECK(parse_expression("1 - 2 - 3", f) == rf(f, {-4}));
  CHECK(parse_expression("12 / 4 / 3", f) == rf(f, {1}));
  CHECK(parse_expression("(t + 1)^3", f) == (t + one) * (t + one) * (t + one));
  CHECK(parse_expression(" 8 ", f) == one);
  CHECK(parse_expression("1/(t^2 + t)", f) == one / (t * t + t));
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(error_column("p = 3\na4 = t +") == 8);
  CHECK(error_column("p = 3\na4 = t + * 2") == 10);
  CHECK(error_column("p = 3\na4 = (t + 1") == 6);
  CHECK(error_column("p = 3\na4 = (t + 1 2") == 13);
  CHECK(error_column("p = 3\na4 = t ^ t") == 10);
  CHECK(error_column("p = 3\na4 = 2t") == 7);
  CHECK(error_column("p = 3\na4 = 1/(t - t)") == 7);
  try {
    parse_job("p = 3\n\na4 = t +\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("dangling") != std::string::npos);
  }
}

TEST_CASE("semantic errors") {
  CHECK_THROWS_AS(parse_job("p = 3\nfoo = 1"), ParseError);
  CHECK_THROWS_AS(parse_job("p = 3\na4 = 1\na4 = 2"), ParseError);
  CHECK_THROWS_AS(parse_job("p = 9\na4 = 1"), ParseError);
  CHECK_THROWS_AS(parse_job("a4 = 1"), ParseError);
  CHECK_THROWS_AS(parse_job("p = 3\nx = 1"), ParseError);
  CHECK_THROWS_AS(parse_job("p = 3"), DomainError);  // y^2 = x^3 is singular
  CHECK_THROWS_AS(parse_job("p = 3\na4 = t\na6 = -t\nx = 1\ny = 0"), DomainError);
  CHECK_THROWS_AS(parse_job("p = 3\na4 = 1\nN = 0"), ParseError);
  CHECK_NOTHROW(parse_job("# comment\np = 3  # trailing\na4 = 1\n"));
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    const FieldSpec& f = FieldSpec::prime(p);
    auto rnd = [&] {
      std::vector<long long> n, d;
      for (int i = 0, k = static_cast<int>(rng() % 4); i <= k; ++i) n.push_back(static_cast<long long>(rng() % p));
      for (int i = 0, k = static_cast<int>(rng() % 3); i <= k; ++i) d.push_back(static_cast<long long>(rng() % p));
      d.back() = 1;
      return RationalFunction(Polynomial::from_ints(f, n), Polynomial::from_ints(f, d));
    };
    int done = 0;
    for (int it = 0; it < 200 && done < 30; ++it) {
      JobSpec j;
      j.p = p;
      for (auto& a : j.a) a = rnd();
      j.N = 1 + static_cast<int>(rng() % 40);
      try {
        (void)j.curve();
      } catch (const DomainError&) {
        continue;
      }
      ++done;
      JobSpec back = parse_job(render_job(j));
      CHECK(back == j);
      CHECK(render_job(back) == render_job(j));
    }
    CHECK(done == 30);
  }
  JobSpec j = parse_job("p=3\na4=t\na6=-t\nx=1\ny=1\nN=7");
  CHECK(parse_job(render_job(j)) == j);
}

TEST_CASE("commands and exit codes") {
  JobSpec j = parse_job("p=3\na4=t\na6=-t\nx=1\ny=1\nN=6");
  j.command = "table";
  CommandResult r = run_command(j);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("D_3 = t^2  [new: (t)]\n") != std::string::npos);
  CHECK(r.err.empty());
  CHECK(run_command(j).out == r.out);
  RunOptions serial;
  serial.schedule = Schedule::Serial;
  CHECK(run_command(j, serial).out == r.out);

  j.command = "zsigmondy";
  r = run_command(j);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=2 none\n") != std::string::npos);
  CHECK(r.out.find("largest n <= 6 without a primitive place: 2") != std::string::npos);

  j.command = "local";
  r = run_command(j);
  CHECK(r.out.find("(t): II ") != std::string::npos);
  CHECK(r.out.find("inf: III* ") != std::string::npos);

  j.command = "constant";
  CHECK(run_command(j).exit_code == 2);

  j.command = "frobnicate";
  CHECK(run_command(j).exit_code == 2);

  JobSpec c = parse_job("p=3\na4=1\nN=6");
  c.command = "constant";
  r = run_command(c);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=6: a=9, b=9") != std::string::npos);
  c.command = "table";
  CHECK(run_command(c).exit_code == 2);  // no point

  // a torsion point is an input error
  JobSpec tor = parse_job("p=7\na1=1-t\na2=-t\na3=-t\nx=0\ny=0\nN=8");
  tor.command = "table";
  r = run_command(tor);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("order 5") != std::string::npos);
}

TEST_CASE("local on the IV*/III example") {
  JobSpec j = parse_job("a4 = t^3, a6 = t^4, x = 0, y = t^2, p = 3");
  j.command = "local";
  CommandResult r = run_command(j);
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("(t): IV*", 0) == 0);
  CHECK(r.out.find("\ninf: III ") != std::string::npos);
}
